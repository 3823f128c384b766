#include "pact/congruence.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pact {

namespace {

const FiniteGroup& finite_table(const PartialAction& a) {
  if (a.group().kind() != Group::Kind::finite)
    throw std::logic_error("congruence machinery needs a finite group table");
  return a.group().table();
}

// Union-find with least-member canonical labels on extraction.
struct Merger {
  std::vector<int> parent;
  explicit Merger(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;  // keep the least member as the root
  }
  std::vector<int> labels() {
    std::vector<int> out(parent.size());
    for (int i = 0; i < static_cast<int>(parent.size()); ++i) out[i] = find(i);
    return out;
  }
};

std::vector<int> canonical_blocks(std::vector<int> block_of) {
  // Relabel so every block carries its least member.
  for (int i = 0; i < static_cast<int>(block_of.size()); ++i) {
    int r = i;
    while (block_of[r] != r) r = block_of[r];
    block_of[i] = std::min(block_of[i], r);
  }
  return block_of;
}

}  // namespace

Congruence make_congruence(const PartialAction& a,
                           const std::vector<std::pair<int, int>>& pairs,
                           const std::vector<int>& kernel_gens) {
  const FiniteGroup& T = finite_table(a);
  const int n = a.carrier_size();
  Merger m(n);
  for (auto [x, y] : pairs) {
    if (x < 0 || x >= n || y < 0 || y >= n)
      throw std::invalid_argument("congruence: relation pair out of carrier range");
    m.unite(x, y);
  }
  for (int g : kernel_gens)
    if (g < 0 || g >= T.size())
      throw std::invalid_argument("congruence: kernel generator out of group range");
  return Congruence{m.labels(), T.normal_closure(kernel_gens)};
}

std::vector<std::string> validate_congruence(const PartialAction& a,
                                             const Congruence& c) {
  std::vector<std::string> out;
  const FiniteGroup& T = finite_table(a);
  const int n = a.carrier_size();
  if (static_cast<int>(c.block_of.size()) != n) {
    out.push_back("relation: one block label per carrier point required");
    return out;
  }
  for (int i = 0; i < n; ++i) {
    int b = c.block_of[i];
    if (b < 0 || b >= n || b > i || c.block_of[b] != b) {
      out.push_back("relation: block labels must be least members");
      break;
    }
  }
  if (!std::is_sorted(c.kernel.begin(), c.kernel.end()) ||
      std::adjacent_find(c.kernel.begin(), c.kernel.end()) != c.kernel.end())
    out.push_back("kernel: element list must be strictly sorted");
  else if (!T.is_subgroup(c.kernel))
    out.push_back("kernel: not a subgroup");
  else if (!T.is_normal(c.kernel))
    out.push_back("kernel: not normal");
  return out;
}

bool congruence_equal(const Congruence& a, const Congruence& b) {
  return a.block_of == b.block_of && a.kernel == b.kernel;
}

bool congruence_leq(const Congruence& a, const Congruence& b) {
  if (a.block_of.size() != b.block_of.size()) return false;
  for (std::size_t i = 0; i < a.block_of.size(); ++i)
    if (b.block_of[a.block_of[i]] != b.block_of[i]) return false;
  return std::includes(b.kernel.begin(), b.kernel.end(), a.kernel.begin(),
                       a.kernel.end());
}

Congruence congruence_meet(const PartialAction& act, const Congruence& a,
                           const Congruence& b) {
  finite_table(act);
  const int n = act.carrier_size();
  std::map<std::pair<int, int>, int> least;
  std::vector<int> block_of(n);
  for (int i = 0; i < n; ++i) {
    auto key = std::make_pair(a.block_of[i], b.block_of[i]);
    auto [it, fresh] = least.emplace(key, i);
    block_of[i] = it->second;
    (void)fresh;
  }
  std::vector<int> kernel;
  std::set_intersection(a.kernel.begin(), a.kernel.end(), b.kernel.begin(),
                        b.kernel.end(), std::back_inserter(kernel));
  return Congruence{std::move(block_of), std::move(kernel)};
}

Congruence induced_congruence(const PAMorphism& f, const PartialAction& from) {
  const FiniteGroup& T = finite_table(from);
  const int n = from.carrier_size();
  if (static_cast<int>(f.map0.size()) != n)
    throw std::invalid_argument("induced congruence: carrier map size mismatch");
  std::map<int, int> least_with_image;
  std::vector<int> block_of(n);
  for (int i = 0; i < n; ++i) {
    auto [it, fresh] = least_with_image.emplace(f.map0[i], i);
    block_of[i] = it->second;
    (void)fresh;
  }
  std::vector<int> kernel;
  for (const Elem& k : f.hom.kernel()) kernel.push_back(std::get<int>(k));
  std::sort(kernel.begin(), kernel.end());
  (void)T;
  return Congruence{std::move(block_of), std::move(kernel)};
}

int CosetRelationTable::block_pos(int least_member_label) const {
  auto it = std::lower_bound(blocks.begin(), blocks.end(), least_member_label);
  if (it == blocks.end() || *it != least_member_label)
    throw std::invalid_argument("relation table: unknown block label");
  return static_cast<int>(it - blocks.begin());
}

CosetRelationTable build_coset_relations(const PartialAction& a, const Congruence& c) {
  const FiniteGroup& T = finite_table(a);
  CosetRelationTable t;
  t.coset_group = T.quotient(c.kernel, &t.coset_of);
  for (int i = 0; i < a.carrier_size(); ++i)
    if (c.block_of[i] == i) t.blocks.push_back(i);
  const int cosets = t.coset_group.size();
  t.rel.assign(cosets, {});

  // Single steps, plus the do-nothing chain at every block.
  for (int b = 0; b < static_cast<int>(t.blocks.size()); ++b)
    t.rel[t.coset_group.identity()].insert({b, b});
  for (const auto& [g, table] : a.partial_maps()) {
    int coset = t.coset_of[std::get<int>(g)];
    for (auto [x, y] : table)
      t.rel[coset].insert({t.block_pos(c.block_of[x]), t.block_pos(c.block_of[y])});
  }

  // Close under concatenation (signatures multiply, later step on the left)
  // and reversal (signature inverts).
  // Node-based sets keep iterators valid across inserts; pairs added behind
  // the cursor are picked up by the next sweep.
  bool grew = true;
  while (grew) {
    grew = false;
    for (int u = 0; u < cosets; ++u) {
      int ui = t.coset_group.invert(u);
      for (auto [x, y] : t.rel[u]) {
        if (t.rel[ui].insert({y, x}).second) grew = true;
        for (int v = 0; v < cosets; ++v) {
          int vu = t.coset_group.multiply(v, u);
          for (auto [y2, z] : t.rel[v]) {
            if (y2 != y) continue;
            if (t.rel[vu].insert({x, z}).second) grew = true;
          }
        }
      }
    }
  }
  return t;
}

bool pc_check(const PartialAction& a, const Congruence& c, std::string* why) {
  CosetRelationTable t = build_coset_relations(a, c);
  for (int u = 0; u < t.coset_group.size(); ++u) {
    std::map<int, int> fwd, bwd;
    for (auto [x, y] : t.rel[u]) {
      auto [fit, f_new] = fwd.emplace(x, y);
      if (!f_new && fit->second != y) {
        if (why)
          *why = "chains with signature " + t.coset_group.name(u) +
                 " lead from block " + a.carrier()[t.blocks[x]] +
                 " to two different blocks";
        return false;
      }
      auto [bit, b_new] = bwd.emplace(y, x);
      if (!b_new && bit->second != x) {
        if (why)
          *why = "chains with signature " + t.coset_group.name(u) +
                 " reach block " + a.carrier()[t.blocks[y]] +
                 " from two different blocks";
        return false;
      }
    }
  }
  return true;
}

QuotientResult quotient_paction(const PartialAction& a, const Congruence& c) {
  std::string why;
  CosetRelationTable t = build_coset_relations(a, c);
  if (!pc_check(a, c, &why))
    throw std::invalid_argument("quotient: congruence is not compatible: " + why);

  std::vector<std::string> carrier;
  for (int b : t.blocks) carrier.push_back(a.carrier()[b]);
  std::map<Elem, std::map<int, int>> maps;
  for (int u = 0; u < t.coset_group.size(); ++u) {
    if (u == t.coset_group.identity()) continue;
    std::map<int, int> table;
    for (auto [x, y] : t.rel[u]) table[x] = y;
    if (!table.empty()) maps[Elem{u}] = std::move(table);
  }
  PartialAction quot(Group::finite(t.coset_group), std::move(carrier), std::move(maps));

  std::vector<Elem> images;
  for (int g = 0; g < finite_table(a).size(); ++g) images.push_back(Elem{t.coset_of[g]});
  PAMorphism proj{std::vector<int>(a.carrier_size()),
                  GroupHom::finite(a.group(), quot.group(), std::move(images))};
  for (int i = 0; i < a.carrier_size(); ++i)
    proj.map0[i] = t.block_pos(c.block_of[i]);
  return QuotientResult{std::move(quot), std::move(proj)};
}

Congruence congruence_closure(const PartialAction& a,
                              const std::vector<std::pair<int, int>>& pairs,
                              const std::vector<int>& kernel_gens) {
  // The kernel never needs to grow: relation tables built with a coarser
  // kernel only gain pairs, so merges forced here are forced there too.
  Congruence cur = make_congruence(a, pairs, kernel_gens);
  for (;;) {
    CosetRelationTable t = build_coset_relations(a, cur);
    Merger m(a.carrier_size());
    for (int i = 0; i < a.carrier_size(); ++i) m.unite(i, cur.block_of[i]);
    bool merged = false;
    for (const auto& rel : t.rel) {
      std::map<int, int> fwd, bwd;
      for (auto [x, y] : rel) {
        auto [fit, f_new] = fwd.emplace(x, y);
        if (!f_new && fit->second != y) {
          m.unite(t.blocks[fit->second], t.blocks[y]);
          merged = true;
        }
        auto [bit, b_new] = bwd.emplace(y, x);
        if (!b_new && bit->second != x) {
          m.unite(t.blocks[bit->second], t.blocks[x]);
          merged = true;
        }
      }
    }
    if (!merged) return cur;
    cur.block_of = canonical_blocks(m.labels());
  }
}

std::optional<PAMorphism> factor_through(const PAMorphism& f, const PartialAction& from,
                                         const QuotientResult& q, const PartialAction& to,
                                         std::vector<std::string>* why) {
  auto fail = [&](const std::string& reason) {
    if (why) why->push_back(reason);
    return std::nullopt;
  };
  const int n = from.carrier_size();
  if (static_cast<int>(f.map0.size()) != n ||
      static_cast<int>(q.projection.map0.size()) != n)
    return fail("shape: carrier map sizes disagree");

  // f must be constant on blocks and kill the kernel.
  std::map<int, int> through;
  for (int i = 0; i < n; ++i) {
    auto [it, fresh] = through.emplace(q.projection.map0[i], f.map0[i]);
    if (!fresh && it->second != f.map0[i])
      return fail("blocks: map separates points the congruence identifies");
  }
  const Group& Q = q.action.group();
  auto coset_elems = Q.enumerate();
  if (!coset_elems) return fail("group: quotient group is not enumerable");
  std::vector<Elem> hom_images(coset_elems->size());
  std::vector<bool> set(coset_elems->size(), false);
  auto dom_elems = from.group().enumerate();
  if (!dom_elems) return fail("group: source group is not enumerable");
  for (const Elem& g : *dom_elems) {
    int coset = std::get<int>(q.projection.hom.apply(g));
    Elem img = f.hom.apply(g);
    if (!set[coset]) {
      hom_images[coset] = img;
      set[coset] = true;
    } else if (!(hom_images[coset] == img)) {
      return fail("kernel: group map separates elements the kernel identifies");
    }
  }
  PAMorphism bar{std::vector<int>(q.action.carrier_size()),
                 GroupHom::finite(Q, to.group(), std::move(hom_images))};
  for (auto [block, image] : through) bar.map0[block] = image;
  return bar;
}

}  // namespace pact
