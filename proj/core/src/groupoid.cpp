#include "pact/groupoid.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pact {

Groupoid::Groupoid(std::vector<std::string> object_names,
                   std::vector<std::string> morphism_names, std::vector<int> src,
                   std::vector<int> tgt, std::vector<int> identity_at,
                   std::vector<int> inverse,
                   std::map<std::pair<int, int>, int> compose)
    : objects_(std::move(object_names)),
      morphisms_(std::move(morphism_names)),
      src_(std::move(src)),
      tgt_(std::move(tgt)),
      identity_at_(std::move(identity_at)),
      inverse_(std::move(inverse)),
      compose_(std::move(compose)) {
  if (src_.size() != morphisms_.size() || tgt_.size() != morphisms_.size() ||
      inverse_.size() != morphisms_.size() || identity_at_.size() != objects_.size())
    throw std::invalid_argument("groupoid: table shape mismatch");
}

std::optional<int> Groupoid::object_index(const std::string& name) const {
  for (int i = 0; i < num_objects(); ++i)
    if (objects_[i] == name) return i;
  return std::nullopt;
}

std::optional<int> Groupoid::morphism_index(const std::string& name) const {
  for (int i = 0; i < num_morphisms(); ++i)
    if (morphisms_[i] == name) return i;
  return std::nullopt;
}

std::optional<int> Groupoid::compose(int left, int right) const {
  auto it = compose_.find({left, right});
  if (it == compose_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> Groupoid::morphisms_from_to(int x, int y) const {
  std::vector<int> out;
  for (int m = 0; m < num_morphisms(); ++m)
    if (src_[m] == x && tgt_[m] == y) out.push_back(m);
  return out;
}

std::vector<std::string> Groupoid::validate() const {
  std::vector<std::string> bad;
  const int nm = num_morphisms();
  for (int m = 0; m < nm; ++m)
    if (src_[m] < 0 || src_[m] >= num_objects() || tgt_[m] < 0 || tgt_[m] >= num_objects()) {
      bad.push_back("shape: morphism " + morphisms_[m] + " has out-of-range endpoints");
      return bad;
    }
  for (const auto& [pair, r] : compose_)
    if (pair.first < 0 || pair.first >= nm || pair.second < 0 || pair.second >= nm ||
        r < 0 || r >= nm) {
      bad.push_back("shape: compose table has out-of-range entries");
      return bad;
    }

  // Exactness: defined on exactly the composable pairs, with matching
  // endpoints of the result.
  for (int l = 0; l < nm && bad.size() < 8; ++l)
    for (int r = 0; r < nm; ++r) {
      auto it = compose_.find({l, r});
      bool composable = src_[l] == tgt_[r];
      if (composable && it == compose_.end()) {
        bad.push_back("compose: missing " + morphisms_[l] + " o " + morphisms_[r]);
      } else if (!composable && it != compose_.end()) {
        bad.push_back("compose: defined on non-composable pair " + morphisms_[l] + " o " +
                      morphisms_[r]);
      } else if (composable && it != compose_.end() &&
                 (src_[it->second] != src_[r] || tgt_[it->second] != tgt_[l])) {
        bad.push_back("compose: endpoints of " + morphisms_[l] + " o " + morphisms_[r] +
                      " do not match the composite");
      }
    }
  if (!bad.empty()) return bad;

  for (int x = 0; x < num_objects(); ++x) {
    int e = identity_at_[x];
    if (e < 0 || e >= nm || src_[e] != x || tgt_[e] != x) {
      bad.push_back("identity: object " + objects_[x] + " has no identity loop");
      continue;
    }
  }
  if (!bad.empty()) return bad;
  for (int m = 0; m < nm; ++m) {
    if (compose(m, identity_at_[src_[m]]) != std::optional<int>(m) ||
        compose(identity_at_[tgt_[m]], m) != std::optional<int>(m)) {
      bad.push_back("identity: " + morphisms_[m] + " is moved by an identity");
      break;
    }
  }
  for (int m = 0; m < nm; ++m) {
    int v = inverse_[m];
    if (v < 0 || v >= nm || src_[v] != tgt_[m] || tgt_[v] != src_[m] ||
        compose(m, v) != std::optional<int>(identity_at_[tgt_[m]]) ||
        compose(v, m) != std::optional<int>(identity_at_[src_[m]])) {
      bad.push_back("inverse: " + morphisms_[m] + " has no valid inverse entry");
      break;
    }
  }
  for (int a = 0; a < nm; ++a)
    for (int b = 0; b < nm; ++b) {
      if (src_[a] != tgt_[b]) continue;
      int ab = *compose(a, b);
      for (int c = 0; c < nm; ++c) {
        if (src_[b] != tgt_[c]) continue;
        if (*compose(ab, c) != *compose(a, *compose(b, c))) {
          bad.push_back("associativity: (" + morphisms_[a] + " o " + morphisms_[b] +
                        ") o " + morphisms_[c] + " differs");
          return bad;
        }
      }
    }
  return bad;
}

std::vector<std::vector<int>> Groupoid::connected_components() const {
  std::vector<int> parent(num_objects());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int m = 0; m < num_morphisms(); ++m) {
    int a = find(src_[m]), b = find(tgt_[m]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<int, std::vector<int>> blocks;
  for (int x = 0; x < num_objects(); ++x) blocks[find(x)].push_back(x);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : blocks) out.push_back(std::move(members));
  return out;
}

Groupoid Groupoid::restrict_to_objects(const std::vector<int>& objs,
                                       std::vector<int>* old_object_of,
                                       std::vector<int>* old_morphism_of) const {
  std::vector<int> obj_new(num_objects(), -1);
  std::vector<std::string> onames;
  for (int x : objs) {
    obj_new[x] = static_cast<int>(onames.size());
    onames.push_back(objects_[x]);
  }
  std::vector<int> mor_new(num_morphisms(), -1), old_m;
  std::vector<std::string> mnames;
  std::vector<int> src, tgt, inv;
  for (int m = 0; m < num_morphisms(); ++m) {
    if (obj_new[src_[m]] < 0 || obj_new[tgt_[m]] < 0) continue;
    mor_new[m] = static_cast<int>(mnames.size());
    mnames.push_back(morphisms_[m]);
    src.push_back(obj_new[src_[m]]);
    tgt.push_back(obj_new[tgt_[m]]);
    old_m.push_back(m);
  }
  inv.resize(mnames.size());
  std::vector<int> ident(onames.size());
  for (size_t i = 0; i < old_m.size(); ++i) inv[i] = mor_new[inverse_[old_m[i]]];
  for (size_t i = 0; i < objs.size(); ++i) ident[i] = mor_new[identity_at_[objs[i]]];
  std::map<std::pair<int, int>, int> comp;
  for (const auto& [pair, r] : compose_) {
    if (mor_new[pair.first] < 0 || mor_new[pair.second] < 0) continue;
    comp[{mor_new[pair.first], mor_new[pair.second]}] = mor_new[r];
  }
  if (old_object_of) *old_object_of = objs;
  if (old_morphism_of) *old_morphism_of = old_m;
  return Groupoid(std::move(onames), std::move(mnames), std::move(src), std::move(tgt),
                  std::move(ident), std::move(inv), std::move(comp));
}

FiniteGroup Groupoid::isotropy(int obj, std::vector<int>* loop_of) const {
  std::vector<int> loops = morphisms_from_to(obj, obj);
  std::vector<int> pos(num_morphisms(), -1);
  for (size_t i = 0; i < loops.size(); ++i) pos[loops[i]] = static_cast<int>(i);
  const int n = static_cast<int>(loops.size());
  std::vector<std::string> names(n);
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) {
    names[i] = morphisms_[loops[i]];
    inv[i] = pos[inverse_[loops[i]]];
    for (int j = 0; j < n; ++j) mul[i][j] = pos[*compose(loops[i], loops[j])];
  }
  if (loop_of) *loop_of = loops;
  return FiniteGroup(std::move(names), std::move(mul), pos[identity_at_[obj]],
                     std::move(inv));
}

std::vector<std::string> validate_groupoid_morphism(const GroupoidMorphism& f,
                                                    const Groupoid& from,
                                                    const Groupoid& to) {
  std::vector<std::string> bad;
  if (static_cast<int>(f.object_map.size()) != from.num_objects() ||
      static_cast<int>(f.morphism_map.size()) != from.num_morphisms()) {
    bad.push_back("shape: component sizes do not match the source groupoid");
    return bad;
  }
  for (int x : f.object_map)
    if (x < 0 || x >= to.num_objects()) {
      bad.push_back("shape: object image out of range");
      return bad;
    }
  for (int m : f.morphism_map)
    if (m < 0 || m >= to.num_morphisms()) {
      bad.push_back("shape: morphism image out of range");
      return bad;
    }
  for (int m = 0; m < from.num_morphisms() && bad.size() < 8; ++m) {
    int fm = f.morphism_map[m];
    if (to.src(fm) != f.object_map[from.src(m)] || to.tgt(fm) != f.object_map[from.tgt(m)])
      bad.push_back("endpoints: image of " + from.morphism_name(m) +
                    " has mismatched src/tgt");
  }
  if (!bad.empty()) return bad;
  for (int x = 0; x < from.num_objects(); ++x)
    if (f.morphism_map[from.identity_at(x)] != to.identity_at(f.object_map[x])) {
      bad.push_back("identity: image of 1_" + from.object_name(x) + " is not an identity");
      break;
    }
  for (const auto& [pair, r] : from.compose_table()) {
    auto img = to.compose(f.morphism_map[pair.first], f.morphism_map[pair.second]);
    if (!img || *img != f.morphism_map[r]) {
      bad.push_back("composition: image of " + from.morphism_name(pair.first) + " o " +
                    from.morphism_name(pair.second) + " differs");
      break;
    }
  }
  return bad;
}

bool groupoid_iso_check(const GroupoidMorphism& f, const Groupoid& from,
                        const Groupoid& to, std::vector<std::string>* why) {
  auto bad = validate_groupoid_morphism(f, from, to);
  if (!bad.empty()) {
    if (why) *why = bad;
    return false;
  }
  auto bijective = [](const std::vector<int>& v, int n) {
    if (static_cast<int>(v.size()) != n) return false;
    std::vector<char> hit(n, 0);
    for (int x : v) {
      if (hit[x]) return false;
      hit[x] = 1;
    }
    return true;
  };
  if (!bijective(f.object_map, to.num_objects())) {
    if (why) why->push_back("object component is not a bijection");
    return false;
  }
  if (!bijective(f.morphism_map, to.num_morphisms())) {
    if (why) why->push_back("morphism component is not a bijection");
    return false;
  }
  return true;
}

GroupoidMorphism compose_groupoid_morphisms(const GroupoidMorphism& outer,
                                            const GroupoidMorphism& inner) {
  GroupoidMorphism out;
  out.object_map.reserve(inner.object_map.size());
  for (int x : inner.object_map) out.object_map.push_back(outer.object_map[x]);
  out.morphism_map.reserve(inner.morphism_map.size());
  for (int m : inner.morphism_map) out.morphism_map.push_back(outer.morphism_map[m]);
  return out;
}

GlobalRealization realize_connected(const Groupoid& g) {
  if (g.connected_components().size() != 1)
    throw std::invalid_argument("realize_connected: groupoid is not connected");

  // Basepoint: object with the least name in sorted order.
  std::vector<int> order(g.num_objects());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return g.object_name(a) < g.object_name(b);
  });
  const int base = order[0];
  const int n = g.num_objects();

  std::vector<int> loop_of;
  FiniteGroup h = g.isotropy(base, &loop_of);

  // Star trivialization: tau[y]: base -> y; identity at the basepoint, else
  // the least morphism index.
  std::vector<int> tau(n, -1);
  tau[base] = g.identity_at(base);
  for (int y = 0; y < n; ++y) {
    if (y == base) continue;
    auto star = g.morphisms_from_to(base, y);
    if (star.empty()) throw std::invalid_argument("realize_connected: disconnected star");
    tau[y] = *std::min_element(star.begin(), star.end());
  }

  // Object slot: position in sorted order, so the basepoint gets slot 0 and
  // C_n translates slots.
  std::vector<int> slot(n);
  for (int i = 0; i < n; ++i) slot[order[i]] = i;

  FiniteGroup group = FiniteGroup::direct_product(h, FiniteGroup::cyclic(n));
  auto part = [&](int e) { return std::pair<int, int>(e / n, e % n); };

  std::vector<std::vector<int>> act(group.size(), std::vector<int>(n));
  for (int e = 0; e < group.size(); ++e) {
    auto [hi, k] = part(e);
    for (int x = 0; x < n; ++x) act[e][x] = order[(slot[x] + k) % n];
  }

  // Action groupoid on the same objects: morphisms (g.x, g, x).
  std::vector<std::string> mnames;
  std::vector<int> src, tgt, inv, ident(n, -1);
  std::vector<int> raw_g, raw_x;
  auto triple_index = [&](int e, int x) { return e * n + x; };
  for (int e = 0; e < group.size(); ++e)
    for (int x = 0; x < n; ++x) {
      mnames.push_back("(" + g.object_name(act[e][x]) + "|" + group.name(e) + "|" +
                       g.object_name(x) + ")");
      src.push_back(x);
      tgt.push_back(act[e][x]);
      raw_g.push_back(e);
      raw_x.push_back(x);
    }
  inv.resize(mnames.size());
  std::map<std::pair<int, int>, int> comp;
  for (size_t m = 0; m < mnames.size(); ++m) {
    inv[m] = triple_index(group.invert(raw_g[m]), tgt[m]);
    if (raw_g[m] == group.identity()) ident[raw_x[m]] = static_cast<int>(m);
  }
  for (size_t a = 0; a < mnames.size(); ++a)
    for (size_t b = 0; b < mnames.size(); ++b)
      if (src[a] == tgt[b])
        comp[{static_cast<int>(a), static_cast<int>(b)}] =
            triple_index(group.multiply(raw_g[a], raw_g[b]), raw_x[b]);
  Groupoid action_gpd(g.object_names(), std::move(mnames), std::move(src), std::move(tgt),
                      std::move(ident), std::move(inv), std::move(comp));

  // Witness: (y, (h, k), x) maps to tau_y o h o tau_x^{-1}.
  GroupoidMorphism witness;
  witness.object_map.resize(n);
  std::iota(witness.object_map.begin(), witness.object_map.end(), 0);
  witness.morphism_map.resize(action_gpd.num_morphisms());
  for (int m = 0; m < action_gpd.num_morphisms(); ++m) {
    auto [hi, k] = part(raw_g[m]);
    int x = raw_x[m], y = act[raw_g[m]][x];
    int via = *g.compose(loop_of[hi], g.inverse(tau[x]));
    witness.morphism_map[m] = *g.compose(tau[y], via);
  }
  std::vector<std::string> why;
  if (!groupoid_iso_check(witness, action_gpd, g, &why))
    throw std::logic_error("realize_connected: witness is not an isomorphism: " +
                           (why.empty() ? std::string("?") : why.front()));
  return GlobalRealization{std::move(group), std::move(act), std::move(action_gpd),
                           std::move(witness)};
}

Groupoid disjoint_union(const std::vector<Groupoid>& parts,
                        std::vector<std::pair<int, int>>* object_origin,
                        std::vector<std::pair<int, int>>* morphism_origin) {
  const bool prefix = parts.size() > 1;
  std::vector<std::string> onames, mnames;
  std::vector<int> src, tgt, ident, inv;
  std::map<std::pair<int, int>, int> comp;
  if (object_origin) object_origin->clear();
  if (morphism_origin) morphism_origin->clear();
  int obase = 0, mbase = 0;
  for (size_t i = 0; i < parts.size(); ++i) {
    const Groupoid& p = parts[i];
    std::string pre = prefix ? std::to_string(i) + ":" : "";
    for (int x = 0; x < p.num_objects(); ++x) {
      onames.push_back(pre + p.object_name(x));
      if (object_origin) object_origin->push_back({static_cast<int>(i), x});
    }
    for (int m = 0; m < p.num_morphisms(); ++m) {
      mnames.push_back(pre + p.morphism_name(m));
      src.push_back(obase + p.src(m));
      tgt.push_back(obase + p.tgt(m));
      inv.push_back(mbase + p.inverse(m));
      if (morphism_origin) morphism_origin->push_back({static_cast<int>(i), m});
    }
    for (int x = 0; x < p.num_objects(); ++x) ident.push_back(mbase + p.identity_at(x));
    for (const auto& [pair, r] : p.compose_table())
      comp[{mbase + pair.first, mbase + pair.second}] = mbase + r;
    obase += p.num_objects();
    mbase += p.num_morphisms();
  }
  return Groupoid(std::move(onames), std::move(mnames), std::move(src), std::move(tgt),
                  std::move(ident), std::move(inv), std::move(comp));
}

Groupoid trivialized_groupoid(const std::vector<std::string>& object_names,
                              const FiniteGroup& h) {
  const int n = static_cast<int>(object_names.size());
  const int hs = h.size();
  auto idx = [&](int y, int e, int x) { return (y * hs + e) * n + x; };
  std::vector<std::string> mnames;
  std::vector<int> src, tgt, inv, ident(n);
  for (int y = 0; y < n; ++y)
    for (int e = 0; e < hs; ++e)
      for (int x = 0; x < n; ++x) {
        mnames.push_back("(" + object_names[y] + "|" + h.name(e) + "|" + object_names[x] +
                         ")");
        src.push_back(x);
        tgt.push_back(y);
        inv.push_back(idx(x, h.invert(e), y));
        if (x == y && e == h.identity()) ident[x] = idx(y, e, x);
      }
  std::map<std::pair<int, int>, int> comp;
  for (size_t a = 0; a < mnames.size(); ++a)
    for (size_t b = 0; b < mnames.size(); ++b) {
      if (src[a] != tgt[b]) continue;
      int ea = (static_cast<int>(a) / n) % hs, eb = (static_cast<int>(b) / n) % hs;
      comp[{static_cast<int>(a), static_cast<int>(b)}] =
          idx(tgt[a], h.multiply(ea, eb), src[b]);
    }
  return Groupoid(object_names, std::move(mnames), std::move(src), std::move(tgt),
                  std::move(ident), std::move(inv), std::move(comp));
}

}  // namespace pact
