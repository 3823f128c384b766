#include "pact/paction.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pact {

namespace {

constexpr int kMaxReports = 8;

std::string point_label(const std::vector<std::string>& carrier, int x) {
  if (x >= 0 && x < static_cast<int>(carrier.size())) return carrier[x];
  return "#" + std::to_string(x);
}

}  // namespace

PartialAction::PartialAction() : group_(Group::finite(FiniteGroup::trivial())) {}

PartialAction::PartialAction(Group group, std::vector<std::string> carrier,
                             std::map<Elem, std::map<int, int>> maps)
    : group_(std::move(group)), carrier_(std::move(carrier)) {
  const int n = static_cast<int>(carrier_.size());
  {
    std::set<std::string> seen(carrier_.begin(), carrier_.end());
    if (static_cast<int>(seen.size()) != n)
      throw std::invalid_argument("partial action: duplicate carrier point names");
  }
  for (auto& [g, table] : maps) {
    if (!group_.contains(g))
      throw std::invalid_argument("partial action: map key is not a group element");
    for (auto [x, y] : table) {
      if (x < 0 || x >= n || y < 0 || y >= n)
        throw std::invalid_argument("partial action: map entry out of carrier range");
    }
    if (table.empty()) continue;  // empty table means g acts on nothing
    if (group_.is_identity(g)) {
      // The identity acts totally and is kept implicit; a stored table is
      // accepted only when it says exactly that.
      bool total_identity = static_cast<int>(table.size()) == n;
      for (auto [x, y] : table) total_identity = total_identity && x == y;
      if (total_identity) continue;
      maps_[g] = table;
      continue;
    }
    maps_[g] = table;
  }
}

std::optional<int> PartialAction::point_index(const std::string& name) const {
  auto it = std::find(carrier_.begin(), carrier_.end(), name);
  if (it == carrier_.end()) return std::nullopt;
  return static_cast<int>(it - carrier_.begin());
}

std::vector<int> PartialAction::domain_of(const Elem& g) const {
  std::vector<int> out;
  if (group_.is_identity(g)) {
    out.resize(carrier_.size());
    for (int i = 0; i < static_cast<int>(carrier_.size()); ++i) out[i] = i;
    return out;
  }
  auto it = maps_.find(g);
  if (it == maps_.end()) return out;
  for (auto [x, y] : it->second) out.push_back(y);
  std::sort(out.begin(), out.end());
  return out;
}

bool PartialAction::domain_contains(const Elem& g, int x) const {
  if (group_.is_identity(g)) return x >= 0 && x < static_cast<int>(carrier_.size());
  auto it = maps_.find(g);
  if (it == maps_.end()) return false;
  for (auto [k, y] : it->second)
    if (y == x) return true;
  return false;
}

std::optional<int> PartialAction::apply(const Elem& g, int x) const {
  if (group_.is_identity(g)) {
    if (x < 0 || x >= static_cast<int>(carrier_.size())) return std::nullopt;
    return x;
  }
  auto it = maps_.find(g);
  if (it == maps_.end()) return std::nullopt;
  auto jt = it->second.find(x);
  if (jt == it->second.end()) return std::nullopt;
  return jt->second;
}

bool PartialAction::is_global() const {
  auto all = group_.enumerate();
  if (!all) return false;
  const int n = static_cast<int>(carrier_.size());
  for (const Elem& g : *all) {
    if (group_.is_identity(g)) continue;
    auto it = maps_.find(g);
    if (it == maps_.end() || static_cast<int>(it->second.size()) != n) return false;
  }
  return true;
}

std::vector<std::string> validate_paction(const PartialAction& a) {
  std::vector<std::string> out;
  const auto& carrier = a.carrier();
  const Group& G = a.group();
  const int n = static_cast<int>(carrier.size());

  for (const auto& [g, table] : a.partial_maps()) {
    if (G.is_identity(g)) {
      // Only a non-total or non-fixing identity table survives construction.
      out.push_back("identity: stored table for the identity must fix every point");
      continue;
    }
    std::set<int> values;
    for (auto [x, y] : table) {
      if (!values.insert(y).second)
        out.push_back("bijection: table for " + G.name_of(g) +
                      " repeats the value " + point_label(carrier, y));
    }
    std::set<int> keys;
    for (auto [x, y] : table) keys.insert(x);
    std::set<int> inv_values;
    auto inv_it = a.partial_maps().find(G.invert(g));
    if (inv_it != a.partial_maps().end())
      for (auto [x, y] : inv_it->second) inv_values.insert(y);
    if (keys != inv_values)
      out.push_back("domains: table for " + G.name_of(g) +
                    " must be defined exactly on the domain of " +
                    G.name_of(G.invert(g)));
  }

  int reported = 0;
  for (const auto& [g, tg] : a.partial_maps()) {
    if (G.is_identity(g)) continue;
    for (const auto& [h, th] : a.partial_maps()) {
      if (G.is_identity(h)) continue;
      Elem gh = G.multiply(g, h);
      for (auto [x, y1] : th) {
        auto mid = tg.find(y1);
        if (mid == tg.end()) continue;
        int y2 = mid->second;
        std::optional<int> via = a.apply(gh, x);
        if (via && *via == y2) continue;
        if (reported++ < kMaxReports) {
          std::ostringstream os;
          os << "composition: " << G.name_of(g) << "(" << G.name_of(h) << "("
             << point_label(carrier, x) << ")) = " << point_label(carrier, y2)
             << " but " << G.name_of(gh) << " ";
          if (via)
            os << "sends it to " << point_label(carrier, *via);
          else
            os << "is undefined there";
          out.push_back(os.str());
        }
      }
    }
  }
  if (reported > kMaxReports)
    out.push_back("composition: " + std::to_string(reported - kMaxReports) +
                  " further violations suppressed");
  (void)n;
  return out;
}

std::vector<std::string> validate_pa_morphism(const PAMorphism& f,
                                              const PartialAction& from,
                                              const PartialAction& to) {
  std::vector<std::string> out;
  if (static_cast<int>(f.map0.size()) != from.carrier_size()) {
    out.push_back("shape: carrier map must have one image per point");
    return out;
  }
  for (int img : f.map0)
    if (img < 0 || img >= to.carrier_size()) {
      out.push_back("shape: carrier map image out of range");
      return out;
    }
  if (!f.hom.dom().same_group(from.group()))
    out.push_back("hom: domain group differs from the source action's group");
  if (!f.hom.cod().same_group(to.group()))
    out.push_back("hom: codomain group differs from the target action's group");
  if (!out.empty()) return out;
  for (const auto& v : f.hom.validate()) out.push_back("hom: " + v);

  const Group& G = from.group();
  for (const auto& [g, table] : from.partial_maps()) {
    Elem h;
    try {
      h = f.hom.apply(g);
    } catch (const std::exception& e) {
      out.push_back("hom: cannot map " + G.name_of(g) + ": " + e.what());
      continue;
    }
    for (auto [x, y] : table) {
      if (!to.domain_contains(h, f.map0[y]))
        out.push_back("containment: image of " + point_label(from.carrier(), y) +
                      " lies outside the domain of " + to.group().name_of(h));
      auto moved = to.apply(h, f.map0[x]);
      if (!moved)
        out.push_back("equivariance: " + to.group().name_of(h) +
                      " is undefined at the image of " +
                      point_label(from.carrier(), x));
      else if (*moved != f.map0[y])
        out.push_back("equivariance: images of " + point_label(from.carrier(), x) +
                      " disagree under " + G.name_of(g));
      if (out.size() > 32) return out;
    }
  }
  return out;
}

PAMorphism identity_pa_morphism(const PartialAction& a) {
  PAMorphism f{std::vector<int>(a.carrier_size()), GroupHom::identity(a.group())};
  for (int i = 0; i < a.carrier_size(); ++i) f.map0[i] = i;
  return f;
}

PAMorphism compose_pa_morphisms(const PAMorphism& outer, const PAMorphism& inner) {
  PAMorphism f{std::vector<int>(inner.map0.size()),
               GroupHom::compose(outer.hom, inner.hom)};
  for (std::size_t i = 0; i < inner.map0.size(); ++i) {
    int mid = inner.map0[i];
    if (mid < 0 || mid >= static_cast<int>(outer.map0.size()))
      throw std::invalid_argument("morphism composition: carrier maps do not chain");
    f.map0[i] = outer.map0[mid];
  }
  return f;
}

bool pa_morphisms_equal(const PAMorphism& a, const PAMorphism& b) {
  return a.map0 == b.map0 && a.hom.equal(b.hom);
}

PartialAction reduce_paction(const PartialAction& a) {
  if (a.group().kind() != Group::Kind::finite)
    throw std::logic_error("reduce: group has no finite table");
  const FiniteGroup& T = a.group().table();
  std::vector<int> support;
  for (const auto& [g, table] : a.partial_maps())
    support.push_back(std::get<int>(g));
  std::vector<int> closed = T.subgroup_closure(support);
  FiniteGroup sub = T.subgroup(closed);
  std::map<Elem, std::map<int, int>> maps;
  for (const auto& [g, table] : a.partial_maps()) {
    auto pos = std::lower_bound(closed.begin(), closed.end(), std::get<int>(g));
    maps[Elem{static_cast<int>(pos - closed.begin())}] = table;
  }
  return PartialAction(Group::finite(std::move(sub)), a.carrier(), std::move(maps));
}

bool pa_iso_criterion(const PAMorphism& f, const PartialAction& from,
                      const PartialAction& to, std::vector<std::string>* why) {
  auto fail = [&](const std::string& reason) {
    if (why) why->push_back(reason);
    return false;
  };
  auto violations = validate_pa_morphism(f, from, to);
  if (!violations.empty()) {
    if (why) why->insert(why->end(), violations.begin(), violations.end());
    return false;
  }
  if (from.carrier_size() != to.carrier_size())
    return fail("carrier map: sizes differ");
  std::set<int> hit(f.map0.begin(), f.map0.end());
  if (static_cast<int>(hit.size()) != from.carrier_size())
    return fail("carrier map: not injective");

  auto dom_elems = from.group().enumerate();
  auto cod_elems = to.group().enumerate();
  if (!dom_elems || !cod_elems)
    throw std::logic_error("iso criterion requires enumerable groups");
  std::set<Elem> images;
  for (const Elem& g : *dom_elems) images.insert(f.hom.apply(g));
  if (images.size() != dom_elems->size() || images.size() != cod_elems->size())
    return fail("group map: not bijective");

  // Bijective components still allow the image domains to sit strictly
  // inside the target ones; the inverse pair is a morphism exactly when
  // each domain maps onto its counterpart.
  for (const auto& [g, table] : from.partial_maps()) {
    Elem h = f.hom.apply(g);
    if (from.domain_of(g).size() != to.domain_of(h).size())
      return fail("domains: image of the domain of " + from.group().name_of(g) +
                  " is a proper subset of the domain of " + to.group().name_of(h));
  }
  std::set<Elem> support_images;
  for (const auto& [g, table] : from.partial_maps())
    support_images.insert(f.hom.apply(g));
  for (const auto& [h, table] : to.partial_maps()) {
    if (table.empty()) continue;
    if (!support_images.count(h))
      return fail("domains: " + to.group().name_of(h) +
                  " acts on the target but its preimage acts on nothing");
  }
  return true;
}

}  // namespace pact
