#include "pact/functors.hpp"

#include <algorithm>
#include <stdexcept>

#include "pact/ugroup.hpp"

namespace pact {

namespace {

std::string move_name(const PartialAction& a, int tgt, const Elem& g, int src) {
  return "(" + a.carrier()[tgt] + "|" + a.group().name_of(g) + "|" + a.carrier()[src] + ")";
}

}  // namespace

int PsiGroupoid::triple_index(int tgt, const Elem& g, int src) const {
  auto it = index_.find(std::make_tuple(tgt, g, src));
  return it == index_.end() ? -1 : it->second;
}

PsiGroupoid psi_of_action(const PartialAction& a) {
  PsiGroupoid out;
  const Group& G = a.group();
  std::vector<std::string> morphism_names;
  std::vector<int> src, tgt;

  auto add = [&](int t, const Elem& g, int s) {
    int idx = static_cast<int>(out.triples.size());
    out.triples.emplace_back(t, g, s);
    out.index_[std::make_tuple(t, g, s)] = idx;
    morphism_names.push_back(move_name(a, t, g, s));
    src.push_back(s);
    tgt.push_back(t);
    return idx;
  };

  std::vector<int> identity_at(a.carrier_size());
  for (int x = 0; x < a.carrier_size(); ++x)
    identity_at[x] = add(x, G.identity(), x);
  for (const auto& [g, table] : a.partial_maps())
    for (auto [x, y] : table) add(y, g, x);

  const int n = static_cast<int>(out.triples.size());
  std::vector<int> inverse(n);
  std::map<std::pair<int, int>, int> compose;
  for (int m = 0; m < n; ++m) {
    auto [t, g, s] = out.triples[m];
    inverse[m] = out.triple_index(s, G.invert(g), t);
    if (inverse[m] < 0)
      throw std::logic_error("action groupoid: missing inverse move; action is invalid");
  }
  for (int l = 0; l < n; ++l) {
    auto [lt, lg, ls] = out.triples[l];
    for (int r = 0; r < n; ++r) {
      auto [rt, rg, rs] = out.triples[r];
      if (ls != rt) continue;
      int c = out.triple_index(lt, G.multiply(lg, rg), rs);
      if (c < 0)
        throw std::logic_error("action groupoid: missing composite move; action is invalid");
      compose[{l, r}] = c;
    }
  }
  out.groupoid = Groupoid(a.carrier(), std::move(morphism_names), std::move(src),
                          std::move(tgt), std::move(identity_at), std::move(inverse),
                          std::move(compose));
  return out;
}

GroupoidMorphism psi_of_morphism(const PAMorphism& f, const PartialAction& from,
                                 const PsiGroupoid& from_psi, const PartialAction& to,
                                 const PsiGroupoid& to_psi) {
  GroupoidMorphism out;
  out.object_map = f.map0;
  out.morphism_map.resize(from_psi.triples.size());
  for (std::size_t m = 0; m < from_psi.triples.size(); ++m) {
    auto [t, g, s] = from_psi.triples[m];
    int idx = to_psi.triple_index(f.map0[t], f.hom.apply(g), f.map0[s]);
    if (idx < 0)
      throw std::invalid_argument("move functor: image move is absent; map is not equivariant");
    out.morphism_map[m] = idx;
  }
  (void)from;
  (void)to;
  return out;
}

PartialAction phi_of_groupoid(const Groupoid& g) {
  std::map<Elem, std::map<int, int>> maps;
  for (int m = 0; m < g.num_morphisms(); ++m) {
    if (g.is_identity(m)) continue;
    maps[Elem{UWord{{m}}}] = {{g.src(m), g.tgt(m)}};
  }
  return PartialAction(Group::universal(g), g.object_names(), std::move(maps));
}

PAMorphism phi_of_functor(const GroupoidMorphism& f, const Groupoid& from,
                          const Groupoid& to) {
  auto violations = validate_groupoid_morphism(f, from, to);
  if (!violations.empty())
    throw std::invalid_argument("canonical action of a non-functor: " + violations.front());
  std::map<int, Elem> images;
  for (int m = 0; m < from.num_morphisms(); ++m) {
    if (from.is_identity(m)) continue;
    images[m] = Elem{u_letter(to, f.morphism_map[m])};
  }
  return PAMorphism{f.object_map,
                    GroupHom::universal(Group::universal(from), Group::universal(to),
                                        std::move(images))};
}

EtaResult eta_of_groupoid(const Groupoid& g) {
  EtaResult out{phi_of_groupoid(g), {}, {}};
  out.psi_phi = psi_of_action(out.phi);
  out.eta.object_map.resize(g.num_objects());
  for (int x = 0; x < g.num_objects(); ++x) out.eta.object_map[x] = x;
  out.eta.morphism_map.resize(g.num_morphisms());
  const Group& U = out.phi.group();
  for (int m = 0; m < g.num_morphisms(); ++m) {
    Elem cls = g.is_identity(m) ? U.identity() : Elem{UWord{{m}}};
    int idx = out.psi_phi.triple_index(g.tgt(m), cls, g.src(m));
    if (idx < 0)
      throw std::logic_error("comparison functor: move for a morphism is missing");
    out.eta.morphism_map[m] = idx;
  }
  return out;
}

PAMorphism universal_morphism(const Groupoid& g, const PartialAction& phi_g,
                              const GroupoidMorphism& F, const PartialAction& theta,
                              const PsiGroupoid& psi_theta) {
  auto violations = validate_groupoid_morphism(F, g, psi_theta.groupoid);
  if (!violations.empty())
    throw std::invalid_argument("adjoint transpose of a non-functor: " + violations.front());
  std::map<int, Elem> images;
  for (int m = 0; m < g.num_morphisms(); ++m) {
    if (g.is_identity(m)) continue;
    images[m] = std::get<1>(psi_theta.triples[F.morphism_map[m]]);
  }
  return PAMorphism{F.object_map,
                    GroupHom::universal(phi_g.group(), theta.group(), std::move(images))};
}

std::vector<std::string> validate_groupoid_action(const PsiGroupoid& psi,
                                                  const PartialAction& theta,
                                                  int fibered_size,
                                                  const GroupoidAction& act) {
  std::vector<std::string> out;
  const Groupoid& g = psi.groupoid;
  if (static_cast<int>(act.momentum.size()) != fibered_size) {
    out.push_back("momentum: one fiber per point required");
    return out;
  }
  for (int x : act.momentum)
    if (x < 0 || x >= theta.carrier_size()) {
      out.push_back("momentum: fiber label out of range");
      return out;
    }
  for (const auto& [m, table] : act.lambda)
    if (m < 0 || m >= g.num_morphisms()) {
      out.push_back("moves: unknown move index");
      return out;
    }

  auto fiber = [&](int base) {
    std::vector<int> ys;
    for (int y = 0; y < fibered_size; ++y)
      if (act.momentum[y] == base) ys.push_back(y);
    return ys;
  };
  auto lambda_of = [&](int m) {
    // Identity moves default to the identity bijection.
    auto it = act.lambda.find(m);
    if (it != act.lambda.end()) return it->second;
    std::map<int, int> id;
    if (g.is_identity(m))
      for (int y : fiber(g.src(m))) id[y] = y;
    return id;
  };

  for (int m = 0; m < g.num_morphisms(); ++m) {
    auto table = lambda_of(m);
    std::vector<int> dom = fiber(g.src(m)), cod = fiber(g.tgt(m));
    std::vector<int> keys, values;
    for (auto [y, y2] : table) {
      keys.push_back(y);
      values.push_back(y2);
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (keys != dom || values != cod) {
      out.push_back("moves: map for " + g.morphism_name(m) +
                    " is not a bijection between the fibers of its endpoints");
      continue;
    }
    if (g.is_identity(m))
      for (auto [y, y2] : table)
        if (y != y2) {
          out.push_back("moves: identity move " + g.morphism_name(m) + " must not move points");
          break;
        }
  }
  if (!out.empty()) return out;

  for (const auto& [pair, c] : g.compose_table()) {
    auto left = lambda_of(pair.first), right = lambda_of(pair.second),
         comp = lambda_of(c);
    for (auto [y, mid] : right)
      if (comp[y] != left[mid]) {
        out.push_back("moves: maps for " + g.morphism_name(pair.first) + " after " +
                      g.morphism_name(pair.second) + " do not compose to the map for " +
                      g.morphism_name(c));
        break;
      }
    if (out.size() > 16) break;
  }
  return out;
}

LiftResult lift_action(const PartialAction& theta, const PsiGroupoid& psi,
                       std::vector<std::string> fibered_names,
                       const GroupoidAction& act) {
  auto violations =
      validate_groupoid_action(psi, theta, static_cast<int>(fibered_names.size()), act);
  if (!violations.empty())
    throw std::invalid_argument("lift: " + violations.front());

  std::map<Elem, std::map<int, int>> maps;
  for (const auto& [g, table] : theta.partial_maps()) {
    std::map<int, int> lifted;
    for (auto [x, x2] : table) {
      int m = psi.triple_index(x2, g, x);
      auto lam = act.lambda.find(m);  // absent over an empty fiber
      if (lam == act.lambda.end()) continue;
      for (auto [y, y2] : lam->second) lifted[y] = y2;
    }
    if (!lifted.empty()) maps[g] = std::move(lifted);
  }
  PartialAction lifted_action(theta.group(), std::move(fibered_names), std::move(maps));
  PAMorphism proj{act.momentum, GroupHom::identity(theta.group())};
  return LiftResult{std::move(lifted_action), std::move(proj)};
}

}  // namespace pact
