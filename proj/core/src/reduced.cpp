#include "pact/reduced.hpp"

#include <deque>
#include <stdexcept>

#include "pact/groupoid.hpp"

namespace pact {

GroupHom as_group_hom(const Groupoid& g, const FiniteQuotientHom& q) {
  std::map<int, Elem> images;
  for (int m = 0; m < g.num_morphisms(); ++m) {
    if (g.is_identity(m)) continue;
    auto it = q.images.find(m);
    if (it == q.images.end())
      throw std::invalid_argument("quotient hom: no image for morphism " +
                                  g.morphism_name(m));
    if (it->second < 0 || it->second >= q.target.size())
      throw std::invalid_argument("quotient hom: image out of target range");
    images[m] = Elem{it->second};
  }
  return GroupHom::universal(Group::universal(g), Group::finite(q.target),
                             std::move(images));
}

std::vector<std::string> validate_quotient_hom(const Groupoid& g,
                                               const FiniteQuotientHom& q) {
  std::vector<std::string> out = q.target.validate();
  if (!out.empty()) return out;
  for (const auto& [m, e] : q.images) {
    if (m < 0 || m >= g.num_morphisms()) {
      out.push_back("images: unknown morphism index");
      return out;
    }
    if (g.is_identity(m) && e != q.target.identity())
      out.push_back("images: identity morphism " + g.morphism_name(m) +
                    " must land on the identity");
  }
  try {
    for (const auto& v : as_group_hom(g, q).validate()) out.push_back(v);
  } catch (const std::exception& e) {
    out.push_back(e.what());
  }
  return out;
}

bool kernel_condition(const Groupoid& g, const FiniteQuotientHom& q,
                      std::string* why) {
  for (int m = 0; m < g.num_morphisms(); ++m) {
    if (g.is_identity(m)) continue;
    auto it = q.images.find(m);
    if (it == q.images.end())
      throw std::invalid_argument("quotient hom: no image for morphism " +
                                  g.morphism_name(m));
    if (it->second == q.target.identity()) {
      if (why) *why = "morphism " + g.morphism_name(m) + " lands on the identity";
      return false;
    }
  }
  return true;
}

PartialAction induce_action(const Groupoid& g, const FiniteQuotientHom& q) {
  std::string why;
  if (!kernel_condition(g, q, &why))
    throw std::invalid_argument("induced action: kernel condition fails: " + why);
  std::map<Elem, std::map<int, int>> maps;
  for (int m = 0; m < g.num_morphisms(); ++m) {
    if (g.is_identity(m)) continue;
    int h = q.images.at(m);
    auto [it, fresh] = maps[Elem{h}].emplace(g.src(m), g.tgt(m));
    if (!fresh && it->second != g.tgt(m))
      throw std::invalid_argument(
          "induced action: two morphisms from " + g.object_name(g.src(m)) +
          " share the image " + q.target.name(h));
  }
  return PartialAction(Group::finite(q.target), g.object_names(), std::move(maps));
}

namespace {

// Forced extension of gen_image along products, breadth first over the
// subgroup the generators produce.  Empty when some product forces two
// different values.
std::optional<std::map<int, int>> forced_hom(const FiniteGroup& from,
                                             const FiniteGroup& to,
                                             const std::map<int, int>& gen_image) {
  std::map<int, int> psi;
  psi[from.identity()] = to.identity();
  std::deque<int> queue{from.identity()};
  auto meet = [&](int elem, int value) {
    auto [it, fresh] = psi.emplace(elem, value);
    if (fresh) queue.push_back(elem);
    return it->second == value;
  };
  for (auto [gsrc, gdst] : gen_image)
    if (!meet(gsrc, gdst)) return std::nullopt;
  while (!queue.empty()) {
    int a = queue.front();
    queue.pop_front();
    for (auto [gsrc, gdst] : gen_image)
      if (!meet(from.multiply(a, gsrc), to.multiply(psi[a], gdst)))
        return std::nullopt;
  }
  // Reached elements form the generated subgroup; every defining product
  // was checked, so psi is a homomorphism there.
  return psi;
}

std::optional<std::map<int, int>> factorization(const Groupoid& g,
                                                const FiniteQuotientHom& upper,
                                                const FiniteQuotientHom& lower) {
  std::map<int, int> gen_image;
  for (int m = 0; m < g.num_morphisms(); ++m) {
    if (g.is_identity(m)) continue;
    int u = upper.images.at(m), l = lower.images.at(m);
    auto [it, fresh] = gen_image.emplace(u, l);
    if (!fresh && it->second != l) return std::nullopt;
  }
  return forced_hom(upper.target, lower.target, gen_image);
}

}  // namespace

CompareResult compare_reduced(const Groupoid& g, const FiniteQuotientHom& a,
                              const FiniteQuotientHom& b) {
  CompareResult out;
  out.a_to_b = factorization(g, a, b);
  out.b_to_a = factorization(g, b, a);
  // a dominates b when a factors through b: the witness is the hom carrying
  // b's images to a's, so domination reads off the opposite arrow.
  out.a_dominates_b = out.b_to_a.has_value();
  out.b_dominates_a = out.a_to_b.has_value();
  return out;
}

std::optional<int> dominating_candidate(const Groupoid& g, const FiniteQuotientHom& q,
                                        const std::vector<FiniteQuotientHom>& candidates) {
  for (int i = 0; i < static_cast<int>(candidates.size()); ++i) {
    const FiniteQuotientHom& c = candidates[i];
    if (!validate_quotient_hom(g, c).empty()) continue;
    if (!kernel_condition(g, c)) continue;
    CompareResult cmp = compare_reduced(g, c, q);
    if (cmp.a_dominates_b && !cmp.b_dominates_a) return i;
  }
  return std::nullopt;
}

MaximalityReport maximality_report(const Groupoid& g, const FiniteQuotientHom& q,
                                   const std::vector<FiniteQuotientHom>& candidates) {
  MaximalityReport out;
  out.dominator = dominating_candidate(g, q, candidates);
  out.induced_global = induce_action(g, q).is_global();
  // A quotient whose induced action is already global cannot be beaten by
  // any family member; a dominator found here flags a broken candidate.
  out.consistent = !(out.induced_global && out.dominator.has_value());
  return out;
}

}  // namespace pact
