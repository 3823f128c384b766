#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pact/paction.hpp"

namespace pact {

// Quotient of the universal group of a groupoid onto a finite group, given
// by one target element per non-identity morphism.
struct FiniteQuotientHom {
  FiniteGroup target;
  std::map<int, int> images;  // morphism index -> target element id
};

GroupHom as_group_hom(const Groupoid& g, const FiniteQuotientHom& q);
std::vector<std::string> validate_quotient_hom(const Groupoid& g,
                                               const FiniteQuotientHom& q);

// No non-identity morphism may land on the target identity; this is what
// makes the induced tables single-valued.
bool kernel_condition(const Groupoid& g, const FiniteQuotientHom& q,
                      std::string* why = nullptr);

// Partial action of the target on the objects: h moves the source of each
// morphism mapping to h onto its target.  Requires the kernel condition.
PartialAction induce_action(const Groupoid& g, const FiniteQuotientHom& q);

// Order on quotients: a dominates b when a factors through b, i.e. a hom of
// targets carries b's images to a's.  The dominant quotient has the larger
// kernel and the larger induced domains.  Witnessing maps are defined on the
// subgroups the images generate; outside elements are irrelevant.
struct CompareResult {
  bool a_dominates_b = false;
  bool b_dominates_a = false;
  std::optional<std::map<int, int>> a_to_b;  // target elements of a -> of b
  std::optional<std::map<int, int>> b_to_a;  // witnesses a_dominates_b
};
CompareResult compare_reduced(const Groupoid& g, const FiniteQuotientHom& a,
                              const FiniteQuotientHom& b);

// Index of a candidate that strictly dominates q, among the candidates that
// are valid and satisfy the kernel condition; empty when q is maximal
// within the family.
std::optional<int> dominating_candidate(const Groupoid& g, const FiniteQuotientHom& q,
                                        const std::vector<FiniteQuotientHom>& candidates);

// Maximality relative to an explicit family, plus the consistency check
// that a globally acting quotient is never dominated.
struct MaximalityReport {
  std::optional<int> dominator;
  bool induced_global = false;
  bool consistent = true;
};
MaximalityReport maximality_report(const Groupoid& g, const FiniteQuotientHom& q,
                                   const std::vector<FiniteQuotientHom>& candidates);

}  // namespace pact
