#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "pact/finite_group.hpp"

namespace pact {

// Element of a free product of finite groups, in normal form: letters
// (factor, element) with no identity letters and no two adjacent letters
// from the same factor.  The empty word is the identity.
struct FpWord {
  std::vector<std::pair<int, int>> letters;
  auto operator<=>(const FpWord&) const = default;
};

// Concatenates and merges at the junction: adjacent same-factor letters are
// multiplied in that factor, identities produced by the merge are dropped.
FpWord fp_multiply(const std::vector<FiniteGroup>& factors, const FpWord& a,
                   const FpWord& b);
FpWord fp_invert(const std::vector<FiniteGroup>& factors, const FpWord& a);

// Letters in normal form?  (well-formed indices, no identities, alternating)
bool fp_is_normal(const std::vector<FiniteGroup>& factors, const FpWord& a);

std::string fp_name(const std::vector<FiniteGroup>& factors, const FpWord& a);

}  // namespace pact
