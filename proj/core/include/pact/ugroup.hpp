#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "pact/fwords.hpp"
#include "pact/groupoid.hpp"

namespace pact {

// Normal form of an element of the group universal over a groupoid: a
// sequence of non-identity morphisms in which no adjacent pair composes.
// The empty word is the identity class.
struct UWord {
  std::vector<int> letters;
  auto operator<=>(const UWord&) const = default;
  bool empty() const { return letters.empty(); }
};

bool u_is_normal(const Groupoid& g, const UWord& w);

// Class of a single morphism: empty for identities.
UWord u_letter(const Groupoid& g, int morphism);

// Concatenates, then collapses composable junctions, dropping identity
// composites; the result is in normal form.
UWord u_multiply(const Groupoid& g, const UWord& a, const UWord& b);
UWord u_invert(const Groupoid& g, const UWord& a);

// Quotient map from the free group on the morphism symbols.
UWord project(const Groupoid& g, const FWord& w);

// Partial evaluation of a class: the identity map for the identity class, a
// morphism for a length-one form, empty otherwise.
struct UPsiValue {
  enum Kind { identity_map, morphism, empty } kind;
  int m = -1;
  bool operator==(const UPsiValue&) const = default;
};
UPsiValue psi_of(const Groupoid& g, const UWord& w);

// Checks the defining relations against the groupoid: identity classes
// collapse and letter products collapse exactly for composable pairs.
std::vector<std::string> presentation_check(const Groupoid& g);

std::string uword_name(const Groupoid& g, const UWord& w);  // "1" or ids joined by *
std::optional<UWord> uword_parse(const Groupoid& g, const std::string& name);

// All classes when the group is finite: exactly when every pair of
// non-identity morphisms composes (forms are then at most one letter long).
std::optional<std::vector<UWord>> enumerate_ugroup(const Groupoid& g);

}  // namespace pact
