#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pact/congruence.hpp"
#include "pact/paction.hpp"

namespace pact {

// Finite (co)limits of partial actions.  Group-side constructions need
// finite tables where noted; mediators build the canonical candidate and
// throw when the cone or cocone data fails to restrict.

struct ProductResult {
  PartialAction action;  // product group on paired points "(x|y)"
  PAMorphism proj1, proj2;
};
ProductResult product_paction(const PartialAction& a, const PartialAction& b);
PAMorphism product_mediator(const ProductResult& p, const PartialAction& a,
                            const PartialAction& b, const PartialAction& z,
                            const PAMorphism& f, const PAMorphism& g);

struct EqualizerResult {
  PartialAction action;     // restriction to agreeing points and elements
  PAMorphism include;
  std::vector<int> points;  // carrier indices kept, ascending
  std::vector<int> elems;   // element ids kept, ascending
};
EqualizerResult equalizer_paction(const PartialAction& a, const PartialAction& b,
                                  const PAMorphism& f, const PAMorphism& g);
PAMorphism equalizer_mediator(const EqualizerResult& e, const PartialAction& a,
                              const PartialAction& w, const PAMorphism& h);

struct CoproductResult {
  PartialAction action;  // free product group on the disjoint union
  std::vector<PAMorphism> inject;
};
CoproductResult coproduct_paction(const std::vector<PartialAction>& parts);
PAMorphism coproduct_mediator(const CoproductResult& c,
                              const std::vector<PartialAction>& parts,
                              const PartialAction& w,
                              const std::vector<PAMorphism>& hs);

struct CoequalizerResult {
  Congruence congruence;    // least compatible congruence merging the images
  QuotientResult quotient;  // its quotient; the projection coequalizes
};
CoequalizerResult coequalizer_paction(const PartialAction& a, const PartialAction& b,
                                      const PAMorphism& f, const PAMorphism& g);
std::optional<PAMorphism> coequalizer_mediator(const CoequalizerResult& c,
                                               const PartialAction& b,
                                               const PartialAction& w,
                                               const PAMorphism& h,
                                               std::vector<std::string>* why = nullptr);

PartialAction initial_paction();
PartialAction terminal_paction();
PAMorphism from_initial(const PartialAction& to);
PAMorphism to_terminal(const PartialAction& from);

}  // namespace pact
