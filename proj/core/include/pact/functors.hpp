#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "pact/paction.hpp"

namespace pact {

// Action groupoid of a partial action.  Objects are the carrier points;
// morphisms are the moves (target, element, source), one per defined
// application, plus an identity move per point.  Names follow the pattern
// "(target|element|source)".
struct PsiGroupoid {
  Groupoid groupoid;
  std::vector<std::tuple<int, Elem, int>> triples;  // per morphism: tgt, elem, src

  // Morphism index of a move, -1 when the action does not provide it.
  int triple_index(int tgt, const Elem& g, int src) const;

 private:
  std::map<std::tuple<int, Elem, int>, int> index_;
  friend PsiGroupoid psi_of_action(const PartialAction& a);
};

PsiGroupoid psi_of_action(const PartialAction& a);

// Functor between action groupoids induced by an equivariant map: moves are
// pushed through both components.
GroupoidMorphism psi_of_morphism(const PAMorphism& f, const PartialAction& from,
                                 const PsiGroupoid& from_psi, const PartialAction& to,
                                 const PsiGroupoid& to_psi);

// Canonical partial action of the universal group on the objects: a
// one-letter class moves exactly the source of its morphism, longer normal
// forms move nothing.
PartialAction phi_of_groupoid(const Groupoid& g);

PAMorphism phi_of_functor(const GroupoidMorphism& f, const Groupoid& from,
                          const Groupoid& to);

// Comparison functor of a groupoid with the action groupoid of its
// canonical partial action: objects go to themselves, a morphism to its
// move.  Always an isomorphism; tests rely on that.
struct EtaResult {
  PartialAction phi;      // canonical action of the universal group
  PsiGroupoid psi_phi;    // its action groupoid
  GroupoidMorphism eta;   // source groupoid -> psi_phi.groupoid
};
EtaResult eta_of_groupoid(const Groupoid& g);

// Adjoint transpose: for a functor F from g into the action groupoid of
// theta, the unique equivariant map from the canonical action of g to theta
// whose action-groupoid functor extends F along eta.  Throws when F is not
// a functor.
PAMorphism universal_morphism(const Groupoid& g, const PartialAction& phi_g,
                              const GroupoidMorphism& F, const PartialAction& theta,
                              const PsiGroupoid& psi_theta);

// Action of an action groupoid on a set fibered over the carrier: momentum
// assigns each point its fiber, lambda a bijection of fibers to each move.
// Identity moves may be omitted; stored maps use point indices of the
// fibered set.
struct GroupoidAction {
  std::vector<int> momentum;                 // fibered point -> carrier point
  std::map<int, std::map<int, int>> lambda;  // morphism index -> fiber bijection
};

std::vector<std::string> validate_groupoid_action(const PsiGroupoid& psi,
                                                  const PartialAction& theta,
                                                  int fibered_size,
                                                  const GroupoidAction& act);

// Partial action on the fibered set moving points the way their fibers
// move, with the momentum map as an equivariant projection onto the base.
struct LiftResult {
  PartialAction action;
  PAMorphism projection;
};
LiftResult lift_action(const PartialAction& theta, const PsiGroupoid& psi,
                       std::vector<std::string> fibered_names,
                       const GroupoidAction& act);

}  // namespace pact
