#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pact/group.hpp"

namespace pact {

// Partial action of a group on a finite carrier.  The table for g maps
// points of the domain of g^{-1} to points of the domain of g; the identity
// acts totally and is never stored.  Absent entries act on nothing.
class PartialAction {
 public:
  PartialAction();  // the trivial group on an empty carrier
  PartialAction(Group group, std::vector<std::string> carrier,
                std::map<Elem, std::map<int, int>> maps);

  const Group& group() const { return group_; }
  const std::vector<std::string>& carrier() const { return carrier_; }
  int carrier_size() const { return static_cast<int>(carrier_.size()); }
  std::optional<int> point_index(const std::string& name) const;

  // Non-identity elements with nonempty tables.
  const std::map<Elem, std::map<int, int>>& partial_maps() const { return maps_; }

  // Domain of g (the image side of its table), sorted; the whole carrier
  // for the identity.
  std::vector<int> domain_of(const Elem& g) const;
  bool domain_contains(const Elem& g, int x) const;
  std::optional<int> apply(const Elem& g, int x) const;

  bool is_global() const;  // every stored table is total, support is the group

 private:
  Group group_;
  std::vector<std::string> carrier_;
  std::map<Elem, std::map<int, int>> maps_;
};

// Axiom scan: tables are bijections with matching domains across inverses,
// composites are restrictions, the identity acts as such.  Empty means θ is
// a partial action.
std::vector<std::string> validate_paction(const PartialAction& a);

// Equivariant pair: carrier map plus group homomorphism.
struct PAMorphism {
  std::vector<int> map0;  // one image per carrier point
  GroupHom hom;
};

// Checks that hom is a homomorphism (where decidable), domains land in
// domains, and the carrier map intertwines the tables.
std::vector<std::string> validate_pa_morphism(const PAMorphism& f,
                                              const PartialAction& from,
                                              const PartialAction& to);

PAMorphism identity_pa_morphism(const PartialAction& a);
PAMorphism compose_pa_morphisms(const PAMorphism& outer, const PAMorphism& inner);
bool pa_morphisms_equal(const PAMorphism& a, const PAMorphism& b);

// Restriction to the subgroup generated by the elements that act on
// anything.  Finite-table groups only; idempotent.
PartialAction reduce_paction(const PartialAction& a);

// Both components bijective and the inverse pair is again a morphism.  The
// morphism condition on the inverse is a real check: bijectivity alone does
// not grant it.
bool pa_iso_criterion(const PAMorphism& f, const PartialAction& from,
                      const PartialAction& to, std::vector<std::string>* why = nullptr);

}  // namespace pact
