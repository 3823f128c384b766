#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pact/finite_group.hpp"

namespace pact {

// Finite groupoid with explicit composition table.  compose(l, r) is "l
// after r": declared exactly when src(l) == tgt(r).  Objects and morphisms
// are dense indices with names kept for I/O.
class Groupoid {
 public:
  Groupoid() = default;
  Groupoid(std::vector<std::string> object_names,
           std::vector<std::string> morphism_names, std::vector<int> src,
           std::vector<int> tgt, std::vector<int> identity_at,
           std::vector<int> inverse, std::map<std::pair<int, int>, int> compose);

  int num_objects() const { return static_cast<int>(objects_.size()); }
  int num_morphisms() const { return static_cast<int>(morphisms_.size()); }
  const std::string& object_name(int x) const { return objects_[x]; }
  const std::string& morphism_name(int m) const { return morphisms_[m]; }
  const std::vector<std::string>& object_names() const { return objects_; }
  const std::vector<std::string>& morphism_names() const { return morphisms_; }
  std::optional<int> object_index(const std::string& name) const;
  std::optional<int> morphism_index(const std::string& name) const;

  int src(int m) const { return src_[m]; }
  int tgt(int m) const { return tgt_[m]; }
  int identity_at(int x) const { return identity_at_[x]; }
  int inverse(int m) const { return inverse_[m]; }
  bool is_identity(int m) const { return identity_at_[src_[m]] == m && src_[m] == tgt_[m]; }
  std::optional<int> compose(int left, int right) const;
  const std::map<std::pair<int, int>, int>& compose_table() const { return compose_; }

  std::vector<int> morphisms_from_to(int x, int y) const;  // src x, tgt y

  // Axiom scan: exactness of the compose table, identities, inverses,
  // associativity.  Empty result means this is a groupoid.
  std::vector<std::string> validate() const;

  // Object index blocks, sorted; two objects are connected when a morphism
  // joins them.
  std::vector<std::vector<int>> connected_components() const;

  // Full subgroupoid on the given objects (must be a union of components for
  // the result to be one).  Optional maps receive old indices.
  Groupoid restrict_to_objects(const std::vector<int>& objs,
                               std::vector<int>* old_object_of = nullptr,
                               std::vector<int>* old_morphism_of = nullptr) const;

  // Isotropy group at an object, as a finite group on the loop morphisms.
  // loop_of receives, per new group element, the morphism index.
  FiniteGroup isotropy(int obj, std::vector<int>* loop_of = nullptr) const;

 private:
  std::vector<std::string> objects_;
  std::vector<std::string> morphisms_;
  std::vector<int> src_, tgt_;
  std::vector<int> identity_at_;
  std::vector<int> inverse_;
  std::map<std::pair<int, int>, int> compose_;
};

// Pair of maps (objects, morphisms).  Functoriality is a property checked by
// validate_groupoid_morphism, not an invariant of the struct.
struct GroupoidMorphism {
  std::vector<int> object_map;
  std::vector<int> morphism_map;
};

std::vector<std::string> validate_groupoid_morphism(const GroupoidMorphism& f,
                                                    const Groupoid& from,
                                                    const Groupoid& to);

// True iff f is a valid morphism and both components are bijections (the
// inverse pair is then automatically a morphism).
bool groupoid_iso_check(const GroupoidMorphism& f, const Groupoid& from,
                        const Groupoid& to, std::vector<std::string>* why = nullptr);

GroupoidMorphism compose_groupoid_morphisms(const GroupoidMorphism& outer,
                                            const GroupoidMorphism& inner);

// Global action of H x C_n on the objects of a connected groupoid, where H
// is the isotropy group at the least object and n the object count.
// Morphisms x -> y correspond to triples (y, (h, k), x) with k = y - x mod n
// through a star trivialization chosen by sorted object order.
struct GlobalRealization {
  FiniteGroup group;                  // H x C_n
  std::vector<std::vector<int>> act;  // act[g][x]: object index g sends x to
  Groupoid action_groupoid;           // objects shared with the source groupoid
  GroupoidMorphism witness;           // action_groupoid -> source, verified iso
};

GlobalRealization realize_connected(const Groupoid& g);

// Disjoint union; morphism and object names are prefixed "<i>:" when there
// is more than one part.
Groupoid disjoint_union(const std::vector<Groupoid>& parts,
                        std::vector<std::pair<int, int>>* object_origin = nullptr,
                        std::vector<std::pair<int, int>>* morphism_origin = nullptr);

// Connected groupoid on the given objects with hom-sets modeled on H:
// morphisms are triples (y, h, x).  The generalization of a pair groupoid.
Groupoid trivialized_groupoid(const std::vector<std::string>& object_names,
                              const FiniteGroup& h);

}  // namespace pact
