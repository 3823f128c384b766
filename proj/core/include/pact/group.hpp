#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pact/finite_group.hpp"
#include "pact/free_product.hpp"
#include "pact/groupoid.hpp"
#include "pact/ugroup.hpp"

namespace pact {

// Group element under a Group handle: a table index, a free product word,
// or a universal-group normal form.
using Elem = std::variant<int, FpWord, UWord>;

// Uniform handle over the group kinds partial actions act by.  Immutable;
// cheap to copy.
class Group {
 public:
  enum class Kind { finite, free_product, universal };

  static Group finite(FiniteGroup table);
  static Group free_product(std::vector<FiniteGroup> factors);
  static Group universal(Groupoid groupoid);

  Kind kind() const;
  Elem identity() const;
  Elem multiply(const Elem& a, const Elem& b) const;
  Elem invert(const Elem& a) const;
  bool is_identity(const Elem& a) const;
  bool contains(const Elem& a) const;  // well-formed element of this group

  // All elements when the group is finite.
  std::optional<std::vector<Elem>> enumerate() const;
  // Generating set: every element for tables, letters for word groups.
  std::vector<Elem> generators() const;

  std::string name_of(const Elem& a) const;
  std::optional<Elem> parse(const std::string& name) const;

  const FiniteGroup& table() const;                  // finite only
  const std::vector<FiniteGroup>& factors() const;   // free_product only
  const Groupoid& groupoid() const;                  // universal only

  // Same kind and identical underlying tables.
  bool same_group(const Group& other) const;

 private:
  struct Impl;
  explicit Group(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// Homomorphism between Group handles.  Finite kind stores one image per
// element; word kinds store images of generators, which determine the map.
class GroupHom {
 public:
  static GroupHom finite(Group dom, Group cod, std::vector<Elem> images);
  static GroupHom identity(Group g);
  // dom must be a free product; one hom per factor.
  static GroupHom free_product(Group dom, Group cod, std::vector<GroupHom> factor_homs);
  // dom must be universal; images keyed by non-identity morphism index.
  static GroupHom universal(Group dom, Group cod, std::map<int, Elem> images);

  const Group& dom() const { return dom_; }
  const Group& cod() const { return cod_; }
  Elem apply(const Elem& a) const;

  // Violations of the homomorphism law that are decidable for the kind:
  // exhaustive for finite domains, presentation relations for universal
  // ones, factor checks for free products.
  std::vector<std::string> validate() const;

  // Elements of a finite domain mapped to the identity.
  std::vector<Elem> kernel() const;

  bool equal(const GroupHom& other) const;  // same dom/cod, agree on generators

  static GroupHom compose(const GroupHom& outer, const GroupHom& inner);

 private:
  enum class Kind { finite, identity, free_product, universal };
  GroupHom(Kind k, Group dom, Group cod) : kind_(k), dom_(std::move(dom)), cod_(std::move(cod)) {}
  Kind kind_;
  Group dom_, cod_;
  std::vector<Elem> images_;          // finite
  std::vector<GroupHom> factor_homs_; // free_product
  std::map<int, Elem> gen_images_;    // universal
};

}  // namespace pact
