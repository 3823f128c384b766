#pragma once

#include <optional>
#include <string>
#include <vector>

namespace pact {

// Finite group as a complete multiplication table.  Elements are dense
// indices 0..size-1; names are kept for I/O and never interpreted.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  FiniteGroup(std::vector<std::string> names, std::vector<std::vector<int>> mul,
              int id, std::vector<int> inv);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int g) const { return names_[g]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(const std::string& name) const;

  int multiply(int g, int h) const { return mul_[g][h]; }
  int invert(int g) const { return inv_[g]; }
  int identity() const { return id_; }

  // Axiom scan; empty result means the table is a group.
  std::vector<std::string> validate() const;

  // Subgroup generated by gens, as sorted element indices of this group.
  std::vector<int> subgroup_closure(const std::vector<int>& gens) const;
  // Normal closure of gens.
  std::vector<int> normal_closure(const std::vector<int>& gens) const;
  bool is_subgroup(const std::vector<int>& elems) const;
  bool is_normal(const std::vector<int>& subgroup_elems) const;

  // New group on a subset (must be a subgroup); keeps element names.
  FiniteGroup subgroup(const std::vector<int>& elems) const;

  // Quotient by a normal subgroup; elements are cosets named after their
  // least member.  coset_of maps old indices to new ones.
  FiniteGroup quotient(const std::vector<int>& normal_subgroup,
                       std::vector<int>* coset_of = nullptr) const;

  static FiniteGroup trivial();
  static FiniteGroup cyclic(int n);             // names 1, r1, r2, ...
  static FiniteGroup klein_four();              // names 1, a, b, c
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

  bool operator==(const FiniteGroup&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> mul_;
  int id_ = 0;
  std::vector<int> inv_;
};

}  // namespace pact
