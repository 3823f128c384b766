#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pact/paction.hpp"

namespace pact {

// Congruence datum on a partial action whose group is a finite table: an
// equivalence on the carrier together with a normal subgroup.  Blocks are
// labeled by their least member.
struct Congruence {
  std::vector<int> block_of;  // point -> least equivalent point
  std::vector<int> kernel;    // sorted element ids, a normal subgroup
};

// Closes generator pairs to an equivalence and kernel generators to a
// normal subgroup.
Congruence make_congruence(const PartialAction& a,
                           const std::vector<std::pair<int, int>>& pairs,
                           const std::vector<int>& kernel_gens);

std::vector<std::string> validate_congruence(const PartialAction& a,
                                             const Congruence& c);

bool congruence_equal(const Congruence& a, const Congruence& b);
// Refinement order: every block of a sits inside a block of b and the
// kernels are nested.
bool congruence_leq(const Congruence& a, const Congruence& b);
Congruence congruence_meet(const PartialAction& act, const Congruence& a,
                           const Congruence& b);

// Fibers of the carrier map and kernel of the group map.
Congruence induced_congruence(const PAMorphism& f, const PartialAction& from);

// Per-coset relations on blocks generated by single action steps and closed
// under chain concatenation and reversal.  A pair (a, b) in rel[c] records a
// chain of moves from block a to block b whose signature lies in coset c.
struct CosetRelationTable {
  FiniteGroup coset_group;
  std::vector<int> coset_of;  // element id -> coset index
  std::vector<int> blocks;    // least-member labels, ascending
  std::vector<std::set<std::pair<int, int>>> rel;  // indexed by coset, pairs of block positions

  int block_pos(int least_member_label) const;
};

CosetRelationTable build_coset_relations(const PartialAction& a, const Congruence& c);

// The congruence is compatible with the action exactly when every closed
// relation is a partial bijection.
bool pc_check(const PartialAction& a, const Congruence& c, std::string* why = nullptr);

struct QuotientResult {
  PartialAction action;   // the coset group acting on the blocks
  PAMorphism projection;  // original action onto the quotient
};

// Defined only for compatible congruences; throws otherwise.
QuotientResult quotient_paction(const PartialAction& a, const Congruence& c);

// Least compatible congruence containing the given pairs and kernel
// generators: the kernel is the normal closure, blocks are merged whenever
// a closed relation fails to be a partial bijection, to a fixpoint.
Congruence congruence_closure(const PartialAction& a,
                              const std::vector<std::pair<int, int>>& pairs,
                              const std::vector<int>& kernel_gens);

// The mediating morphism through the quotient, when f collapses at least as
// much as the congruence does.
std::optional<PAMorphism> factor_through(const PAMorphism& f, const PartialAction& from,
                                         const QuotientResult& q, const PartialAction& to,
                                         std::vector<std::string>* why = nullptr);

}  // namespace pact
