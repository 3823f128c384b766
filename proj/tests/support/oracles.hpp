#pragma once

// Reference implementations and instance generators for the test suites.
// Everything here recomputes answers from raw tables by the most naive
// method available, never through the code paths under test.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pact/congruence.hpp"
#include "pact/fwords.hpp"
#include "pact/groupoid.hpp"
#include "pact/paction.hpp"

namespace pact::oracle {

// Deterministic splitmix64 stream; PACT_SEED overrides the default.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  int below(int n);  // uniform in [0, n)
  bool coin();
};
std::uint64_t seed_from_env(std::uint64_t fallback);

// Free reduction by rescanning for adjacent inverse pairs until none remain.
FWord scan_reduce(FWord w);

// Block-to-block reachability by chains of partial moves, one signature
// coset at a time, enumerated breadth first up to max_steps moves.  Pairs
// use positions in the ascending least-member block list, and the outer
// index is a coset representative chosen as the least element id.
std::vector<std::set<std::pair<int, int>>> chain_relations(const PartialAction& a,
                                                           const Congruence& c,
                                                           int max_steps);
int coset_rep(const FiniteGroup& g, const std::vector<int>& kernel, int elem);
// Compatibility by brute force: every chain relation is a partial bijection.
bool chain_pc(const PartialAction& a, const Congruence& c);

// All set partitions of {0..n-1} as least-member labelings.
std::vector<std::vector<int>> all_partitions(int n);
// All normal subgroups, each as a sorted element list.
std::vector<std::vector<int>> all_normal_subgroups(const FiniteGroup& g);
// Every homomorphism between two finite tables, as image vectors.
std::vector<std::vector<int>> all_group_homs(const FiniteGroup& from,
                                             const FiniteGroup& to);
// Every valid morphism between two finite-group partial actions.
std::vector<PAMorphism> all_pa_morphisms(const PartialAction& from,
                                         const PartialAction& to);

// Mixed-component groupoid with at most max_objects objects and isotropy
// drawn from {1, C2, C3, C4, Klein four}.
Groupoid random_groupoid(Rng& rng, int max_objects);
// Restriction of a global translation action to a random subset; always a
// valid partial action over a finite group of order at most 4.
PartialAction random_paction(Rng& rng);
FWord random_fword(Rng& rng, const Groupoid& g, int len);
std::optional<MinimalElement> random_minimal_element(Rng& rng, const Groupoid& g,
                                                     int tries);
std::optional<MinimalRepresentation> random_reduced_rep(Rng& rng, const Groupoid& g,
                                                        int max_len, int tries);

// Table-level equality: same names, same arrows, same composition.
bool groupoids_equal(const Groupoid& a, const Groupoid& b);

}  // namespace pact::oracle
