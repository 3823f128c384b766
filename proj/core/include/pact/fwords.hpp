#pragma once

#include <compare>
#include <string>
#include <vector>

#include "pact/groupoid.hpp"

namespace pact {

// Letter of the free group on the morphism symbols of a groupoid.
struct FLetter {
  int morphism;
  int sign;  // +1 or -1
  auto operator<=>(const FLetter&) const = default;
};

struct FWord {
  std::vector<FLetter> letters;
  auto operator<=>(const FWord&) const = default;
  bool empty() const { return letters.empty(); }
  int length() const { return static_cast<int>(letters.size()); }
};

FWord free_reduce(const FWord& w);
bool is_free_reduced(const FWord& w);
FWord fword_concat(const FWord& a, const FWord& b);  // reduced concatenation
FWord fword_invert(const FWord& a);
std::string fword_str(const Groupoid& g, const FWord& w);

// Value of the evaluation map: the identity map of the carrier on the empty
// word, a morphism when every junction composes, empty otherwise.
struct PiValue {
  enum Kind { identity_map, morphism, empty } kind;
  int m = -1;  // morphism index when kind == morphism
  bool operator==(const PiValue&) const = default;
};

// Morphism a signed letter evaluates to.
int eval_letter(const Groupoid& g, const FLetter& l);

// Evaluates the reduced form of w left to right.
PiValue pi_eval(const Groupoid& g, const FWord& w);

bool is_path(const Groupoid& g, const FWord& w);  // nonempty, pi != empty
// Loop: a path whose evaluation is an identity morphism.  Empty words are
// not loops.
bool is_loop(const Groupoid& g, const FWord& w);

// Maximal path block of a decomposition, with its evaluation cached.
struct PathBlock {
  FWord word;
  int value;  // morphism the block evaluates to
};
int block_src(const Groupoid& g, const PathBlock& b);  // S = src of value
int block_tgt(const Groupoid& g, const PathBlock& b);  // T = tgt of value

// Unique factorization of the reduced form of w into maximal paths; blocks
// are separated exactly at non-composable junctions.
std::vector<PathBlock> path_decompose(const Groupoid& g, const FWord& w);

// Conjugated loop z u z^{-1} with z loop-free and unlinked to u.  word()
// is already reduced under the stored invariants.
struct MinimalElement {
  FWord conjugator;
  FWord loop;
  FWord word() const;
  auto operator<=>(const MinimalElement&) const = default;
};

// Empty when valid: loop is a loop, conjugator blocks are loop-free, and the
// junctions around the loop are non-composable.
std::vector<std::string> validate_minimal_element(const Groupoid& g,
                                                  const MinimalElement& e);

// Writes any conjugated loop z u z^{-1} as a product of minimal elements by
// peeling loop blocks out of the conjugator.  Throws "not a loop" when u is
// not one.
std::vector<MinimalElement> minimal_decompose(const Groupoid& g, const FWord& z,
                                              const FWord& u);

using MinimalRepresentation = std::vector<MinimalElement>;

FWord representation_word(const MinimalRepresentation& rep);

// Reduced: no contiguous subproduct cancels to the empty word, and adjacent
// elements with equal conjugators carry loops at distinct objects.
bool is_reduced_representation(const Groupoid& g, const MinimalRepresentation& rep);

// Erases cancelling subproducts and merges adjacent same-conjugator linked
// loops until reduced.  Preserves the represented element.
MinimalRepresentation reduce_representation(const Groupoid& g,
                                            const MinimalRepresentation& rep);

enum class PairClass { P, C };

// P exactly when the last loop block of the reduced product is the loop of
// the second element; C exactly when the second conjugator is a proper
// blockwise prefix of the first and the leftover block links the second
// loop, which absorbs it.  Throws "not reduced" when the pair product
// cancels completely or equal conjugators carry linked loops.
PairClass classify_pair(const Groupoid& g, const MinimalElement& xi,
                        const MinimalElement& phi);

// For a C-pair, the element xi' = K^{-1} u K with K the reduced form of
// z^{-1} * phi.  Satisfies xi*phi = phi*xi', and (phi, xi') is a P-pair.
MinimalElement switch_pair(const Groupoid& g, const MinimalElement& xi,
                           const MinimalElement& phi);

struct PStep {
  std::string label;
  MinimalRepresentation state;
};

// Rewrites a representation into one with the P-property (every adjacent
// pair classifies P) that represents the same element.  Throws "represents
// identity" when the product reduces to the empty word.  A non-null trace
// collects the intermediate states.
MinimalRepresentation p_algorithm(const Groupoid& g, const MinimalRepresentation& rep,
                                  std::vector<PStep>* trace = nullptr);

bool has_p_property(const Groupoid& g, const MinimalRepresentation& rep);

struct LoopCheckResult {
  bool pi_nonempty;
  bool loop;
  MinimalRepresentation normalized;
  std::vector<PStep> trace;
};

// Runs p_algorithm on rep and evaluates the represented word: whenever the
// evaluation is non-empty the word is a loop.
LoopCheckResult loop_check(const Groupoid& g, const MinimalRepresentation& rep);

}  // namespace pact
