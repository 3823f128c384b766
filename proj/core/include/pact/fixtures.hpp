#pragma once

#include <string>

#include "pact/groupoid.hpp"
#include "pact/paction.hpp"

namespace pact::fixtures {

// Two objects a, b with a single arrow each way; f: a -> b, g = f^{-1}.
Groupoid pair_groupoid();

// One object whose loops form h.
Groupoid one_object(const FiniteGroup& h);

// C2 swapping {x, y}; a global action.
PartialAction swap_action();

// C2 swapping {x, y} and fixing z.
PartialAction c2_on_three();

// C4 where only the half turn acts, swapping {x, y}.
PartialAction c4_half_swap();

// C2 * C2 acting on {x, y, z} with disjoint supports.
PartialAction fp_two_c2();

// Klein four-group table with one associativity cell broken.
FiniteGroup broken_klein();

// Writes the sample JSON files the command-line tool and tests consume.
void write_fixtures(const std::string& dir);

}  // namespace pact::fixtures
