#pragma once

#include <random>
#include <vector>

#include "contin/closed_set.hpp"
#include "contin/gadget.hpp"
#include "contin/pl_homeo.hpp"

namespace contin {

/// Every canonical set with at most max_components components whose
/// endpoints are multiples of 1/den, in lexicographic order.
std::vector<ClosedSet1D> grid_corpus(int den, int max_components);

/// Random canonical set on the grid 1/den with 1..max_components components.
ClosedSet1D random_set(std::mt19937_64& rng, int den, int max_components);

/// Random PL homeomorphism with 0..max_inner interior breakpoints whose
/// coordinates are multiples of 1/den.
PLHomeo1D random_pl(std::mt19937_64& rng, int den, int max_inner);

/// `length` values drawn uniformly from [lo, hi].
IntSeq random_int_seq(std::mt19937_64& rng, long length, long lo, long hi);

}  // namespace contin
