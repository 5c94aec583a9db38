#pragma once

#include <utility>
#include <vector>

#include "contin/closed_set.hpp"
#include "contin/rational.hpp"

namespace contin {

/// A finite linear order given by its enumeration: ranks[k] is the
/// position (1..n) in the order of the element enumerated at step k.
struct LinearOrderSpec {
  std::size_t n = 0;
  std::vector<int> ranks;

  /// Throws std::invalid_argument unless ranks is a permutation of 1..n.
  void validate() const;
  static LinearOrderSpec chain(std::vector<int> ranks);
};

struct OpenSpan {
  Rational lo;
  Rational hi;
  friend bool operator==(const OpenSpan&, const OpenSpan&) = default;
};

/// I_k = (a_k, b_k), indexed by enumeration step.
struct RemovedIntervals {
  std::vector<OpenSpan> intervals;
};

struct EncodedOrder {
  RemovedIntervals removed;
  ClosedSet1D set;
};

/// Removes one open interval per enumerated element so that the gaps of the
/// resulting closed set are ordered like the elements themselves.
EncodedOrder encode_order(const LinearOrderSpec& order);

/// [0,1] minus the union of the intervals. Throws std::invalid_argument if
/// the intervals overlap or leave [0,1].
ClosedSet1D complement_of(const RemovedIntervals& removed);

/// Checks the encoding of `order`: gaps in rank order, no interior, and the
/// gap structure isomorphic to the order via the interval provenance.
bool verify_encoding(const LinearOrderSpec& order);
/// Same checks against a supplied interval family.
bool verify_encoding(const LinearOrderSpec& order, const RemovedIntervals& removed);

}  // namespace contin
