#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "contin/closed_set.hpp"
#include "contin/pl_homeo.hpp"

namespace contin {

struct LinearOrderSpec;

enum class UVKind : std::uint8_t { U, V };

/// One element of the interval structure of A: a maximal open interval
/// inside A (U) or inside its complement (V). Only V entries can touch the
/// ends of [0,1].
struct UVEntry {
  UVKind kind;
  bool touches_0 = false;
  bool touches_1 = false;
  friend bool operator==(const UVEntry&, const UVEntry&) = default;
};

/// The U/V intervals of A in spatial order. Equality is isomorphism of the
/// underlying ordered structures.
struct UVPattern {
  std::vector<UVEntry> entries;

  std::size_t v_count() const;
  std::size_t u_count() const;
  /// e.g. "U V V U | t0:- t1:-"; t0/t1 name the index of the touching entry.
  std::string str() const;
  /// Reverse order and swap the two touch flags.
  UVPattern mirrored() const;

  friend bool operator==(const UVPattern&, const UVPattern&) = default;
};

/// Counts of point and interval components; determines the clopen
/// algebra of A together with its interval atoms.
struct SInvariant {
  std::size_t point_count = 0;
  std::size_t interval_count = 0;
  friend bool operator==(const SInvariant&, const SInvariant&) = default;
};

/// Unordered pair {T(A), T(A*)} stored as forward/mirrored.
struct MPair {
  UVPattern forward;
  UVPattern mirrored;
};

UVPattern extract_T(const ClosedSet1D& a);
SInvariant extract_S(const ClosedSet1D& a);
MPair extract_M(const ClosedSet1D& a);

/// Homeomorphism type of A as a space.
bool decide_h1(const ClosedSet1D& a, const ClosedSet1D& b);
/// Component bijection witnessing decide_h1, pairs (index in A, index in B).
std::optional<std::vector<std::pair<std::size_t, std::size_t>>> h1_matching(const ClosedSet1D& a,
                                                                            const ClosedSet1D& b);

/// Existence of a self-homeomorphism of [0,1] carrying A onto B.
bool decide_r1(const ClosedSet1D& a, const ClosedSet1D& b);
bool decide_r1(const MPair& a, const MPair& b);

/// A PL homeomorphism h with pl_image(h, A) == B, when decide_r1 holds.
std::optional<PLHomeo1D> r1_witness(const ClosedSet1D& a, const ClosedSet1D& b);

/// Whether the V entries of `pattern` form a linear order isomorphic to R.
/// When `v_labels` is non-empty it gives, for each V entry in spatial order,
/// the enumeration index of the element it encodes, and the spatial order is
/// checked against the ranks. Throws std::invalid_argument if labels are
/// supplied for a pattern containing U entries or with the wrong length.
bool pattern_order_iso(const UVPattern& pattern, const LinearOrderSpec& order,
                       std::span<const std::size_t> v_labels = {});

}  // namespace contin
