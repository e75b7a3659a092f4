#pragma once

#include <limits>
#include <string>
#include <vector>

#include "qsheaf/types.hpp"

// Dimension propagation through long exact sequences
//   0 -> V_0 -> V_1 -> ... -> V_{m-1} -> 0.
// Exactness means dim V_k = r_{k-1} + r_k with r_k = rank(V_k -> V_{k+1}) >= 0 and
// r_{-1} = r_{m-1} = 0. Each slot is a range of admissible dimensions.
namespace qsheaf::les {

inline constexpr Dim kUnbounded = std::numeric_limits<Dim>::max() / 4;

struct SlotRange {
  Dim lo = 0;
  Dim hi = kUnbounded;

  static SlotRange known(Dim v) { return {v, v}; }
  static SlotRange unknown() { return {0, kUnbounded}; }
  static SlotRange of(const CohomValue& v) { return {v.lo, v.hi}; }

  bool bounded() const noexcept { return hi < kUnbounded; }
  bool exact() const noexcept { return lo == hi; }
  bool operator==(const SlotRange&) const = default;
};

struct LesInstance {
  std::vector<SlotRange> slots;
  /// Used in inconsistency diagnostics.
  int twist = 0;
  std::string context;
};

struct Solution {
  std::vector<SlotRange> slots;  // tightest achievable dimension range per slot
  std::vector<SlotRange> ranks;  // feasible range of r_k, k = 0..m-1
};

/// Exact projection of the integer solution set onto each slot.
/// Throws InconsistencyError if no nonnegative rank assignment exists.
Solution solve(const LesInstance& instance);

/// Slot layout for 0 -> A -> B -> C -> 0 over H^0..H^n: slot 3i+c holds column c at degree i.
inline int slot_index(int i, int column) { return 3 * i + column; }

/// Convert a bounded range back to a cohomology value; throws if unbounded.
CohomValue to_value(const SlotRange& r, int twist, int index);

}  // namespace qsheaf::les
