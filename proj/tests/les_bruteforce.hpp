#pragma once

#include <optional>
#include <set>
#include <vector>

#include "qsheaf/les.hpp"

namespace qsheaf::qtest {

// Every rank assignment r_0..r_{m-2} in [0, cap] (r_{m-1} = 0) is tried; returns the set of
// dimensions each slot takes over the valid ones, or nullopt when none is valid.
inline std::optional<std::vector<std::set<Dim>>> enumerate_les(const std::vector<les::SlotRange>& slots, Dim cap) {
  const int m = static_cast<int>(slots.size());
  std::vector<std::set<Dim>> seen(static_cast<std::size_t>(m));
  std::vector<Dim> r(static_cast<std::size_t>(m), 0);
  bool any = false;
  auto rec = [&](int k, Dim prev, auto& self) -> void {
    const auto& s = slots[static_cast<std::size_t>(k)];
    if (k == m - 1) {
      if (prev >= s.lo && prev <= s.hi) {
        any = true;
        Dim before = 0;
        for (int j = 0; j < m; ++j) {
          const Dim here = j == m - 1 ? 0 : r[static_cast<std::size_t>(j)];
          seen[static_cast<std::size_t>(j)].insert(before + here);
          before = here;
        }
      }
      return;
    }
    for (Dim v = 0; v <= cap; ++v) {
      if (prev + v < s.lo || prev + v > s.hi) continue;
      r[static_cast<std::size_t>(k)] = v;
      self(k + 1, v, self);
    }
  };
  if (m > 0) rec(0, 0, rec);
  if (!any) return std::nullopt;
  return seen;
}

}  // namespace qsheaf::qtest
