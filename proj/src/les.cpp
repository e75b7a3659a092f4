#include "qsheaf/les.hpp"

#include <algorithm>

namespace qsheaf::les {

namespace {

Dim sat_add(Dim a, Dim b) { return (a >= kUnbounded || b >= kUnbounded) ? kUnbounded : std::min(a + b, kUnbounded); }
Dim sat_sub(Dim a, Dim b) { return a >= kUnbounded ? kUnbounded : a - b; }

[[noreturn]] void infeasible(const LesInstance& inst, int k) {
  std::string msg = "long exact sequence has no nonnegative rank assignment at twist " +
                    std::to_string(inst.twist) + ", slot " + std::to_string(k);
  if (!inst.context.empty()) msg += " (" + inst.context + ")";
  throw InconsistencyError(msg, inst.twist, k);
}

}  // namespace

// Forward: F_k = feasible values of r_k given slots 0..k; r_{k-1} in F_{k-1} and
// dim V_k = r_{k-1} + r_k in [lo_k, hi_k]. Each F_k is an interval because the constraint
// graph is a path with interval slots. Backward sets are symmetric.
Solution solve(const LesInstance& inst) {
  const auto& s = inst.slots;
  const int m = static_cast<int>(s.size());
  Solution out;
  if (m == 0) return out;
  for (int k = 0; k < m; ++k) {
    if (s[k].lo < 0 || s[k].hi < s[k].lo) infeasible(inst, k);
  }
  std::vector<SlotRange> fwd(m), bwd(m);
  SlotRange prev{0, 0};
  for (int k = 0; k < m; ++k) {
    SlotRange r{prev.hi >= kUnbounded ? 0 : std::max<Dim>(0, s[k].lo - prev.hi), sat_sub(s[k].hi, prev.lo)};
    if (k == m - 1) r = {std::max<Dim>(r.lo, 0), std::min<Dim>(r.hi, 0)};
    if (r.hi < r.lo) infeasible(inst, k);
    fwd[k] = r;
    prev = r;
  }
  // bwd[k] = feasible r_{k-1} given slots k..m-1 (r_{m-1} = 0)
  prev = {0, 0};
  for (int k = m - 1; k >= 0; --k) {
    SlotRange r{prev.hi >= kUnbounded ? 0 : std::max<Dim>(0, s[k].lo - prev.hi), sat_sub(s[k].hi, prev.lo)};
    if (k == 0) r = {std::max<Dim>(r.lo, 0), std::min<Dim>(r.hi, 0)};
    if (r.hi < r.lo) infeasible(inst, k);
    bwd[k] = r;
    prev = r;
  }
  out.slots.resize(m);
  out.ranks.resize(m);
  for (int k = 0; k < m; ++k) {
    const SlotRange in = k == 0 ? SlotRange{0, 0} : fwd[k - 1];   // r_{k-1} from the left
    const SlotRange after = k == m - 1 ? SlotRange{0, 0} : bwd[k + 1];  // r_k from the right
    SlotRange v{std::max(s[k].lo, in.lo + after.lo), std::min(s[k].hi, sat_add(in.hi, after.hi))};
    if (v.hi < v.lo) infeasible(inst, k);
    out.slots[k] = v;
    out.ranks[k] = {std::max(fwd[k].lo, after.lo), std::min(fwd[k].hi, after.hi)};
  }
  return out;
}

CohomValue to_value(const SlotRange& r, int twist, int index) {
  if (!r.bounded()) {
    throw InconsistencyError("unbounded cohomology at twist " + std::to_string(twist) + ", slot " +
                                 std::to_string(index),
                             twist, index);
  }
  return CohomValue(r.lo, r.hi);
}

}  // namespace qsheaf::les
