#include "qsheaf/spinor_products.hpp"

#include <map>
#include <memory>

#include "qsheaf/les.hpp"

namespace qsheaf {

using les::SlotRange;

SpinorProducts::SpinorProducts(int n, const FactRegistry& registry)
    : n_(n), radius_(n + 3), rule_(registry.duality(n)), labels_(Quadric(n).labels()) {
  if (n < 3) throw StructuralError("spinor products are tabulated for n >= 3; Q2 uses Kunneth");
  solve_core(registry);
}

int SpinorProducts::label_index(SpinorLabel a) const {
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    if (labels_[k] == a) return static_cast<int>(k);
  }
  throw StructuralError("spinor label " + to_string(a) + " is invalid on Q" + std::to_string(n_));
}

int SpinorProducts::pair_index(SpinorLabel a, SpinorLabel b) const {
  return label_index(a) * static_cast<int>(labels_.size()) + label_index(b);
}

void SpinorProducts::solve_core(const FactRegistry& registry) {
  const Quadric q(n_);
  const int T = radius_;
  const int width = 2 * T + 1;
  const int pairs = static_cast<int>(labels_.size() * labels_.size());
  std::vector<std::vector<std::vector<SlotRange>>> x(
      pairs, std::vector<std::vector<SlotRange>>(width, std::vector<SlotRange>(n_ + 1, SlotRange::unknown())));
  auto ref = [&](SpinorLabel a, SpinorLabel b, int t, int i) -> SlotRange& {
    return x[pair_index(a, b)][t + T][i];
  };
  bool changed = false;
  auto meet = [&](SlotRange& cell, SlotRange v, int t, int i) {
    const SlotRange m{std::max(cell.lo, v.lo), std::min(cell.hi, v.hi)};
    if (m.hi < m.lo) {
      throw InconsistencyError("spinor product tables contradict at twist " + std::to_string(t) + ", index " +
                                   std::to_string(i) + " on Q" + std::to_string(n_),
                               t, i);
    }
    if (!(m == cell)) {
      cell = m;
      changed = true;
    }
  };

  for (const auto& f : registry.facts_for(n_)) {
    if (f.cell.t < -T || f.cell.t > T) continue;
    auto& c = ref(f.cell.a, f.cell.b, f.cell.t, f.cell.i);
    if (f.value) meet(c, SlotRange::known(*f.value), f.cell.t, f.cell.i);
    if (f.nonvanishing) meet(c, {1, les::kUnbounded}, f.cell.t, f.cell.i);
  }

  const Dim two_r = 2 * q.spinor_rank();
  do {
    changed = false;
    ++sweeps_;
    for (auto a : labels_) {
      for (auto b : labels_) {
        const SpinorLabel bp = q.partner(b);
        // 0 -> Sigma_a (x) Sigma_b'(t-1) -> Sigma_a(t)^{2r} -> Sigma_a (x) Sigma_b(t) -> 0
        for (int t = -T + 1; t <= T; ++t) {
          les::LesInstance inst;
          inst.twist = t;
          inst.context = "spinor product sequence on Q" + std::to_string(n_);
          for (int i = 0; i <= n_; ++i) {
            inst.slots.push_back(ref(a, bp, t - 1, i));
            inst.slots.push_back(SlotRange::known(two_r * bott::spinor_cohom(n_, a, t, i)));
            inst.slots.push_back(ref(a, b, t, i));
          }
          const auto sol = les::solve(inst);
          for (int i = 0; i <= n_; ++i) {
            meet(ref(a, bp, t - 1, i), sol.slots[les::slot_index(i, 0)], t - 1, i);
            meet(ref(a, b, t, i), sol.slots[les::slot_index(i, 2)], t, i);
          }
        }
        for (int t = -T; t <= T; ++t) {
          const int s = -2 - n_ - t;
          for (int i = 0; i <= n_; ++i) {
            if (s >= -T && s <= T) {
              meet(ref(a, b, t, i), ref(rule_.dual(a), rule_.dual(b), s, n_ - i), t, i);
              meet(ref(rule_.dual(a), rule_.dual(b), s, n_ - i), ref(a, b, t, i), s, n_ - i);
            }
            meet(ref(a, b, t, i), ref(b, a, t, i), t, i);
            meet(ref(b, a, t, i), ref(a, b, t, i), t, i);
          }
        }
      }
    }
  } while (changed);

  closed_ = true;
  core_.assign(pairs, std::vector<std::vector<CohomValue>>(width, std::vector<CohomValue>(n_ + 1)));
  for (int p = 0; p < pairs; ++p) {
    for (int k = 0; k < width; ++k) {
      for (int i = 0; i <= n_; ++i) {
        const SlotRange& c = x[p][k][i];
        if (!c.exact()) closed_ = false;
        // an unbounded cell is left as [lo, lo]; closed() reports it
        core_[p][k][i] = c.bounded() ? CohomValue(c.lo, c.hi) : CohomValue(c.lo, c.lo);
      }
    }
  }
  for (const auto& f : registry.facts_for(n_)) {
    if (f.nonvanishing && cohom(f.cell.a, f.cell.b, f.cell.t, f.cell.i).hi == 0) {
      throw InconsistencyError("imported nonvanishing fact contradicted on Q" + std::to_string(n_), f.cell.t,
                               f.cell.i);
    }
  }
}

std::vector<CohomValue> SpinorProducts::extended_column(int p, int t) const {
  std::lock_guard lock(ext_mutex_);
  const Quadric q(n_);
  const Dim two_r = 2 * q.spinor_rank();
  const int pairs = static_cast<int>(labels_.size() * labels_.size());
  while (static_cast<int>(ext_.size()) <= t - radius_ - 1) {
    const int s = radius_ + 1 + static_cast<int>(ext_.size());
    std::vector<std::vector<CohomValue>> next(pairs);
    for (auto x : labels_) {
      for (auto y : labels_) {
        const int prev_pair = pair_index(x, q.partner(y));
        const auto& prev = ext_.empty() ? core_[prev_pair].back() : ext_.back()[prev_pair];
        les::LesInstance inst;
        inst.twist = s;
        inst.context = "spinor product extension on Q" + std::to_string(n_);
        for (int i = 0; i <= n_; ++i) {
          inst.slots.push_back(SlotRange::of(prev[i]));
          inst.slots.push_back(SlotRange::known(two_r * bott::spinor_cohom(n_, x, s, i)));
          inst.slots.push_back(SlotRange::unknown());
        }
        const auto sol = les::solve(inst);
        auto& col = next[pair_index(x, y)];
        for (int i = 0; i <= n_; ++i) col.push_back(les::to_value(sol.slots[les::slot_index(i, 2)], s, i));
      }
    }
    ext_.push_back(std::move(next));
  }
  return ext_[static_cast<std::size_t>(t - radius_ - 1)][p];
}

std::vector<CohomValue> SpinorProducts::column(SpinorLabel a, SpinorLabel b, int t) const {
  const int p = pair_index(a, b);
  if (t > radius_) return extended_column(p, t);
  if (t >= -radius_) return core_[p][t + radius_];
  auto dual = column(rule_.dual(a), rule_.dual(b), -2 - n_ - t);
  return std::vector<CohomValue>(dual.rbegin(), dual.rend());
}

CohomValue SpinorProducts::cohom(SpinorLabel a, SpinorLabel b, int t, int i) const {
  if (i < 0 || i > n_) return CohomValue::exact(0);
  return column(a, b, t)[static_cast<std::size_t>(i)];
}

const SpinorProducts& spinor_products(int n) {
  static std::mutex m;
  static std::map<int, std::unique_ptr<SpinorProducts>> cache;
  std::lock_guard lock(m);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<SpinorProducts>(n, FactRegistry::standard());
  return *slot;
}

}  // namespace qsheaf
