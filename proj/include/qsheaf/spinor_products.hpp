#pragma once

#include <mutex>
#include <vector>

#include "qsheaf/bott.hpp"
#include "qsheaf/facts.hpp"
#include "qsheaf/types.hpp"

namespace qsheaf {

/// Cohomology of Sigma_a (x) Sigma_b(t) on Q_n, n >= 3.
///
/// Core cells on [-T, T] are the fixpoint of LES propagation through the spinor sequences
/// tensored with Sigma_a, Serre duality and tensor symmetry, seeded by registry facts.
/// Twists above T extend forward through the same sequences, twists below -T use duality.
class SpinorProducts {
 public:
  SpinorProducts(int n, const FactRegistry& registry);

  int n() const noexcept { return n_; }
  int core_radius() const noexcept { return radius_; }

  CohomValue cohom(SpinorLabel a, SpinorLabel b, int t, int i) const;
  /// All indices at once.
  std::vector<CohomValue> column(SpinorLabel a, SpinorLabel b, int t) const;
  /// True when every core cell is exact.
  bool closed() const noexcept { return closed_; }
  /// Number of sweeps the core fixpoint took.
  int sweeps() const noexcept { return sweeps_; }

 private:
  int n_;
  int radius_;
  bott::DualityRule rule_;
  std::vector<SpinorLabel> labels_;
  bool closed_ = false;
  int sweeps_ = 0;
  // cells_[pair][t + radius][i]
  std::vector<std::vector<std::vector<CohomValue>>> core_;
  mutable std::mutex ext_mutex_;
  mutable std::vector<std::vector<std::vector<CohomValue>>> ext_;  // t = radius + 1, ...

  int label_index(SpinorLabel a) const;
  int pair_index(SpinorLabel a, SpinorLabel b) const;
  void solve_core(const FactRegistry& registry);
  std::vector<CohomValue> extended_column(int p, int t) const;
};

/// Shared per-n instance built from the standard registry.
const SpinorProducts& spinor_products(int n);

}  // namespace qsheaf
