#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsheaf/bott.hpp"
#include "qsheaf/types.hpp"

namespace qsheaf {

/// Cohomology cell of Sigma_a (x) Sigma_b(t), an object outside the expression language.
struct SpinorProductCell {
  SpinorLabel a = SpinorLabel::Single;
  SpinorLabel b = SpinorLabel::Single;
  int t = 0;
  int i = 0;
};

struct Fact {
  int n = 0;
  SpinorProductCell cell;
  std::optional<Dim> value;   // exact value, or
  bool nonvanishing = false;  // only known to be nonzero
  std::string provenance;
};

/// Imported classical facts. Consumed by the calculus, never inferred.
class FactRegistry {
 public:
  static constexpr int kMaxDim = Quadric::kMaxDim;

  /// Spinor block orthogonality/exceptionality and the [cm3] H^1 nonvanishing, n in [3, kMaxDim],
  /// plus the duality rule for n in [2, kMaxDim].
  static FactRegistry standard();

  void add(Fact f) { facts_.push_back(std::move(f)); }
  void add_duality(bott::DualityRule r) { duality_.push_back(std::move(r)); }

  std::vector<Fact> facts_for(int n) const;
  const bott::DualityRule& duality(int n) const;
  const std::vector<Fact>& all() const noexcept { return facts_; }

 private:
  std::vector<Fact> facts_;
  std::vector<bott::DualityRule> duality_;
};

}  // namespace qsheaf
