#pragma once

#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "qsheaf/cohom_table.hpp"
#include "qsheaf/expr.hpp"
#include "qsheaf/facts.hpp"

namespace qsheaf {

enum class Execution { Serial, Parallel };

/// Cohomology tables of DSL expressions.
///
/// Plain columns: atoms from the generator formulas, quotients and restrictions through the
/// LES solver one twist at a time. Spinor-twisted columns F (x) Sigma_b follow the same
/// recursion; restrictions are first pushed down to atoms, since Sigma_b on Q_{n-1} need not
/// be a restriction of a single spinor bundle.
class SheafCalculus {
 public:
  SheafCalculus();
  explicit SheafCalculus(FactRegistry registry);

  const FactRegistry& registry() const noexcept { return registry_; }

  std::vector<CohomValue> column(const SheafExpr& e, int t) const;
  CohomValue cell(const SheafExpr& e, int i, int t) const;

  std::vector<CohomValue> twisted_column(const SheafExpr& e, SpinorLabel b, int t) const;
  /// h^i(F(t) (x) Sigma_b).
  CohomValue spinor_twisted_cohom(const SheafExpr& e, SpinorLabel b, int t, int i) const;

  CohomTable table(const SheafExpr& e, Window w, Execution ex = Execution::Parallel) const;
  CohomTable table(const SheafExpr& e) const { return table(e, safe_window(e)); }
  CohomTable twisted_table(const SheafExpr& e, SpinorLabel b, Window w,
                           Execution ex = Execution::Parallel) const;
  BundleProfile profile(const SheafExpr& e, Window w, Execution ex = Execution::Parallel) const;

  /// Exact for every expression; computed structurally, not from the table.
  Dim euler_char(const SheafExpr& e, int t) const;

  /// [-n-2-span, span+2] with span = max |twist| + depth.
  static Window safe_window(const SheafExpr& e);

  void clear_cache() const;
  std::size_t cache_size() const;

 private:
  FactRegistry registry_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<std::string, std::vector<CohomValue>> cache_;

  std::vector<CohomValue> compute(const SheafExpr& e, const SpinorLabel* b, int t) const;
  std::vector<CohomValue> lookup(const SheafExpr& e, const SpinorLabel* b, int t) const;
  std::vector<CohomValue> generator_column(const Quadric& q, const Generator& g,
                                           const SpinorLabel* b, int t) const;
};

}  // namespace qsheaf
