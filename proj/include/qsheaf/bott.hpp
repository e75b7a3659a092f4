#pragma once

#include <array>
#include <string>
#include <vector>

#include "qsheaf/types.hpp"

// Closed-form cohomology of the generators O(t) and Sigma_a(t) on Q_n.
namespace qsheaf::bott {

/// Polynomial binomial x(x-1)...(x-k+1)/k!, defined for every integer x. Throws on overflow.
Dim binomial(Dim x, int k);

Dim line_cohom(int n, int t, int i);
Dim spinor_cohom(int n, SpinorLabel label, int t, int i);
Dim spinor_rank(int n, SpinorLabel label);
Dim generator_cohom(const Quadric& q, const Generator& g, int t, int i);

/// Alternating sum of generator cohomology; for O(t) the polynomial binomial form, total in t.
Dim euler_char_generator(const Quadric& q, const Generator& g, int t);

/// Sigma_a^v = Sigma_{dual(a)}(-1) on Q_n.
struct DualityRule {
  int n = 0;
  bool swaps = false;
  std::string provenance;

  SpinorLabel dual(SpinorLabel a) const noexcept;
  /// Dual of a generator; line bundles negate, spinors use the label map and shift by -1.
  Generator dual(const Generator& g) const;
};

/// The rule recorded in the standard fact registry.
DualityRule duality_rule(int n);

/// Outcome of checking both label maps against the available numerical constraints.
struct DualityPinning {
  int n = 0;
  std::vector<bool> survivors;  // index 0: identity, 1: swap
  int surviving() const;
};

/// Serre duality on every spinor twist in [-window, window], plus, on Q_2, the Hom seeds
/// h^0(Sigma_a (x) Sigma_b(-1)) against Kunneth. Only Q_2 can separate the two candidates.
DualityPinning pin_duality(int n, int window = 12);

/// Startup self-check: Q_2 keeps exactly one candidate, the registry rule passes for every
/// n in [2, max_n], and on Q_2 it coincides with the survivor. Throws std::logic_error otherwise.
void self_check_duality(int max_n = 8);

}  // namespace qsheaf::bott
