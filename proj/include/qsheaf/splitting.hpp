#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsheaf/calculus.hpp"
#include "qsheaf/regularity.hpp"

namespace qsheaf {

enum class VerdictKind { Split, Obstructed, Ambiguous, HypothesisUnmet };

std::string to_string(VerdictKind k);

struct SplitReport {
  VerdictKind kind = VerdictKind::Ambiguous;
  std::vector<Generator> decomposition;  // sorted; Split only
  std::optional<Cell> witness;           // Obstructed only
  std::vector<Cell> ambiguous;
  Window window;
  std::string note;
};

/// Decomposition of an exact profile with vanishing intermediate cohomology, by repeatedly
/// normalizing to Qreg 0 and removing an O or spinor summand. Throws InconsistencyError when
/// a subtraction goes negative and std::logic_error when no summand can be found.
std::vector<Generator> peel(const BundleProfile& profile, const SheafCalculus& calc);

/// h^i(E(t)) = 0 on the window for i in {1..r-1} U {n-1}, clamped to 1..n-1.
SplitReport eg_check(const SheafCalculus& c, const SheafExpr& e, Dim r);
SplitReport eg_check(const SheafCalculus& c, const SheafExpr& e);
/// eg_check plus h^{n-1}((E (x) Sigma_b)(t)) = 0 for every label; peel must yield only lines.
SplitReport line_split_check(const SheafCalculus& c, const SheafExpr& e);
/// All intermediate cohomology vanishes.
SplitReport knorrer_check(const SheafCalculus& c, const SheafExpr& e);
/// Rank 2, Qreg 0, h^1(E(-2)) = h^1(E(c1)) = 0. Throws StructuralError for rank != 2.
SplitReport rank2_check(const SheafCalculus& c, const SheafExpr& e, int c1);

}  // namespace qsheaf
