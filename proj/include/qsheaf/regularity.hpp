#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsheaf/calculus.hpp"

namespace qsheaf {

/// Read access to the cells the regularity conditions need.
class CellSource {
 public:
  virtual ~CellSource() = default;
  virtual int n() const = 0;
  virtual std::vector<SpinorLabel> labels() const = 0;
  virtual CohomValue plain(int i, int t) const = 0;
  /// h^i((F (x) Sigma_b)(t)).
  virtual CohomValue twisted(SpinorLabel b, int i, int t) const = 0;
  /// Twists outside this window cannot be queried.
  virtual std::optional<Window> bounds() const { return std::nullopt; }
  /// Supported at finitely many points, known structurally.
  virtual bool finite_support() const { return false; }
};

class ExprSource final : public CellSource {
 public:
  ExprSource(const SheafCalculus& calc, SheafExpr e) : calc_(calc), e_(std::move(e)) {}
  int n() const override { return e_.quadric().n(); }
  std::vector<SpinorLabel> labels() const override { return e_.quadric().labels(); }
  CohomValue plain(int i, int t) const override { return calc_.cell(e_, i, t); }
  CohomValue twisted(SpinorLabel b, int i, int t) const override {
    return calc_.spinor_twisted_cohom(e_, b, t, i);
  }
  bool finite_support() const override { return e_.finite_support(); }

 private:
  const SheafCalculus& calc_;
  SheafExpr e_;
};

class ProfileSource final : public CellSource {
 public:
  explicit ProfileSource(const BundleProfile& p) : p_(p) {}
  int n() const override { return p_.n; }
  std::vector<SpinorLabel> labels() const override { return p_.labels; }
  CohomValue plain(int i, int t) const override { return p_.plain.at(i, t); }
  CohomValue twisted(SpinorLabel b, int i, int t) const override {
    return p_.twisted_for(b).at(i, t);
  }
  std::optional<Window> bounds() const override { return p_.window; }

 private:
  const BundleProfile& p_;
};

struct ConditionCheck {
  bool holds = false;
  std::vector<Cell> failing;  // certainly nonzero condition cells
  std::vector<Cell> checked;
};

enum class RegKind { Finite, MinusInfinity, Ambiguous };

struct RegValue {
  RegKind kind = RegKind::Finite;
  int value = 0;

  static RegValue finite(int m) { return {RegKind::Finite, m}; }
  static RegValue minus_infinity() { return {RegKind::MinusInfinity, 0}; }
  static RegValue ambiguous() { return {RegKind::Ambiguous, 0}; }
  bool is_finite() const noexcept { return kind == RegKind::Finite; }
  std::string to_string() const;
  bool operator==(const RegValue&) const = default;
};

/// value m certified by: regular at m (witnesses = cells checked) and not at m-1
/// (witnesses = failing cells).
struct RegReport {
  RegValue value;
  std::vector<Cell> witnesses;
  std::vector<std::string> ambiguous_cells;
};
using QregReport = RegReport;

/// H^i(F(m-i)) = 0 for i = 1..n-1 and H^n(F(m) (x) Sigma_b(-n)) = 0 for every label b.
/// Throws AmbiguityError when no cell is certainly nonzero and some cell is undecided.
ConditionCheck is_qregular(const CellSource& f, int m);
/// H^i(F(m-i)) = 0 for i = 1..n-1, H^{n-1}(F(m) (x) Sigma_b(-n+1)) = 0, H^n(F(m-n+1)) = 0.
ConditionCheck is_qregular_alt(const CellSource& f, int m);
/// H^i(F(m-i)) = 0 for i = 1..n.
ConditionCheck is_cm_regular(const CellSource& f, int m);

/// Search bound on |m|.
inline constexpr int kRegSearchLimit = 4096;

RegReport qreg(const CellSource& f, std::optional<int> seed = std::nullopt);
RegReport cm_reg(const CellSource& f);

struct SandwichReport {
  RegValue qreg;
  RegValue reg;
  bool holds = false;
  bool lower_tight = false;  // Qreg == Reg
  bool upper_tight = false;  // Reg == Qreg + 1
};

SandwichReport check_sandwich(const CellSource& f);

/// Expression-level conveniences.
ConditionCheck is_qregular(const SheafCalculus& c, const SheafExpr& e, int m);
ConditionCheck is_qregular_alt(const SheafCalculus& c, const SheafExpr& e, int m);
RegReport qreg(const SheafCalculus& c, const SheafExpr& e);
RegReport cm_reg(const SheafCalculus& c, const SheafExpr& e);
SandwichReport check_sandwich(const SheafCalculus& c, const SheafExpr& e);

}  // namespace qsheaf
