#include "qsheaf/regularity.hpp"

#include <functional>

namespace qsheaf {

std::string RegValue::to_string() const {
  switch (kind) {
    case RegKind::Finite: return std::to_string(value);
    case RegKind::MinusInfinity: return "-inf";
    case RegKind::Ambiguous: return "ambiguous";
  }
  return "?";
}

namespace {

struct Probe {
  int i;
  int t;
  std::optional<SpinorLabel> label;
};

ConditionCheck evaluate(const CellSource& f, const std::vector<Probe>& probes, const char* what, int m) {
  ConditionCheck out;
  std::vector<Cell> undecided;
  for (const auto& p : probes) {
    const CohomValue v = p.label ? f.twisted(*p.label, p.i, p.t) : f.plain(p.i, p.t);
    Cell c{p.i, p.t, p.label, v};
    out.checked.push_back(c);
    if (v.certainly_nonzero()) {
      out.failing.push_back(c);
    } else if (v.undecided()) {
      undecided.push_back(c);
    }
  }
  if (out.failing.empty() && !undecided.empty()) {
    std::vector<std::string> cells;
    for (const auto& c : undecided) cells.push_back(c.to_string());
    throw AmbiguityError(std::string(what) + " at m = " + std::to_string(m) + " depends on interval cells",
                         std::move(cells));
  }
  out.holds = out.failing.empty();
  return out;
}

using Predicate = std::function<ConditionCheck(int)>;

RegReport search(const CellSource& f, const Predicate& pred, int seed) {
  RegReport rep;
  int lo_m = -kRegSearchLimit;
  int hi_m = kRegSearchLimit;
  if (auto w = f.bounds()) {
    lo_m = std::max(lo_m, w->lo + f.n());
    hi_m = std::min(hi_m, w->hi + 1);
  }
  if (lo_m > hi_m) {
    rep.value = RegValue::ambiguous();
    rep.ambiguous_cells.push_back("window too narrow for any condition");
    return rep;
  }
  try {
    auto holds = [&](int m) { return pred(m).holds; };
    int start = std::clamp(seed, lo_m, hi_m);
    int good;  // regular
    int bad;   // not regular
    if (holds(start)) {
      good = start;
      int step = 1;
      for (;;) {
        if (good == lo_m) {
          rep.value = RegValue::ambiguous();
          rep.ambiguous_cells.push_back("regular at every m down to " + std::to_string(lo_m));
          return rep;
        }
        const int cand = std::max(lo_m, good - step);
        if (holds(cand)) {
          good = cand;
          step *= 2;
        } else {
          bad = cand;
          break;
        }
      }
    } else {
      bad = start;
      int step = 1;
      for (;;) {
        if (bad == hi_m) {
          rep.value = RegValue::ambiguous();
          rep.ambiguous_cells.push_back("not regular at any m up to " + std::to_string(hi_m));
          return rep;
        }
        const int cand = std::min(hi_m, bad + step);
        if (holds(cand)) {
          good = cand;
          break;
        }
        bad = cand;
        step *= 2;
      }
    }
    while (good - bad > 1) {
      const int mid = bad + (good - bad) / 2;
      if (holds(mid)) {
        good = mid;
      } else {
        bad = mid;
      }
    }
    const auto at = pred(good);
    const auto below = pred(good - 1);
    if (!at.holds || below.holds) throw std::logic_error("regularity search lost its certificate");
    rep.value = RegValue::finite(good);
    rep.witnesses = below.failing;
    return rep;
  } catch (const AmbiguityError& e) {
    rep.value = RegValue::ambiguous();
    rep.ambiguous_cells = e.cells();
    return rep;
  }
}

}  // namespace

ConditionCheck is_qregular(const CellSource& f, int m) {
  const int n = f.n();
  std::vector<Probe> probes;
  for (int i = 1; i <= n - 1; ++i) probes.push_back({i, m - i, std::nullopt});
  for (auto b : f.labels()) probes.push_back({n, m - n, b});
  return evaluate(f, probes, "Qregularity", m);
}

ConditionCheck is_qregular_alt(const CellSource& f, int m) {
  const int n = f.n();
  std::vector<Probe> probes;
  for (int i = 1; i <= n - 1; ++i) probes.push_back({i, m - i, std::nullopt});
  for (auto b : f.labels()) probes.push_back({n - 1, m - n + 1, b});
  probes.push_back({n, m - n + 1, std::nullopt});
  return evaluate(f, probes, "Qregularity (alternate form)", m);
}

ConditionCheck is_cm_regular(const CellSource& f, int m) {
  std::vector<Probe> probes;
  for (int i = 1; i <= f.n(); ++i) probes.push_back({i, m - i, std::nullopt});
  return evaluate(f, probes, "Castelnuovo-Mumford regularity", m);
}

RegReport qreg(const CellSource& f, std::optional<int> seed) {
  if (f.finite_support()) return {RegValue::minus_infinity(), {}, {}};
  if (!seed) {
    const auto reg = cm_reg(f);
    seed = reg.value.is_finite() ? reg.value.value : 0;
  }
  return search(f, [&](int m) { return is_qregular(f, m); }, *seed);
}

RegReport cm_reg(const CellSource& f) {
  if (f.finite_support()) return {RegValue::minus_infinity(), {}, {}};
  return search(f, [&](int m) { return is_cm_regular(f, m); }, 0);
}

SandwichReport check_sandwich(const CellSource& f) {
  SandwichReport s;
  const auto reg = cm_reg(f);
  s.reg = reg.value;
  s.qreg = qreg(f, reg.value.is_finite() ? std::optional<int>(reg.value.value) : std::nullopt).value;
  if (s.qreg.is_finite() && s.reg.is_finite()) {
    s.holds = s.qreg.value <= s.reg.value && s.reg.value <= s.qreg.value + 1;
    s.lower_tight = s.reg.value == s.qreg.value;
    s.upper_tight = s.reg.value == s.qreg.value + 1;
  } else {
    s.holds = s.qreg.kind == RegKind::MinusInfinity && s.reg.kind == RegKind::MinusInfinity;
  }
  return s;
}

ConditionCheck is_qregular(const SheafCalculus& c, const SheafExpr& e, int m) {
  return is_qregular(ExprSource(c, e), m);
}
ConditionCheck is_qregular_alt(const SheafCalculus& c, const SheafExpr& e, int m) {
  return is_qregular_alt(ExprSource(c, e), m);
}
RegReport qreg(const SheafCalculus& c, const SheafExpr& e) { return qreg(ExprSource(c, e)); }
RegReport cm_reg(const SheafCalculus& c, const SheafExpr& e) { return cm_reg(ExprSource(c, e)); }
SandwichReport check_sandwich(const SheafCalculus& c, const SheafExpr& e) { return check_sandwich(ExprSource(c, e)); }

}  // namespace qsheaf
