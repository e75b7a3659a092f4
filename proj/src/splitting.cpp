#include "qsheaf/splitting.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qsheaf/bott.hpp"

namespace qsheaf {

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Split: return "split";
    case VerdictKind::Obstructed: return "obstructed";
    case VerdictKind::Ambiguous: return "ambiguous";
    case VerdictKind::HypothesisUnmet: return "hypothesis-unmet";
  }
  return "?";
}

namespace {

bool table_zero(const CohomTable& t) {
  for (int s = t.window().lo; s <= t.window().hi; ++s) {
    for (const auto& v : t.column(s)) {
      if (v.hi != 0) return false;
    }
  }
  return true;
}

bool profile_zero(const BundleProfile& p) {
  if (!table_zero(p.plain)) return false;
  return std::all_of(p.twisted.begin(), p.twisted.end(), table_zero);
}

void require_exact(const CohomTable& t) {
  const auto cells = t.interval_cells();
  if (cells.empty()) return;
  std::vector<std::string> s;
  for (const auto& c : cells) s.push_back(c.to_string());
  throw AmbiguityError("peeling needs an exact table", std::move(s));
}

void subtract(CohomTable& from, const CohomTable& part) {
  const Window w = from.window();
  for (int t = w.lo; t <= w.hi; ++t) {
    for (int i = 0; i <= from.n(); ++i) {
      const Dim v = from.at(i, t).lo - part.at(i, t).lo;
      if (v < 0) {
        throw InconsistencyError("peeled summand exceeds the table at h^" + std::to_string(i) + "(" +
                                     std::to_string(t) + "): not the table of a direct sum",
                                 t, i);
      }
      from.set(i, t, CohomValue::exact(v));
    }
  }
}

void subtract(BundleProfile& from, const BundleProfile& part) {
  subtract(from.plain, part.plain);
  for (std::size_t k = 0; k < from.twisted.size(); ++k) subtract(from.twisted[k], part.twisted[k]);
}

// Residual that is a constant h^0 and nothing else: a skyscraper of that length.
std::optional<int> skyscraper_length(const BundleProfile& p) {
  const Window w = p.window;
  const Dim l = p.plain.at(0, w.lo).lo;
  if (l <= 0) return std::nullopt;
  for (int t = w.lo; t <= w.hi; ++t) {
    for (int i = 0; i <= p.n; ++i) {
      if (p.plain.at(i, t).lo != (i == 0 ? l : 0)) return std::nullopt;
    }
  }
  return static_cast<int>(l);
}

std::string dump(const BundleProfile& p) {
  std::string s;
  for (int i = p.n; i >= 0; --i) {
    s += "h^" + std::to_string(i) + ":";
    for (int t = p.window.lo; t <= p.window.hi; ++t) s += " " + p.plain.at(i, t).to_string();
    s += "\n";
  }
  return s;
}

std::vector<int> required_indices(int n, Dim r) {
  std::set<int> idx;
  for (Dim i = 1; i <= r - 1 && i <= n - 1; ++i) idx.insert(static_cast<int>(i));
  if (n - 1 >= 1) idx.insert(n - 1);
  return {idx.begin(), idx.end()};
}

// Exact nonzero cells win over interval cells with lo >= 1; scan i then t ascending.
SplitReport scan(const CohomTable& tab, const std::vector<int>& indices, std::optional<SpinorLabel> label) {
  SplitReport rep;
  rep.window = tab.window();
  std::optional<Cell> lower_bound_witness;
  for (int i : indices) {
    for (int t = tab.window().lo; t <= tab.window().hi; ++t) {
      const CohomValue v = tab.at(i, t);
      if (v.is_exact() && v.lo > 0) {
        rep.kind = VerdictKind::Obstructed;
        rep.witness = Cell{i, t, label, v};
        return rep;
      }
      if (v.certainly_nonzero() && !lower_bound_witness) lower_bound_witness = Cell{i, t, label, v};
      if (v.undecided()) rep.ambiguous.push_back({i, t, label, v});
    }
  }
  if (lower_bound_witness) {
    rep.kind = VerdictKind::Obstructed;
    rep.witness = lower_bound_witness;
    rep.ambiguous.clear();
    return rep;
  }
  rep.kind = rep.ambiguous.empty() ? VerdictKind::Split : VerdictKind::Ambiguous;
  return rep;
}

SplitReport finish_with_peel(SplitReport rep, const SheafCalculus& c, const BundleProfile& p) {
  std::vector<Cell> cells = p.plain.interval_cells();
  for (const auto& t : p.twisted) {
    auto more = t.interval_cells();
    cells.insert(cells.end(), more.begin(), more.end());
  }
  if (!cells.empty()) {
    rep.kind = VerdictKind::Ambiguous;
    rep.ambiguous = cells;
    rep.note = "criterion holds but the table is not exact enough to peel";
    return rep;
  }
  rep.decomposition = peel(p, c);
  rep.kind = VerdictKind::Split;
  return rep;
}

SplitReport check_indices(const SheafCalculus& c, const SheafExpr& e, const std::vector<int>& indices,
                          BundleProfile& profile_out) {
  const Window w = SheafCalculus::safe_window(e);
  profile_out = c.profile(e, w);
  SplitReport rep = scan(profile_out.plain, indices, std::nullopt);
  rep.window = w;
  return rep;
}

}  // namespace

std::vector<Generator> peel(const BundleProfile& profile, const SheafCalculus& calc) {
  require_exact(profile.plain);
  for (const auto& t : profile.twisted) require_exact(t);
  const int n = profile.n;
  const Quadric q(n);
  const auto rule = calc.registry().duality(n);
  BundleProfile residual = profile;
  std::vector<Generator> out;
  for (int guard = 0; guard < 4096; ++guard) {
    if (profile_zero(residual)) {
      std::sort(out.begin(), out.end());
      return out;
    }
    std::optional<Generator> g;
    if (auto l = skyscraper_length(residual)) {
      g = Generator::skyscraper(*l);
    } else {
      const auto rep = qreg(ProfileSource(residual), std::nullopt);
      if (!rep.value.is_finite()) {
        throw std::logic_error("peel: residual has no Qregularity inside the window\n" + dump(residual));
      }
      const int m = rep.value.value;
      // normalized E' = E(m) has Qreg 0
      if (residual.plain.at(n, m - n).certainly_nonzero()) {
        g = Generator::line(-m);
      } else {
        for (auto b : q.labels()) {
          if (residual.twisted_for(b).at(n - 1, m - n).certainly_nonzero()) {
            g = Generator::spinor(rule.dual(q.partner(b)), -m);
            break;
          }
        }
      }
      if (!g) throw std::logic_error("peel: no summand found at Qreg " + std::to_string(m) + "\n" + dump(residual));
    }
    const auto part = calc.profile(SheafExpr::atom(q, {*g}), residual.window, Execution::Serial);
    subtract(residual, part);
    out.push_back(*g);
  }
  throw std::logic_error("peel: too many summands");
}

SplitReport eg_check(const SheafCalculus& c, const SheafExpr& e, Dim r) {
  const int n = e.quadric().n();
  BundleProfile p{n, {}, CohomTable(n, {0, 0}), {}, {}};
  auto rep = check_indices(c, e, required_indices(n, r), p);
  if (rep.kind != VerdictKind::Split) return rep;
  return finish_with_peel(std::move(rep), c, p);
}

SplitReport eg_check(const SheafCalculus& c, const SheafExpr& e) { return eg_check(c, e, e.rank()); }

SplitReport knorrer_check(const SheafCalculus& c, const SheafExpr& e) {
  const int n = e.quadric().n();
  std::vector<int> idx;
  for (int i = 1; i <= n - 1; ++i) idx.push_back(i);
  BundleProfile p{n, {}, CohomTable(n, {0, 0}), {}, {}};
  auto rep = check_indices(c, e, idx, p);
  if (rep.kind != VerdictKind::Split) return rep;
  return finish_with_peel(std::move(rep), c, p);
}

SplitReport line_split_check(const SheafCalculus& c, const SheafExpr& e) {
  const int n = e.quadric().n();
  BundleProfile p{n, {}, CohomTable(n, {0, 0}), {}, {}};
  auto rep = check_indices(c, e, required_indices(n, e.rank()), p);
  if (rep.kind == VerdictKind::Obstructed) return rep;
  std::vector<Cell> ambiguous = rep.ambiguous;
  for (std::size_t k = 0; k < p.labels.size(); ++k) {
    auto tw = scan(p.twisted[k], {n - 1}, p.labels[k]);
    if (tw.kind == VerdictKind::Obstructed) {
      tw.window = p.window;
      return tw;
    }
    ambiguous.insert(ambiguous.end(), tw.ambiguous.begin(), tw.ambiguous.end());
  }
  if (!ambiguous.empty()) {
    rep.kind = VerdictKind::Ambiguous;
    rep.ambiguous = ambiguous;
    return rep;
  }
  rep = finish_with_peel(std::move(rep), c, p);
  if (rep.kind == VerdictKind::Split) {
    for (const auto& g : rep.decomposition) {
      if (g.kind != GeneratorKind::Line) {
        throw std::logic_error("line splitting criterion held but peel produced " + g.to_string());
      }
    }
  }
  return rep;
}

SplitReport rank2_check(const SheafCalculus& c, const SheafExpr& e, int c1) {
  if (e.rank() != 2) throw StructuralError("rank2 check needs a rank 2 sheaf, got rank " + std::to_string(e.rank()));
  const int n = e.quadric().n();
  if (n >= 3 && first_chern(e) != c1) {
    throw StructuralError("c1 = " + std::to_string(c1) + " does not match the expression's c1 = " +
                          std::to_string(first_chern(e)));
  }
  SplitReport rep;
  rep.window = SheafCalculus::safe_window(e);
  const auto q = qreg(c, e);
  if (q.value.kind == RegKind::Ambiguous) {
    rep.kind = VerdictKind::Ambiguous;
    rep.note = "Qreg is ambiguous";
    return rep;
  }
  if (!(q.value == RegValue::finite(0))) {
    rep.kind = VerdictKind::HypothesisUnmet;
    rep.note = "Qreg = " + q.value.to_string() + ", expected 0";
    return rep;
  }
  for (int t : {-2, c1}) {
    const CohomValue v = c.cell(e, 1, t);
    if (v.certainly_nonzero()) {
      rep.kind = VerdictKind::Obstructed;
      rep.witness = Cell{1, t, std::nullopt, v};
      return rep;
    }
    if (v.undecided()) rep.ambiguous.push_back({1, t, std::nullopt, v});
  }
  if (!rep.ambiguous.empty()) {
    rep.kind = VerdictKind::Ambiguous;
    return rep;
  }
  Window w = rep.window;
  w.lo = std::min(w.lo, -n - 2 - std::abs(c1));
  w.hi = std::max(w.hi, std::abs(c1) + 2);
  rep = finish_with_peel(std::move(rep), c, c.profile(e, w));
  rep.window = w;
  if (rep.kind == VerdictKind::Split && n > 4) {
    std::vector<Generator> expected{Generator::line(0), Generator::line(c1)};
    std::sort(expected.begin(), expected.end());
    if (rep.decomposition != expected) {
      throw InconsistencyError("rank 2 table with Qreg 0 on Q" + std::to_string(n) + " does not peel to O + O(c1)",
                               0, 1);
    }
  }
  return rep;
}

}  // namespace qsheaf
