// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "les_bruteforce.hpp"
#include "qsheaf/bott.hpp"
#include "qsheaf/calculus.hpp"
#include "qsheaf/oracle.hpp"
#include "qsheaf/parse.hpp"
#include "qsheaf/q2.hpp"
#include "qsheaf/random.hpp"
#include "qsheaf/regularity.hpp"
#include "qsheaf/splitting.hpp"

using namespace qsheaf;

namespace {

SheafExpr line(int n, int a) { return SheafExpr::atom(Quadric(n), {Generator::line(a)}); }
SheafExpr spinor(int n, SpinorLabel l) { return SheafExpr::atom(Quadric(n), {Generator::spinor(l, 0)}); }

std::vector<SheafExpr> corpus(int n, std::uint64_t seed, int count) {
  rnd::Rng rng(seed + static_cast<std::uint64_t>(n));
  std::vector<SheafExpr> out;
  for (int k = 0; k < count; ++k) out.push_back(rnd::split_bundle(n, rng));
  return out;
}

CohomTable recombined(const SheafCalculus& c, int n, const std::vector<Generator>& gens, Window w) {
  CohomTable out(n, w);
  for (const auto& g : gens) {
    const auto part = c.table(SheafExpr::atom(Quadric(n), {g}), w, Execution::Serial);
    for (int t = w.lo; t <= w.hi; ++t) {
      for (int i = 0; i <= n; ++i) out.set(i, t, out.at(i, t) + part.at(i, t));
    }
  }
  return out;
}

bool all_labelled(const std::vector<Cell>& cells) {
  if (cells.empty()) return false;
  for (const auto& c : cells) {
    if (!c.label || !c.value.certainly_nonzero()) return false;
  }
  return true;
}

}  // namespace

int main() {
  const SheafCalculus calc;
  constexpr std::uint64_t kSeed = 20240917;
  int failures = 0;

  auto run = [&](int id, const std::string& name, const std::function<bool(std::ostream&)>& body) {
    std::ostringstream detail;
    bool pass = false;
    try {
      pass = body(detail);
    } catch (const std::exception& e) {
      detail << "exception: " << e.what();
    }
    if (!pass) ++failures;
    std::cout << (pass ? "PASS" : "FAIL") << " [" << id << "] " << name << " (" << detail.str() << ")\n";
  };

  run(1, "line cohomology agrees with monomial count and ambient Euler characteristic", [&](std::ostream& d) {
    const auto start = std::chrono::steady_clock::now();
    int bad = 0;
    for (int n = 2; n <= 6; ++n) {
      for (int t = -10; t <= 10; ++t) {
        Dim chi = 0;
        for (int i = 0; i <= n; ++i) chi += (i % 2 ? -1 : 1) * bott::line_cohom(n, t, i);
        if (bott::line_cohom(n, t, 0) != oracle::monomial_h0(n, t)) ++bad;
        if (chi != oracle::euler_via_ambient(n, t)) ++bad;
      }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    d << bad << " mismatches, " << secs << " s";
    return bad == 0 && secs < 1.0;
  });

  run(2, "Qreg(O) = Qreg(spinor) = 0 on Q3..Q6 with spinor-twisted witnesses", [&](std::ostream& d) {
    bool ok = true;
    for (int n = 3; n <= 6; ++n) {
      const Quadric q(n);
      std::vector<SheafExpr> bundles{line(n, 0)};
      for (auto l : q.labels()) bundles.push_back(spinor(n, l));
      for (const auto& f : bundles) {
        const auto r = qreg(calc, f);
        ok = ok && r.value == RegValue::finite(0) && all_labelled(r.witnesses);
        ok = ok && !is_qregular(calc, f, -1).holds && is_qregular(calc, f, 0).holds;
      }
      // h^n(O (x) Sigma_b(-n)) = h^0(Sigma_b^v) = 0
      for (auto b : q.labels()) ok = ok && calc.spinor_twisted_cohom(line(n, 0), b, -n, n) == CohomValue::exact(0);
      d << "Q" << n << " ";
    }
    return ok;
  });

  run(3, "Reg(O) = 1 and Reg(spinor) = 0 on Q3..Q6", [&](std::ostream& d) {
    bool ok = true;
    for (int n = 3; n <= 6; ++n) {
      ok = ok && cm_reg(calc, line(n, 0)).value == RegValue::finite(1);
      for (auto l : Quadric(n).labels()) ok = ok && cm_reg(calc, spinor(n, l)).value == RegValue::finite(0);
    }
    d << "n = 3..6";
    return ok;
  });

  run(4, "Qreg <= Reg <= Qreg + 1 on 100 random split bundles per n in 3..6", [&](std::ostream& d) {
    int bad = 0;
    for (int n = 3; n <= 6; ++n) {
      for (const auto& f : corpus(n, kSeed, 100)) {
        if (!check_sandwich(calc, f).holds) ++bad;
      }
    }
    d << bad << " violations / 400";
    return bad == 0;
  });

  run(5, "alternative Qregularity form agrees and Qregularity is monotone, m in -6..6", [&](std::ostream& d) {
    int bad = 0;
    int checks = 0;
    for (int n = 3; n <= 6; ++n) {
      for (const auto& f : corpus(n, kSeed, 100)) {
        for (int m = -6; m <= 6; ++m) {
          const bool here = is_qregular(calc, f, m).holds;
          if (here != is_qregular_alt(calc, f, m).holds) ++bad;
          if (here && !is_qregular(calc, f, m + 1).holds) ++bad;
          ++checks;
        }
      }
    }
    for (const char* text : {"Q4: quot(O, S1 + S2)", "Q5: quot(O, S)"}) {
      const auto e = parse(text);
      for (int m = -6; m <= 6; ++m) {
        if (is_qregular(calc, e, m).holds && !is_qregular(calc, e, m + 1).holds) ++bad;
        ++checks;
      }
    }
    d << bad << " violations / " << checks;
    return bad == 0;
  });

  run(6, "on Q2 Qregularity equals (m,m)-regularity", [&](std::ostream& d) {
    rnd::Rng rng(kSeed + 6);
    int bad = 0;
    for (int k = 0; k < 300; ++k) {
      const auto f = rnd::bidegree_sum(rng, 4, -4, 4);
      for (int m = -5; m <= 5; ++m) bad += q2::is_qregular(f, m) != q2::hw_regular(f, m, m);
    }
    for (int k = 0; k < 100; ++k) {
      const auto f = rnd::split_bundle(2, rng);
      const auto bd = q2::from_generators(f.split_generators());
      for (int m = -5; m <= 5; ++m) bad += is_qregular(calc, f, m).holds != q2::hw_regular(bd, m, m);
    }
    d << bad << " violations";
    return bad == 0;
  });

  run(7, "P4 and P5 have vanishing low cohomology but nonzero H^{n-1}_*", [&](std::ostream& d) {
    const auto p4 = parse("Q4: quot(O, S1 + S2)");
    const auto p5 = parse("Q5: quot(O, S)");
    const Window w{-12, 8};
    const auto t4 = calc.table(p4, w);
    const auto t5 = calc.table(p5, w);
    bool ok = t4.at(3, -4) == CohomValue::exact(1);
    bool p5_nonzero = false;
    for (int t = w.lo; t <= w.hi; ++t) {
      for (int i : {1, 2}) ok = ok && t4.at(i, t) == CohomValue::exact(0);
      for (int i : {1, 2, 3}) ok = ok && t5.at(i, t) == CohomValue::exact(0);
      if (t5.at(4, t).is_exact() && t5.at(4, t).lo > 0) {
        if (!p5_nonzero) d << "h^4(P5(" << t << ")) = " << t5.at(4, t).lo << "; ";
        p5_nonzero = true;
      }
    }
    d << "h^3(P4(-4)) = " << t4.at(3, -4).to_string();
    return ok && p5_nonzero;
  });

  run(8, "500 random split bundles pass both criteria and peel back to their summands", [&](std::ostream& d) {
    rnd::Rng rng(kSeed + 8);
    int bad = 0;
    for (int k = 0; k < 500; ++k) {
      const int n = 3 + k % 4;
      const auto e = rnd::split_bundle(n, rng);
      const auto eg = eg_check(calc, e);
      const auto kn = knorrer_check(calc, e);
      const Window w = SheafCalculus::safe_window(e);
      const bool ok = eg.kind == VerdictKind::Split && kn.kind == VerdictKind::Split &&
                      kn.decomposition == e.split_generators() && eg.decomposition == e.split_generators() &&
                      recombined(calc, n, kn.decomposition, w) == calc.table(e, w);
      if (!ok) ++bad;
    }
    d << bad << " failures / 500";
    return bad == 0;
  });

  run(9, "Qreg of a direct sum is the maximum, 100 random pairs", [&](std::ostream& d) {
    rnd::Rng rng(kSeed + 9);
    int bad = 0;
    for (int k = 0; k < 100; ++k) {
      const int n = 3 + k % 4;
      const auto f = rnd::split_bundle(n, rng);
      const auto g = rnd::split_bundle(n, rng);
      const auto fg = qreg(calc, normalize(SheafExpr::sum({f, g}))).value;
      const auto expected = RegValue::finite(std::max(qreg(calc, f).value.value, qreg(calc, g).value.value));
      if (!(fg == expected)) ++bad;
    }
    d << bad << " mismatches / 100";
    return bad == 0;
  });

  run(10, "skyscrapers have Qreg = Reg = -inf, split bundles finite values", [&](std::ostream& d) {
    bool ok = true;
    for (int n = 2; n <= 6; ++n) {
      for (int l = 1; l <= 5; ++l) {
        const auto p = SheafExpr::atom(Quadric(n), {Generator::skyscraper(l)});
        ok = ok && qreg(calc, p).value.kind == RegKind::MinusInfinity;
        ok = ok && cm_reg(calc, p).value.kind == RegKind::MinusInfinity;
      }
    }
    int infinite = 0;
    for (int n = 3; n <= 6; ++n) {
      for (const auto& f : corpus(n, kSeed + 10, 25)) {
        if (!qreg(calc, f).value.is_finite() || !cm_reg(calc, f).value.is_finite()) ++infinite;
      }
    }
    d << infinite << " non-finite values among 100 split bundles";
    return ok && infinite == 0;
  });

  run(11, "LES solver intervals equal exhaustively enumerated sets on 1000 instances", [&](std::ostream& d) {
    rnd::Rng rng(kSeed + 11);
    int bad = 0;
    int feasible = 0;
    for (int k = 0; k < 1000; ++k) {
      const auto inst = rnd::les_instance(rng, 12, 6);
      const auto brute = qtest::enumerate_les(inst.slots, 6);
      if (!brute) {
        try {
          les::solve(inst);
          ++bad;
        } catch (const InconsistencyError&) {
        }
        continue;
      }
      ++feasible;
      const auto sol = les::solve(inst);
      for (std::size_t j = 0; j < inst.slots.size(); ++j) {
        const auto& s = (*brute)[j];
        const bool same = sol.slots[j].lo == *s.begin() && sol.slots[j].hi == *s.rbegin() &&
                          static_cast<Dim>(s.size()) == sol.slots[j].hi - sol.slots[j].lo + 1;
        if (!same) ++bad;
      }
    }
    d << bad << " mismatches, " << feasible << " feasible instances";
    return bad == 0;
  });

  return failures == 0 ? 0 : 1;
}
