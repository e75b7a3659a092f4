#include <sstream>

#include "qsheaf/calculus.hpp"
#include "qsheaf/cli.hpp"
#include "qsheaf/parse.hpp"
#include "qsheaf/q2.hpp"
#include "qsheaf/random.hpp"
#include "qsheaf/regularity.hpp"
#include "qsheaf/splitting.hpp"

namespace qsheaf {

namespace {

SheafExpr line_on(int n, int a) { return SheafExpr::atom(Quadric(n), {Generator::line(a)}); }
SheafExpr spinor_on(int n, int a) {
  return SheafExpr::atom(Quadric(n), {Generator::spinor(Quadric(n).labels().front(), a)});
}

template <class F>
SuiteItem item(const std::string& name, F&& body) {
  SuiteItem it{name, false, ""};
  try {
    std::ostringstream detail;
    it.pass = body(detail);
    it.detail = detail.str();
  } catch (const std::exception& e) {
    it.pass = false;
    it.detail = std::string("exception: ") + e.what();
  }
  return it;
}

}  // namespace

std::vector<SuiteItem> verify_paper(std::uint64_t seed) {
  SheafCalculus calc;
  std::vector<SuiteItem> out;

  out.push_back(item("qreg of O and spinors is 0 on Q3..Q6", [&](std::ostream& d) {
    bool ok = true;
    for (int n = 3; n <= 6; ++n) {
      const auto o = qreg(calc, line_on(n, 0)).value;
      const auto s = qreg(calc, spinor_on(n, 0)).value;
      ok = ok && o == RegValue::finite(0) && s == RegValue::finite(0);
      // O is not (-1)-Qregular: h^n(O(-1) x Sigma(-n)) != 0; h^n(O x Sigma(-n)) = h^0(Sigma^v) = 0
      const auto b = Quadric(n).labels().front();
      ok = ok && calc.spinor_twisted_cohom(line_on(n, 0), b, -1 - n, n).certainly_nonzero();
      ok = ok && calc.spinor_twisted_cohom(line_on(n, 0), b, -n, n).is_zero();
      d << "Q" << n << ": qreg(O) = " << o.to_string() << ", qreg(S) = " << s.to_string() << "; ";
    }
    return ok;
  }));

  out.push_back(item("Reg of O is 1 and of spinors is 0 on Q3..Q6", [&](std::ostream& d) {
    bool ok = true;
    for (int n = 3; n <= 6; ++n) {
      const auto o = cm_reg(calc, line_on(n, 0)).value;
      const auto s = cm_reg(calc, spinor_on(n, 0)).value;
      ok = ok && o == RegValue::finite(1) && s == RegValue::finite(0);
      d << "Q" << n << ": " << o.to_string() << ", " << s.to_string() << "; ";
    }
    return ok;
  }));

  out.push_back(item("Qreg <= Reg <= Qreg + 1 on random split bundles", [&](std::ostream& d) {
    rnd::Rng rng(seed);
    int bad = 0;
    for (int n = 3; n <= 6; ++n) {
      for (int k = 0; k < 25; ++k) {
        if (!check_sandwich(calc, rnd::split_bundle(n, rng)).holds) ++bad;
      }
    }
    d << bad << " violations in 100 bundles";
    return bad == 0;
  }));

  out.push_back(item("Qregularity on Q2 agrees with (m,m)-regularity", [&](std::ostream& d) {
    rnd::Rng rng(seed + 1);
    int bad = 0;
    for (int k = 0; k < 50; ++k) {
      const auto f = rnd::split_bundle(2, rng);
      const auto bd = q2::from_generators(f.split_generators());
      for (int m = -5; m <= 5; ++m) {
        if (is_qregular(calc, f, m).holds != q2::hw_regular(bd, m, m)) ++bad;
      }
    }
    d << bad << " disagreements";
    return bad == 0;
  }));

  out.push_back(item("P4 and P5 have nonzero H^{n-1}_*", [&](std::ostream& d) {
    const auto p4 = parse("Q4: quot(O, S1 + S2)");
    const auto p5 = parse("Q5: quot(O, S)");
    const auto r4 = eg_check(calc, p4);
    const auto r5 = eg_check(calc, p5);
    const bool ok = r4.kind == VerdictKind::Obstructed && r4.witness && r4.witness->i == 3 &&
                    r4.witness->t == -4 && r4.witness->value == CohomValue::exact(1) &&
                    r5.kind == VerdictKind::Obstructed && r5.witness && r5.witness->i == 4;
    if (r4.witness) d << "P4 " << r4.witness->to_string() << "; ";
    if (r5.witness) d << "P5 " << r5.witness->to_string();
    return ok;
  }));

  out.push_back(item("split bundles peel back to their summands", [&](std::ostream& d) {
    rnd::Rng rng(seed + 2);
    int bad = 0;
    for (int k = 0; k < 40; ++k) {
      const int n = 3 + static_cast<int>(rng() % 4);
      const auto f = rnd::split_bundle(n, rng);
      const auto rep = knorrer_check(calc, f);
      if (rep.kind != VerdictKind::Split || rep.decomposition != f.split_generators()) ++bad;
    }
    d << bad << " failures in 40 bundles";
    return bad == 0;
  }));
  return out;
}

}  // namespace qsheaf
