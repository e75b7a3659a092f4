#include "qsheaf/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsheaf::oracle {

namespace {

// Monomials of total degree `deg` in `vars` variables, one leaf at a time.
Dim count_monomials(int vars, int deg) {
  if (vars == 1) return 1;
  Dim total = 0;
  for (int e = 0; e <= deg; ++e) total += count_monomials(vars - 1, deg - e);
  return total;
}

Dim chi_projective(int N, Dim t) {
  // (t+1)(t+2)...(t+N) / N!
  __int128 num = 1;
  __int128 den = 1;
  for (int k = 1; k <= N; ++k) {
    num *= (t + k);
    den *= k;
  }
  return static_cast<Dim>(num / den);
}

}  // namespace

Dim monomial_h0(int n, int t) {
  if (t < 0) return 0;
  const int vars = n + 2;
  Dim total = 0;
  for (int e0 = 0; e0 <= std::min(1, t); ++e0) total += count_monomials(vars - 1, t - e0);
  return total;
}

Dim euler_via_ambient(int n, int t) { return chi_projective(n + 1, t) - chi_projective(n + 1, Dim{t} - 2); }

bool serre_check(const CohomTable& f, const CohomTable& dual, int n) {
  for (int t = f.window().lo; t <= f.window().hi; ++t) {
    const int s = -n - t;
    if (!dual.window().contains(s)) continue;
    for (int i = 0; i <= n; ++i) {
      const CohomValue a = f.at(i, t);
      const CohomValue b = dual.at(n - i, s);
      if (!a.is_exact() || !b.is_exact()) {
        throw AmbiguityError("Serre duality check over interval cells",
                             {Cell{i, t, std::nullopt, a}.to_string(), Cell{n - i, s, std::nullopt, b}.to_string()});
      }
      if (a.lo != b.lo) return false;
    }
  }
  return true;
}

}  // namespace qsheaf::oracle
