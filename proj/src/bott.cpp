#include "qsheaf/bott.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "qsheaf/q2.hpp"

namespace qsheaf::bott {

Dim binomial(Dim x, int k) {
  if (k < 0) return 0;
  __int128 acc = 1;
  for (int j = 0; j < k; ++j) {
    acc = acc * (x - j) / (j + 1);
    if (acc > INT64_MAX || acc < INT64_MIN) {
      throw std::overflow_error("binomial C(" + std::to_string(x) + ", " + std::to_string(k) +
                                ") overflows 64 bits");
    }
  }
  return static_cast<Dim>(acc);
}

namespace {

Dim h0_line(int n, Dim t) {
  if (t < 0) return 0;
  return binomial(t + n + 1, n + 1) - binomial(t + n - 1, n + 1);
}

void check_label(int n, SpinorLabel label) {
  if (!Quadric(n).valid_label(label)) {
    throw StructuralError("spinor label " + to_string(label) + " is invalid on Q" + std::to_string(n));
  }
}

// h0 of Sigma_First / Sigma_Second (or Sigma twice) for t = 0, 1, ...
struct SpinorH0 {
  std::mutex m;
  std::unordered_map<int, std::vector<std::array<Dim, 2>>> by_n;

  Dim get(int n, SpinorLabel label, Dim t) {
    if (t < 0) return 0;
    const int idx = label == SpinorLabel::Second ? 1 : 0;
    std::lock_guard lock(m);
    auto& v = by_n[n];
    const Dim two_r = 2 * Quadric(n).spinor_rank();
    const bool even = n % 2 == 0;
    while (static_cast<Dim>(v.size()) <= t) {
      const Dim s = static_cast<Dim>(v.size());
      const std::array<Dim, 2> prev = s == 0 ? std::array<Dim, 2>{0, 0} : v.back();
      const Dim mid = two_r * h0_line(n, s);
      // the partner of label k is the other label on even quadrics
      v.push_back({mid - prev[even ? 1 : 0], mid - prev[even ? 0 : 1]});
    }
    return v[static_cast<std::size_t>(t)][static_cast<std::size_t>(idx)];
  }
};

SpinorH0& spinor_h0_cache() {
  static SpinorH0 c;
  return c;
}

}  // namespace

Dim line_cohom(int n, int t, int i) {
  if (i == 0) return h0_line(n, t);
  if (i == n) return h0_line(n, -static_cast<Dim>(n) - t);
  return 0;
}

Dim spinor_rank(int n, SpinorLabel label) {
  check_label(n, label);
  return Quadric(n).spinor_rank();
}

Dim spinor_cohom(int n, SpinorLabel label, int t, int i) {
  check_label(n, label);
  if (i == 0) return spinor_h0_cache().get(n, label, t);
  if (i == n) {
    const SpinorLabel d = duality_rule(n).dual(label);
    return spinor_h0_cache().get(n, d, -1 - static_cast<Dim>(t) - n);
  }
  return 0;
}

Dim generator_cohom(const Quadric& q, const Generator& g, int t, int i) {
  if (i < 0 || i > q.n()) return 0;
  switch (g.kind) {
    case GeneratorKind::Line: return line_cohom(q.n(), g.twist + t, i);
    case GeneratorKind::Spinor: return spinor_cohom(q.n(), g.label, g.twist + t, i);
    case GeneratorKind::Skyscraper: return i == 0 ? g.length : 0;
  }
  return 0;
}

Dim euler_char_generator(const Quadric& q, const Generator& g, int t) {
  const int n = q.n();
  switch (g.kind) {
    case GeneratorKind::Line: {
      const Dim s = static_cast<Dim>(g.twist) + t;
      return binomial(s + n + 1, n + 1) - binomial(s + n - 1, n + 1);
    }
    case GeneratorKind::Spinor: {
      Dim chi = 0;
      for (int i = 0; i <= n; ++i) chi += (i % 2 ? -1 : 1) * generator_cohom(q, g, t, i);
      return chi;
    }
    case GeneratorKind::Skyscraper: return g.length;
  }
  return 0;
}

SpinorLabel DualityRule::dual(SpinorLabel a) const noexcept {
  if (!swaps) return a;
  if (a == SpinorLabel::First) return SpinorLabel::Second;
  if (a == SpinorLabel::Second) return SpinorLabel::First;
  return a;
}

Generator DualityRule::dual(const Generator& g) const {
  switch (g.kind) {
    case GeneratorKind::Line: return Generator::line(-g.twist);
    case GeneratorKind::Spinor: return Generator::spinor(dual(g.label), -1 - g.twist);
    case GeneratorKind::Skyscraper: break;
  }
  throw StructuralError("a skyscraper has no locally free dual");
}

DualityRule duality_rule(int n) {
  Quadric q(n);
  DualityRule r;
  r.n = n;
  r.swaps = n % 4 == 2;
  r.provenance = "classical: S_a^v = S_{d(a)}(1) in the untwisted convention, d = swap iff n = 2 mod 4";
  return r;
}

int DualityPinning::surviving() const {
  int s = 0;
  for (bool b : survivors) s += b ? 1 : 0;
  return s;
}

namespace {

// h^n(Sigma_a(t)) from the top of the spinor sequence alone:
// H^n(Sigma_{a'}(t-1)) -> H^n(O(t))^{2r} -> H^n(Sigma_a(t)) -> 0 with H^{n-1}(Sigma_a(t)) = 0,
// started where H^n(O(t)) = 0 forces H^n(Sigma_a(t)) = 0.
std::unordered_map<int, std::unordered_map<int, Dim>> top_by_sequence(int n, int t_lo) {
  Quadric q(n);
  const Dim two_r = 2 * q.spinor_rank();
  std::unordered_map<int, std::unordered_map<int, Dim>> top;
  const int start = -n + 1;
  for (auto a : q.labels()) top[static_cast<int>(a)][start] = 0;
  for (int t = start; t > t_lo; --t) {
    for (auto a : q.labels()) {
      const SpinorLabel ap = q.partner(a);
      top[static_cast<int>(ap)][t - 1] = two_r * line_cohom(n, t, n) - top[static_cast<int>(a)][t];
    }
  }
  return top;
}

}  // namespace

DualityPinning pin_duality(int n, int window) {
  Quadric q(n);
  DualityPinning p;
  p.n = n;
  const int t_lo = -window - n - 2;
  auto top = top_by_sequence(n, t_lo);
  for (int cand = 0; cand < 2; ++cand) {
    DualityRule r{n, cand == 1, "candidate"};
    bool ok = true;
    for (auto a : q.labels()) {
      for (int t = -window; t <= window && ok; ++t) {
        const Dim seq = t >= -n + 1 ? 0 : top[static_cast<int>(a)][t];
        const Dim serre = spinor_h0_cache().get(n, r.dual(a), -1 - static_cast<Dim>(t) - n);
        ok = seq == serre;
      }
    }
    if (ok && n == 2) {
      for (auto a : q.labels()) {
        for (auto b : q.labels()) {
          const auto da = q2::spinor_bidegree(a);
          const auto db = q2::spinor_bidegree(b);
          const Dim hom = q2::kunneth_cohom(da.a + db.a - 1, da.b + db.b - 1, 0);
          ok = ok && hom == (a == r.dual(b) ? 1 : 0);
        }
      }
    }
    p.survivors.push_back(ok);
  }
  return p;
}

void self_check_duality(int max_n) {
  const auto base = pin_duality(2);
  if (base.surviving() != 1) throw std::logic_error("duality self-check: Q2 does not pin a unique rule");
  for (int n = 2; n <= max_n; ++n) {
    const auto rule = duality_rule(n);
    const auto p = pin_duality(n);
    if (!p.survivors[rule.swaps ? 1 : 0]) {
      throw std::logic_error("duality self-check: registry rule fails on Q" + std::to_string(n));
    }
  }
}

}  // namespace qsheaf::bott
