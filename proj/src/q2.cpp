#include "qsheaf/q2.hpp"

namespace qsheaf::q2 {

Dim p1_cohom(int d, int i) {
  if (i == 0) return d >= 0 ? Dim{d} + 1 : 0;
  if (i == 1) return d <= -2 ? -Dim{d} - 1 : 0;
  return 0;
}

Dim kunneth_cohom(int a, int b, int i) {
  Dim s = 0;
  for (int p = 0; p <= 1; ++p) {
    const int r = i - p;
    if (r < 0 || r > 1) continue;
    s += p1_cohom(a, p) * p1_cohom(b, r);
  }
  return s;
}

Bidegree spinor_bidegree(SpinorLabel label) {
  switch (label) {
    case SpinorLabel::First: return {1, 0};
    case SpinorLabel::Second: return {0, 1};
    case SpinorLabel::Single: break;
  }
  throw StructuralError("Q2 spinors carry label 1 or 2");
}

Bidegree generator_bidegree(const Generator& g) {
  switch (g.kind) {
    case GeneratorKind::Line: return {g.twist, g.twist};
    case GeneratorKind::Spinor: return spinor_bidegree(g.label).twisted(g.twist);
    case GeneratorKind::Skyscraper: break;
  }
  throw StructuralError("a skyscraper has no bidegree");
}

Dim BidegreeSum::cohom(int p, int q, int i) const {
  Dim s = 0;
  for (const auto& d : summands) s += kunneth_cohom(d.a + p, d.b + q, i);
  return s;
}

bool hw_regular(const BidegreeSum& f, int p, int q) {
  return f.cohom(p - 1, q - 1, 1) == 0 && f.cohom(p - 1, q - 2, 2) == 0 && f.cohom(p - 2, q - 1, 2) == 0;
}

bool is_qregular(const BidegreeSum& f, int m) {
  if (f.cohom(m - 1, m - 1, 1) != 0) return false;
  for (auto label : {SpinorLabel::First, SpinorLabel::Second}) {
    const Bidegree s = spinor_bidegree(label);
    if (f.cohom(m + s.a - 2, m + s.b - 2, 2) != 0) return false;
  }
  return true;
}

BidegreeSum from_generators(const std::vector<Generator>& gens) {
  BidegreeSum s;
  for (const auto& g : gens) s.summands.push_back(generator_bidegree(g));
  return s;
}

}  // namespace qsheaf::q2
