#include "qsheaf/facts.hpp"

namespace qsheaf {

FactRegistry FactRegistry::standard() {
  FactRegistry reg;
  for (int n = 2; n <= kMaxDim; ++n) reg.add_duality(bott::duality_rule(n));
  for (int n = 3; n <= kMaxDim; ++n) {
    const Quadric q(n);
    const auto rule = bott::duality_rule(n);
    for (auto a : q.labels()) {
      for (auto b : q.labels()) {
        // Sigma_a (x) Sigma_b(-1) = Hom(Sigma_{d(b)}, Sigma_a)
        for (int i = 0; i <= n; ++i) {
          Fact f;
          f.n = n;
          f.cell = {a, b, -1, i};
          f.value = (i == 0 && a == rule.dual(b)) ? 1 : 0;
          f.provenance = "classical: the spinor bundles form an exceptional, mutually orthogonal block";
          reg.add(std::move(f));
        }
      }
      // H^1(Sigma_a(-1) (x) Sigma_c^v) != 0 for c = a'
      Fact f;
      f.n = n;
      f.cell = {a, rule.dual(q.partner(a)), -2, 1};
      f.nonvanishing = true;
      f.provenance = "imported: H^1(Sigma(-1) (x) Sigma^v) is nonzero";
      reg.add(std::move(f));
    }
  }
  return reg;
}

std::vector<Fact> FactRegistry::facts_for(int n) const {
  std::vector<Fact> out;
  for (const auto& f : facts_) {
    if (f.n == n) out.push_back(f);
  }
  return out;
}

const bott::DualityRule& FactRegistry::duality(int n) const {
  for (const auto& r : duality_) {
    if (r.n == n) return r;
  }
  throw StructuralError("no duality rule registered for Q" + std::to_string(n));
}

}  // namespace qsheaf
