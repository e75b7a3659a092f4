#include "qsheaf/random.hpp"

namespace qsheaf::rnd {

namespace {
int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
}  // namespace

SheafExpr split_bundle(int n, Rng& rng, const SplitSpec& spec) {
  const Quadric q(n);
  const auto labels = q.labels();
  const int count = uniform(rng, spec.min_summands, spec.max_summands);
  std::vector<Generator> gens;
  for (int k = 0; k < count; ++k) {
    const int twist = uniform(rng, spec.min_twist, spec.max_twist);
    if (uniform(rng, 0, 1) == 0) {
      gens.push_back(Generator::line(twist));
    } else {
      gens.push_back(Generator::spinor(labels[uniform(rng, 0, static_cast<int>(labels.size()) - 1)], twist));
    }
  }
  return SheafExpr::atom(q, std::move(gens));
}

q2::BidegreeSum bidegree_sum(Rng& rng, int max_summands, int lo, int hi) {
  q2::BidegreeSum s;
  const int count = uniform(rng, 1, max_summands);
  for (int k = 0; k < count; ++k) s.summands.push_back({uniform(rng, lo, hi), uniform(rng, lo, hi)});
  return s;
}

les::LesInstance les_instance(Rng& rng, int max_len, Dim max_dim) {
  const int len = uniform(rng, 1, max_len);
  // ranks r_0..r_{len-2}, r_{-1} = r_{len-1} = 0, each slot kept <= max_dim
  std::vector<Dim> r(static_cast<std::size_t>(len), 0);
  for (int k = 0; k + 1 < len; ++k) {
    const Dim before = k == 0 ? 0 : r[static_cast<std::size_t>(k - 1)];
    r[static_cast<std::size_t>(k)] = uniform(rng, 0, static_cast<int>(max_dim - before));
  }
  les::LesInstance inst;
  for (int k = 0; k < len; ++k) {
    const Dim dim = (k == 0 ? 0 : r[static_cast<std::size_t>(k - 1)]) + r[static_cast<std::size_t>(k)];
    switch (uniform(rng, 0, 7)) {
      case 0:
      case 1: inst.slots.push_back({0, max_dim}); break;  // hidden
      case 2: {
        const int a = uniform(rng, 0, static_cast<int>(max_dim));
        const int b = uniform(rng, 0, static_cast<int>(max_dim));
        inst.slots.push_back({std::min(a, b), std::max(a, b)});  // arbitrary range, maybe infeasible
        break;
      }
      case 3:
        inst.slots.push_back(les::SlotRange::known(uniform(rng, 0, static_cast<int>(max_dim))));  // perturbed
        break;
      default: inst.slots.push_back(les::SlotRange::known(dim)); break;
    }
  }
  return inst;
}

}  // namespace qsheaf::rnd
