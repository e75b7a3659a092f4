#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qsheaf/expr.hpp"
#include "qsheaf/les.hpp"
#include "qsheaf/q2.hpp"

namespace qsheaf::rnd {

using Rng = std::mt19937_64;

struct SplitSpec {
  int min_summands = 1;
  int max_summands = 5;
  int min_twist = -4;
  int max_twist = 4;
};

/// Sum of line and spinor twists on Q_n.
SheafExpr split_bundle(int n, Rng& rng, const SplitSpec& spec = {});
/// Sum of O(a, b) on P^1 x P^1 with entries in [lo, hi].
q2::BidegreeSum bidegree_sum(Rng& rng, int max_summands, int lo, int hi);
/// Exact instance drawn from a random rank sequence, then some slots hidden.
les::LesInstance les_instance(Rng& rng, int max_len, Dim max_dim);

}  // namespace qsheaf::rnd
