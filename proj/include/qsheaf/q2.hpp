#pragma once

#include <vector>

#include "qsheaf/types.hpp"

// Q_2 = P^1 x P^1: Kunneth cohomology and the Hoffman-Wang diagonal regularity check.
namespace qsheaf::q2 {

struct Bidegree {
  int a = 0;
  int b = 0;

  Bidegree operator+(const Bidegree& o) const { return {a + o.a, b + o.b}; }
  Bidegree twisted(int t) const { return {a + t, b + t}; }
  auto operator<=>(const Bidegree&) const = default;
};

Dim p1_cohom(int d, int i);
Dim kunneth_cohom(int a, int b, int i);
inline Dim kunneth_cohom(Bidegree d, int i) { return kunneth_cohom(d.a, d.b, i); }

/// Sigma_1 = O(1,0), Sigma_2 = O(0,1).
Bidegree spinor_bidegree(SpinorLabel label);
/// Bidegree of a non-skyscraper generator on Q_2.
Bidegree generator_bidegree(const Generator& g);

/// Direct sum of line bundles O(a_j, b_j) on P^1 x P^1.
struct BidegreeSum {
  std::vector<Bidegree> summands;

  Dim cohom(int p, int q, int i) const;
};

/// H^1(F(m-1,m-1)) = H^2(F(m-1,m-2)) = H^2(F(m-2,m-1)) = 0.
bool hw_regular(const BidegreeSum& f, int p, int q);

/// Qregularity on Q_2 evaluated through Sigma_b = O(1,0), O(0,1):
/// H^1(F(m-1,m-1)) = 0 and H^2(F(m,m) (x) Sigma_b(-2,-2)) = 0 for both b.
bool is_qregular(const BidegreeSum& f, int m);

/// Bidegree form of a split expression on Q_2 (skyscrapers rejected).
BidegreeSum from_generators(const std::vector<Generator>& gens);

}  // namespace qsheaf::q2
