#pragma once

#include <string>
#include <vector>

#include "qsheaf/types.hpp"

namespace qsheaf {

/// Dense grid of cohomology values over a twist window, i = 0..n.
class CohomTable {
 public:
  CohomTable(int n, Window window);

  int n() const noexcept { return n_; }
  const Window& window() const noexcept { return window_; }

  /// Exact 0 for i outside [0, n]; throws std::out_of_range for t outside the window.
  CohomValue at(int i, int t) const;
  void set(int i, int t, CohomValue v);
  const std::vector<CohomValue>& column(int t) const;
  void set_column(int t, std::vector<CohomValue> col);

  bool exact_everywhere() const noexcept;
  /// Alternating sum at t; throws AmbiguityError when a cell is a proper interval.
  Dim euler_char(int t) const;
  std::vector<Cell> interval_cells() const;

  bool operator==(const CohomTable&) const = default;

 private:
  int n_;
  Window window_;
  std::vector<std::vector<CohomValue>> cols_;
};

/// Cohomology of F and of F (x) Sigma_b for every spinor label b, over one window.
struct BundleProfile {
  int n = 0;
  Window window;
  CohomTable plain;
  std::vector<SpinorLabel> labels;
  std::vector<CohomTable> twisted;  // parallel to labels

  const CohomTable& twisted_for(SpinorLabel b) const;
};

}  // namespace qsheaf
