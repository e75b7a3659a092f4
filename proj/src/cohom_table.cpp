#include "qsheaf/cohom_table.hpp"

#include <stdexcept>

namespace qsheaf {

CohomTable::CohomTable(int n, Window window)
    : n_(n), window_(window), cols_(static_cast<std::size_t>(std::max(0, window.width())),
                                    std::vector<CohomValue>(static_cast<std::size_t>(n + 1))) {
  if (window.hi < window.lo) throw StructuralError("empty window");
}

CohomValue CohomTable::at(int i, int t) const {
  if (i < 0 || i > n_) return CohomValue::exact(0);
  return column(t)[static_cast<std::size_t>(i)];
}

void CohomTable::set(int i, int t, CohomValue v) {
  if (i < 0 || i > n_) throw std::out_of_range("cohomological index out of range");
  if (!window_.contains(t)) throw std::out_of_range("twist " + std::to_string(t) + " outside table window");
  cols_[static_cast<std::size_t>(t - window_.lo)][static_cast<std::size_t>(i)] = v;
}

const std::vector<CohomValue>& CohomTable::column(int t) const {
  if (!window_.contains(t)) throw std::out_of_range("twist " + std::to_string(t) + " outside table window");
  return cols_[static_cast<std::size_t>(t - window_.lo)];
}

void CohomTable::set_column(int t, std::vector<CohomValue> col) {
  if (!window_.contains(t)) throw std::out_of_range("twist " + std::to_string(t) + " outside table window");
  if (col.size() != static_cast<std::size_t>(n_ + 1)) throw std::invalid_argument("column size mismatch");
  cols_[static_cast<std::size_t>(t - window_.lo)] = std::move(col);
}

bool CohomTable::exact_everywhere() const noexcept {
  for (const auto& c : cols_) {
    for (const auto& v : c) {
      if (!v.is_exact()) return false;
    }
  }
  return true;
}

Dim CohomTable::euler_char(int t) const {
  Dim chi = 0;
  const auto& c = column(t);
  for (int i = 0; i <= n_; ++i) {
    const auto& v = c[static_cast<std::size_t>(i)];
    if (!v.is_exact()) {
      throw AmbiguityError("euler characteristic over an interval cell",
                           {Cell{i, t, std::nullopt, v}.to_string()});
    }
    chi += (i % 2 ? -1 : 1) * v.lo;
  }
  return chi;
}

std::vector<Cell> CohomTable::interval_cells() const {
  std::vector<Cell> out;
  for (int t = window_.lo; t <= window_.hi; ++t) {
    for (int i = 0; i <= n_; ++i) {
      const auto v = at(i, t);
      if (!v.is_exact()) out.push_back({i, t, std::nullopt, v});
    }
  }
  return out;
}

const CohomTable& BundleProfile::twisted_for(SpinorLabel b) const {
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (labels[k] == b) return twisted[k];
  }
  throw StructuralError("profile has no table for label " + to_string(b));
}

}  // namespace qsheaf
