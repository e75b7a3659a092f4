#include "qsheaf/types.hpp"

namespace qsheaf {

std::string to_string(SpinorLabel label) {
  switch (label) {
    case SpinorLabel::Single: return "S";
    case SpinorLabel::First: return "S1";
    case SpinorLabel::Second: return "S2";
  }
  return "?";
}

Quadric::Quadric(int n) : n_(n) {
  if (n < 2 || n > kMaxDim) {
    throw StructuralError("quadric dimension " + std::to_string(n) + " outside [2, " +
                          std::to_string(kMaxDim) + "]");
  }
}

std::vector<SpinorLabel> Quadric::labels() const {
  if (even()) return {SpinorLabel::First, SpinorLabel::Second};
  return {SpinorLabel::Single};
}

bool Quadric::valid_label(SpinorLabel label) const noexcept {
  return even() ? label != SpinorLabel::Single : label == SpinorLabel::Single;
}

SpinorLabel Quadric::partner(SpinorLabel label) const noexcept {
  if (!even()) return label;
  return label == SpinorLabel::First ? SpinorLabel::Second : SpinorLabel::First;
}

Dim Quadric::spinor_rank() const noexcept { return Dim{1} << ((n_ - 1) / 2); }

Generator Generator::skyscraper(int length) {
  if (length < 1) throw StructuralError("skyscraper length must be >= 1");
  return {GeneratorKind::Skyscraper, SpinorLabel::Single, 0, length};
}

Generator Generator::twisted(int k) const {
  Generator g = *this;
  if (kind != GeneratorKind::Skyscraper) g.twist += k;
  return g;
}

Dim Generator::rank(const Quadric& q) const {
  switch (kind) {
    case GeneratorKind::Line: return 1;
    case GeneratorKind::Spinor: return q.spinor_rank();
    case GeneratorKind::Skyscraper: return 0;
  }
  return 0;
}

std::string Generator::to_string() const {
  std::string base;
  switch (kind) {
    case GeneratorKind::Line: base = "O"; break;
    case GeneratorKind::Spinor: base = qsheaf::to_string(label); break;
    case GeneratorKind::Skyscraper: return "Pt[" + std::to_string(length) + "]";
  }
  if (twist != 0) base += "(" + std::to_string(twist) + ")";
  return base;
}

CohomValue::CohomValue(Dim lo_, Dim hi_) : lo(lo_), hi(hi_) {
  if (lo < 0 || hi < lo) {
    throw StructuralError("invalid cohomology interval [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
  }
}

std::string CohomValue::to_string() const {
  if (is_exact()) return std::to_string(lo);
  return std::to_string(lo) + ".." + std::to_string(hi);
}

std::string Cell::to_string() const {
  std::string s = "h^" + std::to_string(i) + "(F(" + std::to_string(t) + ")";
  if (label) s += " x " + qsheaf::to_string(*label);
  return s + ") = " + value.to_string();
}

}  // namespace qsheaf
