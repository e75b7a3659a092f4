#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsheaf/errors.hpp"

namespace qsheaf {

using Dim = std::int64_t;

/// Spinor labels. Odd quadrics carry a single spinor bundle, even ones carry two.
enum class SpinorLabel : std::uint8_t { Single = 0, First = 1, Second = 2 };

std::string to_string(SpinorLabel label);

/// Smooth quadric hypersurface Q_n in P^{n+1}.
class Quadric {
 public:
  static constexpr int kMaxDim = 16;

  explicit Quadric(int n);

  int n() const noexcept { return n_; }
  bool even() const noexcept { return n_ % 2 == 0; }
  std::vector<SpinorLabel> labels() const;
  bool valid_label(SpinorLabel label) const noexcept;
  /// The label paired with `label` in the spinor sequence 0 -> S_a(-1) -> O^{2r} -> S_{a'} -> 0.
  SpinorLabel partner(SpinorLabel label) const noexcept;
  Dim spinor_rank() const noexcept;

  auto operator<=>(const Quadric&) const = default;

 private:
  int n_;
};

enum class GeneratorKind : std::uint8_t { Line = 0, Spinor = 1, Skyscraper = 2 };

/// Atomic sheaf: O(a), Sigma_label(a) (Sigma = S(1) convention) or a skyscraper of length l.
struct Generator {
  GeneratorKind kind = GeneratorKind::Line;
  SpinorLabel label = SpinorLabel::Single;
  int twist = 0;
  int length = 0;

  static Generator line(int twist) { return {GeneratorKind::Line, SpinorLabel::Single, twist, 0}; }
  static Generator spinor(SpinorLabel label, int twist) {
    return {GeneratorKind::Spinor, label, twist, 0};
  }
  static Generator skyscraper(int length);

  /// Twisting a skyscraper is the identity.
  Generator twisted(int k) const;
  Dim rank(const Quadric& q) const;
  std::string to_string() const;

  auto operator<=>(const Generator&) const = default;
};

/// Closed interval [lo, hi] of nonnegative integers; exact when lo == hi.
struct CohomValue {
  Dim lo = 0;
  Dim hi = 0;

  CohomValue() = default;
  CohomValue(Dim lo_, Dim hi_);
  static CohomValue exact(Dim v) { return CohomValue(v, v); }

  bool is_exact() const noexcept { return lo == hi; }
  bool is_zero() const noexcept { return hi == 0; }
  bool certainly_nonzero() const noexcept { return lo > 0; }
  bool undecided() const noexcept { return lo == 0 && hi > 0; }
  bool contains(Dim v) const noexcept { return lo <= v && v <= hi; }
  std::string to_string() const;

  CohomValue operator+(const CohomValue& o) const { return {lo + o.lo, hi + o.hi}; }
  CohomValue operator*(Dim k) const { return {lo * k, hi * k}; }
  bool operator==(const CohomValue&) const = default;
};

/// Inclusive twist range.
struct Window {
  int lo = 0;
  int hi = 0;

  int width() const noexcept { return hi - lo + 1; }
  bool contains(int t) const noexcept { return lo <= t && t <= hi; }
  bool operator==(const Window&) const = default;
};

/// One cohomology cell, optionally of the spinor twist F (x) Sigma_label.
struct Cell {
  int i = 0;
  int t = 0;
  std::optional<SpinorLabel> label;
  CohomValue value;

  std::string to_string() const;
};

}  // namespace qsheaf
