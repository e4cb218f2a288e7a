#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace loopcut {

/// Nonnegative vertex weight with a distinguished infinite value.
///
/// Infinite compares greater than every finite weight, and the ratio
/// infinite/d loses every minimum-ratio comparison against a finite ratio,
/// so infinite-weight vertices are never selected by the greedy solvers.
class Weight {
 public:
  constexpr Weight() = default;  // zero

  static Weight finite(double v) {
    if (!std::isfinite(v) || v < 0.0)
      throw std::invalid_argument("finite weight must be a nonnegative real");
    Weight w;
    w.value_ = v;
    return w;
  }

  static constexpr Weight infinite() {
    Weight w;
    w.infinite_ = true;
    return w;
  }

  bool is_infinite() const { return infinite_; }

  /// Finite value. Only meaningful when !is_infinite().
  double value() const { return value_; }

  double as_double() const {
    return infinite_ ? std::numeric_limits<double>::infinity() : value_;
  }

  Weight& operator+=(Weight o) {
    infinite_ = infinite_ || o.infinite_;
    value_ = infinite_ ? 0.0 : value_ + o.value_;
    return *this;
  }
  friend Weight operator+(Weight a, Weight b) { return a += b; }

  friend bool operator==(Weight a, Weight b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend bool operator!=(Weight a, Weight b) { return !(a == b); }
  friend bool operator<(Weight a, Weight b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator>(Weight a, Weight b) { return b < a; }
  friend bool operator<=(Weight a, Weight b) { return !(b < a); }
  friend bool operator>=(Weight a, Weight b) { return !(a < b); }

 private:
  double value_ = 0.0;
  bool infinite_ = false;
};

/// wa/da < wb/db, compared by cross-multiplication to avoid division noise.
/// Degrees must be positive. Infinite loses against every finite ratio.
inline bool ratio_less(Weight wa, std::uint64_t da, Weight wb, std::uint64_t db) {
  if (wa.is_infinite()) return false;
  if (wb.is_infinite()) return true;
  return wa.value() * static_cast<double>(db) < wb.value() * static_cast<double>(da);
}

}  // namespace loopcut
