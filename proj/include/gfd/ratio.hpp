// ratio.hpp — exact rational multipliers for thresholds and gap factors.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "gfd/weight.hpp"

namespace gfd {

/**
 * A non-negative rational number with exact arithmetic, used for
 * multiplicative factors such as straightness bounds, stretch bounds,
 * approximation gaps, and search slack. All comparisons against weights are
 * carried out in 128-bit integer arithmetic so no precision is ever lost.
 */
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;  // always > 0; num/den kept in lowest terms

  constexpr Ratio() = default;
  Ratio(std::int64_t n, std::int64_t d);

  static Ratio from_int(std::int64_t n) { return Ratio(n, 1); }

  /**
   * Parses "3", "0.25", "1.5", or a fraction "1/64".
   * Decimal inputs may carry any number of fraction digits.
   * Throws std::invalid_argument on malformed or negative input.
   */
  static Ratio parse(std::string_view text);

  /** Closest value at or below `value` with the given denominator. */
  static Ratio floor_with_denominator(double value, std::int64_t denominator);

  double as_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;

  Ratio operator+(const Ratio& other) const;
  Ratio operator*(const Ratio& other) const;

  friend bool operator==(const Ratio& a, const Ratio& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Ratio& a, const Ratio& b);
  friend bool operator<=(const Ratio& a, const Ratio& b) { return !(b < a); }
  friend bool operator>(const Ratio& a, const Ratio& b) { return b < a; }
  friend bool operator>=(const Ratio& a, const Ratio& b) { return !(a < b); }
};

/** True iff a <= r·b. Infinite a is never <= a scaled finite b; r·infinity
 *  is infinite (so any finite a qualifies). */
bool weight_le_scaled(Weight a, const Ratio& r, Weight b);

/** True iff a > r·b. Exact counterpart of weight_le_scaled. */
bool weight_gt_scaled(Weight a, const Ratio& r, Weight b);

/** True iff a < r·b (strict). */
bool weight_lt_scaled(Weight a, const Ratio& r, Weight b);

/** True iff a >= r·b. */
bool weight_ge_scaled(Weight a, const Ratio& r, Weight b);

/** ⌈r·w⌉ in milli-units (infinity propagates). */
Weight scale_ceil(const Ratio& r, Weight w);

/** ⌊r·w⌋ in milli-units (infinity propagates). */
Weight scale_floor(const Ratio& r, Weight w);

}  // namespace gfd
