// weight.hpp — fixed-point edge weights and distances in milli-units.
#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

namespace gfd {

/**
 * A non-negative fixed-point quantity stored as an integer count of 1/1000
 * units ("milli-units"). Used for edge weights, path lengths, and
 * shortest-path distances so that all threshold comparisons are exact
 * integer comparisons — no floating point is involved anywhere in the
 * distance computations.
 *
 * A distinguished infinity value represents "unreachable". Addition
 * saturates at infinity.
 */
class Weight {
 public:
  constexpr Weight() = default;

  /** Constructs from a raw milli-unit count. Negative counts are invalid. */
  static constexpr Weight from_milli(std::int64_t milli) {
    return Weight(milli);
  }

  /** The distinguished "unreachable" value. */
  static constexpr Weight infinity() { return Weight(kInfMilli); }

  static constexpr Weight zero() { return Weight(0); }

  /**
   * Parses a non-negative decimal with at most three fraction digits
   * (e.g. "2", "0.65", "4.701") or the string "inf". Throws
   * std::invalid_argument for anything else, including a fourth fraction
   * digit: values that are not exactly representable are rejected rather
   * than rounded.
   */
  static Weight parse(std::string_view text);

  constexpr std::int64_t milli() const { return milli_; }
  constexpr bool is_infinite() const { return milli_ == kInfMilli; }
  constexpr bool is_zero() const { return milli_ == 0; }

  /** Minimal decimal rendering, e.g. "3", "0.65", "2.951", or "inf". */
  std::string str() const;

  friend constexpr bool operator==(Weight, Weight) = default;
  friend constexpr auto operator<=>(Weight a, Weight b) {
    return a.milli_ <=> b.milli_;
  }

  /** Saturating addition: anything plus infinity is infinity. */
  friend constexpr Weight operator+(Weight a, Weight b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return Weight(a.milli_ + b.milli_);
  }
  Weight& operator+=(Weight other) { return *this = *this + other; }

  /** Difference of finite weights; callers guarantee a >= b and finiteness. */
  friend constexpr Weight operator-(Weight a, Weight b) {
    return Weight(a.milli_ - b.milli_);
  }

 private:
  static constexpr std::int64_t kInfMilli =
      std::numeric_limits<std::int64_t>::max();

  explicit constexpr Weight(std::int64_t milli) : milli_(milli) {}

  std::int64_t milli_ = 0;
};

constexpr Weight max(Weight a, Weight b) { return a < b ? b : a; }
constexpr Weight min(Weight a, Weight b) { return b < a ? b : a; }

}  // namespace gfd
