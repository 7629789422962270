// ratio.cpp — exact rational arithmetic and weight-scaling predicates.
#include "gfd/ratio.hpp"

#include <cctype>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gfd {

namespace {

using Wide = __int128;

[[noreturn]] void bad_ratio(std::string_view text, const char* reason) {
  throw std::invalid_argument("invalid ratio '" + std::string(text) +
                              "': " + reason);
}

std::int64_t checked_narrow(Wide v, const char* what) {
  if (v > Wide(9'223'372'036'854'775'807LL)) {
    throw std::overflow_error(std::string("ratio overflow in ") + what);
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

Ratio::Ratio(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den <= 0) throw std::invalid_argument("ratio denominator must be > 0");
  if (num < 0) throw std::invalid_argument("ratio must be non-negative");
  std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Ratio Ratio::parse(std::string_view text) {
  if (text.empty()) bad_ratio(text, "empty string");
  std::size_t slash = text.find('/');
  if (slash != std::string_view::npos) {
    std::string_view ns = text.substr(0, slash);
    std::string_view ds = text.substr(slash + 1);
    if (ns.empty() || ds.empty()) bad_ratio(text, "malformed fraction");
    std::int64_t n = 0, d = 0;
    for (char c : ns) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        bad_ratio(text, "fraction parts must be integers");
      }
      n = n * 10 + (c - '0');
    }
    for (char c : ds) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        bad_ratio(text, "fraction parts must be integers");
      }
      d = d * 10 + (c - '0');
    }
    if (d == 0) bad_ratio(text, "zero denominator");
    return Ratio(n, d);
  }

  // Decimal form: digits, optionally '.' and more digits.
  std::size_t pos = 0;
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool any_digit = false;
  while (pos < text.size() &&
         std::isdigit(static_cast<unsigned char>(text[pos]))) {
    num = num * 10 + (text[pos] - '0');
    any_digit = true;
    ++pos;
  }
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    bool frac_digit = false;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      if (den > 1'000'000'000'000'000LL) bad_ratio(text, "too many digits");
      num = num * 10 + (text[pos] - '0');
      den *= 10;
      frac_digit = true;
      ++pos;
    }
    if (!frac_digit) bad_ratio(text, "missing digits after '.'");
  }
  if (!any_digit || pos != text.size()) bad_ratio(text, "malformed number");
  return Ratio(num, den);
}

Ratio Ratio::floor_with_denominator(double value, std::int64_t denominator) {
  if (value < 0) throw std::invalid_argument("ratio must be non-negative");
  double scaled = std::floor(value * static_cast<double>(denominator));
  return Ratio(static_cast<std::int64_t>(scaled), denominator);
}

std::string Ratio::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Ratio Ratio::operator+(const Ratio& other) const {
  Wide n = Wide(num) * other.den + Wide(other.num) * den;
  Wide d = Wide(den) * other.den;
  std::int64_t nn = checked_narrow(n, "addition");
  std::int64_t dd = checked_narrow(d, "addition");
  return Ratio(nn, dd);
}

Ratio Ratio::operator*(const Ratio& other) const {
  // Cross-reduce first so typical products (e.g. 1024-denominator squares)
  // stay well inside 64 bits.
  std::int64_t g1 = std::gcd(num, other.den);
  std::int64_t g2 = std::gcd(other.num, den);
  Wide n = Wide(num / g1) * (other.num / g2);
  Wide d = Wide(den / g2) * (other.den / g1);
  return Ratio(checked_narrow(n, "multiplication"),
               checked_narrow(d, "multiplication"));
}

bool operator<(const Ratio& a, const Ratio& b) {
  return Wide(a.num) * b.den < Wide(b.num) * a.den;
}

bool weight_le_scaled(Weight a, const Ratio& r, Weight b) {
  if (b.is_infinite()) return true;  // r·inf = inf bounds everything
  if (a.is_infinite()) return false;
  return Wide(a.milli()) * r.den <= Wide(r.num) * b.milli();
}

bool weight_gt_scaled(Weight a, const Ratio& r, Weight b) {
  return !weight_le_scaled(a, r, b);
}

bool weight_lt_scaled(Weight a, const Ratio& r, Weight b) {
  if (b.is_infinite()) return !a.is_infinite();  // finite < r·inf = inf
  if (a.is_infinite()) return false;
  return Wide(a.milli()) * r.den < Wide(r.num) * b.milli();
}

bool weight_ge_scaled(Weight a, const Ratio& r, Weight b) {
  return !weight_lt_scaled(a, r, b);
}

Weight scale_ceil(const Ratio& r, Weight w) {
  if (w.is_infinite()) return Weight::infinity();
  Wide prod = Wide(r.num) * w.milli();
  Wide q = prod / r.den;
  if (prod % r.den != 0) ++q;
  return Weight::from_milli(checked_narrow(q, "scale_ceil"));
}

Weight scale_floor(const Ratio& r, Weight w) {
  if (w.is_infinite()) return Weight::infinity();
  Wide prod = Wide(r.num) * w.milli();
  return Weight::from_milli(checked_narrow(prod / r.den, "scale_floor"));
}

}  // namespace gfd
