// weight.cpp — parsing and formatting of fixed-point weights.
#include "gfd/weight.hpp"

#include <cctype>
#include <stdexcept>

namespace gfd {

namespace {

[[noreturn]] void bad_weight(std::string_view text, const char* reason) {
  throw std::invalid_argument("invalid weight '" + std::string(text) +
                              "': " + reason);
}

}  // namespace

Weight Weight::parse(std::string_view text) {
  if (text == "inf") return infinity();
  if (text.empty()) bad_weight(text, "empty string");
  if (text.front() == '-') bad_weight(text, "negative values are not allowed");
  if (text.front() == '+') bad_weight(text, "explicit sign is not allowed");

  std::size_t pos = 0;
  std::int64_t whole = 0;
  bool any_digit = false;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    whole = whole * 10 + (text[pos] - '0');
    if (whole > kInfMilli / 1000) bad_weight(text, "value too large");
    any_digit = true;
    ++pos;
  }
  if (!any_digit) bad_weight(text, "expected a digit");

  std::int64_t frac_milli = 0;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    int frac_digits = 0;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++frac_digits;
      if (frac_digits > 3) {
        bad_weight(text, "more than 3 fraction digits (not a milli-unit)");
      }
      frac_milli = frac_milli * 10 + (text[pos] - '0');
      ++pos;
    }
    if (frac_digits == 0) bad_weight(text, "missing digits after '.'");
    for (int i = frac_digits; i < 3; ++i) frac_milli *= 10;
  }
  if (pos != text.size()) bad_weight(text, "trailing characters");
  return from_milli(whole * 1000 + frac_milli);
}

std::string Weight::str() const {
  if (is_infinite()) return "inf";
  std::string out = std::to_string(milli_ / 1000);
  std::int64_t frac = milli_ % 1000;
  if (frac != 0) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), ".%03lld", static_cast<long long>(frac));
    std::string_view sv(buf);
    while (sv.back() == '0') sv.remove_suffix(1);
    out += sv;
  }
  return out;
}

}  // namespace gfd
