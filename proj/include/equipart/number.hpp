#pragma once

#include <boost/rational.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>

#include "equipart/errors.hpp"

namespace equipart {

// Compare against Rational(k), never a bare int: the mixed operator== recurses under C++20.
using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& q) {
  return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

inline std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

inline bool is_integer(const Rational& q) { return q.denominator() == 1; }

// Accepts "p", "-p", "p/q".
inline Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) -> std::int64_t {
    if (s.empty()) throw parse_error("empty rational component in '" + std::string(text) + "'");
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(std::string(s), &pos);
    } catch (const std::exception&) {
      throw parse_error("not a rational: '" + std::string(text) + "'");
    }
    if (pos != s.size()) throw parse_error("not a rational: '" + std::string(text) + "'");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const auto den = parse_int(text.substr(slash + 1));
  if (den == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

// Exact square root when q is the square of a rational.
inline std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q < Rational(0)) return std::nullopt;
  auto isqrt = [](std::int64_t v) -> std::optional<std::int64_t> {
    auto s = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
    for (auto c = std::max<std::int64_t>(0, s - 2); c <= s + 2; ++c)
      if (c * c == v) return c;
    return std::nullopt;
  };
  const auto num = isqrt(q.numerator());
  const auto den = isqrt(q.denominator());
  if (!num || !den) return std::nullopt;
  return Rational(*num, *den);
}

// A value that is either exact (rational) or a floating-point approximation.
// Spectral quantities are exact exactly when the eigenvalues involved are integral.
class Number {
 public:
  Number() : value_(Rational(0)) {}
  Number(Rational q) : value_(q) {}  // NOLINT(google-explicit-constructor)
  Number(std::int64_t v) : value_(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  static Number approx(double v) {
    Number n;
    n.value_ = v;
    return n;
  }

  bool exact() const { return std::holds_alternative<Rational>(value_); }
  const Rational& rational() const { return std::get<Rational>(value_); }
  double to_double() const {
    return exact() ? equipart::to_double(rational()) : std::get<double>(value_);
  }

  friend Number operator+(const Number& x, const Number& y) {
    if (x.exact() && y.exact()) return x.rational() + y.rational();
    return approx(x.to_double() + y.to_double());
  }
  friend Number operator-(const Number& x, const Number& y) {
    if (x.exact() && y.exact()) return x.rational() - y.rational();
    return approx(x.to_double() - y.to_double());
  }
  friend Number operator*(const Number& x, const Number& y) {
    if (x.exact() && y.exact()) return x.rational() * y.rational();
    return approx(x.to_double() * y.to_double());
  }
  friend Number operator/(const Number& x, const Number& y) {
    if (x.exact() && y.exact()) return x.rational() / y.rational();
    return approx(x.to_double() / y.to_double());
  }
  Number operator-() const { return exact() ? Number(-rational()) : approx(-to_double()); }

  friend bool operator==(const Number& x, const Number& y) {
    if (x.exact() != y.exact()) return false;
    return x.exact() ? x.rational() == y.rational() : x.to_double() == y.to_double();
  }

 private:
  std::variant<Rational, double> value_;
};

// Sign of (x - y): exact when both sides are, otherwise 0 within `tol`.
inline int compare(const Number& x, const Number& y, double tol) {
  if (x.exact() && y.exact()) {
    if (x.rational() < y.rational()) return -1;
    return x.rational() == y.rational() ? 0 : 1;
  }
  const double diff = x.to_double() - y.to_double();
  if (std::abs(diff) <= tol) return 0;
  return diff < 0 ? -1 : 1;
}

// "5/14 (0.357143)" for exact values, "~0.357143" for approximations.
inline std::string format_human(const Number& x) {
  std::ostringstream os;
  if (x.exact()) {
    os << to_string(x.rational());
    if (!is_integer(x.rational())) os << " (" << x.to_double() << ")";
  } else {
    os << "~" << x.to_double();
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Number& x) { return os << format_human(x); }

}  // namespace equipart
