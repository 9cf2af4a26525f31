#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace metstruct {

/// Exact rational, always reduced with a positive denominator.
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

/// Base class for every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or precondition-violating input.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Two structures over different relational signatures were compared.
class SignatureMismatch : public Error {
 public:
  using Error::Error;
};

inline Rational make_rational(long long num, long long den = 1) {
  if (den == 0) throw InvalidInput("zero denominator");
  return Rational(Integer(num), Integer(den));
}

/// Parses "n", "-n" or "n/d".
inline Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+')
    throw InvalidInput("malformed rational '" + std::string(text) + "'");
  Integer n{std::string(num.front() == '+' ? num.substr(1) : num)};
  Integer d{std::string(den)};
  if (d == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

/// Canonical text form: "n" for integers, "n/d" otherwise.
inline std::string format_rational(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline Rational abs_diff(const Rational& a, const Rational& b) { return a < b ? b - a : a - b; }

/// A rational or +infinity. Used where a covering radius has no finite value.
struct ExtRational {
  std::optional<Rational> value;  // nullopt = infinity

  static ExtRational infinity() { return {}; }
  bool is_infinite() const { return !value.has_value(); }

  friend bool operator==(const ExtRational&, const ExtRational&) = default;
  friend bool operator<=(const ExtRational& a, const ExtRational& b) {
    if (b.is_infinite()) return true;
    if (a.is_infinite()) return false;
    return *a.value <= *b.value;
  }
};

inline std::string format_ext(const ExtRational& r) {
  return r.is_infinite() ? std::string("inf") : format_rational(*r.value);
}

}  // namespace metstruct
