#ifndef COVPACK_SCALAR_HPP
#define COVPACK_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace covpack {

/// Exact arithmetic backend. Certificates produced in this mode are checked
/// with zero tolerance.
using Rational = boost::multiprecision::cpp_rational;

class scalar_error : public std::runtime_error {
 public:
  explicit scalar_error(const std::string& what) : std::runtime_error(what) {}
};

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static double tolerance() { return 1e-9; }
  static const char* backend_name() { return "float"; }
  static double from_double(double v) { return v; }
  static double to_double(double v) { return v; }
};

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static Rational tolerance() { return Rational(0); }
  static const char* backend_name() { return "exact"; }
  static Rational from_double(double v) {
    if (!std::isfinite(v)) throw scalar_error("non-finite value in exact mode");
    return Rational(v);  // exact binary expansion of the double
  }
  static double to_double(const Rational& v) { return v.template convert_to<double>(); }
};

template <class S>
bool approx_leq(const S& a, const S& b) {
  return a <= b + scalar_traits<S>::tolerance();
}

template <class S>
bool approx_geq(const S& a, const S& b) {
  return a + scalar_traits<S>::tolerance() >= b;
}

inline long rational_floor(const Rational& v) {
  using boost::multiprecision::cpp_int;
  cpp_int num = numerator(v), den = denominator(v);
  cpp_int q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q.convert_to<long>();
}

inline long rational_ceil(const Rational& v) { return -rational_floor(-v); }

inline long floor_of(double v) { return static_cast<long>(std::floor(v)); }
inline long floor_of(const Rational& v) { return rational_floor(v); }
inline long ceil_of(double v) { return static_cast<long>(std::ceil(v)); }
inline long ceil_of(const Rational& v) { return rational_ceil(v); }

inline double abs_of(double v) { return std::fabs(v); }
inline Rational abs_of(const Rational& v) { return v < 0 ? Rational(-v) : v; }

/// Parses "p/q", "p", or a decimal literal into a scalar.
template <class S>
S scalar_from_string(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    // Integer or decimal literal.
    if (text.find('.') == std::string::npos && text.find('e') == std::string::npos &&
        text.find('E') == std::string::npos) {
      if constexpr (scalar_traits<S>::exact) {
        return Rational(boost::multiprecision::cpp_int(text));
      } else {
        return std::stod(text);
      }
    }
    return scalar_traits<S>::from_double(std::stod(text));
  }
  std::string p = text.substr(0, slash), q = text.substr(slash + 1);
  if constexpr (scalar_traits<S>::exact) {
    boost::multiprecision::cpp_int num(p), den(q);
    if (den == 0) throw scalar_error("zero denominator in '" + text + "'");
    return Rational(num, den);
  } else {
    double den = std::stod(q);
    if (den == 0) throw scalar_error("zero denominator in '" + text + "'");
    return std::stod(p) / den;
  }
}

inline std::string scalar_to_string(const Rational& v) {
  std::string s = numerator(v).str();
  if (denominator(v) != 1) s += "/" + denominator(v).str();
  return s;
}

inline std::string scalar_to_string(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace covpack

#endif  // COVPACK_SCALAR_HPP
