#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace qdyn {

/// Arbitrary-precision rational, kept in canonical reduced form
/// (gcd 1, positive denominator) by the GMP backend.
using Rational = boost::multiprecision::mpq_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(double x) { return x; }

/// "p" for integers, "p/q" otherwise.
inline std::string rational_to_string(const Rational& r) { return r.str(); }

/// Parses "p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
inline Rational rational_from_string(std::string_view s) {
  try {
    Rational r{std::string(s)};
    return r;
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + std::string(s) + "'");
  }
}

// Traits for the two coefficient fields. Exact mode carries zero
// tolerances; floating mode uses the library-wide default of 1e-10.
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static constexpr bool exact = true;
  static Rational default_tol() { return Rational(0); }
  static Rational from_int(long v) { return Rational(v); }
};

template <>
struct FieldTraits<double> {
  static constexpr bool exact = false;
  static double default_tol() { return 1e-10; }
  static double from_int(long v) { return static_cast<double>(v); }
};

}  // namespace qdyn
