#pragma once

#include "qdyn/rational.hpp"

#include <cmath>
#include <complex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qdyn {

/// Quaternion q = re + im_i*i + im_j*j + im_k*k over a coefficient field F
/// (Rational for exact computations, double for numerics). Multiplication
/// follows i^2 = j^2 = k^2 = -1, ijk = -1, so ij = k = -ji.
template <class F>
struct Quaternion {
  F re{}, im_i{}, im_j{}, im_k{};

  Quaternion() = default;
  Quaternion(F r) : re(std::move(r)) {}
  Quaternion(F a, F b, F c, F d)
      : re(std::move(a)), im_i(std::move(b)), im_j(std::move(c)), im_k(std::move(d)) {}

  static Quaternion unit_i() { return {F(0), F(1), F(0), F(0)}; }
  static Quaternion unit_j() { return {F(0), F(0), F(1), F(0)}; }
  static Quaternion unit_k() { return {F(0), F(0), F(0), F(1)}; }

  Quaternion conj() const { return {re, -im_i, -im_j, -im_k}; }

  /// qq* = re^2 + im_i^2 + im_j^2 + im_k^2, exact in rational mode.
  F modulus_sq() const {
    return re * re + im_i * im_i + im_j * im_j + im_k * im_k;
  }

  bool is_zero() const {
    return re == F(0) && im_i == F(0) && im_j == F(0) && im_k == F(0);
  }
  bool is_real() const {
    return im_i == F(0) && im_j == F(0) && im_k == F(0);
  }
  /// Lies in the complex subfield spanned by {1, i}.
  bool is_complex() const { return im_j == F(0) && im_k == F(0); }

  /// q^-1 = q* / (qq*). Throws on zero.
  Quaternion inverse() const {
    F n = modulus_sq();
    if (n == F(0)) throw std::domain_error("quaternion inverse of zero");
    return {re / n, -im_i / n, -im_j / n, -im_k / n};
  }

  Quaternion& operator+=(const Quaternion& o) {
    re += o.re; im_i += o.im_i; im_j += o.im_j; im_k += o.im_k;
    return *this;
  }
  Quaternion& operator-=(const Quaternion& o) {
    re -= o.re; im_i -= o.im_i; im_j -= o.im_j; im_k -= o.im_k;
    return *this;
  }
  Quaternion& operator*=(const Quaternion& o) {
    *this = *this * o;
    return *this;
  }
  Quaternion& operator*=(const F& s) {
    re *= s; im_i *= s; im_j *= s; im_k *= s;
    return *this;
  }

  friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend Quaternion operator-(const Quaternion& a) {
    return {-a.re, -a.im_i, -a.im_j, -a.im_k};
  }

  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.re * b.re - a.im_i * b.im_i - a.im_j * b.im_j - a.im_k * b.im_k,
            a.re * b.im_i + a.im_i * b.re + a.im_j * b.im_k - a.im_k * b.im_j,
            a.re * b.im_j - a.im_i * b.im_k + a.im_j * b.re + a.im_k * b.im_i,
            a.re * b.im_k + a.im_i * b.im_j - a.im_j * b.im_i + a.im_k * b.re};
  }
  // Real scalars commute with everything; provide both sides.
  friend Quaternion operator*(Quaternion a, const F& s) { return a *= s; }
  friend Quaternion operator*(const F& s, Quaternion a) { return a *= s; }
  friend Quaternion operator/(Quaternion a, const F& s) {
    a.re = a.re / s; a.im_i = a.im_i / s; a.im_j = a.im_j / s; a.im_k = a.im_k / s;
    return a;
  }

  friend bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.re == b.re && a.im_i == b.im_i && a.im_j == b.im_j && a.im_k == b.im_k;
  }
  friend bool operator!=(const Quaternion& a, const Quaternion& b) { return !(a == b); }
};

template <class F>
Quaternion<F> conj(const Quaternion<F>& q) { return q.conj(); }

template <class F>
F modulus_sq(const Quaternion<F>& q) { return q.modulus_sq(); }

inline double modulus(const Quaternion<double>& q) { return std::sqrt(q.modulus_sq()); }

template <class F>
Quaternion<F> inverse(const Quaternion<F>& q) { return q.inverse(); }

/// Unique decomposition q = a + b j with a, b in the complex subfield:
/// a = re + im_i*i, b = im_j + im_k*i (since (im_j + im_k*i) j = im_j*j + im_k*k).
template <class F>
std::pair<Quaternion<F>, Quaternion<F>> to_complex_pair(const Quaternion<F>& q) {
  return {Quaternion<F>(q.re, q.im_i, F(0), F(0)),
          Quaternion<F>(q.im_j, q.im_k, F(0), F(0))};
}

template <class F>
Quaternion<F> from_complex_pair(const Quaternion<F>& a, const Quaternion<F>& b) {
  return Quaternion<F>(a.re, a.im_i, b.re, b.im_i);
}

inline std::complex<double> to_std_complex(const Quaternion<double>& a) {
  return {a.re, a.im_i};
}
inline Quaternion<double> from_std_complex(const std::complex<double>& z) {
  return {z.real(), z.imag(), 0.0, 0.0};
}

/// Complex part 1/2 (q + i q i*): zeroes the j and k components.
template <class F>
Quaternion<F> complex_part(const Quaternion<F>& q) {
  return {q.re, q.im_i, F(0), F(0)};
}

template <class F>
bool approx_equal(const Quaternion<F>& a, const Quaternion<F>& b, const F& tol) {
  return modulus_sq(a - b) <= tol * tol;
}

namespace detail {
inline void print_coeff(std::ostream& os, const Rational& c) { os << c; }
inline void print_coeff(std::ostream& os, double c) { os << c; }
}  // namespace detail

/// Canonical text form "a1 + a2 i + a3 j + a4 k".
template <class F>
std::ostream& operator<<(std::ostream& os, const Quaternion<F>& q) {
  detail::print_coeff(os, q.re);
  os << " + ";
  detail::print_coeff(os, q.im_i);
  os << " i + ";
  detail::print_coeff(os, q.im_j);
  os << " j + ";
  detail::print_coeff(os, q.im_k);
  os << " k";
  return os;
}

template <class F>
std::string to_string(const Quaternion<F>& q) {
  std::ostringstream ss;
  ss << q;
  return ss.str();
}

using QuatQ = Quaternion<Rational>;
using QuatD = Quaternion<double>;

}  // namespace qdyn
