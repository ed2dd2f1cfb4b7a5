#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace pq {

using Rational = mpq_class;

/// Builds a canonical (gcd-reduced, positive denominator) rational.
Rational make_rational(long num, long den = 1);

/// Parses "p" or "p/q".
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);
double to_double(const Rational& r);

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ChartMismatch : public Error {
 public:
  ChartMismatch() : Error("operands live on different charts") {}
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// Gaussian rational re + i*im.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}  // NOLINT

  static Scalar i() { return Scalar(0, 1); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return {re_, -im_}; }
  Scalar inverse() const;
  std::complex<double> to_complex() const { return {to_double(re_), to_double(im_)}; }

  Scalar operator-() const { return {-re_, -im_}; }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

 private:
  Rational re_;
  Rational im_;
};

std::string to_string(const Scalar& s);

}  // namespace pq
