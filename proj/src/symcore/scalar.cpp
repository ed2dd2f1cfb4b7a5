#include "pseudoquant/symcore/scalar.hpp"

namespace pq {

Rational make_rational(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) throw DomainError("malformed rational '" + text + "'");
  if (sgn(r.get_den()) == 0) throw DomainError("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

double to_double(const Rational& r) { return r.get_d(); }

Scalar Scalar::inverse() const {
  Rational norm = re_ * re_ + im_ * im_;
  if (sgn(norm) == 0) throw DomainError("division by zero scalar");
  return {re_ / norm, -im_ / norm};
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::string to_string(const Scalar& s) {
  if (s.is_real()) return to_string(s.re());
  if (sgn(s.re()) == 0) return to_string(s.im()) + "*i";
  return "(" + to_string(s.re()) + " + " + to_string(s.im()) + "*i)";
}

}  // namespace pq
