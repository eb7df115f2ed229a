#pragma once

#include "movcone/numeric.hpp"

#include <string>
#include <vector>

namespace movcone {

// p + q*sqrt(d) with rational p, q and square-free d >= 2. A number with
// q = 0 is rational and combines with any field; mixing two different
// irrational radicands is an error.
class QuadraticNumber {
public:
  QuadraticNumber() = default;
  QuadraticNumber(long v) : p_(v) {}  // NOLINT(implicit)
  QuadraticNumber(const Integer& v) : p_(v) {}  // NOLINT(implicit)
  QuadraticNumber(const Rational& v) : p_(v) {}  // NOLINT(implicit)
  // Square factors of d are moved into q.
  QuadraticNumber(Rational p, Rational q, Integer d);

  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }
  // Radicand; 1 for rational values.
  const Integer& d() const { return d_; }
  bool is_rational() const { return q_ == 0; }

  QuadraticNumber conjugate() const;
  QuadraticNumber inverse() const;
  int sign() const;
  double to_double() const;
  // "47/2 + 21/2*sqrt(5)"
  std::string to_string() const;

  QuadraticNumber operator-() const;
  QuadraticNumber& operator+=(const QuadraticNumber& o);
  QuadraticNumber& operator-=(const QuadraticNumber& o);
  QuadraticNumber& operator*=(const QuadraticNumber& o);
  QuadraticNumber& operator/=(const QuadraticNumber& o);

  friend QuadraticNumber operator+(QuadraticNumber a, const QuadraticNumber& b) { return a += b; }
  friend QuadraticNumber operator-(QuadraticNumber a, const QuadraticNumber& b) { return a -= b; }
  friend QuadraticNumber operator*(QuadraticNumber a, const QuadraticNumber& b) { return a *= b; }
  friend QuadraticNumber operator/(QuadraticNumber a, const QuadraticNumber& b) { return a /= b; }

  friend bool operator==(const QuadraticNumber& a, const QuadraticNumber& b) {
    return a.p_ == b.p_ && a.q_ == b.q_ && (a.q_ == 0 || a.d_ == b.d_);
  }
  friend bool operator<(const QuadraticNumber& a, const QuadraticNumber& b) {
    return (a - b).sign() < 0;
  }
  friend bool operator>(const QuadraticNumber& a, const QuadraticNumber& b) { return b < a; }

private:
  void normalize();
  Integer common_radicand(const QuadraticNumber& o) const;

  Rational p_{0};
  Rational q_{0};
  Integer d_{1};
};

using QVector = std::vector<QuadraticNumber>;

// Writes m = s^2 * d with d square-free; returns {s, d}. m must be positive.
std::pair<Integer, Integer> square_free_decomposition(const Integer& m);

// Both roots of x^2 - t x + 1 for an integer trace t > 2, larger first.
std::pair<QuadraticNumber, QuadraticNumber> reciprocal_quadratic_roots(const Integer& trace);

// Kernel vector of a singular square matrix over Q(sqrt d), with its first
// nonzero coordinate equal to 1. Throws if the kernel is trivial.
QVector kernel_vector(std::vector<QVector> rows);

} // namespace movcone
