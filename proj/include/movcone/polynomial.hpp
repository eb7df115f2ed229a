#pragma once

#include "movcone/matrix.hpp"
#include "movcone/numeric.hpp"

#include <string>
#include <vector>

namespace movcone {

// Univariate polynomial with integer coefficients, stored lowest degree first
// and kept without trailing zeros.
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> ascending);

  static IntPolynomial monomial(const Integer& c, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  Integer coefficient(int k) const;

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  IntPolynomial pow(int e) const;

  // "x^3 - 48*x^2 + 48*x - 1"
  std::string to_string() const;

private:
  void trim();
  std::vector<Integer> coeffs_;
};

// (x-1)^(l-2) (x^2 - (b^2-2) x + 1)
IntPolynomial pair_char_poly_closed_form(int rank, const Integer& b);

// Coefficients of det(xI - A), highest degree first, computed with the
// division-free Samuelson-Berkowitz recursion. Works over any commutative ring.
template <typename T>
std::vector<T> berkowitz_descending(const Matrix<T>& a) {
  const std::size_t n = a.rows();
  std::vector<T> p{T(1)};
  for (std::size_t k = 0; k < n; ++k) {
    // Toeplitz column: 1, -a_kk, -R C, -R A C, ..., -R A^{k-1} C
    std::vector<T> t;
    t.reserve(k + 2);
    t.push_back(T(1));
    t.push_back(-a(k, k));
    std::vector<T> c(k);
    for (std::size_t i = 0; i < k; ++i)
      c[i] = a(i, k);
    for (std::size_t power = 0; power < k; ++power) {
      T rc(0);
      for (std::size_t i = 0; i < k; ++i)
        rc += a(k, i) * c[i];
      t.push_back(-rc);
      if (power + 1 < k) {
        std::vector<T> next(k, T(0));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j)
            next[i] += a(i, j) * c[j];
        c = std::move(next);
      }
    }
    std::vector<T> q(k + 2, T(0));
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < p.size() && j <= i; ++j)
        if (i - j < t.size())
          q[i] += t[i - j] * p[j];
    p = std::move(q);
  }
  return p;
}

IntPolynomial characteristic_polynomial(const Matrix<Integer>& a);

} // namespace movcone
