#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "rng.hpp"

#include "movcone/errors.hpp"
#include "movcone/polynomial.hpp"
#include "movcone/quadratic.hpp"

#include <cmath>

using namespace movcone;
using testing_support::qn;

TEST_CASE("integer polynomial arithmetic and printing") {
  IntPolynomial x({0, 1});
  IntPolynomial one({1});
  IntPolynomial p = (x + IntPolynomial({-1})) * (x * x + IntPolynomial({1, -47}));
  CHECK(p.to_string() == "x^3 - 48*x^2 + 48*x - 1");
  CHECK(p.degree() == 3);
  CHECK(IntPolynomial({-1, 1}).pow(3) == IntPolynomial({-1, 3, -3, 1}));
  CHECK(IntPolynomial({0, 0, 0}).degree() == -1);
  CHECK(IntPolynomial::monomial(5, 2).to_string() == "5*x^2");
  CHECK(one.pow(0) == one);
}

TEST_CASE("closed-form pair polynomial") {
  CHECK(pair_char_poly_closed_form(3, 7) == IntPolynomial({-1, 48, -48, 1}));
  CHECK(pair_char_poly_closed_form(4, 2) == IntPolynomial({-1, 1}).pow(4));
  CHECK(pair_char_poly_closed_form(2, 5) == IntPolynomial({1, -23, 1}));
}

TEST_CASE("Berkowitz on small matrices") {
  Matrix<Integer> a{{1, 8, 65}, {0, -1, -7}, {0, 7, 48}};
  CHECK(characteristic_polynomial(a) == IntPolynomial({-1, 48, -48, 1}));
  Matrix<Integer> z(3, 3);
  CHECK(characteristic_polynomial(z) == IntPolynomial({0, 0, 0, 1}));
  Matrix<Integer> d{{2, 0}, {0, 3}};
  CHECK(characteristic_polynomial(d) == IntPolynomial({6, -5, 1}));
}

TEST_CASE("property: Berkowitz agrees with cofactor expansion on random 4x4 matrices") {
  testing_support::Rng rng(303);
  auto det3 = [](const std::vector<std::vector<Integer>>& m) -> Integer {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  for (int trial = 0; trial < 200; ++trial) {
    Matrix<Integer> a(4, 4);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        a(r, c) = rng.uniform(-9, 9);
    IntPolynomial p = characteristic_polynomial(a);
    // constant term is det(-A) = det(A); the x^3 term is -trace
    Integer det = 0;
    for (int c = 0; c < 4; ++c) {
      std::vector<std::vector<Integer>> minor;
      for (int r = 1; r < 4; ++r) {
        std::vector<Integer> row;
        for (int k = 0; k < 4; ++k)
          if (k != c)
            row.push_back(a(r, k));
        minor.push_back(row);
      }
      det += (c % 2 ? -1 : 1) * a(0, c) * det3(minor);
    }
    CHECK(p.coefficient(0) == det);
    CHECK(p.coefficient(3) == -(a(0, 0) + a(1, 1) + a(2, 2) + a(3, 3)));
    CHECK(p.coefficient(4) == 1);
    // p(A) = 0
    Matrix<Integer> acc(4, 4);
    Matrix<Integer> power = Matrix<Integer>::identity(4);
    for (int k = 0; k <= 4; ++k) {
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
          acc(r, c) += p.coefficient(k) * power(r, c);
      power = power * a;
    }
    CHECK(acc == Matrix<Integer>(4, 4));
  }
}

TEST_CASE("quadratic numbers") {
  QuadraticNumber lam = qn(47, 2, 21, 2, 5);
  QuadraticNumber conj = lam.conjugate();
  CHECK(lam * conj == QuadraticNumber(1));
  CHECK(lam + conj == QuadraticNumber(47));
  CHECK(lam.inverse() == conj);
  CHECK(lam.to_string() == "47/2 + 21/2*sqrt(5)");
  CHECK(std::abs(lam.to_double() - (47 + std::sqrt(2205.0)) / 2) < 1e-12);
  CHECK(lam.sign() == 1);
  CHECK(conj.sign() == 1);
  CHECK((conj - QuadraticNumber(1)).sign() == -1);
  CHECK(qn(1, 1, -1, 1, 2).sign() == -1);
  CHECK(qn(-1, 1, 1, 1, 2).sign() == 1);
  CHECK(conj < lam);
  CHECK(QuadraticNumber(make_rational(3, 2), make_rational(1), Integer(4)) == QuadraticNumber(make_rational(7, 2)));
  CHECK(QuadraticNumber(make_rational(0), make_rational(1), Integer(12)) == qn(0, 1, 2, 1, 3));
  CHECK_THROWS(lam + qn(0, 1, 1, 1, 2));
  CHECK_THROWS(QuadraticNumber(0).inverse());
}

TEST_CASE("square-free parts and reciprocal roots") {
  CHECK(square_free_decomposition(Integer(2205)) == std::pair<Integer, Integer>(21, 5));
  CHECK(square_free_decomposition(Integer(525)) == std::pair<Integer, Integer>(5, 21));
  CHECK(square_free_decomposition(Integer(1)) == std::pair<Integer, Integer>(1, 1));
  auto [big, small] = reciprocal_quadratic_roots(Integer(47));
  CHECK(big == qn(47, 2, 21, 2, 5));
  CHECK(big * small == QuadraticNumber(1));
  auto [b5, s5] = reciprocal_quadratic_roots(Integer(23));
  CHECK(b5 == qn(23, 2, 5, 2, 21));
  CHECK(b5 + s5 == QuadraticNumber(23));
}

TEST_CASE("kernel vectors over a quadratic field") {
  QuadraticNumber lam = qn(23, 2, 5, 2, 21);
  // singular because lam^2 - 23 lam + 1 = 0
  std::vector<QVector> rows{{QuadraticNumber(0) - lam, QuadraticNumber(1)},
                            {QuadraticNumber(-1), QuadraticNumber(23) - lam}};
  QVector v = kernel_vector(rows);
  CHECK(v[0] == QuadraticNumber(1));
  CHECK(rows[0][0] * v[0] + rows[0][1] * v[1] == QuadraticNumber(0));
  CHECK(rows[1][0] * v[0] + rows[1][1] * v[1] == QuadraticNumber(0));
  CHECK_THROWS(kernel_vector({{QuadraticNumber(1), QuadraticNumber(0)},
                              {QuadraticNumber(0), QuadraticNumber(1)}}));
}
