#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

#include "movcone/coxeter.hpp"
#include "movcone/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <set>

using namespace movcone;
using testing_support::qn;
using testing_support::Rng;

namespace {

Rational r(long a, long b = 1) { return make_rational(a, b); }

RationalMatrix rmat(std::initializer_list<std::initializer_list<Rational>> rows) {
  return RationalMatrix(rows);
}

QVector apply_q(const IntegerMatrix& m, const QVector& v) { return m.apply(v); }

} // namespace

TEST_CASE("bilinear form of the three-divisor example") {
  ReflectionRep rep(testing_support::example433());
  CHECK(rep.gram().matrix() == rmat({{1, -4, r(-9, 2)}, {-4, 1, r(-7, 2)}, {r(-9, 2), r(-7, 2), 1}}));
  CHECK(rep.gram_J().matrix() == rmat({{1, r(-7, 2)}, {r(-7, 2), 1}}));
  std::vector<int> all{0, 1, 2};
  CHECK(restrict_to(rep.gram(), all) == rep.gram());
  CHECK_THROWS(restrict_to(rep.gram(), std::vector<int>{}));
}

TEST_CASE("bilinear forms of the picture variety and the quadric") {
  ReflectionRep f(testing_support::figure1());
  CHECK(f.gram().matrix() == rmat({{1, -3, -3}, {-3, 1, r(-5, 2)}, {-3, r(-5, 2), 1}}));
  ReflectionRep w(testing_support::wehler());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(w.gram()(i, j) == (i == j ? 1 : -1));
}

TEST_CASE("entries outside J use -n_l and never reach W_J") {
  ValidatedVariety v = testing_support::rank7();
  ReflectionRep rep(v);
  CHECK(rep.gram()(0, 1) == -3);
  BMatrixData b = b_matrix(v);
  for (long outside : {1L, 2L, 5L, 11L}) {
    GramMatrix g = bilinear_form(v, b, Rational(outside));
    CHECK(g(0, 1) == -outside);
    CHECK(restrict_to(g, v.J()) == rep.gram_J());
  }
  CHECK_THROWS(bilinear_form(v, b, Rational(0)));
}

TEST_CASE("restricted form of the rank-7 example") {
  ReflectionRep rep(testing_support::rank7());
  auto h = r(-7, 2);
  RationalMatrix expected = rmat({{1, h, h, -3, h},
                                  {h, 1, -3, h, h},
                                  {h, -3, 1, h, h},
                                  {-3, h, h, 1, h},
                                  {h, h, h, h, 1}});
  CHECK(rep.gram_J().matrix() == expected);
  CHECK(signature(rep.gram_J()) == Inertia{4, 1, 0});
}

TEST_CASE("involution matrices") {
  ReflectionRep rep(testing_support::example433());
  CHECK(rep.involution(1) == IntegerMatrix{{1, 8, 0}, {0, -1, 0}, {0, 7, 1}});
  CHECK(rep.involution(2) == IntegerMatrix{{1, 0, 9}, {0, 1, 7}, {0, 0, -1}});
  CHECK(involution_matrix(rep, 1) == rep.involution(1));
  CHECK_THROWS_AS(rep.involution(0), Error);
  for (int j : rep.J())
    CHECK(rep.involution(j) * rep.involution(j) == IntegerMatrix::identity(3));
}

TEST_CASE("word matrices") {
  ReflectionRep rep(testing_support::example433());
  CHECK(rep.word_matrix(ReducedWord()) == IntegerMatrix::identity(3));
  CHECK(word_matrix(rep, ReducedWord({1, 2})) == IntegerMatrix{{1, 8, 65}, {0, -1, -7}, {0, 7, 48}});
  CHECK_THROWS_AS(ReducedWord({1, 1}), Error);
  CHECK_THROWS_AS(rep.word_matrix(ReducedWord({0, 1})), Error);
  CHECK(ReducedWord({2, 1}).to_string() == "s3 s2");
  CHECK(ReducedWord().to_string() == "e");
  CHECK(ReducedWord({1, 2}).reversed() == ReducedWord({2, 1}));
  CHECK_THROWS(ReducedWord({1}).extended(1));
  CHECK(ReducedWord({2}) < ReducedWord({1, 2}));
  CHECK(ReducedWord({1, 2}) < ReducedWord({2, 1}));
}

TEST_CASE("pair characteristic polynomials") {
  ReflectionRep rep(testing_support::example433());
  CHECK(pair_char_poly(rep, 1, 2) == IntPolynomial({-1, 48, -48, 1}));
  ReflectionRep f(testing_support::figure1());
  CHECK(pair_char_poly(f, 1, 2) == IntPolynomial({-1, 24, -24, 1}));
  ReflectionRep w(testing_support::wehler());
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      CHECK(pair_char_poly(w, i, j) == IntPolynomial({-1, 1}).pow(4));
  CHECK_THROWS_AS(pair_char_poly(rep, 0, 1), Error);
  CHECK_THROWS_AS(pair_char_poly(rep, 1, 1), Error);
}

TEST_CASE("exact dominant eigenpairs") {
  ReflectionRep rep(testing_support::example433());
  PairEigenpair e = pair_dominant_eigenpair(rep, 1, 2);
  CHECK(e.diagonalizable);
  CHECK(e.b == 7);
  CHECK(e.lambda == qn(47, 2, 21, 2, 5));
  CHECK(e.lambda * e.lambda_inverse == QuadraticNumber(1));
  CHECK(e.lambda + e.lambda_inverse == QuadraticNumber(47));
  QVector mv = apply_q(rep.word_matrix(ReducedWord({1, 2})), e.vector);
  for (std::size_t k = 0; k < 3; ++k)
    CHECK(mv[k] == e.lambda * e.vector[k]);
  auto first = std::find_if(e.vector.begin(), e.vector.end(), [](const QuadraticNumber& x) { return x.sign() != 0; });
  CHECK(*first == QuadraticNumber(1));

  ReflectionRep f(testing_support::figure1());
  PairEigenpair pf = pair_dominant_eigenpair(f, 1, 2);
  CHECK(pf.lambda == QuadraticNumber(make_rational(23, 2), make_rational(1, 2), Integer(525)));
  QVector fv = apply_q(f.word_matrix(ReducedWord({1, 2})), pf.vector);
  for (std::size_t k = 0; k < 3; ++k)
    CHECK(fv[k] - pf.lambda * pf.vector[k] == QuadraticNumber(0));

  ReflectionRep w(testing_support::wehler());
  PairEigenpair pw = pair_dominant_eigenpair(w, 0, 1);
  CHECK_FALSE(pw.diagonalizable);
  CHECK(pw.lambda == QuadraticNumber(1));
  for (const auto& x : pw.vector)
    CHECK(x == QuadraticNumber(0));
}

TEST_CASE("signatures") {
  CHECK(signature(RationalMatrix::identity(4)) == Inertia{4, 0, 0});
  CHECK(signature(rmat({{1, r(-7, 2)}, {r(-7, 2), 1}})) == Inertia{1, 1, 0});
  CHECK(is_lorentzian(GramMatrix(rmat({{1, r(-7, 2)}, {r(-7, 2), 1}}))));
  GramMatrix affine(rmat({{1, -1}, {-1, 1}}));
  CHECK(signature(affine) == Inertia{1, 0, 1});
  CHECK_FALSE(is_lorentzian(affine));
  CHECK(signature(rmat({{0, 1}, {1, 0}})) == Inertia{1, 1, 0});
  CHECK(signature(rmat({{0, 0}, {0, 0}})) == Inertia{0, 0, 2});
  CHECK(signature(rmat({{0, 0, 1}, {0, 0, 0}, {1, 0, 0}})) == Inertia{1, 1, 1});
  ReflectionRep w(testing_support::wehler());
  Inertia iw = signature(w.gram());
  CHECK(iw == Inertia{3, 1, 0});
  CHECK(iw == testing_support::sturm_inertia(w.gram().matrix()));
  CHECK_THROWS(signature(rmat({{1, 2}, {3, 1}})));
}

TEST_CASE("partition forms") {
  GramMatrix g = partition_gram(3, std::vector<int>{1, 2, 2});
  CHECK(g.size() == 5);
  CHECK(signature(g) == Inertia{4, 1, 0});
  CHECK(is_lorentzian(g));
  CHECK(partition_gram(2, std::vector<int>{2}).matrix() == rmat({{1, -2}, {-2, 1}}));
  CHECK(partition_gram(3, std::vector<int>{0, 0, 2}) == partition_gram(3, std::vector<int>{2}));
  GramMatrix ones = partition_gram(3, std::vector<int>{1, 1, 1});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(ones(i, j) == (i == j ? Rational(1) : r(-7, 2)));
  CHECK_THROWS(partition_gram(3, std::vector<int>{1}));
  CHECK_THROWS(partition_gram(1, std::vector<int>{2}));

  Eigen::MatrixXd m(5, 5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      m(i, j) = g(i, j).get_d();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  std::vector<double> got(es.eigenvalues().data(), es.eigenvalues().data() + 5);
  std::vector<double> want{-4 - std::sqrt(74.0), -4 + std::sqrt(74.0), 4, 4, 5};
  std::sort(want.begin(), want.end());
  for (int k = 0; k < 5; ++k)
    CHECK(std::abs(got[k] - want[k]) < 1e-12);
}

TEST_CASE("format matrices as aligned tables") {
  std::string s = format_matrix(rmat({{1, r(-9, 2)}, {r(-9, 2), 1}}));
  CHECK(s.find("-9/2") != std::string::npos);
  CHECK(std::count(s.begin(), s.end(), '\n') >= 1);
}

TEST_CASE("property: carrier blocks give the partition form up to permutation") {
  Rng rng(404);
  for (int trial = 0; trial < 120; ++trial) {
    testing_support::VarietyShape shape;
    shape.n_max = 4;
    ValidatedVariety v = testing_support::random_critical_variety(rng, shape);
    if (v.n() < 2 || v.J().size() < 2)
      continue;
    ReflectionRep rep(v);
    // order J by carrier, then block sizes ascending
    std::vector<std::vector<int>> blocks(v.n());
    for (int j : v.J())
      blocks[v.carrier2(j)].push_back(j);
    std::stable_sort(blocks.begin(), blocks.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    std::vector<int> order, sizes;
    for (const auto& b : blocks) {
      order.insert(order.end(), b.begin(), b.end());
      sizes.push_back(static_cast<int>(b.size()));
    }
    CHECK(restrict_to(rep.gram(), order) == partition_gram(v.n(), sizes));
  }
}

TEST_CASE("property: involutions square to 1 and pair polynomials match the closed form") {
  Rng rng(505);
  for (int trial = 0; trial < 60; ++trial) {
    ValidatedVariety v = testing_support::random_critical_variety(rng);
    ReflectionRep rep(v);
    for (int j : rep.J())
      CHECK(rep.involution(j) * rep.involution(j) == IntegerMatrix::identity(rep.rank()));
    for (int i : rep.J())
      for (int j : rep.J())
        if (i != j)
          CHECK(pair_char_poly(rep, i, j) == pair_char_poly_closed_form(rep.rank(), rep.b().at(i, j)));
  }
}

TEST_CASE("property: distinct reduced words give distinct matrices") {
  Rng rng(606);
  for (int trial = 0; trial < 15; ++trial) {
    ValidatedVariety v = testing_support::random_critical_variety(rng);
    ReflectionRep rep(v);
    std::set<ReducedWord> words;
    for (int k = 0; k < 80; ++k)
      words.insert(testing_support::random_word(rng, rep.J(), static_cast<int>(rng.uniform(0, 8))));
    std::set<std::vector<Integer>> images;
    for (const auto& w : words)
      images.insert(rep.word_matrix(w).data());
    CHECK(images.size() == words.size());
  }
}

TEST_CASE("property: inertia is invariant under unimodular congruence and matches Sturm counts") {
  Rng rng(707);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = static_cast<int>(rng.uniform(2, 6));
    const int n = static_cast<int>(rng.uniform(2, 6));
    std::vector<int> parts = testing_support::composition(rng, k, static_cast<int>(rng.uniform(1, k)));
    std::sort(parts.begin(), parts.end());
    GramMatrix g = partition_gram(n, parts);
    Inertia base = signature(g);
    CHECK(base == testing_support::sturm_inertia(g.matrix()));
    RationalMatrix s = RationalMatrix::identity(k);
    for (int step = 0; step < 6; ++step) {
      int a = static_cast<int>(rng.uniform(0, k - 1)), b = static_cast<int>(rng.uniform(0, k - 1));
      if (a == b)
        continue;
      RationalMatrix e = RationalMatrix::identity(k);
      e(a, b) = rng.uniform(-3, 3);
      s = s * e;
    }
    CHECK(signature(s.transpose() * g.matrix() * s) == base);
  }
  // singular symmetric matrices with zero pivots
  for (int trial = 0; trial < 60; ++trial) {
    const int k = static_cast<int>(rng.uniform(2, 5));
    RationalMatrix m(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = i; j < k; ++j)
        m(i, j) = m(j, i) = rng.coin() ? Rational(0) : Rational(rng.uniform(-2, 2));
    CHECK(signature(m) == testing_support::sturm_inertia(m));
  }
}
