#include "movcone/coxeter.hpp"

#include "movcone/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace movcone {

GramMatrix::GramMatrix(RationalMatrix entries) : m_(std::move(entries)) {
  if (!m_.symmetric())
    throw Error(Errc::InvalidArgument, "Gram matrix must be square and symmetric");
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = 0; j < m_.cols(); ++j) {
      if (i == j && m_(i, j) != 1)
        throw Error(Errc::InvalidArgument, "Gram matrix must have unit diagonal");
      if (i != j && m_(i, j) > -1)
        throw Error(Errc::InvalidArgument, "Gram matrix off-diagonal entries must be <= -1");
    }
}

GramMatrix bilinear_form(const ValidatedVariety& v, const BMatrixData& b) {
  return bilinear_form(v, b, Rational(v.spec().factors.back()));
}

GramMatrix bilinear_form(const ValidatedVariety& v, const BMatrixData& b,
                         const Rational& outside_value) {
  if (v.subcritical())
    throw Error(Errc::Subcritical, "the Coxeter form is defined only when codim X = n");
  if (outside_value < 1)
    throw Error(Errc::InvalidArgument, "c_ij must be >= 1");
  const int l = v.rank();
  RationalMatrix m(l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      if (i == j) {
        m(i, j) = 1;
      } else if (v.in_J(i) || v.in_J(j)) {
        m(i, j) = Rational(-b.at(i, j), 2);
        m(i, j).canonicalize();
      } else {
        m(i, j) = -outside_value;
      }
    }
  return GramMatrix(std::move(m));
}

GramMatrix restrict_to(const GramMatrix& g, std::span<const int> indices) {
  if (indices.empty())
    throw Error(Errc::InvalidArgument, "cannot restrict to an empty index set");
  const std::size_t k = indices.size();
  RationalMatrix m(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t c = 0; c < k; ++c) {
      if (indices[a] < 0 || indices[a] >= static_cast<int>(g.size()) || indices[c] < 0 ||
          indices[c] >= static_cast<int>(g.size()))
        throw Error(Errc::InvalidArgument, "restriction index out of range");
      m(a, c) = g(indices[a], indices[c]);
    }
  return GramMatrix(std::move(m));
}

ReducedWord::ReducedWord(std::vector<int> letters) : letters_(std::move(letters)) {
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (letters_[k] < 0)
      throw Error(Errc::InvalidArgument, "negative generator index in word");
    if (k > 0 && letters_[k] == letters_[k - 1])
      throw Error(Errc::NonReducedWord, "word repeats s" + std::to_string(letters_[k] + 1) +
                                            " at position " + std::to_string(k + 1));
  }
}

ReducedWord ReducedWord::reversed() const {
  return ReducedWord(std::vector<int>(letters_.rbegin(), letters_.rend()));
}

ReducedWord ReducedWord::extended(int letter) const {
  std::vector<int> next = letters_;
  next.push_back(letter);
  return ReducedWord(std::move(next));
}

std::string ReducedWord::to_string() const {
  if (letters_.empty())
    return "e";
  std::ostringstream out;
  for (std::size_t k = 0; k < letters_.size(); ++k)
    out << (k ? " s" : "s") << letters_[k] + 1;
  return out.str();
}

ReflectionRep::ReflectionRep(const ValidatedVariety& v)
  : rank_(v.rank()), n_(v.n()), J_(v.J()),
    b_(v.subcritical() ? throw Error(Errc::Subcritical,
                                     "codim X < n: Bir(X) = Aut(X) acts trivially on N^1(X) "
                                     "and Nef(X) = Mov(X); descent does not apply")
                       : b_matrix(v)),
    gram_(bilinear_form(v, b_)) {
  for (int j : J_) {
    IntegerMatrix m = IntegerMatrix::identity(rank_);
    for (int i = 0; i < rank_; ++i)
      m(i, j) = i == j ? Integer(-1) : b_.at(i, j);
    involutions_.emplace(j, std::move(m));
  }
}

bool ReflectionRep::in_J(int j) const { return std::binary_search(J_.begin(), J_.end(), j); }

GramMatrix ReflectionRep::gram_J() const { return restrict_to(gram_, J_); }

const IntegerMatrix& ReflectionRep::involution(int j) const {
  auto it = involutions_.find(j);
  if (it == involutions_.end())
    throw Error(Errc::NotInJ, "no birational involution for factor " + std::to_string(j + 1) +
                                  ": n_" + std::to_string(j + 1) + " != n");
  return it->second;
}

IntegerMatrix ReflectionRep::word_matrix(const ReducedWord& w) const {
  IntegerMatrix m = IntegerMatrix::identity(rank_);
  for (int letter : w.letters())
    m = m * involution(letter);
  return m;
}

const IntegerMatrix& involution_matrix(const ReflectionRep& rep, int j) {
  return rep.involution(j);
}

IntegerMatrix word_matrix(const ReflectionRep& rep, const ReducedWord& w) {
  return rep.word_matrix(w);
}

namespace {

void require_pair(const ReflectionRep& rep, int i, int j) {
  if (i == j)
    throw Error(Errc::InvalidArgument, "pair needs two distinct generators");
  if (!rep.in_J(i) || !rep.in_J(j))
    throw Error(Errc::NotInJ, "pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                  ") is not inside J");
}

} // namespace

IntPolynomial pair_char_poly(const ReflectionRep& rep, int i, int j) {
  require_pair(rep, i, j);
  return characteristic_polynomial(rep.involution(i) * rep.involution(j));
}

PairEigenpair pair_dominant_eigenpair(const ReflectionRep& rep, int i, int j) {
  require_pair(rep, i, j);
  PairEigenpair out;
  out.i = i;
  out.j = j;
  out.b = rep.b().at(i, j);
  const int l = rep.rank();
  if (out.b == 2) {
    out.vector.assign(l, QuadraticNumber(0));
    return out;
  }
  out.diagonalizable = true;
  auto [large, small] = reciprocal_quadratic_roots(out.b * out.b - 2);
  out.lambda = large;
  out.lambda_inverse = small;
  IntegerMatrix m = rep.involution(i) * rep.involution(j);
  std::vector<QVector> rows(l, QVector(l));
  for (int r = 0; r < l; ++r)
    for (int c = 0; c < l; ++c)
      rows[r][c] = QuadraticNumber(m(r, c)) - (r == c ? large : QuadraticNumber(0));
  out.vector = kernel_vector(std::move(rows));
  return out;
}

Inertia signature(const RationalMatrix& g) {
  if (!g.symmetric())
    throw Error(Errc::InvalidArgument, "signature needs a symmetric matrix");
  RationalMatrix a = g;
  const std::size_t n = a.rows();
  Inertia out;

  auto swap_index = [&](std::size_t x, std::size_t y) {
    if (x == y)
      return;
    for (std::size_t c = 0; c < n; ++c)
      std::swap(a(x, c), a(y, c));
    for (std::size_t r = 0; r < n; ++r)
      std::swap(a(r, x), a(r, y));
  };

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, piv) == 0)
      ++piv;
    if (piv == n) {
      // All remaining diagonal entries vanish: fold a nonzero off-diagonal
      // entry into the diagonal with row/col_x += row/col_y.
      std::size_t x = n, y = n;
      for (std::size_t r = k; r < n && x == n; ++r)
        for (std::size_t c = r + 1; c < n; ++c)
          if (a(r, c) != 0) {
            x = r;
            y = c;
            break;
          }
      if (x == n) {
        out.zero += static_cast<int>(n - k);
        break;
      }
      for (std::size_t c = 0; c < n; ++c)
        a(x, c) += a(y, c);
      for (std::size_t r = 0; r < n; ++r)
        a(r, x) += a(r, y);
      piv = x;
    }
    swap_index(k, piv);
    const Rational p = a(k, k);
    if (p > 0)
      ++out.positive;
    else
      ++out.negative;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a(r, k) == 0)
        continue;
      Rational f = a(r, k) / p;
      for (std::size_t c = k + 1; c < n; ++c)
        a(r, c) -= f * a(k, c);
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      a(r, k) = 0;
      a(k, r) = 0;
    }
  }
  return out;
}

bool is_lorentzian(const GramMatrix& g) {
  if (g.size() < 2)
    return false;
  return signature(g) == Inertia{static_cast<int>(g.size()) - 1, 1, 0};
}

GramMatrix partition_gram(int n, std::span<const int> partition) {
  if (n < 2)
    throw Error(Errc::InvalidArgument, "partition form needs n >= 2");
  int total = 0;
  for (int r : partition) {
    if (r < 0)
      throw Error(Errc::InvalidArgument, "partition parts must be nonnegative");
    total += r;
  }
  if (total < 2)
    throw Error(Errc::InvalidArgument, "partition form needs |J| >= 2");
  std::vector<int> block;
  for (std::size_t k = 0; k < partition.size(); ++k)
    block.insert(block.end(), partition[k], static_cast<int>(k));
  const Rational inside(-n), outside = make_rational(-(2 * n + 1), 2);
  RationalMatrix m(total, total);
  for (int r = 0; r < total; ++r)
    for (int c = 0; c < total; ++c)
      m(r, c) = r == c ? Rational(1) : block[r] == block[c] ? inside : outside;
  return GramMatrix(std::move(m));
}

namespace {

template <typename T>
std::string format_any(const Matrix<T>& m) {
  std::vector<std::string> cells(m.rows() * m.cols());
  std::size_t width = 0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      cells[r * m.cols() + c] = m(r, c).get_str();
      width = std::max(width, cells[r * m.cols() + c].size());
    }
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const std::string& s = cells[r * m.cols() + c];
      out << (c ? "  " : " ") << std::string(width - s.size(), ' ') << s;
    }
    out << " ]\n";
  }
  return out.str();
}

} // namespace

std::string format_matrix(const IntegerMatrix& m) { return format_any(m); }
std::string format_matrix(const RationalMatrix& m) { return format_any(m); }

} // namespace movcone
