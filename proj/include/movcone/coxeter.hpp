#pragma once

#include "movcone/intersection.hpp"
#include "movcone/matrix.hpp"
#include "movcone/numeric.hpp"
#include "movcone/polynomial.hpp"
#include "movcone/quadratic.hpp"
#include "movcone/variety.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace movcone {

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

// Symmetric Coxeter form: unit diagonal, off-diagonal entries <= -1.
class GramMatrix {
public:
  explicit GramMatrix(RationalMatrix entries);
  std::size_t size() const { return m_.rows(); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const RationalMatrix& matrix() const { return m_; }
  friend bool operator==(const GramMatrix& a, const GramMatrix& b) { return a.m_ == b.m_; }
private:
  RationalMatrix m_;
};

// The form B attached to X. Entries for pairs outside J are -outside_value;
// the default is the literal choice n_l (dimension of the last factor). No
// result about W_J depends on those entries.
GramMatrix bilinear_form(const ValidatedVariety& v, const BMatrixData& b);
GramMatrix bilinear_form(const ValidatedVariety& v, const BMatrixData& b,
                         const Rational& outside_value);

// Principal submatrix on `indices` (0-based, in the given order).
GramMatrix restrict_to(const GramMatrix& g, std::span<const int> indices);

// A word in the generators with no letter repeated twice in a row. In a free
// product of Z/2's every such word is reduced.
class ReducedWord {
public:
  ReducedWord() = default;
  explicit ReducedWord(std::vector<int> letters);

  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int front() const { return letters_.front(); }
  int back() const { return letters_.back(); }
  ReducedWord reversed() const;
  // Appends a letter; throws if it repeats the last one.
  ReducedWord extended(int letter) const;
  // "s3 s2" with 1-based generator labels; "e" for the empty word.
  std::string to_string() const;

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
  friend auto operator<=>(const ReducedWord& a, const ReducedWord& b) {
    if (a.size() != b.size())
      return a.size() <=> b.size();
    return a.letters_ <=> b.letters_;
  }

private:
  std::vector<int> letters_;
};

// The involutions iota_j^* on N^1(X) in the basis {h_i}, j in J.
class ReflectionRep {
public:
  // Throws Errc::Subcritical when codim X < n.
  explicit ReflectionRep(const ValidatedVariety& v);

  int rank() const { return rank_; }
  int n() const { return n_; }
  const std::vector<int>& J() const { return J_; }
  bool in_J(int j) const;
  const BMatrixData& b() const { return b_; }
  const GramMatrix& gram() const { return gram_; }
  GramMatrix gram_J() const;

  const IntegerMatrix& involution(int j) const;
  // Product of the involutions in word order; identity for the empty word.
  IntegerMatrix word_matrix(const ReducedWord& w) const;

private:
  int rank_;
  int n_;
  std::vector<int> J_;
  BMatrixData b_;
  GramMatrix gram_;
  std::map<int, IntegerMatrix> involutions_;
};

const IntegerMatrix& involution_matrix(const ReflectionRep& rep, int j);
IntegerMatrix word_matrix(const ReflectionRep& rep, const ReducedWord& w);

// Characteristic polynomial of iota_i^* iota_j^*, computed from the matrix.
IntPolynomial pair_char_poly(const ReflectionRep& rep, int i, int j);

struct PairEigenpair {
  int i = 0;
  int j = 0;
  Integer b;
  // false for n = 1: the product is unipotent and not diagonalizable.
  bool diagonalizable = false;
  QuadraticNumber lambda{1};
  QuadraticNumber lambda_inverse{1};
  // Eigenvector of iota_i^* iota_j^* for lambda, first nonzero coordinate 1.
  // All zero when not diagonalizable.
  QVector vector;
};

PairEigenpair pair_dominant_eigenpair(const ReflectionRep& rep, int i, int j);

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Sylvester inertia by exact symmetric congruence diagonalization.
Inertia signature(const RationalMatrix& g);
inline Inertia signature(const GramMatrix& g) { return signature(g.matrix()); }

// Signature (k-1, 1, 0) for a k x k form, k >= 2.
bool is_lorentzian(const GramMatrix& g);

// Block form for a partition of |J|: blocks with 1 on the diagonal and -n
// inside, -(2n+1)/2 between blocks. Zero parts are skipped.
GramMatrix partition_gram(int n, std::span<const int> partition);

std::string format_matrix(const IntegerMatrix& m);
std::string format_matrix(const RationalMatrix& m);

} // namespace movcone
