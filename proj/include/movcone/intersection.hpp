#pragma once

#include "movcone/numeric.hpp"
#include "movcone/variety.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace movcone {

using Exponent = std::vector<int>;

// The class of X = D_1 ... D_m in the Chow ring of P^{n_1} x ... x P^{n_l},
// i.e. Z[H_1..H_l] / (H_k^{n_k+1}). Only monomials of total degree m survive.
class CycleClass {
public:
  CycleClass(std::vector<int> factors, int degree, bool critical,
             std::map<Exponent, Integer> coeffs);

  const std::vector<int>& factors() const { return factors_; }
  int degree() const { return degree_; }
  // codim X = n, so H_i H_j^{n-1} has the right degree.
  bool critical() const { return critical_; }
  int n() const;

  // Zero for monomials that do not occur.
  Integer coefficient(const Exponent& e) const;
  const std::map<Exponent, Integer>& terms() const { return coeffs_; }

  // "4*H1^3 + 10*H1^2*H2 + ...", exponent vectors in decreasing lexicographic order.
  std::string to_string() const;

private:
  std::vector<int> factors_;
  int degree_;
  bool critical_;
  std::map<Exponent, Integer> coeffs_;
};

CycleClass cycle_class(const ValidatedVariety& v);

// Coefficient of H_i H_j^{n-1} in X (0-based i, j).
Integer b_coefficient(const CycleClass& c, int i, int j);

// 2n when both J-columns carry their 2 in the same divisor, 2n+1 otherwise.
// For n = 1 there is a single divisor, so the carriers always coincide.
Integer pair_b_closed_form(int n, bool same_carrier);

// The intersection numbers entering B and the involutions. Entry (i, j) is
// stored for every i != j with i or j in J, always as the coefficient of
// H_a H_c^{n-1} with c the J-index of the pair (c = j when j is in J).
// For pairs inside J both readings agree.
struct BMatrixData {
  int rank = 0;
  std::vector<int> J;
  std::map<std::pair<int, int>, Integer> b;

  const Integer& at(int i, int j) const;
  bool contains(int i, int j) const { return b.count({i, j}) != 0; }
};

BMatrixData b_matrix(const ValidatedVariety& v);
BMatrixData b_matrix(const ValidatedVariety& v, const CycleClass& c);

} // namespace movcone
