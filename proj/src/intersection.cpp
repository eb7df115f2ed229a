#include "movcone/intersection.hpp"

#include "movcone/errors.hpp"

#include <algorithm>
#include <sstream>

namespace movcone {

CycleClass::CycleClass(std::vector<int> factors, int degree, bool critical,
                       std::map<Exponent, Integer> coeffs)
  : factors_(std::move(factors)), degree_(degree), critical_(critical),
    coeffs_(std::move(coeffs)) {
  for (const auto& [e, c] : coeffs_) {
    int total = 0;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] < 0 || e[k] > factors_[k])
        throw Error(Errc::InvalidArgument, "cycle monomial exceeds truncation H_k^(n_k+1) = 0");
      total += e[k];
    }
    if (e.size() != factors_.size() || total != degree_)
      throw Error(Errc::InvalidArgument, "cycle monomial has total degree " +
                                             std::to_string(total) + ", expected " +
                                             std::to_string(degree_));
  }
}

int CycleClass::n() const { return *std::min_element(factors_.begin(), factors_.end()); }

Integer CycleClass::coefficient(const Exponent& e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

std::string CycleClass::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (!first)
      out << " + ";
    first = false;
    out << it->second;
    for (std::size_t k = 0; k < it->first.size(); ++k) {
      if (it->first[k] == 0)
        continue;
      out << "*H" << k + 1;
      if (it->first[k] > 1)
        out << '^' << it->first[k];
    }
  }
  if (first)
    out << '0';
  return out.str();
}

CycleClass cycle_class(const ValidatedVariety& v) {
  const auto& spec = v.spec();
  const int l = spec.rank();
  std::map<Exponent, Integer> current{{Exponent(l, 0), Integer(1)}};
  for (const auto& row : spec.degrees) {
    std::map<Exponent, Integer> next;
    for (const auto& [e, c] : current) {
      for (int k = 0; k < l; ++k) {
        if (e[k] + 1 > spec.factors[k])
          continue;  // H_k^{n_k+1} = 0
        Exponent f = e;
        ++f[k];
        next[f] += c * row[k];
      }
    }
    current = std::move(next);
  }
  return CycleClass(spec.factors, spec.codim(), !v.subcritical(), std::move(current));
}

Integer b_coefficient(const CycleClass& c, int i, int j) {
  const int l = static_cast<int>(c.factors().size());
  if (i == j)
    throw Error(Errc::InvalidArgument, "b_ij needs i != j");
  if (i < 0 || j < 0 || i >= l || j >= l)
    throw Error(Errc::InvalidArgument, "factor index out of range");
  if (!c.critical())
    throw Error(Errc::Subcritical, "b_ij is defined only when codim X = n");
  Exponent e(l, 0);
  e[i] = 1;
  e[j] = c.n() - 1;
  return c.coefficient(e);
}

Integer pair_b_closed_form(int n, bool same_carrier) {
  if (n < 1)
    throw Error(Errc::InvalidArgument, "n must be >= 1");
  if (n == 1 || same_carrier)
    return Integer(2 * n);
  return Integer(2 * n + 1);
}

const Integer& BMatrixData::at(int i, int j) const {
  auto it = b.find({i, j});
  if (it == b.end())
    throw Error(Errc::InvalidArgument, "b(" + std::to_string(i + 1) + "," +
                                           std::to_string(j + 1) +
                                           ") is not defined (neither index in J)");
  return it->second;
}

BMatrixData b_matrix(const ValidatedVariety& v) { return b_matrix(v, cycle_class(v)); }

BMatrixData b_matrix(const ValidatedVariety& v, const CycleClass& c) {
  if (v.subcritical())
    throw Error(Errc::Subcritical, "the b-matrix is defined only when codim X = n");
  BMatrixData out;
  out.rank = v.rank();
  out.J = v.J();
  for (int i = 0; i < v.rank(); ++i)
    for (int j = 0; j < v.rank(); ++j) {
      if (i == j)
        continue;
      if (v.in_J(j))
        out.b[{i, j}] = b_coefficient(c, i, j);
      else if (v.in_J(i))
        out.b[{i, j}] = b_coefficient(c, j, i);
    }
  for (int i : v.J())
    for (int j : v.J()) {
      if (i == j)
        continue;
      Integer closed = pair_b_closed_form(v.n(), v.carrier2(i) == v.carrier2(j));
      if (out.b[{i, j}] != closed || out.b[{j, i}] != closed)
        throw Error(Errc::InvalidArgument, "internal: b-coefficient disagrees with closed form");
    }
  return out;
}

} // namespace movcone
