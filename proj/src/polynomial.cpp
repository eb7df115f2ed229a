#include "movcone/polynomial.hpp"

#include "movcone/errors.hpp"

#include <sstream>

namespace movcone {

IntPolynomial::IntPolynomial(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) {
  trim();
}

IntPolynomial IntPolynomial::monomial(const Integer& c, int degree) {
  std::vector<Integer> coeffs(degree + 1, Integer(0));
  coeffs[degree] = c;
  return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
}

Integer IntPolynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size()))
    return Integer(0);
  return coeffs_[k];
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty())
    return IntPolynomial();
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
    out[i] += b.coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::pow(int e) const {
  IntPolynomial out({Integer(1)});
  for (int i = 0; i < e; ++i)
    out = out * *this;
  return out;
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty())
    return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Integer& c = coeffs_[k];
    if (c == 0)
      continue;
    Integer mag = abs(c);
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (k == 0 || mag != 1) {
      out << mag;
      if (k > 0)
        out << '*';
    }
    if (k >= 1)
      out << 'x';
    if (k >= 2)
      out << '^' << k;
  }
  return out.str();
}

IntPolynomial pair_char_poly_closed_form(int rank, const Integer& b) {
  if (rank < 2)
    throw Error(Errc::InvalidArgument, "rank must be >= 2");
  IntPolynomial x_minus_1({Integer(-1), Integer(1)});
  IntPolynomial quad({Integer(1), Integer(-(b * b - 2)), Integer(1)});
  return x_minus_1.pow(rank - 2) * quad;
}

IntPolynomial characteristic_polynomial(const Matrix<Integer>& a) {
  if (!a.square())
    throw Error(Errc::InvalidArgument, "characteristic polynomial needs a square matrix");
  std::vector<Integer> desc = berkowitz_descending(a);
  return IntPolynomial(std::vector<Integer>(desc.rbegin(), desc.rend()));
}

} // namespace movcone
