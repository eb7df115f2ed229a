#include "movcone/quadratic.hpp"

#include "movcone/errors.hpp"

#include <cmath>
#include <sstream>

namespace movcone {

QuadraticNumber::QuadraticNumber(Rational p, Rational q, Integer d)
  : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {
  if (d_ < 1)
    throw Error(Errc::InvalidArgument, "radicand must be positive");
  if (d_ != 1) {
    auto [s, sf] = square_free_decomposition(d_);
    q_ *= s;
    d_ = sf;
  }
  normalize();
}

void QuadraticNumber::normalize() {
  p_.canonicalize();
  q_.canonicalize();
  if (d_ == 1) {
    p_ += q_;
    q_ = 0;
  }
  if (q_ == 0)
    d_ = 1;
}

Integer QuadraticNumber::common_radicand(const QuadraticNumber& o) const {
  if (q_ == 0)
    return o.d_;
  if (o.q_ == 0 || d_ == o.d_)
    return d_;
  throw Error(Errc::InvalidArgument, "cannot combine sqrt(" + d_.get_str() + ") and sqrt(" +
                                         o.d_.get_str() + ")");
}

QuadraticNumber QuadraticNumber::conjugate() const {
  QuadraticNumber r = *this;
  r.q_ = -r.q_;
  return r;
}

QuadraticNumber QuadraticNumber::inverse() const {
  Rational norm = p_ * p_ - q_ * q_ * Rational(d_);
  if (norm == 0)
    throw Error(Errc::InvalidArgument, "division by zero in Q(sqrt d)");
  QuadraticNumber r = conjugate();
  r.p_ /= norm;
  r.q_ /= norm;
  r.normalize();
  return r;
}

int QuadraticNumber::sign() const {
  int sp = sgn(p_), sq = sgn(q_);
  if (sq == 0)
    return sp;
  if (sp == 0 || sp == sq)
    return sq;
  // Opposite signs: compare p^2 against q^2 d.
  Rational lhs = p_ * p_, rhs = q_ * q_ * Rational(d_);
  if (lhs == rhs)
    return 0;  // unreachable for square-free d > 1
  return lhs > rhs ? sp : sq;
}

double QuadraticNumber::to_double() const {
  return p_.get_d() + q_.get_d() * std::sqrt(d_.get_d());
}

std::string QuadraticNumber::to_string() const {
  std::ostringstream out;
  if (q_ == 0) {
    out << p_;
    return out.str();
  }
  if (p_ != 0)
    out << p_ << (q_ < 0 ? " - " : " + ");
  else if (q_ < 0)
    out << '-';
  Rational mag = abs(q_);
  if (mag != 1)
    out << mag << '*';
  out << "sqrt(" << d_ << ')';
  return out.str();
}

QuadraticNumber QuadraticNumber::operator-() const {
  QuadraticNumber r = *this;
  r.p_ = -r.p_;
  r.q_ = -r.q_;
  return r;
}

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& o) {
  d_ = common_radicand(o);
  p_ += o.p_;
  q_ += o.q_;
  normalize();
  return *this;
}

QuadraticNumber& QuadraticNumber::operator-=(const QuadraticNumber& o) { return *this += -o; }

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& o) {
  Integer d = common_radicand(o);
  Rational p = p_ * o.p_ + q_ * o.q_ * Rational(d);
  Rational q = p_ * o.q_ + q_ * o.p_;
  p_ = p;
  q_ = q;
  d_ = d;
  normalize();
  return *this;
}

QuadraticNumber& QuadraticNumber::operator/=(const QuadraticNumber& o) {
  return *this *= o.inverse();
}

std::pair<Integer, Integer> square_free_decomposition(const Integer& m) {
  if (m <= 0)
    throw Error(Errc::InvalidArgument, "square-free decomposition needs m > 0");
  Integer rest = m, square_root = 1, free = 1;
  for (Integer p = 2; p * p <= rest; ++p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (int k = 0; k < e / 2; ++k)
      square_root *= p;
    if (e % 2)
      free *= p;
  }
  free *= rest;
  return {square_root, free};
}

std::pair<QuadraticNumber, QuadraticNumber> reciprocal_quadratic_roots(const Integer& trace) {
  if (trace <= 2)
    throw Error(Errc::InvalidArgument, "x^2 - t x + 1 has real roots > 1 only for t > 2");
  auto [s, d] = square_free_decomposition(trace * trace - 4);
  Rational half_t(trace, 2), half_s(s, 2);
  half_t.canonicalize();
  half_s.canonicalize();
  QuadraticNumber large(half_t, half_s, d), small(half_t, -half_s, d);
  return {large, small};
}

QVector kernel_vector(std::vector<QVector> rows) {
  const std::size_t n = rows.size();
  if (n == 0)
    throw Error(Errc::InvalidArgument, "empty matrix");
  const std::size_t cols = rows[0].size();
  std::vector<int> pivot_of_col(cols, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < n; ++c) {
    std::size_t piv = r;
    while (piv < n && rows[piv][c].sign() == 0)
      ++piv;
    if (piv == n)
      continue;
    std::swap(rows[r], rows[piv]);
    QuadraticNumber inv = rows[r][c].inverse();
    for (auto& x : rows[r])
      x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || rows[i][c].sign() == 0)
        continue;
      QuadraticNumber f = rows[i][c];
      for (std::size_t k = 0; k < cols; ++k)
        rows[i][k] -= f * rows[r][k];
    }
    pivot_of_col[c] = static_cast<int>(r);
    ++r;
  }
  std::size_t free_col = cols;
  for (std::size_t c = 0; c < cols; ++c)
    if (pivot_of_col[c] < 0) {
      free_col = c;
      break;
    }
  if (free_col == cols)
    throw Error(Errc::InvalidArgument, "matrix has trivial kernel");
  QVector v(cols, QuadraticNumber(0));
  v[free_col] = QuadraticNumber(1);
  for (std::size_t c = 0; c < cols; ++c)
    if (pivot_of_col[c] >= 0)
      v[c] = -rows[pivot_of_col[c]][free_col];
  for (const auto& x : v)
    if (x.sign() != 0) {
      QuadraticNumber inv = x.inverse();
      for (auto& y : v)
        y *= inv;
      break;
    }
  return v;
}

} // namespace movcone
