#include "movcone/numdim.hpp"

#include "movcone/errors.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

namespace movcone {

namespace {

namespace mp = boost::multiprecision;
using Real = mp::cpp_bin_float_50;
using Complex = mp::cpp_complex_50;

// Polynomials over Q, lowest degree first, no trailing zeros.
using RPoly = std::vector<Rational>;

void trim(RPoly& p) {
  while (!p.empty() && p.back() == 0)
    p.pop_back();
}

int deg(const RPoly& p) { return static_cast<int>(p.size()) - 1; }

RPoly derivative(const RPoly& p) {
  RPoly out;
  for (std::size_t k = 1; k < p.size(); ++k)
    out.push_back(p[k] * static_cast<long>(k));
  trim(out);
  return out;
}

RPoly subtract(RPoly a, const RPoly& b) {
  if (a.size() < b.size())
    a.resize(b.size(), Rational(0));
  for (std::size_t k = 0; k < b.size(); ++k)
    a[k] -= b[k];
  trim(a);
  return a;
}

// Quotient and remainder; b nonzero.
std::pair<RPoly, RPoly> divmod(RPoly a, const RPoly& b) {
  RPoly q;
  if (deg(a) >= deg(b))
    q.assign(a.size() - b.size() + 1, Rational(0));
  while (!a.empty() && deg(a) >= deg(b)) {
    const int shift = deg(a) - deg(b);
    Rational c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t k = 0; k < b.size(); ++k)
      a[k + shift] -= c * b[k];
    trim(a);
  }
  trim(q);
  return {q, a};
}

RPoly monic(RPoly p) {
  Rational lead = p.back();
  for (auto& c : p)
    c /= lead;
  return p;
}

RPoly gcd(RPoly a, RPoly b) {
  while (!b.empty()) {
    RPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? a : monic(a);
}

// Yun's squarefree decomposition: f = prod a_i^i with each a_i squarefree.
std::vector<std::pair<RPoly, int>> squarefree(const RPoly& f) {
  std::vector<std::pair<RPoly, int>> out;
  RPoly df = derivative(f);
  RPoly a0 = gcd(f, df);
  RPoly b = divmod(f, a0).first;
  RPoly c = divmod(df, a0).first;
  RPoly d = subtract(c, derivative(b));
  for (int i = 1; deg(b) > 0; ++i) {
    RPoly a = gcd(b, d);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = subtract(c, derivative(b));
    if (deg(a) > 0)
      out.emplace_back(std::move(a), i);
  }
  return out;
}

// Value and derivative by Horner.
std::pair<Complex, Complex> horner(const std::vector<Real>& p, const Complex& z) {
  Complex v(0), dv(0);
  for (std::size_t k = p.size(); k-- > 0;) {
    dv = dv * z + v;
    v = v * z + Complex(p[k]);
  }
  return {v, dv};
}

std::vector<Eigenvalue> squarefree_roots(const RPoly& q, int multiplicity) {
  const int d = deg(q);
  std::vector<Real> coeffs;
  for (const auto& c : q)
    coeffs.push_back(Real(c.get_num().get_str()) / Real(c.get_den().get_str()));

  Real bound(0);
  for (int k = 0; k < d; ++k)
    bound = std::max(bound, Real(mp::abs(coeffs[k] / coeffs[d])));
  bound += 1;

  std::vector<Complex> z(d);
  for (int k = 0; k < d; ++k) {
    Real angle = 2 * std::numbers::pi_v<double> * k / d + 0.4;
    z[k] = Complex(bound * mp::cos(angle), bound * mp::sin(angle));
  }
  const Real eps("1e-45");
  for (int it = 0; it < 1000; ++it) {
    Real largest(0);
    for (int k = 0; k < d; ++k) {
      auto [v, dv] = horner(coeffs, z[k]);
      if (v == Complex(0))
        continue;
      Complex ratio = v / dv;
      Complex sum(0);
      for (int j = 0; j < d; ++j)
        if (j != k)
          sum += Complex(1) / (z[k] - z[j]);
      Complex step = ratio / (Complex(1) - ratio * sum);
      z[k] -= step;
      largest = std::max(largest, Real(mp::abs(step) / std::max(Real(1), Real(mp::abs(z[k])))));
    }
    if (largest < eps)
      break;
  }

  std::vector<Eigenvalue> out;
  for (int k = 0; k < d; ++k) {
    auto [v, dv] = horner(coeffs, z[k]);
    Real err = dv == Complex(0) ? Real(0) : Real(d * mp::abs(v / dv));
    Eigenvalue e;
    e.value = {static_cast<double>(z[k].real()), static_cast<double>(z[k].imag())};
    e.error = static_cast<double>(err) + 1e-16 * std::abs(e.value);
    e.multiplicity = multiplicity;
    out.push_back(e);
  }
  return out;
}

bool by_modulus_desc(const Eigenvalue& a, const Eigenvalue& b) {
  double ma = std::abs(a.value), mb = std::abs(b.value);
  if (ma != mb)
    return ma > mb;
  if (a.value.real() != b.value.real())
    return a.value.real() > b.value.real();
  return a.value.imag() > b.value.imag();
}

Estimate largest_modulus(const std::vector<Eigenvalue>& roots) {
  Estimate best;
  for (const auto& r : roots)
    if (std::abs(r.value) > best.value)
      best = {std::abs(r.value), r.error};
  return best;
}

} // namespace

std::vector<Eigenvalue> polynomial_roots(const IntPolynomial& p) {
  if (p.degree() < 1)
    return {};
  RPoly f;
  for (const auto& c : p.coefficients())
    f.push_back(Rational(c));
  std::vector<Eigenvalue> out;
  for (const auto& [factor, mult] : squarefree(monic(f))) {
    auto roots = squarefree_roots(factor, mult);
    out.insert(out.end(), roots.begin(), roots.end());
  }
  std::sort(out.begin(), out.end(), by_modulus_desc);
  return out;
}

SpectralReport spectral_report(const ReflectionRep& rep, const ReducedWord& w, double tol) {
  if (w.empty())
    throw Error(Errc::InvalidArgument, "spectral report needs a nonempty word");
  if (w.size() >= 2 && w.front() == w.back())
    throw Error(Errc::NonReducedWord, "the word " + w.to_string() +
                                          " is not cyclically reduced (first letter = last letter)");
  if (!is_lorentzian(rep.gram_J()))
    throw Error(Errc::NotLorentzian,
                "W_J is not Lorentzian: B_J does not have signature (|J|-1, 1)");

  SpectralReport r;
  r.word = w;
  const IntegerMatrix m = rep.word_matrix(w);
  const IntegerMatrix inv = rep.word_matrix(w.reversed());

  if (w.size() == 2) {
    PairEigenpair pe = pair_dominant_eigenpair(rep, w.front(), w.back());
    if (!pe.diagonalizable)
      throw Error(Errc::NoGrowth, "iota_i iota_j is unipotent for n = 1: spectral radius 1");
    r.exact = true;
    r.lambda_exact = pe.lambda;
    double lam = pe.lambda.to_double();
    r.lambda1 = {lam, 4e-16 * lam};
    r.mu1 = r.lambda1;
    r.eigenvalues.push_back({{lam, 0}, r.lambda1.error, 1});
    if (rep.rank() > 2)
      r.eigenvalues.push_back({{1, 0}, 0, rep.rank() - 2});
    double inv_lam = pe.lambda_inverse.to_double();
    r.eigenvalues.push_back({{inv_lam, 0}, 4e-16 * inv_lam, 1});
    r.unit_others = true;
    r.reciprocal_pair = true;
  } else {
    r.eigenvalues = polynomial_roots(characteristic_polynomial(m));
    r.lambda1 = largest_modulus(r.eigenvalues);
    if (r.lambda1.value <= kGrowthThreshold)
      throw Error(Errc::NoGrowth, "word_matrix(" + w.to_string() + ") has spectral radius 1");
    r.mu1 = largest_modulus(polynomial_roots(characteristic_polynomial(inv)));

    // Drop one copy of the largest and one of the smallest root; the rest
    // should sit on the unit circle.
    std::vector<Eigenvalue> rest = r.eigenvalues;
    auto drop = [&rest](std::size_t k) {
      if (--rest[k].multiplicity == 0)
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
    };
    const Eigenvalue smallest = rest.back();
    drop(0);
    drop(rest.size() - 1);
    r.unit_others = std::all_of(rest.begin(), rest.end(), [tol](const Eigenvalue& e) {
      return std::abs(std::abs(e.value) - 1) <= tol;
    });
    double log_product = 0;
    for (const auto& e : r.eigenvalues)
      log_product += e.multiplicity * std::log(std::abs(e.value));
    r.reciprocal_pair = std::abs(std::abs(smallest.value) - 1 / r.lambda1.value) <= tol &&
                        std::abs(log_product) <= tol;
  }

  try {
    r.delta_plus = dominant_direction(m, 1e-12).direction;
    r.delta_minus = dominant_direction(inv, 1e-12).direction;
  } catch (const Error& e) {
    if (e.code() == Errc::NoAttractingDirection)
      throw Error(Errc::NoGrowth, e.what());
    throw;
  }

  DivisorClass a(rep.rank());
  for (int k = 0; k < rep.rank(); ++k)
    a[k] = Rational(r.delta_plus[k]) + Rational(r.delta_minus[k]);
  DescentResult d = reduce_to_nef(a, rep);
  r.sum_interior = d.verdict == Verdict::Nef &&
                   std::all_of(d.final_class.begin(), d.final_class.end(),
                               [](const Rational& x) { return x > 0; });
  return r;
}

NuVol nu_vol(const ValidatedVariety& v, const SpectralReport& report, double tol) {
  if (!(report.lambda1.value > 1) || !(report.mu1.value > 1))
    throw Error(Errc::InvalidArgument, "nu_vol needs lambda1 > 1");
  NuVol out;
  out.value = v.dim() / (1 + std::log(report.mu1.value) / std::log(report.lambda1.value));
  bool equal = report.exact ||
               std::abs(report.lambda1.value - report.mu1.value) <=
                   tol * std::max(1.0, report.lambda1.value);
  if (report.unit_others && report.reciprocal_pair && equal) {
    out.certified = true;
    out.exact = make_rational(v.dim(), 2);
  }
  return out;
}

void write_numdim_csv(std::ostream& out,
                      const std::vector<std::pair<SpectralReport, NuVol>>& rows) {
  out << "word,lambda1,mu1,nu_vol,certified\n";
  char buf[64];
  for (const auto& [r, nu] : rows) {
    out << '"' << r.word.to_string() << '"';
    std::snprintf(buf, sizeof buf, ",%.17g,%.17g,", r.lambda1.value, r.mu1.value);
    out << buf;
    if (nu.exact)
      out << nu.exact->get_str();
    else {
      std::snprintf(buf, sizeof buf, "%.17g", nu.value);
      out << buf;
    }
    out << ',' << (nu.certified ? "true" : "false") << '\n';
  }
}

} // namespace movcone
