#pragma once

#include "movcone/cone.hpp"

#include <complex>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace movcone {

// A floating estimate with an absolute error bound.
struct Estimate {
  double value = 0;
  double error = 0;
};

struct Eigenvalue {
  std::complex<double> value;
  double error = 0;  // radius of a disc around `value` known to contain the root
  int multiplicity = 1;
};

// Roots of an integer polynomial with multiplicities, from a squarefree
// decomposition over Q and Aberth iteration in 50-digit arithmetic.
std::vector<Eigenvalue> polynomial_roots(const IntPolynomial& p);

struct SpectralReport {
  ReducedWord word;
  bool exact = false;  // two-letter word handled over a quadratic field
  Estimate lambda1;    // spectral radius of g^*
  Estimate mu1;        // spectral radius of (g^{-1})^*
  std::optional<QuadraticNumber> lambda_exact;  // set when `exact`
  std::vector<Eigenvalue> eigenvalues;          // of g^*, with multiplicity
  bool unit_others = false;
  // The smallest modulus is 1/lambda1 and the moduli multiply to 1, within tol.
  bool reciprocal_pair = false;
  std::vector<double> delta_plus;   // dominant eigenvector of g^*, sum = 1
  std::vector<double> delta_minus;  // dominant eigenvector of (g^{-1})^*, sum = 1
  bool sum_interior = false;
};

// g^* = word_matrix(w). Requires w nonempty with w.w reduced and W_J
// Lorentzian. Throws NotLorentzian, NoGrowth (spectral radius 1) or
// NonConvergent.
SpectralReport spectral_report(const ReflectionRep& rep, const ReducedWord& w, double tol = 1e-9);

struct NuVol {
  double value = 0;
  std::optional<Rational> exact;  // dim X / 2 when certified
  bool certified = false;
};

// dim X * (1 + log mu1 / log lambda1)^{-1}.
NuVol nu_vol(const ValidatedVariety& v, const SpectralReport& report, double tol = 1e-9);

// word,lambda1,mu1,nu_vol,certified
void write_numdim_csv(std::ostream& out,
                      const std::vector<std::pair<SpectralReport, NuVol>>& rows);

} // namespace movcone
