#pragma once

#include "movcone/coxeter.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace movcone {

// Coordinates beta_i of a class in the basis {h_i}; Nef(X) is the orthant.
using DivisorClass = std::vector<Rational>;

Rational s_value(const DivisorClass& e);

enum class WitnessKind {
  NegativeOutsideJ,  // beta_k < 0 for some k not in J
  TwoNegativeInJ,    // beta_j, beta_j' < 0 for j != j' in J
  PairInequality,    // 2 beta_j + b_jj' beta_j' < 0 for j, j' in J
};

struct Witness {
  WitnessKind kind;
  int first = -1;
  int second = -1;
  friend bool operator==(const Witness&, const Witness&) = default;
};

const char* witness_name(WitnessKind kind);

// First violated necessary condition for pseudoeffectivity, checked in the
// order (a) negative outside J, (b) two negatives in J, (c) pair inequality.
std::optional<Witness> effectivity_witness(const DivisorClass& e, const ReflectionRep& rep);

enum class Verdict { Nef, Outside, Undetermined };
const char* verdict_name(Verdict v);

struct TraceStep {
  std::optional<int> letter;  // empty for the starting class
  DivisorClass cls;
  Rational s;
};

struct DescentResult {
  Verdict verdict = Verdict::Undetermined;
  // Involutions in the order they were applied. For Nef,
  // word_matrix(word) * final_class == input.
  ReducedWord word;
  DivisorClass final_class;
  std::vector<TraceStep> trace;
  std::optional<Witness> witness;
};

// max(1000, 2*ceil(s(e))), saturated to the long range.
long default_max_steps(const DivisorClass& e);

// Walks E -> iota_j^* E at the unique negative J-coordinate until the class
// is nef, fails a witness check, or the step budget runs out.
DescentResult reduce_to_nef(const DivisorClass& e, const ReflectionRep& rep,
                            std::optional<long> max_steps = std::nullopt);

struct Chamber {
  ReducedWord word;
  // Columns are the images of h_1..h_l, i.e. the chamber's extremal rays.
  IntegerMatrix generators;
};

inline constexpr std::size_t kDefaultChamberCap = 2'000'000;

// 1 + sum_{d=1..depth} k (k-1)^(d-1), saturating at UINT64_MAX.
std::uint64_t reduced_word_count(int generators, int depth);

// Chambers w^* Nef(X) for all reduced words of length <= depth over J, in
// breadth-first order (shorter words first, then lexicographic).
std::vector<Chamber> chamber_orbit(const ReflectionRep& rep, int depth,
                                   std::size_t max_chambers = kDefaultChamberCap);

enum class ConeKind {
  Face,       // orbit of the face spanned by {h_k : k != i}, i not in J
  EigenPair,  // orbit of cone(v_lambda(i,j), h_k : k != i,j), i, j in J
};

struct ConeDescription {
  ConeKind kind = ConeKind::Face;
  int first = -1;
  int second = -1;
  // Rays, each scaled so its first nonzero coordinate is +-1; sorted.
  std::vector<QVector> generators;
  ReducedWord orbit_word;
};

using PairEigenData = std::map<std::pair<int, int>, PairEigenpair>;

// Eigendata for every pair i < j in J.
PairEigenData pair_eigendata(const ReflectionRep& rep);

// The dominant eigenvector oriented into the movable cone (s > 0), or the
// zero vector for n = 1.
QVector boundary_eigenvector(const PairEigenpair& e);

// Throws Errc::NotLorentzian unless B_J has signature (|J|-1, 1); |J| = 1
// has no pair cones and is accepted.
std::vector<ConeDescription> boundary_cones(const ReflectionRep& rep, const PairEigenData& eigen,
                                            int depth,
                                            std::size_t max_chambers = kDefaultChamberCap);

QVector normalize_ray(QVector v);

struct LimitDirection {
  std::vector<double> direction;  // on the slice sum(coords) = 1
  double eigenvalue = 0;
  double residual = 0;            // |Mv - lambda v|_inf / (lambda |v|_inf)
  int iterations = 0;
};

// Power iteration for the dominant eigendirection of an integer matrix.
// Throws NoAttractingDirection when the spectral radius is 1 and
// NonConvergent if the residual does not reach `tol`.
LimitDirection dominant_direction(const IntegerMatrix& m, double tol = 1e-13,
                                  int max_iterations = 100000);

// Direction of the chambers w, ww, www, ... . Requires w nonempty and ww
// reduced (first letter != last letter unless |w| = 1).
LimitDirection limit_direction(const ReflectionRep& rep, const ReducedWord& w,
                               double tol = 1e-13, int max_iterations = 100000);

// Spectral radius of m, estimated in floating point.
double spectral_radius(const IntegerMatrix& m);

// Spectral radii at or below this threshold are treated as exactly 1. Word
// matrices are integral with all but one eigenvalue on or inside the unit
// circle, so a radius above 1 is the Mahler measure of an integer
// polynomial; in low degree that is at least Lehmer's number 1.17628.
inline constexpr double kGrowthThreshold = 1.1;

} // namespace movcone
