#include "movcone/cone.hpp"

#include "movcone/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <climits>
#include <cmath>
#include <set>

namespace movcone {

Rational s_value(const DivisorClass& e) {
  Rational s(0);
  for (const auto& x : e)
    s += x;
  return s;
}

const char* witness_name(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::NegativeOutsideJ: return "negative-outside-J";
    case WitnessKind::TwoNegativeInJ: return "two-negative-in-J";
    case WitnessKind::PairInequality: return "pair-inequality";
  }
  return "unknown";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Nef: return "Nef";
    case Verdict::Outside: return "Outside";
    case Verdict::Undetermined: return "Undetermined";
  }
  return "unknown";
}

namespace {

void require_rank(const DivisorClass& e, const ReflectionRep& rep) {
  if (static_cast<int>(e.size()) != rep.rank())
    throw Error(Errc::InvalidArgument, "class has " + std::to_string(e.size()) +
                                           " coordinates, expected " +
                                           std::to_string(rep.rank()));
}

} // namespace

std::optional<Witness> effectivity_witness(const DivisorClass& e, const ReflectionRep& rep) {
  require_rank(e, rep);
  for (int k = 0; k < rep.rank(); ++k)
    if (!rep.in_J(k) && e[k] < 0)
      return Witness{WitnessKind::NegativeOutsideJ, k, -1};
  int first_negative = -1;
  for (int j : rep.J())
    if (e[j] < 0) {
      if (first_negative >= 0)
        return Witness{WitnessKind::TwoNegativeInJ, first_negative, j};
      first_negative = j;
    }
  for (int j1 : rep.J())
    for (int j2 : rep.J()) {
      if (j1 == j2)
        continue;
      if (2 * e[j1] + Rational(rep.b().at(j1, j2)) * e[j2] < 0)
        return Witness{WitnessKind::PairInequality, j1, j2};
    }
  return std::nullopt;
}

long default_max_steps(const DivisorClass& e) {
  Rational s = s_value(e);
  Integer ceil_s;
  mpz_cdiv_q(ceil_s.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
  Integer twice = 2 * ceil_s;
  if (twice > LONG_MAX)
    return LONG_MAX;
  return std::max(1000L, twice.get_si());
}

DescentResult reduce_to_nef(const DivisorClass& e, const ReflectionRep& rep,
                            std::optional<long> max_steps) {
  require_rank(e, rep);
  const long budget = max_steps.value_or(default_max_steps(e));
  if (budget < 1)
    throw Error(Errc::InvalidArgument, "max_steps must be >= 1");

  DescentResult out;
  DivisorClass current = e;
  std::vector<int> letters;
  out.trace.push_back({std::nullopt, current, s_value(current)});
  for (long step = 0;; ++step) {
    if (std::all_of(current.begin(), current.end(), [](const Rational& x) { return x >= 0; })) {
      out.verdict = Verdict::Nef;
      break;
    }
    if (auto w = effectivity_witness(current, rep)) {
      out.verdict = Verdict::Outside;
      out.witness = w;
      break;
    }
    if (step == budget) {
      out.verdict = Verdict::Undetermined;
      break;
    }
    // Witness (b) did not fire, so exactly one J-coordinate is negative.
    int j = -1;
    for (int k : rep.J())
      if (current[k] < 0) {
        j = k;
        break;
      }
    current = rep.involution(j).apply(current);
    letters.push_back(j);
    out.trace.push_back({j, current, s_value(current)});
  }
  out.word = ReducedWord(std::move(letters));
  out.final_class = std::move(current);
  return out;
}

std::uint64_t reduced_word_count(int generators, int depth) {
  if (generators < 0 || depth < 0)
    throw Error(Errc::InvalidArgument, "negative generator count or depth");
  std::uint64_t total = 1, level = generators;
  for (int d = 1; d <= depth; ++d) {
    if (total > UINT64_MAX - level)
      return UINT64_MAX;
    total += level;
    if (level == 0)
      break;
    if (generators > 1 && level > UINT64_MAX / (generators - 1))
      level = UINT64_MAX;
    else
      level *= generators - 1;
  }
  return total;
}

std::vector<Chamber> chamber_orbit(const ReflectionRep& rep, int depth, std::size_t max_chambers) {
  if (depth < 0)
    throw Error(Errc::InvalidArgument, "depth must be >= 0");
  std::uint64_t expected = reduced_word_count(static_cast<int>(rep.J().size()), depth);
  if (expected > max_chambers)
    throw Error(Errc::DepthCap, "depth " + std::to_string(depth) + " needs " +
                                    std::to_string(expected) + " chambers, cap is " +
                                    std::to_string(max_chambers));
  std::vector<Chamber> out;
  out.reserve(expected);
  out.push_back({ReducedWord(), IntegerMatrix::identity(rep.rank())});
  std::size_t level_begin = 0;
  for (int d = 1; d <= depth; ++d) {
    const std::size_t level_end = out.size();
    for (std::size_t k = level_begin; k < level_end; ++k)
      for (int j : rep.J()) {
        if (!out[k].word.empty() && out[k].word.back() == j)
          continue;
        Chamber next{out[k].word.extended(j), out[k].generators * rep.involution(j)};
        out.push_back(std::move(next));
      }
    level_begin = level_end;
  }
  return out;
}

PairEigenData pair_eigendata(const ReflectionRep& rep) {
  PairEigenData out;
  for (std::size_t a = 0; a < rep.J().size(); ++a)
    for (std::size_t c = a + 1; c < rep.J().size(); ++c) {
      int i = rep.J()[a], j = rep.J()[c];
      out.emplace(std::make_pair(i, j), pair_dominant_eigenpair(rep, i, j));
    }
  return out;
}

QVector boundary_eigenvector(const PairEigenpair& e) {
  QVector v = e.vector;
  if (!e.diagonalizable)
    return v;
  QuadraticNumber s(0);
  for (const auto& x : v)
    s += x;
  if (s.sign() < 0)
    for (auto& x : v)
      x = -x;
  return v;
}

QVector normalize_ray(QVector v) {
  for (const auto& x : v)
    if (x.sign() != 0) {
      QuadraticNumber scale = x.sign() > 0 ? x : -x;
      QuadraticNumber inv = scale.inverse();
      for (auto& y : v)
        y *= inv;
      break;
    }
  return v;
}

namespace {

// Structural order on Q(sqrt d) values: exact, and defined across radicands.
bool structural_less(const QuadraticNumber& a, const QuadraticNumber& b) {
  if (a.p() != b.p())
    return a.p() < b.p();
  if (a.q() != b.q())
    return a.q() < b.q();
  return a.d() < b.d();
}

bool vector_less(const QVector& a, const QVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), structural_less);
}

bool is_zero(const QVector& v) {
  return std::all_of(v.begin(), v.end(), [](const QuadraticNumber& x) { return x.sign() == 0; });
}

struct GeneratorSetLess {
  bool operator()(const std::vector<QVector>& a, const std::vector<QVector>& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), vector_less);
  }
};

QVector basis_vector(int rank, int k) {
  QVector v(rank, QuadraticNumber(0));
  v[k] = QuadraticNumber(1);
  return v;
}

} // namespace

std::vector<ConeDescription> boundary_cones(const ReflectionRep& rep, const PairEigenData& eigen,
                                            int depth, std::size_t max_chambers) {
  if (rep.J().size() >= 2 && !is_lorentzian(rep.gram_J()))
    throw Error(Errc::NotLorentzian,
                "W_J is not Lorentzian: B_J does not have signature (|J|-1, 1)");
  const int l = rep.rank();

  std::vector<ConeDescription> base;
  for (int i = 0; i < l; ++i) {
    if (rep.in_J(i))
      continue;
    ConeDescription c;
    c.kind = ConeKind::Face;
    c.first = i;
    for (int k = 0; k < l; ++k)
      if (k != i)
        c.generators.push_back(basis_vector(l, k));
    base.push_back(std::move(c));
  }
  for (std::size_t a = 0; a < rep.J().size(); ++a)
    for (std::size_t b = a + 1; b < rep.J().size(); ++b) {
      int i = rep.J()[a], j = rep.J()[b];
      auto it = eigen.find({i, j});
      if (it == eigen.end())
        throw Error(Errc::InvalidArgument, "missing eigendata for pair (" +
                                               std::to_string(i + 1) + "," +
                                               std::to_string(j + 1) + ")");
      ConeDescription c;
      c.kind = ConeKind::EigenPair;
      c.first = i;
      c.second = j;
      QVector v = boundary_eigenvector(it->second);
      if (!is_zero(v))
        c.generators.push_back(std::move(v));
      for (int k = 0; k < l; ++k)
        if (k != i && k != j)
          c.generators.push_back(basis_vector(l, k));
      base.push_back(std::move(c));
    }

  std::vector<ConeDescription> out;
  std::set<std::vector<QVector>, GeneratorSetLess> seen;
  for (const Chamber& ch : chamber_orbit(rep, depth, max_chambers)) {
    for (const ConeDescription& c : base) {
      ConeDescription moved = c;
      moved.orbit_word = ch.word;
      for (auto& g : moved.generators)
        g = normalize_ray(ch.generators.apply(g));
      std::sort(moved.generators.begin(), moved.generators.end(), vector_less);
      if (seen.insert(moved.generators).second)
        out.push_back(std::move(moved));
    }
  }
  return out;
}

namespace {

// Integer matrix as doubles, scaled by a power of two when entries are huge.
Eigen::MatrixXd to_scaled_double(const IntegerMatrix& m, long* shift_out = nullptr) {
  std::size_t bits = 0;
  for (const auto& x : m.data())
    bits = std::max(bits, mpz_sizeinbase(x.get_mpz_t(), 2));
  long shift = bits > 500 ? static_cast<long>(bits) : 0;
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      long e = 0;
      double mant = mpz_get_d_2exp(&e, m(r, c).get_mpz_t());
      out(r, c) = std::ldexp(mant, static_cast<int>(e - shift));
    }
  if (shift_out)
    *shift_out = shift;
  return out;
}

} // namespace

double spectral_radius(const IntegerMatrix& m) {
  long shift = 0;
  Eigen::MatrixXd a = to_scaled_double(m, &shift);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(a, false);
  double r = solver.eigenvalues().cwiseAbs().maxCoeff();
  return std::ldexp(r, static_cast<int>(shift));
}

LimitDirection dominant_direction(const IntegerMatrix& m, double tol, int max_iterations) {
  if (spectral_radius(m) <= kGrowthThreshold)
    throw Error(Errc::NoAttractingDirection,
                "spectral radius is 1: no attracting eigendirection");
  long shift = 0;
  Eigen::MatrixXd a = to_scaled_double(m, &shift);
  const Eigen::Index l = a.rows();
  Eigen::VectorXd v = Eigen::VectorXd::Constant(l, 1.0 / static_cast<double>(l));
  LimitDirection out;
  for (int it = 1; it <= max_iterations; ++it) {
    Eigen::VectorXd mv = a * v;
    double lambda = mv.sum();
    if (!(lambda > 0))
      throw Error(Errc::NonConvergent, "power iteration left the positive half-space");
    double residual = (mv - lambda * v).cwiseAbs().maxCoeff() / (lambda * v.cwiseAbs().maxCoeff());
    v = mv / lambda;
    out.iterations = it;
    out.residual = residual;
    out.eigenvalue = std::ldexp(lambda, static_cast<int>(shift));
    if (residual < tol)
      break;
  }
  if (!(out.residual < tol))
    throw Error(Errc::NonConvergent, "power iteration did not reach the residual tolerance");
  out.direction.assign(v.data(), v.data() + l);
  return out;
}

LimitDirection limit_direction(const ReflectionRep& rep, const ReducedWord& w, double tol,
                               int max_iterations) {
  if (w.empty())
    throw Error(Errc::InvalidArgument, "limit direction needs a nonempty word");
  if (w.size() >= 2 && w.front() == w.back())
    throw Error(Errc::NonReducedWord,
                "the periodic word " + w.to_string() + " " + w.to_string() + " ... is not reduced");
  return dominant_direction(rep.word_matrix(w), tol, max_iterations);
}

} // namespace movcone
