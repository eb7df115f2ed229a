#include "movcone/json_io.hpp"

#include "movcone/errors.hpp"

#include <limits>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace movcone {

Rational parse_rational(const std::string& text) {
  static const std::regex form(R"([+-]?[0-9]+(/[0-9]+)?)");
  if (!std::regex_match(text, form))
    throw std::invalid_argument("'" + text + "' is not an integer or p/q");
  std::string t = text[0] == '+' ? text.substr(1) : text;
  Rational q;
  q.set_str(t, 10);
  if (q.get_den() == 0)
    throw std::invalid_argument("'" + text + "' has zero denominator");
  q.canonicalize();
  return q;
}

json integer_json(const Integer& z) {
  if (z.fits_slong_p())
    return z.get_si();
  return z.get_str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer())
    return Integer(j.get<long>());
  return Integer(j.get<std::string>());
}

json rational_json(const Rational& q) {
  return json::array({integer_json(q.get_num()), integer_json(q.get_den())});
}

Rational rational_from_json(const json& j) {
  if (j.is_array()) {
    if (j.size() != 2)
      throw Error(Errc::Parse, "a rational is a [numerator, denominator] pair");
    Integer den = integer_from_json(j.at(1));
    if (den == 0)
      throw Error(Errc::Parse, "zero denominator");
    Rational q(integer_from_json(j.at(0)), den);
    q.canonicalize();
    return q;
  }
  if (j.is_number_integer())
    return Rational(j.get<long>());
  return parse_rational(j.get<std::string>());
}

json quadratic_json(const QuadraticNumber& x) {
  return {{"p", rational_json(x.p())}, {"q", rational_json(x.q())}, {"d", integer_json(x.d())}};
}

QuadraticNumber quadratic_from_json(const json& j) {
  Integer d = integer_from_json(j.at("d"));
  Rational p = rational_from_json(j.at("p")), q = rational_from_json(j.at("q"));
  if (q == 0 || d == 1)
    return QuadraticNumber(p + (d == 1 ? q : Rational(0)));
  return QuadraticNumber(p, q, d);
}

json word_json(const ReducedWord& w) {
  json out = json::array();
  for (int x : w.letters())
    out.push_back(x + 1);
  return out;
}

ReducedWord word_from_json(const json& j) {
  std::vector<int> letters;
  for (const auto& x : j)
    letters.push_back(x.get<int>() - 1);
  return ReducedWord(std::move(letters));
}

namespace {

json class_json(const DivisorClass& e) {
  json out = json::array();
  for (const auto& x : e)
    out.push_back(rational_json(x));
  return out;
}

DivisorClass class_from_json(const json& j) {
  DivisorClass out;
  for (const auto& x : j)
    out.push_back(rational_from_json(x));
  return out;
}

json int_matrix_json(const IntegerMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back(integer_json(m(r, c)));
    out.push_back(row);
  }
  return out;
}

json rat_matrix_json(const RationalMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back(rational_json(m(r, c)));
    out.push_back(row);
  }
  return out;
}

json one_based(const std::vector<int>& v) {
  json out = json::array();
  for (int x : v)
    out.push_back(x + 1);
  return out;
}

json inertia_json(const Inertia& in) { return {in.positive, in.negative, in.zero}; }

} // namespace

json analysis_json(const ValidatedVariety& v) {
  json out;
  out["name"] = v.spec().name;
  out["factors"] = v.spec().factors;
  out["degrees"] = v.spec().degrees;
  out["n"] = v.n();
  out["J"] = one_based(v.J());
  out["dim"] = v.dim();
  out["codim"] = v.codim();
  out["subcritical"] = v.subcritical();
  if (v.subcritical()) {
    out["notice"] = "Nef(X) = Mov(X), Bir(X) acts trivially";
    return out;
  }
  CycleClass c = cycle_class(v);
  json cycle = json::array();
  for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it)
    cycle.push_back({{"monomial", it->first}, {"coefficient", integer_json(it->second)}});
  out["cycle"] = cycle;
  out["cycleText"] = c.to_string();
  ReflectionRep rep(v);
  json b = json::array();
  for (const auto& [key, value] : rep.b().b)
    b.push_back({{"i", key.first + 1}, {"j", key.second + 1}, {"value", integer_json(value)}});
  out["b"] = b;
  out["B"] = rat_matrix_json(rep.gram().matrix());
  json inv = json::object();
  for (int j : rep.J())
    inv[std::to_string(j + 1)] = int_matrix_json(rep.involution(j));
  out["involutions"] = inv;
  if (rep.J().size() >= 2) {
    out["signatureJ"] = inertia_json(signature(rep.gram_J()));
    out["lorentzian"] = is_lorentzian(rep.gram_J());
  } else {
    out["signatureJ"] = nullptr;
    out["lorentzian"] = false;
  }
  return out;
}

json descent_json(const DescentResult& r) {
  json out;
  out["verdict"] = verdict_name(r.verdict);
  out["word"] = word_json(r.word);
  out["final"] = class_json(r.final_class);
  json trace = json::array();
  for (const auto& t : r.trace)
    trace.push_back({{"letter", t.letter ? json(*t.letter + 1) : json(nullptr)},
                     {"class", class_json(t.cls)},
                     {"s", rational_json(t.s)}});
  out["trace"] = trace;
  if (r.witness) {
    json idx = json::array({r.witness->first + 1});
    if (r.witness->second >= 0)
      idx.push_back(r.witness->second + 1);
    out["witness"] = {{"kind", witness_name(r.witness->kind)}, {"indices", idx}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

DescentResult descent_from_json(const json& j) {
  DescentResult r;
  const std::string verdict = j.at("verdict").get<std::string>();
  if (verdict == "Nef") r.verdict = Verdict::Nef;
  else if (verdict == "Outside") r.verdict = Verdict::Outside;
  else if (verdict == "Undetermined") r.verdict = Verdict::Undetermined;
  else throw Error(Errc::Parse, "unknown verdict '" + verdict + "'");
  r.word = word_from_json(j.at("word"));
  r.final_class = class_from_json(j.at("final"));
  for (const auto& t : j.at("trace")) {
    TraceStep step;
    if (!t.at("letter").is_null())
      step.letter = t.at("letter").get<int>() - 1;
    step.cls = class_from_json(t.at("class"));
    step.s = rational_from_json(t.at("s"));
    r.trace.push_back(std::move(step));
  }
  const json& w = j.at("witness");
  if (!w.is_null()) {
    const std::string kind = w.at("kind").get<std::string>();
    Witness wit{WitnessKind::NegativeOutsideJ, -1, -1};
    if (kind == witness_name(WitnessKind::TwoNegativeInJ)) wit.kind = WitnessKind::TwoNegativeInJ;
    else if (kind == witness_name(WitnessKind::PairInequality)) wit.kind = WitnessKind::PairInequality;
    else if (kind != witness_name(WitnessKind::NegativeOutsideJ))
      throw Error(Errc::Parse, "unknown witness '" + kind + "'");
    const json& idx = w.at("indices");
    wit.first = idx.at(0).get<int>() - 1;
    if (idx.size() > 1)
      wit.second = idx.at(1).get<int>() - 1;
    r.witness = wit;
  }
  return r;
}

json chambers_json(const std::vector<Chamber>& chambers, int depth) {
  json list = json::array();
  for (const auto& c : chambers) {
    json rays = json::array();
    for (std::size_t k = 0; k < c.generators.cols(); ++k) {
      json ray = json::array();
      for (const auto& x : c.generators.column(k))
        ray.push_back(integer_json(x));
      rays.push_back(ray);
    }
    list.push_back({{"word", word_json(c.word)}, {"generators", rays}});
  }
  return {{"depth", depth}, {"count", chambers.size()}, {"chambers", list}};
}

json cones_json(const std::vector<ConeDescription>& cones, int depth) {
  json list = json::array();
  for (const auto& c : cones) {
    json item;
    if (c.kind == ConeKind::Face) {
      item["kind"] = "face";
      item["face"] = c.first + 1;
    } else {
      item["kind"] = "pair";
      item["pair"] = {c.first + 1, c.second + 1};
    }
    json gens = json::array();
    for (const auto& g : c.generators) {
      json ray = json::array();
      for (const auto& x : g)
        ray.push_back(quadratic_json(x));
      gens.push_back(ray);
    }
    item["generators"] = gens;
    item["orbitWord"] = word_json(c.orbit_word);
    list.push_back(item);
  }
  return {{"depth", depth}, {"count", cones.size()}, {"cones", list}};
}

std::vector<ConeDescription> cones_from_json(const json& j) {
  std::vector<ConeDescription> out;
  for (const auto& item : j.at("cones")) {
    ConeDescription c;
    const std::string kind = item.at("kind").get<std::string>();
    if (kind == "face") {
      c.kind = ConeKind::Face;
      c.first = item.at("face").get<int>() - 1;
    } else if (kind == "pair") {
      c.kind = ConeKind::EigenPair;
      c.first = item.at("pair").at(0).get<int>() - 1;
      c.second = item.at("pair").at(1).get<int>() - 1;
    } else {
      throw Error(Errc::Parse, "unknown cone kind '" + kind + "'");
    }
    for (const auto& ray : item.at("generators")) {
      QVector g;
      for (const auto& x : ray)
        g.push_back(quadratic_from_json(x));
      c.generators.push_back(std::move(g));
    }
    c.orbit_word = word_from_json(item.at("orbitWord"));
    out.push_back(std::move(c));
  }
  return out;
}

json spectral_json(const SpectralReport& r, const NuVol& nu) {
  json out;
  out["word"] = word_json(r.word);
  out["exact"] = r.exact;
  out["lambda1"] = {{"value", r.lambda1.value}, {"error", r.lambda1.error}};
  out["mu1"] = {{"value", r.mu1.value}, {"error", r.mu1.error}};
  out["lambdaExact"] = r.lambda_exact ? quadratic_json(*r.lambda_exact) : json(nullptr);
  json eig = json::array();
  for (const auto& e : r.eigenvalues)
    eig.push_back({{"re", e.value.real()},
                   {"im", e.value.imag()},
                   {"error", e.error},
                   {"multiplicity", e.multiplicity}});
  out["eigenvalues"] = eig;
  out["unitOthers"] = r.unit_others;
  out["reciprocalPair"] = r.reciprocal_pair;
  out["deltaPlus"] = r.delta_plus;
  out["deltaMinus"] = r.delta_minus;
  out["sumInterior"] = r.sum_interior;
  out["nuVol"] = {{"value", nu.value},
                  {"exact", nu.exact ? rational_json(*nu.exact) : json(nullptr)},
                  {"certified", nu.certified}};
  return out;
}

json sweep_json(const SweepReport& r, bool with_timing) {
  json out;
  out["nRange"] = {r.n_range.first, r.n_range.second};
  out["jRange"] = {r.j_range.first, r.j_range.second};
  out["tasks"] = r.tasks;
  out["anchors"] = r.anchors;
  out["complete"] = r.complete;
  json ce = json::array();
  for (const auto& c : r.counterexamples)
    ce.push_back({{"n", c.task.n},
                  {"jSize", c.task.j_size},
                  {"partition", c.task.partition},
                  {"signature", inertia_json(c.inertia)}});
  out["counterexamples"] = ce;
  if (with_timing && r.seconds)
    out["seconds"] = *r.seconds;
  return out;
}

SweepReport sweep_from_json(const json& j) {
  SweepReport r;
  r.n_range = {j.at("nRange").at(0).get<int>(), j.at("nRange").at(1).get<int>()};
  r.j_range = {j.at("jRange").at(0).get<int>(), j.at("jRange").at(1).get<int>()};
  r.tasks = j.at("tasks").get<std::uint64_t>();
  r.anchors = j.value("anchors", std::uint64_t{0});
  r.complete = j.value("complete", true);
  for (const auto& c : j.at("counterexamples")) {
    Counterexample x;
    x.task.n = c.at("n").get<int>();
    x.task.j_size = c.at("jSize").get<int>();
    x.task.partition = c.at("partition").get<std::vector<int>>();
    const auto& s = c.at("signature");
    x.inertia = {s.at(0).get<int>(), s.at(1).get<int>(), s.at(2).get<int>()};
    r.counterexamples.push_back(std::move(x));
  }
  if (j.contains("seconds"))
    r.seconds = j.at("seconds").get<double>();
  return r;
}

DivisorClass parse_class(const std::string& text) {
  DivisorClass out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(parse_rational(item));
  if (out.empty() || (!text.empty() && text.back() == ','))
    throw std::invalid_argument("class '" + text + "' is not a comma-separated list");
  return out;
}

ReducedWord parse_word(const std::string& text) {
  static const std::regex form(R"([0-9]+(,[0-9]+)*)");
  if (!std::regex_match(text, form))
    throw std::invalid_argument("word '" + text + "' is not a comma-separated list of indices");
  std::vector<int> letters;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int x = std::stoi(item);
    if (x < 1)
      throw std::invalid_argument("word letters are 1-based");
    letters.push_back(x - 1);
  }
  return ReducedWord(std::move(letters));
}

} // namespace movcone
