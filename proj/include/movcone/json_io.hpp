#pragma once

#include "movcone/cone.hpp"
#include "movcone/numdim.hpp"
#include "movcone/sweep.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace movcone {

using nlohmann::json;

// Rationals are [numerator, denominator] pairs; integers are JSON numbers when
// they fit in 64 bits and decimal strings otherwise; elements of Q(sqrt d) are
// {"p": rat, "q": rat, "d": int}. Generator and word indices are 1-based.
json rational_json(const Rational& q);
Rational rational_from_json(const json& j);
json integer_json(const Integer& z);
Integer integer_from_json(const json& j);
json quadratic_json(const QuadraticNumber& x);
QuadraticNumber quadratic_from_json(const json& j);
json word_json(const ReducedWord& w);
ReducedWord word_from_json(const json& j);

json analysis_json(const ValidatedVariety& v);
json descent_json(const DescentResult& r);
DescentResult descent_from_json(const json& j);
json chambers_json(const std::vector<Chamber>& chambers, int depth);
json cones_json(const std::vector<ConeDescription>& cones, int depth);
std::vector<ConeDescription> cones_from_json(const json& j);
json spectral_json(const SpectralReport& r, const NuVol& nu);
json sweep_json(const SweepReport& r, bool with_timing = true);
SweepReport sweep_from_json(const json& j);

// "80,55,-8" or "1/2,3"; no whitespace.
DivisorClass parse_class(const std::string& text);
// "2,3" with 1-based letters, returned 0-based.
ReducedWord parse_word(const std::string& text);

} // namespace movcone
