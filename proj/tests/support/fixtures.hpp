#pragma once

#include "movcone/coxeter.hpp"

namespace testing_support {

inline movcone::ValidatedVariety example433() {
  return movcone::validate({{4, 3, 3}, {{2, 2, 1}, {2, 1, 1}, {1, 1, 2}}, "example433"});
}

inline movcone::ValidatedVariety figure1() {
  return movcone::validate({{3, 2, 2}, {{2, 2, 1}, {2, 1, 2}}, "figure1"});
}

inline movcone::ValidatedVariety wehler() {
  return movcone::validate({{1, 1, 1, 1}, {{2, 2, 2, 2}}, "wehler"});
}

// Rank 7, n = 3, five factors in J whose carriers form blocks 2, 2, 1.
inline movcone::ValidatedVariety rank7() {
  return movcone::validate({{6, 5, 3, 3, 3, 3, 3},
                            {{3, 1, 2, 1, 1, 2, 1}, {2, 2, 1, 2, 2, 1, 1}, {2, 3, 1, 1, 1, 1, 2}},
                            "rank7"});
}

inline movcone::QuadraticNumber qn(long p_num, long p_den, long q_num, long q_den, long d) {
  return movcone::QuadraticNumber(movcone::make_rational(p_num, p_den),
                                  movcone::make_rational(q_num, q_den), movcone::Integer(d));
}

} // namespace testing_support
