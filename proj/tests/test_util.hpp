#pragma once

#include <random>

#include "udt/interval.hpp"
#include "udt/rational.hpp"

namespace udt::testing {

// rational in [lo_num, hi_num] / 2^denom_bits, deterministic under the seed
inline Rational rand_rational(std::mt19937& gen, long long lo_num, long long hi_num,
                              int denom_bits = 12) {
  std::uniform_int_distribution<long long> num(lo_num << denom_bits, hi_num << denom_bits);
  return Rational(num(gen)) / pow2(denom_bits);
}

inline Interval rand_interval(std::mt19937& gen, long long lo = -4, long long hi = 4) {
  Rational a = rand_rational(gen, lo, hi);
  Rational b = rand_rational(gen, lo, hi);
  if (b < a) std::swap(a, b);
  std::bernoulli_distribution coin(0.5);
  bool lo_open = a != b && coin(gen);
  bool hi_open = a != b && coin(gen);
  return Interval(std::move(a), std::move(b), lo_open, hi_open);
}

inline IntervalSet rand_interval_set(std::mt19937& gen, int max_parts = 6) {
  std::uniform_int_distribution<int> count(0, max_parts);
  std::vector<Interval> raw;
  int n = count(gen);
  for (int i = 0; i < n; ++i) raw.push_back(rand_interval(gen));
  return IntervalSet::normalize(std::move(raw));
}

}  // namespace udt::testing
