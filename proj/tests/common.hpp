// Copyright 2026 The nonint Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Shared helpers for the test suites.

#ifndef NONINT_TESTS_COMMON_HPP
#define NONINT_TESTS_COMMON_HPP

#include <random>

#include "nonint/rational.hpp"

namespace testing_util {

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20260417);
  return g;
}

/// Random rational num/den with |num| <= max_num, 1 <= den <= max_den.
inline nonint::Rational random_rational(long max_num = 60, long max_den = 12) {
  std::uniform_int_distribution<long> n(-max_num, max_num);
  std::uniform_int_distribution<long> d(1, max_den);
  return nonint::Rational(n(rng()), d(rng()));
}

inline nonint::Rational random_nonzero(long max_num = 60, long max_den = 12) {
  nonint::Rational r;
  do r = random_rational(max_num, max_den);
  while (r.is_zero());
  return r;
}

inline nonint::Rational random_positive(long max_num = 60, long max_den = 12) {
  return random_nonzero(max_num, max_den).abs();
}

}  // namespace testing_util

#endif  // NONINT_TESTS_COMMON_HPP
