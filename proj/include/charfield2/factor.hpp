// Copyright 2026 The charfield2 Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHARFIELD2_FACTOR_HPP_
#define CHARFIELD2_FACTOR_HPP_

#include <cstdint>
#include <vector>

namespace charfield2 {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

bool is_prime_u64(std::uint64_t n);

// Prime factorisation in ascending prime order. Small primes by trial
// division, the remaining cofactor by Miller-Rabin and Pollard-Brent rho.
std::vector<PrimePower> factor_u64(std::uint64_t n);

// Factorisation of 2^n - 1 for 1 <= n <= 64.
std::vector<PrimePower> factor_two_power_minus_one(unsigned n);

}  // namespace charfield2

#endif  // CHARFIELD2_FACTOR_HPP_
