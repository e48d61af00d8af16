// Copyright 2026 The ontovsm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ONTOVSM_SIGTEST_H_
#define ONTOVSM_SIGTEST_H_

#include <cstdint>
#include <span>
#include <vector>

namespace ontovsm {

// SplitMix64 output finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Counter-based coin deciding whether permutation `perm` swaps the pair of
// query `query`:
//   word = mix64(mix64(mix64(seed) ^ perm) ^ (query / 64))
//   swap = bit (query % 64) of word
// Each coin is a pure function of (seed, perm, query), so permutations can
// be evaluated in any order or in parallel with identical results.
constexpr bool swap_coin(std::uint64_t seed, std::uint64_t perm,
                         std::uint64_t query) {
  const std::uint64_t word = mix64(mix64(mix64(seed) ^ perm) ^ (query >> 6));
  return ((word >> (query & 63)) & 1U) != 0;
}

struct SigTestResult {
  double delta = 0.0;  // |MAP(A) - MAP(B)|
  std::uint64_t n_minus = 0;
  std::uint64_t n_plus = 0;
  std::uint64_t n_perm = 0;
  double p_two_sided = 1.0;
  std::uint64_t seed = 0;

  // p = min(1, (n_minus + n_plus) / n_perm). Throws std::invalid_argument
  // when n_perm is 0.
  static SigTestResult from_counts(double delta, std::uint64_t n_minus,
                                   std::uint64_t n_plus, std::uint64_t n_perm,
                                   std::uint64_t seed = 0);

  friend bool operator==(const SigTestResult&, const SigTestResult&) = default;
};

// Observed statistic: |sum_q (a_q - b_q)| / n, i.e. |MAP(A) - MAP(B)|,
// computed with the same summation as the permuted statistics.
double observed_delta(std::span<const double> aps_a,
                      std::span<const double> aps_b);

// Signed MAP difference under each of the n_perm permutations, in
// permutation order.
std::vector<double> permutation_differences(std::span<const double> aps_a,
                                            std::span<const double> aps_b,
                                            std::uint64_t n_perm,
                                            std::uint64_t seed,
                                            unsigned workers = 1);

// Counts the differences <= -delta and >= +delta.
SigTestResult count_extremes(std::span<const double> differences,
                             double delta, std::uint64_t seed);

// Paired two-sided Fisher randomization test on per-query average
// precisions. Throws std::invalid_argument on empty or unequal-length
// inputs or n_perm == 0. The result does not depend on `workers`.
SigTestResult randomization_test(std::span<const double> aps_a,
                                 std::span<const double> aps_b,
                                 std::uint64_t n_perm, std::uint64_t seed,
                                 unsigned workers = 1);

}  // namespace ontovsm

#endif  // ONTOVSM_SIGTEST_H_
