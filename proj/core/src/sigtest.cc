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

#include "ontovsm/sigtest.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace ontovsm {
namespace {

void check_inputs(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("randomization test needs at least one query");
  }
  if (a.size() != b.size()) {
    throw std::invalid_argument("randomization test needs paired lists");
  }
}

double permuted_difference(std::span<const double> diffs, std::uint64_t seed,
                           std::uint64_t perm) {
  double sum = 0.0;
  for (std::size_t q = 0; q < diffs.size(); ++q) {
    sum += swap_coin(seed, perm, q) ? -diffs[q] : diffs[q];
  }
  return sum / static_cast<double>(diffs.size());
}

// Runs fn(begin, end) over contiguous blocks of [0, n) on up to `workers`
// threads.
template <typename Fn>
void for_blocks(std::uint64_t n, unsigned workers, Fn fn) {
  workers = std::max(1U, workers);
  if (workers == 1 || n < 2 * static_cast<std::uint64_t>(workers)) {
    fn(std::uint64_t{0}, n);
    return;
  }
  const std::uint64_t block = (n + workers - 1) / workers;
  std::vector<std::jthread> threads;
  for (std::uint64_t begin = 0; begin < n; begin += block) {
    threads.emplace_back(fn, begin, std::min(n, begin + block));
  }
}

}  // namespace

SigTestResult SigTestResult::from_counts(double delta, std::uint64_t n_minus,
                                         std::uint64_t n_plus,
                                         std::uint64_t n_perm,
                                         std::uint64_t seed) {
  if (n_perm == 0) throw std::invalid_argument("n_perm must be positive");
  SigTestResult r;
  r.delta = delta;
  r.n_minus = n_minus;
  r.n_plus = n_plus;
  r.n_perm = n_perm;
  r.seed = seed;
  r.p_two_sided = std::min(1.0, static_cast<double>(n_minus + n_plus) /
                                    static_cast<double>(n_perm));
  return r;
}

double observed_delta(std::span<const double> aps_a,
                      std::span<const double> aps_b) {
  check_inputs(aps_a, aps_b);
  double sum = 0.0;
  for (std::size_t q = 0; q < aps_a.size(); ++q) sum += aps_a[q] - aps_b[q];
  return std::abs(sum / static_cast<double>(aps_a.size()));
}

std::vector<double> permutation_differences(std::span<const double> aps_a,
                                            std::span<const double> aps_b,
                                            std::uint64_t n_perm,
                                            std::uint64_t seed,
                                            unsigned workers) {
  check_inputs(aps_a, aps_b);
  std::vector<double> diffs(aps_a.size());
  for (std::size_t q = 0; q < diffs.size(); ++q) diffs[q] = aps_a[q] - aps_b[q];
  std::vector<double> out(n_perm);
  for_blocks(n_perm, workers, [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t p = begin; p < end; ++p) {
      out[p] = permuted_difference(diffs, seed, p);
    }
  });
  return out;
}

SigTestResult count_extremes(std::span<const double> differences, double delta,
                             std::uint64_t seed) {
  std::uint64_t n_minus = 0;
  std::uint64_t n_plus = 0;
  for (double d : differences) {
    if (d <= -delta) ++n_minus;
    if (d >= delta) ++n_plus;
  }
  return SigTestResult::from_counts(delta, n_minus, n_plus, differences.size(),
                                    seed);
}

SigTestResult randomization_test(std::span<const double> aps_a,
                                 std::span<const double> aps_b,
                                 std::uint64_t n_perm, std::uint64_t seed,
                                 unsigned workers) {
  check_inputs(aps_a, aps_b);
  if (n_perm == 0) throw std::invalid_argument("n_perm must be positive");
  const double delta = observed_delta(aps_a, aps_b);
  std::vector<double> diffs(aps_a.size());
  for (std::size_t q = 0; q < diffs.size(); ++q) diffs[q] = aps_a[q] - aps_b[q];

  const unsigned slots = std::max(1U, workers);
  std::vector<std::uint64_t> minus(slots, 0);
  std::vector<std::uint64_t> plus(slots, 0);
  const std::uint64_t block = (n_perm + slots - 1) / slots;
  for_blocks(n_perm, workers, [&](std::uint64_t begin, std::uint64_t end) {
    const std::size_t slot = static_cast<std::size_t>(begin / block);
    std::uint64_t m = 0;
    std::uint64_t p = 0;
    for (std::uint64_t perm = begin; perm < end; ++perm) {
      const double d = permuted_difference(diffs, seed, perm);
      if (d <= -delta) ++m;
      if (d >= delta) ++p;
    }
    minus[slot] = m;
    plus[slot] = p;
  });
  std::uint64_t n_minus = 0;
  std::uint64_t n_plus = 0;
  for (unsigned i = 0; i < slots; ++i) {
    n_minus += minus[i];
    n_plus += plus[i];
  }
  return SigTestResult::from_counts(delta, n_minus, n_plus, n_perm, seed);
}

}  // namespace ontovsm
