// Copyright 2026 The svcnet Authors
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

#ifndef SVCNET_PLFIT_H_
#define SVCNET_PLFIT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "svcnet/random.h"

namespace svcnet {

// Discrete power law p(x) = x^-alpha / zeta(alpha, xmin) for x >= xmin.
// Interval searched for the exponent.
struct AlphaRange {
  double min = 1.5;
  double max = 3.5;
};

struct PowerLawFit {
  double alpha = 0.0;
  std::uint64_t xmin = 0;
  double ks = 0.0;  // sup |empirical - fitted| over the tail's integer support
  std::size_t n_tail = 0;
  std::size_t n = 0;              // positive samples used
  std::size_t zeros_removed = 0;
  double log_likelihood = 0.0;    // of the tail at alpha
  std::optional<double> p_value;
  std::optional<bool> rejected;   // p_value < 0.1
  std::uint64_t seed = 0;
  std::size_t n_boot = 0;
  AlphaRange alpha_range;
  bool alpha_at_bound = false;  // alpha sits on an end of alpha_range
};

inline constexpr double kPowerLawRejectBelow = 0.1;

// Hurwitz zeta sum_{k>=0} (k + q)^-s for s > 1, q > 0: a direct partial sum
// followed by an Euler-Maclaurin tail, relative error well under 1e-10.
double hurwitz_zeta(double s, double q);

// Tail log-likelihood given n_tail samples >= xmin whose logs sum to sum_log.
double power_law_log_likelihood(double alpha, std::uint64_t xmin, std::size_t n_tail,
                                double sum_log);

// For each candidate xmin (every distinct value but the largest) fits alpha
// by maximizing the exact discrete likelihood and keeps the xmin with the
// smallest KS distance. Zeros are dropped first. Throws DegenerateInputError
// with fewer than two distinct positive values.
PowerLawFit fit_power_law(std::span<const std::uint64_t> samples,
                          const AlphaRange& range = {});

// Semiparametric bootstrap: each replicate draws n values, from the fitted
// tail with probability n_tail/n and otherwise uniformly from the observed
// values below xmin, refits, and compares KS distances. Replicate r uses the
// RNG stream derived from (seed, r). n_boot < 100 adds a warning.
double gof_pvalue(const PowerLawFit& fit, std::span<const std::uint64_t> samples,
                  std::size_t n_boot, std::uint64_t seed,
                  std::vector<std::string>* warnings = nullptr);

// fit_power_law plus, when n_boot > 0, the p-value and rejection flag.
PowerLawFit fit_power_law_with_gof(std::span<const std::uint64_t> samples,
                                   std::size_t n_boot, std::uint64_t seed,
                                   std::vector<std::string>* warnings = nullptr,
                                   const AlphaRange& range = {});

// Exact draw from the discrete power law (rejection from a continuous Pareto).
std::uint64_t sample_discrete_power_law(double alpha, std::uint64_t xmin, Rng& rng);

}  // namespace svcnet

#endif  // SVCNET_PLFIT_H_
