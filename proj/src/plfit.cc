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

#include "svcnet/plfit.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/tools/minima.hpp>

#include "svcnet/error.h"
#include "svcnet/parallel.h"

namespace svcnet {
namespace {

// B_2j / (2j)! for j = 1..7.
constexpr double kBernoulliOverFactorial[] = {
    1.0 / 12.0,          -1.0 / 720.0,         1.0 / 30240.0,
    -1.0 / 1209600.0,    1.0 / 47900160.0,     -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
};

struct DistinctValues {
  std::vector<std::uint64_t> value;       // ascending
  std::vector<std::size_t> tail_count;    // samples >= value[i]
  std::vector<double> tail_log_sum;       // sum of log over samples >= value[i]
  std::vector<std::size_t> count;         // multiplicity of value[i]
};

DistinctValues summarize(std::vector<std::uint64_t> sorted) {
  DistinctValues d;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    d.value.push_back(sorted[i]);
    d.count.push_back(j - i);
    i = j;
  }
  const std::size_t k = d.value.size();
  d.tail_count.assign(k, 0);
  d.tail_log_sum.assign(k, 0.0);
  std::size_t c = 0;
  double s = 0.0;
  for (std::size_t i = k; i-- > 0;) {
    c += d.count[i];
    s += static_cast<double>(d.count[i]) * std::log(static_cast<double>(d.value[i]));
    d.tail_count[i] = c;
    d.tail_log_sum[i] = s;
  }
  return d;
}

double fit_alpha(std::uint64_t xmin, std::size_t n_tail, double sum_log,
                 const AlphaRange& range) {
  auto negative_ll = [&](double alpha) {
    return -power_law_log_likelihood(alpha, xmin, n_tail, sum_log);
  };
  auto [alpha, value] =
      boost::math::tools::brent_find_minima(negative_ll, range.min, range.max, 40);
  // Brent stops short of an endpoint optimum; snap to it when it is better.
  for (double edge : {range.min, range.max}) {
    if (negative_ll(edge) <= value) {
      alpha = edge;
      value = negative_ll(edge);
    }
  }
  return alpha;
}

// Sup over integers x >= xmin of |S(x) - P(x)|. Between two observed values
// S is flat while P rises, so the extremes sit at observed values and just
// before the next one.
double ks_distance(const DistinctValues& d, std::size_t first, double alpha) {
  const double n_tail = static_cast<double>(d.tail_count[first]);
  const double z = hurwitz_zeta(alpha, static_cast<double>(d.value[first]));
  auto model_cdf = [&](std::uint64_t x) {
    return 1.0 - hurwitz_zeta(alpha, static_cast<double>(x) + 1.0) / z;
  };
  double worst = 0.0;
  std::size_t seen = 0;
  for (std::size_t i = first; i < d.value.size(); ++i) {
    seen += d.count[i];
    double empirical = static_cast<double>(seen) / n_tail;
    worst = std::max(worst, std::abs(empirical - model_cdf(d.value[i])));
    if (i + 1 < d.value.size() && d.value[i + 1] > d.value[i] + 1) {
      worst = std::max(worst, std::abs(empirical - model_cdf(d.value[i + 1] - 1)));
    }
  }
  return worst;
}

PowerLawFit fit_sorted_positive(std::vector<std::uint64_t> sorted, const AlphaRange& range) {
  DistinctValues d = summarize(std::move(sorted));
  if (d.value.size() < 2) {
    throw DegenerateInputError("power-law fit needs at least two distinct positive values");
  }
  PowerLawFit best;
  best.ks = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c + 1 < d.value.size(); ++c) {
    double alpha = fit_alpha(d.value[c], d.tail_count[c], d.tail_log_sum[c], range);
    double ks = ks_distance(d, c, alpha);
    if (ks < best.ks) {
      best.ks = ks;
      best.alpha = alpha;
      best.xmin = d.value[c];
      best.n_tail = d.tail_count[c];
      best.log_likelihood =
          power_law_log_likelihood(alpha, d.value[c], d.tail_count[c], d.tail_log_sum[c]);
    }
  }
  best.n = d.tail_count.front();
  best.alpha_range = range;
  best.alpha_at_bound = best.alpha == range.min || best.alpha == range.max;
  return best;
}

double pareto_excess(double k, double alpha) {
  // k^-alpha / integral_k^{k+1} y^-alpha dy, decreasing in k.
  double integral = std::pow(k, 1.0 - alpha) *
                    -std::expm1((1.0 - alpha) * std::log1p(1.0 / k)) / (alpha - 1.0);
  return std::pow(k, -alpha) / integral;
}

}  // namespace

double hurwitz_zeta(double s, double q) {
  if (!(s > 1.0) || !(q > 0.0)) throw UsageError("hurwitz_zeta needs s > 1 and q > 0");
  // Sum directly until the Euler-Maclaurin remainder is tiny: a >= max(10, 2s).
  double target = std::max(10.0, 2.0 * s);
  double sum = 0.0;
  double a = q;
  while (a < target) {
    sum += std::pow(a, -s);
    a += 1.0;
  }
  double a_pow = std::pow(a, -s);
  double tail = a * a_pow / (s - 1.0) + 0.5 * a_pow;
  // term_j = B_2j/(2j)! * s(s+1)...(s+2j-2) * a^(-s-2j+1)
  double rising = s;
  double a_power = a_pow / a;
  for (int j = 0; j < 7; ++j) {
    double term = kBernoulliOverFactorial[j] * rising * a_power;
    tail += term;
    if (std::abs(term) < 1e-17 * (sum + tail)) break;
    rising *= (s + 2.0 * j + 1.0) * (s + 2.0 * j + 2.0);
    a_power /= a * a;
  }
  return sum + tail;
}

double power_law_log_likelihood(double alpha, std::uint64_t xmin, std::size_t n_tail,
                                double sum_log) {
  return -static_cast<double>(n_tail) * std::log(hurwitz_zeta(alpha, static_cast<double>(xmin))) -
         alpha * sum_log;
}

PowerLawFit fit_power_law(std::span<const std::uint64_t> samples, const AlphaRange& range) {
  if (!(range.min > 1.0) || !(range.max > range.min)) {
    throw UsageError("alpha range must satisfy 1 < min < max");
  }
  std::vector<std::uint64_t> positive;
  positive.reserve(samples.size());
  for (std::uint64_t x : samples) {
    if (x > 0) positive.push_back(x);
  }
  std::size_t zeros = samples.size() - positive.size();
  std::sort(positive.begin(), positive.end());
  PowerLawFit fit = fit_sorted_positive(std::move(positive), range);
  fit.zeros_removed = zeros;
  return fit;
}

std::uint64_t sample_discrete_power_law(double alpha, std::uint64_t xmin, Rng& rng) {
  const double lo = static_cast<double>(xmin);
  const double bound = pareto_excess(lo, alpha);
  for (;;) {
    double u = 1.0 - uniform01(rng);  // (0, 1]
    double y = lo * std::pow(u, -1.0 / (alpha - 1.0));
    if (!(y < 9.0e18)) continue;
    double k = std::floor(y);
    if (uniform01(rng) * bound <= pareto_excess(k, alpha)) return static_cast<std::uint64_t>(k);
  }
}

double gof_pvalue(const PowerLawFit& fit, std::span<const std::uint64_t> samples,
                  std::size_t n_boot, std::uint64_t seed, std::vector<std::string>* warnings) {
  if (n_boot < 100 && warnings != nullptr) {
    warnings->push_back("plfit: n_boot=" + std::to_string(n_boot) +
                        " gives a coarse p-value (resolution 1/n_boot)");
  }
  if (n_boot == 0) throw UsageError("gof_pvalue needs n_boot >= 1");

  std::vector<std::uint64_t> body;
  std::size_t n = 0;
  for (std::uint64_t x : samples) {
    if (x == 0) continue;
    ++n;
    if (x < fit.xmin) body.push_back(x);
  }
  std::sort(body.begin(), body.end());
  const double tail_share = static_cast<double>(fit.n_tail) / static_cast<double>(n);

  // 1 when the replicate's KS is at least the observed one, 0 when below,
  // -1 when the replicate was degenerate and could not be refit.
  std::vector<int> outcome(n_boot, -1);
  parallel_for(n_boot, [&](std::size_t r) {
    Rng rng = derive_rng(seed, r);
    std::vector<std::uint64_t> synthetic(n);
    for (auto& x : synthetic) {
      if (body.empty() || uniform01(rng) < tail_share) {
        x = sample_discrete_power_law(fit.alpha, fit.xmin, rng);
      } else {
        x = body[uniform_below(rng, body.size())];
      }
    }
    std::sort(synthetic.begin(), synthetic.end());
    try {
      outcome[r] = fit_sorted_positive(std::move(synthetic), fit.alpha_range).ks >= fit.ks ? 1 : 0;
    } catch (const DegenerateInputError&) {
      outcome[r] = -1;
    }
  });

  std::size_t valid = 0, extreme = 0;
  for (int o : outcome) {
    if (o < 0) continue;
    ++valid;
    if (o == 1) ++extreme;
  }
  if (valid < n_boot && warnings != nullptr) {
    warnings->push_back("plfit: " + std::to_string(n_boot - valid) +
                        " degenerate bootstrap replicates skipped");
  }
  if (valid == 0) return 1.0;
  return static_cast<double>(extreme) / static_cast<double>(valid);
}

PowerLawFit fit_power_law_with_gof(std::span<const std::uint64_t> samples,
                                   std::size_t n_boot, std::uint64_t seed,
                                   std::vector<std::string>* warnings, const AlphaRange& range) {
  PowerLawFit fit = fit_power_law(samples, range);
  fit.seed = seed;
  fit.n_boot = n_boot;
  if (n_boot > 0) {
    fit.p_value = gof_pvalue(fit, samples, n_boot, seed, warnings);
    fit.rejected = *fit.p_value < kPowerLawRejectBelow;
  } else if (warnings != nullptr) {
    warnings->push_back("plfit: n_boot=0, goodness-of-fit skipped");
  }
  return fit;
}

}  // namespace svcnet
