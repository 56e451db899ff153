#include "cargorm/dp.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "cargorm/common.hpp"

namespace cargorm {

namespace {

// P(W <= x) for the natural-scale log-normal spec.
double lognormal_cdf(const LogNormalSpec& spec, double x) {
  if (x <= 0.0) return 0.0;
  const auto lp = spec.log_params();
  const double z = (std::log(x) - lp.mu) / lp.sigma;
  return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

}  // namespace

void BatchDist::validate() const {
  if (probs.empty()) throw config_error("batch distribution must have K >= 1");
  double sum = 0.0;
  for (double p : probs) {
    if (p < 0.0) throw config_error("batch probabilities must be >= 0");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw config_error("batch probabilities must sum to 1");
}

BatchDist batch_dist_from_weight(const DemandParams& params, int max_batch) {
  if (max_batch < 1) throw std::invalid_argument("batch_dist_from_weight: K must be >= 1");
  BatchDist dist;
  dist.probs.resize(static_cast<std::size_t>(max_batch), 0.0);
  // round(w/unit) == k on ((k-0.5)*unit, (k+0.5)*unit]; k = 1 absorbs the
  // max(1, .) clamp, k = K absorbs the tail.
  double lower_cdf = 0.0;  // P(w <= 1.5*unit) handled below
  for (int k = 1; k <= max_batch; ++k) {
    const double hi = (k + 0.5) * params.unit_kg;
    const double cdf_hi = k == max_batch ? 1.0 : lognormal_cdf(params.weight_dist, hi);
    dist.probs[static_cast<std::size_t>(k - 1)] = cdf_hi - lower_cdf;
    lower_cdf = cdf_hi;
  }
  dist.validate();
  return dist;
}

int choose_max_batch(const DemandParams& params, double tail_prob) {
  if (tail_prob <= 0.0 || tail_prob >= 1.0)
    throw config_error("batch tail probability must be in (0,1)");
  int k = 1;
  while (1.0 - lognormal_cdf(params.weight_dist, (k + 0.5) * params.unit_kg) >= tail_prob) ++k;
  return k;
}

double optimal_price(int x, int t, const ValueTable& value, const BatchDist& dist, double alpha,
                     double p0) {
  if (x < 1) throw std::invalid_argument("optimal_price: no capacity left to price");
  if (t < 1 || t > value.total_steps) throw std::invalid_argument("optimal_price: bad step");
  const int m = std::min(x, dist.max_batch());
  double s1 = 0.0, s0 = 0.0;
  const double vx = value.at(x, t - 1);
  for (int k = 1; k <= m; ++k) {
    s1 += k * dist.pi(k);
    s0 += dist.pi(k) * (vx - value.at(x - k, t - 1));
  }
  // No sellable batch size has mass; any price works, quote the myopic one.
  if (s1 == 0.0) return std::max(p0, alpha);
  return std::max(p0, alpha + s0 / s1);
}

DpSolution solve_value_function(const DemandParams& params, const BatchDist& dist,
                                int capacity_units, int departure_index) {
  if (capacity_units < 1) throw std::invalid_argument("solve_value_function: capacity_units >= 1");
  dist.validate();
  const int steps = params.total_steps();
  const int K = dist.max_batch();

  DpSolution sol;
  sol.departure_index = departure_index;
  sol.value.capacity_units = capacity_units;
  sol.value.total_steps = steps;
  sol.value.unit_kg = params.unit_kg;
  sol.value.values.assign(static_cast<std::size_t>(capacity_units + 1) * (steps + 1), 0.0);
  sol.bid.capacity_units = capacity_units;
  sol.bid.total_steps = steps;
  sol.bid.bids.assign(static_cast<std::size_t>(capacity_units) * (steps + 1), 0.0);

  // Prefix sums over the batch distribution, indexed by m = min(x, K).
  std::vector<double> prefix_pi(static_cast<std::size_t>(K + 1), 0.0);
  std::vector<double> prefix_kpi(static_cast<std::size_t>(K + 1), 0.0);
  for (int k = 1; k <= K; ++k) {
    prefix_pi[static_cast<std::size_t>(k)] = prefix_pi[static_cast<std::size_t>(k - 1)] + dist.pi(k);
    prefix_kpi[static_cast<std::size_t>(k)] =
        prefix_kpi[static_cast<std::size_t>(k - 1)] + k * dist.pi(k);
  }

  const double dt = params.dt();
  std::vector<double> prev(static_cast<std::size_t>(capacity_units + 1), 0.0);
  std::vector<double> cur(static_cast<std::size_t>(capacity_units + 1), 0.0);

  for (int t = 1; t <= steps; ++t) {
    const int d = params.days_prior_of_step(t);
    const double lam = arrival_rate(params, departure_index, d);
    const double alpha = params.alpha_at(d);
    const double p0 = params.p0_at(d);
    const double a = lam * dt;
    cur[0] = 0.0;
    for (int x = 1; x <= capacity_units; ++x) {
      const int m = std::min(x, K);
      const double vx = prev[static_cast<std::size_t>(x)];
      double conv = 0.0;
      const double* pv = prev.data() + x;
      for (int k = 1; k <= m; ++k) conv += dist.pi(k) * pv[-k];
      const double s0 = vx * prefix_pi[static_cast<std::size_t>(m)] - conv;
      const double s1 = prefix_kpi[static_cast<std::size_t>(m)];
      if (s1 == 0.0) {  // every arriving batch is oversized for this state
        cur[static_cast<std::size_t>(x)] = vx;
        continue;
      }
      const double price = std::max(p0, alpha + s0 / s1);
      const double gain = a * std::exp(-(price - p0) / alpha) * (price * s1 - s0);
      cur[static_cast<std::size_t>(x)] = vx + gain;
    }
    for (int x = 0; x <= capacity_units; ++x) {
      sol.value.at(x, t) = cur[static_cast<std::size_t>(x)];
      if (x >= 1)
        sol.bid.at(x, t) =
            std::max(0.0, cur[static_cast<std::size_t>(x)] - cur[static_cast<std::size_t>(x - 1)]);
    }
    std::swap(prev, cur);
  }
  return sol;
}

double optimal_policy_price(int x, int t, int batch_units, const OptimalBidTable& bid,
                            double alpha) {
  if (batch_units < 1) throw std::invalid_argument("optimal_policy_price: batch must be >= 1");
  if (batch_units > x)
    throw std::invalid_argument("optimal_policy_price: batch exceeds remaining capacity");
  if (t < 1 || t > bid.total_steps) throw std::invalid_argument("optimal_policy_price: bad step");
  double sum = 0.0;
  for (int j = 0; j < batch_units; ++j) sum += bid.at(x - j, t - 1);
  return alpha + sum / batch_units;
}

void write_dp_csv(std::ostream& os, const DpSolution& sol) {
  os << "x,t,value,bid\n";
  for (int x = 0; x <= sol.value.capacity_units; ++x) {
    for (int t = 0; t <= sol.value.total_steps; ++t) {
      os << x << ',' << t << ',' << format_double(sol.value.at(x, t)) << ',';
      if (x >= 1) os << format_double(sol.bid.at(x, t));
      os << '\n';
    }
  }
}

}  // namespace cargorm
