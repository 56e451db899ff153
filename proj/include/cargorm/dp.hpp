#pragma once

#include <iosfwd>
#include <vector>

#include "cargorm/demand.hpp"

namespace cargorm {

// Batch-size distribution over capacity units, pi_k for k = 1..K.
struct BatchDist {
  std::vector<double> probs;  // probs[k-1] = pi_k

  int max_batch() const { return static_cast<int>(probs.size()); }
  double pi(int k) const { return probs.at(static_cast<std::size_t>(k - 1)); }
  void validate() const;
};

// Discretizes the shipment-weight log-normal into unit-count probabilities
// pi_k = P(round(w / unit_kg) clamps to k), folding the tail mass into pi_K.
BatchDist batch_dist_from_weight(const DemandParams& params, int max_batch);

// Smallest K whose tail probability P(batch > K) is below tail_prob.
int choose_max_batch(const DemandParams& params, double tail_prob = 1e-4);

// V(x,t) over x = 0..capacity_units, t = 0..total_steps (t in steps remaining).
struct ValueTable {
  int capacity_units = 0;
  int total_steps = 0;
  double unit_kg = 0.0;
  std::vector<double> values;  // (capacity_units+1) x (total_steps+1), x-major

  double at(int x, int t) const {
    return values[static_cast<std::size_t>(x) * (total_steps + 1) + t];
  }
  double& at(int x, int t) {
    return values[static_cast<std::size_t>(x) * (total_steps + 1) + t];
  }
};

// b*(x,t) = V(x,t) - V(x-1,t) for x = 1..capacity_units.
struct OptimalBidTable {
  int capacity_units = 0;
  int total_steps = 0;
  std::vector<double> bids;  // capacity_units x (total_steps+1), x-major

  double at(int x, int t) const {
    return bids[static_cast<std::size_t>(x - 1) * (total_steps + 1) + t];
  }
  double& at(int x, int t) {
    return bids[static_cast<std::size_t>(x - 1) * (total_steps + 1) + t];
  }
};

struct DpSolution {
  int departure_index = 0;
  ValueTable value;
  OptimalBidTable bid;
};

// Closed-form maximizer of the one-step revenue under exponential demand:
// max[p0, alpha + sum pi_k * (V(x,t') - V(x-k,t')) / sum k*pi_k] truncated at
// k <= min(x, K), with t' = t - dt (table column t-1).
double optimal_price(int x, int t, const ValueTable& value, const BatchDist& dist, double alpha,
                     double p0);

// Backward induction over the full horizon for one departure date.
DpSolution solve_value_function(const DemandParams& params, const BatchDist& dist,
                                int capacity_units, int departure_index);

// Batch-aware bid-price policy price for a known batch size k:
// alpha + (sum_{j=0}^{k-1} b*(x-j, t-dt)) / k. Throws std::invalid_argument
// when k exceeds remaining capacity (full accept/reject).
double optimal_policy_price(int x, int t, int batch_units, const OptimalBidTable& bid,
                            double alpha);

// CSV export: columns x,t,value,bid (bid empty for x = 0).
void write_dp_csv(std::ostream& os, const DpSolution& solution);

}  // namespace cargorm
