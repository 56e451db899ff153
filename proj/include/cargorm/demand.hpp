#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace cargorm {

// Log-normal given by its natural-scale mean and standard deviation.
struct LogNormalSpec {
  double mean = 1.0;
  double sd = 1.0;

  // (mu, sigma) of the underlying normal.
  struct LogParams {
    double mu;
    double sigma;
  };
  LogParams log_params() const;
};

struct SeasonalitySpec {
  double base = 2.5;
  double amplitude = 1.0;
  double period = 52.0;
};

// Generative market parameters. Vectors are indexed by days-prior d with
// element [d-1], i.e. entry 0 is the day before departure.
struct DemandParams {
  std::vector<double> lambda_by_dp;
  std::vector<double> alpha_by_dp;
  std::vector<double> p0_by_dp;  // empty means all-zero
  std::array<double, 7> dow_factors{0.8, 1.1, 1.0, 0.95, 1.05, 1.1, 0.8};
  SeasonalitySpec seasonality;
  LogNormalSpec weight_dist{793.474, 942.37};
  LogNormalSpec invdensity_dist{0.00581, 0.00338};
  double unit_kg = 50.0;
  int horizon_days = 10;
  int steps_per_day = 120;

  int total_steps() const { return horizon_days * steps_per_day; }
  double dt() const { return 1.0 / steps_per_day; }

  // step s = number of steps remaining before departure, 1..total_steps.
  int days_prior_of_step(int step) const { return (step + steps_per_day - 1) / steps_per_day; }

  double lambda_at(int days_prior) const { return lambda_by_dp.at(days_prior - 1); }
  double alpha_at(int days_prior) const { return alpha_by_dp.at(days_prior - 1); }
  double p0_at(int days_prior) const {
    return p0_by_dp.empty() ? 0.0 : p0_by_dp.at(days_prior - 1);
  }

  // Throws config_error if any invariant fails, including the small-interval
  // bound max lambda(t,d)*dt <= 0.1 evaluated at the worst-case
  // seasonality/day-of-week product.
  void validate() const;
};

struct ShipmentRequest {
  int arrival_step = 0;  // steps remaining at arrival
  int days_prior = 0;
  double weight_kg = 0.0;
  double volume_m3 = 0.0;
  int batch_units = 0;  // weight in unit_kg units, rounded, at least 1
};

// Eq.-style exponential purchase probability, clamped to 1 below p0.
double purchase_probability(double unit_price, double p0, double alpha);

// Mean arrival rate for departure i and days-prior d:
// lambda_d * (base + amplitude*sin(2*pi*i/period)) * dow[i mod 7].
double arrival_rate(const DemandParams& params, int departure_index, int days_prior);

// One time step worth of demand: with probability lambda*dt emits a request
// whose weight and inverse density are sampled from the configured
// log-normals. Consumes exactly one uniform when no arrival occurs.
std::optional<ShipmentRequest> sample_request(const DemandParams& params, std::mt19937_64& rng,
                                              int departure_index, int days_prior,
                                              int arrival_step);

// A request plus the one uniform used for its purchase decision. Keeping the
// acceptance draw inside the stream lets parallel policy runs share exactly
// the same randomness (common random numbers via inversion).
struct StreamEvent {
  ShipmentRequest request;
  double u_accept = 0.0;
};

// Full request stream of one flight, steps total_steps()..1 in order.
std::vector<StreamEvent> generate_stream(const DemandParams& params, int departure_index,
                                         std::uint64_t seed);

}  // namespace cargorm
