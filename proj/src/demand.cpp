#include "cargorm/demand.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cargorm/common.hpp"

namespace cargorm {

LogNormalSpec::LogParams LogNormalSpec::log_params() const {
  if (mean <= 0.0 || sd <= 0.0) throw config_error("log-normal spec needs positive mean and sd");
  const double ratio = sd / mean;
  const double sigma2 = std::log1p(ratio * ratio);
  return {std::log(mean) - 0.5 * sigma2, std::sqrt(sigma2)};
}

void DemandParams::validate() const {
  if (horizon_days < 1) throw config_error("horizon_days must be >= 1");
  if (steps_per_day < 1) throw config_error("steps_per_day must be >= 1");
  if (unit_kg <= 0.0) throw config_error("unit_kg must be positive");
  auto check_vec = [&](const std::vector<double>& v, const char* name, bool allow_zero) {
    if (static_cast<int>(v.size()) != horizon_days)
      throw config_error(std::string(name) + " must have horizon_days entries");
    for (double x : v)
      if (x < 0.0 || (!allow_zero && x <= 0.0))
        throw config_error(std::string(name) + " entries must be positive");
  };
  check_vec(lambda_by_dp, "lambda_by_dp", true);
  check_vec(alpha_by_dp, "alpha_by_dp", false);
  if (!p0_by_dp.empty()) check_vec(p0_by_dp, "p0_by_dp", true);
  for (double f : dow_factors)
    if (f <= 0.0) throw config_error("dow_factors entries must be positive");
  if (seasonality.base <= 0.0 || seasonality.period <= 0.0)
    throw config_error("seasonality base and period must be positive");
  if (seasonality.base - std::abs(seasonality.amplitude) < 0.0)
    throw config_error("seasonality factor must stay positive (base >= |amplitude|)");
  weight_dist.log_params();
  invdensity_dist.log_params();

  const double max_lambda = *std::max_element(lambda_by_dp.begin(), lambda_by_dp.end());
  const double max_dow = *std::max_element(dow_factors.begin(), dow_factors.end());
  const double peak = max_lambda * (seasonality.base + std::abs(seasonality.amplitude)) * max_dow;
  if (peak * dt() > 0.1)
    throw config_error("lambda*dt exceeds 0.1 at the seasonal peak; increase steps_per_day");
}

double purchase_probability(double unit_price, double p0, double alpha) {
  if (alpha <= 0.0) throw std::invalid_argument("purchase_probability: alpha must be positive");
  if (unit_price < 0.0) throw std::invalid_argument("purchase_probability: price must be >= 0");
  const double prob = std::exp(-(unit_price - p0) / alpha);
  return std::min(prob, 1.0);
}

double arrival_rate(const DemandParams& params, int departure_index, int days_prior) {
  if (departure_index < 0) throw std::out_of_range("arrival_rate: departure_index must be >= 0");
  if (days_prior < 1 || days_prior > params.horizon_days)
    throw std::out_of_range("arrival_rate: days_prior outside booking horizon");
  const auto& s = params.seasonality;
  // fmod keeps the factor exactly periodic for integer periods.
  const double phase = std::fmod(static_cast<double>(departure_index), s.period);
  const double seasonal = s.base + s.amplitude * std::sin(2.0 * std::numbers::pi * phase / s.period);
  const double dow = params.dow_factors[static_cast<std::size_t>(departure_index % 7)];
  return params.lambda_at(days_prior) * seasonal * dow;
}

std::optional<ShipmentRequest> sample_request(const DemandParams& params, std::mt19937_64& rng,
                                              int departure_index, int days_prior,
                                              int arrival_step) {
  const double rate = arrival_rate(params, departure_index, days_prior);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  if (unif(rng) >= rate * params.dt()) return std::nullopt;

  const auto wp = params.weight_dist.log_params();
  const auto dp = params.invdensity_dist.log_params();
  std::lognormal_distribution<double> weight(wp.mu, wp.sigma);
  std::lognormal_distribution<double> invdensity(dp.mu, dp.sigma);

  ShipmentRequest req;
  req.arrival_step = arrival_step;
  req.days_prior = days_prior;
  req.weight_kg = weight(rng);
  req.volume_m3 = req.weight_kg * invdensity(rng);
  req.batch_units = std::max(1, static_cast<int>(std::lround(req.weight_kg / params.unit_kg)));
  return req;
}

std::vector<StreamEvent> generate_stream(const DemandParams& params, int departure_index,
                                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<StreamEvent> events;
  for (int step = params.total_steps(); step >= 1; --step) {
    const int d = params.days_prior_of_step(step);
    auto req = sample_request(params, rng, departure_index, d, step);
    if (req) events.push_back(StreamEvent{*req, unif(rng)});
  }
  return events;
}

}  // namespace cargorm
