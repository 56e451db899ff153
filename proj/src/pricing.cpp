#include "cargorm/pricing.hpp"

#include <algorithm>
#include <cmath>

#include "cargorm/common.hpp"

namespace cargorm {

std::string to_string(BidSource s) { return s == BidSource::optimal ? "optimal" : "data_driven"; }

CombineMode combine_mode_from_string(const std::string& name) {
  if (name == "sum") return CombineMode::sum;
  if (name == "max") return CombineMode::max;
  throw config_error("unknown combine mode: " + name);
}

std::string to_string(CombineMode mode) { return mode == CombineMode::sum ? "sum" : "max"; }

double BidPriceTable::at(int bucket_index, int dcp) const {
  auto it = std::find(dcps.begin(), dcps.end(), dcp);
  if (it == dcps.end()) throw std::out_of_range("bid table has no such DCP");
  const std::size_t j = static_cast<std::size_t>(it - dcps.begin());
  return values[static_cast<std::size_t>(bucket_index - 1) * dcps.size() + j];
}

void BidPriceTable::validate() const {
  buckets.validate();
  if (dcps.empty()) throw config_error("bid table needs at least one DCP");
  if (values.size() != static_cast<std::size_t>(buckets.size()) * dcps.size())
    throw config_error("bid table shape mismatch");
  for (double v : values)
    if (v < 0.0 || !std::isfinite(v)) throw config_error("bid values must be finite and >= 0");
}

BidPriceTable BidPriceTable::zero(Dimension dim, const BucketSpec& buckets,
                                  const std::vector<int>& dcps, int departure_index) {
  BidPriceTable t;
  t.dimension = dim;
  t.buckets = buckets;
  t.dcps = dcps;
  t.departure_index = departure_index;
  t.values.assign(static_cast<std::size_t>(buckets.size()) * dcps.size(), 0.0);
  return t;
}

double unit_bid_at(const BidPriceTable& table, double remaining, int dcp) {
  return table.at(table.buckets.segment_index(remaining), dcp);
}

std::optional<double> total_bid(const BidPriceTable& table, double remaining, double requested,
                                int dcp) {
  if (requested <= 0.0) throw std::invalid_argument("total_bid: requested must be positive");
  if (remaining > table.buckets.capacity())
    throw std::out_of_range("total_bid: remaining exceeds capacity");
  if (requested > remaining) return std::nullopt;

  const double lo = remaining - requested;
  double total = 0.0;
  const auto& bp = table.buckets.breakpoints;
  for (int k = table.buckets.segment_index(std::max(lo, 0.0)); k <= table.buckets.size(); ++k) {
    const double seg_lo = k == 1 ? 0.0 : bp[static_cast<std::size_t>(k - 2)];
    const double seg_hi = bp[static_cast<std::size_t>(k - 1)];
    if (seg_lo >= remaining) break;
    const double width = std::min(seg_hi, remaining) - std::max(seg_lo, lo);
    if (width > 0.0) total += width * table.at(k, dcp);
  }
  return total;
}

double combine(double total_weight_bid, double total_volume_bid, CombineMode mode) {
  if (total_weight_bid < 0.0 || total_volume_bid < 0.0)
    throw std::invalid_argument("combine: bid totals must be >= 0");
  return mode == CombineMode::sum ? total_weight_bid + total_volume_bid
                                  : std::max(total_weight_bid, total_volume_bid);
}

std::optional<double> quote_price(const ShipmentRequest& request, const BidPriceTable& weight_table,
                                  const BidPriceTable* volume_table, CombineMode mode,
                                  const CapacityState& cap, double unit_kg, double alpha,
                                  double p0) {
  const double remaining_kg = cap.weight_units * unit_kg;
  const double requested_kg = request.batch_units * unit_kg;
  const auto w_bid = total_bid(weight_table, remaining_kg, requested_kg, request.days_prior);
  if (!w_bid) return std::nullopt;
  double v_bid = 0.0;
  if (volume_table != nullptr) {
    const auto vb = total_bid(*volume_table, cap.volume_m3, request.volume_m3, request.days_prior);
    if (!vb) return std::nullopt;
    v_bid = *vb;
  }
  return std::max(p0, alpha + combine(*w_bid, v_bid, mode) / request.batch_units);
}

OptimalPolicy::OptimalPolicy(std::shared_ptr<const DpSolution> solution,
                             const DemandParams& params, bool gate_volume)
    : solution_(std::move(solution)), params_(&params), gate_volume_(gate_volume) {}

std::optional<double> OptimalPolicy::quote(const ShipmentRequest& request,
                                           const CapacityState& cap, int step) const {
  if (request.batch_units > cap.weight_units) return std::nullopt;
  if (gate_volume_ && request.volume_m3 > cap.volume_m3) return std::nullopt;
  const double alpha = params_->alpha_at(request.days_prior);
  const double p0 = params_->p0_at(request.days_prior);
  const double price =
      optimal_policy_price(cap.weight_units, step, request.batch_units, solution_->bid, alpha);
  return std::max(p0, price);
}

DataDrivenPolicy::DataDrivenPolicy(std::string name, BidPriceTable weight_table,
                                   std::optional<BidPriceTable> volume_table, CombineMode mode,
                                   const DemandParams& params)
    : name_(std::move(name)),
      weight_table_(std::move(weight_table)),
      volume_table_(std::move(volume_table)),
      mode_(mode),
      params_(&params) {
  weight_table_.validate();
  if (volume_table_) volume_table_->validate();
}

std::optional<double> DataDrivenPolicy::quote(const ShipmentRequest& request,
                                              const CapacityState& cap, int /*step*/) const {
  if (request.batch_units > cap.weight_units) return std::nullopt;
  if (volume_table_ && request.volume_m3 > cap.volume_m3) return std::nullopt;
  return quote_price(request, weight_table_, volume_table_ ? &*volume_table_ : nullptr, mode_,
                     cap, params_->unit_kg, params_->alpha_at(request.days_prior),
                     params_->p0_at(request.days_prior));
}

}  // namespace cargorm
