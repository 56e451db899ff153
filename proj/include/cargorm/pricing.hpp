#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cargorm/demand.hpp"
#include "cargorm/dp.hpp"
#include "cargorm/observation.hpp"

namespace cargorm {

enum class BidSource { optimal, data_driven };
std::string to_string(BidSource s);

// Dense per-flight bid-price matrix over capacity buckets x DCPs.
struct BidPriceTable {
  Dimension dimension = Dimension::weight;
  BucketSpec buckets;
  std::vector<int> dcps;  // sorted descending
  std::vector<double> values;  // bucket-major: values[bucket*|D| + dcp_idx]
  BidSource source = BidSource::data_driven;
  int departure_index = 0;

  double at(int bucket_index, int dcp) const;  // bucket_index 1-based, dcp by value
  void validate() const;
  static BidPriceTable zero(Dimension dim, const BucketSpec& buckets,
                            const std::vector<int>& dcps, int departure_index);
};

enum class CombineMode { sum, max };
CombineMode combine_mode_from_string(const std::string& name);
std::string to_string(CombineMode mode);

// Unit bid price of the bucket whose segment (b_{k-1}, b_k] holds `remaining`
// (remaining = 0 falls into segment 1).
double unit_bid_at(const BidPriceTable& table, double remaining, int dcp);

// Total bid price of consuming `requested` out of `remaining`: the unit bid
// integrated over (remaining - requested, remaining] across bucket segments.
// nullopt when requested > remaining (insufficient capacity).
std::optional<double> total_bid(const BidPriceTable& table, double remaining, double requested,
                                int dcp);

double combine(double total_weight_bid, double total_volume_bid, CombineMode mode);

// Remaining capacity during a flight simulation. Weight is tracked in whole
// capacity units (matching the DP state); volume is continuous.
struct CapacityState {
  int weight_units = 0;
  double volume_m3 = 0.0;
};

// Per-unit quote for a bucketed one- or two-dimensional bid table set:
// max(p0, alpha + combine(total_w, total_v) / batch_units). nullopt when the
// request does not fit either dimension.
std::optional<double> quote_price(const ShipmentRequest& request, const BidPriceTable& weight_table,
                                  const BidPriceTable* volume_table, CombineMode mode,
                                  const CapacityState& cap, double unit_kg, double alpha,
                                  double p0);

// Policy interface used by the simulation harness. Implementations must be
// read-only after construction (flights run in parallel).
class PricingPolicy {
 public:
  virtual ~PricingPolicy() = default;
  // Per-unit price, or nullopt when the request must be rejected for
  // capacity. `step` is the number of steps remaining at arrival.
  virtual std::optional<double> quote(const ShipmentRequest& request, const CapacityState& cap,
                                      int step) const = 0;
  virtual std::string name() const = 0;
};

// Exact benchmark: batch-aware pricing off the DP bid table, with an
// optional volume feasibility gate (volume bid zero).
class OptimalPolicy : public PricingPolicy {
 public:
  OptimalPolicy(std::shared_ptr<const DpSolution> solution, const DemandParams& params,
                bool gate_volume);
  std::optional<double> quote(const ShipmentRequest& request, const CapacityState& cap,
                              int step) const override;
  std::string name() const override { return "optimal"; }

 private:
  std::shared_ptr<const DpSolution> solution_;
  const DemandParams* params_;
  bool gate_volume_;
};

// Estimated bid prices: one table per active dimension, combined per mode.
class DataDrivenPolicy : public PricingPolicy {
 public:
  DataDrivenPolicy(std::string name, BidPriceTable weight_table,
                   std::optional<BidPriceTable> volume_table, CombineMode mode,
                   const DemandParams& params);
  std::optional<double> quote(const ShipmentRequest& request, const CapacityState& cap,
                              int step) const override;
  std::string name() const override { return name_; }

 private:
  std::string name_;
  BidPriceTable weight_table_;
  std::optional<BidPriceTable> volume_table_;
  CombineMode mode_;
  const DemandParams* params_;
};

}  // namespace cargorm
