#pragma once

#include <string>
#include <vector>

#include "cargorm/proration.hpp"

namespace cargorm {

// One historical booking as stored in history.csv.
struct BookingRecord {
  std::string flight_id;
  int departure_index = 0;
  int days_prior = 0;  // t_n: days before departure when the booking happened
  double revenue = 0.0;
  double weight_kg = 0.0;
  double volume_m3 = 0.0;
};

// Strictly increasing capacity breakpoints; the last one is the total
// capacity of the dimension.
struct BucketSpec {
  std::vector<double> breakpoints;

  void validate() const;
  double capacity() const { return breakpoints.back(); }
  int size() const { return static_cast<int>(breakpoints.size()); }
  // Index (1-based) of the segment (b_{k-1}, b_k] containing `remaining`;
  // remaining == 0 maps to segment 1.
  int segment_index(double remaining) const;

  static BucketSpec uniform(double step, int count);
};

struct Observation {
  int departure_index = 0;
  int dcp = 0;
  int bucket_index = 0;  // 1-based
  double breakpoint = 0.0;
  double proxy = 0.0;          // average unit bid price over the bucket segment
  double cumulative_revenue = 0.0;  // interpolated cumulative revenue at the breakpoint
};

enum class Dimension { weight, volume };
std::string to_string(Dimension d);

// A booking projected onto one capacity dimension.
struct PricedQuantity {
  int days_prior = 0;
  double unit_price = 0.0;
  double quantity = 0.0;
};

// Ex-post greedy core: sorts prices descending (ties: larger quantity, then
// earlier booking), zero-pads unfilled capacity, accumulates, and linearly
// interpolates cumulative revenue at every breakpoint.
std::vector<double> cumulative_at_breakpoints(std::vector<PricedQuantity> slice,
                                              const BucketSpec& buckets);

// Segment-average marginal price per bucket:
// proxy(k) = (cumR(b_k) - cumR(b_{k-1})) / (b_k - b_{k-1}), with cumR(0) = 0.
std::vector<double> proxies_from_cumulative(const std::vector<double>& cum_revenue,
                                            const BucketSpec& buckets);

// Runs the transformation for every flight and DCP. `dcps` must be sorted
// descending. Revenue fed per record is chosen by `mode` (original or a
// prorated share); quantity is the record's weight or volume per `dim`.
std::vector<Observation> build_observations(const std::vector<BookingRecord>& history,
                                            const std::vector<int>& dcps,
                                            const BucketSpec& buckets, Dimension dim,
                                            ProrationMode mode,
                                            double std_inv_density = kStandardInvDensity);

}  // namespace cargorm
