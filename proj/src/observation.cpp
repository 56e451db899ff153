#include "cargorm/observation.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "cargorm/common.hpp"

namespace cargorm {

void BucketSpec::validate() const {
  if (breakpoints.empty()) throw config_error("bucket spec must have at least one breakpoint");
  double prev = 0.0;
  for (double b : breakpoints) {
    if (b <= prev) throw config_error("bucket breakpoints must be strictly increasing and positive");
    prev = b;
  }
}

int BucketSpec::segment_index(double remaining) const {
  if (remaining < 0.0 || remaining > capacity())
    throw std::out_of_range("remaining capacity outside [0, capacity]");
  if (remaining <= breakpoints.front()) return 1;
  // first k with remaining <= b_k, i.e. remaining in (b_{k-1}, b_k]
  auto it = std::lower_bound(breakpoints.begin(), breakpoints.end(), remaining);
  return static_cast<int>(it - breakpoints.begin()) + 1;
}

BucketSpec BucketSpec::uniform(double step, int count) {
  BucketSpec spec;
  for (int k = 1; k <= count; ++k) spec.breakpoints.push_back(step * k);
  spec.validate();
  return spec;
}

std::string to_string(Dimension d) { return d == Dimension::weight ? "weight" : "volume"; }

std::vector<double> cumulative_at_breakpoints(std::vector<PricedQuantity> slice,
                                              const BucketSpec& buckets) {
  buckets.validate();
  for (const auto& e : slice)
    if (e.quantity <= 0.0) throw data_error("observation building needs positive quantities");

  // Greedy ex-post ordering; ties broken by larger quantity, then by the
  // earlier booking, so the output does not depend on input order.
  std::sort(slice.begin(), slice.end(), [](const PricedQuantity& a, const PricedQuantity& b) {
    if (a.unit_price != b.unit_price) return a.unit_price > b.unit_price;
    if (a.quantity != b.quantity) return a.quantity > b.quantity;
    return a.days_prior > b.days_prior;
  });

  double booked = 0.0;
  for (const auto& e : slice) booked += e.quantity;

  // Cumulative (quantity, revenue) polyline with the zero-price padding
  // entry; origin point prepended so interpolation below the first booking
  // is linear from zero.
  std::vector<double> cum_q{0.0}, cum_r{0.0};
  double q = 0.0, r = 0.0;
  for (const auto& e : slice) {
    q += e.quantity;
    r += e.unit_price * e.quantity;
    cum_q.push_back(q);
    cum_r.push_back(r);
  }
  const double pad = std::max(0.0, buckets.capacity() - booked);
  cum_q.push_back(q + pad);
  cum_r.push_back(r);

  std::vector<double> out;
  out.reserve(buckets.breakpoints.size());
  for (double bk : buckets.breakpoints) {
    // lower: last cumulative point <= bk; upper: first point >= bk.
    auto up = std::lower_bound(cum_q.begin(), cum_q.end(), bk);
    std::size_t upper = static_cast<std::size_t>(up - cum_q.begin());
    if (upper >= cum_q.size()) throw internal_error("breakpoint beyond padded capacity");
    std::size_t lower = upper;
    if (cum_q[upper] > bk) {
      lower = upper - 1;  // cum_q[0] = 0 <= bk guarantees existence
    } else {
      while (lower + 1 < cum_q.size() && cum_q[lower + 1] <= bk) ++lower;
    }
    const double dq = cum_q[upper] - cum_q[lower];
    const double factor = dq > 0.0 ? (bk - cum_q[lower]) / dq : 0.0;
    out.push_back(cum_r[lower] + factor * (cum_r[upper] - cum_r[lower]));
  }
  return out;
}

std::vector<double> proxies_from_cumulative(const std::vector<double>& cum_revenue,
                                            const BucketSpec& buckets) {
  buckets.validate();
  if (cum_revenue.size() != buckets.breakpoints.size())
    throw internal_error("cumulative revenue and breakpoints disagree in length");
  std::vector<double> out;
  out.reserve(cum_revenue.size());
  double prev_b = 0.0, prev_r = 0.0;
  for (std::size_t k = 0; k < cum_revenue.size(); ++k) {
    if (cum_revenue[k] < prev_r - 1e-9)
      throw internal_error("interpolated cumulative revenue must be nondecreasing");
    out.push_back((cum_revenue[k] - prev_r) / (buckets.breakpoints[k] - prev_b));
    prev_b = buckets.breakpoints[k];
    prev_r = cum_revenue[k];
  }
  return out;
}

std::vector<Observation> build_observations(const std::vector<BookingRecord>& history,
                                            const std::vector<int>& dcps,
                                            const BucketSpec& buckets, Dimension dim,
                                            ProrationMode mode, double std_inv_density) {
  buckets.validate();
  if (dcps.empty()) throw config_error("at least one DCP required");
  for (std::size_t j = 1; j < dcps.size(); ++j)
    if (dcps[j] >= dcps[j - 1]) throw config_error("DCPs must be sorted descending");

  std::map<int, std::vector<PricedQuantity>> flights;
  for (const auto& rec : history) {
    if (rec.revenue < 0.0) throw data_error("booking revenue must be >= 0");
    if (rec.weight_kg <= 0.0) throw data_error("booking weight must be positive");
    const double quantity = dim == Dimension::weight ? rec.weight_kg : rec.volume_m3;
    if (quantity <= 0.0)
      throw data_error("booking quantity must be positive in the " + to_string(dim) +
                       " dimension");
    const auto split = prorate(rec.revenue, rec.weight_kg, rec.volume_m3, mode, std_inv_density);
    const double revenue =
        dim == Dimension::weight ? split.revenue_weight : split.revenue_volume;
    flights[rec.departure_index].push_back(
        PricedQuantity{rec.days_prior, revenue / quantity, quantity});
  }

  std::vector<Observation> out;
  for (const auto& [flight, records] : flights) {
    for (int dcp : dcps) {
      std::vector<PricedQuantity> slice;
      for (const auto& pq : records)
        if (pq.days_prior <= dcp) slice.push_back(pq);
      const auto cum = cumulative_at_breakpoints(std::move(slice), buckets);
      const auto proxies = proxies_from_cumulative(cum, buckets);
      for (int k = 0; k < buckets.size(); ++k) {
        Observation obs;
        obs.departure_index = flight;
        obs.dcp = dcp;
        obs.bucket_index = k + 1;
        obs.breakpoint = buckets.breakpoints[static_cast<std::size_t>(k)];
        obs.proxy = proxies[static_cast<std::size_t>(k)];
        obs.cumulative_revenue = cum[static_cast<std::size_t>(k)];
        out.push_back(obs);
      }
    }
  }
  return out;
}

}  // namespace cargorm
