#include "cargorm/proration.hpp"

#include <algorithm>
#include <stdexcept>

#include "cargorm/common.hpp"

namespace cargorm {

ProrationMode proration_mode_from_string(const std::string& name) {
  if (name == "none") return ProrationMode::none;
  if (name == "weight_dominated") return ProrationMode::weight_dominated;
  if (name == "volume_dominated") return ProrationMode::volume_dominated;
  throw config_error("unknown proration mode: " + name);
}

std::string to_string(ProrationMode mode) {
  switch (mode) {
    case ProrationMode::none: return "none";
    case ProrationMode::weight_dominated: return "weight_dominated";
    case ProrationMode::volume_dominated: return "volume_dominated";
  }
  throw internal_error("unreachable proration mode");
}

double chargeable_weight(double weight_kg, double volume_m3, double std_inv_density) {
  if (weight_kg <= 0.0) throw std::invalid_argument("chargeable_weight: weight must be positive");
  if (volume_m3 < 0.0) throw std::invalid_argument("chargeable_weight: volume must be >= 0");
  return std::max(weight_kg, volume_m3 / std_inv_density);
}

ProratedRecord prorate(double revenue, double weight_kg, double volume_m3, ProrationMode mode,
                       double std_inv_density) {
  if (revenue < 0.0) throw std::invalid_argument("prorate: revenue must be >= 0");
  const double vol_as_weight = volume_m3 / std_inv_density;
  const double cw = chargeable_weight(weight_kg, volume_m3, std_inv_density);
  // At exactly standard density neither dimension dominates; split evenly.
  const bool tie = weight_kg == vol_as_weight;
  ProratedRecord out;
  out.chargeable_weight_kg = cw;
  switch (mode) {
    case ProrationMode::none:
      out.revenue_weight = revenue;
      out.revenue_volume = revenue;
      break;
    case ProrationMode::weight_dominated:
      out.revenue_weight = tie ? 0.5 * revenue : revenue * std::min(1.0, weight_kg / cw);
      out.revenue_volume = revenue - out.revenue_weight;
      break;
    case ProrationMode::volume_dominated:
      out.revenue_volume = tie ? 0.5 * revenue : revenue * std::min(1.0, vol_as_weight / cw);
      out.revenue_weight = revenue - out.revenue_volume;
      break;
  }
  return out;
}

}  // namespace cargorm
