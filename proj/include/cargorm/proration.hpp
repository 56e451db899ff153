#pragma once

#include <string>

namespace cargorm {

// Standard air-cargo inverse density factor, m^3 per kg (1 t per 6 m^3).
inline constexpr double kStandardInvDensity = 0.006;

enum class ProrationMode {
  none,              // same full revenue fed to both dimensions
  weight_dominated,  // revenue split by density, saturating toward weight
  volume_dominated,  // revenue split by inverse density, saturating toward volume
};

ProrationMode proration_mode_from_string(const std::string& name);
std::string to_string(ProrationMode mode);

struct ProratedRecord {
  double revenue_weight = 0.0;
  double revenue_volume = 0.0;
  double chargeable_weight_kg = 0.0;
};

// max(w, v / std_inv_density)
double chargeable_weight(double weight_kg, double volume_m3,
                         double std_inv_density = kStandardInvDensity);

// Splits one booking's revenue between the weight and volume dimensions.
// Conservation r_w + r_v = r holds exactly for the dominated modes; mode
// none attributes the full revenue to both sides.
ProratedRecord prorate(double revenue, double weight_kg, double volume_m3, ProrationMode mode,
                       double std_inv_density = kStandardInvDensity);

}  // namespace cargorm
