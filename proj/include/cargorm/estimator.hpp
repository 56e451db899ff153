#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cargorm/observation.hpp"

namespace cargorm {

// Feature encoding constants; stored with the model so prediction is
// self-contained.
struct FeatureConfig {
  double capacity = 1.0;       // normalizes bucket breakpoints
  double horizon_days = 10.0;  // normalizes DCPs
  double seasonality_period = 52.0;
  int harmonics = 2;  // per base period (seasonality and week)

  int feature_count() const { return 2 + 4 * harmonics; }
};

struct TrainConfig {
  std::vector<int> hidden{32, 32};
  int epochs = 200;
  int batch_size = 256;  // 0 = full batch
  double learning_rate = 0.01;
  double momentum = 0.9;
  double lr_decay = 1.0;  // multiplicative per epoch
  double holdout_fraction = 0.0;
};

// [bucket/capacity, dcp/horizon, sin/cos harmonics of the departure index at
// the seasonality period and at period 7]
std::vector<double> featurize(const Observation& obs, const FeatureConfig& config);

// Feed-forward net: tanh hidden layers, softplus output (predictions are
// always non-negative). Weights are row-major [out x in] per layer.
struct MlpModel {
  std::vector<int> widths;  // [inputs, hidden..., 1]
  std::vector<std::vector<double>> weights;
  std::vector<std::vector<double>> biases;
  FeatureConfig features;
  // training metadata
  int epochs = 0;
  double learning_rate = 0.0;
  std::uint64_t seed = 0;
  double final_loss = 0.0;
  double holdout_loss = -1.0;  // -1 when no holdout was used

  std::size_t parameter_count() const;
  double predict_features(const std::vector<double>& x) const;
};

MlpModel init_model(const FeatureConfig& features, const std::vector<int>& hidden,
                    double target_mean, std::uint64_t seed);

// Mean squared error over the rows plus its gradient in parameter order
// (layer 0 weights, layer 0 biases, layer 1 weights, ...).
double loss_and_gradient(const MlpModel& model, const std::vector<std::vector<double>>& inputs,
                         const std::vector<double>& targets, std::vector<double>& gradient);

std::vector<double> flatten_parameters(const MlpModel& model);
void assign_parameters(MlpModel& model, const std::vector<double>& flat);

// Mini-batch gradient descent with momentum on MSE. Deterministic for a
// fixed (observations, config, seed) triple.
MlpModel train(const std::vector<Observation>& observations, const FeatureConfig& features,
               const TrainConfig& config, std::uint64_t seed);

// Per-epoch full-dataset training losses for the same run (test hook).
MlpModel train_with_history(const std::vector<Observation>& observations,
                            const FeatureConfig& features, const TrainConfig& config,
                            std::uint64_t seed, std::vector<double>* epoch_losses);

double predict_bid(const MlpModel& model, double breakpoint, int dcp, int departure_index);

struct BidPriceTable;  // from pricing.hpp; bid_table lives in estimator.cpp

std::string serialize_model(const MlpModel& model);
MlpModel deserialize_model(const std::string& text);
void save_model(const MlpModel& model, const std::string& path);
MlpModel load_model(const std::string& path);

}  // namespace cargorm
