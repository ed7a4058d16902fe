// Copyright 2026 The rnnbp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "jet.hpp"

namespace rnnbp {

enum class Activation { Sin };

enum class InitKind {
  FanInUniform,  // U(-1/sqrt(fan_in), 1/sqrt(fan_in)) for weights and biases
  UniformRm,     // U(-rm, rm)
};

std::string to_string(InitKind kind);
InitKind init_kind_from_string(const std::string& s);

/// Fixed random hidden layers producing the feature vector
/// phi(x) = sin(W_L sin(... sin(W_1 x + b_1) ...) + b_L). Immutable after
/// construction; there is no output layer.
class FeatureNet {
 public:
  /// widths = [2, n_1, ..., n_L]; the last entry is the feature count M.
  static FeatureNet build(std::vector<int> widths, InitKind init, double rm, std::uint64_t seed);

  /// Explicit parameters, for tests and for loading dumps.
  static FeatureNet from_parameters(std::vector<Eigen::MatrixXd> weights, std::vector<Eigen::VectorXd> biases,
                                    InitKind init = InitKind::FanInUniform, double rm = 0.0,
                                    std::uint64_t seed = 0);

  const std::vector<int>& widths() const { return widths_; }
  int feature_count() const { return widths_.back(); }
  int hidden_layers() const { return static_cast<int>(weights_.size()); }
  const std::vector<Eigen::MatrixXd>& weights() const { return weights_; }
  const std::vector<Eigen::VectorXd>& biases() const { return biases_; }
  InitKind init_kind() const { return init_; }
  double rm() const { return rm_; }
  std::uint64_t seed() const { return seed_; }
  Activation activation() const { return Activation::Sin; }

  Eigen::VectorXd features(double x, double y) const;

  std::vector<Jet2> feature_jets(double x, double y, int degree) const;

  /// Row j holds the graded-lex coefficients of the jet of phi_j; the matrix is
  /// feature_count() x Jet2::size_for(degree).
  Eigen::MatrixXd feature_jet_matrix(double x, double y, int degree) const;

  nlohmann::json to_json() const;
  static FeatureNet from_json(const nlohmann::json& j);

 private:
  FeatureNet() = default;

  std::vector<int> widths_;
  std::vector<Eigen::MatrixXd> weights_;
  std::vector<Eigen::VectorXd> biases_;
  InitKind init_ = InitKind::FanInUniform;
  double rm_ = 0.0;
  std::uint64_t seed_ = 0;
};

}  // namespace rnnbp
