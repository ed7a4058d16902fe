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

#include "network.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace rnnbp {
namespace {

enum class ParamKind : std::uint32_t { Weight = 0, Bias = 1 };

// One independent stream per (seed, layer, parameter kind). seed_seq and
// mt19937_64 are fully specified by the standard, and the uniform mapping is
// done by hand, so parameters are identical across standard libraries.
class ParamStream {
 public:
  ParamStream(std::uint64_t seed, int layer, ParamKind kind) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(layer), static_cast<std::uint32_t>(kind), 0x524e4e42u};
    gen_.seed(seq);
  }

  double uniform(double lo, double hi) {
    const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

 private:
  std::mt19937_64 gen_;
};

void validate_widths(const std::vector<int>& widths) {
  if (widths.size() < 2) throw std::invalid_argument("network needs at least one hidden layer");
  if (widths[0] != 2) throw std::invalid_argument("network input width must be 2");
  for (int w : widths)
    if (w < 1) throw std::invalid_argument("layer widths must be positive");
}

}  // namespace

std::string to_string(InitKind kind) { return kind == InitKind::FanInUniform ? "fanin" : "uniform"; }

InitKind init_kind_from_string(const std::string& s) {
  if (s == "fanin" || s == "default") return InitKind::FanInUniform;
  if (s == "uniform") return InitKind::UniformRm;
  throw std::invalid_argument("unknown init kind '" + s + "' (expected fanin or uniform)");
}

FeatureNet FeatureNet::build(std::vector<int> widths, InitKind init, double rm, std::uint64_t seed) {
  validate_widths(widths);
  if (init == InitKind::UniformRm && !(rm > 0.0)) throw std::invalid_argument("rm must be positive");
  FeatureNet net;
  net.widths_ = std::move(widths);
  net.init_ = init;
  net.rm_ = init == InitKind::UniformRm ? rm : 0.0;
  net.seed_ = seed;
  for (std::size_t k = 1; k < net.widths_.size(); ++k) {
    const int rows = net.widths_[k], cols = net.widths_[k - 1];
    const double bound = init == InitKind::UniformRm ? rm : 1.0 / std::sqrt(static_cast<double>(cols));
    Eigen::MatrixXd w(rows, cols);
    ParamStream ws(seed, static_cast<int>(k), ParamKind::Weight);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) w(i, j) = ws.uniform(-bound, bound);
    Eigen::VectorXd b(rows);
    ParamStream bs(seed, static_cast<int>(k), ParamKind::Bias);
    for (int i = 0; i < rows; ++i) b(i) = bs.uniform(-bound, bound);
    net.weights_.push_back(std::move(w));
    net.biases_.push_back(std::move(b));
  }
  return net;
}

FeatureNet FeatureNet::from_parameters(std::vector<Eigen::MatrixXd> weights, std::vector<Eigen::VectorXd> biases,
                                       InitKind init, double rm, std::uint64_t seed) {
  if (weights.empty() || weights.size() != biases.size())
    throw std::invalid_argument("need one bias vector per weight matrix");
  FeatureNet net;
  net.widths_.push_back(static_cast<int>(weights[0].cols()));
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (weights[k].cols() != net.widths_.back() || biases[k].size() != weights[k].rows())
      throw std::invalid_argument("inconsistent layer shapes");
    net.widths_.push_back(static_cast<int>(weights[k].rows()));
  }
  validate_widths(net.widths_);
  net.weights_ = std::move(weights);
  net.biases_ = std::move(biases);
  net.init_ = init;
  net.rm_ = rm;
  net.seed_ = seed;
  return net;
}

Eigen::VectorXd FeatureNet::features(double x, double y) const {
  Eigen::VectorXd h(2);
  h << x, y;
  for (std::size_t k = 0; k < weights_.size(); ++k) {
    Eigen::VectorXd z = weights_[k] * h + biases_[k];
    h = z.array().sin().matrix();
  }
  return h;
}

Eigen::MatrixXd FeatureNet::feature_jet_matrix(double x, double y, int degree) const {
  const int n = Jet2(degree).size();
  // Layer input as jets: row r holds the coefficients of input r.
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(2, n);
  h(0, 0) = x;
  h(0, Jet2::index(1, 0)) = 1.0;
  h(1, 0) = y;
  h(1, Jet2::index(0, 1)) = 1.0;
  Jet2 scratch(degree);
  for (std::size_t k = 0; k < weights_.size(); ++k) {
    Eigen::MatrixXd z = weights_[k] * h;
    z.col(0) += biases_[k];
    for (Eigen::Index r = 0; r < z.rows(); ++r) {
      auto c = scratch.coeffs();
      for (int i = 0; i < n; ++i) c[i] = z(r, i);
      const Jet2 s = sin(scratch);
      for (int i = 0; i < n; ++i) z(r, i) = s.coeffs()[i];
    }
    h = std::move(z);
  }
  return h;
}

std::vector<Jet2> FeatureNet::feature_jets(double x, double y, int degree) const {
  const Eigen::MatrixXd m = feature_jet_matrix(x, y, degree);
  std::vector<Jet2> out;
  out.reserve(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Jet2 j(degree);
    auto c = j.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = m(r, static_cast<Eigen::Index>(i));
    out.push_back(j);
  }
  return out;
}

nlohmann::json FeatureNet::to_json() const {
  nlohmann::json j;
  j["widths"] = widths_;
  j["activation"] = "sin";
  j["init"] = to_string(init_);
  j["rm"] = rm_;
  j["seed"] = seed_;
  nlohmann::json layers = nlohmann::json::array();
  for (std::size_t k = 0; k < weights_.size(); ++k) {
    const auto& w = weights_[k];
    std::vector<double> wv;
    wv.reserve(static_cast<std::size_t>(w.size()));
    for (Eigen::Index r = 0; r < w.rows(); ++r)
      for (Eigen::Index c = 0; c < w.cols(); ++c) wv.push_back(w(r, c));
    std::vector<double> bv(biases_[k].data(), biases_[k].data() + biases_[k].size());
    layers.push_back({{"rows", w.rows()}, {"cols", w.cols()}, {"weights", wv}, {"biases", bv}});
  }
  j["layers"] = layers;
  return j;
}

FeatureNet FeatureNet::from_json(const nlohmann::json& j) {
  std::vector<Eigen::MatrixXd> ws;
  std::vector<Eigen::VectorXd> bs;
  for (const auto& layer : j.at("layers")) {
    const auto rows = layer.at("rows").get<Eigen::Index>(), cols = layer.at("cols").get<Eigen::Index>();
    const auto wv = layer.at("weights").get<std::vector<double>>();
    const auto bv = layer.at("biases").get<std::vector<double>>();
    if (static_cast<Eigen::Index>(wv.size()) != rows * cols || static_cast<Eigen::Index>(bv.size()) != rows)
      throw std::invalid_argument("network dump: layer size mismatch");
    Eigen::MatrixXd w(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r)
      for (Eigen::Index c = 0; c < cols; ++c) w(r, c) = wv[static_cast<std::size_t>(r * cols + c)];
    ws.push_back(std::move(w));
    bs.push_back(Eigen::Map<const Eigen::VectorXd>(bv.data(), rows));
  }
  return from_parameters(std::move(ws), std::move(bs), init_kind_from_string(j.at("init").get<std::string>()),
                         j.at("rm").get<double>(), j.at("seed").get<std::uint64_t>());
}

}  // namespace rnnbp
