// Copyright 2026 The mcugen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "mcugen/errors.hpp"
#include "mcugen/interpreter.hpp"
#include "support/oracle.hpp"
#include "support/random_graph.hpp"

namespace mcugen {
namespace {

using testing::single_layer_graph;

NetworkGraph one_layer(LayerKind kind, Shape input, std::vector<float> kernel, Shape kshape,
                       std::vector<float> bias) {
  GraphDescription d;
  d.name = "one";
  d.input_shape = std::move(input);
  LayerNode n{LayerSpec{"l", std::move(kind), {std::string(kInputId)}}, std::nullopt};
  if (has_weights(n.spec.kind)) {
    const Shape bshape{bias.size()};
    n.weights = LayerWeights{TensorData(std::move(kshape), std::move(kernel)),
                             TensorData(bshape, std::move(bias))};
  }
  d.nodes.push_back(std::move(n));
  d.output_id = "l";
  return NetworkGraph::build(std::move(d));
}

std::vector<float> run(const NetworkGraph& g, std::vector<float> x) {
  return forward(g, TensorData(g.input_shape(), std::move(x))).values();
}

TEST(Forward, IdentityDense) {
  const auto g = one_layer(Dense{2, Activation::kLinear}, {2}, {1, 0, 0, 1}, {2, 2}, {0, 0});
  EXPECT_EQ(run(g, {0.3f, -0.7f}), (std::vector<float>{0.3f, -0.7f}));
}

TEST(Forward, ReluAndSoftmax) {
  const auto relu = one_layer(Dense{2, Activation::kRelu}, {2}, {1, 0, 0, 1}, {2, 2}, {0, 0});
  EXPECT_EQ(run(relu, {-1, 2}), (std::vector<float>{0, 2}));
  const auto soft = one_layer(Dense{2, Activation::kSoftmax}, {2}, {1, 0, 0, 1}, {2, 2}, {0, 0});
  EXPECT_EQ(run(soft, {0, 0}), (std::vector<float>{0.5f, 0.5f}));
}

TEST(Forward, Conv1DSlidingSums) {
  const auto g = one_layer(Conv1D{1, 2, 1, Padding::kValid, Activation::kLinear}, {3, 1}, {1, 1},
                           {2, 1, 1}, {0});
  EXPECT_EQ(run(g, {1, 2, 3}), (std::vector<float>{3, 5}));
}

TEST(Forward, SamePaddingPadsLeftFloorHalf) {
  // L=4, K=4, s=1: total pad 3, one zero on the left, two on the right.
  const auto g = one_layer(Conv1D{1, 4, 1, Padding::kSame, Activation::kLinear}, {4, 1},
                           {1, 10, 100, 1000}, {4, 1, 1}, {0});
  EXPECT_EQ(run(g, {1, 2, 3, 4}), (std::vector<float>{3210, 4321, 432, 43}));
}

TEST(Forward, InputShapeMismatch) {
  const auto g = one_layer(Flatten{}, {2, 2}, {}, {}, {});
  EXPECT_THROW(forward(g, TensorData::zeros({4})), ShapeError);
}

TEST(ForwardTraced, FlattenIsRowMajor) {
  const auto g = one_layer(Flatten{}, {2, 2}, {}, {}, {});
  const auto trace = forward_traced(g, TensorData({2, 2}, {1, 2, 3, 4}));
  ASSERT_EQ(trace.size(), 1u);
  EXPECT_EQ(trace.at("l").shape(), (Shape{4}));
  EXPECT_EQ(trace.at("l").values(), (std::vector<float>{1, 2, 3, 4}));
}

TEST(ForwardTraced, ChainEntriesAndLastEqualsForward) {
  const NetworkGraph g = testing::load_fixture("system_id");
  const TensorData x({2}, {0.25f, -0.5f});
  const auto trace = forward_traced(g, x);
  EXPECT_EQ(trace.size(), 3u);
  EXPECT_TRUE(bit_identical(trace.at(g.output_id()), forward(g, x)));
}

TEST(ForwardTraced, Test2ConvShape) {
  const NetworkGraph g = testing::load_fixture("test2_conv");
  std::mt19937 rng(3);
  const auto trace = forward_traced(g, testing::random_tensor(g.input_shape(), rng));
  EXPECT_EQ(trace.at("conv1").shape(), (Shape{100 - 4, 3}));
}

TEST(Properties, ShapesMatchInferenceOnRandomGraphs) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const NetworkGraph g = testing::random_graph(rng);
    const auto trace = forward_traced(g, testing::random_tensor(g.input_shape(), rng));
    for (const auto& [id, t] : trace) ASSERT_EQ(t.shape(), g.shapes().at(id)) << id;
  }
}

TEST(Properties, SerialAndParallelAreBitIdentical) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const NetworkGraph g = testing::random_graph(rng);
    const TensorData x = testing::random_tensor(g.input_shape(), rng);
    ASSERT_TRUE(bit_identical(forward(g, x, Backend::kSerial), forward(g, x, Backend::kParallel)));
  }
  // Large enough to cross the parallel threshold.
  const auto big = single_layer_graph(Conv2D{16, 3, 3, 1, 1, Padding::kSame, Activation::kTanh},
                                      {32, 32, 8}, rng);
  const TensorData x = testing::random_tensor(big.input_shape(), rng);
  EXPECT_TRUE(bit_identical(forward(big, x, Backend::kSerial), forward(big, x, Backend::kParallel)));
  const NetworkGraph terrain = testing::load_fixture("terrain_mlp");
  const TensorData t = testing::random_tensor(terrain.input_shape(), rng);
  EXPECT_TRUE(bit_identical(forward(terrain, t, Backend::kSerial), forward(terrain, t)));
}

TEST(Properties, DeterministicAcrossRuns) {
  const NetworkGraph g = testing::load_fixture("test1_cnn");
  for (const auto& x : testing::random_inputs(g, 20, 5)) {
    ASSERT_TRUE(bit_identical(forward(g, x), forward(g, x)));
  }
}

std::size_t dim(std::mt19937& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Interpreter against the brute-force oracle, exact equality.
TEST(OracleEquivalence, Conv1D) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t L = dim(rng, 1, 32), C = dim(rng, 1, 4), K = dim(rng, 1, L), F = dim(rng, 1, 4);
    const std::size_t s = dim(rng, 1, 4);
    const bool same = dim(rng, 0, 1);
    const auto g = single_layer_graph(
        Conv1D{F, K, s, same ? Padding::kSame : Padding::kValid, Activation::kLinear}, {L, C}, rng);
    const TensorData x = testing::random_tensor({L, C}, rng);
    const auto& w = *g.node("layer").weights;
    ASSERT_EQ(forward(g, x).values(),
              testing::oracle::conv1d(x.values(), L, C, w.kernel.values(), w.bias.values(), K, F, s, same));
  }
}

TEST(OracleEquivalence, Conv2D) {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t H = dim(rng, 1, 12), W = dim(rng, 1, 12), C = dim(rng, 1, 3);
    const std::size_t KH = dim(rng, 1, H), KW = dim(rng, 1, W), F = dim(rng, 1, 3);
    const std::size_t sh = dim(rng, 1, 3), sw = dim(rng, 1, 3);
    const bool same = dim(rng, 0, 1);
    const auto g = single_layer_graph(
        Conv2D{F, KH, KW, sh, sw, same ? Padding::kSame : Padding::kValid, Activation::kLinear},
        {H, W, C}, rng);
    const TensorData x = testing::random_tensor({H, W, C}, rng);
    const auto& w = *g.node("layer").weights;
    ASSERT_EQ(forward(g, x).values(),
              testing::oracle::conv2d(x.values(), H, W, C, w.kernel.values(), w.bias.values(), KH, KW,
                                      F, sh, sw, same));
  }
}

TEST(OracleEquivalence, Pools) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t L = dim(rng, 1, 32), C = dim(rng, 1, 4), P = dim(rng, 1, L), s = dim(rng, 1, 5);
    const auto g1 = single_layer_graph(MaxPool1D{P, s}, {L, C}, rng);
    const TensorData x1 = testing::random_tensor({L, C}, rng);
    ASSERT_EQ(forward(g1, x1).values(), testing::oracle::maxpool1d(x1.values(), L, C, P, s));

    const std::size_t H = dim(rng, 1, 12), W = dim(rng, 1, 12);
    const std::size_t PH = dim(rng, 1, H), PW = dim(rng, 1, W);
    const std::size_t sh = dim(rng, 1, 3), sw = dim(rng, 1, 3);
    const auto g2 = single_layer_graph(MaxPool2D{PH, PW, sh, sw}, {H, W, C}, rng);
    const TensorData x2 = testing::random_tensor({H, W, C}, rng);
    ASSERT_EQ(forward(g2, x2).values(),
              testing::oracle::maxpool2d(x2.values(), H, W, C, PH, PW, sh, sw));
  }
}

TEST(Activations, SoftmaxNormalizedOnExtremeLogits) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = dim(rng, 1, 16);
    const auto g = one_layer(Dense{n, Activation::kSoftmax}, {n}, [&] {
      std::vector<float> eye(n * n, 0.0f);
      for (std::size_t i = 0; i < n; ++i) eye[i * n + i] = 1.0f;
      return eye;
    }(), {n, n}, std::vector<float>(n, 0.0f));
    std::vector<float> z = testing::random_tensor({n}, rng, -50.0f, 50.0f).values();
    if (trial % 3 == 0) z[0] = 50.0f;
    if (trial % 5 == 0) z[n - 1] = -50.0f;
    const auto p = run(g, z);
    double sum = 0;
    for (float v : p) {
      ASSERT_GE(v, 0.0f);
      ASSERT_LE(v, 1.0f);
      sum += v;
    }
    ASSERT_NEAR(sum, 1.0, 1e-6);
    const auto ref = testing::oracle::softmax(z);
    for (std::size_t i = 0; i < n; ++i) ASSERT_NEAR(p[i], ref[i], 1e-6);
  }
}

TEST(Activations, LinearIsIdentityAndReluIdempotent) {
  std::mt19937 rng(32);
  const std::size_t n = 8;
  std::vector<float> eye(n * n, 0.0f);
  for (std::size_t i = 0; i < n; ++i) eye[i * n + i] = 1.0f;
  const auto lin = one_layer(Dense{n, Activation::kLinear}, {n}, eye, {n, n}, std::vector<float>(n));
  const auto relu = one_layer(Dense{n, Activation::kRelu}, {n}, eye, {n, n}, std::vector<float>(n));
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = testing::random_tensor({n}, rng, -5, 5).values();
    ASSERT_EQ(run(lin, x), x);
    const auto once = run(relu, x);
    ASSERT_EQ(run(relu, once), once);
  }
}

}  // namespace
}  // namespace mcugen
