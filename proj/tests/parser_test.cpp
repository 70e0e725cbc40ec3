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

#include <cstring>
#include <random>

#include "mcugen/errors.hpp"
#include "mcugen/parser.hpp"
#include "mcugen/serializer.hpp"
#include "mcugen/sidecar.hpp"
#include "support/random_graph.hpp"

namespace mcugen {
namespace {

constexpr const char* kMinimal = R"({
  "format_version": 1,
  "name": "tiny",
  "input": {"shape": [2]},
  "layers": [{"id": "d1", "type": "dense", "inputs": ["__input__"], "units": 1, "weights_key": "d1"}],
  "output": "d1",
  "weights": {"d1": {"kernel": {"shape": [2, 1], "data": [[0.5], [0.5]]},
                     "bias": {"shape": [1], "data": [0.1]}}}
})";

std::string replace(std::string text, const std::string& from, const std::string& to) {
  const auto at = text.find(from);
  EXPECT_NE(at, std::string::npos) << from;
  return text.replace(at, from.size(), to);
}

std::span<const std::uint8_t> view(const Bytes& b) { return b; }

TEST(ParseModel, MinimalDocument) {
  const NetworkGraph g = parse_model(kMinimal);
  EXPECT_EQ(g.order().size(), 1u);
  EXPECT_EQ(param_count(g), 3u);
  const auto& w = *g.node("d1").weights;
  EXPECT_EQ(w.kernel.values(), (std::vector<float>{0.5f, 0.5f}));
  EXPECT_EQ(w.bias[0], 0.1f);  // nearest float to the decimal literal
}

TEST(ParseModel, UnsupportedLayerNamesTheType) {
  try {
    parse_model(replace(kMinimal, "\"dense\"", "\"lstm\""));
    FAIL() << "expected UnsupportedLayer";
  } catch (const UnsupportedLayer& e) {
    EXPECT_EQ(e.type(), "lstm");
  }
}

TEST(ParseModel, RejectsUnknownHyperparameter) {
  EXPECT_THROW(parse_model(replace(kMinimal, "\"units\": 1", "\"units\": 1, \"dropout\": 0.5")),
               SyntaxError);
}

TEST(ParseModel, RejectsUnknownActivation) {
  EXPECT_THROW(parse_model(replace(kMinimal, "\"units\": 1", "\"units\": 1, \"activation\": \"elu\"")),
               SyntaxError);
}

TEST(ParseModel, RejectsOtherVersions) {
  EXPECT_THROW(parse_model(replace(kMinimal, "\"format_version\": 1", "\"format_version\": 2")),
               VersionError);
}

TEST(ParseModel, RejectsMalformedJson) {
  EXPECT_THROW(parse_model("{\"format_version\": 1,"), SyntaxError);
  EXPECT_THROW(parse_model("[]"), SyntaxError);
}

TEST(ParseModel, RejectsUnknownTopLevelField) {
  EXPECT_THROW(parse_model(replace(kMinimal, "\"name\"", "\"extra\": 1, \"name\"")), SyntaxError);
}

TEST(ParseModel, MissingWeightsKey) {
  EXPECT_THROW(parse_model(replace(kMinimal, ", \"weights_key\": \"d1\"", "")), MissingWeights);
  EXPECT_THROW(parse_model(replace(kMinimal, "\"weights_key\": \"d1\"", "\"weights_key\": \"zz\"")),
               MissingWeights);
}

TEST(ParseModel, ValidationErrorsPropagate) {
  EXPECT_THROW(parse_model(replace(kMinimal, "\"shape\": [2, 1]", "\"shape\": [1, 2]")),
               ShapeError);
  EXPECT_THROW(parse_model(replace(kMinimal, "\"output\": \"d1\"", "\"output\": \"x\"")),
               StructureError);
  EXPECT_THROW(parse_model(replace(kMinimal, "[\"__input__\"]", "[\"ghost\"]")),
               DanglingInputError);
}

TEST(ParseModel, PoolStrideDefaultsToPoolSize) {
  const std::string doc = R"({"format_version": 1, "name": "p", "input": {"shape": [10, 2]},
    "layers": [{"id": "p", "type": "maxpool1d", "inputs": ["__input__"], "pool_size": 3}],
    "output": "p"})";
  const NetworkGraph g = parse_model(doc);
  EXPECT_EQ(std::get<MaxPool1D>(g.node("p").spec.kind).stride, 3u);
  EXPECT_EQ(g.output_shape(), (Shape{3, 2}));
}

TEST(ParseModel, Test1FixtureHasSixNodes) {
  const NetworkGraph g = testing::load_fixture("test1_cnn");
  EXPECT_EQ(g.order(),
            (std::vector<std::string>{"conv1", "pool1", "flatten", "dense1", "dense2", "output"}));
  // Shape oracle: (100 - 5) / 1 + 1 = 96, (96 - 5) / 5 + 1 = 19, 19 * 3 = 57.
  EXPECT_EQ(g.shapes().at("flatten"), (Shape{57}));
}

TEST(ParseModel, RegistryExtensionAcceptsNewType) {
  const std::string doc = R"({"format_version": 1, "name": "x", "input": {"shape": [4]},
    "layers": [{"id": "r", "type": "reshape_flat", "inputs": ["__input__"]}], "output": "r"})";
  EXPECT_THROW(parse_model(doc), UnsupportedLayer);
  LayerBuilderRegistry registry = LayerBuilderRegistry::with_builtin_layers();
  registry.register_builder("reshape_flat", [](LayerRecord&) -> LayerKind { return Flatten{}; });
  const NetworkGraph g = parse_model(doc, std::nullopt, registry);
  EXPECT_EQ(g.output_shape(), (Shape{4}));
}

TEST(ParseModel, SidecarOverridesAndSupplies) {
  const NetworkGraph g = testing::load_fixture("terrain_mlp");
  EXPECT_EQ(param_count(g), 20582u);
  const auto doc = serialize_model(g, WeightStorage::kSidecar, "w.nnwb");
  ASSERT_TRUE(doc.sidecar);
  EXPECT_EQ(declared_sidecar(doc.document), "w.nnwb");
  EXPECT_THROW(parse_model(doc.document), MissingWeights);
  const NetworkGraph again = parse_model(doc.document, view(*doc.sidecar));
  EXPECT_EQ(again.description(), g.description());
}

// Round trip over every fixture: ids, shapes and weight bits survive.
TEST(RoundTrip, FixturesInlineAndSidecar) {
  for (const std::string& name : testing::all_fixtures()) {
    SCOPED_TRACE(name);
    const NetworkGraph g = testing::load_fixture(name);
    for (WeightStorage storage : {WeightStorage::kInline, WeightStorage::kSidecar}) {
      const SerializedModel s = serialize_model(g, storage);
      const NetworkGraph back =
          s.sidecar ? parse_model(s.document, view(*s.sidecar)) : parse_model(s.document);
      EXPECT_EQ(back.order(), g.order());
      EXPECT_EQ(back.shapes(), g.shapes());
      for (const std::string& id : g.order()) {
        const auto& a = g.node(id).weights;
        const auto& b = back.node(id).weights;
        ASSERT_EQ(a.has_value(), b.has_value());
        if (a) {
          EXPECT_TRUE(bit_identical(a->kernel, b->kernel));
          EXPECT_TRUE(bit_identical(a->bias, b->bias));
        }
      }
      EXPECT_EQ(serialize_model(back, storage).document, s.document);
    }
  }
}

TEST(RoundTrip, RandomGraphsWithExtremeFloats) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    GraphDescription d = testing::random_graph(rng).description();
    // Mix in values decimal printing tends to get wrong.
    for (LayerNode& n : d.nodes) {
      if (!n.weights) continue;
      auto k = n.weights->kernel.mutable_data();
      const float specials[] = {1e-38f, -3.4028235e38f, 1.17549435e-38f, 1.4e-45f, 0.1f, -0.0f};
      for (std::size_t i = 0; i < k.size() && i < std::size(specials); ++i) k[i] = specials[i];
    }
    const NetworkGraph g = NetworkGraph::build(d);
    const NetworkGraph back = parse_model(serialize_model(g).document);
    for (const std::string& id : g.order()) {
      if (!g.node(id).weights) continue;
      ASSERT_TRUE(bit_identical(g.node(id).weights->kernel, back.node(id).weights->kernel));
      ASSERT_TRUE(bit_identical(g.node(id).weights->bias, back.node(id).weights->bias));
    }
    // param_count equals the number of serialized scalars.
    std::size_t scalars = 0;
    for (const auto& [key, w] : read_weight_sidecar(view(*serialize_model(g, WeightStorage::kSidecar).sidecar)))
      scalars += w.kernel->size() + w.bias->size();
    ASSERT_EQ(scalars, param_count(g));
  }
}

Bytes one_tensor_file() {
  const std::vector<std::pair<std::string, TensorData>> tensors = {
      {"d1.kernel", TensorData({1, 1}, {1.0f})}};
  return write_sidecar_tensors(tensors);
}

TEST(Sidecar, OneTensorExample) {
  const Bytes bytes = one_tensor_file();
  // magic + version + count + key_len + key + rank + 2 dims + 1 float
  EXPECT_EQ(bytes.size(), 4u + 2 + 4 + 2 + 9 + 1 + 8 + 4);
  EXPECT_EQ(std::memcmp(bytes.data(), "NNWB", 4), 0);
  const SidecarWeights w = read_weight_sidecar(view(bytes));
  ASSERT_EQ(w.size(), 1u);
  ASSERT_TRUE(w.at("d1").kernel);
  EXPECT_FALSE(w.at("d1").bias);
  EXPECT_EQ(w.at("d1").kernel->values(), std::vector<float>{1.0f});
  EXPECT_EQ(w.at("d1").kernel->shape(), (Shape{1, 1}));
}

TEST(Sidecar, LittleEndianLayout) {
  const Bytes bytes = one_tensor_file();
  EXPECT_EQ(bytes[4], 1);  // version
  EXPECT_EQ(bytes[5], 0);
  EXPECT_EQ(bytes[6], 1);  // count
  EXPECT_EQ(bytes[10], 9);  // key length
  const std::uint8_t one_f32[] = {0x00, 0x00, 0x80, 0x3f};
  EXPECT_EQ(std::memcmp(bytes.data() + bytes.size() - 4, one_f32, 4), 0);
}

TEST(Sidecar, BadMagic) {
  Bytes bytes = one_tensor_file();
  bytes[0] = 'X';
  EXPECT_THROW(read_sidecar_tensors(view(bytes)), MagicError);
}

TEST(Sidecar, TruncatedAnywhere) {
  const Bytes bytes = one_tensor_file();
  for (std::size_t n = 0; n < bytes.size(); ++n) {
    const Bytes cut(bytes.begin(), bytes.begin() + static_cast<std::ptrdiff_t>(n));
    if (n < 4) {
      EXPECT_THROW(read_sidecar_tensors(view(cut)), SidecarError) << n;
    } else {
      EXPECT_THROW(read_sidecar_tensors(view(cut)), TruncationError) << n;
    }
  }
}

TEST(Sidecar, DuplicateKey) {
  const std::vector<std::pair<std::string, TensorData>> tensors = {
      {"d1.kernel", TensorData({1, 1}, {1.0f})}, {"d1.kernel", TensorData({1, 1}, {2.0f})}};
  EXPECT_THROW(read_sidecar_tensors(view(write_sidecar_tensors(tensors))), DuplicateKeyError);
}

TEST(Sidecar, WrongVersionAndTrailingBytes) {
  Bytes bytes = one_tensor_file();
  bytes.push_back(0);
  EXPECT_THROW(read_sidecar_tensors(view(bytes)), SidecarError);
  bytes.pop_back();
  bytes[4] = 2;
  EXPECT_THROW(read_sidecar_tensors(view(bytes)), VersionError);
}

TEST(Sidecar, KeysNeedKnownSuffix) {
  const std::vector<std::pair<std::string, TensorData>> tensors = {
      {"d1.gamma", TensorData({1}, {1.0f})}};
  EXPECT_THROW(read_weight_sidecar(view(write_sidecar_tensors(tensors))), SidecarError);
}

TEST(Sidecar, PreservesBitsOfSpecialValues) {
  const float v[] = {-0.0f, 1.4e-45f, 3.4028235e38f};
  const std::vector<std::pair<std::string, TensorData>> tensors = {
      {"a.kernel", TensorData({3}, std::vector<float>(std::begin(v), std::end(v)))}};
  const auto back = read_sidecar_tensors(view(write_sidecar_tensors(tensors)));
  EXPECT_TRUE(bit_identical(back[0].second, tensors[0].second));
}

}  // namespace
}  // namespace mcugen
