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

// Regenerates the model documents under fixtures/.
//
//   gen_fixtures OUT_DIR
//
// Weights are Glorot-uniform draws from a fixed seed per model; the files are
// checked in, so this only needs to run when an architecture changes.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "mcugen/graph.hpp"
#include "mcugen/serializer.hpp"

namespace fs = std::filesystem;
using namespace mcugen;

namespace {

struct Builder {
  GraphDescription desc;
  std::string last = std::string(kInputId);

  Builder(std::string name, Shape input) {
    desc.name = std::move(name);
    desc.input_shape = std::move(input);
  }

  Builder& add(std::string id, LayerKind kind) {
    desc.nodes.push_back({LayerSpec{id, std::move(kind), {last}}, std::nullopt});
    last = std::move(id);
    desc.output_id = last;
    return *this;
  }
};

// Attaches Glorot-uniform kernels and small uniform biases.
NetworkGraph with_weights(GraphDescription desc, std::uint32_t seed) {
  const ShapeMap shapes = infer_shapes(desc);
  std::mt19937 rng(seed);
  for (LayerNode& node : desc.nodes) {
    if (!has_weights(node.spec.kind)) continue;
    const std::string& src = node.spec.inputs.front();
    const Shape& in = src == kInputId ? desc.input_shape : shapes.at(src);
    const WeightShapes ws = expected_weight_shapes(node.spec.kind, in);
    const std::size_t fan_out = ws.kernel.back();
    const std::size_t fan_in = element_count(ws.kernel) / fan_out;
    std::uniform_real_distribution<float> kdist(
        -1.0f, 1.0f);
    const float limit = std::sqrt(6.0f / static_cast<float>(fan_in + fan_out));
    std::vector<float> kernel(element_count(ws.kernel));
    for (float& v : kernel) v = kdist(rng) * limit;
    std::vector<float> bias(element_count(ws.bias));
    for (float& v : bias) v = kdist(rng) * 0.1f;
    node.weights = LayerWeights{TensorData(ws.kernel, std::move(kernel)),
                                TensorData(ws.bias, std::move(bias))};
  }
  return NetworkGraph::build(std::move(desc));
}

void write(const fs::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << contents;
  if (!out) throw std::runtime_error("cannot write " + path.string());
  std::printf("wrote %s\n", path.string().c_str());
}

void emit(const fs::path& dir, const std::string& file, const NetworkGraph& graph,
          WeightStorage storage = WeightStorage::kInline) {
  const std::string sidecar_name = file + ".nnwb";
  const SerializedModel model = serialize_model(graph, storage, sidecar_name);
  write(dir / (file + ".json"), model.document);
  if (model.sidecar) {
    write(dir / sidecar_name, std::string(model.sidecar->begin(), model.sidecar->end()));
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: gen_fixtures OUT_DIR\n");
    return 1;
  }
  const fs::path dir = argv[1];
  fs::create_directories(dir);

  // Conv -> pool -> three dense layers (impact localization regressor).
  emit(dir, "test1_cnn",
       with_weights(Builder("test1_cnn", {100, 1})
                        .add("conv1", Conv1D{3, 5, 1, Padding::kValid, Activation::kRelu})
                        .add("pool1", MaxPool1D{5, 5})
                        .add("flatten", Flatten{})
                        .add("dense1", Dense{16, Activation::kRelu})
                        .add("dense2", Dense{8, Activation::kRelu})
                        .add("output", Dense{3, Activation::kLinear})
                        .desc,
                    101));

  // Single convolution, 3 filters of width 5.
  emit(dir, "test2_conv",
       with_weights(Builder("test2_conv", {100, 1})
                        .add("conv1", Conv1D{3, 5, 1, Padding::kValid, Activation::kLinear})
                        .desc,
                    102));

  // Single max pooling layer, pool size 5.
  emit(dir, "test3_pool",
       with_weights(Builder("test3_pool", {100, 1}).add("pool1", MaxPool1D{5, 5}).desc, 103));

  // Small CNN: 14 conv + 55 dense = 69 parameters, dense input of 10 nodes.
  emit(dir, "test4_small_cnn",
       with_weights(Builder("test4_small_cnn", {10, 1})
                        .add("conv1", Conv1D{2, 6, 1, Padding::kValid, Activation::kRelu})
                        .add("flatten", Flatten{})
                        .add("output", Dense{5, Activation::kLinear})
                        .desc,
                    104));

  // Force calibration: 2-6-12-4-1, ReLU hidden layers, linear output.
  emit(dir, "force_calibration",
       with_weights(Builder("force_calibration", {2})
                        .add("dense1", Dense{6, Activation::kRelu})
                        .add("dense2", Dense{12, Activation::kRelu})
                        .add("dense3", Dense{4, Activation::kRelu})
                        .add("output", Dense{1, Activation::kLinear})
                        .desc,
                    105));

  // System identification: (previous output, current input) -> next output.
  emit(dir, "system_id",
       with_weights(Builder("system_id", {2})
                        .add("hidden1", Dense{5, Activation::kTanh})
                        .add("hidden2", Dense{5, Activation::kTanh})
                        .add("output", Dense{1, Activation::kLinear})
                        .desc,
                    106));

  // Terrain classifier: 400-sample window, two ReLU layers, softmax output.
  emit(dir, "terrain_mlp",
       with_weights(Builder("terrain_mlp", {400})
                        .add("hidden1", Dense{50, Activation::kRelu})
                        .add("hidden2", Dense{10, Activation::kRelu})
                        .add("output", Dense{2, Activation::kSoftmax})
                        .desc,
                    107),
       WeightStorage::kSidecar);
  return 0;
}
