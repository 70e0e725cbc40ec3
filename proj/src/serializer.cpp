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

#include "mcugen/serializer.hpp"

#include "mcugen/layer_registry.hpp"
#include "mcugen/parser.hpp"

namespace mcugen {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

nlohmann::ordered_json shape_json(const Shape& shape) {
  auto out = nlohmann::ordered_json::array();
  for (std::size_t d : shape) out.push_back(d);
  return out;
}

void write_hyperparameters(const LayerKind& kind, nlohmann::ordered_json& rec) {
  std::visit(Overloaded{
                 [&](const Dense& d) {
                   rec["units"] = d.units;
                   rec["activation"] = to_string(d.activation);
                 },
                 [&](const Conv1D& c) {
                   rec["filters"] = c.filters;
                   rec["kernel_size"] = c.kernel_size;
                   rec["stride"] = c.stride;
                   rec["padding"] = to_string(c.padding);
                   rec["activation"] = to_string(c.activation);
                 },
                 [&](const Conv2D& c) {
                   rec["filters"] = c.filters;
                   rec["kernel_h"] = c.kernel_h;
                   rec["kernel_w"] = c.kernel_w;
                   rec["stride_h"] = c.stride_h;
                   rec["stride_w"] = c.stride_w;
                   rec["padding"] = to_string(c.padding);
                   rec["activation"] = to_string(c.activation);
                 },
                 [&](const MaxPool1D& p) {
                   rec["pool_size"] = p.pool_size;
                   rec["stride"] = p.stride;
                 },
                 [&](const MaxPool2D& p) {
                   rec["pool_h"] = p.pool_h;
                   rec["pool_w"] = p.pool_w;
                   rec["stride_h"] = p.stride_h;
                   rec["stride_w"] = p.stride_w;
                 },
                 [&](const Flatten&) {},
             },
             kind);
}

}  // namespace

SerializedModel serialize_model(const NetworkGraph& graph, WeightStorage storage,
                                const std::string& sidecar_name) {
  // ordered_json keeps the documented field order; weight tensors go through
  // ModelJson so floats are dumped in shortest round-trip float form.
  nlohmann::ordered_json doc;
  doc["format_version"] = kFormatVersion;
  doc["name"] = graph.name();
  doc["input"] = {{"shape", shape_json(graph.input_shape())}};

  auto layers = nlohmann::ordered_json::array();
  std::map<std::string, LayerWeights> weights;
  for (const std::string& id : graph.order()) {
    const LayerNode& node = graph.node(id);
    nlohmann::ordered_json rec;
    rec["id"] = id;
    rec["type"] = kind_name(node.spec.kind);
    rec["inputs"] = node.spec.inputs;
    write_hyperparameters(node.spec.kind, rec);
    if (node.weights) {
      rec["weights_key"] = id;
      weights.emplace(id, *node.weights);
    }
    layers.push_back(std::move(rec));
  }
  doc["layers"] = std::move(layers);
  doc["output"] = graph.output_id();

  SerializedModel out;
  if (storage == WeightStorage::kSidecar) {
    doc["weights_sidecar"] = sidecar_name;
    out.sidecar = write_weight_sidecar(weights);
    out.document = doc.dump(2) + "\n";
    return out;
  }

  // Tensors are emitted on one line each to keep fixture files readable.
  std::string text = doc.dump(2);
  text.pop_back();  // closing brace
  while (!text.empty() && (text.back() == '\n' || text.back() == ' ')) text.pop_back();
  text += ",\n  \"weights\": {";
  bool first = true;
  for (const auto& [key, w] : weights) {
    auto tensor = [](const TensorData& t) {
      ModelJson j;
      j["shape"] = ModelJson::array();
      for (std::size_t d : t.shape()) j["shape"].push_back(d);
      j["data"] = t.values();
      return j;
    };
    text += first ? "\n" : ",\n";
    first = false;
    text += "    " + nlohmann::json(key).dump() + ": {\n";
    text += "      \"kernel\": " + tensor(w.kernel).dump() + ",\n";
    text += "      \"bias\": " + tensor(w.bias).dump() + "\n    }";
  }
  text += first ? "}\n}\n" : "\n  }\n}\n";
  out.document = std::move(text);
  return out;
}

}  // namespace mcugen
