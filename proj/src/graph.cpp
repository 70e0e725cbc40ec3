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

#include "mcugen/graph.hpp"

#include <cmath>
#include <functional>
#include <queue>
#include <set>

#include "mcugen/errors.hpp"

namespace mcugen {

namespace {

std::map<std::string, std::size_t> index_nodes(const GraphDescription& desc) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < desc.nodes.size(); ++i) {
    const std::string& id = desc.nodes[i].spec.id;
    if (id.empty()) throw StructureError("layer id must be non-empty");
    if (id == kInputId) throw StructureError("layer id '" + id + "' is reserved");
    if (!index.emplace(id, i).second) throw StructureError("duplicate layer id '" + id + "'");
  }
  return index;
}

void check_finite(const TensorData& t, const std::string& what) {
  for (float v : t.data()) {
    if (!std::isfinite(v)) throw ShapeError(what + " contains a non-finite value");
  }
}

}  // namespace

std::vector<std::string> execution_order(const GraphDescription& desc) {
  const auto index = index_nodes(desc);

  std::map<std::string, std::size_t> pending;  // unresolved predecessor count
  std::map<std::string, std::vector<std::string>> successors;
  std::priority_queue<std::string, std::vector<std::string>, std::greater<>> ready;

  for (const LayerNode& node : desc.nodes) {
    std::size_t count = 0;
    for (const std::string& in : node.spec.inputs) {
      if (in == kInputId) continue;
      if (!index.contains(in)) {
        throw DanglingInputError("layer '" + node.spec.id + "' references unknown input '" + in +
                                 "'");
      }
      successors[in].push_back(node.spec.id);
      ++count;
    }
    pending[node.spec.id] = count;
    if (count == 0) ready.push(node.spec.id);
  }

  std::vector<std::string> order;
  order.reserve(desc.nodes.size());
  while (!ready.empty()) {
    std::string id = ready.top();
    ready.pop();
    for (const std::string& next : successors[id]) {
      if (--pending[next] == 0) ready.push(next);
    }
    order.push_back(std::move(id));
  }
  if (order.size() != desc.nodes.size()) {
    std::string stuck;
    for (const auto& [id, count] : pending) {
      if (count != 0) stuck += (stuck.empty() ? "" : ", ") + id;
    }
    throw CycleError("dependency cycle among layers: " + stuck);
  }
  return order;
}

ShapeMap infer_shapes(const GraphDescription& desc) {
  const auto index = index_nodes(desc);
  ShapeMap shapes;
  for (const std::string& id : execution_order(desc)) {
    const LayerSpec& spec = desc.nodes[index.at(id)].spec;
    if (spec.inputs.size() != 1) {
      throw StructureError("layer '" + id + "' must have exactly one input, got " +
                           std::to_string(spec.inputs.size()));
    }
    const std::string& src = spec.inputs.front();
    const Shape& in = src == kInputId ? desc.input_shape : shapes.at(src);
    try {
      shapes.emplace(id, output_shape(spec.kind, in));
    } catch (const ShapeError& e) {
      throw ShapeError("layer '" + id + "': " + e.what());
    }
  }
  return shapes;
}

NetworkGraph NetworkGraph::build(GraphDescription desc) {
  NetworkGraph g;
  if (desc.input_shape.empty()) throw ShapeError("network input shape must be non-empty");
  for (std::size_t d : desc.input_shape) {
    if (d == 0) throw ShapeError("network input dimension must be >= 1");
  }
  if (desc.nodes.empty()) throw StructureError("network has no layers");

  g.index_ = index_nodes(desc);
  g.order_ = execution_order(desc);
  g.shapes_ = infer_shapes(desc);

  std::size_t input_consumers = 0;
  std::set<std::string> has_successor;
  for (const LayerNode& node : desc.nodes) {
    for (const std::string& in : node.spec.inputs) {
      if (in == kInputId) {
        ++input_consumers;
      } else {
        has_successor.insert(in);
      }
    }
  }
  if (input_consumers != 1) {
    throw StructureError("exactly one layer must consume the network input, found " +
                         std::to_string(input_consumers));
  }
  if (!g.index_.contains(desc.output_id)) {
    throw StructureError("output id '" + desc.output_id + "' is not a layer");
  }
  if (has_successor.contains(desc.output_id)) {
    throw StructureError("output layer '" + desc.output_id + "' has successors");
  }

  for (const LayerNode& node : desc.nodes) {
    const std::string& id = node.spec.id;
    if (!has_weights(node.spec.kind)) {
      if (node.weights) throw StructureError("layer '" + id + "' does not take weights");
      continue;
    }
    if (!node.weights) throw MissingWeights("layer '" + id + "' has no weights attached");
    const std::string& src = node.spec.inputs.front();
    const Shape& in = src == kInputId ? desc.input_shape : g.shapes_.at(src);
    const WeightShapes want = expected_weight_shapes(node.spec.kind, in);
    if (node.weights->kernel.shape() != want.kernel) {
      throw ShapeError("layer '" + id + "' kernel shape " + to_string(node.weights->kernel.shape()) +
                       " != expected " + to_string(want.kernel));
    }
    if (node.weights->bias.shape() != want.bias) {
      throw ShapeError("layer '" + id + "' bias shape " + to_string(node.weights->bias.shape()) +
                       " != expected " + to_string(want.bias));
    }
    check_finite(node.weights->kernel, "layer '" + id + "' kernel");
    check_finite(node.weights->bias, "layer '" + id + "' bias");
  }

  g.desc_ = std::move(desc);
  return g;
}

const LayerNode& NetworkGraph::node(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw StructureError("no layer '" + id + "'");
  return desc_.nodes[it->second];
}

const Shape& NetworkGraph::input_shape_of(const std::string& id) const {
  const std::string& src = node(id).spec.inputs.front();
  return src == kInputId ? desc_.input_shape : shapes_.at(src);
}

std::vector<std::string> execution_order(const NetworkGraph& graph) { return graph.order(); }

ShapeMap infer_shapes(const NetworkGraph& graph) { return graph.shapes(); }

std::size_t param_count(const LayerNode& node) {
  if (!node.weights) return 0;
  return node.weights->kernel.size() + node.weights->bias.size();
}

std::size_t param_count(const NetworkGraph& graph) {
  std::size_t total = 0;
  for (const LayerNode& node : graph.description().nodes) total += param_count(node);
  return total;
}

}  // namespace mcugen
