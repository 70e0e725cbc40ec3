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

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcugen/layer.hpp"
#include "mcugen/tensor.hpp"

namespace mcugen {

struct LayerNode {
  LayerSpec spec;
  std::optional<LayerWeights> weights;

  friend bool operator==(const LayerNode&, const LayerNode&) = default;
};

/// Layer id -> output shape.
using ShapeMap = std::map<std::string, Shape>;

/// Unvalidated description of a network: what a parser or a test assembles
/// before handing it to NetworkGraph::build. Node order carries no meaning.
struct GraphDescription {
  std::string name;
  Shape input_shape;
  std::vector<LayerNode> nodes;
  std::string output_id;

  friend bool operator==(const GraphDescription&, const GraphDescription&) = default;
};

/// Dependency order: every layer appears after all of its inputs; ties are
/// broken by lexicographic id. Throws DanglingInputError on an unknown input
/// id and CycleError when no such order exists.
std::vector<std::string> execution_order(const GraphDescription& desc);

/// Output shape of every layer, computed in dependency order.
ShapeMap infer_shapes(const GraphDescription& desc);

/// Validated, immutable network.
///
/// Construction checks ids, single-input layers, acyclicity, the unique
/// consumer of the network input, the terminal output layer, weight presence
/// and weight shapes against inferred input shapes, and caches the
/// execution order and shape map.
class NetworkGraph {
 public:
  static NetworkGraph build(GraphDescription desc);

  const std::string& name() const noexcept { return desc_.name; }
  const Shape& input_shape() const noexcept { return desc_.input_shape; }
  const std::string& output_id() const noexcept { return desc_.output_id; }
  const GraphDescription& description() const noexcept { return desc_; }

  const LayerNode& node(const std::string& id) const;
  const std::vector<std::string>& order() const noexcept { return order_; }
  const ShapeMap& shapes() const noexcept { return shapes_; }

  /// Shape of the tensor that feeds `id` (its single input).
  const Shape& input_shape_of(const std::string& id) const;
  const Shape& output_shape() const { return shapes_.at(desc_.output_id); }

 private:
  NetworkGraph() = default;

  GraphDescription desc_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::string> order_;
  ShapeMap shapes_;
};

std::vector<std::string> execution_order(const NetworkGraph& graph);
ShapeMap infer_shapes(const NetworkGraph& graph);

/// Sum over weighted layers of element-count(kernel) + element-count(bias).
std::size_t param_count(const NetworkGraph& graph);

/// Number of parameters a single layer contributes.
std::size_t param_count(const LayerNode& node);

}  // namespace mcugen
