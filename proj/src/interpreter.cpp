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

#include "mcugen/interpreter.hpp"

#include "mcugen/errors.hpp"

namespace mcugen {

ActivationBuffer forward_traced(const NetworkGraph& graph, const TensorData& input,
                                Backend backend) {
  if (input.shape() != graph.input_shape()) {
    throw ShapeError("input shape " + to_string(input.shape()) + " != network input shape " +
                     to_string(graph.input_shape()));
  }
  ActivationBuffer outputs;
  for (const std::string& id : graph.order()) {
    const LayerNode& node = graph.node(id);
    const std::string& src = node.spec.inputs.front();
    const TensorData& in = src == kInputId ? input : outputs.at(src);

    TensorData out = TensorData::zeros(graph.shapes().at(id));
    std::span<const float> kernel, bias;
    if (node.weights) {
      kernel = node.weights->kernel.data();
      bias = node.weights->bias.data();
    }
    kernels::run_layer<float>(node.spec.kind, in.shape(), in.data(), kernel, bias,
                              out.mutable_data(), backend);
    outputs.emplace(id, std::move(out));
  }
  return outputs;
}

TensorData forward(const NetworkGraph& graph, const TensorData& input, Backend backend) {
  ActivationBuffer outputs = forward_traced(graph, input, backend);
  return std::move(outputs.at(graph.output_id()));
}

}  // namespace mcugen
