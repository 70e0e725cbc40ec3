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

#include <map>
#include <string>

#include "mcugen/graph.hpp"
#include "mcugen/kernels/dispatch.hpp"
#include "mcugen/tensor.hpp"

namespace mcugen {

/// Per-layer outputs of one forward pass, keyed by layer id.
using ActivationBuffer = std::map<std::string, TensorData>;

/// Float32 reference forward pass. This is the semantics generated code must
/// reproduce. Throws ShapeError if input.shape() != graph.input_shape().
TensorData forward(const NetworkGraph& graph, const TensorData& input,
                   Backend backend = Backend::kParallel);

/// As forward(), keeping every layer's output.
ActivationBuffer forward_traced(const NetworkGraph& graph, const TensorData& input,
                                Backend backend = Backend::kParallel);

}  // namespace mcugen
