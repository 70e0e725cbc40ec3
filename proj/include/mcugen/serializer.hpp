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

#include <optional>
#include <string>

#include "mcugen/graph.hpp"
#include "mcugen/sidecar.hpp"

namespace mcugen {

enum class WeightStorage { kInline, kSidecar };

struct SerializedModel {
  std::string document;
  std::optional<Bytes> sidecar;
};

/// Writes `graph` as a version-1 model document. Layers appear in execution
/// order with every hyperparameter explicit; each weighted layer uses its id
/// as weights key. With kSidecar the document names `sidecar_name` and the
/// weights are returned as sidecar bytes.
SerializedModel serialize_model(const NetworkGraph& graph,
                                WeightStorage storage = WeightStorage::kInline,
                                const std::string& sidecar_name = "weights.nnwb");

}  // namespace mcugen
