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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "mcugen/graph.hpp"
#include "mcugen/layer_registry.hpp"
#include "mcugen/sidecar.hpp"

namespace mcugen {

inline constexpr int kFormatVersion = 1;

/// Parses a version-1 model document into a validated graph.
///
/// Document layout:
///
///   {"format_version": 1, "name": str, "input": {"shape": [int, ...]},
///    "layers": [{"id": str, "type": str, "inputs": [str, ...],
///                ...hyperparameters, "activation": str?, "weights_key": str?}, ...],
///    "output": str,
///    "weights": {key: {"kernel": {"shape": [...], "data": [...]},
///                      "bias":   {"shape": [...], "data": [...]}}}?,
///    "weights_sidecar": str?}
///
/// `weights_sidecar` names a binary file holding the weights; its contents
/// must then be passed as `sidecar`. Sidecar tensors override inline ones.
///
/// Throws SyntaxError, VersionError, UnsupportedLayer, MissingWeights, or
/// any model validation error (ShapeError, StructureError, ...).
NetworkGraph parse_model(std::string_view document,
                         std::optional<std::span<const std::uint8_t>> sidecar = std::nullopt,
                         const LayerBuilderRegistry& registry = default_registry());

/// The `weights_sidecar` path a document declares, if any. Does not validate
/// the rest of the document.
std::optional<std::string> declared_sidecar(std::string_view document);

}  // namespace mcugen
