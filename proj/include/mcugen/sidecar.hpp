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

// Binary weight sidecar, little-endian:
//
//   "NNWB" | version:u16 = 1 | tensor_count:u32
//   per tensor: key_len:u16 | key bytes | rank:u8 | rank x dim:u32 | product(dims) x f32
//
// Tensor keys are "<weights_key>.kernel" and "<weights_key>.bias".

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mcugen/layer.hpp"
#include "mcugen/tensor.hpp"

namespace mcugen {

using Bytes = std::vector<std::uint8_t>;

inline constexpr std::uint16_t kSidecarVersion = 1;

/// Weights for one key as found in a sidecar; either half may be absent.
struct PartialWeights {
  std::optional<TensorData> kernel;
  std::optional<TensorData> bias;
};

using SidecarWeights = std::map<std::string, PartialWeights>;

/// Raw (key, tensor) entries in file order. Throws MagicError,
/// TruncationError, DuplicateKeyError, VersionError, or SidecarError for
/// trailing bytes and malformed entries.
std::vector<std::pair<std::string, TensorData>> read_sidecar_tensors(
    std::span<const std::uint8_t> bytes);

/// Tensors grouped by weights key. Keys must end in ".kernel" or ".bias".
SidecarWeights read_weight_sidecar(std::span<const std::uint8_t> bytes);

/// Encodes entries verbatim, in the order given (duplicates included).
Bytes write_sidecar_tensors(std::span<const std::pair<std::string, TensorData>> tensors);

/// Encodes kernel then bias for each key, keys in sorted order.
Bytes write_weight_sidecar(const std::map<std::string, LayerWeights>& weights);

}  // namespace mcugen
