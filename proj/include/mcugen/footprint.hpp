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
#include <cstdint>
#include <string>
#include <string_view>

#include "mcugen/graph.hpp"

namespace mcugen {

/// Non-negative rational num/den, kept in lowest terms.
struct Ratio {
  std::uint64_t num = 1;
  std::uint64_t den = 1;

  static Ratio make(std::uint64_t num, std::uint64_t den);
  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Ratio&, const Ratio&) = default;
};

/// Exact parse of "1", "0.75", ".5" or "3/4". Throws DomainError on
/// anything else.
Ratio parse_ratio(std::string_view text);

std::string to_string(const Ratio& r);

/// floor(gamma * flash_bits / bits_per_param), exact. Throws DomainError
/// unless flash_bits > 0, 0 < gamma <= 1 and bits_per_param is 8, 16 or 32.
std::uint64_t max_params(std::uint64_t flash_bits, Ratio gamma, int bits_per_param = 32);

struct FootprintReport {
  std::size_t param_count = 0;
  int bits_per_param = 32;
  std::uint64_t flash_bits = 0;
  Ratio gamma;
  std::uint64_t max_params = 0;
  std::uint64_t weight_bytes = 0;  // param_count * bits_per_param / 8
  std::uint64_t buffer_bytes = 0;  // per-layer float32 output buffers of the generated code
  bool fits = false;               // param_count <= max_params
};

FootprintReport footprint(const NetworkGraph& graph, std::uint64_t flash_bits, Ratio gamma,
                          int bits_per_param = 32);

std::string to_text(const FootprintReport& report);

}  // namespace mcugen
