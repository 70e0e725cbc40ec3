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

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "mcugen/graph.hpp"
#include "mcugen/tensor.hpp"

namespace mcugen {

/// Total bit widths the fixed-point simulator accepts.
inline constexpr std::array<int, 4> kSupportedBits = {2, 8, 16, 32};

/// Signed two's-complement Q format: `total_bits` wide with `frac_bits`
/// fractional bits. Representable range is
/// [-2^(total-1), 2^(total-1) - 1] / 2^frac.
struct QFormat {
  int total_bits = 32;
  int frac_bits = 0;

  /// Throws DomainError unless total_bits is supported and
  /// 0 <= frac_bits <= total_bits - 1.
  static QFormat make(int total_bits, int frac_bits);

  double min_value() const noexcept;
  double max_value() const noexcept;
  double step() const noexcept;
};

/// clamp(round_half_away(x * 2^frac), int_min, int_max) / 2^frac.
double quantize_value(double x, QFormat q) noexcept;

/// As above; sets `saturated` when the clamp was hit.
double quantize_value(double x, QFormat q, bool& saturated) noexcept;

/// Power-of-two scaling policy: total - 1 - max(0, ceil(log2(max_abs + eps))),
/// clamped to [0, total - 1].
int fraction_bits_for(double max_abs, int total_bits) noexcept;

/// Largest magnitude observed in each tensor of the network.
struct RangeProfile {
  double input = 0;
  std::map<std::string, double> kernel;
  std::map<std::string, double> bias;
  std::map<std::string, double> activation;
};

/// Weight ranges statically, activation ranges from a float forward pass over
/// `inputs` (which must be non-empty).
RangeProfile calibrate(const NetworkGraph& graph, std::span<const TensorData> inputs);

/// Per-tensor fraction bits for one bit width.
struct QuantPlan {
  int total_bits = 32;
  int input_frac = 0;
  std::map<std::string, int> kernel_frac;
  std::map<std::string, int> bias_frac;
  std::map<std::string, int> activation_frac;
};

QuantPlan make_plan(const RangeProfile& ranges, int total_bits);

/// Every tensor of the graph in the same format.
QuantPlan uniform_plan(const NetworkGraph& graph, int total_bits, int frac_bits);

struct FixedOutput {
  Shape shape;
  std::vector<double> values;
  std::size_t saturations = 0;  // clamped values, weights included
};

/// Fixed-point forward pass under an explicit plan. Weights, biases, the
/// input, and every layer output (after activation) are quantized; products
/// are accumulated exactly enough to model a wide accumulator.
FixedOutput forward_fixed(const NetworkGraph& graph, const TensorData& input,
                          const QuantPlan& plan);

/// Fixed-point forward pass at `total_bits`, with activation ranges
/// calibrated on `input` alone.
TensorData forward_fixed(const NetworkGraph& graph, const TensorData& input, int total_bits);

struct FidelityEntry {
  double epsilon = 0;    // mean |out_k - out_32| over inputs and output elements
  double max_error = 0;  // max |out_k - out_32|
  std::size_t saturations = 0;
};

struct FidelityReport {
  std::map<int, FidelityEntry> entries;
};

/// Mean absolute output error of each k-bit simulation against the 32-bit
/// fixed-point baseline. Activation ranges are calibrated once over all
/// `inputs`. Inputs are evaluated in parallel; the result is deterministic.
FidelityReport fidelity_report(const NetworkGraph& graph, std::span<const TensorData> inputs,
                               std::span<const int> ks);

std::string to_text(const FidelityReport& report);
std::string to_json(const FidelityReport& report);

}  // namespace mcugen
