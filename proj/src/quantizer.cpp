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

#include "mcugen/quantizer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "json.hpp"
#include "mcugen/errors.hpp"
#include "mcugen/interpreter.hpp"
#include "mcugen/kernels/dispatch.hpp"

namespace mcugen {

namespace {

constexpr double kRangeEpsilon = 1e-9;

void require_supported(int total_bits) {
  if (std::find(kSupportedBits.begin(), kSupportedBits.end(), total_bits) ==
      kSupportedBits.end()) {
    throw DomainError("unsupported fixed-point width " + std::to_string(total_bits) +
                      " (expected 2, 8, 16 or 32)");
  }
}

double max_abs(std::span<const float> values) {
  double m = 0;
  for (float v : values) m = std::max(m, std::fabs(static_cast<double>(v)));
  return m;
}

int frac_or_throw(const std::map<std::string, int>& fracs, const std::string& id,
                  const char* what) {
  auto it = fracs.find(id);
  if (it == fracs.end()) {
    throw DomainError(std::string("quantization plan has no ") + what + " format for layer '" +
                      id + "'");
  }
  return it->second;
}

struct QuantizedWeights {
  std::vector<double> kernel;
  std::vector<double> bias;
};

std::vector<double> quantize_all(std::span<const float> values, QFormat q, std::size_t& sat) {
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    bool clipped = false;
    out[i] = quantize_value(values[i], q, clipped);
    sat += clipped;
  }
  return out;
}

std::map<std::string, QuantizedWeights> quantize_weights(const NetworkGraph& graph,
                                                         const QuantPlan& plan,
                                                         std::size_t& sat) {
  std::map<std::string, QuantizedWeights> out;
  for (const std::string& id : graph.order()) {
    const LayerNode& node = graph.node(id);
    if (!node.weights) continue;
    const QFormat kq = QFormat::make(plan.total_bits, frac_or_throw(plan.kernel_frac, id, "kernel"));
    const QFormat bq = QFormat::make(plan.total_bits, frac_or_throw(plan.bias_frac, id, "bias"));
    out.emplace(id, QuantizedWeights{quantize_all(node.weights->kernel.data(), kq, sat),
                                     quantize_all(node.weights->bias.data(), bq, sat)});
  }
  return out;
}

// Runs the network on pre-quantized weights. Adds clamped activations to `sat`.
std::vector<double> run_fixed(const NetworkGraph& graph,
                              const std::map<std::string, QuantizedWeights>& weights,
                              const QuantPlan& plan, const TensorData& input, std::size_t& sat) {
  if (input.shape() != graph.input_shape()) {
    throw ShapeError("input shape " + to_string(input.shape()) + " != network input shape " +
                     to_string(graph.input_shape()));
  }
  std::map<std::string, std::vector<double>> outputs;
  const std::vector<double> x =
      quantize_all(input.data(), QFormat::make(plan.total_bits, plan.input_frac), sat);

  for (const std::string& id : graph.order()) {
    const LayerNode& node = graph.node(id);
    const std::string& src = node.spec.inputs.front();
    const std::vector<double>& in = src == kInputId ? x : outputs.at(src);

    std::vector<double> out(element_count(graph.shapes().at(id)));
    std::span<const double> kernel, bias;
    if (auto it = weights.find(id); it != weights.end()) {
      kernel = it->second.kernel;
      bias = it->second.bias;
    }
    kernels::run_layer<double>(node.spec.kind, graph.input_shape_of(id), in, kernel, bias, out,
                               Backend::kSerial);
    const QFormat aq = QFormat::make(plan.total_bits, frac_or_throw(plan.activation_frac, id,
                                                                    "activation"));
    for (double& v : out) {
      bool clipped = false;
      v = quantize_value(v, aq, clipped);
      sat += clipped;
    }
    outputs.emplace(id, std::move(out));
  }
  return std::move(outputs.at(graph.output_id()));
}

}  // namespace

QFormat QFormat::make(int total_bits, int frac_bits) {
  require_supported(total_bits);
  if (frac_bits < 0 || frac_bits > total_bits - 1) {
    throw DomainError("fraction bits " + std::to_string(frac_bits) + " out of range for " +
                      std::to_string(total_bits) + "-bit format");
  }
  return QFormat{total_bits, frac_bits};
}

double QFormat::min_value() const noexcept {
  return std::ldexp(-1.0, total_bits - 1 - frac_bits);
}

double QFormat::max_value() const noexcept {
  return std::ldexp(std::ldexp(1.0, total_bits - 1) - 1.0, -frac_bits);
}

double QFormat::step() const noexcept { return std::ldexp(1.0, -frac_bits); }

double quantize_value(double x, QFormat q, bool& saturated) noexcept {
  const double int_max = std::ldexp(1.0, q.total_bits - 1) - 1.0;
  const double int_min = -std::ldexp(1.0, q.total_bits - 1);
  double r = std::round(std::ldexp(x, q.frac_bits));
  saturated = false;
  if (r > int_max) {
    r = int_max;
    saturated = true;
  } else if (r < int_min) {
    r = int_min;
    saturated = true;
  }
  return std::ldexp(r, -q.frac_bits);
}

double quantize_value(double x, QFormat q) noexcept {
  bool ignored = false;
  return quantize_value(x, q, ignored);
}

int fraction_bits_for(double max_abs, int total_bits) noexcept {
  const double int_bits = std::max(0.0, std::ceil(std::log2(max_abs + kRangeEpsilon)));
  const double frac = static_cast<double>(total_bits - 1) - int_bits;
  return static_cast<int>(std::clamp(frac, 0.0, static_cast<double>(total_bits - 1)));
}

RangeProfile calibrate(const NetworkGraph& graph, std::span<const TensorData> inputs) {
  if (inputs.empty()) throw DomainError("calibration needs at least one input");
  RangeProfile ranges;
  for (const std::string& id : graph.order()) {
    const LayerNode& node = graph.node(id);
    if (node.weights) {
      ranges.kernel[id] = max_abs(node.weights->kernel.data());
      ranges.bias[id] = max_abs(node.weights->bias.data());
    }
    ranges.activation[id] = 0;
  }
  for (const TensorData& input : inputs) {
    ranges.input = std::max(ranges.input, max_abs(input.data()));
    for (const auto& [id, out] : forward_traced(graph, input)) {
      double& m = ranges.activation[id];
      m = std::max(m, max_abs(out.data()));
    }
  }
  return ranges;
}

QuantPlan make_plan(const RangeProfile& ranges, int total_bits) {
  require_supported(total_bits);
  QuantPlan plan;
  plan.total_bits = total_bits;
  plan.input_frac = fraction_bits_for(ranges.input, total_bits);
  for (const auto& [id, m] : ranges.kernel) plan.kernel_frac[id] = fraction_bits_for(m, total_bits);
  for (const auto& [id, m] : ranges.bias) plan.bias_frac[id] = fraction_bits_for(m, total_bits);
  for (const auto& [id, m] : ranges.activation) {
    plan.activation_frac[id] = fraction_bits_for(m, total_bits);
  }
  return plan;
}

QuantPlan uniform_plan(const NetworkGraph& graph, int total_bits, int frac_bits) {
  QFormat::make(total_bits, frac_bits);
  QuantPlan plan;
  plan.total_bits = total_bits;
  plan.input_frac = frac_bits;
  for (const std::string& id : graph.order()) {
    if (graph.node(id).weights) {
      plan.kernel_frac[id] = frac_bits;
      plan.bias_frac[id] = frac_bits;
    }
    plan.activation_frac[id] = frac_bits;
  }
  return plan;
}

FixedOutput forward_fixed(const NetworkGraph& graph, const TensorData& input,
                          const QuantPlan& plan) {
  FixedOutput result;
  result.shape = graph.output_shape();
  const auto weights = quantize_weights(graph, plan, result.saturations);
  result.values = run_fixed(graph, weights, plan, input, result.saturations);
  return result;
}

TensorData forward_fixed(const NetworkGraph& graph, const TensorData& input, int total_bits) {
  const QuantPlan plan = make_plan(calibrate(graph, std::span(&input, 1)), total_bits);
  FixedOutput fixed = forward_fixed(graph, input, plan);
  std::vector<float> values(fixed.values.begin(), fixed.values.end());
  return TensorData(std::move(fixed.shape), std::move(values));
}

FidelityReport fidelity_report(const NetworkGraph& graph, std::span<const TensorData> inputs,
                               std::span<const int> ks) {
  if (inputs.empty()) throw DomainError("fidelity report needs at least one input");
  for (int k : ks) require_supported(k);
  for (const TensorData& in : inputs) {
    if (in.shape() != graph.input_shape()) {
      throw ShapeError("input shape " + to_string(in.shape()) + " != network input shape " +
                       to_string(graph.input_shape()));
    }
  }

  const RangeProfile ranges = calibrate(graph, inputs);
  std::vector<int> widths(ks.begin(), ks.end());
  std::sort(widths.begin(), widths.end());
  widths.erase(std::unique(widths.begin(), widths.end()), widths.end());

  struct Prepared {
    QuantPlan plan;
    std::map<std::string, QuantizedWeights> weights;
    std::size_t weight_saturations = 0;
  };
  auto prepare = [&](int k) {
    Prepared p{make_plan(ranges, k), {}, 0};
    p.weights = quantize_weights(graph, p.plan, p.weight_saturations);
    return p;
  };
  const Prepared baseline = prepare(32);
  std::vector<Prepared> prepared;
  for (int k : widths) prepared.push_back(prepare(k));

  // Per-input, per-width partial results; reduced in input order afterwards.
  struct Partial {
    double abs_sum = 0;
    double max_error = 0;
    std::size_t saturations = 0;
  };
  const std::size_t n = inputs.size();
  std::vector<Partial> partial(n * widths.size());

#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t ignored = 0;
    const std::vector<double> ref =
        run_fixed(graph, baseline.weights, baseline.plan, inputs[i], ignored);
    for (std::size_t w = 0; w < widths.size(); ++w) {
      Partial& p = partial[i * widths.size() + w];
      const std::vector<double> out =
          run_fixed(graph, prepared[w].weights, prepared[w].plan, inputs[i], p.saturations);
      for (std::size_t e = 0; e < out.size(); ++e) {
        const double err = std::fabs(out[e] - ref[e]);
        p.abs_sum += err;
        p.max_error = std::max(p.max_error, err);
      }
    }
  }

  const double elements = static_cast<double>(n * element_count(graph.output_shape()));
  FidelityReport report;
  for (std::size_t w = 0; w < widths.size(); ++w) {
    FidelityEntry entry;
    entry.saturations = prepared[w].weight_saturations;
    double abs_sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const Partial& p = partial[i * widths.size() + w];
      abs_sum += p.abs_sum;
      entry.max_error = std::max(entry.max_error, p.max_error);
      entry.saturations += p.saturations;
    }
    entry.epsilon = abs_sum / elements;
    report.entries.emplace(widths[w], entry);
  }
  return report;
}

std::string to_text(const FidelityReport& report) {
  std::string out = "bits  epsilon        max_error      saturations\n";
  char line[128];
  for (const auto& [k, e] : report.entries) {
    std::snprintf(line, sizeof line, "%-4d  %.6e   %.6e   %zu\n", k, e.epsilon, e.max_error,
                  e.saturations);
    out += line;
  }
  return out;
}

std::string to_json(const FidelityReport& report) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  for (const auto& [k, e] : report.entries) {
    doc[std::to_string(k)] = {
        {"epsilon", e.epsilon}, {"max", e.max_error}, {"saturations", e.saturations}};
  }
  return doc.dump(2) + "\n";
}

}  // namespace mcugen
