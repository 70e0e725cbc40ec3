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

#include "mcugen/codegen.hpp"

#include <cctype>
#include <cstdio>
#include <set>

#include "mcugen/errors.hpp"
#include "mcugen/kernels/geometry.hpp"
#include "templates.hpp"

namespace mcugen {

namespace {

using templates::render;
using templates::Vars;

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

// Text placed inside a C block comment or string literal.
std::string comment_safe(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '/' && !out.empty() && out.back() == '*') out += ' ';
    if (c == '"' || c == '\\' || c == '\n' || c == '\r') c = '_';
    out += c;
  }
  return out;
}

// Layer ids mapped onto identifier characters; only used after a valid prefix.
std::string identifier_chars(std::string_view id) {
  std::string out;
  for (char c : id) out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  return out;
}

std::string act_macro(Activation act) {
  switch (act) {
    case Activation::kRelu: return "NN_ACT_RELU";
    case Activation::kSigmoid: return "NN_ACT_SIGMOID";
    case Activation::kTanh: return "NN_ACT_TANH";
    case Activation::kSoftmax: return "NN_ACT_SOFTMAX";
    case Activation::kLinear: break;
  }
  return "0";
}

std::string array_values(std::span<const float> values, int digits) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i % 8 == 0) out += i ? ",\n    " : "    ";
    else out += ", ";
    out += format_float_literal(values[i], digits);
  }
  return out;
}

class Emitter {
 public:
  Emitter(const NetworkGraph& graph, std::string prefix, int digits)
      : graph_(graph), prefix_(std::move(prefix)), digits_(digits) {}

  SourceBundle emit() {
    const std::string model = comment_safe(graph_.name());
    const std::string PREFIX = upper(prefix_);

    std::string arrays, buffers, body;
    std::map<std::string, std::string> buffer_of;
    std::size_t index = 0;
    for (const std::string& id : graph_.order()) {
      const LayerNode& node = graph_.node(id);
      const Shape& out_shape = graph_.shapes().at(id);
      const std::string buffer = prefix_ + "_buf" + std::to_string(index++);
      buffers += "static float " + buffer + "[" + std::to_string(element_count(out_shape)) +
                 "];\n";
      buffer_of[id] = buffer;

      Vars v;
      const std::string& src = node.spec.inputs.front();
      v["in"] = src == kInputId ? "input" : buffer_of.at(src);
      v["out"] = buffer;
      v["comment"] = comment_safe(id) + ": " + std::string(kind_name(node.spec.kind)) + " -> " +
                     to_string(out_shape);
      if (node.weights) {
        const std::string base = unique_symbol(prefix_ + "_" + identifier_chars(id));
        v["kernel"] = base + "_kernel";
        v["bias"] = base + "_bias";
        arrays += array(id, "kernel", v["kernel"], node.weights->kernel);
        arrays += array(id, "bias", v["bias"], node.weights->bias);
      }
      body += call(node.spec.kind, graph_.input_shape_of(id), v);

      const Activation act = activation_of(node.spec.kind);
      if (act != Activation::kLinear) {
        needs_activate_ = true;
        body += render(templates::kCallActivate,
                       {{"out", buffer},
                        {"count", std::to_string(element_count(out_shape))},
                        {"act", act_macro(act)}});
      }
    }

    SourceBundle bundle;
    bundle.entry_symbol = prefix_ + "_forward";
    bundle.files[prefix_ + ".h"] =
        render(templates::kHeader, {{"model", model},
                                    {"prefix", prefix_},
                                    {"PREFIX", PREFIX},
                                    {"guard", PREFIX + "_H_"},
                                    {"input_len", std::to_string(element_count(graph_.input_shape()))},
                                    {"output_len", std::to_string(element_count(graph_.output_shape()))},
                                    {"input_shape", to_string(graph_.input_shape())},
                                    {"output_shape", to_string(graph_.output_shape())}});
    bundle.files[prefix_ + "_params.h"] =
        render(templates::kParamsHeader, {{"model", model},
                                          {"guard", PREFIX + "_PARAMS_H_"},
                                          {"param_count", std::to_string(param_count(graph_))},
                                          {"arrays", arrays}});

    std::string source = render(templates::kSourcePrologue, {{"model", model}, {"prefix", prefix_}});
    // Helpers in a fixed order, only the ones the forward function calls.
    if (needs_activate_) source += templates::kHelperActivate;
    if (used_.contains("flatten")) source += templates::kHelperCopy;
    if (used_.contains("dense")) source += templates::kHelperDense;
    if (used_.contains("conv1d")) source += templates::kHelperConv1D;
    if (used_.contains("conv2d")) source += templates::kHelperConv2D;
    if (used_.contains("maxpool1d")) source += templates::kHelperMaxPool1D;
    if (used_.contains("maxpool2d")) source += templates::kHelperMaxPool2D;
    source += render(templates::kSourceForward, {{"prefix", prefix_},
                                                 {"PREFIX", PREFIX},
                                                 {"buffers", buffers},
                                                 {"body", body},
                                                 {"result", buffer_of.at(graph_.output_id())}});
    bundle.files[prefix_ + ".c"] = std::move(source);
    return bundle;
  }

 private:
  std::string unique_symbol(std::string base) {
    std::string symbol = base;
    for (int n = 2; symbols_.contains(symbol); ++n) symbol = base + "_" + std::to_string(n);
    symbols_.insert(symbol);
    return symbol;
  }

  std::string array(const std::string& layer, const char* role, const std::string& symbol,
                    const TensorData& t) {
    return render(templates::kParamsArray, {{"layer", comment_safe(layer)},
                                            {"role", role},
                                            {"shape", to_string(t.shape())},
                                            {"symbol", symbol},
                                            {"count", std::to_string(t.size())},
                                            {"values", array_values(t.data(), digits_)}});
  }

  std::string call(const LayerKind& kind, const Shape& in, Vars& v) {
    auto n = [](std::size_t x) { return std::to_string(x); };
    used_.insert(std::string(kind_name(kind)));
    if (auto* d = std::get_if<Dense>(&kind)) {
      const auto g = kernels::geometry(*d, in);
      v["inputs"] = n(g.inputs);
      v["units"] = n(g.units);
      return render(templates::kCallDense, v);
    }
    if (auto* c = std::get_if<Conv1D>(&kind)) {
      const auto g = kernels::geometry(*c, in);
      v["length"] = n(g.length);
      v["channels"] = n(g.channels);
      v["kernel_size"] = n(g.kernel);
      v["filters"] = n(g.filters);
      v["stride"] = n(g.stride);
      v["pad"] = n(g.pad_before);
      v["out_length"] = n(g.out_length);
      return render(templates::kCallConv1D, v);
    }
    if (auto* c = std::get_if<Conv2D>(&kind)) {
      const auto g = kernels::geometry(*c, in);
      v["height"] = n(g.height);
      v["width"] = n(g.width);
      v["channels"] = n(g.channels);
      v["kernel_h"] = n(g.kernel_h);
      v["kernel_w"] = n(g.kernel_w);
      v["filters"] = n(g.filters);
      v["stride_h"] = n(g.stride_h);
      v["stride_w"] = n(g.stride_w);
      v["pad_top"] = n(g.pad_top);
      v["pad_left"] = n(g.pad_left);
      v["out_h"] = n(g.out_h);
      v["out_w"] = n(g.out_w);
      return render(templates::kCallConv2D, v);
    }
    if (auto* p = std::get_if<MaxPool1D>(&kind)) {
      const auto g = kernels::geometry(*p, in);
      v["channels"] = n(g.channels);
      v["pool"] = n(g.pool);
      v["stride"] = n(g.stride);
      v["out_length"] = n(g.out_length);
      return render(templates::kCallMaxPool1D, v);
    }
    if (auto* p = std::get_if<MaxPool2D>(&kind)) {
      const auto g = kernels::geometry(*p, in);
      v["width"] = n(g.width);
      v["channels"] = n(g.channels);
      v["pool_h"] = n(g.pool_h);
      v["pool_w"] = n(g.pool_w);
      v["stride_h"] = n(g.stride_h);
      v["stride_w"] = n(g.stride_w);
      v["out_h"] = n(g.out_h);
      v["out_w"] = n(g.out_w);
      return render(templates::kCallMaxPool2D, v);
    }
    if (std::holds_alternative<Flatten>(kind)) {
      v["count"] = n(element_count(in));
      return render(templates::kCallFlatten, v);
    }
    throw UnsupportedLayer(std::string(kind_name(kind)));
  }

  const NetworkGraph& graph_;
  std::string prefix_;
  int digits_;
  std::set<std::string> symbols_;
  std::set<std::string> used_;
  bool needs_activate_ = false;
};

}  // namespace

bool is_valid_identifier(std::string_view name) noexcept {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

std::string sanitize_identifier(std::string_view name) {
  std::string out;
  for (char c : name) {
    out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  }
  const bool meaningful = out.find_first_not_of('_') != std::string::npos;
  if (!meaningful) throw IdentifierError("cannot derive a C identifier from '" + std::string(name) + "'");
  if (std::isdigit(static_cast<unsigned char>(out[0]))) out.insert(0, "m_");
  return out;
}

std::string format_float_literal(float value, int digits) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, static_cast<double>(value));
  std::string s = buf;
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s + "f";
}

SourceBundle generate_code(const NetworkGraph& graph, const CodegenOptions& options) {
  if (options.float_literal_digits < 1 || options.float_literal_digits > 9) {
    throw DomainError("float_literal_digits must be in [1, 9]");
  }
  std::string prefix = options.prefix.empty() ? sanitize_identifier(graph.name()) : options.prefix;
  if (!is_valid_identifier(prefix)) {
    throw IdentifierError("'" + prefix + "' is not a valid C identifier");
  }
  return Emitter(graph, std::move(prefix), options.float_literal_digits).emit();
}

}  // namespace mcugen
