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

#include "mcugen/parser.hpp"

#include <set>

#include "mcugen/errors.hpp"

namespace mcugen {

namespace {

const std::set<std::string> kTopLevelKeys = {"format_version", "name",   "input",  "layers",
                                             "output",         "weights", "weights_sidecar"};

ModelJson parse_json(std::string_view text) {
  try {
    return ModelJson::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError(std::string("malformed model document: ") + e.what());
  }
}

const ModelJson& field(const ModelJson& obj, const char* key, const char* where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SyntaxError(std::string(where) + " is missing '" + key + "'");
  return *it;
}

Shape parse_shape(const ModelJson& v, const std::string& where) {
  if (!v.is_array()) throw SyntaxError(where + " shape must be an array");
  Shape shape;
  for (const ModelJson& d : v) {
    if (!d.is_number_integer() || d.get<std::int64_t>() < 1) {
      throw SyntaxError(where + " shape entries must be positive integers");
    }
    shape.push_back(static_cast<std::size_t>(d.get<std::int64_t>()));
  }
  if (shape.empty()) throw SyntaxError(where + " shape must be non-empty");
  return shape;
}

void flatten_numbers(const ModelJson& v, std::vector<float>& out, const std::string& where) {
  if (v.is_array()) {
    for (const ModelJson& e : v) flatten_numbers(e, out, where);
  } else if (v.is_number_float()) {
    out.push_back(v.get<float>());
  } else if (v.is_number_integer()) {
    out.push_back(static_cast<float>(v.get<std::int64_t>()));
  } else {
    throw SyntaxError(where + " data must contain only numbers");
  }
}

TensorData parse_tensor(const ModelJson& v, const std::string& where) {
  if (!v.is_object()) throw SyntaxError(where + " must be an object with shape and data");
  for (auto it = v.begin(); it != v.end(); ++it) {
    if (it.key() != "shape" && it.key() != "data") {
      throw SyntaxError(where + " has unknown field '" + it.key() + "'");
    }
  }
  Shape shape = parse_shape(field(v, "shape", where.c_str()), where);
  std::vector<float> data;
  flatten_numbers(field(v, "data", where.c_str()), data, where);
  if (data.size() != element_count(shape)) {
    throw ShapeError(where + " has " + std::to_string(data.size()) + " values for shape " +
                     to_string(shape));
  }
  return TensorData(std::move(shape), std::move(data));
}

SidecarWeights parse_inline_weights(const ModelJson& doc) {
  SidecarWeights out;
  auto it = doc.find("weights");
  if (it == doc.end()) return out;
  if (!it->is_object()) throw SyntaxError("'weights' must be an object");
  for (auto w = it->begin(); w != it->end(); ++w) {
    const std::string where = "weights '" + w.key() + "'";
    if (!w->is_object()) throw SyntaxError(where + " must be an object");
    PartialWeights& pw = out[w.key()];
    for (auto part = w->begin(); part != w->end(); ++part) {
      if (part.key() == "kernel") {
        pw.kernel = parse_tensor(*part, where + " kernel");
      } else if (part.key() == "bias") {
        pw.bias = parse_tensor(*part, where + " bias");
      } else {
        throw SyntaxError(where + " has unknown field '" + part.key() + "'");
      }
    }
  }
  return out;
}

std::vector<std::string> parse_inputs(LayerRecord& rec, const ModelJson& raw) {
  rec.consume("inputs");
  auto it = raw.find("inputs");
  if (it == raw.end() || !it->is_array()) {
    throw SyntaxError("layer '" + rec.id() + "' needs an 'inputs' array");
  }
  std::vector<std::string> inputs;
  for (const ModelJson& v : *it) {
    if (!v.is_string()) throw SyntaxError("layer '" + rec.id() + "' inputs must be strings");
    inputs.push_back(v.get<std::string>());
  }
  return inputs;
}

}  // namespace

std::optional<std::string> declared_sidecar(std::string_view document) {
  const ModelJson doc = parse_json(document);
  if (!doc.is_object()) return std::nullopt;
  auto it = doc.find("weights_sidecar");
  if (it == doc.end() || !it->is_string()) return std::nullopt;
  return it->get<std::string>();
}

NetworkGraph parse_model(std::string_view document,
                         std::optional<std::span<const std::uint8_t>> sidecar,
                         const LayerBuilderRegistry& registry) {
  const ModelJson doc = parse_json(document);
  if (!doc.is_object()) throw SyntaxError("model document must be a JSON object");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (!kTopLevelKeys.contains(it.key())) {
      throw SyntaxError("model document has unknown field '" + it.key() + "'");
    }
  }

  const ModelJson& version = field(doc, "format_version", "model document");
  if (!version.is_number_integer()) throw SyntaxError("format_version must be an integer");
  if (version.get<std::int64_t>() != kFormatVersion) {
    throw VersionError("unsupported format_version " + version.dump() + " (expected 1)");
  }

  GraphDescription desc;
  const ModelJson& name = field(doc, "name", "model document");
  if (!name.is_string()) throw SyntaxError("'name' must be a string");
  desc.name = name.get<std::string>();

  const ModelJson& input = field(doc, "input", "model document");
  if (!input.is_object() || input.size() != 1) {
    throw SyntaxError("'input' must be an object holding only 'shape'");
  }
  desc.input_shape = parse_shape(field(input, "shape", "input"), "input");

  const ModelJson& output = field(doc, "output", "model document");
  if (!output.is_string()) throw SyntaxError("'output' must be a string");
  desc.output_id = output.get<std::string>();

  // Inline weights first, then sidecar tensors on top.
  SidecarWeights weights = parse_inline_weights(doc);
  const bool wants_sidecar = doc.contains("weights_sidecar");
  if (wants_sidecar && !doc["weights_sidecar"].is_string()) {
    throw SyntaxError("'weights_sidecar' must be a string");
  }
  if (wants_sidecar && !sidecar) {
    throw MissingWeights("document declares weights sidecar '" +
                         doc["weights_sidecar"].get<std::string>() + "' but none was supplied");
  }
  if (sidecar) {
    for (auto& [key, pw] : read_weight_sidecar(*sidecar)) {
      PartialWeights& dst = weights[key];
      if (pw.kernel) dst.kernel = std::move(pw.kernel);
      if (pw.bias) dst.bias = std::move(pw.bias);
    }
  }

  const ModelJson& layers = field(doc, "layers", "model document");
  if (!layers.is_array()) throw SyntaxError("'layers' must be an array");
  for (const ModelJson& raw : layers) {
    LayerRecord rec(raw);
    const LayerBuilder* builder = registry.find(rec.type());
    if (!builder) throw UnsupportedLayer(rec.type());

    LayerNode node;
    node.spec.id = rec.id();
    node.spec.inputs = parse_inputs(rec, raw);
    node.spec.kind = (*builder)(rec);

    if (has_weights(node.spec.kind)) {
      rec.consume("weights_key");
      auto key_it = raw.find("weights_key");
      if (key_it == raw.end() || !key_it->is_string()) {
        throw MissingWeights("layer '" + rec.id() + "' needs a 'weights_key'");
      }
      const std::string key = key_it->get<std::string>();
      auto w = weights.find(key);
      if (w == weights.end() || !w->second.kernel || !w->second.bias) {
        throw MissingWeights("weights key '" + key + "' of layer '" + rec.id() +
                             "' has no complete kernel and bias");
      }
      node.weights = LayerWeights{*w->second.kernel, *w->second.bias};
    }
    rec.reject_unconsumed();
    desc.nodes.push_back(std::move(node));
  }

  return NetworkGraph::build(std::move(desc));
}

}  // namespace mcugen
