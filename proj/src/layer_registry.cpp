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

#include "mcugen/layer_registry.hpp"

#include "mcugen/errors.hpp"

namespace mcugen {

namespace {

std::string required_string(const ModelJson& record, const char* key) {
  auto it = record.find(key);
  if (it == record.end() || !it->is_string()) {
    throw SyntaxError(std::string("layer record needs a string field '") + key + "'");
  }
  return it->get<std::string>();
}

}  // namespace

LayerRecord::LayerRecord(const ModelJson& record) : record_(record) {
  if (!record.is_object()) throw SyntaxError("layer record must be an object");
  id_ = required_string(record, "id");
  type_ = required_string(record, "type");
  consumed_.insert("id");
  consumed_.insert("type");
}

bool LayerRecord::has(std::string_view key) const {
  return record_.find(std::string(key)) != record_.end();
}

const ModelJson& LayerRecord::at(std::string_view key) {
  auto it = record_.find(std::string(key));
  if (it == record_.end()) {
    throw SyntaxError("layer '" + id_ + "' is missing field '" + std::string(key) + "'");
  }
  consumed_.emplace(key);
  return *it;
}

void LayerRecord::consume(std::string_view key) { consumed_.emplace(key); }

std::size_t LayerRecord::positive_int(std::string_view key) {
  const ModelJson& v = at(key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 1) {
    throw SyntaxError("layer '" + id_ + "' field '" + std::string(key) +
                      "' must be a positive integer");
  }
  return static_cast<std::size_t>(v.get<std::int64_t>());
}

std::size_t LayerRecord::positive_int_or(std::string_view key, std::size_t fallback) {
  return has(key) ? positive_int(key) : fallback;
}

Activation LayerRecord::activation() {
  if (!has("activation")) return Activation::kLinear;
  const ModelJson& v = at("activation");
  if (!v.is_string()) throw SyntaxError("layer '" + id_ + "' activation must be a string");
  const auto act = parse_activation(v.get<std::string>());
  if (!act) {
    throw SyntaxError("layer '" + id_ + "' has unsupported activation '" +
                      v.get<std::string>() + "'");
  }
  return *act;
}

Padding LayerRecord::padding() {
  if (!has("padding")) return Padding::kValid;
  const ModelJson& v = at("padding");
  const auto pad = v.is_string() ? parse_padding(v.get<std::string>()) : std::nullopt;
  if (!pad) throw SyntaxError("layer '" + id_ + "' padding must be \"valid\" or \"same\"");
  return *pad;
}

void LayerRecord::reject_unconsumed() const {
  for (auto it = record_.begin(); it != record_.end(); ++it) {
    if (!consumed_.contains(it.key())) {
      throw SyntaxError("layer '" + id_ + "' (" + type_ + ") has unknown field '" + it.key() +
                        "'");
    }
  }
}

LayerBuilderRegistry LayerBuilderRegistry::with_builtin_layers() {
  LayerBuilderRegistry r;
  r.register_builder("dense", [](LayerRecord& rec) -> LayerKind {
    Dense d;
    d.units = rec.positive_int("units");
    d.activation = rec.activation();
    return d;
  });
  r.register_builder("conv1d", [](LayerRecord& rec) -> LayerKind {
    Conv1D c;
    c.filters = rec.positive_int("filters");
    c.kernel_size = rec.positive_int("kernel_size");
    c.stride = rec.positive_int_or("stride", 1);
    c.padding = rec.padding();
    c.activation = rec.activation();
    return c;
  });
  r.register_builder("conv2d", [](LayerRecord& rec) -> LayerKind {
    Conv2D c;
    c.filters = rec.positive_int("filters");
    c.kernel_h = rec.positive_int("kernel_h");
    c.kernel_w = rec.positive_int("kernel_w");
    c.stride_h = rec.positive_int_or("stride_h", 1);
    c.stride_w = rec.positive_int_or("stride_w", 1);
    c.padding = rec.padding();
    c.activation = rec.activation();
    return c;
  });
  r.register_builder("maxpool1d", [](LayerRecord& rec) -> LayerKind {
    MaxPool1D p;
    p.pool_size = rec.positive_int("pool_size");
    p.stride = rec.positive_int_or("stride", p.pool_size);
    return p;
  });
  r.register_builder("maxpool2d", [](LayerRecord& rec) -> LayerKind {
    MaxPool2D p;
    p.pool_h = rec.positive_int("pool_h");
    p.pool_w = rec.positive_int("pool_w");
    p.stride_h = rec.positive_int_or("stride_h", p.pool_h);
    p.stride_w = rec.positive_int_or("stride_w", p.pool_w);
    return p;
  });
  r.register_builder("flatten", [](LayerRecord&) -> LayerKind { return Flatten{}; });
  return r;
}

void LayerBuilderRegistry::register_builder(std::string type, LayerBuilder builder) {
  builders_.insert_or_assign(std::move(type), std::move(builder));
}

const LayerBuilder* LayerBuilderRegistry::find(std::string_view type) const {
  auto it = builders_.find(type);
  return it == builders_.end() ? nullptr : &it->second;
}

std::vector<std::string> LayerBuilderRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, builder] : builders_) out.push_back(name);
  return out;
}

const LayerBuilderRegistry& default_registry() {
  static const LayerBuilderRegistry registry = LayerBuilderRegistry::with_builtin_layers();
  return registry;
}

}  // namespace mcugen
