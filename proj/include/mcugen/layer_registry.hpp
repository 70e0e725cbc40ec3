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
#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "mcugen/layer.hpp"

namespace mcugen {

/// JSON value type used for model documents. Floats are 32-bit so decimal
/// literals are rounded straight to the nearest float and dumped in their
/// shortest round-trip form.
using ModelJson = nlohmann::basic_json<std::map, std::vector, std::string, bool, std::int64_t,
                                       std::uint64_t, float>;

/// Read access to one raw layer record. Every field a builder reads is
/// marked as consumed; fields nobody consumed are rejected afterwards.
class LayerRecord {
 public:
  explicit LayerRecord(const ModelJson& record);

  const std::string& id() const noexcept { return id_; }
  const std::string& type() const noexcept { return type_; }

  bool has(std::string_view key) const;

  std::size_t positive_int(std::string_view key);
  std::size_t positive_int_or(std::string_view key, std::size_t fallback);
  /// "activation" field; linear when absent. Only the five supported names pass.
  Activation activation();
  /// "padding" field; valid when absent.
  Padding padding();

  /// Marks a field as consumed without interpreting it.
  void consume(std::string_view key);

  /// Throws SyntaxError naming the first field no one consumed.
  void reject_unconsumed() const;

 private:
  const ModelJson& at(std::string_view key);

  const ModelJson& record_;
  std::string id_;
  std::string type_;
  std::set<std::string, std::less<>> consumed_;
};

using LayerBuilder = std::function<LayerKind(LayerRecord&)>;

/// Layer-type name -> builder. Extend by registering additional names.
class LayerBuilderRegistry {
 public:
  /// The six built-in kinds: dense, conv1d, conv2d, maxpool1d, maxpool2d, flatten.
  static LayerBuilderRegistry with_builtin_layers();

  /// Adds or replaces the builder for `type`.
  void register_builder(std::string type, LayerBuilder builder);

  /// nullptr when the type is unknown.
  const LayerBuilder* find(std::string_view type) const;

  std::vector<std::string> names() const;

 private:
  std::map<std::string, LayerBuilder, std::less<>> builders_;
};

/// Shared registry with the built-in kinds.
const LayerBuilderRegistry& default_registry();

}  // namespace mcugen
