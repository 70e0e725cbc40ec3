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

#include <map>
#include <string>
#include <string_view>

#include "mcugen/graph.hpp"

namespace mcugen {

struct CodegenOptions {
  /// C identifier prefixing every emitted symbol and file name. Empty means
  /// the sanitized graph name.
  std::string prefix;
  /// Significant digits of emitted float literals (1..9; 9 round-trips).
  int float_literal_digits = 9;
};

/// Emitted C sources: `<prefix>_params.h`, `<prefix>.h`, `<prefix>.c`.
struct SourceBundle {
  std::map<std::string, std::string> files;
  std::string entry_symbol;  // `<prefix>_forward`
};

/// Graph name mapped onto a C identifier. Throws IdentifierError if nothing
/// usable remains.
std::string sanitize_identifier(std::string_view name);

bool is_valid_identifier(std::string_view name) noexcept;

/// Emits portable C (C89 with C99 float math when available) implementing
/// forward() with weights as static const arrays and one static buffer per
/// layer. The result depends only on (graph, options).
SourceBundle generate_code(const NetworkGraph& graph, const CodegenOptions& options = {});

/// Formats `value` as a C float literal with `digits` significant digits.
std::string format_float_literal(float value, int digits = 9);

}  // namespace mcugen
