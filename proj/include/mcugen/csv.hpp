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

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mcugen {

/// One row per non-blank line, comma-separated decimal values parsed to the
/// nearest float. Throws SyntaxError naming the line on malformed input.
std::vector<std::vector<float>> parse_csv_rows(std::string_view text);

/// Shortest decimal form that round-trips each float, comma-joined.
std::string format_csv_row(std::span<const float> values);

/// As above for double values (fixed-point outputs).
std::string format_csv_row(std::span<const double> values);

}  // namespace mcugen
