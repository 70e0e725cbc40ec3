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

namespace mcugen::templates {

using Vars = std::map<std::string, std::string, std::less<>>;

/// Replaces each `{{name}}` with vars[name]. Unknown names are a logic error.
std::string render(std::string_view tmpl, const Vars& vars);

extern const std::string_view kHeader;
extern const std::string_view kParamsHeader;
extern const std::string_view kParamsArray;
extern const std::string_view kSourcePrologue;
extern const std::string_view kSourceForward;

// Helper routine definitions, emitted once per kind that appears.
extern const std::string_view kHelperActivate;
extern const std::string_view kHelperCopy;
extern const std::string_view kHelperDense;
extern const std::string_view kHelperConv1D;
extern const std::string_view kHelperConv2D;
extern const std::string_view kHelperMaxPool1D;
extern const std::string_view kHelperMaxPool2D;

// Call sites inside the forward function.
extern const std::string_view kCallDense;
extern const std::string_view kCallConv1D;
extern const std::string_view kCallConv2D;
extern const std::string_view kCallMaxPool1D;
extern const std::string_view kCallMaxPool2D;
extern const std::string_view kCallFlatten;
extern const std::string_view kCallActivate;

}  // namespace mcugen::templates
