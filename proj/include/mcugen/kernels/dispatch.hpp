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

#include <algorithm>
#include <span>
#include <variant>

#include "mcugen/kernels/geometry.hpp"
#include "mcugen/kernels/parallel.hpp"
#include "mcugen/kernels/serial.hpp"
#include "mcugen/layer.hpp"

namespace mcugen {

enum class Backend { kSerial, kParallel };

namespace kernels {

/// Runs one layer (including its activation) from `in` into `out`.
/// `kernel`/`bias` are ignored for unweighted kinds.
template <typename T>
void run_layer(const LayerKind& kind, const Shape& in_shape, std::span<const T> in,
               std::span<const T> kernel, std::span<const T> bias, std::span<T> out,
               Backend backend) {
  const bool par = backend == Backend::kParallel;
  if (auto* d = std::get_if<Dense>(&kind)) {
    const auto g = geometry(*d, in_shape);
    par ? parallel::dense<T>(g, in, kernel, bias, out) : serial::dense<T>(g, in, kernel, bias, out);
  } else if (auto* c1 = std::get_if<Conv1D>(&kind)) {
    const auto g = geometry(*c1, in_shape);
    par ? parallel::conv1d<T>(g, in, kernel, bias, out)
        : serial::conv1d<T>(g, in, kernel, bias, out);
  } else if (auto* c2 = std::get_if<Conv2D>(&kind)) {
    const auto g = geometry(*c2, in_shape);
    par ? parallel::conv2d<T>(g, in, kernel, bias, out)
        : serial::conv2d<T>(g, in, kernel, bias, out);
  } else if (auto* p1 = std::get_if<MaxPool1D>(&kind)) {
    const auto g = geometry(*p1, in_shape);
    par ? parallel::maxpool1d<T>(g, in, out) : serial::maxpool1d<T>(g, in, out);
  } else if (auto* p2 = std::get_if<MaxPool2D>(&kind)) {
    const auto g = geometry(*p2, in_shape);
    par ? parallel::maxpool2d<T>(g, in, out) : serial::maxpool2d<T>(g, in, out);
  } else {
    std::copy(in.begin(), in.end(), out.begin());  // flatten: row-major copy
  }
  const Activation act = activation_of(kind);
  par ? parallel::activate<T>(act, out) : serial::activate<T>(act, out);
}

}  // namespace kernels
}  // namespace mcugen
