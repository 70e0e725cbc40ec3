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

#include "mcugen/layer.hpp"

namespace mcugen::kernels {

// Channels-last index geometry for each layer kind. Built from the layer
// hyperparameters and its (already validated) input shape.

struct DenseGeometry {
  std::size_t inputs;
  std::size_t units;
};

struct Conv1DGeometry {
  std::size_t length, channels;
  std::size_t kernel, filters, stride, pad_before;
  std::size_t out_length;
};

struct Conv2DGeometry {
  std::size_t height, width, channels;
  std::size_t kernel_h, kernel_w, filters;
  std::size_t stride_h, stride_w;
  std::size_t pad_top, pad_left;
  std::size_t out_h, out_w;
};

struct Pool1DGeometry {
  std::size_t length, channels;
  std::size_t pool, stride;
  std::size_t out_length;
};

struct Pool2DGeometry {
  std::size_t height, width, channels;
  std::size_t pool_h, pool_w, stride_h, stride_w;
  std::size_t out_h, out_w;
};

inline DenseGeometry geometry(const Dense& d, const Shape& in) { return {in[0], d.units}; }

inline Conv1DGeometry geometry(const Conv1D& c, const Shape& in) {
  const std::size_t pad =
      c.padding == Padding::kSame ? same_pad_before(in[0], c.kernel_size, c.stride) : 0;
  return {in[0],    in[1], c.kernel_size,
          c.filters, c.stride, pad,
          conv_out_length(in[0], c.kernel_size, c.stride, c.padding)};
}

inline Conv2DGeometry geometry(const Conv2D& c, const Shape& in) {
  const bool same = c.padding == Padding::kSame;
  return {in[0],
          in[1],
          in[2],
          c.kernel_h,
          c.kernel_w,
          c.filters,
          c.stride_h,
          c.stride_w,
          same ? same_pad_before(in[0], c.kernel_h, c.stride_h) : 0,
          same ? same_pad_before(in[1], c.kernel_w, c.stride_w) : 0,
          conv_out_length(in[0], c.kernel_h, c.stride_h, c.padding),
          conv_out_length(in[1], c.kernel_w, c.stride_w, c.padding)};
}

inline Pool1DGeometry geometry(const MaxPool1D& p, const Shape& in) {
  return {in[0], in[1], p.pool_size, p.stride,
          conv_out_length(in[0], p.pool_size, p.stride, Padding::kValid)};
}

inline Pool2DGeometry geometry(const MaxPool2D& p, const Shape& in) {
  return {in[0],      in[1],      in[2],
          p.pool_h,   p.pool_w,   p.stride_h,
          p.stride_w, conv_out_length(in[0], p.pool_h, p.stride_h, Padding::kValid),
          conv_out_length(in[1], p.pool_w, p.stride_w, Padding::kValid)};
}

}  // namespace mcugen::kernels
