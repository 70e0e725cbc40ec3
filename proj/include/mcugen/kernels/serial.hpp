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

// Serial reference kernels.
//
// These fix the accumulation contract that the OpenMP kernels and the
// generated C code replicate: for each output element the accumulator starts
// at zero, sums products in (position, kernel tap, channel) order, and the
// bias is added last. Padded taps are skipped.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>

#include "mcugen/kernels/geometry.hpp"
#include "mcugen/layer.hpp"

namespace mcugen::kernels::serial {

template <typename T>
void dense(const DenseGeometry& g, std::span<const T> x, std::span<const T> w,
           std::span<const T> b, std::span<T> y) {
  for (std::size_t j = 0; j < g.units; ++j) {
    T acc = 0;
    for (std::size_t i = 0; i < g.inputs; ++i) acc += x[i] * w[i * g.units + j];
    y[j] = acc + b[j];
  }
}

template <typename T>
void conv1d(const Conv1DGeometry& g, std::span<const T> x, std::span<const T> w,
            std::span<const T> b, std::span<T> y) {
  for (std::size_t t = 0; t < g.out_length; ++t) {
    for (std::size_t f = 0; f < g.filters; ++f) {
      T acc = 0;
      for (std::size_t k = 0; k < g.kernel; ++k) {
        const std::size_t pos = t * g.stride + k;
        if (pos < g.pad_before || pos - g.pad_before >= g.length) continue;
        const std::size_t src = pos - g.pad_before;
        for (std::size_t c = 0; c < g.channels; ++c) {
          acc += x[src * g.channels + c] * w[(k * g.channels + c) * g.filters + f];
        }
      }
      y[t * g.filters + f] = acc + b[f];
    }
  }
}

template <typename T>
void conv2d(const Conv2DGeometry& g, std::span<const T> x, std::span<const T> w,
            std::span<const T> b, std::span<T> y) {
  for (std::size_t oh = 0; oh < g.out_h; ++oh) {
    for (std::size_t ow = 0; ow < g.out_w; ++ow) {
      for (std::size_t f = 0; f < g.filters; ++f) {
        T acc = 0;
        for (std::size_t kh = 0; kh < g.kernel_h; ++kh) {
          const std::size_t ph = oh * g.stride_h + kh;
          if (ph < g.pad_top || ph - g.pad_top >= g.height) continue;
          const std::size_t ih = ph - g.pad_top;
          for (std::size_t kw = 0; kw < g.kernel_w; ++kw) {
            const std::size_t pw = ow * g.stride_w + kw;
            if (pw < g.pad_left || pw - g.pad_left >= g.width) continue;
            const std::size_t iw = pw - g.pad_left;
            for (std::size_t c = 0; c < g.channels; ++c) {
              acc += x[(ih * g.width + iw) * g.channels + c] *
                     w[((kh * g.kernel_w + kw) * g.channels + c) * g.filters + f];
            }
          }
        }
        y[(oh * g.out_w + ow) * g.filters + f] = acc + b[f];
      }
    }
  }
}

template <typename T>
void maxpool1d(const Pool1DGeometry& g, std::span<const T> x, std::span<T> y) {
  for (std::size_t t = 0; t < g.out_length; ++t) {
    for (std::size_t c = 0; c < g.channels; ++c) {
      T best = x[(t * g.stride) * g.channels + c];
      for (std::size_t k = 1; k < g.pool; ++k) {
        best = std::max(best, x[(t * g.stride + k) * g.channels + c]);
      }
      y[t * g.channels + c] = best;
    }
  }
}

template <typename T>
void maxpool2d(const Pool2DGeometry& g, std::span<const T> x, std::span<T> y) {
  for (std::size_t oh = 0; oh < g.out_h; ++oh) {
    for (std::size_t ow = 0; ow < g.out_w; ++ow) {
      for (std::size_t c = 0; c < g.channels; ++c) {
        const std::size_t h0 = oh * g.stride_h;
        const std::size_t w0 = ow * g.stride_w;
        T best = x[(h0 * g.width + w0) * g.channels + c];
        for (std::size_t ph = 0; ph < g.pool_h; ++ph) {
          for (std::size_t pw = 0; pw < g.pool_w; ++pw) {
            best = std::max(best, x[((h0 + ph) * g.width + (w0 + pw)) * g.channels + c]);
          }
        }
        y[(oh * g.out_w + ow) * g.channels + c] = best;
      }
    }
  }
}

/// In-place activation. Softmax treats the whole span as one vector.
template <typename T>
void activate(Activation act, std::span<T> v) {
  switch (act) {
    case Activation::kLinear:
      return;
    case Activation::kRelu:
      for (T& e : v) e = e > T(0) ? e : T(0);
      return;
    case Activation::kSigmoid:
      for (T& e : v) e = T(1) / (T(1) + std::exp(-e));
      return;
    case Activation::kTanh:
      for (T& e : v) e = std::tanh(e);
      return;
    case Activation::kSoftmax: {
      if (v.empty()) return;
      T peak = v[0];
      for (T e : v) peak = std::max(peak, e);
      T sum = 0;
      for (T& e : v) {
        e = std::exp(e - peak);
        sum += e;
      }
      for (T& e : v) e = e / sum;
      return;
    }
  }
}

}  // namespace mcugen::kernels::serial
