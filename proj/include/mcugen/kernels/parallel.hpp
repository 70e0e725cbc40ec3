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

// OpenMP kernels. Work is split across output elements only, so every output
// keeps the serial accumulation order and results are bit-identical to
// kernels::serial. Small layers (the common MCU case) run on the calling
// thread; see kParallelThreshold.

#include <algorithm>
#include <cstddef>
#include <span>

#include "mcugen/kernels/geometry.hpp"
#include "mcugen/kernels/serial.hpp"

namespace mcugen::kernels::parallel {

/// Multiply-accumulate count below which a layer stays single-threaded.
inline constexpr std::size_t kParallelThreshold = 1u << 15;

template <typename T>
void dense(const DenseGeometry& g, std::span<const T> x, std::span<const T> w,
           std::span<const T> b, std::span<T> y) {
  const std::size_t units = g.units;
  const std::size_t inputs = g.inputs;
  const T* xp = x.data();
  const T* wp = w.data();
#pragma omp parallel for schedule(static) if (inputs * units >= kParallelThreshold)
  for (std::size_t j = 0; j < units; ++j) {
    T acc = 0;
    for (std::size_t i = 0; i < inputs; ++i) acc += xp[i] * wp[i * units + j];
    y[j] = acc + b[j];
  }
}

template <typename T>
void conv1d(const Conv1DGeometry& g, std::span<const T> x, std::span<const T> w,
            std::span<const T> b, std::span<T> y) {
  const std::size_t work = g.out_length * g.filters * g.kernel * g.channels;
#pragma omp parallel for collapse(2) schedule(static) if (work >= kParallelThreshold)
  for (std::size_t t = 0; t < g.out_length; ++t) {
    for (std::size_t f = 0; f < g.filters; ++f) {
      // Valid tap range [k_lo, k_hi) for this output position.
      const std::size_t start = t * g.stride;
      const std::size_t k_lo = start < g.pad_before ? g.pad_before - start : 0;
      const std::size_t k_hi = std::min(g.kernel, g.length + g.pad_before - start);
      T acc = 0;
      for (std::size_t k = k_lo; k < k_hi; ++k) {
        const T* xrow = x.data() + (start + k - g.pad_before) * g.channels;
        const T* wrow = w.data() + k * g.channels * g.filters + f;
        for (std::size_t c = 0; c < g.channels; ++c) acc += xrow[c] * wrow[c * g.filters];
      }
      y[t * g.filters + f] = acc + b[f];
    }
  }
}

template <typename T>
void conv2d(const Conv2DGeometry& g, std::span<const T> x, std::span<const T> w,
            std::span<const T> b, std::span<T> y) {
  const std::size_t work =
      g.out_h * g.out_w * g.filters * g.kernel_h * g.kernel_w * g.channels;
#pragma omp parallel for collapse(2) schedule(static) if (work >= kParallelThreshold)
  for (std::size_t oh = 0; oh < g.out_h; ++oh) {
    for (std::size_t ow = 0; ow < g.out_w; ++ow) {
      const std::size_t h0 = oh * g.stride_h;
      const std::size_t w0 = ow * g.stride_w;
      const std::size_t kh_lo = h0 < g.pad_top ? g.pad_top - h0 : 0;
      const std::size_t kh_hi = std::min(g.kernel_h, g.height + g.pad_top - h0);
      const std::size_t kw_lo = w0 < g.pad_left ? g.pad_left - w0 : 0;
      const std::size_t kw_hi = std::min(g.kernel_w, g.width + g.pad_left - w0);
      T* out = y.data() + (oh * g.out_w + ow) * g.filters;
      for (std::size_t f = 0; f < g.filters; ++f) {
        T acc = 0;
        for (std::size_t kh = kh_lo; kh < kh_hi; ++kh) {
          const std::size_t ih = h0 + kh - g.pad_top;
          for (std::size_t kw = kw_lo; kw < kw_hi; ++kw) {
            const std::size_t iw = w0 + kw - g.pad_left;
            const T* xrow = x.data() + (ih * g.width + iw) * g.channels;
            const T* wrow = w.data() + (kh * g.kernel_w + kw) * g.channels * g.filters + f;
            for (std::size_t c = 0; c < g.channels; ++c) acc += xrow[c] * wrow[c * g.filters];
          }
        }
        out[f] = acc + b[f];
      }
    }
  }
}

template <typename T>
void maxpool1d(const Pool1DGeometry& g, std::span<const T> x, std::span<T> y) {
  const std::size_t work = g.out_length * g.channels * g.pool;
#pragma omp parallel for schedule(static) if (work >= kParallelThreshold)
  for (std::size_t t = 0; t < g.out_length; ++t) {
    const T* window = x.data() + t * g.stride * g.channels;
    T* out = y.data() + t * g.channels;
    for (std::size_t c = 0; c < g.channels; ++c) out[c] = window[c];
    for (std::size_t k = 1; k < g.pool; ++k) {
      for (std::size_t c = 0; c < g.channels; ++c) {
        out[c] = std::max(out[c], window[k * g.channels + c]);
      }
    }
  }
}

template <typename T>
void maxpool2d(const Pool2DGeometry& g, std::span<const T> x, std::span<T> y) {
  const std::size_t work = g.out_h * g.out_w * g.channels * g.pool_h * g.pool_w;
#pragma omp parallel for collapse(2) schedule(static) if (work >= kParallelThreshold)
  for (std::size_t oh = 0; oh < g.out_h; ++oh) {
    for (std::size_t ow = 0; ow < g.out_w; ++ow) {
      const std::size_t h0 = oh * g.stride_h;
      const std::size_t w0 = ow * g.stride_w;
      T* out = y.data() + (oh * g.out_w + ow) * g.channels;
      for (std::size_t c = 0; c < g.channels; ++c) {
        out[c] = x[(h0 * g.width + w0) * g.channels + c];
      }
      for (std::size_t ph = 0; ph < g.pool_h; ++ph) {
        for (std::size_t pw = 0; pw < g.pool_w; ++pw) {
          const T* px = x.data() + ((h0 + ph) * g.width + (w0 + pw)) * g.channels;
          for (std::size_t c = 0; c < g.channels; ++c) out[c] = std::max(out[c], px[c]);
        }
      }
    }
  }
}

/// Element-wise activations are split across threads; softmax needs an
/// ordered reduction and always runs serially.
template <typename T>
void activate(Activation act, std::span<T> v) {
  if (act == Activation::kSoftmax || act == Activation::kLinear ||
      v.size() < kParallelThreshold) {
    serial::activate(act, v);
    return;
  }
  const std::size_t n = v.size();
  const std::size_t chunks = (n + 4095) / 4096;
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < chunks; ++i) {
    const std::size_t lo = i * 4096;
    serial::activate(act, v.subspan(lo, std::min<std::size_t>(4096, n - lo)));
  }
}

}  // namespace mcugen::kernels::parallel
