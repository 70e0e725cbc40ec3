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

// Brute-force layer oracles, written from the layer definitions without any
// of the library's geometry helpers. Padding is materialized as an explicit
// zero border and every tap is visited, in (position, tap, channel) order.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace mcugen::testing::oracle {

struct Padded1D {
  std::size_t out = 0;
  std::size_t left = 0;
};

inline Padded1D pad_plan(std::size_t length, std::size_t kernel, std::size_t stride, bool same) {
  if (!same) return {(length - kernel) / stride + 1, 0};
  const std::size_t out = (length + stride - 1) / stride;
  const std::size_t needed = (out - 1) * stride + kernel;
  const std::size_t total = needed > length ? needed - length : 0;
  return {out, total / 2};
}

/// x: [L, C], w: [K, C, F], b: [F] -> [out, F].
inline std::vector<float> conv1d(const std::vector<float>& x, std::size_t length,
                                 std::size_t channels, const std::vector<float>& w,
                                 const std::vector<float>& b, std::size_t kernel,
                                 std::size_t filters, std::size_t stride, bool same) {
  const Padded1D p = pad_plan(length, kernel, stride, same);
  const std::size_t padded_len = std::max(length + 2 * p.left + kernel, length);
  std::vector<float> padded(padded_len * channels, 0.0f);
  for (std::size_t i = 0; i < length; ++i)
    for (std::size_t c = 0; c < channels; ++c)
      padded[(i + p.left) * channels + c] = x[i * channels + c];
  std::vector<bool> real(padded_len, false);
  for (std::size_t i = 0; i < length; ++i) real[i + p.left] = true;

  std::vector<float> y(p.out * filters);
  for (std::size_t t = 0; t < p.out; ++t) {
    for (std::size_t f = 0; f < filters; ++f) {
      float acc = 0.0f;
      for (std::size_t k = 0; k < kernel; ++k) {
        const std::size_t at = t * stride + k;
        if (!real[at]) continue;
        for (std::size_t c = 0; c < channels; ++c)
          acc += padded[at * channels + c] * w[(k * channels + c) * filters + f];
      }
      y[t * filters + f] = acc + b[f];
    }
  }
  return y;
}

/// x: [H, W, C], w: [KH, KW, C, F], b: [F] -> [OH, OW, F].
inline std::vector<float> conv2d(const std::vector<float>& x, std::size_t height,
                                 std::size_t width, std::size_t channels,
                                 const std::vector<float>& w, const std::vector<float>& b,
                                 std::size_t kh, std::size_t kw, std::size_t filters,
                                 std::size_t sh, std::size_t sw, bool same) {
  const Padded1D ph = pad_plan(height, kh, sh, same);
  const Padded1D pw = pad_plan(width, kw, sw, same);
  const std::size_t H = height + 2 * ph.left + kh;
  const std::size_t W = width + 2 * pw.left + kw;
  std::vector<float> padded(H * W * channels, 0.0f);
  std::vector<bool> real(H * W, false);
  for (std::size_t i = 0; i < height; ++i)
    for (std::size_t j = 0; j < width; ++j) {
      real[(i + ph.left) * W + (j + pw.left)] = true;
      for (std::size_t c = 0; c < channels; ++c)
        padded[((i + ph.left) * W + (j + pw.left)) * channels + c] =
            x[(i * width + j) * channels + c];
    }

  std::vector<float> y(ph.out * pw.out * filters);
  for (std::size_t oh = 0; oh < ph.out; ++oh)
    for (std::size_t ow = 0; ow < pw.out; ++ow)
      for (std::size_t f = 0; f < filters; ++f) {
        float acc = 0.0f;
        for (std::size_t a = 0; a < kh; ++a)
          for (std::size_t bb = 0; bb < kw; ++bb) {
            const std::size_t cell = (oh * sh + a) * W + (ow * sw + bb);
            if (!real[cell]) continue;
            for (std::size_t c = 0; c < channels; ++c)
              acc += padded[cell * channels + c] * w[((a * kw + bb) * channels + c) * filters + f];
          }
        y[(oh * pw.out + ow) * filters + f] = acc + b[f];
      }
  return y;
}

/// Window maximum, windows never extend past the input.
inline std::vector<float> maxpool1d(const std::vector<float>& x, std::size_t length,
                                    std::size_t channels, std::size_t pool, std::size_t stride) {
  const std::size_t out = (length - pool) / stride + 1;
  std::vector<float> y(out * channels);
  for (std::size_t t = 0; t < out; ++t)
    for (std::size_t c = 0; c < channels; ++c) {
      std::vector<float> window;
      for (std::size_t k = 0; k < pool; ++k) window.push_back(x[(t * stride + k) * channels + c]);
      y[t * channels + c] = *std::max_element(window.begin(), window.end());
    }
  return y;
}

inline std::vector<float> maxpool2d(const std::vector<float>& x, std::size_t height,
                                    std::size_t width, std::size_t channels, std::size_t ph,
                                    std::size_t pw, std::size_t sh, std::size_t sw) {
  const std::size_t oh_n = (height - ph) / sh + 1;
  const std::size_t ow_n = (width - pw) / sw + 1;
  std::vector<float> y(oh_n * ow_n * channels);
  for (std::size_t oh = 0; oh < oh_n; ++oh)
    for (std::size_t ow = 0; ow < ow_n; ++ow)
      for (std::size_t c = 0; c < channels; ++c) {
        std::vector<float> window;
        for (std::size_t a = 0; a < ph; ++a)
          for (std::size_t bb = 0; bb < pw; ++bb)
            window.push_back(x[((oh * sh + a) * width + (ow * sw + bb)) * channels + c]);
        y[(oh * ow_n + ow) * channels + c] = *std::max_element(window.begin(), window.end());
      }
  return y;
}

/// Softmax in double precision, as a reference for the float kernels.
inline std::vector<double> softmax(const std::vector<float>& z) {
  double peak = z[0];
  for (float v : z) peak = std::max(peak, static_cast<double>(v));
  std::vector<double> out(z.size());
  double sum = 0;
  for (std::size_t i = 0; i < z.size(); ++i) sum += out[i] = std::exp(z[i] - peak);
  for (double& v : out) v /= sum;
  return out;
}

}  // namespace mcugen::testing::oracle
