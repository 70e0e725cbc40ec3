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

#include "templates.hpp"

#include <stdexcept>

namespace mcugen::templates {

std::string render(std::string_view tmpl, const Vars& vars) {
  std::string out;
  out.reserve(tmpl.size());
  std::size_t pos = 0;
  while (true) {
    const std::size_t open = tmpl.find("{{", pos);
    if (open == std::string_view::npos) {
      out.append(tmpl.substr(pos));
      return out;
    }
    const std::size_t close = tmpl.find("}}", open);
    if (close == std::string_view::npos) throw std::logic_error("unterminated placeholder");
    out.append(tmpl.substr(pos, open - pos));
    const std::string_view name = tmpl.substr(open + 2, close - open - 2);
    auto it = vars.find(name);
    if (it == vars.end()) throw std::logic_error("no value for placeholder " + std::string(name));
    out.append(it->second);
    pos = close + 2;
  }
}

const std::string_view kHeader = R"(/* Generated by mcugen from model "{{model}}". Do not edit.
 *
 * {{prefix}}_forward() keeps every intermediate result in file-scope static
 * buffers: it is not reentrant, so call it from one thread of execution at
 * a time.
 */
#ifndef {{guard}}
#define {{guard}}

#define {{PREFIX}}_INPUT_LEN {{input_len}}
#define {{PREFIX}}_OUTPUT_LEN {{output_len}}

#ifdef __cplusplus
extern "C" {
#endif

/* input: {{PREFIX}}_INPUT_LEN floats, row-major {{input_shape}}
 * output: {{PREFIX}}_OUTPUT_LEN floats, row-major {{output_shape}} */
void {{prefix}}_forward(const float *input, float *output);

#ifdef __cplusplus
}
#endif

#endif /* {{guard}} */
)";

const std::string_view kParamsHeader = R"(/* Generated by mcugen from model "{{model}}". Do not edit.
 * {{param_count}} parameters, row-major. */
#ifndef {{guard}}
#define {{guard}}
{{arrays}}
#endif /* {{guard}} */
)";

const std::string_view kParamsArray = R"(
/* layer "{{layer}}" {{role}} {{shape}} */
static const float {{symbol}}[{{count}}] = {
{{values}}
};
)";

const std::string_view kSourcePrologue = R"(/* Generated by mcugen from model "{{model}}". Do not edit. */
#include <math.h>

#include "{{prefix}}.h"
#include "{{prefix}}_params.h"

#if defined(__STDC_VERSION__) && __STDC_VERSION__ >= 199901L
#define NN_EXPF(x) expf(x)
#define NN_TANHF(x) tanhf(x)
#else
#define NN_EXPF(x) ((float)exp((double)(x)))
#define NN_TANHF(x) ((float)tanh((double)(x)))
#endif

#define NN_ACT_RELU 1
#define NN_ACT_SIGMOID 2
#define NN_ACT_TANH 3
#define NN_ACT_SOFTMAX 4
)";

const std::string_view kSourceForward = R"(
{{buffers}}
void {{prefix}}_forward(const float *input, float *output)
{
    unsigned long i;
{{body}}
    for (i = 0; i < {{PREFIX}}_OUTPUT_LEN; ++i) {
        output[i] = {{result}}[i];
    }
}
)";

const std::string_view kHelperActivate = R"(
static void nn_activate(float *v, unsigned long n, int act)
{
    unsigned long i;
    float peak, sum;
    switch (act) {
    case NN_ACT_RELU:
        for (i = 0; i < n; ++i) v[i] = v[i] > 0.0f ? v[i] : 0.0f;
        break;
    case NN_ACT_SIGMOID:
        for (i = 0; i < n; ++i) v[i] = 1.0f / (1.0f + NN_EXPF(-v[i]));
        break;
    case NN_ACT_TANH:
        for (i = 0; i < n; ++i) v[i] = NN_TANHF(v[i]);
        break;
    case NN_ACT_SOFTMAX:
        peak = v[0];
        for (i = 0; i < n; ++i) {
            if (peak < v[i]) peak = v[i];
        }
        sum = 0.0f;
        for (i = 0; i < n; ++i) {
            v[i] = NN_EXPF(v[i] - peak);
            sum += v[i];
        }
        for (i = 0; i < n; ++i) v[i] = v[i] / sum;
        break;
    default:
        break;
    }
}
)";

const std::string_view kHelperCopy = R"(
static void nn_copy(const float *x, float *y, unsigned long n)
{
    unsigned long i;
    for (i = 0; i < n; ++i) y[i] = x[i];
}
)";

const std::string_view kHelperDense = R"(
/* y[j] = sum_i x[i] * w[i][j] + b[j];  w is [inputs][units] */
static void nn_dense(const float *x, const float *w, const float *b, float *y,
                     unsigned long inputs, unsigned long units)
{
    unsigned long i, j;
    float acc;
    for (j = 0; j < units; ++j) {
        acc = 0.0f;
        for (i = 0; i < inputs; ++i) acc += x[i] * w[i * units + j];
        y[j] = acc + b[j];
    }
}
)";

const std::string_view kHelperConv1D = R"(
/* x is [length][channels], w is [kernel][channels][filters], y is [out_length][filters] */
static void nn_conv1d(const float *x, const float *w, const float *b, float *y,
                      unsigned long length, unsigned long channels, unsigned long kernel,
                      unsigned long filters, unsigned long stride, unsigned long pad,
                      unsigned long out_length)
{
    unsigned long t, f, k, c, pos, src;
    float acc;
    for (t = 0; t < out_length; ++t) {
        for (f = 0; f < filters; ++f) {
            acc = 0.0f;
            for (k = 0; k < kernel; ++k) {
                pos = t * stride + k;
                if (pos < pad || pos - pad >= length) continue;
                src = pos - pad;
                for (c = 0; c < channels; ++c) {
                    acc += x[src * channels + c] * w[(k * channels + c) * filters + f];
                }
            }
            y[t * filters + f] = acc + b[f];
        }
    }
}
)";

const std::string_view kHelperConv2D = R"(
/* x is [height][width][channels], w is [kh][kw][channels][filters] */
static void nn_conv2d(const float *x, const float *w, const float *b, float *y,
                      unsigned long height, unsigned long width, unsigned long channels,
                      unsigned long kernel_h, unsigned long kernel_w, unsigned long filters,
                      unsigned long stride_h, unsigned long stride_w,
                      unsigned long pad_top, unsigned long pad_left,
                      unsigned long out_h, unsigned long out_w)
{
    unsigned long oh, ow, f, kh, kw, c, ph, pw, ih, iw;
    float acc;
    for (oh = 0; oh < out_h; ++oh) {
        for (ow = 0; ow < out_w; ++ow) {
            for (f = 0; f < filters; ++f) {
                acc = 0.0f;
                for (kh = 0; kh < kernel_h; ++kh) {
                    ph = oh * stride_h + kh;
                    if (ph < pad_top || ph - pad_top >= height) continue;
                    ih = ph - pad_top;
                    for (kw = 0; kw < kernel_w; ++kw) {
                        pw = ow * stride_w + kw;
                        if (pw < pad_left || pw - pad_left >= width) continue;
                        iw = pw - pad_left;
                        for (c = 0; c < channels; ++c) {
                            acc += x[(ih * width + iw) * channels + c] *
                                   w[((kh * kernel_w + kw) * channels + c) * filters + f];
                        }
                    }
                }
                y[(oh * out_w + ow) * filters + f] = acc + b[f];
            }
        }
    }
}
)";

const std::string_view kHelperMaxPool1D = R"(
static void nn_maxpool1d(const float *x, float *y, unsigned long channels,
                         unsigned long pool, unsigned long stride, unsigned long out_length)
{
    unsigned long t, c, k;
    float best, v;
    for (t = 0; t < out_length; ++t) {
        for (c = 0; c < channels; ++c) {
            best = x[(t * stride) * channels + c];
            for (k = 1; k < pool; ++k) {
                v = x[(t * stride + k) * channels + c];
                if (best < v) best = v;
            }
            y[t * channels + c] = best;
        }
    }
}
)";

const std::string_view kHelperMaxPool2D = R"(
static void nn_maxpool2d(const float *x, float *y, unsigned long width,
                         unsigned long channels, unsigned long pool_h, unsigned long pool_w,
                         unsigned long stride_h, unsigned long stride_w,
                         unsigned long out_h, unsigned long out_w)
{
    unsigned long oh, ow, c, ph, pw, h0, w0;
    float best, v;
    for (oh = 0; oh < out_h; ++oh) {
        for (ow = 0; ow < out_w; ++ow) {
            for (c = 0; c < channels; ++c) {
                h0 = oh * stride_h;
                w0 = ow * stride_w;
                best = x[(h0 * width + w0) * channels + c];
                for (ph = 0; ph < pool_h; ++ph) {
                    for (pw = 0; pw < pool_w; ++pw) {
                        v = x[((h0 + ph) * width + (w0 + pw)) * channels + c];
                        if (best < v) best = v;
                    }
                }
                y[(oh * out_w + ow) * channels + c] = best;
            }
        }
    }
}
)";

const std::string_view kCallDense = R"(
    /* {{comment}} */
    nn_dense({{in}}, {{kernel}}, {{bias}}, {{out}}, {{inputs}}UL, {{units}}UL);
)";

const std::string_view kCallConv1D = R"(
    /* {{comment}} */
    nn_conv1d({{in}}, {{kernel}}, {{bias}}, {{out}},
              {{length}}UL, {{channels}}UL, {{kernel_size}}UL, {{filters}}UL,
              {{stride}}UL, {{pad}}UL, {{out_length}}UL);
)";

const std::string_view kCallConv2D = R"(
    /* {{comment}} */
    nn_conv2d({{in}}, {{kernel}}, {{bias}}, {{out}},
              {{height}}UL, {{width}}UL, {{channels}}UL,
              {{kernel_h}}UL, {{kernel_w}}UL, {{filters}}UL,
              {{stride_h}}UL, {{stride_w}}UL, {{pad_top}}UL, {{pad_left}}UL,
              {{out_h}}UL, {{out_w}}UL);
)";

const std::string_view kCallMaxPool1D = R"(
    /* {{comment}} */
    nn_maxpool1d({{in}}, {{out}}, {{channels}}UL, {{pool}}UL, {{stride}}UL, {{out_length}}UL);
)";

const std::string_view kCallMaxPool2D = R"(
    /* {{comment}} */
    nn_maxpool2d({{in}}, {{out}}, {{width}}UL, {{channels}}UL, {{pool_h}}UL, {{pool_w}}UL,
                 {{stride_h}}UL, {{stride_w}}UL, {{out_h}}UL, {{out_w}}UL);
)";

const std::string_view kCallFlatten = R"(
    /* {{comment}} */
    nn_copy({{in}}, {{out}}, {{count}}UL);
)";

const std::string_view kCallActivate = R"(    nn_activate({{out}}, {{count}}UL, {{act}});
)";

}  // namespace mcugen::templates
