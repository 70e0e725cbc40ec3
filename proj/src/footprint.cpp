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

#include "mcugen/footprint.hpp"

#include <cctype>
#include <charconv>
#include <numeric>

#include "mcugen/errors.hpp"

namespace mcugen {

namespace {

std::uint64_t parse_digits(std::string_view s, std::string_view whole) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw DomainError("cannot parse '" + std::string(whole) + "' as a ratio");
  }
  return v;
}

}  // namespace

Ratio Ratio::make(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw DomainError("ratio denominator must be non-zero");
  const std::uint64_t g = std::gcd(num, den);
  return g == 0 ? Ratio{0, 1} : Ratio{num / g, den / g};
}

Ratio parse_ratio(std::string_view text) {
  if (text.empty()) throw DomainError("empty ratio");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return Ratio::make(parse_digits(text.substr(0, slash), text),
                       parse_digits(text.substr(slash + 1), text));
  }
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return Ratio::make(parse_digits(text, text), 1);

  const std::string_view whole = text.substr(0, dot);
  const std::string_view frac = text.substr(dot + 1);
  if ((whole.empty() && frac.empty()) || frac.size() > 18) {
    throw DomainError("cannot parse '" + std::string(text) + "' as a ratio");
  }
  std::uint64_t den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  const std::uint64_t w = whole.empty() ? 0 : parse_digits(whole, text);
  const std::uint64_t f = frac.empty() ? 0 : parse_digits(frac, text);
  if (w > (UINT64_MAX - f) / den) throw DomainError("ratio '" + std::string(text) + "' too large");
  return Ratio::make(w * den + f, den);
}

std::string to_string(const Ratio& r) {
  return r.den == 1 ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

std::uint64_t max_params(std::uint64_t flash_bits, Ratio gamma, int bits_per_param) {
  if (flash_bits == 0) throw DomainError("flash size S must be > 0 bits");
  if (gamma.den == 0 || gamma.num == 0 || gamma.num > gamma.den) {
    throw DomainError("gamma must satisfy 0 < gamma <= 1, got " + to_string(gamma));
  }
  if (bits_per_param != 8 && bits_per_param != 16 && bits_per_param != 32) {
    throw DomainError("bits per parameter must be 8, 16 or 32, got " +
                      std::to_string(bits_per_param));
  }
  using u128 = unsigned __int128;
  const u128 top = static_cast<u128>(gamma.num) * flash_bits;
  const u128 bottom = static_cast<u128>(gamma.den) * static_cast<unsigned>(bits_per_param);
  return static_cast<std::uint64_t>(top / bottom);
}

FootprintReport footprint(const NetworkGraph& graph, std::uint64_t flash_bits, Ratio gamma,
                          int bits_per_param) {
  FootprintReport r;
  r.max_params = max_params(flash_bits, gamma, bits_per_param);
  r.param_count = param_count(graph);
  r.bits_per_param = bits_per_param;
  r.flash_bits = flash_bits;
  r.gamma = gamma;
  r.weight_bytes = static_cast<std::uint64_t>(r.param_count) * bits_per_param / 8;
  for (const auto& [id, shape] : graph.shapes()) r.buffer_bytes += element_count(shape) * sizeof(float);
  r.fits = r.param_count <= r.max_params;
  return r;
}

std::string to_text(const FootprintReport& r) {
  std::string out;
  out += "parameters      " + std::to_string(r.param_count) + "\n";
  out += "bits/param      " + std::to_string(r.bits_per_param) + "\n";
  out += "flash bits S    " + std::to_string(r.flash_bits) + "\n";
  out += "gamma           " + to_string(r.gamma) + "\n";
  out += "max parameters  " + std::to_string(r.max_params) + "  (floor(gamma*S/b))\n";
  out += "weight bytes    " + std::to_string(r.weight_bytes) + "\n";
  out += "buffer bytes    " + std::to_string(r.buffer_bytes) + "\n";
  out += std::string("verdict         ") + (r.fits ? "fits" : "does not fit") + "\n";
  return out;
}

}  // namespace mcugen
