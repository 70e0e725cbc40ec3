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

#include "mcugen/sidecar.hpp"

#include <bit>
#include <set>

#include "mcugen/errors.hpp"

namespace mcugen {

namespace {

constexpr std::uint8_t kMagic[4] = {'N', 'N', 'W', 'B'};

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::span<const std::uint8_t> take(std::size_t n, const char* what) {
    if (n > bytes_.size() - pos_) {
      throw TruncationError(std::string("weight sidecar truncated while reading ") + what +
                            ": need " + std::to_string(n) + " bytes at offset " +
                            std::to_string(pos_) + ", have " +
                            std::to_string(bytes_.size() - pos_));
    }
    auto out = bytes_.subspan(pos_, n);
    pos_ += n;
    return out;
  }

  template <typename U>
  U uint(const char* what) {
    auto b = take(sizeof(U), what);
    U v = 0;
    for (std::size_t i = 0; i < sizeof(U); ++i) v |= static_cast<U>(b[i]) << (8 * i);
    return v;
  }

  std::size_t remaining() const { return bytes_.size() - pos_; }
  std::size_t offset() const { return pos_; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

template <typename U>
void put(Bytes& out, U v) {
  for (std::size_t i = 0; i < sizeof(U); ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

std::vector<std::pair<std::string, TensorData>> read_sidecar_tensors(
    std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4 || !std::equal(kMagic, kMagic + 4, bytes.begin())) {
    throw MagicError("weight sidecar does not start with \"NNWB\"");
  }
  Reader r(bytes.subspan(4));
  const auto version = r.uint<std::uint16_t>("version");
  if (version != kSidecarVersion) {
    throw VersionError("unsupported weight sidecar version " + std::to_string(version));
  }
  const auto count = r.uint<std::uint32_t>("tensor count");

  std::vector<std::pair<std::string, TensorData>> out;
  std::set<std::string> seen;
  for (std::uint32_t t = 0; t < count; ++t) {
    const auto key_len = r.uint<std::uint16_t>("key length");
    auto key_bytes = r.take(key_len, "key");
    std::string key(key_bytes.begin(), key_bytes.end());
    if (key.empty()) throw SidecarError("weight sidecar entry " + std::to_string(t) + " has an empty key");
    if (!seen.insert(key).second) throw DuplicateKeyError("duplicate weight sidecar key '" + key + "'");

    const auto rank = r.uint<std::uint8_t>("rank");
    if (rank == 0) throw SidecarError("tensor '" + key + "' has rank 0");
    Shape shape;
    std::uint64_t n = 1;
    for (std::uint8_t d = 0; d < rank; ++d) {
      const auto dim = r.uint<std::uint32_t>("dimension");
      if (dim == 0) throw SidecarError("tensor '" + key + "' has a zero dimension");
      shape.push_back(dim);
      n *= dim;
      if (n > r.remaining() / 4 + 1) {
        throw TruncationError("tensor '" + key + "' declares more data than the sidecar holds");
      }
    }
    if (n * 4 > r.remaining()) {
      throw TruncationError("tensor '" + key + "' declares " + std::to_string(n * 4) +
                            " data bytes, only " + std::to_string(r.remaining()) + " remain");
    }
    std::vector<float> data(n);
    for (auto& v : data) v = std::bit_cast<float>(r.uint<std::uint32_t>("tensor data"));
    out.emplace_back(std::move(key), TensorData(std::move(shape), std::move(data)));
  }
  if (r.remaining() != 0) {
    throw SidecarError("weight sidecar has " + std::to_string(r.remaining()) +
                       " trailing bytes after " + std::to_string(count) + " tensors");
  }
  return out;
}

SidecarWeights read_weight_sidecar(std::span<const std::uint8_t> bytes) {
  SidecarWeights out;
  for (auto& [key, tensor] : read_sidecar_tensors(bytes)) {
    if (ends_with(key, ".kernel")) {
      out[key.substr(0, key.size() - 7)].kernel = std::move(tensor);
    } else if (ends_with(key, ".bias")) {
      out[key.substr(0, key.size() - 5)].bias = std::move(tensor);
    } else {
      throw SidecarError("weight sidecar key '" + key + "' must end in .kernel or .bias");
    }
  }
  return out;
}

Bytes write_sidecar_tensors(std::span<const std::pair<std::string, TensorData>> tensors) {
  Bytes out(kMagic, kMagic + 4);
  put<std::uint16_t>(out, kSidecarVersion);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(tensors.size()));
  for (const auto& [key, tensor] : tensors) {
    put<std::uint16_t>(out, static_cast<std::uint16_t>(key.size()));
    out.insert(out.end(), key.begin(), key.end());
    put<std::uint8_t>(out, static_cast<std::uint8_t>(tensor.rank()));
    for (std::size_t d : tensor.shape()) put<std::uint32_t>(out, static_cast<std::uint32_t>(d));
    for (float v : tensor.data()) put<std::uint32_t>(out, std::bit_cast<std::uint32_t>(v));
  }
  return out;
}

Bytes write_weight_sidecar(const std::map<std::string, LayerWeights>& weights) {
  std::vector<std::pair<std::string, TensorData>> entries;
  for (const auto& [key, w] : weights) {
    entries.emplace_back(key + ".kernel", w.kernel);
    entries.emplace_back(key + ".bias", w.bias);
  }
  return write_sidecar_tensors(entries);
}

}  // namespace mcugen
