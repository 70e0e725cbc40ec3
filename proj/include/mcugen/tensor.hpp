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
#include <span>
#include <string>
#include <vector>

namespace mcugen {

using Shape = std::vector<std::size_t>;

/// Number of elements described by a shape (1 for an empty shape).
std::size_t element_count(const Shape& shape) noexcept;

/// "[96, 3]"
std::string to_string(const Shape& shape);

/// Dense row-major float32 tensor.
///
/// The shape is non-empty with every dimension >= 1, and the buffer holds
/// exactly product(shape) values. Both are checked on construction.
class TensorData {
 public:
  TensorData() = default;
  TensorData(Shape shape, std::vector<float> data);

  /// Zero-filled tensor of the given shape.
  static TensorData zeros(Shape shape);

  const Shape& shape() const noexcept { return shape_; }
  std::size_t rank() const noexcept { return shape_.size(); }
  std::size_t size() const noexcept { return data_.size(); }

  std::span<const float> data() const noexcept { return data_; }
  std::span<float> mutable_data() noexcept { return data_; }
  const std::vector<float>& values() const noexcept { return data_; }

  float operator[](std::size_t i) const { return data_[i]; }

  friend bool operator==(const TensorData&, const TensorData&) = default;

 private:
  Shape shape_;
  std::vector<float> data_;
};

/// True if the two tensors have equal shapes and bit-identical buffers
/// (distinguishes -0.0 from 0.0, unlike operator==).
bool bit_identical(const TensorData& a, const TensorData& b) noexcept;

}  // namespace mcugen
