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

#include <stdexcept>
#include <string>

namespace mcugen {

/// Base of every error raised by the library. The CLI maps these onto exit
/// statuses, so new error kinds must derive from one of the classes below.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Model structure and shape errors.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class CycleError : public Error {
 public:
  using Error::Error;
};

class DanglingInputError : public Error {
 public:
  using Error::Error;
};

/// Structural invariant violated (duplicate ids, multi-input layers, bad output id, ...).
class StructureError : public Error {
 public:
  using Error::Error;
};

// Model document errors.
class SyntaxError : public Error {
 public:
  using Error::Error;
};

class UnsupportedLayer : public Error {
 public:
  explicit UnsupportedLayer(std::string type)
      : Error("unsupported layer type '" + type + "'"), type_(std::move(type)) {}

  const std::string& type() const noexcept { return type_; }

 private:
  std::string type_;
};

class MissingWeights : public Error {
 public:
  using Error::Error;
};

class VersionError : public Error {
 public:
  using Error::Error;
};

// Weight sidecar errors.
class SidecarError : public Error {
 public:
  using Error::Error;
};

class MagicError : public SidecarError {
 public:
  using SidecarError::SidecarError;
};

class TruncationError : public SidecarError {
 public:
  using SidecarError::SidecarError;
};

class DuplicateKeyError : public SidecarError {
 public:
  using SidecarError::SidecarError;
};

// Code generation and footprint errors.
class IdentifierError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace mcugen
