// Copyright 2026 The framesim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace framesim {

class SizeMismatch : public std::invalid_argument {
 public:
  explicit SizeMismatch(const std::string& what)
      : std::invalid_argument(what) {}
};

class QubitOutOfRange : public std::out_of_range {
 public:
  explicit QubitOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

/// A precondition of an operation was not met by its caller.
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what)
      : std::logic_error(what) {}
};

class CapacityExceeded : public std::runtime_error {
 public:
  explicit CapacityExceeded(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace framesim
