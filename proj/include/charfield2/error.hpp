// Copyright 2026 The charfield2 Authors.
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

#ifndef CHARFIELD2_ERROR_HPP_
#define CHARFIELD2_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace charfield2 {

enum class ErrorCode {
  kInvalidElement,
  kDomain,
  kUnsupportedDegree,
  kNotNormal,
  kNoKummerExtension,
  kNoExtension,
  kConstructionContradiction,
  kContextMismatch,
  kParse,
  kMissingFixture,
  kDegreeCap,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Largest base degree accepted by basis construction and the CLI.
// Read from CHARFIELD2_MAX_N, default 64.
std::size_t max_base_degree();

}  // namespace charfield2

#endif  // CHARFIELD2_ERROR_HPP_
