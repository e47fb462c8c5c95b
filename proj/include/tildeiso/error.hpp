// Copyright 2026 The tildeiso Authors
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

#ifndef TILDEISO_ERROR_HPP_
#define TILDEISO_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace tildeiso {

enum class ErrorCode {
  kInvalidWord,
  kBadLength,
  kBadPosition,
  kInapplicableSwap,
  kLengthMismatch,
  kTooShort,
  kWrongArity,
  kConstructionFailure,
  kTooLarge,
  kNotInGraph,
};

std::string_view to_string(ErrorCode code);

// Every library failure is reported through this exception; `code()` carries
// the category so callers (the CLI in particular) can map it to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tildeiso

#endif  // TILDEISO_ERROR_HPP_
