// Copyright 2026 The nonint Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NONINT_ERRORS_HPP
#define NONINT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace nonint {

/// Malformed textual input. `token()` names the offending piece.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::string token, const std::string& what)
      : std::invalid_argument(what), token_(std::move(token)) {}

  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

/// Input lies outside the family the analysis covers (e.g. C = 0).
class OutOfScopeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An invariant of the exact algebra was violated (e.g. a d*d product).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Series work would need more steps than the configured cap.
class TruncationCapExceeded : public std::runtime_error {
 public:
  TruncationCapExceeded(int needed, int cap)
      : std::runtime_error("truncation cap exceeded: need " + std::to_string(needed) +
                           " steps, cap is " + std::to_string(cap)),
        needed_(needed),
        cap_(cap) {}

  int needed() const noexcept { return needed_; }
  int cap() const noexcept { return cap_; }

 private:
  int needed_;
  int cap_;
};

}  // namespace nonint

#endif  // NONINT_ERRORS_HPP
