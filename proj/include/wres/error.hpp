// Copyright 2026 The wres Authors
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

#ifndef WRES_ERROR_HPP_
#define WRES_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace wres {

// A precondition or structural invariant of an operation was violated.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A requested symbol order or Taylor coefficient is not available from the
// truncated input data.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t position)
      : std::runtime_error(message + " (at column " +
                           std::to_string(position + 1) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Invalid run configuration or golden file.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wres

#endif  // WRES_ERROR_HPP_
