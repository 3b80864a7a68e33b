// Copyright 2026 The wcpower Authors
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

#ifndef WCPOWER_ERRORS_HPP
#define WCPOWER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wcpower {

/// Malformed input: bad labels, weights, rule names, flags.
class validation_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A full enumeration would exceed the configured profile cap.
class enumeration_too_large : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// File could not be read or written.
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wcpower

#endif  // WCPOWER_ERRORS_HPP
