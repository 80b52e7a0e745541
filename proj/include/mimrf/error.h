/*
 * Copyright 2026 The MIMRF Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef MIMRF_ERROR_H_
#define MIMRF_ERROR_H_

#include <stdexcept>
#include <string>

namespace mimrf {

// Raised when a caller breaks an operation's precondition (bad dimension,
// out-of-range input, missing label class, ...).
class ContractError : public std::invalid_argument {
 public:
  explicit ContractError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when an input document cannot be turned into a valid object. The
// message names the offending position (bag / instance / field).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Unexpected numerical state inside an algorithm (e.g. a non-finite
// objective during training).
class InternalError : public std::runtime_error {
 public:
  explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mimrf

#endif  // MIMRF_ERROR_H_
