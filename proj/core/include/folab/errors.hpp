/*
 * Copyright 2026 The folab Authors.
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

#ifndef FOLAB_ERRORS_HPP_
#define FOLAB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace folab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called with inputs outside its declared domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed or inconsistent run configuration. CLI exit code 1.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A query budget ceiling was exceeded; the game run aborts. Exit code 2.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// Policy violation distinct from protocol rejection: querying the
// challenge ciphertext, or a second query to a one-shot oracle.
class ForbiddenQueryError : public Error {
 public:
  using Error::Error;
};

// An adversary reached for an oracle the current game does not grant.
class OracleScopeError : public Error {
 public:
  using Error::Error;
};

}  // namespace folab

#endif  // FOLAB_ERRORS_HPP_
