// Copyright 2026 The Geosect Authors
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

#ifndef GEOSECT_ERRORS_HPP_
#define GEOSECT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace geosect {

// Invalid configuration or out-of-domain argument.  Mapped to status/exit
// code 2 at the C boundary.
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure (non-convergence, loss of accuracy).  Mapped to
// status/exit code 3 at the C boundary.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace geosect

#endif  // GEOSECT_ERRORS_HPP_
