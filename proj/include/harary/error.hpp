// Copyright 2026 The harary-closeness Authors
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

namespace harary {

// Raised for out-of-domain inputs: k >= n, vertex ids out of range, empty
// sweep ranges and the like. The CLI maps it to exit status 2.
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace harary
