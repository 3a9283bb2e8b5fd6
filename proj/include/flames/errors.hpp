// Copyright 2026 The Authors.
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

namespace flames {

/// Malformed or structurally invalid input (parse errors, unknown vertex
/// ids, loops, mismatched edge lists). CLI exit code 2.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A semantic precondition of an operation does not hold (the given vector
/// is not a flame, there is no deficit to augment, ...). CLI exit code 1.
struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A brute-force size bound was exceeded. CLI exit code 3.
struct bound_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace flames
