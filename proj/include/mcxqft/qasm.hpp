// Copyright 2026 The mcxqft Authors
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

#include <string>

#include "mcxqft/circuit.hpp"

namespace mcxqft {

// OpenQASM 2 text. Angles are printed as exact multiples of pi; the global
// phase goes into a comment line of the header; fences become barriers.
std::string export_qasm(const Circuit& c);

}  // namespace mcxqft
