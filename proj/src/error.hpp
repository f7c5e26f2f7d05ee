// Copyright 2026 The gradedcartan Authors
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

namespace gc {

enum class Err {
  Parse,           // malformed input text
  Version,         // unknown workspace format version
  UnboundName,     // reference to a name with no earlier binding
  DuplicateName,   // rebinding of an existing name
  TypeMismatch,    // value has the wrong kind for the operation
  Dimension,       // operands built over different dimensions
  Index,           // index outside 1..2n
  OddPower,        // square or higher power of an odd quantity
  Omega,           // omega matrix not antisymmetric/invertible
  Decode,          // polynomial is not the image of a tensor
  Calibration,     // no single constant matches the probe battery
  Solve,           // implicit tensor equation has no solution
  Io,              // file could not be read/written
  Internal,        // broken internal invariant
};

struct Error : std::runtime_error {
  Err code;
  Error(Err c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

[[noreturn]] inline void fail(Err c, const std::string& msg) { throw Error(c, msg); }

} // namespace gc
