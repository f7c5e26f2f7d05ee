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

#include "scalar.hpp"

#include "error.hpp"

namespace gc {

Scalar Scalar::rational(long num, long den) {
  if (den == 0) fail(Err::Parse, "division by zero");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(Err::Internal, "inverse of zero scalar");
  // 1/(a+bi) = (a-bi)/(a^2+b^2)
  mpq_class n = re_ * re_ + im_ * im_;
  return Scalar(re_ / n, -im_ / n);
}

std::string Scalar::str() const {
  std::string s = re_.get_str();
  if (im_ != 0) {
    s += (im_ > 0) ? "+" : "";
    s += im_.get_str() + "*i";
  }
  return s;
}

} // namespace gc
