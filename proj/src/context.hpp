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

#include <vector>

#include "superpoly.hpp"

namespace gc {

using Matrix = std::vector<std::vector<Scalar>>;  // dense 2n x 2n

// Phase-space setup: dimension n (indices 1..2n), constant antisymmetric
// invertible omega with exact rational entries.  omega_upper is the bivector
// matrix entering h^a = omega^{ab} d_b H; omega_lower is its exact inverse
// with the index convention omega^{ab} omega_{bc} = delta^a_c.
class SymplecticContext {
 public:
  // Block form [[0, I], [-I, 0]] for omega^{ab}.
  static SymplecticContext standard(unsigned n);
  // Validates antisymmetry and invertibility; throws Err::Omega otherwise.
  static SymplecticContext with_omega_upper(unsigned n, Matrix omega_upper);

  unsigned n() const { return n_; }
  unsigned two_n() const { return 2 * n_; }
  bool is_standard() const;

  const Scalar& omega_upper(Index a, Index b) const;  // omega^{ab}
  const Scalar& omega_lower(Index a, Index b) const;  // omega_{ab}
  const Matrix& omega_upper_matrix() const { return up_; }

  // d_a f omega^{ab} d_b g, derivatives in phi.
  SuperPoly poisson_bracket(const SuperPoly& f, const SuperPoly& g) const;

  // h^a = omega^{ab} d_b H; H must be phi-only.
  PolyVec hamiltonian_vector_field(const SuperPoly& H) const;

 private:
  SymplecticContext(unsigned n, Matrix up, Matrix low)
      : n_(n), up_(std::move(up)), low_(std::move(low)) {}
  unsigned n_;
  Matrix up_, low_;
};

// Exact Gauss-Jordan inverse; throws Err::Omega when singular.
Matrix invert_matrix(const Matrix& m);

} // namespace gc
