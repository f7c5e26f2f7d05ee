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

#include "context.hpp"

#include "error.hpp"

namespace gc {

Matrix invert_matrix(const Matrix& m) {
  const size_t d = m.size();
  Matrix a = m;          // working copy
  Matrix inv(d, std::vector<Scalar>(d, Scalar(0)));
  for (size_t i = 0; i < d; ++i) {
    if (a[i].size() != d) fail(Err::Internal, "non-square matrix");
    inv[i][i] = Scalar(1);
  }
  for (size_t col = 0; col < d; ++col) {
    size_t piv = col;
    while (piv < d && a[piv][col].is_zero()) ++piv;
    if (piv == d) fail(Err::Omega, "omega matrix is singular");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Scalar s = a[col][col].inverse();
    for (size_t j = 0; j < d; ++j) {
      a[col][j] *= s;
      inv[col][j] *= s;
    }
    for (size_t row = 0; row < d; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      Scalar f = a[row][col];
      for (size_t j = 0; j < d; ++j) {
        a[row][j] -= f * a[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

SymplecticContext SymplecticContext::standard(unsigned n) {
  if (n == 0) fail(Err::Dimension, "dimension must be at least 1");
  const unsigned d = 2 * n;
  Matrix up(d, std::vector<Scalar>(d, Scalar(0)));
  for (unsigned i = 0; i < n; ++i) {
    up[i][n + i] = Scalar(1);
    up[n + i][i] = Scalar(-1);
  }
  Matrix low(d, std::vector<Scalar>(d, Scalar(0)));
  for (unsigned i = 0; i < n; ++i) {
    low[i][n + i] = Scalar(-1);
    low[n + i][i] = Scalar(1);
  }
  return SymplecticContext(n, std::move(up), std::move(low));
}

SymplecticContext SymplecticContext::with_omega_upper(unsigned n, Matrix up) {
  if (n == 0) fail(Err::Dimension, "dimension must be at least 1");
  const size_t d = 2 * n;
  if (up.size() != d) fail(Err::Omega, "omega must be 2n x 2n");
  for (auto& row : up)
    if (row.size() != d) fail(Err::Omega, "omega must be 2n x 2n");
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j)
      if (up[i][j] != -up[j][i]) fail(Err::Omega, "omega is not antisymmetric");
  Matrix low = invert_matrix(up);
  return SymplecticContext(n, std::move(up), std::move(low));
}

bool SymplecticContext::is_standard() const {
  SymplecticContext std_ctx = standard(n_);
  return up_ == std_ctx.up_;
}

const Scalar& SymplecticContext::omega_upper(Index a, Index b) const {
  if (a < 1 || a > two_n() || b < 1 || b > two_n())
    fail(Err::Index, "omega index out of range");
  return up_[a - 1][b - 1];
}

const Scalar& SymplecticContext::omega_lower(Index a, Index b) const {
  if (a < 1 || a > two_n() || b < 1 || b > two_n())
    fail(Err::Index, "omega index out of range");
  return low_[a - 1][b - 1];
}

SuperPoly SymplecticContext::poisson_bracket(const SuperPoly& f,
                                             const SuperPoly& g) const {
  if (f.two_n() != two_n() || g.two_n() != two_n())
    fail(Err::Dimension, "dimension mismatch in poisson_bracket");
  SuperPoly out(two_n());
  for (Index a = 1; a <= two_n(); ++a) {
    SuperPoly da = f.deriv_phi(a);
    if (da.is_zero()) continue;
    for (Index b = 1; b <= two_n(); ++b) {
      const Scalar& w = up_[a - 1][b - 1];
      if (w.is_zero()) continue;
      out += w * (da * g.deriv_phi(b));
    }
  }
  return out;
}

PolyVec SymplecticContext::hamiltonian_vector_field(const SuperPoly& H) const {
  if (H.two_n() != two_n())
    fail(Err::Dimension, "dimension mismatch in hamiltonian_vector_field");
  if (!H.phi_only())
    fail(Err::TypeMismatch, "hamiltonian must depend on phi only");
  PolyVec h(two_n(), SuperPoly(two_n()));
  for (Index a = 1; a <= two_n(); ++a) {
    SuperPoly acc(two_n());
    for (Index b = 1; b <= two_n(); ++b) {
      const Scalar& w = up_[a - 1][b - 1];
      if (w.is_zero()) continue;
      acc += w * H.deriv_phi(b);
    }
    h[a - 1] = acc;
  }
  return h;
}

} // namespace gc
