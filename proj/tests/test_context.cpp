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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "context.hpp"
#include "error.hpp"
#include "randgen.hpp"

using namespace gc;

namespace {

Scalar dot_row_col(const SymplecticContext& ctx, Index a, Index c) {
  Scalar s(0);
  for (Index b = 1; b <= 2 * ctx.n(); ++b)
    s += ctx.omega_upper(a, b) * ctx.omega_lower(b, c);
  return s;
}

} // namespace

TEST_CASE("standard omega entries") {
  SymplecticContext ctx = SymplecticContext::standard(1);
  CHECK(ctx.omega_upper(1, 2) == Scalar(1));
  CHECK(ctx.omega_upper(2, 1) == Scalar(-1));
  CHECK(ctx.omega_upper(1, 1).is_zero());
  CHECK(ctx.omega_lower(1, 2) == Scalar(-1));
  CHECK(ctx.omega_lower(2, 1) == Scalar(1));
  CHECK(ctx.is_standard());

  SymplecticContext ctx2 = SymplecticContext::standard(2);
  CHECK(ctx2.omega_upper(1, 3) == Scalar(1));
  CHECK(ctx2.omega_upper(2, 4) == Scalar(1));
  CHECK(ctx2.omega_upper(3, 1) == Scalar(-1));
  CHECK(ctx2.omega_upper(1, 2).is_zero());
  CHECK(ctx2.omega_lower(1, 3) == Scalar(-1));
}

TEST_CASE("omega upper and lower are exact inverses") {
  for (unsigned n = 1; n <= 3; ++n) {
    SymplecticContext ctx = SymplecticContext::standard(n);
    for (Index a = 1; a <= 2 * n; ++a)
      for (Index c = 1; c <= 2 * n; ++c)
        CHECK(dot_row_col(ctx, a, c) == (a == c ? Scalar(1) : Scalar(0)));
  }
}

TEST_CASE("custom omega accepted and inverted") {
  // ((0, 2), (-2, 0)): inverse is ((0, -1/2), (1/2, 0))
  Matrix up = {{Scalar(0), Scalar(2)}, {Scalar(-2), Scalar(0)}};
  SymplecticContext ctx = SymplecticContext::with_omega_upper(1, up);
  CHECK(ctx.omega_lower(1, 2) == Scalar::rational(-1, 2));
  CHECK(ctx.omega_lower(2, 1) == Scalar::rational(1, 2));
  CHECK(!ctx.is_standard());
  for (Index a = 1; a <= 2; ++a)
    for (Index c = 1; c <= 2; ++c)
      CHECK(dot_row_col(ctx, a, c) == (a == c ? Scalar(1) : Scalar(0)));
}

TEST_CASE("bad omega rejected") {
  Matrix not_anti = {{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}};
  CHECK_THROWS_AS(SymplecticContext::with_omega_upper(1, not_anti), Error);
  Matrix singular = {{Scalar(0), Scalar(0)}, {Scalar(0), Scalar(0)}};
  CHECK_THROWS_AS(SymplecticContext::with_omega_upper(1, singular), Error);
  Matrix wrong_shape = {{Scalar(0)}};
  CHECK_THROWS_AS(SymplecticContext::with_omega_upper(1, wrong_shape), Error);
  Matrix nonzero_diag = {{Scalar(1), Scalar(1)}, {Scalar(-1), Scalar(0)}};
  CHECK_THROWS_AS(SymplecticContext::with_omega_upper(1, nonzero_diag), Error);
}

TEST_CASE("poisson bracket basics") {
  SymplecticContext ctx = SymplecticContext::standard(1);
  SuperPoly p1 = SuperPoly::phi(2, 1);
  SuperPoly p2 = SuperPoly::phi(2, 2);
  CHECK(ctx.poisson_bracket(p1, p2) == SuperPoly::constant(2, Scalar(1)));
  CHECK(ctx.poisson_bracket(p2, p1) == SuperPoly::constant(2, Scalar(-1)));
  CHECK(ctx.poisson_bracket(p1, p1).is_zero());

  // harmonic oscillator: H = 1/2 ((phi1)^2 + (phi2)^2)
  SuperPoly h = (p1 * p1 + p2 * p2) * Scalar::rational(1, 2);
  CHECK(ctx.poisson_bracket(p1, h) == p2);
  CHECK(ctx.poisson_bracket(p2, h) == SuperPoly::zero(2) - p1);
}

TEST_CASE("hamiltonian vector field components") {
  SymplecticContext ctx = SymplecticContext::standard(1);
  SuperPoly p1 = SuperPoly::phi(2, 1);
  SuperPoly p2 = SuperPoly::phi(2, 2);

  SuperPoly h = (p1 * p1 + p2 * p2) * Scalar::rational(1, 2);
  PolyVec v = ctx.hamiltonian_vector_field(h);
  CHECK(v[0] == p2);
  CHECK(v[1] == SuperPoly::zero(2) - p1);

  PolyVec w = ctx.hamiltonian_vector_field(p1 * p2);
  CHECK(w[0] == p1);
  CHECK(w[1] == SuperPoly::zero(2) - p2);

  // h^a d_a H = {H, H} = 0
  SuperPoly s(2);
  for (Index a = 1; a <= 2; ++a) s += v[a - 1] * h.deriv_phi(a);
  CHECK(s.is_zero());

  CHECK_THROWS_AS(ctx.hamiltonian_vector_field(SuperPoly::lam(2, 1)), Error);
}

TEST_CASE("poisson bracket axioms on random inputs") {
  Rng rng(2026);
  for (unsigned n = 1; n <= 2; ++n) {
    SymplecticContext ctx = SymplecticContext::standard(n);
    unsigned two_n = 2 * n;
    for (int trial = 0; trial < 25; ++trial) {
      SuperPoly f = random_phi_poly(rng, two_n, 3, 2);
      SuperPoly g = random_phi_poly(rng, two_n, 3, 2);
      SuperPoly h = random_phi_poly(rng, two_n, 3, 2);

      CHECK(ctx.poisson_bracket(f, g) + ctx.poisson_bracket(g, f) == SuperPoly::zero(two_n));
      CHECK(ctx.poisson_bracket(f, g * h) ==
            ctx.poisson_bracket(f, g) * h + g * ctx.poisson_bracket(f, h));
      SuperPoly jac = ctx.poisson_bracket(f, ctx.poisson_bracket(g, h)) +
                      ctx.poisson_bracket(g, ctx.poisson_bracket(h, f)) +
                      ctx.poisson_bracket(h, ctx.poisson_bracket(f, g));
      CHECK(jac.is_zero());

      // bracket against coordinates reproduces the hamiltonian field
      PolyVec v = ctx.hamiltonian_vector_field(f);
      for (Index a = 1; a <= two_n; ++a)
        CHECK(ctx.poisson_bracket(SuperPoly::phi(two_n, a), f) == v[a - 1]);
    }
  }
}

TEST_CASE("poisson bracket respects custom omega") {
  Matrix up = {{Scalar(0), Scalar(2)}, {Scalar(-2), Scalar(0)}};
  SymplecticContext ctx = SymplecticContext::with_omega_upper(1, up);
  SuperPoly p1 = SuperPoly::phi(2, 1);
  SuperPoly p2 = SuperPoly::phi(2, 2);
  CHECK(ctx.poisson_bracket(p1, p2) == SuperPoly::constant(2, Scalar(2)));
  PolyVec v = ctx.hamiltonian_vector_field(p2);
  CHECK(v[0] == SuperPoly::constant(2, Scalar(2)));
  CHECK(v[1].is_zero());
}
