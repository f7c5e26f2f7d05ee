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

#include "error.hpp"
#include "oracle.hpp"
#include "randgen.hpp"

using namespace gc;

namespace {

DifferentialForm scale_form(const Scalar& s, const DifferentialForm& f) {
  DifferentialForm out{f.two_n, f.degree, {}};
  for (const auto& [t, p] : f.comps) form_insert(out, t, p * s);
  return out;
}

VectorValuedForm identity_vv(unsigned two_n) {
  VectorValuedForm id{two_n, 1, {}};
  for (Index i = 1; i <= two_n; ++i)
    vv_insert(id, i, {i}, SuperPoly::constant(two_n, Scalar(1)));
  return id;
}

bool is_zero_form(const DifferentialForm& f) { return f.comps.empty(); }
bool is_zero_mv(const Multivector& v) { return v.comps.empty(); }
bool is_zero_vv(const VectorValuedForm& k) { return k.comps.empty(); }

SuperPoly apply_field(const PolyVec& v, const SuperPoly& f) {
  unsigned two_n = static_cast<unsigned>(v.size());
  SuperPoly out(two_n);
  for (Index a = 1; a <= two_n; ++a) out += v[a - 1] * f.deriv_phi(a);
  return out;
}

} // namespace

TEST_CASE("tuple sorting and enumeration") {
  IndexTuple t = {2, 1};
  CHECK(sort_tuple(t) == -1);
  CHECK(t == IndexTuple{1, 2});

  IndexTuple u = {3, 1, 2};
  CHECK(sort_tuple(u) == 1);
  CHECK(u == IndexTuple{1, 2, 3});

  IndexTuple dup = {1, 1};
  CHECK(sort_tuple(dup) == 0);

  CHECK(ascending_tuples(2, 0) == std::vector<IndexTuple>{{}});
  CHECK(ascending_tuples(2, 2) == std::vector<IndexTuple>{{1, 2}});
  CHECK(ascending_tuples(4, 2).size() == 6);
  CHECK(ascending_tuples(2, 3).empty());
}

TEST_CASE("signed insertion and wedge") {
  SuperPoly one = SuperPoly::constant(2, Scalar(1));
  DifferentialForm a{2, 2, {}};
  form_insert(a, {2, 1}, one);
  CHECK(form_at(a, {1, 2}) == SuperPoly::constant(2, Scalar(-1)));
  CHECK(form_at(a, {2, 1}) == one);

  DifferentialForm d1{2, 1, {}};
  form_insert(d1, {1}, one);
  DifferentialForm d2{2, 1, {}};
  form_insert(d2, {2}, one);
  DifferentialForm w = wedge(d1, d2);
  CHECK(w.degree == 2);
  CHECK(form_at(w, {1, 2}) == one);
  CHECK(form_equal(wedge(d2, d1), scale_form(Scalar(-1), w)));
  CHECK(is_zero_form(wedge(d1, d1)));

  Rng rng(11);
  for (int trial = 0; trial < 15; ++trial) {
    unsigned two_n = 4;
    unsigned p = rng.below(3), q = rng.below(3);
    DifferentialForm x = random_form(rng, two_n, p, 2, 2);
    DifferentialForm y = random_form(rng, two_n, q, 2, 2);
    Scalar sign = (p * q) % 2 ? Scalar(-1) : Scalar(1);
    CHECK(form_equal(wedge(x, y), scale_form(sign, wedge(y, x))));
    DifferentialForm z = random_form(rng, two_n, 1, 2, 2);
    CHECK(form_equal(wedge(wedge(x, y), z), wedge(x, wedge(y, z))));
  }
}

TEST_CASE("exterior derivative") {
  SuperPoly p1 = SuperPoly::phi(2, 1);
  SuperPoly p2 = SuperPoly::phi(2, 2);
  DifferentialForm f{2, 0, {}};
  form_insert(f, {}, p1 * p2);
  DifferentialForm df = oracle_d(f);
  CHECK(df.degree == 1);
  CHECK(form_at(df, {1}) == p2);
  CHECK(form_at(df, {2}) == p1);

  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    unsigned two_n = (trial % 2) ? 2 : 4;
    unsigned deg = rng.below(3);
    DifferentialForm x = random_form(rng, two_n, deg, 3, 2);
    CHECK(is_zero_form(oracle_d(oracle_d(x))));
    // graded product rule
    DifferentialForm y = random_form(rng, two_n, rng.below(2), 2, 2);
    Scalar sign = x.degree % 2 ? Scalar(-1) : Scalar(1);
    CHECK(form_equal(oracle_d(wedge(x, y)),
                     form_add(wedge(oracle_d(x), y),
                              scale_form(sign, wedge(x, oracle_d(y))))));
  }
}

TEST_CASE("interior product") {
  SuperPoly one = SuperPoly::constant(2, Scalar(1));
  DifferentialForm w{2, 2, {}};
  form_insert(w, {1, 2}, one);

  PolyVec e1(2, SuperPoly(2)), e2(2, SuperPoly(2));
  e1[0] = one;
  e2[1] = one;
  DifferentialForm i1 = oracle_interior(e1, w);
  CHECK(i1.degree == 1);
  CHECK(form_at(i1, {2}) == one);
  CHECK(form_at(i1, {1}).is_zero());
  DifferentialForm i2 = oracle_interior(e2, w);
  CHECK(form_at(i2, {1}) == SuperPoly::constant(2, Scalar(-1)));

  DifferentialForm f0{2, 0, {}};
  form_insert(f0, {}, SuperPoly::phi(2, 1));
  CHECK(is_zero_form(oracle_interior(e1, f0)));

  Rng rng(13);
  for (int trial = 0; trial < 15; ++trial) {
    unsigned two_n = 4;
    PolyVec v = random_vector_field(rng, two_n, 2);
    DifferentialForm x = random_form(rng, two_n, 1 + rng.below(2), 2, 2);
    DifferentialForm y = random_form(rng, two_n, rng.below(2), 2, 2);
    Scalar sign = x.degree % 2 ? Scalar(-1) : Scalar(1);
    CHECK(form_equal(oracle_interior(v, wedge(x, y)),
                     form_add(wedge(oracle_interior(v, x), y),
                              scale_form(sign, wedge(x, oracle_interior(v, y))))));
    // nilpotency of contraction with a fixed field
    CHECK(is_zero_form(oracle_interior(v, oracle_interior(v, x))));
  }
}

TEST_CASE("lie derivative on forms") {
  Rng rng(14);
  for (int trial = 0; trial < 15; ++trial) {
    unsigned two_n = (trial % 2) ? 2 : 4;
    PolyVec v = random_vector_field(rng, two_n, 2);
    DifferentialForm x = random_form(rng, two_n, rng.below(3), 2, 2);
    DifferentialForm y = random_form(rng, two_n, rng.below(2), 2, 2);

    CHECK(form_equal(oracle_lie(v, oracle_d(x)), oracle_d(oracle_lie(v, x))));
    CHECK(form_equal(oracle_lie(v, wedge(x, y)),
                     form_add(wedge(oracle_lie(v, x), y), wedge(x, oracle_lie(v, y)))));

    // on functions: directional derivative
    SuperPoly f = random_phi_poly(rng, two_n, 3, 2);
    DifferentialForm f0{two_n, 0, {}};
    form_insert(f0, {}, f);
    CHECK(form_at(oracle_lie(v, f0), {}) == apply_field(v, f));
  }
}

TEST_CASE("lie bracket of vector fields") {
  SuperPoly one = SuperPoly::constant(2, Scalar(1));
  PolyVec v(2, SuperPoly(2)), w(2, SuperPoly(2));
  v[0] = SuperPoly::phi(2, 1);
  w[0] = one;
  PolyVec b = oracle_lie_bracket(v, w);
  CHECK(b[0] == SuperPoly::constant(2, Scalar(-1)));
  CHECK(b[1].is_zero());

  Rng rng(15);
  for (int trial = 0; trial < 15; ++trial) {
    unsigned two_n = (trial % 2) ? 2 : 4;
    PolyVec x = random_vector_field(rng, two_n, 2);
    PolyVec y = random_vector_field(rng, two_n, 2);
    SuperPoly f = random_phi_poly(rng, two_n, 3, 2);
    // defining property as a commutator of derivations
    CHECK(apply_field(oracle_lie_bracket(x, y), f) ==
          apply_field(x, apply_field(y, f)) - apply_field(y, apply_field(x, f)));
  }
}

TEST_CASE("lie derivative on multivectors") {
  SuperPoly one = SuperPoly::constant(2, Scalar(1));
  PolyVec v(2, SuperPoly(2));
  v[0] = SuperPoly::phi(2, 1);
  Multivector p{2, 2, {}};
  mv_insert(p, {1, 2}, one);
  Multivector lp = oracle_lie(v, p);
  CHECK(form_at(DifferentialForm{2, 2, lp.comps}, {1, 2}) ==
        SuperPoly::constant(2, Scalar(-1)));

  Rng rng(16);
  for (int trial = 0; trial < 15; ++trial) {
    unsigned two_n = (trial % 2) ? 2 : 4;
    PolyVec x = random_vector_field(rng, two_n, 2);
    PolyVec y = random_vector_field(rng, two_n, 2);
    // on rank 1 the lie derivative is the bracket
    CHECK(mv_equal(oracle_lie(x, vector_to_mv(y)),
                   vector_to_mv(oracle_lie_bracket(x, y))));
    // derivation over the wedge
    Multivector q = random_mv(rng, two_n, 1 + rng.below(2), 2, 2);
    Multivector r = random_mv(rng, two_n, 1, 2, 2);
    CHECK(mv_equal(oracle_lie(x, wedge(q, r)),
                   [&] {
                     Multivector s = oracle_lie(x, q);
                     Multivector lhs = wedge(s, r);
                     Multivector rhs = wedge(q, oracle_lie(x, r));
                     // mv addition via scale by one and merging through wedge is
                     // unavailable; add componentwise
                     Multivector sum{two_n, lhs.degree ? lhs.degree : rhs.degree, {}};
                     for (const auto& [t, c] : lhs.comps) mv_insert(sum, t, c);
                     for (const auto& [t, c] : rhs.comps) mv_insert(sum, t, c);
                     return sum;
                   }()));
  }
}

TEST_CASE("schouten bracket") {
  SuperPoly one = SuperPoly::constant(2, Scalar(1));

  // rank 1 reduces to the lie bracket
  Rng rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    unsigned two_n = (trial % 2) ? 2 : 4;
    PolyVec x = random_vector_field(rng, two_n, 2);
    PolyVec y = random_vector_field(rng, two_n, 2);
    CHECK(mv_equal(oracle_sn(vector_to_mv(x), vector_to_mv(y)),
                   vector_to_mv(oracle_lie_bracket(x, y))));
  }

  // second argument of rank 1: (-1)^p times the lie derivative
  Multivector p12{2, 2, {}};
  mv_insert(p12, {1, 2}, one);
  PolyVec v(2, SuperPoly(2));
  v[0] = SuperPoly::phi(2, 1);
  Multivector expect = oracle_lie(v, p12); // equals -d1^d2, and p = 2
  CHECK(mv_equal(oracle_sn(p12, vector_to_mv(v)), expect));

  // constant arguments annihilate each other
  PolyVec e1(2, SuperPoly(2));
  e1[0] = one;
  CHECK(is_zero_mv(oracle_sn(p12, vector_to_mv(e1))));

  // graded symmetry
  for (int trial = 0; trial < 10; ++trial) {
    unsigned two_n = 4;
    unsigned p = 1 + rng.below(3), q = 1 + rng.below(3);
    Multivector a = random_mv(rng, two_n, p, 2, 2);
    Multivector b = random_mv(rng, two_n, q, 2, 2);
    Scalar sign = (p * q) % 2 ? Scalar(-1) : Scalar(1);
    CHECK(mv_equal(oracle_sn(a, b), mv_scale(sign, oracle_sn(b, a))));
  }
}

TEST_CASE("vector valued contraction") {
  SuperPoly one = SuperPoly::constant(2, Scalar(1));

  Rng rng(18);
  for (int trial = 0; trial < 10; ++trial) {
    unsigned two_n = (trial % 2) ? 2 : 4;
    PolyVec v = random_vector_field(rng, two_n, 2);
    DifferentialForm x = random_form(rng, two_n, rng.below(3), 2, 2);
    CHECK(form_equal(oracle_ik(vector_to_vv(v), x), oracle_interior(v, x)));
  }

  // identity insertion multiplies by the form degree
  for (unsigned two_n : {2u, 4u}) {
    VectorValuedForm id = identity_vv(two_n);
    Rng r2(19 + two_n);
    for (unsigned l = 0; l <= 2; ++l) {
      DifferentialForm x = random_form(r2, two_n, l, 2, 2);
      CHECK(form_equal(oracle_ik(id, x), scale_form(Scalar(static_cast<long>(l)), x)));
    }
  }

  // hand instance: insert d phi^1 (x) e_2 into d phi^2
  VectorValuedForm k{2, 1, {}};
  vv_insert(k, 2, {1}, one);
  DifferentialForm d2{2, 1, {}};
  form_insert(d2, {2}, one);
  DifferentialForm got = oracle_ik(k, d2);
  CHECK(got.degree == 1);
  CHECK(form_at(got, {1}) == one);
  CHECK(form_at(got, {2}).is_zero());

  // degree overflow collapses to zero
  VectorValuedForm k2{2, 2, {}};
  vv_insert(k2, 1, {1, 2}, one);
  DifferentialForm top{2, 2, {}};
  form_insert(top, {1, 2}, one);
  CHECK(is_zero_form(oracle_ik(k2, top)));
}

TEST_CASE("vector valued lie operator") {
  Rng rng(20);
  for (int trial = 0; trial < 10; ++trial) {
    unsigned two_n = (trial % 2) ? 2 : 4;
    PolyVec v = random_vector_field(rng, two_n, 2);
    DifferentialForm x = random_form(rng, two_n, rng.below(3), 2, 2);
    CHECK(form_equal(oracle_L(vector_to_vv(v), x), oracle_lie(v, x)));
  }

  // identity: L_Id theta = (l + 1) d theta - l d theta = d theta on l-forms
  for (unsigned l = 0; l <= 2; ++l) {
    unsigned two_n = 4;
    VectorValuedForm id = identity_vv(two_n);
    DifferentialForm x = random_form(rng, two_n, l, 2, 2);
    CHECK(form_equal(oracle_L(id, x), oracle_d(x)));
  }
}

TEST_CASE("frolicher nijenhuis bracket") {
  SuperPoly one2 = SuperPoly::constant(2, Scalar(1));
  Rng rng(21);

  // vector fields reduce to the lie bracket
  for (int trial = 0; trial < 5; ++trial) {
    unsigned two_n = 2;
    PolyVec x = random_vector_field(rng, two_n, 2);
    PolyVec y = random_vector_field(rng, two_n, 2);
    CHECK(vv_equal(oracle_fn(vector_to_vv(x), vector_to_vv(y)),
                   vector_to_vv(oracle_lie_bracket(x, y))));
  }

  // identity brackets to zero with itself and with any vector field
  VectorValuedForm id = identity_vv(2);
  CHECK(is_zero_vv(oracle_fn(id, id)));
  for (int trial = 0; trial < 5; ++trial) {
    PolyVec v = random_vector_field(rng, 2, 2);
    CHECK(is_zero_vv(oracle_fn(vector_to_vv(v), id)));
    CHECK(is_zero_vv(oracle_fn(id, vector_to_vv(v))));
  }

  // constant one-forms with values in constant fields commute
  VectorValuedForm ka{2, 1, {}}, kb{2, 1, {}};
  vv_insert(ka, 2, {1}, one2);
  vv_insert(kb, 1, {2}, one2);
  CHECK(is_zero_vv(oracle_fn(ka, kb)));

  // graded symmetry of the underlying operator commutator
  for (int trial = 0; trial < 4; ++trial) {
    unsigned two_n = 2;
    unsigned kd = 1 + rng.below(2), vd = 1 + rng.below(2);
    VectorValuedForm a = random_vv(rng, two_n, kd, 1, 2);
    VectorValuedForm b = random_vv(rng, two_n, vd, 1, 2);
    Scalar sign = (kd * vd) % 2 ? Scalar(1) : Scalar(-1);
    CHECK(vv_equal(oracle_fn(a, b), vv_scale(sign, oracle_fn(b, a))));
  }
}

TEST_CASE("algebraic bracket") {
  SuperPoly one = SuperPoly::constant(2, Scalar(1));
  VectorValuedForm id = identity_vv(2);
  CHECK(is_zero_vv(oracle_nr(id, id)));

  Rng rng(22);
  // against the identity: scales by one less than the form degree
  for (unsigned deg = 1; deg <= 2; ++deg) {
    VectorValuedForm v = random_vv(rng, 2, deg, 2, 2);
    CHECK(vv_equal(oracle_nr(id, v),
                   vv_scale(Scalar(static_cast<long>(deg) - 1), v)));
  }

  // odd self bracket: [K,K] = 2 i_K K when the shifted degree is odd
  VectorValuedForm k{2, 2, {}};
  vv_insert(k, 1, {1, 2}, SuperPoly::phi(2, 1));
  vv_insert(k, 2, {1, 2}, one);
  VectorValuedForm twice{2, 3, {}};
  for (Index i = 1; i <= 2; ++i) {
    DifferentialForm comp = oracle_ik(k, vv_component(k, i));
    for (const auto& [t, c] : comp.comps) vv_insert(twice, i, t, c * Scalar(2));
  }
  CHECK(vv_equal(oracle_nr(k, k), twice));

  // graded antisymmetry in the shifted degrees
  for (int trial = 0; trial < 8; ++trial) {
    unsigned two_n = 4;
    unsigned kd = 1 + rng.below(2), vd = 1 + rng.below(2);
    VectorValuedForm a = random_vv(rng, two_n, kd, 1, 2);
    VectorValuedForm b = random_vv(rng, two_n, vd, 1, 2);
    Scalar sign = ((kd - 1) * (vd - 1)) % 2 ? Scalar(1) : Scalar(-1);
    CHECK(vv_equal(oracle_nr(a, b), vv_scale(sign, oracle_nr(b, a))));
  }
}
