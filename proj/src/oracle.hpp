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

#include <map>
#include <utility>
#include <vector>

#include "superpoly.hpp"

// Coordinate-based implementations of the classical Cartan operations and the
// generalized brackets, written directly from the textbook component formulas.
// This module never touches the graded-bracket engine; it is the independent
// ground truth the engine is calibrated against.

namespace gc {

using IndexTuple = std::vector<Index>;

// Antisymmetric tensors store only strictly ascending index tuples; values on
// arbitrary tuples are reconstructed with the permutation sign.  Coefficients
// are phi-only polynomials; zero coefficients are never stored.
struct DifferentialForm {
  unsigned two_n = 0;
  unsigned degree = 0;
  std::map<IndexTuple, SuperPoly> comps;
};

struct Multivector {
  unsigned two_n = 0;
  unsigned degree = 0;
  std::map<IndexTuple, SuperPoly> comps;
};

// One upper (vector) index plus an antisymmetric block of lower form indices.
// degree is the form degree; degree 0 is a plain vector field.
struct VectorValuedForm {
  unsigned two_n = 0;
  unsigned degree = 0;
  std::map<std::pair<Index, IndexTuple>, SuperPoly> comps;
};

// Sorts t ascending in place; returns the permutation sign, or 0 on a
// repeated index.
int sort_tuple(IndexTuple& t);
// All strictly ascending tuples of the given length over 1..two_n.
std::vector<IndexTuple> ascending_tuples(unsigned two_n, unsigned len);

// Signed insert/lookup: tuples in arbitrary order, sign handled internally.
void form_insert(DifferentialForm& f, IndexTuple t, const SuperPoly& coeff);
void mv_insert(Multivector& v, IndexTuple t, const SuperPoly& coeff);
void vv_insert(VectorValuedForm& k, Index i, IndexTuple t, const SuperPoly& coeff);
SuperPoly form_at(const DifferentialForm& f, IndexTuple t);
SuperPoly mv_at(const Multivector& v, IndexTuple t);
SuperPoly vv_at(const VectorValuedForm& k, Index i, IndexTuple t);

bool form_equal(const DifferentialForm& a, const DifferentialForm& b);
bool mv_equal(const Multivector& a, const Multivector& b);
bool vv_equal(const VectorValuedForm& a, const VectorValuedForm& b);

DifferentialForm form_add(const DifferentialForm& a, const DifferentialForm& b);
DifferentialForm form_sub(const DifferentialForm& a, const DifferentialForm& b);
VectorValuedForm vv_scale(const Scalar& s, const VectorValuedForm& k);
Multivector mv_scale(const Scalar& s, const Multivector& v);

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);
Multivector wedge(const Multivector& a, const Multivector& b);

// Conversions between the rank-1 / degree-0 tensor views of a vector field.
Multivector vector_to_mv(const PolyVec& v);
PolyVec mv_to_vector(const Multivector& v);          // requires rank 1
VectorValuedForm vector_to_vv(const PolyVec& v);     // form degree 0
PolyVec vv_to_vector(const VectorValuedForm& k);     // requires degree 0
// The i-th component of K as a plain form.
DifferentialForm vv_component(const VectorValuedForm& k, Index i);

// Exterior derivative: (dF)_{a t_1..t_p} antisymmetrized.
DifferentialForm oracle_d(const DifferentialForm& f);
// Interior product with a vector field; contraction of a 0-form is zero.
DifferentialForm oracle_interior(const PolyVec& v, const DifferentialForm& f);
// Lie derivative: magic formula on forms, component formula on multivectors.
DifferentialForm oracle_lie(const PolyVec& v, const DifferentialForm& f);
Multivector oracle_lie(const PolyVec& v, const Multivector& p);
// [v,w]^a = v^b d_b w^a - w^b d_b v^a.
PolyVec oracle_lie_bracket(const PolyVec& v, const PolyVec& w);

// Multivector bracket: (-1)^{pq} sum_J (-1)^{J+1} Y_1^..omit J..^Y_q ^ l_{Y_J}P
// over a decomposition of q into wedge products of coordinate fields.
Multivector oracle_sn(const Multivector& p, const Multivector& q);

// Generalized contraction of an l-form by a vector-valued form, evaluated as
// the literal permutation sum with the 1/((k+1)!(l-1)!) normalization.
DifferentialForm oracle_ik(const VectorValuedForm& k, const DifferentialForm& theta);
// Generalized Lie derivative i_K d + d i_K.
DifferentialForm oracle_L(const VectorValuedForm& k, const DifferentialForm& theta);

// Bracket on vector-valued forms defined implicitly by the graded commutator
// of generalized Lie derivatives: L_W = L_K L_V - (-1)^{deg K deg V} L_V L_K.
// W is solved from coordinate-function probes and then verified against the
// implicit definition on a spanning set of monomial test forms; failure to
// verify throws Err::Solve (it would signal an internal convention bug).
VectorValuedForm oracle_fn(const VectorValuedForm& k, const VectorValuedForm& v);

// Algebraic bracket i_K V - (-1)^{kl} i_V K, contraction acting on the form
// part and carrying the upper index along.
VectorValuedForm oracle_nr(const VectorValuedForm& k, const VectorValuedForm& v);

} // namespace gc
