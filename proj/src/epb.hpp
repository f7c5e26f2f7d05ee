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

#include <optional>

#include "context.hpp"
#include "oracle.hpp"
#include "superpoly.hpp"

// The extended graded bracket and the operations built on top of it.
//
// Geometric objects embed into the superalgebra: a p-form becomes a ghost
// polynomial F_T c^T, a rank-p multivector becomes V^T cb_T, and a vector
// valued p-form becomes K^i_T cb_i c^T.  Cartan operations and the three
// generalized brackets are then single bracket evaluations against fixed
// charges.  Everything here is exact; no tolerances anywhere.

namespace gc {

// {A,B}: even sector pairs phi with lam, odd sector pairs c with cb and
// carries a sign (-1)^|A| folded in through the parity involution.
SuperPoly epb(const SuperPoly& a, const SuperPoly& b);

// The fixed charges.  q and qg need no symplectic data; qbar, kappa and
// kappa_bar are built from the context's omega.
struct ChargeSet {
  SuperPoly q;         // i c^a lam_a
  SuperPoly qbar;      // i cb_a w^{ab} lam_b
  SuperPoly qg;        // c^a cb_a
  SuperPoly kappa;     // 1/2 w_{ab} c^a c^b
  SuperPoly kappa_bar; // 1/2 w^{ab} cb_a cb_b
};
ChargeSet charges(const SymplecticContext& ctx);

// Embeddings and their inverses.  decode_* validate the ghost structure
// strictly and throw Err::Decode on anything malformed; expected_degree
// disambiguates the degree of a zero result.
SuperPoly hat(const DifferentialForm& f);
SuperPoly hat(const Multivector& v);
SuperPoly hat(const VectorValuedForm& k);
SuperPoly hat_vector(const PolyVec& v);

DifferentialForm decode_form(const SuperPoly& p,
                             std::optional<unsigned> expected_degree = {});
Multivector decode_mv(const SuperPoly& p,
                      std::optional<unsigned> expected_degree = {});
VectorValuedForm decode_vv(const SuperPoly& p,
                           std::optional<unsigned> expected_degree = {});

// Cartan calculus on embedded objects.  These need no symplectic data.
SuperPoly ext_d(const SuperPoly& f_hat);
SuperPoly interior(const PolyVec& v, const SuperPoly& f_hat);
SuperPoly degree_op(const SuperPoly& x_hat);

// lam_a V^a + i cb_a (d_b V^a) c^b: generates the flow of v under the bracket.
SuperPoly lie_hamiltonian(const PolyVec& v);
SuperPoly lie_derivative(const PolyVec& v, const SuperPoly& x_hat);

struct EpbOptions {
  // Lowers indices with kappa_bar instead of kappa.  Kept for mutation
  // testing: kappa_bar annihilates every multivector, so enabling this makes
  // the musical consistency checks fail loudly.
  bool use_printed_kbar_flat = false;
};

// Musical maps.  sharp takes a function of phi to an embedded vector field;
// flat takes an embedded multivector down one index.
SuperPoly sharp(const SymplecticContext& ctx, const SuperPoly& f);
SuperPoly flat(const SymplecticContext& ctx, const SuperPoly& v_hat,
               const EpbOptions& opt = {});

// One step of the flow generated by the hamiltonian h, and the transport
// operator induced on functions of phi.
SuperPoly evolve_infinitesimal(const SymplecticContext& ctx, const SuperPoly& h,
                               const SuperPoly& x);
SuperPoly liouvillian_action(const SymplecticContext& ctx, const SuperPoly& h,
                             const SuperPoly& rho);

// Uncalibrated bracket realizations: the raw bracket evaluation, decoded but
// not yet scaled to the classical normalization.
PolyVec lie_raw(const PolyVec& v, const PolyVec& w);
Multivector sn_raw(const Multivector& p, const Multivector& q);
VectorValuedForm nr_raw(const VectorValuedForm& k, const VectorValuedForm& v);
// Realized through the commutator of the two flow generators; throws
// Err::Internal if the commutator is not generated by a vector valued form.
VectorValuedForm fn_raw(const VectorValuedForm& k, const VectorValuedForm& v);

// Proportionality constants between the raw realizations and the classical
// brackets, measured against the coordinate oracle on a fixed deterministic
// battery (at least 12 nonzero instances per bracket, dimensions 1 and 2).
// Throws Err::Calibration unless every instance yields one and the same
// exact constant.
struct CalibrationConstants {
  Scalar lie;
  Scalar sn;
  Scalar nr;
  Scalar fn;
};
CalibrationConstants calibrate();
const CalibrationConstants& calibration_constants();

// Calibrated brackets, agreeing with the coordinate definitions exactly.
PolyVec lie_bracket(const PolyVec& v, const PolyVec& w);
Multivector sn_bracket(const Multivector& p, const Multivector& q);
VectorValuedForm fn_bracket(const VectorValuedForm& k, const VectorValuedForm& v);
VectorValuedForm nr_bracket(const VectorValuedForm& k, const VectorValuedForm& v);

} // namespace gc
