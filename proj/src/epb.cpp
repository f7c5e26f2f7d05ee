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

#include "epb.hpp"

#include <algorithm>
#include <vector>

#include "error.hpp"
#include "randgen.hpp"

namespace gc {

namespace {

SuperPoly charge_q(unsigned two_n) {
  SuperPoly q(two_n);
  for (Index a = 1; a <= two_n; ++a)
    q += Scalar::i() * (SuperPoly::c(two_n, a) * SuperPoly::lam(two_n, a));
  return q;
}

SuperPoly charge_qg(unsigned two_n) {
  SuperPoly qg(two_n);
  for (Index a = 1; a <= two_n; ++a)
    qg += SuperPoly::c(two_n, a) * SuperPoly::cb(two_n, a);
  return qg;
}

// phi part of a monomial, with the given coefficient, as a polynomial
SuperPoly phi_part(unsigned two_n, const Monomial& m, const Scalar& coeff) {
  Monomial pm;
  pm.phi = m.phi;
  SuperPoly out(two_n);
  out.add_term(pm, coeff);
  return out;
}

} // namespace

SuperPoly epb(const SuperPoly& a, const SuperPoly& b) {
  if (a.two_n() != b.two_n()) fail(Err::Dimension, "bracket operands disagree");
  unsigned two_n = a.two_n();
  SuperPoly out(two_n);
  SuperPoly ai = a.parity_involution();
  Scalar im = Scalar::i();
  for (Index x = 1; x <= two_n; ++x) {
    out += a.deriv_phi(x) * b.deriv_lam(x);
    out -= a.deriv_lam(x) * b.deriv_phi(x);
    out += im * (ai.deriv_c(x) * b.deriv_cb(x));
    out += im * (ai.deriv_cb(x) * b.deriv_c(x));
  }
  return out;
}

ChargeSet charges(const SymplecticContext& ctx) {
  unsigned two_n = 2 * ctx.n();
  ChargeSet ch{SuperPoly(two_n), SuperPoly(two_n), charge_qg(two_n),
               SuperPoly(two_n), SuperPoly(two_n)};
  ch.q = charge_q(two_n);
  Scalar half = Scalar::rational(1, 2);
  for (Index a = 1; a <= two_n; ++a) {
    for (Index b = 1; b <= two_n; ++b) {
      Scalar up = ctx.omega_upper(a, b);
      Scalar low = ctx.omega_lower(a, b);
      if (!up.is_zero()) {
        ch.qbar += Scalar::i() * up *
                   (SuperPoly::cb(two_n, a) * SuperPoly::lam(two_n, b));
        ch.kappa_bar += half * up *
                        (SuperPoly::cb(two_n, a) * SuperPoly::cb(two_n, b));
      }
      if (!low.is_zero())
        ch.kappa += half * low *
                    (SuperPoly::c(two_n, a) * SuperPoly::c(two_n, b));
    }
  }
  return ch;
}

SuperPoly hat(const DifferentialForm& f) {
  SuperPoly out(f.two_n);
  for (const auto& [t, p] : f.comps) {
    SuperPoly m = p;
    for (Index i : t) m = m * SuperPoly::c(f.two_n, i);
    out += m;
  }
  return out;
}

SuperPoly hat(const Multivector& v) {
  SuperPoly out(v.two_n);
  for (const auto& [t, p] : v.comps) {
    SuperPoly m = p;
    for (Index i : t) m = m * SuperPoly::cb(v.two_n, i);
    out += m;
  }
  return out;
}

SuperPoly hat(const VectorValuedForm& k) {
  SuperPoly out(k.two_n);
  for (const auto& [key, p] : k.comps) {
    SuperPoly m = p * SuperPoly::cb(k.two_n, key.first);
    for (Index i : key.second) m = m * SuperPoly::c(k.two_n, i);
    out += m;
  }
  return out;
}

SuperPoly hat_vector(const PolyVec& v) {
  unsigned two_n = static_cast<unsigned>(v.size());
  SuperPoly out(two_n);
  for (Index a = 1; a <= two_n; ++a) out += v[a - 1] * SuperPoly::cb(two_n, a);
  return out;
}

DifferentialForm decode_form(const SuperPoly& p,
                             std::optional<unsigned> expected_degree) {
  unsigned two_n = p.two_n();
  std::optional<unsigned> deg;
  for (const auto& [m, coeff] : p.terms()) {
    (void)coeff;
    if (!m.lam.empty()) fail(Err::Decode, "momentum content in a form");
    if (!m.cb.empty()) fail(Err::Decode, "antighost content in a form");
    unsigned d = static_cast<unsigned>(m.c.size());
    if (deg && *deg != d) fail(Err::Decode, "form of mixed degree");
    deg = d;
  }
  if (deg && expected_degree && *expected_degree != *deg)
    fail(Err::Decode, "form degree does not match");
  DifferentialForm out{two_n, deg.value_or(expected_degree.value_or(0)), {}};
  for (const auto& [m, coeff] : p.terms()) {
    form_insert(out, IndexTuple(m.c.begin(), m.c.end()),
                phi_part(two_n, m, coeff));
  }
  return out;
}

Multivector decode_mv(const SuperPoly& p,
                      std::optional<unsigned> expected_degree) {
  unsigned two_n = p.two_n();
  std::optional<unsigned> deg;
  for (const auto& [m, coeff] : p.terms()) {
    (void)coeff;
    if (!m.lam.empty()) fail(Err::Decode, "momentum content in a multivector");
    if (!m.c.empty()) fail(Err::Decode, "ghost content in a multivector");
    unsigned d = static_cast<unsigned>(m.cb.size());
    if (deg && *deg != d) fail(Err::Decode, "multivector of mixed rank");
    deg = d;
  }
  if (deg && expected_degree && *expected_degree != *deg)
    fail(Err::Decode, "multivector rank does not match");
  Multivector out{two_n, deg.value_or(expected_degree.value_or(0)), {}};
  for (const auto& [m, coeff] : p.terms()) {
    mv_insert(out, IndexTuple(m.cb.begin(), m.cb.end()),
              phi_part(two_n, m, coeff));
  }
  return out;
}

VectorValuedForm decode_vv(const SuperPoly& p,
                           std::optional<unsigned> expected_degree) {
  unsigned two_n = p.two_n();
  std::optional<unsigned> deg;
  for (const auto& [m, coeff] : p.terms()) {
    (void)coeff;
    if (!m.lam.empty())
      fail(Err::Decode, "momentum content in a vector valued form");
    if (m.cb.size() != 1)
      fail(Err::Decode, "vector valued form needs one antighost per term");
    unsigned d = static_cast<unsigned>(m.c.size());
    if (deg && *deg != d) fail(Err::Decode, "vector valued form of mixed degree");
    deg = d;
  }
  if (deg && expected_degree && *expected_degree != *deg)
    fail(Err::Decode, "vector valued form degree does not match");
  VectorValuedForm out{two_n, deg.value_or(expected_degree.value_or(0)), {}};
  for (const auto& [m, coeff] : p.terms()) {
    unsigned d = static_cast<unsigned>(m.c.size());
    // canonical order stores c^T cb_i; the embedding wrote cb_i c^T
    Scalar signed_coeff = (d % 2) ? -coeff : coeff;
    vv_insert(out, m.cb[0], IndexTuple(m.c.begin(), m.c.end()),
              phi_part(two_n, m, signed_coeff));
  }
  return out;
}

SuperPoly ext_d(const SuperPoly& f_hat) {
  return Scalar::i() * epb(charge_q(f_hat.two_n()), f_hat);
}

SuperPoly interior(const PolyVec& v, const SuperPoly& f_hat) {
  return Scalar::i() * epb(hat_vector(v), f_hat);
}

SuperPoly degree_op(const SuperPoly& x_hat) {
  return Scalar::i() * epb(charge_qg(x_hat.two_n()), x_hat);
}

SuperPoly lie_hamiltonian(const PolyVec& v) {
  unsigned two_n = static_cast<unsigned>(v.size());
  SuperPoly h(two_n);
  for (Index a = 1; a <= two_n; ++a) {
    if (!v[a - 1].phi_only()) fail(Err::TypeMismatch, "field components must be functions of phi");
    h += SuperPoly::lam(two_n, a) * v[a - 1];
    for (Index b = 1; b <= two_n; ++b) {
      SuperPoly d = v[a - 1].deriv_phi(b);
      if (d.is_zero()) continue;
      h += Scalar::i() * (SuperPoly::cb(two_n, a) * d * SuperPoly::c(two_n, b));
    }
  }
  return h;
}

SuperPoly lie_derivative(const PolyVec& v, const SuperPoly& x_hat) {
  return -epb(lie_hamiltonian(v), x_hat);
}

SuperPoly sharp(const SymplecticContext& ctx, const SuperPoly& f) {
  if (!f.phi_only()) fail(Err::TypeMismatch, "sharp expects a function of phi");
  return Scalar::i() * epb(charges(ctx).qbar, f);
}

SuperPoly flat(const SymplecticContext& ctx, const SuperPoly& v_hat,
               const EpbOptions& opt) {
  ChargeSet ch = charges(ctx);
  const SuperPoly& lowering = opt.use_printed_kbar_flat ? ch.kappa_bar : ch.kappa;
  return Scalar::i() * epb(lowering, v_hat);
}

SuperPoly evolve_infinitesimal(const SymplecticContext& ctx, const SuperPoly& h,
                               const SuperPoly& x) {
  return epb(lie_hamiltonian(ctx.hamiltonian_vector_field(h)), x);
}

SuperPoly liouvillian_action(const SymplecticContext& ctx, const SuperPoly& h,
                             const SuperPoly& rho) {
  if (!rho.phi_only()) fail(Err::TypeMismatch, "densities must be functions of phi");
  unsigned two_n = 2 * ctx.n();
  SuperPoly flow = lie_hamiltonian(ctx.hamiltonian_vector_field(h));
  // momentum-linear ghost-free sector lam_a f^a, applied as a derivative
  // operator: lam_a acts as -i d/dphi^a, and the whole generator carries i
  SuperPoly out(two_n);
  for (const auto& [m, coeff] : flow.terms()) {
    if (!m.c.empty() || !m.cb.empty()) continue;
    if (m.lam.size() != 1 || m.lam[0].second != 1) continue;
    Index a = m.lam[0].first;
    SuperPoly f = phi_part(two_n, m, coeff);
    out += Scalar::i() * (f * ((Scalar(-1) * Scalar::i()) * rho.deriv_phi(a)));
  }
  return out;
}

PolyVec lie_raw(const PolyVec& v, const PolyVec& w) {
  SuperPoly g = epb(lie_hamiltonian(v), hat_vector(w));
  Multivector raw = decode_mv(g, 1);
  return mv_to_vector(raw);
}

Multivector sn_raw(const Multivector& p, const Multivector& q) {
  if (p.two_n != q.two_n) fail(Err::Dimension, "bracket operands disagree");
  unsigned two_n = p.two_n;
  unsigned pd = p.degree, qd = q.degree;
  SuperPoly lq(two_n);
  for (const auto& [t, g] : q.comps) {
    for (unsigned j = 0; j < qd; ++j) {
      SuperPoly term = SuperPoly::constant(two_n, Scalar(1));
      for (unsigned m = 0; m < qd; ++m) {
        if (m == j) continue;
        SuperPoly y_hat = SuperPoly::cb(two_n, t[m]);
        if (m == 0) y_hat = g * y_hat;
        term = term * y_hat;
      }
      SuperPoly flow;
      if (j == 0) {
        PolyVec y(two_n, SuperPoly(two_n));
        y[t[0] - 1] = g;
        flow = lie_hamiltonian(y);
      } else {
        flow = SuperPoly::lam(two_n, t[j]);
      }
      term = term * flow;
      if (j % 2) term = -term;
      lq += term;
    }
  }
  unsigned expected = (pd + qd >= 1) ? pd + qd - 1 : 0;
  Multivector raw = decode_mv(epb(lq, hat(p)), expected);
  if ((pd * qd) % 2) raw = mv_scale(Scalar(-1), raw);
  return raw;
}

VectorValuedForm nr_raw(const VectorValuedForm& k, const VectorValuedForm& v) {
  if (k.two_n != v.two_n) fail(Err::Dimension, "bracket operands disagree");
  unsigned expected = (k.degree + v.degree >= 1) ? k.degree + v.degree - 1 : 0;
  return decode_vv(epb(hat(k), hat(v)), expected);
}

VectorValuedForm fn_raw(const VectorValuedForm& k, const VectorValuedForm& v) {
  if (k.two_n != v.two_n) fail(Err::Dimension, "bracket operands disagree");
  unsigned two_n = k.two_n;
  SuperPoly q = charge_q(two_n);
  SuperPoly g2 = epb(epb(hat(k), q), epb(hat(v), q));
  unsigned r = k.degree + v.degree;

  // momentum-linear antighost-free sector carries the candidate components
  std::vector<SuperPoly> gamma(two_n, SuperPoly(two_n));
  for (const auto& [m, coeff] : g2.terms()) {
    if (!m.cb.empty()) continue;
    if (m.lam.size() != 1 || m.lam[0].second != 1) continue;
    Monomial rest;
    rest.phi = m.phi;
    rest.c = m.c;
    SuperPoly piece(two_n);
    piece.add_term(rest, coeff);
    gamma[m.lam[0].first - 1] += piece;
  }

  VectorValuedForm w{two_n, r, {}};
  Scalar sign = (r % 2) ? Scalar(-1) : Scalar(1);
  for (Index i = 1; i <= two_n; ++i) {
    if (gamma[i - 1].is_zero()) continue;
    DifferentialForm fi = decode_form(sign * gamma[i - 1], r);
    for (const auto& [t, c] : fi.comps) vv_insert(w, i, t, c);
  }

  if (!(epb(hat(w), q) == g2))
    fail(Err::Internal, "flow commutator is not generated by a vector valued form");
  return w;
}

namespace {

// exact proportionality between two polynomials, if any
std::optional<Scalar> poly_ratio(const SuperPoly& num, const SuperPoly& den) {
  if (den.is_zero() || num.is_zero()) return std::nullopt;
  const auto& [m, c] = *den.terms().begin();
  auto it = num.terms().find(m);
  if (it == num.terms().end()) return std::nullopt;
  Scalar ratio = it->second * c.inverse();
  if (num == ratio * den) return ratio;
  return std::nullopt;
}

struct RatioTracker {
  std::optional<Scalar> k;
  unsigned hits = 0;
  // oracle and raw as flat component lists over a shared key order
  void feed(const std::vector<SuperPoly>& oracle, const std::vector<SuperPoly>& raw) {
    bool o_zero = std::all_of(oracle.begin(), oracle.end(),
                              [](const SuperPoly& s) { return s.is_zero(); });
    bool r_zero = std::all_of(raw.begin(), raw.end(),
                              [](const SuperPoly& s) { return s.is_zero(); });
    if (o_zero != r_zero)
      fail(Err::Calibration, "realization vanishes where the oracle does not");
    if (o_zero) return;
    std::optional<Scalar> inst;
    for (size_t idx = 0; idx < raw.size(); ++idx) {
      if (raw[idx].is_zero()) {
        if (!oracle[idx].is_zero())
          fail(Err::Calibration, "component mismatch against the oracle");
        continue;
      }
      std::optional<Scalar> r = poly_ratio(oracle[idx], raw[idx]);
      if (!r) fail(Err::Calibration, "components are not proportional");
      if (inst && !(*inst == *r))
        fail(Err::Calibration, "components disagree on the constant");
      inst = r;
    }
    if (!inst) fail(Err::Calibration, "no usable component");
    if (k && !(*k == *inst))
      fail(Err::Calibration, "instances disagree on the constant");
    k = inst;
    ++hits;
  }
  Scalar finish(const char* what) const {
    if (!k || hits < 12) fail(Err::Calibration, std::string("too few instances for ") + what);
    return *k;
  }
};

std::vector<SuperPoly> flatten(const PolyVec& v) { return v; }

std::vector<SuperPoly> flatten(const Multivector& v) {
  std::vector<SuperPoly> out;
  auto tuples = ascending_tuples(v.two_n, v.degree);
  for (const auto& t : tuples) out.push_back(mv_at(v, t));
  return out;
}

std::vector<SuperPoly> flatten(const VectorValuedForm& k) {
  std::vector<SuperPoly> out;
  auto tuples = ascending_tuples(k.two_n, k.degree);
  for (Index i = 1; i <= k.two_n; ++i)
    for (const auto& t : tuples) out.push_back(vv_at(k, i, t));
  return out;
}

} // namespace

CalibrationConstants calibrate() {
  RatioTracker lie_t, sn_t, nr_t, fn_t;

  for (unsigned n = 1; n <= 2; ++n) {
    unsigned two_n = 2 * n;
    Rng rng(700 + n);
    for (int inst = 0; inst < 8; ++inst) {
      PolyVec v = random_vector_field(rng, two_n, 2);
      PolyVec w = random_vector_field(rng, two_n, 2);
      lie_t.feed(flatten(oracle_lie_bracket(v, w)), flatten(lie_raw(v, w)));
    }
  }

  // rank pairs chosen so the result fits in the dimension
  {
    const std::vector<std::pair<unsigned, unsigned>> n1 = {{1, 1}, {1, 2}, {2, 1}};
    const std::vector<std::pair<unsigned, unsigned>> n2 = {{1, 1}, {1, 2}, {2, 1},
                                                           {2, 2}, {1, 3}, {3, 2}};
    for (unsigned n = 1; n <= 2; ++n) {
      unsigned two_n = 2 * n;
      Rng rng(710 + n);
      for (const auto& [pd, qd] : (n == 1 ? n1 : n2)) {
        for (int inst = 0; inst < (n == 1 ? 4 : 2); ++inst) {
          Multivector p = random_mv(rng, two_n, pd, 2, 2);
          Multivector q = random_mv(rng, two_n, qd, 2, 2);
          Multivector o = oracle_sn(p, q);
          Multivector r = sn_raw(p, q);
          if (o.comps.empty() && r.comps.empty()) continue;
          unsigned deg = o.comps.empty() ? r.degree : o.degree;
          o.degree = r.degree = deg;
          sn_t.feed(flatten(o), flatten(r));
        }
      }
    }
  }

  {
    const std::vector<std::pair<unsigned, unsigned>> n1 = {{1, 1}, {1, 2}, {2, 1}};
    const std::vector<std::pair<unsigned, unsigned>> n2 = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};
    for (unsigned n = 1; n <= 2; ++n) {
      unsigned two_n = 2 * n;
      Rng rng(720 + n);
      for (const auto& [kd, vd] : (n == 1 ? n1 : n2)) {
        for (int inst = 0; inst < (n == 1 ? 4 : 3); ++inst) {
          VectorValuedForm k = random_vv(rng, two_n, kd, 2, 2);
          VectorValuedForm v = random_vv(rng, two_n, vd, 2, 2);
          VectorValuedForm o = oracle_nr(k, v);
          VectorValuedForm r = nr_raw(k, v);
          if (o.comps.empty() && r.comps.empty()) continue;
          unsigned deg = o.comps.empty() ? r.degree : o.degree;
          o.degree = r.degree = deg;
          nr_t.feed(flatten(o), flatten(r));
        }
      }
    }
  }

  {
    const std::vector<std::pair<unsigned, unsigned>> n1 = {{0, 0}, {0, 1}, {1, 0},
                                                           {1, 1}, {0, 2}, {2, 0}};
    const std::vector<std::pair<unsigned, unsigned>> n2 = {{0, 1}, {1, 1}};
    for (unsigned n = 1; n <= 2; ++n) {
      unsigned two_n = 2 * n;
      Rng rng(730 + n);
      for (const auto& [kd, vd] : (n == 1 ? n1 : n2)) {
        for (int inst = 0; inst < (n == 1 ? 4 : 2); ++inst) {
          VectorValuedForm k = random_vv(rng, two_n, kd, 1, 1 + rng.below(2));
          VectorValuedForm v = random_vv(rng, two_n, vd, 1, 1 + rng.below(2));
          VectorValuedForm o = oracle_fn(k, v);
          VectorValuedForm r = fn_raw(k, v);
          if (o.comps.empty() && r.comps.empty()) continue;
          unsigned deg = o.comps.empty() ? r.degree : o.degree;
          o.degree = r.degree = deg;
          fn_t.feed(flatten(o), flatten(r));
        }
      }
    }
  }

  return CalibrationConstants{lie_t.finish("the lie bracket"),
                              sn_t.finish("the schouten bracket"),
                              nr_t.finish("the algebraic bracket"),
                              fn_t.finish("the differential bracket")};
}

const CalibrationConstants& calibration_constants() {
  static const CalibrationConstants k = calibrate();
  return k;
}

PolyVec lie_bracket(const PolyVec& v, const PolyVec& w) {
  PolyVec raw = lie_raw(v, w);
  const Scalar& k = calibration_constants().lie;
  for (SuperPoly& comp : raw) comp = k * comp;
  return raw;
}

Multivector sn_bracket(const Multivector& p, const Multivector& q) {
  return mv_scale(calibration_constants().sn, sn_raw(p, q));
}

VectorValuedForm fn_bracket(const VectorValuedForm& k, const VectorValuedForm& v) {
  return vv_scale(calibration_constants().fn, fn_raw(k, v));
}

VectorValuedForm nr_bracket(const VectorValuedForm& k, const VectorValuedForm& v) {
  return vv_scale(calibration_constants().nr, nr_raw(k, v));
}

} // namespace gc
