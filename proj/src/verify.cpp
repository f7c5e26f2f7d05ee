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

#include "verify.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "epb.hpp"
#include "error.hpp"
#include "randgen.hpp"
#include "textio.hpp"
#include "workspace.hpp"

namespace gc {

namespace {

struct SuiteRun {
  SuiteResult* out;
  void check(bool ok, const char* what) {
    if (ok) {
      ++out->passed;
    } else {
      ++out->failed;
      if (out->note.empty()) out->note = what;
    }
  }
};

int parity_of(const SuperPoly& p) { return p.grade().parity.value_or(-1); }

SuperPoly apply_field(const PolyVec& v, const SuperPoly& f) {
  SuperPoly out(f.two_n());
  for (Index a = 1; a <= f.two_n(); ++a) out += v[a - 1] * f.deriv_phi(a);
  return out;
}

SuperPoly delta(unsigned two_n, Index a, Index b) {
  return SuperPoly::constant(two_n, Scalar(a == b ? 1 : 0));
}

VectorValuedForm identity_vv(unsigned two_n) {
  VectorValuedForm id{two_n, 1, {}};
  for (Index i = 1; i <= two_n; ++i) {
    vv_insert(id, i, {i}, SuperPoly::constant(two_n, Scalar(1)));
  }
  return id;
}

void suite_superalgebra(Rng& rng, unsigned cases, SuiteRun& r) {
  for (unsigned t = 0; t < cases; ++t) {
    unsigned two_n = 2 * (1 + t % 3);
    SuperPoly a = random_superpoly(rng, two_n, 2, 3, 4);
    SuperPoly b = random_superpoly(rng, two_n, 2, 3, 4);
    SuperPoly c = random_superpoly(rng, two_n, 2, 3, 4);
    r.check((a * b) * c == a * (b * c), "product associativity");
    SuperPoly ha = random_homogeneous(rng, two_n, static_cast<int>(t % 2));
    SuperPoly hb = random_homogeneous(rng, two_n, static_cast<int>((t / 2) % 2));
    Scalar sign((parity_of(ha) == 1 && parity_of(hb) == 1) ? -1 : 1);
    r.check(ha * hb == sign * (hb * ha), "graded commutativity");
    r.check(a.parity_involution() * b.parity_involution() ==
                (a * b).parity_involution(),
            "parity involution is multiplicative");
  }
}

void suite_poisson(Rng& rng, unsigned cases, SuiteRun& r) {
  for (unsigned t = 0; t < cases; ++t) {
    unsigned n = 1 + t % 2;
    SymplecticContext ctx = SymplecticContext::standard(n);
    unsigned two_n = 2 * n;
    SuperPoly f = random_phi_poly(rng, two_n, 3, 3);
    SuperPoly g = random_phi_poly(rng, two_n, 3, 3);
    SuperPoly h = random_phi_poly(rng, two_n, 2, 3);
    r.check(ctx.poisson_bracket(f, g) == -ctx.poisson_bracket(g, f),
            "poisson antisymmetry");
    r.check(ctx.poisson_bracket(f, g * h) ==
                ctx.poisson_bracket(f, g) * h + g * ctx.poisson_bracket(f, h),
            "poisson Leibniz");
    SuperPoly jac = ctx.poisson_bracket(f, ctx.poisson_bracket(g, h)) +
                    ctx.poisson_bracket(g, ctx.poisson_bracket(h, f)) +
                    ctx.poisson_bracket(h, ctx.poisson_bracket(f, g));
    r.check(jac.is_zero(), "poisson Jacobi");
    r.check(apply_field(ctx.hamiltonian_vector_field(f), g) ==
                ctx.poisson_bracket(g, f),
            "hamiltonian field consistency");
  }
}

void suite_fundamental(Rng&, unsigned, SuiteRun& r) {
  Scalar mi = -Scalar::i();
  for (unsigned n = 1; n <= 3; ++n) {
    unsigned two_n = 2 * n;
    for (Index a = 1; a <= two_n; ++a) {
      for (Index b = 1; b <= two_n; ++b) {
        SuperPoly pa = SuperPoly::phi(two_n, a);
        SuperPoly lb = SuperPoly::lam(two_n, b);
        SuperPoly ca = SuperPoly::c(two_n, a);
        SuperPoly ba = SuperPoly::cb(two_n, a);
        SuperPoly bb = SuperPoly::cb(two_n, b);
        SuperPoly cb_ = SuperPoly::c(two_n, b);
        r.check(epb(pa, lb) == delta(two_n, a, b), "phi against lam");
        r.check(epb(lb, pa) == -delta(two_n, a, b), "lam against phi");
        r.check(epb(pa, SuperPoly::phi(two_n, b)).is_zero(), "phi against phi");
        r.check(epb(SuperPoly::lam(two_n, a), lb).is_zero(), "lam against lam");
        r.check(epb(ca, bb) == mi * delta(two_n, a, b), "c against cb");
        r.check(epb(ba, cb_) == mi * delta(two_n, a, b), "cb against c");
        r.check(epb(ca, cb_).is_zero(), "c against c");
        r.check(epb(ba, bb).is_zero(), "cb against cb");
        r.check(epb(pa, bb).is_zero() && epb(pa, cb_).is_zero() &&
                    epb(SuperPoly::lam(two_n, a), cb_).is_zero() &&
                    epb(SuperPoly::lam(two_n, a), bb).is_zero(),
                "sectors decouple");
      }
    }
  }
}

void suite_graded_axioms(Rng& rng, unsigned cases, SuiteRun& r) {
  for (unsigned t = 0; t < cases; ++t) {
    unsigned two_n = 2 * (1 + t % 2);
    SuperPoly a = random_homogeneous(rng, two_n, static_cast<int>(t % 2));
    SuperPoly b = random_homogeneous(rng, two_n, static_cast<int>((t / 2) % 2));
    SuperPoly c = random_superpoly(rng, two_n, 2, 3, 4);
    int pa = parity_of(a);
    int pb = parity_of(b);
    if (pa < 0 || pb < 0) continue;
    Scalar sab((pa == 1 && pb == 1) ? -1 : 1);
    r.check(epb(a, b) == Scalar(-1) * sab * epb(b, a), "graded antisymmetry");
    r.check(epb(a, b * c) == epb(a, b) * c + sab * (b * epb(a, c)),
            "Leibniz in the second slot");
    SuperPoly chom = random_homogeneous(rng, two_n, static_cast<int>((t / 3) % 2));
    int pch = parity_of(chom);
    if (pch >= 0) {
      Scalar sbc((pb == 1 && pch == 1) ? -1 : 1);
      r.check(epb(a * b, chom) == a * epb(b, chom) + sbc * (epb(a, chom) * b),
              "Leibniz in the first slot");
    }
    r.check(epb(a, epb(b, c)) == epb(epb(a, b), c) + sab * epb(b, epb(a, c)),
            "graded Jacobi");
    SuperPoly ab = epb(a, b);
    if (!ab.is_zero()) {
      r.check(parity_of(ab) == (pa + pb) % 2, "bracket parity");
    }
  }
}

void suite_charge_algebra(Rng&, unsigned, SuiteRun& r) {
  for (unsigned n = 1; n <= 3; ++n) {
    SymplecticContext ctx = SymplecticContext::standard(n);
    ChargeSet ch = charges(ctx);
    r.check(epb(ch.q, ch.q).is_zero(), "raising charge squares to zero");
    r.check(epb(ch.qbar, ch.qbar).is_zero(), "lowering charge squares to zero");
    r.check(degree_op(ch.q) == Scalar(1) * ch.q, "raising charge ghost number");
    r.check(degree_op(ch.qbar) == Scalar(-1) * ch.qbar,
            "lowering charge ghost number");
    r.check(degree_op(ch.kappa) == Scalar(2) * ch.kappa, "kappa ghost number");
    r.check(degree_op(ch.kappa_bar) == Scalar(-2) * ch.kappa_bar,
            "kappa_bar ghost number");
    r.check(parity_of(ch.q) == 1 && parity_of(ch.qbar) == 1 &&
                parity_of(ch.qg) == 0 && parity_of(ch.kappa) == 0,
            "charge parities");
  }
}

void suite_cartan(Rng& rng, unsigned cases, SuiteRun& r) {
  for (unsigned t = 0; t < cases; ++t) {
    unsigned n = 1 + t % 2;
    unsigned two_n = 2 * n;
    unsigned deg = rng.below(two_n + 1);
    DifferentialForm f = random_form(rng, two_n, deg, 2, 2);
    PolyVec v = random_vector_field(rng, two_n, 2);
    SuperPoly fh = hat(f);
    SuperPoly dh = ext_d(fh);
    r.check(form_equal(decode_form(dh, std::min(deg + 1, two_n)), oracle_d(f)),
            "exterior derivative matches the oracle");
    r.check(ext_d(dh).is_zero(), "d squares to zero");
    r.check(form_equal(decode_form(interior(v, fh), deg ? deg - 1 : 0),
                       oracle_interior(v, f)),
            "interior product matches the oracle");
    SuperPoly lie = lie_derivative(v, fh);
    r.check(lie == interior(v, ext_d(fh)) + ext_d(interior(v, fh)),
            "magic formula");
    r.check(form_equal(decode_form(lie, deg), oracle_lie(v, f)),
            "lie derivative matches the oracle");
    Multivector mv = random_mv(rng, two_n, std::min(deg, two_n), 2, 2);
    r.check(mv_equal(decode_mv(lie_derivative(v, hat(mv)), mv.degree),
                     oracle_lie(v, mv)),
            "lie derivative on multivectors matches the oracle");
  }
}

void suite_hamilton(Rng& rng, unsigned cases, SuiteRun& r) {
  for (unsigned t = 0; t < cases; ++t) {
    unsigned n = 1 + t % 2;
    unsigned two_n = 2 * n;
    SymplecticContext ctx = SymplecticContext::standard(n);
    SuperPoly h = random_phi_poly(rng, two_n, 3, 3);
    SuperPoly flow = lie_hamiltonian(ctx.hamiltonian_vector_field(h));
    r.check(flow == epb(hat_vector(ctx.hamiltonian_vector_field(h)),
                        charges(ctx).q),
            "flow generator is the bracket of the field with the raising charge");
    for (Index a = 1; a <= two_n; ++a) {
      SuperPoly pa = SuperPoly::phi(two_n, a);
      r.check(epb(pa, flow) == ctx.poisson_bracket(pa, h),
              "coordinate flow matches the poisson bracket");
    }
  }
}

void suite_degree(Rng& rng, unsigned cases, SuiteRun& r) {
  for (unsigned t = 0; t < cases; ++t) {
    unsigned n = 1 + t % 2;
    unsigned two_n = 2 * n;
    unsigned p = t % (two_n + 1);
    DifferentialForm f = random_form(rng, two_n, p, 2, 2);
    Multivector v = random_mv(rng, two_n, p, 2, 2);
    r.check(degree_op(hat(f)) == Scalar(static_cast<long>(p)) * hat(f),
            "forms have eigenvalue +p");
    r.check(degree_op(hat(v)) == Scalar(-static_cast<long>(p)) * hat(v),
            "multivectors have eigenvalue -p");
  }
}

void suite_musical(Rng& rng, unsigned cases, SuiteRun& r) {
  for (unsigned t = 0; t < cases; ++t) {
    unsigned n = 1 + t % 2;
    unsigned two_n = 2 * n;
    SymplecticContext ctx = SymplecticContext::standard(n);
    SuperPoly f = random_phi_poly(rng, two_n, 3, 3);
    SuperPoly sh = sharp(ctx, f);
    PolyVec vs = mv_to_vector(decode_mv(sh, 1));
    bool comps_ok = true;
    for (Index a = 1; a <= two_n; ++a) {
      SuperPoly expect(two_n);
      for (Index b = 1; b <= two_n; ++b)
        expect += ctx.omega_upper(a, b) * f.deriv_phi(b);
      comps_ok = comps_ok && vs[a - 1] == expect;
    }
    r.check(comps_ok, "sharp components are omega gradients");
    DifferentialForm f0{two_n, 0, {}};
    form_insert(f0, {}, f);
    r.check(flat(ctx, sh) == ext_d(hat(f0)), "flat of sharp is d");
    if (!sh.is_zero()) {
      EpbOptions mutated;
      mutated.use_printed_kbar_flat = true;
      r.check(flat(ctx, sh, mutated).is_zero() &&
                  flat(ctx, sh, mutated) != flat(ctx, sh),
              "corrupted lowering is caught");
    }
  }
}

void suite_transformation(Rng& rng, unsigned cases, SuiteRun& r) {
  for (unsigned t = 0; t < cases; ++t) {
    unsigned n = 1 + t % 2;
    unsigned two_n = 2 * n;
    SymplecticContext ctx = SymplecticContext::standard(n);
    SuperPoly h = random_phi_poly(rng, two_n, 3, 2);
    PolyVec field = ctx.hamiltonian_vector_field(h);
    for (Index a = 1; a <= two_n; ++a) {
      SuperPoly dc(two_n);
      for (Index b = 1; b <= two_n; ++b)
        dc -= SuperPoly::c(two_n, b) * field[a - 1].deriv_phi(b);
      r.check(evolve_infinitesimal(ctx, h, SuperPoly::c(two_n, a)) == dc,
              "ghost transformation");
      SuperPoly dcb(two_n);
      for (Index b = 1; b <= two_n; ++b)
        dcb += SuperPoly::cb(two_n, b) * field[b - 1].deriv_phi(a);
      r.check(evolve_infinitesimal(ctx, h, SuperPoly::cb(two_n, a)) == dcb,
              "antighost transformation");
      SuperPoly dl(two_n);
      for (Index b = 1; b <= two_n; ++b)
        dl += SuperPoly::lam(two_n, b) * field[b - 1].deriv_phi(a);
      for (Index i = 1; i <= two_n; ++i)
        for (Index b = 1; b <= two_n; ++b)
          dl += Scalar::i() * (SuperPoly::cb(two_n, i) *
                               field[i - 1].deriv_phi(b).deriv_phi(a) *
                               SuperPoly::c(two_n, b));
      r.check(evolve_infinitesimal(ctx, h, SuperPoly::lam(two_n, a)) == dl,
              "momentum transformation");
      r.check(evolve_infinitesimal(ctx, h, SuperPoly::phi(two_n, a)) ==
                  -field[a - 1],
              "coordinate transformation");
    }
  }
}

void suite_liouvillian(Rng& rng, unsigned cases, SuiteRun& r) {
  for (unsigned t = 0; t < cases; ++t) {
    unsigned n = 1 + t % 2;
    unsigned two_n = 2 * n;
    SymplecticContext ctx = SymplecticContext::standard(n);
    SuperPoly h = random_phi_poly(rng, two_n, 3, 3);
    SuperPoly rho = random_phi_poly(rng, two_n, 3, 3);
    r.check(liouvillian_action(ctx, h, rho) ==
                apply_field(ctx.hamiltonian_vector_field(h), rho),
            "transport equals the hamiltonian directional derivative");
  }
}

void suite_calibration(Rng&, unsigned, SuiteRun& r) {
  CalibrationConstants fresh = calibrate();
  r.check(fresh.lie == Scalar(-1), "lie constant");
  r.check(fresh.sn == Scalar(-1), "schouten constant");
  r.check(fresh.nr == Scalar(-1) * Scalar::i(), "algebraic constant");
  r.check(fresh.fn == Scalar(-1), "differential constant");
  const CalibrationConstants& cached = calibration_constants();
  r.check(cached.lie == fresh.lie && cached.sn == fresh.sn &&
              cached.nr == fresh.nr && cached.fn == fresh.fn,
          "cached constants agree with a fresh run");
}

void suite_lie_oracle(Rng& rng, unsigned cases, SuiteRun& r) {
  for (unsigned t = 0; t < cases; ++t) {
    unsigned two_n = 2 * (1 + t % 2);
    PolyVec v = random_vector_field(rng, two_n, 2);
    PolyVec w = random_vector_field(rng, two_n, 2);
    PolyVec got = lie_bracket(v, w);
    PolyVec want = oracle_lie_bracket(v, w);
    bool same = true;
    for (Index a = 1; a <= two_n; ++a) same = same && got[a - 1] == want[a - 1];
    r.check(same, "lie bracket matches the oracle");
  }
}

void suite_sn_oracle(Rng& rng, unsigned cases, SuiteRun& r) {
  const std::pair<unsigned, unsigned> pairs1[] = {{1, 1}, {1, 2}, {2, 1}};
  const std::pair<unsigned, unsigned> pairs2[] = {{1, 1}, {1, 2}, {2, 1},
                                                  {2, 2}, {1, 3}, {3, 2}};
  for (unsigned t = 0; t < cases; ++t) {
    unsigned n = (t % 3 == 2) ? 2 : 1;
    unsigned two_n = 2 * n;
    auto pr = (n == 1) ? pairs1[t % 3] : pairs2[t % 6];
    Multivector p = random_mv(rng, two_n, pr.first, 2, 2);
    Multivector q = random_mv(rng, two_n, pr.second, 2, 2);
    Multivector got = sn_bracket(p, q);
    r.check(mv_equal(got, oracle_sn(p, q)), "schouten matches the oracle");
    Multivector flip = sn_bracket(q, p);
    Scalar sign((pr.first * pr.second) % 2 ? -1 : 1);
    r.check(mv_equal(got, mv_scale(sign, flip)), "schouten graded symmetry");
  }
}

void suite_nr_oracle(Rng& rng, unsigned cases, SuiteRun& r) {
  const std::pair<unsigned, unsigned> pairs[] = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};
  for (unsigned t = 0; t < cases; ++t) {
    unsigned n = (t % 4 == 3) ? 2 : 1;
    unsigned two_n = 2 * n;
    auto pr = pairs[t % 4];
    VectorValuedForm k = random_vv(rng, two_n, pr.first, 2, 2);
    VectorValuedForm v = random_vv(rng, two_n, pr.second, 2, 2);
    r.check(vv_equal(nr_bracket(k, v), oracle_nr(k, v)),
            "algebraic bracket matches the oracle");
  }
}

void suite_fn_oracle(Rng& rng, unsigned cases, SuiteRun& r) {
  const std::pair<unsigned, unsigned> pairs1[] = {{0, 0}, {0, 1}, {1, 0},
                                                  {1, 1}, {0, 2}, {2, 0}};
  const std::pair<unsigned, unsigned> pairs2[] = {{0, 1}, {1, 1}};
  for (unsigned t = 0; t < cases; ++t) {
    bool wide = (t % 5 == 4);
    unsigned two_n = wide ? 4 : 2;
    auto pr = wide ? pairs2[t % 2] : pairs1[t % 6];
    VectorValuedForm k = random_vv(rng, two_n, pr.first, 1, 2);
    VectorValuedForm v = random_vv(rng, two_n, pr.second, 1, 2);
    r.check(vv_equal(fn_bracket(k, v), oracle_fn(k, v)),
            "differential bracket matches the oracle");
  }
}

void suite_reductions(Rng& rng, unsigned cases, SuiteRun& r) {
  for (unsigned t = 0; t < cases; ++t) {
    unsigned two_n = 2 * (1 + t % 2);
    PolyVec v = random_vector_field(rng, two_n, 2);
    PolyVec w = random_vector_field(rng, two_n, 2);
    PolyVec lie = lie_bracket(v, w);
    r.check(mv_equal(sn_bracket(vector_to_mv(v), vector_to_mv(w)),
                     vector_to_mv(lie)),
            "rank one schouten is the lie bracket");
    r.check(vv_equal(fn_bracket(vector_to_vv(v), vector_to_vv(w)),
                     vector_to_vv(lie)),
            "degree zero differential bracket is the lie bracket");
    VectorValuedForm id = identity_vv(two_n);
    r.check(nr_bracket(id, id).comps.empty(), "identity self bracket vanishes");
    unsigned deg = 1 + t % 2;
    VectorValuedForm k = random_vv(rng, two_n, deg, 2, 2);
    r.check(vv_equal(nr_bracket(id, k),
                     vv_scale(Scalar(static_cast<long>(deg) - 1), k)),
            "identity acts by degree minus one");
    DifferentialForm f = random_form(rng, two_n, 1 + t % two_n, 2, 2);
    r.check(form_equal(oracle_ik(vector_to_vv(v), f), oracle_interior(v, f)),
            "vector valued contraction reduces to the interior product");
  }
}

void suite_invariance(Rng& rng, unsigned cases, SuiteRun& r) {
  for (unsigned t = 0; t < cases; ++t) {
    unsigned n = 1 + t % 2;
    unsigned two_n = 2 * n;
    SymplecticContext ctx = SymplecticContext::standard(n);
    SuperPoly h = random_phi_poly(rng, two_n, 3, 3);
    PolyVec field = ctx.hamiltonian_vector_field(h);
    r.check(lie_derivative(field, charges(ctx).kappa).is_zero(),
            "hamiltonian flows preserve the symplectic charge");
  }
  SymplecticContext ctx1 = SymplecticContext::standard(1);
  PolyVec shear = {SuperPoly::phi(2, 1), SuperPoly::zero(2)};
  r.check(!lie_derivative(shear, charges(ctx1).kappa).is_zero(),
          "a shear flow does not preserve the symplectic charge");
}

void suite_round_trips(Rng& rng, unsigned cases, SuiteRun& r) {
  for (unsigned t = 0; t < cases; ++t) {
    unsigned two_n = 2 * (1 + t % 2);
    unsigned deg = t % (two_n + 1);
    DifferentialForm f = random_form(rng, two_n, deg, 2, 2);
    r.check(form_equal(decode_form(hat(f), deg), f), "form embedding round trip");
    Multivector v = random_mv(rng, two_n, deg, 2, 2);
    r.check(mv_equal(decode_mv(hat(v), deg), v),
            "multivector embedding round trip");
    VectorValuedForm k = random_vv(rng, two_n, std::min(deg, two_n - 1), 2, 2);
    r.check(vv_equal(decode_vv(hat(k), k.degree), k),
            "vector valued embedding round trip");
    SuperPoly p = random_superpoly(rng, two_n, 3, 3, 5);
    r.check(parse_poly(print_poly(p), two_n) == p, "print then parse round trip");
  }
  Rng wrng(rng.next());
  Workspace ws(SymplecticContext::standard(2));
  ws.bind("a", Value(random_superpoly(wrng, 4, 2, 3, 4)));
  ws.bind("b", Value(random_form(wrng, 4, 2, 2, 3)));
  ws.bind("d", Value(random_mv(wrng, 4, 1, 2, 2)));
  ws.bind("e", Value(random_vv(wrng, 4, 1, 2, 2)));
  std::string text = ws.save_text();
  r.check(Workspace::load_text(text).save_text() == text,
          "workspace save and load round trip");
}

struct SuiteDef {
  const char* name;
  void (*fn)(Rng&, unsigned, SuiteRun&);
};

const SuiteDef kSuites[] = {
    {"superalgebra-core", suite_superalgebra},
    {"poisson-structure", suite_poisson},
    {"fundamental-table", suite_fundamental},
    {"graded-axioms", suite_graded_axioms},
    {"charge-algebra", suite_charge_algebra},
    {"cartan-rules", suite_cartan},
    {"hamilton-consistency", suite_hamilton},
    {"degree-operator", suite_degree},
    {"musical-maps", suite_musical},
    {"transformation-laws", suite_transformation},
    {"liouvillian-transport", suite_liouvillian},
    {"calibration-stability", suite_calibration},
    {"lie-oracle", suite_lie_oracle},
    {"schouten-oracle", suite_sn_oracle},
    {"algebraic-oracle", suite_nr_oracle},
    {"differential-oracle", suite_fn_oracle},
    {"bracket-reductions", suite_reductions},
    {"symplectic-invariance", suite_invariance},
    {"round-trips", suite_round_trips},
};

} // namespace

unsigned VerifyReport::passed() const {
  unsigned total = 0;
  for (const auto& s : suites) total += s.passed;
  return total;
}

unsigned VerifyReport::failed() const {
  unsigned total = 0;
  for (const auto& s : suites) total += s.failed;
  return total;
}

VerifyReport run_verify(uint64_t seed, unsigned cases) {
  if (cases == 0) cases = 1;
  VerifyReport report;
  uint64_t idx = 0;
  for (const SuiteDef& def : kSuites) {
    ++idx;
    SuiteResult result;
    result.name = def.name;
    SuiteRun run{&result};
    Rng rng(seed * 0x9E3779B97F4A7C15ULL + idx);
    try {
      def.fn(rng, cases, run);
    } catch (const std::exception& e) {
      ++result.failed;
      if (result.note.empty()) result.note = std::string("aborted: ") + e.what();
    }
    report.suites.push_back(std::move(result));
  }
  return report;
}

std::string format_report(const VerifyReport& r) {
  std::ostringstream os;
  size_t width = 0;
  for (const auto& s : r.suites) width = std::max(width, s.name.size());
  for (const auto& s : r.suites) {
    os << std::left << std::setw(static_cast<int>(width) + 2) << s.name
       << std::right << std::setw(6) << s.passed << " passed" << std::setw(4)
       << s.failed << " failed";
    if (!s.note.empty()) os << "   [" << s.note << "]";
    os << "\n";
  }
  os << std::left << std::setw(static_cast<int>(width) + 2) << "total"
     << std::right << std::setw(6) << r.passed() << " passed" << std::setw(4)
     << r.failed() << " failed\n";
  os << (r.ok() ? "result: OK" : "result: FAILED") << "\n";
  return os.str();
}

} // namespace gc
