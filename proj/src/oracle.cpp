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

#include "oracle.hpp"

#include <algorithm>
#include <numeric>

#include "error.hpp"

namespace gc {

namespace {

void check_phi_only(const SuperPoly& p, const char* what) {
  if (!p.phi_only()) fail(Err::TypeMismatch, std::string(what) + " must be a phi-polynomial");
}

void check_vec(const PolyVec& v, unsigned two_n) {
  if (v.size() != two_n) fail(Err::Dimension, "vector field needs 2n components");
  for (auto& comp : v) {
    if (comp.two_n() != two_n) fail(Err::Dimension, "vector component dimension mismatch");
    check_phi_only(comp, "vector component");
  }
}

// Permutation sign by inversion count; tuples here are tiny.
int perm_sign(const std::vector<unsigned>& p) {
  int s = 1;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

} // namespace

int sort_tuple(IndexTuple& t) {
  int sign = 1;
  for (size_t n = t.size(); n > 1; --n)
    for (size_t i = 0; i + 1 < n; ++i)
      if (t[i] > t[i + 1]) {
        std::swap(t[i], t[i + 1]);
        sign = -sign;
      }
  for (size_t i = 0; i + 1 < t.size(); ++i)
    if (t[i] == t[i + 1]) return 0;
  return sign;
}

std::vector<IndexTuple> ascending_tuples(unsigned two_n, unsigned len) {
  std::vector<IndexTuple> out;
  if (len > two_n) return out;
  IndexTuple cur;
  cur.reserve(len);
  // depth-first enumeration in lexicographic order
  struct Rec {
    unsigned two_n, len;
    std::vector<IndexTuple>& out;
    IndexTuple& cur;
    void go(Index next) {
      if (cur.size() == len) {
        out.push_back(cur);
        return;
      }
      for (Index a = next; a + (len - cur.size()) <= two_n + 1; ++a) {
        cur.push_back(a);
        go(a + 1);
        cur.pop_back();
      }
    }
  } rec{two_n, len, out, cur};
  rec.go(1);
  return out;
}

void form_insert(DifferentialForm& f, IndexTuple t, const SuperPoly& coeff) {
  if (coeff.is_zero()) return;
  if (t.size() != f.degree) fail(Err::Internal, "tuple length != form degree");
  int s = sort_tuple(t);
  if (s == 0) return;
  auto it = f.comps.find(t);
  SuperPoly add = (s < 0) ? -coeff : coeff;
  if (it == f.comps.end()) {
    f.comps.emplace(std::move(t), std::move(add));
  } else {
    it->second += add;
    if (it->second.is_zero()) f.comps.erase(it);
  }
}

void mv_insert(Multivector& v, IndexTuple t, const SuperPoly& coeff) {
  if (coeff.is_zero()) return;
  if (t.size() != v.degree) fail(Err::Internal, "tuple length != multivector rank");
  int s = sort_tuple(t);
  if (s == 0) return;
  auto it = v.comps.find(t);
  SuperPoly add = (s < 0) ? -coeff : coeff;
  if (it == v.comps.end()) {
    v.comps.emplace(std::move(t), std::move(add));
  } else {
    it->second += add;
    if (it->second.is_zero()) v.comps.erase(it);
  }
}

void vv_insert(VectorValuedForm& k, Index i, IndexTuple t, const SuperPoly& coeff) {
  if (coeff.is_zero()) return;
  if (t.size() != k.degree) fail(Err::Internal, "tuple length != vv form degree");
  int s = sort_tuple(t);
  if (s == 0) return;
  auto key = std::make_pair(i, std::move(t));
  auto it = k.comps.find(key);
  SuperPoly add = (s < 0) ? -coeff : coeff;
  if (it == k.comps.end()) {
    k.comps.emplace(std::move(key), std::move(add));
  } else {
    it->second += add;
    if (it->second.is_zero()) k.comps.erase(it);
  }
}

namespace {

SuperPoly at_impl(const std::map<IndexTuple, SuperPoly>& comps, unsigned two_n,
                  IndexTuple t) {
  int s = sort_tuple(t);
  if (s == 0) return SuperPoly(two_n);
  auto it = comps.find(t);
  if (it == comps.end()) return SuperPoly(two_n);
  return (s < 0) ? -it->second : it->second;
}

} // namespace

SuperPoly form_at(const DifferentialForm& f, IndexTuple t) {
  return at_impl(f.comps, f.two_n, std::move(t));
}

SuperPoly mv_at(const Multivector& v, IndexTuple t) {
  return at_impl(v.comps, v.two_n, std::move(t));
}

SuperPoly vv_at(const VectorValuedForm& k, Index i, IndexTuple t) {
  int s = sort_tuple(t);
  if (s == 0) return SuperPoly(k.two_n);
  auto it = k.comps.find(std::make_pair(i, t));
  if (it == k.comps.end()) return SuperPoly(k.two_n);
  return (s < 0) ? -it->second : it->second;
}

// Zero tensors compare equal regardless of recorded degree.
bool form_equal(const DifferentialForm& a, const DifferentialForm& b) {
  if (a.comps.empty() && b.comps.empty()) return true;
  return a.two_n == b.two_n && a.degree == b.degree && a.comps == b.comps;
}

bool mv_equal(const Multivector& a, const Multivector& b) {
  if (a.comps.empty() && b.comps.empty()) return true;
  return a.two_n == b.two_n && a.degree == b.degree && a.comps == b.comps;
}

bool vv_equal(const VectorValuedForm& a, const VectorValuedForm& b) {
  if (a.comps.empty() && b.comps.empty()) return true;
  return a.two_n == b.two_n && a.degree == b.degree && a.comps == b.comps;
}

DifferentialForm form_add(const DifferentialForm& a, const DifferentialForm& b) {
  if (a.comps.empty()) return b;
  if (b.comps.empty()) return a;
  if (a.two_n != b.two_n || a.degree != b.degree)
    fail(Err::Dimension, "form degree/dimension mismatch in +");
  DifferentialForm r = a;
  for (auto& [t, p] : b.comps) form_insert(r, t, p);
  return r;
}

DifferentialForm form_sub(const DifferentialForm& a, const DifferentialForm& b) {
  DifferentialForm nb = b;
  for (auto& [t, p] : nb.comps) p = -p;
  return form_add(a, nb);
}

VectorValuedForm vv_scale(const Scalar& s, const VectorValuedForm& k) {
  VectorValuedForm r{k.two_n, k.degree, {}};
  if (s.is_zero()) return r;
  for (auto& [key, p] : k.comps) r.comps.emplace(key, s * p);
  return r;
}

Multivector mv_scale(const Scalar& s, const Multivector& v) {
  Multivector r{v.two_n, v.degree, {}};
  if (s.is_zero()) return r;
  for (auto& [key, p] : v.comps) r.comps.emplace(key, s * p);
  return r;
}

namespace {

template <typename T>
T wedge_impl(const T& a, const T& b) {
  if (a.two_n != b.two_n) fail(Err::Dimension, "dimension mismatch in wedge");
  T r{a.two_n, a.degree + b.degree, {}};
  if (r.degree > a.two_n) return r;
  for (auto& [s, f] : a.comps)
    for (auto& [t, g] : b.comps) {
      IndexTuple u = s;
      u.insert(u.end(), t.begin(), t.end());
      if constexpr (std::is_same_v<T, DifferentialForm>) {
        form_insert(r, std::move(u), f * g);
      } else {
        mv_insert(r, std::move(u), f * g);
      }
    }
  return r;
}

} // namespace

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
  return wedge_impl(a, b);
}

Multivector wedge(const Multivector& a, const Multivector& b) {
  return wedge_impl(a, b);
}

Multivector vector_to_mv(const PolyVec& v) {
  unsigned two_n = static_cast<unsigned>(v.size());
  check_vec(v, two_n);
  Multivector r{two_n, 1, {}};
  for (Index a = 1; a <= two_n; ++a) mv_insert(r, {a}, v[a - 1]);
  return r;
}

PolyVec mv_to_vector(const Multivector& v) {
  if (v.degree != 1) fail(Err::TypeMismatch, "expected a rank-1 multivector");
  PolyVec r(v.two_n, SuperPoly(v.two_n));
  for (auto& [t, p] : v.comps) r[t[0] - 1] = p;
  return r;
}

VectorValuedForm vector_to_vv(const PolyVec& v) {
  unsigned two_n = static_cast<unsigned>(v.size());
  check_vec(v, two_n);
  VectorValuedForm r{two_n, 0, {}};
  for (Index a = 1; a <= two_n; ++a)
    if (!v[a - 1].is_zero()) r.comps.emplace(std::make_pair(a, IndexTuple{}), v[a - 1]);
  return r;
}

PolyVec vv_to_vector(const VectorValuedForm& k) {
  if (k.degree != 0) fail(Err::TypeMismatch, "expected a degree-0 vector-valued form");
  PolyVec r(k.two_n, SuperPoly(k.two_n));
  for (auto& [key, p] : k.comps) r[key.first - 1] = p;
  return r;
}

DifferentialForm vv_component(const VectorValuedForm& k, Index i) {
  DifferentialForm r{k.two_n, k.degree, {}};
  for (auto& [key, p] : k.comps)
    if (key.first == i) r.comps.emplace(key.second, p);
  return r;
}

DifferentialForm oracle_d(const DifferentialForm& f) {
  DifferentialForm r{f.two_n, f.degree + 1, {}};
  if (r.degree > f.two_n) return r;
  for (auto& [t, p] : f.comps) {
    for (Index a = 1; a <= f.two_n; ++a) {
      SuperPoly dp = p.deriv_phi(a);
      if (dp.is_zero()) continue;
      IndexTuple u;
      u.reserve(t.size() + 1);
      u.push_back(a);
      u.insert(u.end(), t.begin(), t.end());
      form_insert(r, std::move(u), dp);
    }
  }
  return r;
}

DifferentialForm oracle_interior(const PolyVec& v, const DifferentialForm& f) {
  check_vec(v, f.two_n);
  if (f.degree == 0) return DifferentialForm{f.two_n, 0, {}};
  DifferentialForm r{f.two_n, f.degree - 1, {}};
  for (auto& [t, p] : f.comps) {
    // contract slot j: index t_j walks to the front with sign (-1)^j
    for (size_t j = 0; j < t.size(); ++j) {
      SuperPoly coeff = v[t[j] - 1] * p;
      if ((j % 2) != 0) coeff = -coeff;
      IndexTuple u;
      u.reserve(t.size() - 1);
      for (size_t m = 0; m < t.size(); ++m)
        if (m != j) u.push_back(t[m]);
      form_insert(r, std::move(u), coeff);
    }
  }
  return r;
}

DifferentialForm oracle_lie(const PolyVec& v, const DifferentialForm& f) {
  return form_add(oracle_interior(v, oracle_d(f)),
                  oracle_d(oracle_interior(v, f)));
}

Multivector oracle_lie(const PolyVec& v, const Multivector& p) {
  check_vec(v, p.two_n);
  Multivector r{p.two_n, p.degree, {}};
  for (const IndexTuple& t : ascending_tuples(p.two_n, p.degree)) {
    SuperPoly acc(p.two_n);
    SuperPoly pt = mv_at(p, t);
    for (Index b = 1; b <= p.two_n; ++b) {
      if (!pt.is_zero()) acc += v[b - 1] * pt.deriv_phi(b);
      // transformation term: each slot index is dragged along the flow
      for (size_t j = 0; j < t.size(); ++j) {
        SuperPoly dv = v[t[j] - 1].deriv_phi(b);
        if (dv.is_zero()) continue;
        IndexTuple u = t;
        u[j] = b;
        acc -= dv * mv_at(p, std::move(u));
      }
    }
    if (!acc.is_zero()) mv_insert(r, t, acc);
  }
  return r;
}

PolyVec oracle_lie_bracket(const PolyVec& v, const PolyVec& w) {
  unsigned two_n = static_cast<unsigned>(v.size());
  check_vec(v, two_n);
  check_vec(w, two_n);
  PolyVec r(two_n, SuperPoly(two_n));
  for (Index a = 1; a <= two_n; ++a) {
    SuperPoly acc(two_n);
    for (Index b = 1; b <= two_n; ++b)
      acc += v[b - 1] * w[a - 1].deriv_phi(b) - w[b - 1] * v[a - 1].deriv_phi(b);
    r[a - 1] = acc;
  }
  return r;
}

Multivector oracle_sn(const Multivector& p, const Multivector& q) {
  if (p.two_n != q.two_n) fail(Err::Dimension, "dimension mismatch in multivector bracket");
  const unsigned two_n = p.two_n;
  const unsigned rank = (p.degree + q.degree >= 1) ? p.degree + q.degree - 1 : 0;
  Multivector r{two_n, rank, {}};
  if (rank > two_n) return r;
  const bool outer_neg = (p.degree * q.degree) % 2 != 0;  // (-1)^{pq}
  for (auto& [t, g] : q.comps) {
    // decomposition: Y_1 = g * d_{t_1}, Y_j = d_{t_j} for j >= 2
    for (size_t jj = 0; jj < t.size(); ++jj) {
      // wedge of the remaining factors, in order
      Multivector rest{two_n, 0, {{IndexTuple{}, SuperPoly::constant(two_n, Scalar(1))}}};
      for (size_t m = 0; m < t.size(); ++m) {
        if (m == jj) continue;
        Multivector factor{two_n, 1, {}};
        mv_insert(factor, {t[m]}, m == 0 ? g : SuperPoly::constant(two_n, Scalar(1)));
        rest = wedge(rest, factor);
      }
      PolyVec yj(two_n, SuperPoly(two_n));
      yj[t[jj] - 1] = (jj == 0) ? g : SuperPoly::constant(two_n, Scalar(1));
      Multivector term = wedge(rest, oracle_lie(yj, p));
      int sign = (jj % 2 == 0) ? 1 : -1;  // (-1)^{J+1}, J = jj+1
      if (outer_neg) sign = -sign;
      for (auto& [u, coeff] : term.comps)
        mv_insert(r, u, sign < 0 ? -coeff : coeff);
    }
  }
  return r;
}

DifferentialForm oracle_ik(const VectorValuedForm& k, const DifferentialForm& theta) {
  if (k.two_n != theta.two_n) fail(Err::Dimension, "dimension mismatch in contraction");
  const unsigned two_n = k.two_n;
  const unsigned kap = k.degree;            // k+1 in the classical count
  const unsigned l = theta.degree;
  if (l == 0) return DifferentialForm{two_n, kap > 0 ? kap - 1 : 0, {}};
  const unsigned r_deg = kap + l - 1;       // (k+1)-1+l = k+l
  DifferentialForm r{two_n, r_deg, {}};
  if (r_deg > two_n) return r;

  // 1/((k+1)!(l-1)!)
  long fk = 1, fl = 1;
  for (unsigned i = 2; i <= kap; ++i) fk *= static_cast<long>(i);
  for (unsigned i = 2; i + 1 <= l; ++i) fl *= static_cast<long>(i);
  const Scalar norm = Scalar::rational(1, fk * fl);

  std::vector<unsigned> positions(r_deg);
  for (const IndexTuple& x : ascending_tuples(two_n, r_deg)) {
    SuperPoly acc(two_n);
    std::iota(positions.begin(), positions.end(), 0u);
    do {
      int sgn = perm_sign(positions);
      IndexTuple inner(positions.begin(), positions.begin() + kap);
      for (auto& pos : inner) pos = x[pos];
      IndexTuple outer;
      outer.reserve(1 + (r_deg - kap));
      outer.push_back(0);  // placeholder for the contracted index
      for (unsigned idx = kap; idx < r_deg; ++idx) outer.push_back(x[positions[idx]]);
      for (Index m = 1; m <= two_n; ++m) {
        SuperPoly km = vv_at(k, m, inner);
        if (km.is_zero()) continue;
        outer[0] = m;
        SuperPoly th = form_at(theta, outer);
        if (th.is_zero()) continue;
        SuperPoly prod = km * th;
        acc += (sgn < 0) ? -prod : prod;
      }
    } while (std::next_permutation(positions.begin(), positions.end()));
    if (!acc.is_zero()) form_insert(r, x, norm * acc);
  }
  return r;
}

DifferentialForm oracle_L(const VectorValuedForm& k, const DifferentialForm& theta) {
  // graded commutator with d: the d i_k term carries (-1)^k, which is what
  // makes L a derivation of degree k for odd k as well
  DifferentialForm a = oracle_ik(k, oracle_d(theta));
  DifferentialForm b = oracle_d(oracle_ik(k, theta));
  if (k.degree % 2 != 0) return form_sub(a, b);
  return form_add(a, b);
}

namespace {

// Graded commutator of generalized Lie derivatives applied to theta.
DifferentialForm lie_commutator(const VectorValuedForm& k, const VectorValuedForm& v,
                                const DifferentialForm& theta) {
  DifferentialForm kv = oracle_L(k, oracle_L(v, theta));
  DifferentialForm vk = oracle_L(v, oracle_L(k, theta));
  if ((k.degree * v.degree) % 2 != 0) return form_add(kv, vk);
  return form_sub(kv, vk);
}

} // namespace

VectorValuedForm oracle_fn(const VectorValuedForm& k, const VectorValuedForm& v) {
  if (k.two_n != v.two_n) fail(Err::Dimension, "dimension mismatch in vv bracket");
  const unsigned two_n = k.two_n;
  const unsigned r_deg = k.degree + v.degree;
  VectorValuedForm w{two_n, r_deg, {}};

  // L_W phi^m = i_W(dphi^m) = W^m, so coordinate probes read off the result.
  if (r_deg <= two_n) {
    for (Index m = 1; m <= two_n; ++m) {
      DifferentialForm probe{two_n, 0, {{IndexTuple{}, SuperPoly::phi(two_n, m)}}};
      DifferentialForm cm = lie_commutator(k, v, probe);
      for (auto& [t, p] : cm.comps) vv_insert(w, m, t, p);
    }
  }

  // Verify the implicit definition on monomial test forms f*dphi^T with
  // deg f <= 2; both sides are at most second order in f, so this span is
  // exact.  Any mismatch means no vector-valued form generates the commutator.
  std::vector<SuperPoly> span;
  span.push_back(SuperPoly::constant(two_n, Scalar(1)));
  for (Index a = 1; a <= two_n; ++a) span.push_back(SuperPoly::phi(two_n, a));
  for (Index a = 1; a <= two_n; ++a)
    for (Index b = a; b <= two_n; ++b)
      span.push_back(SuperPoly::phi(two_n, a) * SuperPoly::phi(two_n, b));
  for (unsigned deg = 0; deg <= two_n; ++deg) {
    for (const IndexTuple& t : ascending_tuples(two_n, deg)) {
      for (const SuperPoly& f : span) {
        DifferentialForm theta{two_n, deg, {}};
        form_insert(theta, t, f);
        DifferentialForm lhs = oracle_L(w, theta);
        DifferentialForm rhs = lie_commutator(k, v, theta);
        if (!form_equal(lhs, rhs))
          fail(Err::Solve, "no vector-valued form generates the Lie-derivative commutator");
      }
    }
  }
  return w;
}

VectorValuedForm oracle_nr(const VectorValuedForm& k, const VectorValuedForm& v) {
  if (k.two_n != v.two_n) fail(Err::Dimension, "dimension mismatch in vv bracket");
  const unsigned two_n = k.two_n;
  const unsigned r_deg = k.degree + v.degree >= 1 ? k.degree + v.degree - 1 : 0;
  VectorValuedForm r{two_n, r_deg, {}};
  if (r_deg > two_n) return r;
  // sign (-1)^{kl} with the classical k = degree-1 counting
  const bool swap_neg =
      ((static_cast<int>(k.degree) - 1) * (static_cast<int>(v.degree) - 1)) % 2 != 0;
  for (Index j = 1; j <= two_n; ++j) {
    DifferentialForm a = oracle_ik(k, vv_component(v, j));   // i_K acting on V^j
    DifferentialForm b = oracle_ik(v, vv_component(k, j));   // i_V acting on K^j
    DifferentialForm comp = swap_neg ? form_add(a, b) : form_sub(a, b);
    for (auto& [t, p] : comp.comps) vv_insert(r, j, t, p);
  }
  return r;
}

} // namespace gc
