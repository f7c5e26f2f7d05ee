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

#include "superpoly.hpp"

#include <algorithm>

#include "error.hpp"

namespace gc {

namespace {

// Merges two ascending exponent lists, adding exponents on equal indices.
std::vector<std::pair<Index, unsigned>> merge_even(
    const std::vector<std::pair<Index, unsigned>>& a,
    const std::vector<std::pair<Index, unsigned>>& b) {
  std::vector<std::pair<Index, unsigned>> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) out.push_back(a[i++]);
    else if (b[j].first < a[i].first) out.push_back(b[j++]);
    else { out.emplace_back(a[i].first, a[i].second + b[j].second); ++i; ++j; }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return out;
}

// Merges two strictly ascending odd-index lists.  Returns false on a repeated
// index (the product vanishes); otherwise counts the transpositions needed to
// interleave b into a and reports their parity through `sign`.
bool merge_odd(const std::vector<Index>& a, const std::vector<Index>& b,
               std::vector<Index>& out, int& sign) {
  out.clear();
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  unsigned swaps = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else if (b[j] < a[i]) {
      // b[j] crosses the remaining a-elements to its left position
      swaps += static_cast<unsigned>(a.size() - i);
      out.push_back(b[j++]);
    } else {
      return false;
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  if (swaps % 2) sign = -sign;
  return true;
}

} // namespace

void SuperPoly::check_index(Index a) const {
  if (a < 1 || a > two_n_) fail(Err::Index, "generator index out of range");
}

SuperPoly SuperPoly::constant(unsigned two_n, const Scalar& s) {
  SuperPoly p(two_n);
  p.add_term(Monomial{}, s);
  return p;
}

SuperPoly SuperPoly::phi(unsigned two_n, Index a) {
  SuperPoly p(two_n);
  p.check_index(a);
  Monomial m;
  m.phi = {{a, 1}};
  p.add_term(m, Scalar(1));
  return p;
}

SuperPoly SuperPoly::lam(unsigned two_n, Index a) {
  SuperPoly p(two_n);
  p.check_index(a);
  Monomial m;
  m.lam = {{a, 1}};
  p.add_term(m, Scalar(1));
  return p;
}

SuperPoly SuperPoly::c(unsigned two_n, Index a) {
  SuperPoly p(two_n);
  p.check_index(a);
  Monomial m;
  m.c = {a};
  p.add_term(m, Scalar(1));
  return p;
}

SuperPoly SuperPoly::cb(unsigned two_n, Index a) {
  SuperPoly p(two_n);
  p.check_index(a);
  Monomial m;
  m.cb = {a};
  p.add_term(m, Scalar(1));
  return p;
}

void SuperPoly::add_term(const Monomial& m, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SuperPoly SuperPoly::operator-() const {
  SuperPoly r(two_n_);
  for (auto& [m, s] : terms_) r.terms_.emplace(m, -s);
  return r;
}

SuperPoly& SuperPoly::operator+=(const SuperPoly& o) {
  if (two_n_ != o.two_n_) fail(Err::Dimension, "dimension mismatch in +");
  for (auto& [m, s] : o.terms_) add_term(m, s);
  return *this;
}

SuperPoly& SuperPoly::operator-=(const SuperPoly& o) {
  if (two_n_ != o.two_n_) fail(Err::Dimension, "dimension mismatch in -");
  for (auto& [m, s] : o.terms_) add_term(m, -s);
  return *this;
}

SuperPoly operator+(const SuperPoly& a, const SuperPoly& b) {
  SuperPoly r = a;
  r += b;
  return r;
}

SuperPoly operator-(const SuperPoly& a, const SuperPoly& b) {
  SuperPoly r = a;
  r -= b;
  return r;
}

SuperPoly operator*(const Scalar& s, const SuperPoly& a) {
  SuperPoly r(a.two_n_);
  if (s.is_zero()) return r;
  for (auto& [m, cs] : a.terms_) r.terms_.emplace(m, s * cs);
  return r;
}

SuperPoly operator*(const SuperPoly& a, const SuperPoly& b) {
  if (a.two_n_ != b.two_n_) fail(Err::Dimension, "dimension mismatch in *");
  SuperPoly r(a.two_n_);
  std::vector<Index> mc, mcb;
  for (auto& [ma, sa] : a.terms_) {
    for (auto& [mb, sb] : b.terms_) {
      int sign = 1;
      // b's c-block first moves left across a's cb-block.
      if ((ma.cb.size() * mb.c.size()) % 2) sign = -sign;
      if (!merge_odd(ma.c, mb.c, mc, sign)) continue;
      if (!merge_odd(ma.cb, mb.cb, mcb, sign)) continue;
      Monomial m;
      m.phi = merge_even(ma.phi, mb.phi);
      m.lam = merge_even(ma.lam, mb.lam);
      m.c = mc;
      m.cb = mcb;
      Scalar coeff = sa * sb;
      if (sign < 0) coeff = -coeff;
      r.add_term(m, coeff);
    }
  }
  return r;
}

SuperPoly SuperPoly::pow(unsigned e) const {
  if (e == 0) return constant(two_n_, Scalar(1));
  if (e >= 2) {
    Grade g = grade();
    if (!g.parity || *g.parity != 0)
      fail(Err::OddPower, "power >= 2 of an odd quantity");
  }
  SuperPoly r = *this;
  for (unsigned k = 1; k < e; ++k) r = r * *this;
  return r;
}

namespace {

SuperPoly deriv_even(const SuperPoly& p, Index a, bool wrt_phi) {
  SuperPoly r(p.two_n());
  for (auto& [m, s] : p.terms()) {
    const auto& list = wrt_phi ? m.phi : m.lam;
    auto it = std::find_if(list.begin(), list.end(),
                           [a](auto& pe) { return pe.first == a; });
    if (it == list.end()) continue;
    Monomial d = m;
    auto& dl = wrt_phi ? d.phi : d.lam;
    size_t pos = static_cast<size_t>(it - list.begin());
    unsigned e = it->second;
    if (e == 1) dl.erase(dl.begin() + static_cast<long>(pos));
    else dl[pos].second = e - 1;
    r.add_term(d, Scalar(static_cast<long>(e)) * s);
  }
  return r;
}

} // namespace

SuperPoly SuperPoly::deriv_phi(Index a) const {
  check_index(a);
  return deriv_even(*this, a, true);
}

SuperPoly SuperPoly::deriv_lam(Index a) const {
  check_index(a);
  return deriv_even(*this, a, false);
}

SuperPoly SuperPoly::deriv_c(Index a) const {
  check_index(a);
  SuperPoly r(two_n_);
  for (auto& [m, s] : terms_) {
    auto it = std::find(m.c.begin(), m.c.end(), a);
    if (it == m.c.end()) continue;
    // left derivative: c^a walks past the preceding c-factors
    size_t pos = static_cast<size_t>(it - m.c.begin());
    Monomial d = m;
    d.c.erase(d.c.begin() + static_cast<long>(pos));
    r.add_term(d, (pos % 2) ? -s : s);
  }
  return r;
}

SuperPoly SuperPoly::deriv_cb(Index a) const {
  check_index(a);
  SuperPoly r(two_n_);
  for (auto& [m, s] : terms_) {
    auto it = std::find(m.cb.begin(), m.cb.end(), a);
    if (it == m.cb.end()) continue;
    // left derivative: cb_a walks past every c-factor and the preceding cb's
    size_t pos = m.c.size() + static_cast<size_t>(it - m.cb.begin());
    Monomial d = m;
    d.cb.erase(d.cb.begin() + static_cast<long>(it - m.cb.begin()));
    r.add_term(d, (pos % 2) ? -s : s);
  }
  return r;
}

Grade SuperPoly::grade() const {
  Grade g;
  bool first = true;
  for (auto& [m, s] : terms_) {
    if (first) {
      g.parity = m.parity();
      g.ghost = m.ghost();
      first = false;
      continue;
    }
    if (g.parity && *g.parity != m.parity()) g.parity.reset();
    if (g.ghost && *g.ghost != m.ghost()) g.ghost.reset();
  }
  if (first) {  // zero polynomial: every grade at once; report even, ghost 0
    g.parity = 0;
    g.ghost = 0;
  }
  return g;
}

SuperPoly SuperPoly::even_part() const {
  SuperPoly r(two_n_);
  for (auto& [m, s] : terms_)
    if (m.parity() == 0) r.terms_.emplace(m, s);
  return r;
}

SuperPoly SuperPoly::odd_part() const {
  SuperPoly r(two_n_);
  for (auto& [m, s] : terms_)
    if (m.parity() == 1) r.terms_.emplace(m, s);
  return r;
}

SuperPoly SuperPoly::parity_involution() const {
  SuperPoly r(two_n_);
  for (auto& [m, s] : terms_) r.terms_.emplace(m, m.parity() ? -s : s);
  return r;
}

bool SuperPoly::phi_only() const {
  for (auto& [m, s] : terms_)
    if (!m.c.empty() || !m.cb.empty() || !m.lam.empty()) return false;
  return true;
}

bool SuperPoly::contains_lam() const {
  for (auto& [m, s] : terms_)
    if (!m.lam.empty()) return true;
  return false;
}

bool SuperPoly::contains_c() const {
  for (auto& [m, s] : terms_)
    if (!m.c.empty()) return true;
  return false;
}

bool SuperPoly::contains_cb() const {
  for (auto& [m, s] : terms_)
    if (!m.cb.empty()) return true;
  return false;
}

} // namespace gc
