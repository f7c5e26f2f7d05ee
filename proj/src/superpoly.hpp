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

#include <compare>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace gc {

using Index = unsigned;  // generator index, 1-based, 1..2n

// One canonically ordered word  phi^e... * c... * cb... * lam^e...
// phi/lam: sparse exponent lists, ascending index, exponents >= 1.
// c/cb: strictly ascending index lists (odd generators square to zero).
struct Monomial {
  std::vector<std::pair<Index, unsigned>> phi;
  std::vector<Index> c;
  std::vector<Index> cb;
  std::vector<std::pair<Index, unsigned>> lam;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  unsigned grassmann_degree() const {
    return static_cast<unsigned>(c.size() + cb.size());
  }
  int parity() const { return static_cast<int>(grassmann_degree() % 2); }
  long ghost() const {
    return static_cast<long>(c.size()) - static_cast<long>(cb.size());
  }
  unsigned phi_degree() const {
    unsigned d = 0;
    for (auto& [i, e] : phi) d += e;
    return d;
  }
  bool is_unit() const { return phi.empty() && c.empty() && cb.empty() && lam.empty(); }
};

// Both components absent means the polynomial mixes terms of unequal grade.
struct Grade {
  std::optional<int> parity;   // 0 even, 1 odd
  std::optional<long> ghost;   // #c - #cb

  friend bool operator==(const Grade&, const Grade&) = default;
};

// Element of the free graded-commutative algebra on phi^a, lam_a (even) and
// c^a, cb_a (odd), a = 1..2n, with exact Gaussian-rational coefficients.
// Stored as canonical monomial -> nonzero coefficient.
class SuperPoly {
 public:
  SuperPoly() : two_n_(0) {}
  explicit SuperPoly(unsigned two_n) : two_n_(two_n) {}

  static SuperPoly zero(unsigned two_n) { return SuperPoly(two_n); }
  static SuperPoly constant(unsigned two_n, const Scalar& s);
  static SuperPoly phi(unsigned two_n, Index a);
  static SuperPoly lam(unsigned two_n, Index a);
  static SuperPoly c(unsigned two_n, Index a);
  static SuperPoly cb(unsigned two_n, Index a);

  unsigned two_n() const { return two_n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }

  // Inserts coeff * m, canonicalizing away zero coefficients.
  void add_term(const Monomial& m, const Scalar& coeff);

  SuperPoly operator-() const;
  friend SuperPoly operator+(const SuperPoly& a, const SuperPoly& b);
  friend SuperPoly operator-(const SuperPoly& a, const SuperPoly& b);
  friend SuperPoly operator*(const SuperPoly& a, const SuperPoly& b);
  friend SuperPoly operator*(const Scalar& s, const SuperPoly& a);
  friend SuperPoly operator*(const SuperPoly& a, const Scalar& s) { return s * a; }
  SuperPoly& operator+=(const SuperPoly& o);
  SuperPoly& operator-=(const SuperPoly& o);

  friend bool operator==(const SuperPoly& a, const SuperPoly& b) {
    return a.two_n_ == b.two_n_ && a.terms_ == b.terms_;
  }

  // Throws OddPower for e >= 2 on a polynomial with odd terms.
  SuperPoly pow(unsigned e) const;

  // d/dphi^a and d/dlam_a (even, ordinary); left derivatives for c^a, cb_a.
  SuperPoly deriv_phi(Index a) const;
  SuperPoly deriv_lam(Index a) const;
  SuperPoly deriv_c(Index a) const;
  SuperPoly deriv_cb(Index a) const;

  Grade grade() const;
  SuperPoly even_part() const;
  SuperPoly odd_part() const;
  // Sends each monomial m to (-1)^{parity(m)} m.
  SuperPoly parity_involution() const;

  bool phi_only() const;          // no c, cb, lam content
  bool contains_lam() const;
  bool contains_c() const;
  bool contains_cb() const;

 private:
  void check_index(Index a) const;
  unsigned two_n_;
  std::map<Monomial, Scalar> terms_;
};

// Plain vector of 2n coefficient polynomials, component a stored at [a-1].
using PolyVec = std::vector<SuperPoly>;

} // namespace gc
