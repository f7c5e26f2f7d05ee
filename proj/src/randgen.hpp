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

#include <cstdint>
#include <random>

#include "oracle.hpp"
#include "superpoly.hpp"

// Deterministic generators for random test objects.  Draws use plain modulo
// on mt19937_64 output so sequences are identical across platforms (the
// standard distributions are not portable).

namespace gc {

struct Rng {
  std::mt19937_64 g;
  explicit Rng(std::uint64_t seed) : g(seed) {}
  std::uint64_t next() { return g(); }
  unsigned below(unsigned m) { return m ? static_cast<unsigned>(g() % m) : 0; }
  Index index(unsigned two_n) { return static_cast<Index>(1 + below(two_n)); }
  // small nonzero rational, occasionally imaginary or half-integer
  Scalar coeff(bool allow_imag = true) {
    long num = static_cast<long>(1 + below(3));
    if (below(2)) num = -num;
    long den = (below(4) == 0) ? 2 : 1;
    mpq_class q(num, den);
    q.canonicalize();
    if (allow_imag && below(4) == 0) return Scalar(mpq_class(0), q);
    return Scalar(q);
  }
};

inline SuperPoly random_phi_poly(Rng& rng, unsigned two_n, unsigned max_deg,
                                 unsigned terms) {
  SuperPoly p(two_n);
  for (unsigned t = 0; t < terms; ++t) {
    SuperPoly m = SuperPoly::constant(two_n, rng.coeff(false));
    unsigned deg = rng.below(max_deg + 1);
    for (unsigned d = 0; d < deg; ++d) m = m * SuperPoly::phi(two_n, rng.index(two_n));
    p += m;
  }
  return p;
}

inline PolyVec random_vector_field(Rng& rng, unsigned two_n, unsigned max_deg) {
  PolyVec v(two_n, SuperPoly(two_n));
  for (Index a = 1; a <= two_n; ++a)
    if (rng.below(4) != 0) v[a - 1] = random_phi_poly(rng, two_n, max_deg, 1 + rng.below(2));
  return v;
}

inline SuperPoly random_superpoly(Rng& rng, unsigned two_n, unsigned max_phi_deg,
                                  unsigned max_grass, unsigned terms) {
  SuperPoly p(two_n);
  for (unsigned t = 0; t < terms; ++t) {
    SuperPoly m = SuperPoly::constant(two_n, rng.coeff());
    unsigned deg = rng.below(max_phi_deg + 1);
    for (unsigned d = 0; d < deg; ++d) {
      m = m * (rng.below(2) ? SuperPoly::phi(two_n, rng.index(two_n))
                            : SuperPoly::lam(two_n, rng.index(two_n)));
    }
    unsigned gr = rng.below(max_grass + 1);
    for (unsigned d = 0; d < gr; ++d) {
      m = m * (rng.below(2) ? SuperPoly::c(two_n, rng.index(two_n))
                            : SuperPoly::cb(two_n, rng.index(two_n)));
    }
    p += m;
  }
  return p;
}

// Random nonzero polynomial of homogeneous parity (not necessarily of
// homogeneous ghost number).
inline SuperPoly random_homogeneous(Rng& rng, unsigned two_n, int parity) {
  for (int tries = 0; tries < 32; ++tries) {
    SuperPoly p = random_superpoly(rng, two_n, 2, 3, 3);
    SuperPoly part = parity ? p.odd_part() : p.even_part();
    if (!part.is_zero()) return part;
  }
  // fall back to a bare generator of the requested parity
  return parity ? SuperPoly::c(two_n, 1)
                : SuperPoly::constant(two_n, Scalar(1));
}

inline DifferentialForm random_form(Rng& rng, unsigned two_n, unsigned degree,
                                    unsigned max_deg, unsigned entries) {
  DifferentialForm f{two_n, degree, {}};
  auto tuples = ascending_tuples(two_n, degree);
  if (tuples.empty()) return f;
  for (unsigned e = 0; e < entries; ++e)
    form_insert(f, tuples[rng.below(static_cast<unsigned>(tuples.size()))],
                random_phi_poly(rng, two_n, max_deg, 1 + rng.below(2)));
  return f;
}

inline Multivector random_mv(Rng& rng, unsigned two_n, unsigned degree,
                             unsigned max_deg, unsigned entries) {
  Multivector v{two_n, degree, {}};
  auto tuples = ascending_tuples(two_n, degree);
  if (tuples.empty()) return v;
  for (unsigned e = 0; e < entries; ++e)
    mv_insert(v, tuples[rng.below(static_cast<unsigned>(tuples.size()))],
              random_phi_poly(rng, two_n, max_deg, 1 + rng.below(2)));
  return v;
}

inline VectorValuedForm random_vv(Rng& rng, unsigned two_n, unsigned degree,
                                  unsigned max_deg, unsigned entries) {
  VectorValuedForm k{two_n, degree, {}};
  auto tuples = ascending_tuples(two_n, degree);
  if (tuples.empty()) return k;
  for (unsigned e = 0; e < entries; ++e)
    vv_insert(k, rng.index(two_n),
              tuples[rng.below(static_cast<unsigned>(tuples.size()))],
              random_phi_poly(rng, two_n, max_deg, 1 + rng.below(2)));
  return k;
}

} // namespace gc
