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

#include "epb.hpp"
#include "error.hpp"
#include "randgen.hpp"
#include "textio.hpp"
#include "workspace.hpp"

using namespace gc;

namespace {

template <typename F>
void expect_err(Err code, F&& f) {
  try {
    f();
    FAIL_CHECK("expected an error");
  } catch (const Error& e) {
    CHECK(e.code == code);
  }
}

} // namespace

TEST_CASE("charge polynomials print to their canonical strings") {
  SymplecticContext ctx = SymplecticContext::standard(1);
  ChargeSet ch = charges(ctx);
  CHECK(print_poly(ch.q) == "I*c1*l1 + I*c2*l2");
  CHECK(print_poly(ch.qbar) == "I*cb1*l2 - I*cb2*l1");
  CHECK(print_poly(ch.qg) == "c1*cb1 + c2*cb2");
  CHECK(print_poly(ch.kappa) == "-c1*c2");
  CHECK(print_poly(ch.kappa_bar) == "cb1*cb2");
}

TEST_CASE("exterior derivative of phi1*phi2 prints with factors in order") {
  SuperPoly f = SuperPoly::phi(2, 1) * SuperPoly::phi(2, 2);
  CHECK(print_poly(ext_d(f)) == "phi2*c1 + phi1*c2");
}

TEST_CASE("scalar rendering") {
  CHECK(print_scalar(Scalar(0)) == "0");
  CHECK(print_scalar(Scalar(1)) == "1");
  CHECK(print_scalar(Scalar(-1)) == "-1");
  CHECK(print_scalar(Scalar::rational(3, 2)) == "3/2");
  CHECK(print_scalar(Scalar::rational(-3, 2)) == "-3/2");
  CHECK(print_scalar(Scalar::i()) == "I");
  CHECK(print_scalar(-Scalar::i()) == "-I");
  CHECK(print_scalar(Scalar::rational(3, 2) * Scalar::i()) == "3/2*I");
  CHECK(print_scalar(Scalar(mpq_class(1, 2), mpq_class(-3))) == "(1/2 - 3*I)");
  CHECK(print_scalar(Scalar(mpq_class(-1), mpq_class(1))) == "(-1 + I)");
}

TEST_CASE("parsing basics and precedence") {
  unsigned two_n = 2;
  CHECK(parse_poly("phi1", two_n) == SuperPoly::phi(two_n, 1));
  CHECK(parse_poly("3/2", two_n) ==
        SuperPoly::constant(two_n, Scalar::rational(3, 2)));
  CHECK(parse_poly("3/2*I", two_n) ==
        SuperPoly::constant(two_n, Scalar::rational(3, 2) * Scalar::i()));
  CHECK(parse_poly("-phi1^2", two_n) == -SuperPoly::phi(two_n, 1).pow(2));
  CHECK(parse_poly("(phi1 + phi2)^2", two_n) ==
        (SuperPoly::phi(two_n, 1) + SuperPoly::phi(two_n, 2)).pow(2));
  CHECK(parse_poly("(phi1^2 + phi2^2)/2", two_n) ==
        Scalar::rational(1, 2) *
            (SuperPoly::phi(two_n, 1).pow(2) + SuperPoly::phi(two_n, 2).pow(2)));
  CHECK(parse_poly("phi1/2/3", two_n) ==
        Scalar::rational(1, 6) * SuperPoly::phi(two_n, 1));
  CHECK(parse_poly("2 - 3", two_n) == SuperPoly::constant(two_n, Scalar(-1)));
  CHECK(parse_poly("--phi1", two_n) == SuperPoly::phi(two_n, 1));
  CHECK(parse_poly("phi1 - -phi2", two_n) ==
        SuperPoly::phi(two_n, 1) + SuperPoly::phi(two_n, 2));
  CHECK(parse_poly("c1^0", two_n) == SuperPoly::constant(two_n, Scalar(1)));
  CHECK(parse_poly(" phi1 \n + phi2 ", two_n) ==
        SuperPoly::phi(two_n, 1) + SuperPoly::phi(two_n, 2));
}

TEST_CASE("odd reordering picks up the sign") {
  CHECK(print_poly(parse_poly("c2*c1", 2)) == "-c1*c2");
  CHECK(print_poly(parse_poly("cb1*c1", 2)) == "-c1*cb1");
  CHECK(print_poly(parse_poly("l1*phi1", 2)) == "phi1*l1");
}

TEST_CASE("parse errors carry a position and the right code") {
  expect_err(Err::OddPower, [] { parse_poly("c1^2", 2); });
  expect_err(Err::OddPower, [] { parse_poly("cb2^3", 2); });
  expect_err(Err::OddPower, [] { parse_poly("(c1 + cb1)^2", 2); });
  expect_err(Err::Index, [] { parse_poly("phi3", 2); });
  expect_err(Err::Index, [] { parse_poly("l0", 2); });
  expect_err(Err::UnboundName, [] { parse_poly("mystery", 2); });
  expect_err(Err::Parse, [] { parse_poly("phi1 +", 2); });
  expect_err(Err::Parse, [] { parse_poly("(phi1", 2); });
  expect_err(Err::Parse, [] { parse_poly("phi1 phi2", 2); });
  expect_err(Err::Parse, [] { parse_poly("2/0", 2); });
  expect_err(Err::Parse, [] { parse_poly("phi1/phi2", 2); });
  expect_err(Err::Parse, [] { parse_poly("phi1 $ phi2", 2); });
  expect_err(Err::Parse, [] { parse_poly("", 2); });
  try {
    parse_poly("phi1 + $", 2);
    FAIL_CHECK("expected parse error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("column 8") != std::string::npos);
  }
}

TEST_CASE("name lookup resolves and reserved words never bind") {
  SuperPoly h = SuperPoly::phi(2, 1).pow(2);
  NameLookup names = [&](const std::string& s) -> std::optional<SuperPoly> {
    if (s == "H") return h;
    return std::nullopt;
  };
  CHECK(parse_poly("2*H + phi2", 2, names) ==
        Scalar(2) * h + SuperPoly::phi(2, 2));
  CHECK(is_reserved_word("I"));
  CHECK(is_reserved_word("phi12"));
  CHECK(is_reserved_word("cb3"));
  CHECK(is_reserved_word("l1"));
  CHECK(is_reserved_word("form"));
  CHECK(is_reserved_word("let"));
  CHECK(!is_reserved_word("x"));
  CHECK(!is_reserved_word("cb"));
  CHECK(!is_reserved_word("phi"));
  CHECK(!is_reserved_word("H2"));
}

TEST_CASE("print then parse is the identity on polynomials") {
  for (unsigned n = 1; n <= 2; ++n) {
    unsigned two_n = 2 * n;
    Rng rng(860 + n);
    for (int trial = 0; trial < 40; ++trial) {
      SuperPoly p = random_superpoly(rng, two_n, 3, 4, 6);
      SuperPoly back = parse_poly(print_poly(p), two_n);
      CHECK(back == p);
    }
  }
  CHECK(parse_poly("0", 2) == SuperPoly::zero(2));
  CHECK(print_poly(SuperPoly::zero(2)) == "0");
}

TEST_CASE("printing is idempotent through a parse") {
  const char* samples[] = {
      "I*c1*l1 + I*c2*l2",
      "I*cb1*l2 - I*cb2*l1",
      "c1*cb1 + c2*cb2",
      "-c1*c2",
      "cb1*cb2",
      "phi2*c1 + phi1*c2",
      "(1/2 - 3*I)*c1*l2",
      "-2*phi2 + 1/2*phi1^2*l1^2",
      "-1",
      "I",
  };
  for (const char* s : samples) {
    CHECK(print_poly(parse_poly(s, 2)) == s);
  }
}

TEST_CASE("term order sorts by grassmann degree then phi degree") {
  SuperPoly p = SuperPoly::c(2, 1) * SuperPoly::c(2, 2) +
                SuperPoly::phi(2, 1) + SuperPoly::lam(2, 1) +
                SuperPoly::constant(2, Scalar(5)) + SuperPoly::c(2, 2);
  CHECK(print_poly(p) == "5 + l1 + phi1 + c2 + c1*c2");
}

TEST_CASE("workspace loads the documented example") {
  std::string text =
      "gradedcartan-v1\n"
      "# sample document\n"
      "dim 1\n"
      "\n"
      "let H := (phi1^2 + phi2^2)/2\n"
      "let F := phi1*phi2\n"
      "let G := form(1){(1): phi2, (2): phi1}\n"
      "let V := mvec(1){(1): phi2, (2): -phi1}\n"
      "let K := vvform(1){1|(1): phi1}\n"
      "let S := H + I*F\n";
  Workspace ws = Workspace::load_text(text);
  CHECK(ws.two_n() == 2);
  CHECK(ws.context().is_standard());
  CHECK(ws.bindings().size() == 6);

  SuperPoly h = ws.eval("H");
  CHECK(h == Scalar::rational(1, 2) * (SuperPoly::phi(2, 1).pow(2) +
                                       SuperPoly::phi(2, 2).pow(2)));
  CHECK(print_poly(ext_d(ws.eval("F"))) == "phi2*c1 + phi1*c2");

  const Value* g = ws.find("G");
  REQUIRE(g != nullptr);
  auto* gf = std::get_if<DifferentialForm>(g);
  REQUIRE(gf != nullptr);
  CHECK(gf->degree == 1);
  CHECK(form_at(*gf, {1}) == SuperPoly::phi(2, 2));

  PolyVec v = resolve_vector(ws, "V");
  CHECK(v[0] == SuperPoly::phi(2, 2));
  CHECK(v[1] == -SuperPoly::phi(2, 1));

  VectorValuedForm k = resolve_vv(ws, "K");
  CHECK(k.degree == 1);
  CHECK(vv_at(k, 1, {1}) == SuperPoly::phi(2, 1));

  CHECK(ws.eval("S") == h + Scalar::i() * ws.eval("F"));

  // CRLF input loads to the same state.
  std::string crlf;
  for (char c : text) {
    if (c == '\n') crlf += "\r\n";
    else crlf += c;
  }
  Workspace ws2 = Workspace::load_text(crlf);
  CHECK(ws2.save_text() == ws.save_text());
}

TEST_CASE("save then load is the identity") {
  Rng rng(871);
  Workspace ws(SymplecticContext::standard(2));
  ws.bind("p1", Value(random_superpoly(rng, 4, 3, 3, 5)));
  ws.bind("p2", Value(random_superpoly(rng, 4, 2, 4, 6)));
  ws.bind("f1", Value(random_form(rng, 4, 2, 2, 3)));
  ws.bind("f2", Value(random_form(rng, 4, 1, 3, 2)));
  ws.bind("m1", Value(random_mv(rng, 4, 2, 2, 3)));
  ws.bind("m2", Value(random_mv(rng, 4, 1, 2, 2)));
  ws.bind("k1", Value(random_vv(rng, 4, 1, 2, 3)));
  ws.bind("k2", Value(random_vv(rng, 4, 2, 1, 2)));
  ws.bind("zero", Value(SuperPoly::zero(4)));
  ws.bind("emptyform", Value(DifferentialForm{4, 2, {}}));

  std::string text = ws.save_text();
  Workspace back = Workspace::load_text(text);
  CHECK(back.save_text() == text);
  CHECK(back.bindings().size() == ws.bindings().size());
  for (const auto& [name, v] : ws.bindings()) {
    auto a = ws.lookup()(name);
    auto b = back.lookup()(name);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(*a == *b);
  }
}

TEST_CASE("custom omega survives the round trip") {
  Matrix up = {{Scalar(0), Scalar(2)}, {Scalar(-2), Scalar(0)}};
  Workspace ws(SymplecticContext::with_omega_upper(1, up));
  ws.bind("H", Value(SuperPoly::phi(2, 1) * SuperPoly::phi(2, 2)));
  std::string text = ws.save_text();
  CHECK(text.find("omega rows") != std::string::npos);
  Workspace back = Workspace::load_text(text);
  CHECK(!back.context().is_standard());
  CHECK(back.context().omega_upper(1, 2) == Scalar(2));
  CHECK(back.context().omega_lower(1, 2) == Scalar::rational(-1, 2));
  CHECK(back.save_text() == text);
}

TEST_CASE("omega rows parse rational and negative entries") {
  std::string text =
      "gradedcartan-v1\n"
      "dim 1\n"
      "omega rows\n"
      "0 3/2\n"
      "-3/2 0\n"
      "let H := phi1\n";
  Workspace ws = Workspace::load_text(text);
  CHECK(ws.context().omega_upper(1, 2) == Scalar::rational(3, 2));
  CHECK(ws.context().omega_upper(2, 1) == Scalar::rational(-3, 2));
}

TEST_CASE("tensor literals canonicalize tuple order with signs") {
  std::string text =
      "gradedcartan-v1\n"
      "dim 1\n"
      "let F := form(2){(2,1): phi1}\n"
      "let Z := form(2){(1,1): phi1}\n";
  Workspace ws = Workspace::load_text(text);
  auto* f = std::get_if<DifferentialForm>(ws.find("F"));
  REQUIRE(f != nullptr);
  CHECK(form_at(*f, {1, 2}) == -SuperPoly::phi(2, 1));
  auto* z = std::get_if<DifferentialForm>(ws.find("Z"));
  REQUIRE(z != nullptr);
  CHECK(z->comps.empty());
}

TEST_CASE("workspace format errors") {
  expect_err(Err::Version, [] { Workspace::load_text("nonsense\ndim 1\n"); });
  expect_err(Err::Version, [] { Workspace::load_text(""); });
  expect_err(Err::Parse, [] { Workspace::load_text("gradedcartan-v1\n"); });
  expect_err(Err::Parse, [] {
    Workspace::load_text("gradedcartan-v1\nlet x := 1\n");
  });
  expect_err(Err::Parse, [] {
    Workspace::load_text("gradedcartan-v1\ndim 1\ndim 1\n");
  });
  expect_err(Err::Parse, [] {
    Workspace::load_text("gradedcartan-v1\ndim 1\nlet a := 1\nomega standard\n");
  });
  expect_err(Err::DuplicateName, [] {
    Workspace::load_text("gradedcartan-v1\ndim 1\nlet a := 1\nlet a := 2\n");
  });
  expect_err(Err::UnboundName, [] {
    Workspace::load_text("gradedcartan-v1\ndim 1\nlet a := b\nlet b := 1\n");
  });
  expect_err(Err::Parse, [] {
    Workspace::load_text("gradedcartan-v1\ndim 1\nlet form := 1\n");
  });
  expect_err(Err::Parse, [] {
    Workspace::load_text("gradedcartan-v1\ndim 1\nwhatever 3\n");
  });
  expect_err(Err::Omega, [] {
    Workspace::load_text("gradedcartan-v1\ndim 1\nomega rows\n0 1\n1 0\n");
  });
  expect_err(Err::Omega, [] {
    Workspace::load_text("gradedcartan-v1\ndim 1\nomega rows\n0 0\n0 0\n");
  });
  expect_err(Err::Parse, [] {
    Workspace::load_text("gradedcartan-v1\ndim 1\nomega rows\n0 1\n");
  });
  expect_err(Err::TypeMismatch, [] {
    Workspace::load_text("gradedcartan-v1\ndim 1\nlet F := form(2){(1): phi1}\n");
  });
  expect_err(Err::TypeMismatch, [] {
    Workspace::load_text("gradedcartan-v1\ndim 1\nlet F := form(1){(1): c1}\n");
  });
  expect_err(Err::Index, [] {
    Workspace::load_text("gradedcartan-v1\ndim 1\nlet F := form(1){(3): phi1}\n");
  });
  expect_err(Err::Index, [] {
    Workspace::load_text("gradedcartan-v1\ndim 1\nlet K := vvform(0){5|(): 1}\n");
  });
  try {
    Workspace::load_text("gradedcartan-v1\ndim 1\nlet a := phi1 +\n");
    FAIL_CHECK("expected parse error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("argument resolution accepts names and expressions") {
  std::string text =
      "gradedcartan-v1\n"
      "dim 1\n"
      "let V := mvec(1){(1): phi2, (2): -phi1}\n"
      "let F := form(1){(1): phi1}\n";
  Workspace ws = Workspace::load_text(text);

  PolyVec v1 = resolve_vector(ws, "V");
  PolyVec v2 = resolve_vector(ws, "phi2*cb1 - phi1*cb2");
  CHECK(v1[0] == v2[0]);
  CHECK(v1[1] == v2[1]);

  DifferentialForm f1 = resolve_form(ws, "F");
  DifferentialForm f2 = resolve_form(ws, "phi1*c1");
  CHECK(form_equal(f1, f2));

  // A 0-form given as a plain polynomial expression.
  DifferentialForm f0 = resolve_form(ws, "phi1^2");
  CHECK(f0.degree == 0);

  // Vector-field names feed vector-valued slots through the embedding.
  VectorValuedForm kv = resolve_vv(ws, "V");
  CHECK(kv.degree == 0);
  CHECK(vv_at(kv, 1, {}) == SuperPoly::phi(2, 2));

  expect_err(Err::Decode, [&] { resolve_form(ws, "l1"); });
  expect_err(Err::Decode, [&] { resolve_vector(ws, "phi1*c1"); });
  expect_err(Err::UnboundName, [&] { resolve_form(ws, "nosuch"); });
}
