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

#include "textio.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <tuple>

#include "error.hpp"

namespace gc {

namespace {

std::string at(unsigned line, unsigned col) {
  std::ostringstream os;
  os << "line " << line << ", column " << col;
  return os.str();
}

} // namespace

std::vector<Token> lex(const std::string& text, unsigned start_line) {
  std::vector<Token> out;
  unsigned line = start_line;
  unsigned col = 1;
  size_t i = 0;
  auto push = [&](Token::Kind k, std::string t, unsigned c) {
    out.push_back(Token{k, std::move(t), line, c});
  };
  while (i < text.size()) {
    char ch = text[i];
    if (ch == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (ch == '\r' || ch == ' ' || ch == '\t') {
      ++col;
      ++i;
      continue;
    }
    if (ch == '#') {
      while (i < text.size() && text[i] != '\n') { ++i; ++col; }
      continue;
    }
    unsigned c0 = col;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      push(Token::Int, text.substr(i, j - i), c0);
      col += static_cast<unsigned>(j - i);
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      push(Token::Ident, text.substr(i, j - i), c0);
      col += static_cast<unsigned>(j - i);
      i = j;
      continue;
    }
    if (ch == ':' && i + 1 < text.size() && text[i + 1] == '=') {
      push(Token::Assign, ":=", c0);
      i += 2;
      col += 2;
      continue;
    }
    Token::Kind k;
    switch (ch) {
      case '+': k = Token::Plus; break;
      case '-': k = Token::Minus; break;
      case '*': k = Token::Star; break;
      case '/': k = Token::Slash; break;
      case '^': k = Token::Caret; break;
      case '(': k = Token::LParen; break;
      case ')': k = Token::RParen; break;
      case '{': k = Token::LBrace; break;
      case '}': k = Token::RBrace; break;
      case ',': k = Token::Comma; break;
      case ':': k = Token::Colon; break;
      case '|': k = Token::Pipe; break;
      default:
        fail(Err::Parse, "unexpected character '" + std::string(1, ch) + "' at " +
                             at(line, col));
    }
    push(k, std::string(1, ch), c0);
    ++i;
    ++col;
  }
  out.push_back(Token{Token::End, "", line, col});
  return out;
}

unsigned token_nat(const Token& t) {
  if (t.kind != Token::Int || t.text.size() > 7) {
    fail(Err::Parse, "expected a small natural number, got '" + t.text + "' at " +
                         at(t.line, t.col));
  }
  return static_cast<unsigned>(std::stoul(t.text));
}

namespace {

// Splits an identifier into a generator family and 1-based index.
// Returns false for plain names (including bare "phi", "c", ...).
bool split_symbol(const std::string& s, char& family, bool& bar, Index& idx) {
  size_t p = 0;
  if (s.rfind("phi", 0) == 0) { family = 'p'; bar = false; p = 3; }
  else if (s.rfind("cb", 0) == 0) { family = 'c'; bar = true; p = 2; }
  else if (s.rfind("c", 0) == 0) { family = 'c'; bar = false; p = 1; }
  else if (s.rfind("l", 0) == 0) { family = 'l'; bar = false; p = 1; }
  else return false;
  if (p >= s.size()) return false;
  unsigned v = 0;
  for (size_t i = p; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    if (v > 100000) fail(Err::Index, "generator index out of range in '" + s + "'");
    v = v * 10 + static_cast<unsigned>(s[i] - '0');
  }
  idx = v;
  return true;
}

} // namespace

bool is_reserved_word(const std::string& ident) {
  if (ident == "I" || ident == "let" || ident == "dim" || ident == "omega" ||
      ident == "standard" || ident == "rows" || ident == "form" ||
      ident == "mvec" || ident == "vvform") {
    return true;
  }
  char f;
  bool b;
  Index k;
  return split_symbol(ident, f, b, k);
}

const Token& ExprParser::next() { return toks_[pos_++]; }

void ExprParser::syntax_error(const Token& t, const std::string& what) const {
  std::string got = t.kind == Token::End ? "end of input" : "'" + t.text + "'";
  fail(Err::Parse, "expected " + what + ", got " + got + " at " + at(t.line, t.col));
}

SuperPoly ExprParser::parse_expr() {
  SuperPoly acc = parse_term();
  while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
    bool minus = next().kind == Token::Minus;
    SuperPoly rhs = parse_term();
    if (minus) acc -= rhs; else acc += rhs;
  }
  return acc;
}

SuperPoly ExprParser::parse_term() {
  SuperPoly acc = parse_factor();
  for (;;) {
    if (peek().kind == Token::Star) {
      next();
      acc = acc * parse_factor();
      continue;
    }
    if (peek().kind == Token::Slash) {
      const Token& slash = next();
      if (peek().kind != Token::Int) syntax_error(peek(), "integer divisor");
      const Token& d = next();
      mpq_class den(d.text);
      if (den == 0) {
        fail(Err::Parse, "division by zero at " + at(slash.line, slash.col));
      }
      acc = Scalar(mpq_class(1) / den) * acc;
      continue;
    }
    break;
  }
  return acc;
}

SuperPoly ExprParser::parse_factor() {
  const Token& base_tok = peek();
  SuperPoly base = parse_atom();
  if (peek().kind != Token::Caret) return base;
  next();
  if (peek().kind != Token::Int) syntax_error(peek(), "exponent");
  const Token& e = next();
  unsigned ev = token_nat(e);
  try {
    return base.pow(ev);
  } catch (const Error& err) {
    if (err.code == Err::OddPower) {
      fail(Err::OddPower, std::string(err.what()) + " at " +
                              at(base_tok.line, base_tok.col));
    }
    throw;
  }
}

SuperPoly ExprParser::parse_atom() {
  const Token& t = next();
  switch (t.kind) {
    case Token::Int:
      return SuperPoly::constant(two_n_, Scalar(mpq_class(t.text)));
    case Token::Minus:
      return -parse_factor();
    case Token::LParen: {
      SuperPoly inner = parse_expr();
      if (peek().kind != Token::RParen) syntax_error(peek(), "')'");
      next();
      return inner;
    }
    case Token::Ident: {
      if (t.text == "I") return SuperPoly::constant(two_n_, Scalar::i());
      char family;
      bool bar;
      Index idx;
      if (split_symbol(t.text, family, bar, idx)) {
        if (idx < 1 || idx > two_n_) {
          fail(Err::Index, "index of '" + t.text + "' outside 1.." +
                               std::to_string(two_n_) + " at " + at(t.line, t.col));
        }
        if (family == 'p') return SuperPoly::phi(two_n_, idx);
        if (family == 'l') return SuperPoly::lam(two_n_, idx);
        return bar ? SuperPoly::cb(two_n_, idx) : SuperPoly::c(two_n_, idx);
      }
      if (names_) {
        if (auto v = names_(t.text)) return *v;
      }
      fail(Err::UnboundName, "unknown name '" + t.text + "' at " + at(t.line, t.col));
    }
    default:
      syntax_error(t, "a value");
  }
}

SuperPoly parse_poly(const std::string& text, unsigned two_n, const NameLookup& names) {
  std::vector<Token> toks = lex(text);
  ExprParser p(toks, 0, two_n, names);
  SuperPoly out = p.parse_expr();
  if (p.peek().kind != Token::End) {
    const Token& t = p.peek();
    fail(Err::Parse, "trailing input '" + t.text + "' at " + at(t.line, t.col));
  }
  return out;
}

namespace {

std::string rat_str(const mpq_class& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

// Magnitude rendering of a coefficient with the leading sign stripped when the
// value is purely real or purely imaginary; mixed values keep everything
// inside parentheses and report a positive leading sign.
struct CoeffText {
  bool negative;
  std::string magnitude;  // "1" means: omit in front of a nonempty monomial
};

std::string imag_mag(const mpq_class& abs_im) {
  if (abs_im == 1) return "I";
  return rat_str(abs_im) + "*I";
}

CoeffText render_coeff(const Scalar& s) {
  if (s.im() == 0) {
    bool neg = s.re() < 0;
    return CoeffText{neg, rat_str(neg ? mpq_class(-s.re()) : s.re())};
  }
  if (s.re() == 0) {
    bool neg = s.im() < 0;
    return CoeffText{neg, imag_mag(neg ? mpq_class(-s.im()) : s.im())};
  }
  std::string re = rat_str(s.re());
  bool im_neg = s.im() < 0;
  mpq_class ia = im_neg ? mpq_class(-s.im()) : s.im();
  return CoeffText{false, "(" + re + (im_neg ? " - " : " + ") + imag_mag(ia) + ")"};
}

std::string monomial_str(const Monomial& m) {
  std::vector<std::string> parts;
  for (auto& [idx, e] : m.phi) {
    std::string f = "phi" + std::to_string(idx);
    if (e > 1) f += "^" + std::to_string(e);
    parts.push_back(std::move(f));
  }
  for (Index idx : m.c) parts.push_back("c" + std::to_string(idx));
  for (Index idx : m.cb) parts.push_back("cb" + std::to_string(idx));
  for (auto& [idx, e] : m.lam) {
    std::string f = "l" + std::to_string(idx);
    if (e > 1) f += "^" + std::to_string(e);
    parts.push_back(std::move(f));
  }
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "*";
    out += parts[i];
  }
  return out;
}

// Display order: Grassmann degree, then phi degree, then the ghost word,
// then the even word.  Independent of the internal map order on purpose: the
// printed form groups terms the way the calculus reads them.
bool display_less(const Monomial& a, const Monomial& b) {
  if (a.grassmann_degree() != b.grassmann_degree()) {
    return a.grassmann_degree() < b.grassmann_degree();
  }
  if (a.phi_degree() != b.phi_degree()) return a.phi_degree() < b.phi_degree();
  if (a.c != b.c) return a.c < b.c;
  if (a.cb != b.cb) return a.cb < b.cb;
  if (a.phi != b.phi) return a.phi < b.phi;
  return a.lam < b.lam;
}

} // namespace

std::string print_scalar(const Scalar& s) {
  if (s.is_zero()) return "0";
  CoeffText ct = render_coeff(s);
  return (ct.negative ? "-" : "") + ct.magnitude;
}

std::string print_poly(const SuperPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Monomial, Scalar>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return display_less(a.first, b.first); });
  std::string out;
  bool first = true;
  for (auto& [m, coeff] : terms) {
    CoeffText ct = render_coeff(coeff);
    std::string word = monomial_str(m);
    std::string body;
    if (word.empty()) {
      body = ct.magnitude;
    } else if (ct.magnitude == "1") {
      body = word;
    } else {
      body = ct.magnitude + "*" + word;
    }
    if (first) {
      out += (ct.negative ? "-" : "") + body;
      first = false;
    } else {
      out += (ct.negative ? " - " : " + ") + body;
    }
  }
  return out;
}

} // namespace gc
