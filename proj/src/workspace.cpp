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

#include "workspace.hpp"

#include <fstream>
#include <sstream>

#include "epb.hpp"
#include "error.hpp"

namespace gc {

namespace {

constexpr const char* kVersionLine = "gradedcartan-v1";

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      lines.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty() && cur.back() == '\r') cur.pop_back();
  lines.push_back(std::move(cur));
  return lines;
}

bool blank_line(const std::vector<Token>& toks) {
  return toks.size() == 1 && toks[0].kind == Token::End;
}

[[noreturn]] void line_error(unsigned li, const std::string& msg) {
  fail(Err::Parse, msg + " at line " + std::to_string(li));
}

// entry := '-'? INT ('/' INT)?   used for omega matrix rows
Scalar parse_rational_entry(const std::vector<Token>& toks, size_t& pos, unsigned li) {
  bool neg = false;
  if (toks[pos].kind == Token::Minus) {
    neg = true;
    ++pos;
  }
  if (toks[pos].kind != Token::Int) line_error(li, "expected rational matrix entry");
  mpq_class num(toks[pos].text);
  ++pos;
  if (toks[pos].kind == Token::Slash) {
    ++pos;
    if (toks[pos].kind != Token::Int) line_error(li, "expected denominator");
    mpq_class den(toks[pos].text);
    if (den == 0) line_error(li, "zero denominator");
    num /= den;
    ++pos;
  }
  return Scalar(neg ? mpq_class(-num) : num);
}

IndexTuple parse_tuple(const std::vector<Token>& toks, size_t& pos, unsigned two_n,
                       unsigned li) {
  if (toks[pos].kind != Token::LParen) line_error(li, "expected index tuple");
  ++pos;
  IndexTuple t;
  if (toks[pos].kind != Token::RParen) {
    for (;;) {
      if (toks[pos].kind != Token::Int) line_error(li, "expected index");
      unsigned v = token_nat(toks[pos]);
      if (v < 1 || v > two_n) {
        fail(Err::Index, "index " + toks[pos].text + " outside 1.." +
                             std::to_string(two_n) + " at line " + std::to_string(li));
      }
      t.push_back(static_cast<Index>(v));
      ++pos;
      if (toks[pos].kind == Token::Comma) {
        ++pos;
        continue;
      }
      break;
    }
  }
  if (toks[pos].kind != Token::RParen) line_error(li, "expected ')' after tuple");
  ++pos;
  return t;
}

// kind '(' NAT ')' '{' entries '}' with entries "(i,j): expr" or "i|(j): expr"
Value parse_tensor_literal(const std::vector<Token>& toks, size_t& pos,
                           const std::string& kind, unsigned two_n,
                           const NameLookup& names, unsigned li) {
  ++pos;  // kind identifier
  if (toks[pos].kind != Token::LParen) line_error(li, "expected '(' after " + kind);
  ++pos;
  if (toks[pos].kind != Token::Int) line_error(li, "expected tensor degree");
  unsigned degree = token_nat(toks[pos]);
  ++pos;
  if (toks[pos].kind != Token::RParen) line_error(li, "expected ')' after degree");
  ++pos;
  if (toks[pos].kind != Token::LBrace) line_error(li, "expected '{'");
  ++pos;

  DifferentialForm form{two_n, degree, {}};
  Multivector mv{two_n, degree, {}};
  VectorValuedForm vv{two_n, degree, {}};

  if (toks[pos].kind != Token::RBrace) {
    for (;;) {
      Index upper = 0;
      if (kind == "vvform") {
        if (toks[pos].kind != Token::Int) line_error(li, "expected vector index");
        unsigned v = token_nat(toks[pos]);
        if (v < 1 || v > two_n) {
          fail(Err::Index, "index " + toks[pos].text + " outside 1.." +
                               std::to_string(two_n) + " at line " + std::to_string(li));
        }
        upper = static_cast<Index>(v);
        ++pos;
        if (toks[pos].kind != Token::Pipe) line_error(li, "expected '|'");
        ++pos;
      }
      IndexTuple t = parse_tuple(toks, pos, two_n, li);
      if (t.size() != degree) {
        fail(Err::TypeMismatch, "tuple length " + std::to_string(t.size()) +
                                    " does not match degree " + std::to_string(degree) +
                                    " at line " + std::to_string(li));
      }
      if (toks[pos].kind != Token::Colon) line_error(li, "expected ':' after tuple");
      ++pos;
      ExprParser p(toks, pos, two_n, names);
      SuperPoly coeff = p.parse_expr();
      pos = p.pos();
      if (!coeff.phi_only()) {
        fail(Err::TypeMismatch,
             "tensor components must be phi polynomials at line " + std::to_string(li));
      }
      if (kind == "form") form_insert(form, t, coeff);
      else if (kind == "mvec") mv_insert(mv, t, coeff);
      else vv_insert(vv, upper, t, coeff);
      if (toks[pos].kind == Token::Comma) {
        ++pos;
        continue;
      }
      break;
    }
  }
  if (toks[pos].kind != Token::RBrace) line_error(li, "expected '}' or ','");
  ++pos;
  if (kind == "form") return Value(std::move(form));
  if (kind == "mvec") return Value(std::move(mv));
  return Value(std::move(vv));
}

unsigned value_two_n(const Value& v) {
  return std::visit(
      [](const auto& x) -> unsigned {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, SuperPoly>) return x.two_n();
        else return x.two_n;
      },
      v);
}

std::string tuple_str(const IndexTuple& t) {
  std::string out = "(";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(t[i]);
  }
  return out + ")";
}

} // namespace

Workspace Workspace::load_text(const std::string& text) {
  std::vector<std::string> lines = split_lines(text);
  if (lines.empty() || trim(lines[0]) != kVersionLine) {
    fail(Err::Version, std::string("first line must be '") + kVersionLine + "'");
  }

  bool have_dim = false;
  bool have_omega = false;
  bool have_let = false;
  unsigned n = 0;
  Matrix rows;
  unsigned rows_pending = 0;
  std::vector<std::pair<std::string, Value>> bindings;
  std::map<std::string, size_t> index;

  NameLookup names = [&](const std::string& name) -> std::optional<SuperPoly> {
    auto it = index.find(name);
    if (it == index.end()) return std::nullopt;
    const Value& v = bindings[it->second].second;
    return std::visit(
        [](const auto& x) -> SuperPoly {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, SuperPoly>) return x;
          else return hat(x);
        },
        v);
  };

  for (size_t k = 1; k < lines.size(); ++k) {
    unsigned li = static_cast<unsigned>(k + 1);
    std::vector<Token> toks = lex(lines[k], li);
    if (blank_line(toks)) continue;

    if (rows_pending > 0) {
      std::vector<Scalar> row;
      size_t pos = 0;
      while (toks[pos].kind != Token::End) {
        row.push_back(parse_rational_entry(toks, pos, li));
      }
      if (row.size() != 2 * n) {
        line_error(li, "omega row needs " + std::to_string(2 * n) + " entries");
      }
      rows.push_back(std::move(row));
      --rows_pending;
      continue;
    }

    if (toks[0].kind != Token::Ident) line_error(li, "expected directive");
    const std::string& head = toks[0].text;

    if (head == "dim") {
      if (have_dim) line_error(li, "duplicate dim");
      if (toks[1].kind != Token::Int || toks[2].kind != Token::End) {
        line_error(li, "usage: dim <n>");
      }
      unsigned v = token_nat(toks[1]);
      if (v < 1 || v > 1000) fail(Err::Dimension, "dim outside 1..1000");
      n = v;
      have_dim = true;
      continue;
    }
    if (!have_dim) line_error(li, "dim must be the first directive");

    if (head == "omega") {
      if (have_omega) line_error(li, "duplicate omega");
      if (have_let) line_error(li, "omega must come before bindings");
      have_omega = true;
      if (toks[1].kind == Token::Ident && toks[1].text == "standard" &&
          toks[2].kind == Token::End) {
        continue;
      }
      if (toks[1].kind == Token::Ident && toks[1].text == "rows" &&
          toks[2].kind == Token::End) {
        rows_pending = 2 * n;
        continue;
      }
      line_error(li, "usage: omega standard | omega rows");
    }

    if (head == "let") {
      if (toks[1].kind != Token::Ident) line_error(li, "expected binding name");
      const std::string& name = toks[1].text;
      if (is_reserved_word(name)) {
        line_error(li, "'" + name + "' is reserved and cannot be bound");
      }
      if (index.count(name)) {
        fail(Err::DuplicateName, "'" + name + "' is already bound (line " +
                                     std::to_string(li) + ")");
      }
      if (toks[2].kind != Token::Assign) line_error(li, "expected ':=' after name");
      size_t pos = 3;
      Value v = SuperPoly(2 * n);
      if (toks[pos].kind == Token::Ident &&
          (toks[pos].text == "form" || toks[pos].text == "mvec" ||
           toks[pos].text == "vvform")) {
        v = parse_tensor_literal(toks, pos, toks[pos].text, 2 * n, names, li);
      } else {
        ExprParser p(toks, pos, 2 * n, names);
        v = p.parse_expr();
        pos = p.pos();
      }
      if (toks[pos].kind != Token::End) {
        line_error(li, "trailing input after binding");
      }
      have_let = true;
      index[name] = bindings.size();
      bindings.emplace_back(name, std::move(v));
      continue;
    }

    line_error(li, "unknown directive '" + head + "'");
  }

  if (!have_dim) fail(Err::Parse, "workspace has no dim directive");
  if (rows_pending > 0) fail(Err::Parse, "omega rows ended early");

  SymplecticContext ctx = rows.empty() ? SymplecticContext::standard(n)
                                       : SymplecticContext::with_omega_upper(n, rows);
  Workspace ws(std::move(ctx));
  for (auto& [name, v] : bindings) ws.bind(name, std::move(v));
  return ws;
}

Workspace Workspace::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Err::Io, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_text(buf.str());
}

std::string Workspace::save_text() const {
  std::ostringstream os;
  os << kVersionLine << "\n";
  os << "dim " << ctx_.n() << "\n";
  if (ctx_.is_standard()) {
    os << "omega standard\n";
  } else {
    os << "omega rows\n";
    for (unsigned a = 1; a <= two_n(); ++a) {
      for (unsigned b = 1; b <= two_n(); ++b) {
        if (b > 1) os << " ";
        os << print_scalar(ctx_.omega_upper(a, b));
      }
      os << "\n";
    }
  }
  for (const auto& [name, v] : bindings_) {
    os << "let " << name << " := " << print_value(v) << "\n";
  }
  return os.str();
}

void Workspace::save_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Err::Io, "cannot open '" + path + "' for writing");
  out << save_text();
  if (!out) fail(Err::Io, "write to '" + path + "' failed");
}

const Value* Workspace::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return nullptr;
  return &bindings_[it->second].second;
}

void Workspace::bind(const std::string& name, Value v) {
  if (name.empty() || is_reserved_word(name)) {
    fail(Err::Parse, "'" + name + "' cannot be used as a binding name");
  }
  if (index_.count(name)) fail(Err::DuplicateName, "'" + name + "' is already bound");
  if (value_two_n(v) != two_n()) {
    fail(Err::Dimension, "binding '" + name + "' has the wrong dimension");
  }
  index_[name] = bindings_.size();
  bindings_.emplace_back(name, std::move(v));
}

NameLookup Workspace::lookup() const {
  return [this](const std::string& name) -> std::optional<SuperPoly> {
    const Value* v = find(name);
    if (!v) return std::nullopt;
    return std::visit(
        [](const auto& x) -> SuperPoly {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, SuperPoly>) return x;
          else return hat(x);
        },
        *v);
  };
}

SuperPoly Workspace::eval(const std::string& expr) const {
  NameLookup names = lookup();
  return parse_poly(expr, two_n(), names);
}

namespace {

const Value* bare_name(const Workspace& ws, const std::string& arg) {
  std::vector<Token> toks = lex(arg);
  if (toks.size() == 2 && toks[0].kind == Token::Ident) return ws.find(toks[0].text);
  return nullptr;
}

} // namespace

DifferentialForm resolve_form(const Workspace& ws, const std::string& arg) {
  if (const Value* v = bare_name(ws, arg)) {
    if (auto* f = std::get_if<DifferentialForm>(v)) return *f;
  }
  return decode_form(ws.eval(arg));
}

Multivector resolve_mv(const Workspace& ws, const std::string& arg) {
  if (const Value* v = bare_name(ws, arg)) {
    if (auto* m = std::get_if<Multivector>(v)) return *m;
  }
  return decode_mv(ws.eval(arg));
}

VectorValuedForm resolve_vv(const Workspace& ws, const std::string& arg) {
  if (const Value* v = bare_name(ws, arg)) {
    if (auto* k = std::get_if<VectorValuedForm>(v)) return *k;
    if (auto* m = std::get_if<Multivector>(v); m && m->degree == 1) {
      return vector_to_vv(mv_to_vector(*m));
    }
  }
  return decode_vv(ws.eval(arg));
}

PolyVec resolve_vector(const Workspace& ws, const std::string& arg) {
  if (const Value* v = bare_name(ws, arg)) {
    if (auto* m = std::get_if<Multivector>(v); m && m->degree == 1) {
      return mv_to_vector(*m);
    }
    if (auto* k = std::get_if<VectorValuedForm>(v); k && k->degree == 0) {
      return vv_to_vector(*k);
    }
  }
  return mv_to_vector(decode_mv(ws.eval(arg), 1));
}

std::string print_form(const DifferentialForm& f) {
  std::string out = "form(" + std::to_string(f.degree) + "){";
  bool first = true;
  for (const auto& [t, coeff] : f.comps) {
    if (!first) out += ", ";
    first = false;
    out += tuple_str(t) + ": " + print_poly(coeff);
  }
  return out + "}";
}

std::string print_mv(const Multivector& v) {
  std::string out = "mvec(" + std::to_string(v.degree) + "){";
  bool first = true;
  for (const auto& [t, coeff] : v.comps) {
    if (!first) out += ", ";
    first = false;
    out += tuple_str(t) + ": " + print_poly(coeff);
  }
  return out + "}";
}

std::string print_vv(const VectorValuedForm& k) {
  std::string out = "vvform(" + std::to_string(k.degree) + "){";
  bool first = true;
  for (const auto& [key, coeff] : k.comps) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(key.first) + "|" + tuple_str(key.second) + ": " +
           print_poly(coeff);
  }
  return out + "}";
}

std::string print_value(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, SuperPoly>) return print_poly(x);
        else if constexpr (std::is_same_v<T, DifferentialForm>) return print_form(x);
        else if constexpr (std::is_same_v<T, Multivector>) return print_mv(x);
        else return print_vv(x);
      },
      v);
}

} // namespace gc
