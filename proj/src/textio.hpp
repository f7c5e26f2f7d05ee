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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "superpoly.hpp"

// Expression grammar, parser and canonical printer.
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*' factor) | ('/' INT))*
//   factor := atom ('^' NAT)?
//   atom   := INT | 'I' | symbol | name | '(' expr ')' | '-' factor
//
// Symbols are phi<k>, l<k>, c<k>, cb<k> with 1-based indices; every other
// identifier is a name resolved against earlier bindings.  Division is only
// by integer literals.  Unary minus binds looser than '^', so -phi1^2 is
// -(phi1^2); round-tripping the printer depends on that.

namespace gc {

struct Token {
  enum Kind {
    Int, Ident, Plus, Minus, Star, Slash, Caret,
    LParen, RParen, LBrace, RBrace, Comma, Colon, Pipe, Assign, End
  };
  Kind kind;
  std::string text;
  unsigned line = 0;
  unsigned col = 0;
};

// Tokenizes one logical line (or a whole expression string); throws
// Err::Parse with position info on an unexpected character.
std::vector<Token> lex(const std::string& text, unsigned start_line = 1);

// Numeric value of an Int token, bounded so it can serve as an index,
// degree or exponent; throws Err::Parse when out of range.
unsigned token_nat(const Token& t);

using NameLookup = std::function<std::optional<SuperPoly>(const std::string&)>;

// Recursive-descent parser over a token span.  Embeds into the workspace
// reader, which parses tensor literals around embedded expressions.
class ExprParser {
 public:
  ExprParser(const std::vector<Token>& toks, size_t pos, unsigned two_n,
             const NameLookup& names)
      : toks_(toks), pos_(pos), two_n_(two_n), names_(names) {}

  SuperPoly parse_expr();
  size_t pos() const { return pos_; }
  const Token& peek() const { return toks_[pos_]; }

 private:
  SuperPoly parse_term();
  SuperPoly parse_factor();
  SuperPoly parse_atom();
  const Token& next();
  [[noreturn]] void syntax_error(const Token& t, const std::string& what) const;

  const std::vector<Token>& toks_;
  size_t pos_;
  unsigned two_n_;
  const NameLookup& names_;
};

// Parses a complete expression string; the whole input must be consumed.
SuperPoly parse_poly(const std::string& text, unsigned two_n,
                     const NameLookup& names = {});

// Canonical rendering: terms sorted by (total Grassmann degree, phi degree,
// lexicographic monomial key), factors ordered scalar phi c cb l with
// ascending indices.  parse(print(p)) == p for every p.
std::string print_poly(const SuperPoly& p);

// Scalar rendering used for standalone values: "3/2", "-I", "(1/2 - 3*I)".
std::string print_scalar(const Scalar& s);

// True for identifiers reserved by the grammar (I and the symbol families);
// such spellings can never be binding names.
bool is_reserved_word(const std::string& ident);

} // namespace gc
