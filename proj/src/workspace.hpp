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

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "context.hpp"
#include "oracle.hpp"
#include "textio.hpp"

// Workspace file format (version header "gradedcartan-v1"):
//
//   gradedcartan-v1
//   # comment lines start with '#'
//   dim 2
//   omega standard            (optional; or "omega rows" + 2n rows of omega^{ab})
//   let H := (phi1^2 + phi2^2)/2
//   let F := form(2){(1,2): phi1, (1,3): 1/2}
//   let V := mvec(1){(2): phi1*phi2}
//   let K := vvform(1){1|(2): phi1}
//
// dim appears exactly once and first; later bindings may reference earlier
// ones; rebinding and forward references are errors.  CRLF input is accepted,
// output always uses LF.  save_text() round-trips through load_text().

namespace gc {

using Value = std::variant<SuperPoly, DifferentialForm, Multivector, VectorValuedForm>;

class Workspace {
 public:
  explicit Workspace(SymplecticContext ctx) : ctx_(std::move(ctx)) {}

  static Workspace load_text(const std::string& text);
  static Workspace load_file(const std::string& path);
  std::string save_text() const;
  void save_file(const std::string& path) const;

  const SymplecticContext& context() const { return ctx_; }
  unsigned two_n() const { return ctx_.two_n(); }

  const Value* find(const std::string& name) const;
  const std::vector<std::pair<std::string, Value>>& bindings() const {
    return bindings_;
  }

  // Appends a binding; rejects reserved spellings and rebinding.
  void bind(const std::string& name, Value v);

  // Name resolver for expressions: tensor-valued bindings enter expressions
  // through their hat embedding.
  NameLookup lookup() const;

  // Parses and lowers an expression against this workspace.
  SuperPoly eval(const std::string& expr) const;

 private:
  SymplecticContext ctx_;
  std::vector<std::pair<std::string, Value>> bindings_;
  std::map<std::string, size_t> index_;
};

// Command-argument resolution: a bare name bound to a tensor of the right
// kind is used directly; anything else is parsed as an expression and the
// result decoded from its hat embedding.
DifferentialForm resolve_form(const Workspace& ws, const std::string& arg);
Multivector resolve_mv(const Workspace& ws, const std::string& arg);
VectorValuedForm resolve_vv(const Workspace& ws, const std::string& arg);
PolyVec resolve_vector(const Workspace& ws, const std::string& arg);

// Canonical text for a tensor literal, e.g. "form(2){(1,2): phi1}".
std::string print_form(const DifferentialForm& f);
std::string print_mv(const Multivector& v);
std::string print_vv(const VectorValuedForm& k);
std::string print_value(const Value& v);

} // namespace gc
