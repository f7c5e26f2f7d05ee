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

// Command line front end.  Talks to the engine exclusively through the C
// interface; exit code 0 on success, 1 on user errors, 2 when an internal
// invariant is violated (including any failed verify check).

#include <CLI11.hpp>
#include <gradedcartan/gradedcartan.h>

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <string>

namespace {

int exit_code_for(gc_status s) {
  switch (s) {
    case GC_OK:
      return 0;
    case GC_ERR_INTERNAL:
    case GC_ERR_CALIBRATION:
    case GC_ERR_SOLVE:
      return 2;
    default:
      return 1;
  }
}

void print_text(const char* s) {
  std::fputs(s, stdout);
  size_t len = std::strlen(s);
  if (len == 0 || s[len - 1] != '\n') std::fputc('\n', stdout);
}

int finish(gc_status st, char* out) {
  if (st != GC_OK) {
    std::fprintf(stderr, "error: %s\n", gc_last_error());
    return exit_code_for(st);
  }
  if (out != nullptr) print_text(out);
  gc_string_free(out);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact graded Cartan calculus over a symplectic phase space"};
  app.require_subcommand(1);
  app.fallthrough(); // let --file appear after the subcommand too

  std::string file;
  app.add_option("--file", file, "workspace file to load");

  std::string a1, a2;
  auto one_arg = [&](CLI::App* sub, const char* name) {
    sub->add_option(name, a1, "")->required();
  };
  auto two_args = [&](CLI::App* sub, const char* n1, const char* n2) {
    sub->add_option(n1, a1, "")->required();
    sub->add_option(n2, a2, "")->required();
  };

  auto* cmd_eval = app.add_subcommand("eval", "evaluate an expression");
  one_arg(cmd_eval, "expr");
  auto* cmd_epb = app.add_subcommand("epb", "graded bracket of two expressions");
  two_args(cmd_epb, "a", "b");
  auto* cmd_d = app.add_subcommand("d", "exterior derivative of a form");
  one_arg(cmd_d, "form");
  auto* cmd_iota =
      app.add_subcommand("iota", "interior product of a field with a form");
  two_args(cmd_iota, "field", "form");
  auto* cmd_lie =
      app.add_subcommand("lie", "lie derivative along a vector field");
  two_args(cmd_lie, "field", "arg");
  auto* cmd_flat = app.add_subcommand("flat", "lower a vector field's index");
  one_arg(cmd_flat, "field");
  auto* cmd_sharp =
      app.add_subcommand("sharp", "raise a function to its hamiltonian field");
  one_arg(cmd_sharp, "fn");
  auto* cmd_lieb =
      app.add_subcommand("liebracket", "lie bracket of two vector fields");
  two_args(cmd_lieb, "v", "w");
  auto* cmd_sn =
      app.add_subcommand("sn", "schouten bracket of two multivectors");
  two_args(cmd_sn, "p", "q");
  auto* cmd_fn = app.add_subcommand(
      "fn", "differential bracket of two vector valued forms");
  two_args(cmd_fn, "k", "v");
  auto* cmd_nr =
      app.add_subcommand("nr", "algebraic bracket of two vector valued forms");
  two_args(cmd_nr, "k", "v");
  auto* cmd_charges =
      app.add_subcommand("charges", "print the five fixed charges");
  auto* cmd_cal =
      app.add_subcommand("calibrate", "print the bracket normalization constants");

  uint64_t seed = 42;
  unsigned cases = 50;
  auto* cmd_verify =
      app.add_subcommand("verify", "run the built-in identity battery");
  cmd_verify->add_option("--seed", seed, "deterministic seed (default 42)");
  cmd_verify->add_option("--cases", cases, "cases per suite (default 50)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (cmd_cal->parsed()) {
    char* out = nullptr;
    gc_status st = gc_calibrate(&out);
    return finish(st, out);
  }
  if (cmd_verify->parsed()) {
    char* report = nullptr;
    unsigned failures = 0;
    gc_status st = gc_verify(seed, cases, &report, &failures);
    if (st != GC_OK) {
      std::fprintf(stderr, "error: %s\n", gc_last_error());
      return exit_code_for(st);
    }
    print_text(report);
    gc_string_free(report);
    return failures == 0 ? 0 : 2;
  }

  if (file.empty()) {
    std::fprintf(stderr, "error: this command needs --file <workspace>\n");
    return 1;
  }
  gc_workspace* ws = nullptr;
  gc_status st = gc_workspace_load_file(file.c_str(), &ws);
  if (st != GC_OK) {
    std::fprintf(stderr, "error: %s\n", gc_last_error());
    return exit_code_for(st);
  }

  char* out = nullptr;
  if (cmd_eval->parsed()) st = gc_eval(ws, a1.c_str(), &out);
  else if (cmd_epb->parsed()) st = gc_epb(ws, a1.c_str(), a2.c_str(), &out);
  else if (cmd_d->parsed()) st = gc_ext_d(ws, a1.c_str(), &out);
  else if (cmd_iota->parsed()) st = gc_interior(ws, a1.c_str(), a2.c_str(), &out);
  else if (cmd_lie->parsed())
    st = gc_lie_derivative(ws, a1.c_str(), a2.c_str(), &out);
  else if (cmd_flat->parsed()) st = gc_flat(ws, a1.c_str(), &out);
  else if (cmd_sharp->parsed()) st = gc_sharp(ws, a1.c_str(), &out);
  else if (cmd_lieb->parsed())
    st = gc_lie_bracket(ws, a1.c_str(), a2.c_str(), &out);
  else if (cmd_sn->parsed()) st = gc_sn_bracket(ws, a1.c_str(), a2.c_str(), &out);
  else if (cmd_fn->parsed()) st = gc_fn_bracket(ws, a1.c_str(), a2.c_str(), &out);
  else if (cmd_nr->parsed()) st = gc_nr_bracket(ws, a1.c_str(), a2.c_str(), &out);
  else if (cmd_charges->parsed()) st = gc_charges(ws, &out);

  int code = finish(st, out);
  gc_workspace_free(ws);
  return code;
}
