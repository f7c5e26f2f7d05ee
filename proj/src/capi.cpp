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

#include <gradedcartan/gradedcartan.h>

#include <cstdlib>
#include <cstring>
#include <string>

#include "epb.hpp"
#include "error.hpp"
#include "textio.hpp"
#include "verify.hpp"
#include "workspace.hpp"

struct gc_workspace {
  gc::Workspace ws;
};

namespace {

thread_local std::string t_last_error;

gc_status status_of(gc::Err code) {
  switch (code) {
    case gc::Err::Parse: return GC_ERR_PARSE;
    case gc::Err::Version: return GC_ERR_VERSION;
    case gc::Err::UnboundName: return GC_ERR_UNBOUND_NAME;
    case gc::Err::DuplicateName: return GC_ERR_DUPLICATE_NAME;
    case gc::Err::TypeMismatch: return GC_ERR_TYPE_MISMATCH;
    case gc::Err::Dimension: return GC_ERR_DIMENSION;
    case gc::Err::Index: return GC_ERR_INDEX;
    case gc::Err::OddPower: return GC_ERR_ODD_POWER;
    case gc::Err::Omega: return GC_ERR_OMEGA;
    case gc::Err::Decode: return GC_ERR_DECODE;
    case gc::Err::Calibration: return GC_ERR_CALIBRATION;
    case gc::Err::Solve: return GC_ERR_SOLVE;
    case gc::Err::Io: return GC_ERR_IO;
    case gc::Err::Internal: return GC_ERR_INTERNAL;
  }
  return GC_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
gc_status guarded(F&& f) {
  try {
    f();
    return GC_OK;
  } catch (const gc::Error& e) {
    t_last_error = e.what();
    return status_of(e.code);
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return GC_ERR_INTERNAL;
  } catch (...) {
    t_last_error = "unknown failure";
    return GC_ERR_INTERNAL;
  }
}

gc_status require(bool ok, const char* msg) {
  if (ok) return GC_OK;
  t_last_error = msg;
  return GC_ERR_INTERNAL;
}

std::string tuple_text(const gc::IndexTuple& t) {
  std::string out = "(";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(t[i]);
  }
  return out + ")";
}

std::string listing(const gc::Multivector& v) {
  if (v.comps.empty()) return "0";
  std::string out;
  for (const auto& [t, coeff] : v.comps) {
    if (!out.empty()) out += "\n";
    out += tuple_text(t) + " : " + gc::print_poly(coeff);
  }
  return out;
}

std::string listing(const gc::VectorValuedForm& k) {
  if (k.comps.empty()) return "0";
  std::string out;
  for (const auto& [key, coeff] : k.comps) {
    if (!out.empty()) out += "\n";
    out += std::to_string(key.first) + "|" + tuple_text(key.second) + " : " +
           gc::print_poly(coeff);
  }
  return out;
}

gc_status poly_result(const gc_workspace* ws, char** out,
                      gc::SuperPoly (*op)(const gc_workspace*, const char*,
                                          const char*),
                      const char* a, const char* b) {
  gc_status bad = require(ws && out && a, "null argument");
  if (bad != GC_OK) return bad;
  return guarded([&] {
    gc::SuperPoly p = op(ws, a, b);
    *out = dup_string(gc::print_poly(p));
  });
}

} // namespace

extern "C" {

const char* gc_version(void) { return "gradedcartan 1.0.0"; }

const char* gc_last_error(void) { return t_last_error.c_str(); }

void gc_string_free(char* s) { std::free(s); }

gc_status gc_workspace_load_file(const char* path, gc_workspace** out) {
  gc_status bad = require(path && out, "null argument");
  if (bad != GC_OK) return bad;
  return guarded([&] {
    *out = new gc_workspace{gc::Workspace::load_file(path)};
  });
}

gc_status gc_workspace_load_text(const char* text, gc_workspace** out) {
  gc_status bad = require(text && out, "null argument");
  if (bad != GC_OK) return bad;
  return guarded([&] {
    *out = new gc_workspace{gc::Workspace::load_text(text)};
  });
}

gc_status gc_workspace_save_text(const gc_workspace* ws, char** out) {
  gc_status bad = require(ws && out, "null argument");
  if (bad != GC_OK) return bad;
  return guarded([&] { *out = dup_string(ws->ws.save_text()); });
}

void gc_workspace_free(gc_workspace* ws) { delete ws; }

gc_status gc_eval(const gc_workspace* ws, const char* expr, char** out) {
  return poly_result(
      ws, out,
      [](const gc_workspace* w, const char* e, const char*) {
        return w->ws.eval(e);
      },
      expr, nullptr);
}

gc_status gc_epb(const gc_workspace* ws, const char* a, const char* b,
                 char** out) {
  gc_status bad = require(ws && a && b && out, "null argument");
  if (bad != GC_OK) return bad;
  return poly_result(
      ws, out,
      [](const gc_workspace* w, const char* x, const char* y) {
        return gc::epb(w->ws.eval(x), w->ws.eval(y));
      },
      a, b);
}

gc_status gc_ext_d(const gc_workspace* ws, const char* form, char** out) {
  return poly_result(
      ws, out,
      [](const gc_workspace* w, const char* f, const char*) {
        gc::SuperPoly p = w->ws.eval(f);
        gc::decode_form(p);  // reject anything that is not an embedded form
        return gc::ext_d(p);
      },
      form, nullptr);
}

gc_status gc_interior(const gc_workspace* ws, const char* field,
                      const char* form, char** out) {
  gc_status bad = require(ws && field && form && out, "null argument");
  if (bad != GC_OK) return bad;
  return guarded([&] {
    gc::PolyVec v = gc::resolve_vector(ws->ws, field);
    gc::SuperPoly p = ws->ws.eval(form);
    gc::decode_form(p);
    *out = dup_string(gc::print_poly(gc::interior(v, p)));
  });
}

gc_status gc_lie_derivative(const gc_workspace* ws, const char* field,
                            const char* arg, char** out) {
  gc_status bad = require(ws && field && arg && out, "null argument");
  if (bad != GC_OK) return bad;
  return guarded([&] {
    gc::PolyVec v = gc::resolve_vector(ws->ws, field);
    gc::SuperPoly p = ws->ws.eval(arg);
    *out = dup_string(gc::print_poly(gc::lie_derivative(v, p)));
  });
}

gc_status gc_flat(const gc_workspace* ws, const char* field, char** out) {
  return poly_result(
      ws, out,
      [](const gc_workspace* w, const char* f, const char*) {
        gc::SuperPoly p = w->ws.eval(f);
        gc::decode_mv(p, 1);  // only vector fields can be lowered
        return gc::flat(w->ws.context(), p);
      },
      field, nullptr);
}

gc_status gc_sharp(const gc_workspace* ws, const char* fn, char** out) {
  return poly_result(
      ws, out,
      [](const gc_workspace* w, const char* f, const char*) {
        gc::SuperPoly p = w->ws.eval(f);
        if (!p.phi_only()) {
          gc::fail(gc::Err::TypeMismatch, "sharp needs a function of phi");
        }
        return gc::sharp(w->ws.context(), p);
      },
      fn, nullptr);
}

gc_status gc_lie_bracket(const gc_workspace* ws, const char* a, const char* b,
                         char** out) {
  gc_status bad = require(ws && a && b && out, "null argument");
  if (bad != GC_OK) return bad;
  return guarded([&] {
    gc::PolyVec v = gc::resolve_vector(ws->ws, a);
    gc::PolyVec w = gc::resolve_vector(ws->ws, b);
    *out = dup_string(listing(gc::vector_to_mv(gc::lie_bracket(v, w))));
  });
}

gc_status gc_sn_bracket(const gc_workspace* ws, const char* a, const char* b,
                        char** out) {
  gc_status bad = require(ws && a && b && out, "null argument");
  if (bad != GC_OK) return bad;
  return guarded([&] {
    gc::Multivector p = gc::resolve_mv(ws->ws, a);
    gc::Multivector q = gc::resolve_mv(ws->ws, b);
    *out = dup_string(listing(gc::sn_bracket(p, q)));
  });
}

gc_status gc_fn_bracket(const gc_workspace* ws, const char* a, const char* b,
                        char** out) {
  gc_status bad = require(ws && a && b && out, "null argument");
  if (bad != GC_OK) return bad;
  return guarded([&] {
    gc::VectorValuedForm k = gc::resolve_vv(ws->ws, a);
    gc::VectorValuedForm v = gc::resolve_vv(ws->ws, b);
    *out = dup_string(listing(gc::fn_bracket(k, v)));
  });
}

gc_status gc_nr_bracket(const gc_workspace* ws, const char* a, const char* b,
                        char** out) {
  gc_status bad = require(ws && a && b && out, "null argument");
  if (bad != GC_OK) return bad;
  return guarded([&] {
    gc::VectorValuedForm k = gc::resolve_vv(ws->ws, a);
    gc::VectorValuedForm v = gc::resolve_vv(ws->ws, b);
    *out = dup_string(listing(gc::nr_bracket(k, v)));
  });
}

gc_status gc_charges(const gc_workspace* ws, char** out) {
  gc_status bad = require(ws && out, "null argument");
  if (bad != GC_OK) return bad;
  return guarded([&] {
    gc::ChargeSet ch = gc::charges(ws->ws.context());
    std::string text;
    text += "Q = " + gc::print_poly(ch.q) + "\n";
    text += "Qbar = " + gc::print_poly(ch.qbar) + "\n";
    text += "Qg = " + gc::print_poly(ch.qg) + "\n";
    text += "K = " + gc::print_poly(ch.kappa) + "\n";
    text += "Kbar = " + gc::print_poly(ch.kappa_bar);
    *out = dup_string(text);
  });
}

gc_status gc_calibrate(char** out) {
  gc_status bad = require(out != nullptr, "null argument");
  if (bad != GC_OK) return bad;
  return guarded([&] {
    const gc::CalibrationConstants& k = gc::calibration_constants();
    std::string text;
    text += "k_lie = " + gc::print_scalar(k.lie) + "\n";
    text += "k_sn = " + gc::print_scalar(k.sn) + "\n";
    text += "k_nr = " + gc::print_scalar(k.nr) + "\n";
    text += "k_fn = " + gc::print_scalar(k.fn);
    *out = dup_string(text);
  });
}

gc_status gc_verify(uint64_t seed, unsigned cases, char** report,
                    unsigned* failures) {
  gc_status bad = require(report && failures, "null argument");
  if (bad != GC_OK) return bad;
  return guarded([&] {
    gc::VerifyReport r = gc::run_verify(seed, cases);
    *report = dup_string(gc::format_report(r));
    *failures = r.failed();
  });
}

} // extern "C"
