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

#include <gradedcartan/gradedcartan.h>

#include <cstring>
#include <string>

namespace {

const char* kDoc =
    "gradedcartan-v1\n"
    "dim 1\n"
    "let H := (phi1^2 + phi2^2)/2\n"
    "let F := phi1*phi2\n"
    "let V := mvec(1){(1): phi2, (2): -phi1}\n";

std::string take(char* s) {
  std::string out = s ? s : "";
  gc_string_free(s);
  return out;
}

struct Handle {
  gc_workspace* ws = nullptr;
  ~Handle() { gc_workspace_free(ws); }
};

} // namespace

TEST_CASE("version string is available") {
  REQUIRE(gc_version() != nullptr);
  CHECK(std::strlen(gc_version()) > 0);
}

TEST_CASE("load, evaluate, operate, save") {
  Handle h;
  REQUIRE(gc_workspace_load_text(kDoc, &h.ws) == GC_OK);

  char* out = nullptr;
  REQUIRE(gc_eval(h.ws, "H", &out) == GC_OK);
  CHECK(take(out) == "1/2*phi1^2 + 1/2*phi2^2");

  REQUIRE(gc_eval(h.ws, "2*H - phi1^2", &out) == GC_OK);
  CHECK(take(out) == "phi2^2");

  REQUIRE(gc_epb(h.ws, "phi1", "l1", &out) == GC_OK);
  CHECK(take(out) == "1");

  REQUIRE(gc_epb(h.ws, "c1", "cb1", &out) == GC_OK);
  CHECK(take(out) == "-I");

  REQUIRE(gc_ext_d(h.ws, "F", &out) == GC_OK);
  CHECK(take(out) == "phi2*c1 + phi1*c2");

  REQUIRE(gc_interior(h.ws, "V", "phi1*c1", &out) == GC_OK);
  CHECK(take(out) == "phi1*phi2");

  REQUIRE(gc_lie_derivative(h.ws, "V", "phi1", &out) == GC_OK);
  CHECK(take(out) == "phi2");

  REQUIRE(gc_sharp(h.ws, "H", &out) == GC_OK);
  std::string sh = take(out);
  CHECK(sh.find("cb") != std::string::npos);

  REQUIRE(gc_flat(h.ws, "phi2*cb1 - phi1*cb2", &out) == GC_OK);
  std::string low = take(out);
  CHECK(low.find("c") != std::string::npos);

  REQUIRE(gc_workspace_save_text(h.ws, &out) == GC_OK);
  std::string text = take(out);
  gc_workspace* back = nullptr;
  REQUIRE(gc_workspace_load_text(text.c_str(), &back) == GC_OK);
  char* again = nullptr;
  REQUIRE(gc_workspace_save_text(back, &again) == GC_OK);
  CHECK(take(again) == text);
  gc_workspace_free(back);
}

TEST_CASE("charges print their canonical lines") {
  Handle h;
  REQUIRE(gc_workspace_load_text(kDoc, &h.ws) == GC_OK);
  char* out = nullptr;
  REQUIRE(gc_charges(h.ws, &out) == GC_OK);
  CHECK(take(out) ==
        "Q = I*c1*l1 + I*c2*l2\n"
        "Qbar = I*cb1*l2 - I*cb2*l1\n"
        "Qg = c1*cb1 + c2*cb2\n"
        "K = -c1*c2\n"
        "Kbar = cb1*cb2");
}

TEST_CASE("bracket listings") {
  Handle h;
  REQUIRE(gc_workspace_load_text(kDoc, &h.ws) == GC_OK);
  char* out = nullptr;

  REQUIRE(gc_lie_bracket(h.ws, "V", "V", &out) == GC_OK);
  CHECK(take(out) == "0");

  REQUIRE(gc_lie_bracket(h.ws, "V", "cb1", &out) == GC_OK);
  CHECK(take(out) == "(2) : 1");

  REQUIRE(gc_sn_bracket(h.ws, "V", "V", &out) == GC_OK);
  CHECK(take(out) == "0");

  REQUIRE(gc_fn_bracket(h.ws, "V", "cb1", &out) == GC_OK);
  CHECK(take(out) == "2|() : 1");

  REQUIRE(gc_nr_bracket(h.ws, "cb1*c1 + cb2*c2", "cb1*c1 + cb2*c2", &out) ==
          GC_OK);
  CHECK(take(out) == "0");
}

TEST_CASE("calibration constants surface through the interface") {
  char* out = nullptr;
  REQUIRE(gc_calibrate(&out) == GC_OK);
  CHECK(take(out) ==
        "k_lie = -1\n"
        "k_sn = -1\n"
        "k_nr = -I\n"
        "k_fn = -1");
}

TEST_CASE("verify runs clean on a small battery") {
  char* report = nullptr;
  unsigned failures = 99;
  REQUIRE(gc_verify(7, 2, &report, &failures) == GC_OK);
  std::string text = take(report);
  CHECK(failures == 0);
  CHECK(text.find("result: OK") != std::string::npos);
  CHECK(text.find("fundamental-table") != std::string::npos);
  CHECK(text.find("differential-oracle") != std::string::npos);
}

TEST_CASE("error statuses and messages") {
  Handle h;
  REQUIRE(gc_workspace_load_text(kDoc, &h.ws) == GC_OK);
  char* out = nullptr;

  CHECK(gc_eval(h.ws, "phi1 +", &out) == GC_ERR_PARSE);
  CHECK(std::strlen(gc_last_error()) > 0);
  CHECK(gc_eval(h.ws, "nosuch", &out) == GC_ERR_UNBOUND_NAME);
  CHECK(gc_eval(h.ws, "phi9", &out) == GC_ERR_INDEX);
  CHECK(gc_eval(h.ws, "c1^2", &out) == GC_ERR_ODD_POWER);
  CHECK(gc_sharp(h.ws, "c1", &out) == GC_ERR_TYPE_MISMATCH);
  CHECK(gc_ext_d(h.ws, "l1", &out) == GC_ERR_DECODE);
  CHECK(gc_flat(h.ws, "phi1", &out) == GC_ERR_DECODE);

  gc_workspace* bad = nullptr;
  CHECK(gc_workspace_load_text("wrong-header\n", &bad) == GC_ERR_VERSION);
  CHECK(gc_workspace_load_text("gradedcartan-v1\ndim 1\nlet a := 1\nlet a := 2\n",
                               &bad) == GC_ERR_DUPLICATE_NAME);
  CHECK(gc_workspace_load_file("/nonexistent/path.gc", &bad) == GC_ERR_IO);
  CHECK(gc_eval(nullptr, "phi1", &out) == GC_ERR_INTERNAL);
  CHECK(gc_eval(h.ws, "phi1", nullptr) == GC_ERR_INTERNAL);
}
