// Copyright 2026 The cherednik-verify Authors
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

#include "cherednik/cherednik.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "cherednik/checks.hpp"
#include "cherednik/errors.hpp"
#include "cherednik/hecke.hpp"
#include "cherednik/reflgroup.hpp"

struct cv_group {
  cherednik::refl::ReflectionGroup group;
};

struct cv_signature {
  cherednik::hecke::OrbifoldSignature sig;
};

struct cv_report {
  std::string status;
  std::string id;
  std::string json;
};

namespace {

thread_local std::string last_error;

int fail(int code, std::string message) {
  last_error = std::move(message);
  return code;
}

template <class F>
int guarded(F&& f) {
  try {
    return f();
  } catch (const cherednik::InvalidInput& e) {
    return fail(CV_USAGE, e.what());
  } catch (const cherednik::InternalInconsistency& e) {
    return fail(CV_INTERNAL, std::string("internal inconsistency: ") + e.what());
  } catch (const std::bad_alloc&) {
    return fail(CV_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CV_INTERNAL, e.what());
  } catch (...) {
    return fail(CV_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int null_argument(const char* what) { return fail(CV_USAGE, std::string(what) + " must not be NULL"); }

}  // namespace

extern "C" {

const char* cv_version(void) { return "0.1.0"; }

const char* cv_last_error(void) { return last_error.c_str(); }

void cv_string_free(char* s) { std::free(s); }

int cv_group_open(const char* key, cv_group** out) {
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  if (key == nullptr) return null_argument("key");
  return guarded([&] {
    auto spec = cherednik::refl::parse_group_key(key);
    *out = new cv_group{cherednik::refl::ReflectionGroup::build(spec)};
    return CV_OK;
  });
}

void cv_group_free(cv_group* g) { delete g; }

int cv_group_order(const cv_group* g, long* out) {
  if (g == nullptr || out == nullptr) return null_argument("group and out");
  *out = static_cast<long>(g->group.order());
  return CV_OK;
}

int cv_group_rank(const cv_group* g, long* out) {
  if (g == nullptr || out == nullptr) return null_argument("group and out");
  *out = static_cast<long>(g->group.rank());
  return CV_OK;
}

int cv_group_describe(const cv_group* g, char** json_out) {
  if (g == nullptr || json_out == nullptr) return null_argument("group and json_out");
  return guarded([&] {
    const nlohmann::json j = {{"name", g->group.name()},
                              {"order", g->group.order()},
                              {"rank", g->group.rank()},
                              {"reflections", g->group.reflections().size()},
                              {"reflection_classes", g->group.classes().size()}};
    *json_out = copy_string(j.dump());
    return CV_OK;
  });
}

int cv_signature_parse(const char* text, cv_signature** out) {
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  if (text == nullptr) return null_argument("text");
  return guarded([&] {
    *out = new cv_signature{cherednik::hecke::parse_signature(text)};
    return CV_OK;
  });
}

void cv_signature_free(cv_signature* s) { delete s; }

int cv_signature_describe(const cv_signature* s, char** json_out) {
  if (s == nullptr || json_out == nullptr) return null_argument("signature and json_out");
  return guarded([&] {
    const auto chi = s->sig.chi_orb();
    const nlohmann::json j = {{"signature", s->sig.to_string()},
                              {"chi_orb", chi.get_d()},
                              {"chi_orb_exact", chi.get_str()},
                              {"geometry", cherednik::hecke::to_string(s->sig.geometry())}};
    *json_out = copy_string(j.dump());
    return CV_OK;
  });
}

int cv_check_names(char** json_out) {
  if (json_out == nullptr) return null_argument("json_out");
  return guarded([&] {
    *json_out = copy_string(nlohmann::json(cherednik::checks::names()).dump());
    return CV_OK;
  });
}

int cv_suite_plan(int quick, char** json_out) {
  if (json_out == nullptr) return null_argument("json_out");
  return guarded([&] {
    *json_out = copy_string(cherednik::checks::suite(quick != 0).dump());
    return CV_OK;
  });
}

int cv_run(const char* check, const char* inputs_json, cv_report** out) {
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  if (check == nullptr) return null_argument("check");
  return guarded([&] {
    nlohmann::json inputs = nlohmann::json::object();
    if (inputs_json != nullptr && *inputs_json != '\0') {
      try {
        inputs = nlohmann::json::parse(inputs_json);
      } catch (const nlohmann::json::parse_error& e) {
        throw cherednik::InvalidInput(std::string("inputs are not valid JSON: ") + e.what());
      }
    }
    const cherednik::checks::Report rep = cherednik::checks::run(check, inputs);
    *out = new cv_report{cherednik::to_string(rep.status), rep.id, rep.to_json().dump()};
    return rep.status == cherednik::Status::pass ? CV_OK : CV_CHECK_FAILED;
  });
}

void cv_report_free(cv_report* r) { delete r; }

const char* cv_report_status(const cv_report* r) { return r == nullptr ? "" : r->status.c_str(); }

const char* cv_report_json(const cv_report* r) { return r == nullptr ? "" : r->json.c_str(); }

const char* cv_report_id(const cv_report* r) { return r == nullptr ? "" : r->id.c_str(); }

}  // extern "C"
