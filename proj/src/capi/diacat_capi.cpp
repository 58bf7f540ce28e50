/* Copyright 2026 The diacat Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include "diacat/diacat.h"

#include <cstdlib>
#include <cstring>
#include <functional>
#include <new>
#include <string>

#include "diacat/commands.hpp"
#include "diacat/error.hpp"
#include "diacat/fixtures.hpp"

struct diacat_object {
  diacat::Object object;
  std::string name;
};

namespace {

thread_local std::string last_message;
thread_local std::string last_kind;

diacat_status status_of(diacat::Errc c) {
  using diacat::Errc;
  switch (c) {
  case Errc::AxiomViolation:
  case Errc::InvalidAction:
  case Errc::InvalidCrossedModule:
  case Errc::InvalidCat1:
  case Errc::InvalidInternalCategory:
  case Errc::LemmaViolation:
  case Errc::NotAMorphism:
  case Errc::NotAnIdeal:
    return DIACAT_MATH_FAILURE;
  case Errc::ParseError:
  case Errc::DimensionMismatch:
  case Errc::FieldMismatch:
  case Errc::FlavorMismatch:
  case Errc::UnknownName:
  case Errc::NotFinite:
    return DIACAT_INPUT_ERROR;
  case Errc::ResourceCap:
  case Errc::SearchSpaceTooLarge:
    return DIACAT_RESOURCE_CAP;
  case Errc::Internal:
    break;
  }
  return DIACAT_INTERNAL_ERROR;
}

diacat_status set_error(diacat_status s, const char *kind, const std::string &msg) {
  last_kind = kind;
  last_message = msg;
  return s;
}

diacat_status guard(const std::function<diacat_status()> &body) {
  last_kind.clear();
  last_message.clear();
  try {
    return body();
  } catch (const diacat::Error &e) {
    return set_error(status_of(e.code()), diacat::errc_name(e.code()), e.what());
  } catch (const std::bad_alloc &) {
    return set_error(DIACAT_RESOURCE_CAP, "ResourceCap", "out of memory");
  } catch (const std::exception &e) {
    return set_error(DIACAT_INTERNAL_ERROR, "Internal", e.what());
  } catch (...) {
    return set_error(DIACAT_INTERNAL_ERROR, "Internal", "unknown exception");
  }
}

char *copy_out(const std::string &s) {
  char *p = static_cast<char *>(std::malloc(s.size() + 1));
  if (!p)
    throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

diacat_status null_arg(const char *what) {
  return set_error(DIACAT_INVALID_ARGUMENT, "InvalidArgument", std::string(what) + " is NULL");
}

} // namespace

extern "C" {

const char *diacat_version(void) { return "1.0.0"; }

const char *diacat_last_error(void) { return last_message.c_str(); }

const char *diacat_last_error_kind(void) { return last_kind.c_str(); }

void diacat_string_free(char *s) { std::free(s); }

diacat_status diacat_load_document(const char *json, diacat_object **out) {
  if (!json)
    return null_arg("json");
  if (!out)
    return null_arg("out");
  return guard([&] {
    *out = new diacat_object{diacat::parse_document(json), ""};
    return DIACAT_OK;
  });
}

diacat_status diacat_load_fixture(const char *name, diacat_object **out) {
  if (!name)
    return null_arg("name");
  if (!out)
    return null_arg("out");
  return guard([&] {
    *out = new diacat_object{diacat::fixture_object(name), name};
    return DIACAT_OK;
  });
}

void diacat_object_free(diacat_object *obj) { delete obj; }

const char *diacat_object_kind(const diacat_object *obj) {
  return obj ? diacat::object_kind(obj->object) : nullptr;
}

const char *diacat_object_name(const diacat_object *obj) {
  return obj ? obj->name.c_str() : nullptr;
}

diacat_status diacat_object_to_document(const diacat_object *obj, char **json) {
  if (!obj)
    return null_arg("obj");
  if (!json)
    return null_arg("json");
  return guard([&] {
    *json = copy_out(diacat::dump(diacat::object_to_json(obj->object)));
    return DIACAT_OK;
  });
}

diacat_status diacat_check(const diacat_object *obj, char **report) {
  if (!obj)
    return null_arg("obj");
  if (!report)
    return null_arg("report");
  return guard([&] {
    auto r = diacat::run_check(obj->object);
    *report = copy_out(diacat::dump(r.report));
    if (r.passed)
      return DIACAT_OK;
    return set_error(DIACAT_MATH_FAILURE, "CheckFailed", "check failed");
  });
}

diacat_status diacat_construct(const char *kind, const diacat_object *const *inputs,
                               size_t n_inputs, size_t trunc, diacat_object **out,
                               char **report) {
  if (!kind)
    return null_arg("kind");
  if (n_inputs && !inputs)
    return null_arg("inputs");
  return guard([&] {
    std::vector<diacat::Object> in;
    for (size_t i = 0; i < n_inputs; ++i) {
      if (!inputs[i])
        return null_arg("input handle");
      in.push_back(inputs[i]->object);
    }
    auto r = diacat::run_construct(kind, in, trunc);
    char *rep = copy_out(diacat::dump(r.report));
    if (out)
      *out = new diacat_object{std::move(*r.output), ""};
    if (report)
      *report = rep;
    else
      std::free(rep);
    if (r.passed)
      return DIACAT_OK;
    return set_error(DIACAT_MATH_FAILURE, "CheckFailed", "constructed object failed its check");
  });
}

diacat_status diacat_verify(const char *what, const diacat_object *const *objects,
                            size_t n_objects, size_t trunc, uint64_t seed, char **report) {
  if (!what)
    return null_arg("what");
  if (!report)
    return null_arg("report");
  if (n_objects && !objects)
    return null_arg("objects");
  return guard([&] {
    std::vector<diacat::NamedObject> in;
    for (size_t i = 0; i < n_objects; ++i) {
      if (!objects[i])
        return null_arg("object handle");
      std::string name =
          objects[i]->name.empty() ? "input " + std::to_string(i) : objects[i]->name;
      in.push_back({name, objects[i]->object});
    }
    auto r = diacat::run_verify(what, in, trunc, seed);
    *report = copy_out(diacat::dump(r.report));
    if (r.passed)
      return DIACAT_OK;
    return set_error(DIACAT_MATH_FAILURE, "VerificationFailed", "some items failed");
  });
}

diacat_status diacat_fixture_names(char **json) {
  if (!json)
    return null_arg("json");
  return guard([&] {
    diacat::Json list = diacat::Json::array();
    for (const auto &f : diacat::fixture_registry())
      list.push_back({{"name", f.name}, {"kind", f.kind}, {"note", f.note}});
    *json = copy_out(diacat::dump(list));
    return DIACAT_OK;
  });
}

diacat_status diacat_construct_kinds(char **json) {
  if (!json)
    return null_arg("json");
  return guard([&] {
    *json = copy_out(diacat::dump(diacat::construct_kinds()));
    return DIACAT_OK;
  });
}

diacat_status diacat_square_ids(char **json) {
  if (!json)
    return null_arg("json");
  return guard([&] {
    diacat::Json list = diacat::Json::array();
    for (const auto &s : diacat::square_registry())
      list.push_back({{"id", s.id},
                      {"source", diacat::category_name(s.source)},
                      {"expected", diacat::verdict_name(s.expected)},
                      {"description", s.description}});
    *json = copy_out(diacat::dump(list));
    return DIACAT_OK;
  });
}

} // extern "C"
