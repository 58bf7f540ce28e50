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

#include "diacat/scalar.hpp"

#include <cctype>

#include "diacat/error.hpp"

namespace diacat {

const char *errc_name(Errc code) {
  switch (code) {
  case Errc::DimensionMismatch: return "DimensionMismatch";
  case Errc::FieldMismatch: return "FieldMismatch";
  case Errc::FlavorMismatch: return "FlavorMismatch";
  case Errc::ParseError: return "ParseError";
  case Errc::NotAnIdeal: return "NotAnIdeal";
  case Errc::AxiomViolation: return "AxiomViolation";
  case Errc::InvalidAction: return "InvalidAction";
  case Errc::InvalidCrossedModule: return "InvalidCrossedModule";
  case Errc::InvalidCat1: return "InvalidCat1";
  case Errc::InvalidInternalCategory: return "InvalidInternalCategory";
  case Errc::LemmaViolation: return "LemmaViolation";
  case Errc::NotAMorphism: return "NotAMorphism";
  case Errc::ResourceCap: return "ResourceCap";
  case Errc::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
  case Errc::NotFinite: return "NotFinite";
  case Errc::UnknownName: return "UnknownName";
  case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (e) {
    if (e & 1)
      r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

} // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime(p))
    fail(Errc::ParseError, "field characteristic must be a prime below 2^31, got " +
                               std::to_string(p));
  return Field(p);
}

std::string Field::name() const {
  return p_ == 0 ? std::string("Q") : "F_" + std::to_string(p_);
}

Scalar Scalar::zero(Field f) {
  if (f.is_rational())
    return Scalar(mpq_class(0));
  return Scalar(Residue{0, static_cast<std::uint32_t>(f.characteristic())});
}

Scalar Scalar::one(Field f) { return from_int(f, 1); }

Scalar Scalar::from_int(Field f, long value) {
  if (f.is_rational())
    return Scalar(mpq_class(value));
  auto p = static_cast<long>(f.characteristic());
  long r = value % p;
  if (r < 0)
    r += p;
  return Scalar(Residue{static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(p)});
}

Scalar Scalar::from_rational(mpq_class q) {
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::parse(Field f, std::string_view text) {
  auto bad = [&](const char *why) -> Scalar {
    fail(Errc::ParseError, "bad coefficient \"" + std::string(text) + "\": " + why);
  };
  if (text.empty())
    return bad("empty");
  auto slash = text.find('/');
  auto num = text.substr(0, slash);
  auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  auto valid_int = [](std::string_view s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+'))
      i = 1;
    if (i == s.size())
      return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        return false;
    return true;
  };
  if (!valid_int(num, true) || !valid_int(den, false))
    return bad("expected an integer or a fraction n/d");
  std::string num_s(num.front() == '+' ? num.substr(1) : num);
  mpz_class n(num_s), d{std::string(den)};
  if (d == 0)
    return bad("zero denominator");
  if (f.is_rational())
    return from_rational(mpq_class(n, d));
  mpz_class p(static_cast<unsigned long>(f.characteristic()));
  mpz_class dn = d % p;
  if (dn == 0)
    return bad("denominator vanishes modulo p");
  mpz_class nn = n % p;
  if (nn < 0)
    nn += p;
  auto nr = Scalar(Residue{static_cast<std::uint32_t>(nn.get_ui()),
                           static_cast<std::uint32_t>(f.characteristic())});
  auto dr = Scalar(Residue{static_cast<std::uint32_t>(dn.get_ui()),
                           static_cast<std::uint32_t>(f.characteristic())});
  return nr / dr;
}

Field Scalar::field() const noexcept {
  if (auto r = std::get_if<Residue>(&v_))
    return Field(r->p);
  return Field::rationals();
}

bool Scalar::is_zero() const noexcept {
  if (auto r = std::get_if<Residue>(&v_))
    return r->value == 0;
  return sgn(std::get<mpq_class>(v_)) == 0;
}

bool Scalar::is_one() const noexcept {
  if (auto r = std::get_if<Residue>(&v_))
    return r->value == 1;
  return std::get<mpq_class>(v_) == 1;
}

std::uint64_t Scalar::residue() const {
  if (auto r = std::get_if<Residue>(&v_))
    return r->value;
  fail(Errc::FieldMismatch, "residue() called on a rational scalar");
}

const mpq_class &Scalar::rational() const {
  if (auto q = std::get_if<mpq_class>(&v_))
    return *q;
  fail(Errc::FieldMismatch, "rational() called on a residue");
}

void Scalar::check_same(const Scalar &o) const {
  auto a = std::get_if<Residue>(&v_);
  auto b = std::get_if<Residue>(&o.v_);
  if ((a == nullptr) != (b == nullptr) || (a && a->p != b->p))
    fail(Errc::FieldMismatch, "arithmetic between scalars of different fields");
}

Scalar Scalar::operator-() const {
  if (auto r = std::get_if<Residue>(&v_))
    return Scalar(Residue{r->value == 0 ? 0 : r->p - r->value, r->p});
  return Scalar(mpq_class(-std::get<mpq_class>(v_)));
}

Scalar Scalar::inverse() const {
  if (is_zero())
    fail(Errc::Internal, "inverse of zero");
  if (auto r = std::get_if<Residue>(&v_))
    return Scalar(Residue{pow_mod(r->value, r->p - 2, r->p), r->p});
  return Scalar(mpq_class(1 / std::get<mpq_class>(v_)));
}

Scalar &Scalar::operator+=(const Scalar &o) {
  check_same(o);
  if (auto r = std::get_if<Residue>(&v_)) {
    std::uint32_t s = r->value + std::get<Residue>(o.v_).value;
    r->value = s >= r->p ? s - r->p : s;
  } else {
    std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
  }
  return *this;
}

Scalar &Scalar::operator-=(const Scalar &o) {
  check_same(o);
  if (auto r = std::get_if<Residue>(&v_)) {
    std::uint32_t b = std::get<Residue>(o.v_).value;
    r->value = r->value >= b ? r->value - b : r->value + r->p - b;
  } else {
    std::get<mpq_class>(v_) -= std::get<mpq_class>(o.v_);
  }
  return *this;
}

Scalar &Scalar::operator*=(const Scalar &o) {
  check_same(o);
  if (auto r = std::get_if<Residue>(&v_)) {
    std::uint64_t prod = std::uint64_t(r->value) * std::get<Residue>(o.v_).value;
    r->value = static_cast<std::uint32_t>(prod % r->p);
  } else {
    std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
  }
  return *this;
}

Scalar &Scalar::operator/=(const Scalar &o) { return *this *= o.inverse(); }

bool operator==(const Scalar &a, const Scalar &b) {
  a.check_same(b);
  if (auto r = std::get_if<Scalar::Residue>(&a.v_))
    return r->value == std::get<Scalar::Residue>(b.v_).value;
  return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
}

std::string Scalar::to_string() const {
  if (auto r = std::get_if<Residue>(&v_))
    return std::to_string(r->value);
  return std::get<mpq_class>(v_).get_str();
}

} // namespace diacat
