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

#ifndef DIACAT_SCALAR_HPP
#define DIACAT_SCALAR_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace diacat {

/// Coefficient field: the rationals or a prime field F_p with p < 2^31.
class Field {
public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p);

  bool is_rational() const noexcept { return p_ == 0; }
  bool is_finite() const noexcept { return p_ != 0; }
  /// 0 for the rationals.
  std::uint64_t characteristic() const noexcept { return p_; }
  std::string name() const;

  friend bool operator==(Field a, Field b) noexcept { return a.p_ == b.p_; }
  friend bool operator!=(Field a, Field b) noexcept { return a.p_ != b.p_; }

private:
  friend class Scalar;
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

/// An exact field element. Rationals are kept in lowest terms with a positive
/// denominator (GMP canonical form); residues always lie in [0, p).
class Scalar {
public:
  static Scalar zero(Field f);
  static Scalar one(Field f);
  static Scalar from_int(Field f, long value);
  static Scalar from_rational(mpq_class q);
  /// Accepts "a", "-a" and "a/b". Over F_p the denominator is inverted mod p.
  /// Throws Errc::ParseError on malformed input or a zero denominator.
  static Scalar parse(Field f, std::string_view text);

  Field field() const noexcept;
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Residue in [0, p); only valid over F_p.
  std::uint64_t residue() const;
  /// Only valid over Q.
  const mpq_class &rational() const;

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar &operator+=(const Scalar &o);
  Scalar &operator-=(const Scalar &o);
  Scalar &operator*=(const Scalar &o);
  Scalar &operator/=(const Scalar &o);

  friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }
  friend bool operator==(const Scalar &a, const Scalar &b);
  friend bool operator!=(const Scalar &a, const Scalar &b) { return !(a == b); }

  /// Canonical text: "r" over F_p, "n" or "n/d" over Q.
  std::string to_string() const;

private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t p;
  };
  explicit Scalar(Residue r) : v_(r) {}
  explicit Scalar(mpq_class q) : v_(std::move(q)) {}
  void check_same(const Scalar &o) const;

  std::variant<Residue, mpq_class> v_;
};

} // namespace diacat

#endif
