// Copyright 2026 The prcodes Authors
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

#include <climits>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prc/field.hpp"

namespace prc {

/// Polynomial degree with a distinguished value for the zero polynomial that
/// orders below every integer and absorbs addition.
class Degree {
 public:
  constexpr Degree(int d) noexcept : v_(d) {}  // NOLINT(google-explicit-constructor)
  static constexpr Degree neg_inf() noexcept { return Degree(kNegInf, 0); }

  constexpr bool is_neg_inf() const noexcept { return v_ == kNegInf; }
  /// Integer value; only meaningful when !is_neg_inf().
  constexpr int value() const noexcept { return v_; }

  friend constexpr bool operator==(Degree a, Degree b) noexcept = default;
  friend constexpr auto operator<=>(Degree a, Degree b) noexcept { return a.v_ <=> b.v_; }
  friend constexpr Degree operator+(Degree a, Degree b) noexcept {
    return (a.is_neg_inf() || b.is_neg_inf()) ? neg_inf() : Degree(a.v_ + b.v_);
  }

 private:
  static constexpr int kNegInf = INT_MIN;
  constexpr Degree(int v, int) noexcept : v_(v) {}
  int v_;
};

/// Dense univariate polynomial over a finite field, ascending coefficients,
/// normalized so the last stored coefficient is nonzero.
class Polynomial {
 public:
  /// Zero polynomial over GF(2).
  Polynomial() = default;
  /// Zero polynomial over `field`.
  explicit Polynomial(Field field) : field_(std::move(field)) {}
  Polynomial(Field field, std::vector<std::uint64_t> coeffs);

  static Polynomial constant(const Field& field, std::uint64_t c);
  static Polynomial monomial(const Field& field, std::uint64_t c, std::size_t exponent);
  static Polynomial x(const Field& field) { return monomial(field, 1, 1); }

  const Field& field() const noexcept { return field_; }
  std::span<const std::uint64_t> coeffs() const noexcept { return coeffs_; }
  std::uint64_t coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  Degree degree() const noexcept {
    return coeffs_.empty() ? Degree::neg_inf() : Degree(static_cast<int>(coeffs_.size()) - 1);
  }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  /// Leading coefficient; 0 for the zero polynomial.
  std::uint64_t lead() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
  bool is_monic() const noexcept { return lead() == 1; }

  /// Divides by the leading coefficient. Zero stays zero.
  Polynomial monic() const;
  Polynomial scaled(std::uint64_t c) const;
  std::uint64_t evaluate(std::uint64_t point) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  /// Quotient and remainder of long division.
  friend Polynomial operator/(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator%(const Polynomial& a, const Polynomial& b);
  /// Equal field and equal coefficients.
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void normalize();

  Field field_;
  std::vector<std::uint64_t> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

/// a = q*b + r with deg r < deg b. Throws std::domain_error when b is zero.
DivMod divmod(const Polynomial& a, const Polynomial& b);

/// a / b when b divides a exactly.
std::optional<Polynomial> exact_div(const Polynomial& a, const Polynomial& b);

struct ExtGcd {
  Polynomial gcd;  // monic
  Polynomial u;
  Polynomial v;
};

/// u*a + v*b = gcd(a, b) with a monic gcd. Throws when both inputs are zero.
ExtGcd ext_gcd(const Polynomial& a, const Polynomial& b);

/// w with b*w = 1 (mod m), deg w < deg m. Throws std::domain_error when b is
/// not invertible modulo m, std::invalid_argument when deg m < 1.
Polynomial mod_inverse(const Polynomial& b, const Polynomial& m);

/// base^e mod m.
Polynomial pow_mod(const Polynomial& base, std::uint64_t e, const Polynomial& m);

/// Rabin's test. Throws std::invalid_argument for constant or zero input.
bool is_irreducible(const Polynomial& f);

/// Monic irreducible of exactly `degree`, deterministic in `seed`.
Polynomial random_irreducible(const Field& field, unsigned degree, std::uint64_t seed);

/// Smallest monic irreducible of `degree` when lower coefficients are read as
/// the base-q digits of an integer (constant term least significant).
Polynomial smallest_irreducible(const Field& field, unsigned degree);

/// Text form: ascending coefficients separated by single spaces; zero is "0".
std::string to_string(const Polynomial& p);
/// Accepts whitespace or '.' separators. Throws std::invalid_argument.
Polynomial parse_polynomial(const Field& field, std::string_view text);

}  // namespace prc
