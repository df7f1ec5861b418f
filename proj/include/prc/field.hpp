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

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace prc {

/// Raised when operands belong to different fields.
class FieldMismatch : public std::invalid_argument {
 public:
  FieldMismatch() : std::invalid_argument("operands belong to different fields") {}
};

namespace detail {
struct FieldImpl;
}

/**
 * Finite field GF(p^m) descriptor.
 *
 * Elements are canonical integers in [0, q) whose base-p digits are the
 * polynomial-basis coordinates (digit i is the coefficient of x^i). The
 * descriptor is a cheap shared handle; copies refer to the same tables.
 *
 * Constraints: p prime with p < 2^16, 1 <= m <= 16, q = p^m < 2^64, and for
 * m > 1 a monic irreducible field polynomial of degree m over GF(p).
 */
class Field {
 public:
  /// GF(2).
  Field();

  static Field prime(std::uint32_t p);
  /// GF(p^m) with the smallest monic irreducible field polynomial, ordering
  /// candidates by their integer encoding (x^m + ... read as base-p digits).
  static Field extension(std::uint32_t p, unsigned m);
  /// field_poly holds ascending coefficients, size m + 1, last entry 1.
  static Field extension(std::uint32_t p, unsigned m, std::vector<std::uint64_t> field_poly);

  /// Text form `p[:m[:c0.c1...cm]]`.
  static Field parse(std::string_view descriptor);
  /// Canonical text form; always spells out the field polynomial when m > 1.
  std::string descriptor() const;

  std::uint32_t characteristic() const noexcept;
  unsigned degree() const noexcept;
  std::uint64_t order() const noexcept;
  /// Ascending coefficients of the field polynomial; empty for prime fields.
  const std::vector<std::uint64_t>& field_poly() const noexcept;

  bool contains(std::uint64_t v) const noexcept { return v < order(); }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  /// Throws std::domain_error for a = 0.
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t div(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

  friend bool operator==(const Field& a, const Field& b) noexcept;

 private:
  explicit Field(std::shared_ptr<const detail::FieldImpl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const detail::FieldImpl> impl_;
};

/// Value bound to its field; mixing fields throws FieldMismatch.
class FieldElement {
 public:
  FieldElement(Field field, std::uint64_t value);

  const Field& field() const noexcept { return field_; }
  std::uint64_t value() const noexcept { return value_; }

  FieldElement inv() const { return {field_, field_.inv(value_)}; }
  FieldElement operator-() const { return {field_, field_.neg(value_)}; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  Field field_;
  std::uint64_t value_;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace prc
