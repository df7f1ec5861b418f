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

#include <doctest.h>

#include <cstdint>
#include <vector>

#include "prc/field.hpp"

using prc::Field;
using prc::FieldElement;

namespace {

// Carry-less remainder of GF(2) polynomials packed into integers.
std::uint64_t gf2_mod(std::uint64_t a, std::uint64_t b) {
  const int db = 63 - __builtin_clzll(b);
  while (a != 0 && 63 - __builtin_clzll(a) >= db) a ^= b << ((63 - __builtin_clzll(a)) - db);
  return a;
}

bool gf2_irreducible_brute(std::uint64_t f) {
  const int d = 63 - __builtin_clzll(f);
  for (std::uint64_t g = 2; g < (std::uint64_t{1} << (d / 2 + 1)); ++g) {
    if (gf2_mod(f, g) == 0) return false;
  }
  return true;
}

std::vector<Field> small_fields() {
  return {Field::prime(2),        Field::prime(3),        Field::prime(5),       Field::prime(7),
          Field::extension(2, 2), Field::extension(2, 3), Field::extension(3, 2), Field::extension(2, 4),
          Field::extension(5, 2), Field::extension(3, 3), Field::extension(2, 5), Field::extension(7, 2),
          Field::extension(2, 6)};
}

}  // namespace

TEST_CASE("addition examples") {
  const Field gf2 = Field::prime(2), gf5 = Field::prime(5);
  CHECK(gf2.add(1, 1) == 0);
  CHECK(gf5.add(3, 4) == 2);
  const Field gf4 = Field::extension(2, 2, {1, 1, 1});
  CHECK(gf4.add(2, 3) == 1);
}

TEST_CASE("multiplication examples") {
  const Field gf5 = Field::prime(5);
  CHECK(gf5.mul(3, 4) == 2);
  const Field gf4 = Field::extension(2, 2, {1, 1, 1});
  CHECK(gf4.mul(2, 2) == 3);
  for (const auto& f : small_fields()) {
    for (std::uint64_t a = 0; a < f.order(); ++a) CHECK(f.mul(a, 1) == a);
  }
}

TEST_CASE("inverse examples") {
  CHECK(Field::prime(5).inv(2) == 3);
  CHECK(Field::prime(2).inv(1) == 1);
  const Field gf4 = Field::extension(2, 2, {1, 1, 1});
  // exhaustive search for the inverse of x
  std::uint64_t found = 0;
  for (std::uint64_t b = 1; b < 4; ++b) {
    if (gf4.mul(2, b) == 1) found = b;
  }
  CHECK(found == 3);
  CHECK(gf4.inv(2) == 3);
  CHECK_THROWS_AS(gf4.inv(0), std::domain_error);
}

TEST_CASE("field axioms hold exhaustively for q <= 64") {
  for (const auto& f : small_fields()) {
    CAPTURE(f.descriptor());
    const std::uint64_t q = f.order();
    REQUIRE(q <= 64);
    bool ok = true;
    for (std::uint64_t a = 0; a < q; ++a) {
      ok &= f.add(a, 0) == a;
      ok &= f.add(a, f.neg(a)) == 0;
      ok &= f.pow(a, q) == a;  // Frobenius
      if (a != 0) {
        ok &= f.mul(a, f.inv(a)) == 1;
        ok &= f.inv(f.inv(a)) == a;
      }
      for (std::uint64_t b = 0; b < q; ++b) {
        ok &= f.add(a, b) == f.add(b, a);
        ok &= f.mul(a, b) == f.mul(b, a);
        ok &= f.sub(f.add(a, b), b) == a;
        for (std::uint64_t c = 0; c < q; ++c) {
          ok &= f.add(f.add(a, b), c) == f.add(a, f.add(b, c));
          ok &= f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c));
          ok &= f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
        }
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("large fields use on-the-fly reduction consistently") {
  const Field big = Field::extension(3, 11);  // q = 177147, beyond the table range
  const Field wide = Field::extension(2, 16);
  for (const auto& f : {big, wide}) {
    std::uint64_t a = 12345 % f.order(), b = 99991 % f.order(), c = 4242;
    for (int i = 0; i < 200; ++i) {
      CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      a = (a * 7 + 3) % f.order();
      b = (b * 13 + 5) % f.order();
      c = (c * 17 + 1) % f.order();
      if (a == 0) a = 1;
    }
  }
  const Field gf65521 = Field::prime(65521);
  CHECK(gf65521.mul(65520, 65520) == 1);
}

TEST_CASE("default field polynomial is the smallest irreducible") {
  const Field gf256 = Field::extension(2, 8);
  CHECK(gf256.descriptor() == "2:8:1.1.0.1.1.0.0.0.1");
  std::uint64_t smallest = 0;
  for (std::uint64_t f = 256; f < 512 && smallest == 0; ++f) {
    if (gf2_irreducible_brute(f)) smallest = f;
  }
  CHECK(smallest == 0x11B);
}

TEST_CASE("descriptor parsing and validation") {
  CHECK(Field::parse("5").order() == 5);
  CHECK(Field::parse("2:4").order() == 16);
  const Field aes = Field::parse("2:8:1.1.0.1.1.0.0.0.1");
  CHECK(aes.field_poly() == std::vector<std::uint64_t>{1, 1, 0, 1, 1, 0, 0, 0, 1});
  CHECK(Field::parse(aes.descriptor()) == aes);
  // x^8 + x^4 + x^3 + x^2 + 1, also irreducible
  CHECK(Field::parse("2:8:1.0.1.1.1.0.0.0.1").order() == 256);
  CHECK_FALSE(Field::parse("2:8:1.0.1.1.1.0.0.0.1") == aes);

  CHECK_THROWS(Field::parse("4"));                  // not prime
  CHECK_THROWS(Field::parse("2:2:1.0.1"));          // x^2 + 1 reducible
  CHECK_THROWS(Field::parse("2:2:1.1.0"));          // not monic of degree 2
  CHECK_THROWS(Field::parse("2:17"));               // degree above 16
  CHECK_THROWS(Field::parse("65537"));              // p >= 2^16
  CHECK_THROWS(Field::parse("x"));
  CHECK_THROWS(Field::parse("2:3:1.1.0.1:9"));
  CHECK(Field::parse("65521:4").order() == 65521ULL * 65521 * 65521 * 65521);
  CHECK_THROWS(Field::parse("65521:5"));  // q overflows 64 bits
}

TEST_CASE("elements of different fields do not mix") {
  const FieldElement a(Field::prime(5), 3);
  const FieldElement b(Field::prime(7), 3);
  CHECK_THROWS_AS(a + b, prc::FieldMismatch);
  CHECK_THROWS_AS(a * b, prc::FieldMismatch);
  CHECK_THROWS_AS(a / b, prc::FieldMismatch);
  CHECK_THROWS_AS((void)(a == b), prc::FieldMismatch);
  CHECK((a + a).value() == 1);
  CHECK((a * a.inv()).value() == 1);
  CHECK((-a).value() == 2);
  CHECK_THROWS_AS(FieldElement(Field::prime(5), 5), std::out_of_range);
}
