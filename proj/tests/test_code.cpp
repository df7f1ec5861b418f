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

#include <climits>
#include <vector>

#include "prc/code.hpp"
#include "prc/rng.hpp"

using prc::CodeSpec;
using prc::Field;
using prc::Polynomial;
using prc::Residues;

namespace {

Polynomial P(const Field& f, std::vector<std::uint64_t> c) { return Polynomial(f, std::move(c)); }

// GF(2), moduli x, x+1, x^2+x+1, k = 2.
CodeSpec worked_code() {
  const Field gf2;
  return CodeSpec(gf2, {P(gf2, {0, 1}), P(gf2, {1, 1}), P(gf2, {1, 1, 1})}, 2);
}

CodeSpec rs5() {
  const std::vector<std::uint64_t> points{0, 1, 2, 3};
  return prc::rs_code(Field::prime(5), points, 2);
}

// Every polynomial of degree < bound over a field of order q.
std::vector<Polynomial> all_polys(const Field& f, int bound) {
  std::vector<Polynomial> out;
  std::vector<std::uint64_t> c(bound, 0);
  while (true) {
    out.emplace_back(f, c);
    int i = 0;
    while (i < bound && ++c[i] == f.order()) c[i++] = 0;
    if (i == bound) break;
  }
  return out;
}

}  // namespace

TEST_CASE("worked GF(2) code construction") {
  const CodeSpec code = worked_code();
  const Field gf2;
  CHECK(code.N() == 4);
  CHECK(code.K() == 2);
  CHECK(code.M_n() == P(gf2, {0, 1, 0, 0, 1}));
  CHECK(code.M_k() == P(gf2, {0, 1, 1}));
  CHECK(code.ordered_degree());
  CHECK(code.beta()[0] == P(gf2, {1, 0, 0, 1}));
  CHECK(code.beta()[1] == P(gf2, {0, 1, 1, 1}));
  CHECK(code.beta()[2] == P(gf2, {0, 1, 1}));
  for (std::size_t i = 0; i < code.n(); ++i) {
    for (std::size_t j = 0; j < code.n(); ++j) {
      const Polynomial r = code.beta()[i] % code.modulus(j);
      CHECK(r == (i == j ? Polynomial::constant(gf2, 1) : Polynomial(gf2)));
    }
    CHECK(code.beta()[i].degree() < code.M_n().degree());
  }
}

TEST_CASE("code construction errors") {
  const Field gf2;
  CHECK_THROWS_AS(CodeSpec(gf2, {P(gf2, {0, 1}), P(gf2, {0, 1})}, 1), prc::CodeError);
  CHECK_THROWS_AS(CodeSpec(gf2, {P(gf2, {0, 1}), P(gf2, {1, 0, 1})}, 1), prc::CodeError);  // reducible
  const Field gf5 = Field::prime(5);
  CHECK_THROWS_AS(CodeSpec(gf5, {P(gf5, {0, 2}), P(gf5, {1, 1})}, 1), prc::CodeError);  // not monic
  CHECK_THROWS_AS(CodeSpec(gf2, {P(gf2, {0, 1}), P(gf2, {1, 1})}, 0), prc::CodeError);
  CHECK_THROWS_AS(CodeSpec(gf2, {P(gf2, {0, 1}), P(gf2, {1, 1})}, 3), prc::CodeError);
  CHECK_THROWS_AS(CodeSpec(gf2, {P(gf2, {0, 1})}, 1), prc::CodeError);  // n > 1
  CHECK_FALSE(CodeSpec(gf2, {P(gf2, {1, 1, 1}), P(gf2, {0, 1})}, 1).ordered_degree());
}

TEST_CASE("Reed-Solomon special case") {
  const CodeSpec code = rs5();
  const Field gf5 = Field::prime(5);
  CHECK(code.moduli() == std::vector<Polynomial>{P(gf5, {0, 1}), P(gf5, {4, 1}), P(gf5, {3, 1}), P(gf5, {2, 1})});
  CHECK(code.N() == 4);
  CHECK(code.K() == 2);
  const std::vector<std::uint64_t> repeated{1, 2, 1};
  CHECK_THROWS_AS(prc::rs_code(gf5, repeated, 1), prc::CodeError);
  const prc::ReceivedWord w = prc::encode(code, Polynomial::constant(gf5, 3));
  for (const auto& s : w.symbols) CHECK(s == Polynomial::constant(gf5, 3));
  // symbols are evaluations at the points
  const Polynomial a = P(gf5, {2, 3});
  const auto c = prc::encode(code, a);
  for (std::uint64_t i = 0; i < 4; ++i) CHECK(c.symbols[i] == Polynomial::constant(gf5, a.evaluate(i)));
}

TEST_CASE("forward and inverse transform examples") {
  const CodeSpec code = worked_code();
  const Field gf2;
  const Polynomial zero(gf2), one = Polynomial::constant(gf2, 1), x = Polynomial::x(gf2);
  CHECK(prc::psi_forward(code, x) == Residues{zero, one, x});
  CHECK(prc::psi_forward(code, zero) == Residues{zero, zero, zero});
  CHECK(prc::psi_forward(code, P(gf2, {1, 1})) == Residues{one, zero, P(gf2, {1, 1})});
  CHECK_THROWS_AS(prc::psi_forward(code, P(gf2, {0, 0, 0, 0, 1})), prc::CodeError);

  CHECK(prc::psi_inverse(code, Residues{zero, one, x}) == x);
  CHECK(prc::psi_inverse(code, Residues{zero, zero, zero}).is_zero());
  CHECK(prc::psi_inverse(code, Residues{zero, zero, x}) == P(gf2, {0, 0, 1, 1}));
  CHECK_THROWS_AS(prc::psi_inverse(code, Residues{x, zero, zero}), prc::CodeError);
}

TEST_CASE("transform is a ring isomorphism") {
  const CodeSpec code = worked_code();
  for (const auto& a : all_polys(code.field(), code.N())) {
    REQUIRE(prc::psi_inverse(code, prc::psi_forward(code, a)) == a);
  }
  const Field gf256 = Field::extension(2, 8);
  std::vector<Polynomial> moduli;
  for (unsigned d : {1u, 1u, 2u, 3u, 2u}) {
    Polynomial m = prc::random_irreducible(gf256, d, 1000 + moduli.size());
    moduli.push_back(m);
  }
  const CodeSpec mixed(gf256, moduli, 2);
  prc::Rng rng(21);
  auto rand_poly = [&] {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(mixed.N()));
    for (auto& v : c) v = rng.below(256);
    return Polynomial(gf256, c);
  };
  for (int trial = 0; trial < 1000; ++trial) {
    const Polynomial a = rand_poly(), b = rand_poly();
    const auto fa = prc::psi_forward(mixed, a), fb = prc::psi_forward(mixed, b);
    REQUIRE(prc::psi_inverse(mixed, fa) == a);
    const auto fab = prc::psi_forward(mixed, (a * b) % mixed.M_n());
    for (std::size_t i = 0; i < mixed.n(); ++i) REQUIRE(fab[i] == (fa[i] * fb[i]) % mixed.modulus(i));
  }
}

TEST_CASE("encode examples") {
  const CodeSpec code = worked_code();
  const Field gf2;
  const Polynomial zero(gf2), one = Polynomial::constant(gf2, 1), x = Polynomial::x(gf2);
  const auto w = prc::encode(code, x);
  CHECK(w.symbols == Residues{zero, one, x});
  CHECK(w.erased.empty());
  CHECK(prc::encode(code, zero).symbols == Residues{zero, zero, zero});
  CHECK_THROWS_AS(prc::encode(code, P(gf2, {0, 0, 1})), prc::CodeError);
}

TEST_CASE("degree weight and distance") {
  const CodeSpec code = worked_code();
  const Field gf2;
  const Polynomial zero(gf2), one = Polynomial::constant(gf2, 1), x = Polynomial::x(gf2);
  const Residues c{zero, one, x};
  const Residues z{zero, zero, zero};
  CHECK(prc::degree_weight(code, c) == 3);
  CHECK(prc::degree_weight(code, z) == 0);
  CHECK(prc::degree_weight(code, Residues{one, one, x}) == 4);
  CHECK(prc::dd_distance(code, c, c) == 0);
  CHECK(prc::dd_distance(code, c, z) == 3);
  CHECK_THROWS_AS(prc::dd_distance(code, c, Residues{zero}), prc::CodeError);
  const auto words = all_polys(gf2, 4);
  for (const auto& a : words) {
    for (const auto& b : words) {
      const auto u = prc::psi_forward(code, a), v = prc::psi_forward(code, b);
      REQUIRE(prc::dd_distance(code, u, v) == prc::dd_distance(code, v, u));
    }
  }
}

TEST_CASE("distance bounds") {
  SUBCASE("worked code minimum degree weight exceeds N - K") {
    const CodeSpec code = worked_code();
    int min_weight = INT_MAX;
    for (const auto& a : all_polys(code.field(), code.K())) {
      if (a.is_zero()) continue;
      min_weight = std::min(min_weight, prc::degree_weight(code, prc::encode(code, a).symbols));
    }
    CHECK(min_weight > code.N() - code.K());
    CHECK(min_weight == 3);
    int min_distance = INT_MAX;
    const auto msgs = all_polys(code.field(), code.K());
    for (std::size_t i = 0; i < msgs.size(); ++i) {
      for (std::size_t j = i + 1; j < msgs.size(); ++j) {
        min_distance = std::min(min_distance, prc::dd_distance(code, prc::encode(code, msgs[i]).symbols,
                                                               prc::encode(code, msgs[j]).symbols));
      }
    }
    CHECK(min_distance > code.N() - code.K());
  }
  SUBCASE("GF(5) RS minimum Hamming distance is n - k + 1") {
    const CodeSpec code = rs5();
    REQUIRE(code.ordered_degree());
    const auto msgs = all_polys(code.field(), code.K());
    REQUIRE(msgs.size() == 25);
    int min_weight = INT_MAX;
    for (const auto& a : msgs) {
      if (!a.is_zero()) min_weight = std::min(min_weight, prc::hamming_weight(prc::encode(code, a).symbols));
    }
    CHECK(min_weight == 3);
  }
}

TEST_CASE("code-spec and word files round trip") {
  const CodeSpec code = worked_code();
  const std::string text = prc::format_code_spec(code);
  CHECK(text == "field 2\nk 2\nmodulus 0 1\nmodulus 1 1\nmodulus 1 1 1\n");
  CHECK(prc::parse_code_spec(text) == code);
  CHECK(prc::format_code_spec(prc::parse_code_spec(text)) == text);
  CHECK(prc::parse_code_spec("# comment\nfield 2   # trailing\n\nk 2\nmodulus 0 1\nmodulus 1 1\nmodulus 1 1 1\n") ==
        code);
  CHECK_THROWS(prc::parse_code_spec("k 2\nmodulus 0 1\n"));
  CHECK_THROWS(prc::parse_code_spec("field 2\nmodulus 0 1\nmodulus 1 1\n"));
  CHECK_THROWS(prc::parse_code_spec("field 2\nk 1\nmodulus 0 1\nmodulus 0 1\n"));
  CHECK_THROWS(prc::parse_code_spec("field 2\nk 1\nbogus 1\n"));

  prc::ReceivedWord w = prc::encode(code, Polynomial::x(code.field()));
  w.symbols[1] = Polynomial(code.field());
  w.erased.insert(1);
  const std::string wt = prc::format_word(w);
  CHECK(wt == "symbol 0 0\nsymbol 1 ?\nsymbol 2 0 1\n");
  CHECK(prc::parse_word(code, wt) == w);
  CHECK_THROWS(prc::parse_word(code, "symbol 0 0\nsymbol 1 1\n"));               // missing 2
  CHECK_THROWS(prc::parse_word(code, "symbol 0 0\nsymbol 0 0\nsymbol 1 1\nsymbol 2 1\n"));
  CHECK_THROWS(prc::parse_word(code, "symbol 0 1 1\nsymbol 1 1\nsymbol 2 1\n"));  // not reduced
  CHECK_THROWS(prc::parse_word(code, "symbol 0 0\nsymbol 1 1\nsymbol 3 1\n"));

  // Random codes over GF(256): parse(format(spec)) is the identity.
  const Field gf256 = Field::extension(2, 8);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    prc::Rng rng(seed);
    std::vector<Polynomial> moduli;
    while (moduli.size() < 4) {
      const Polynomial m = prc::random_irreducible(gf256, 1 + static_cast<unsigned>(rng.below(3)), rng.next());
      if (std::find(moduli.begin(), moduli.end(), m) == moduli.end()) moduli.push_back(m);
    }
    const CodeSpec c(gf256, moduli, 1 + rng.below(4));
    REQUIRE(prc::parse_code_spec(prc::format_code_spec(c)) == c);
  }
}
