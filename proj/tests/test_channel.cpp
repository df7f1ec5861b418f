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

#include <sstream>

#include "fixtures.hpp"
#include "prc/channel.hpp"

using namespace prc;
using prc::testing::P;

namespace {
const Field gf2;
}

TEST_CASE("corrupt applies errors and erasures") {
  const CodeSpec code = prc::testing::worked_code();
  const ReceivedWord c = encode(code, Polynomial::x(gf2));
  CorruptionPlan plan;
  plan.errors.emplace(0, Polynomial::constant(gf2, 1));
  plan.erasures = {2};
  const ReceivedWord y = corrupt(code, c, plan);
  CHECK(y.symbols[0] == Polynomial::constant(gf2, 1));
  CHECK(y.symbols[1] == c.symbols[1]);
  CHECK(y.symbols[2].is_zero());
  CHECK(y.erased == PositionSet{2});
  CHECK(plan.erasure_degree(code) == 2);
  CHECK(plan.error_degree(code) == 1);
  CHECK_FALSE(plan.within_bound(code));  // 2*1 + 2 > N - K = 2
}

TEST_CASE("corrupt rejects malformed plans") {
  const CodeSpec code = prc::testing::worked_code();
  const ReceivedWord c = encode(code, Polynomial::x(gf2));
  CorruptionPlan overlap;
  overlap.erasures = {0};
  overlap.errors.emplace(0, Polynomial::constant(gf2, 1));
  CHECK_THROWS_AS(corrupt(code, c, overlap), CodeError);
  CorruptionPlan zero;
  zero.errors.emplace(1, Polynomial(gf2));
  CHECK_THROWS_AS(corrupt(code, c, zero), CodeError);
  CorruptionPlan wide;
  wide.errors.emplace(1, Polynomial::x(gf2));
  CHECK_THROWS_AS(corrupt(code, c, wide), CodeError);
  CorruptionPlan range;
  range.erasures = {3};
  CHECK_THROWS_AS(corrupt(code, c, range), CodeError);
}

TEST_CASE("random plans") {
  const CodeSpec code = prc::testing::mixed_gf2();
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto budget = static_cast<int>(seed % 6);
    const CorruptionPlan a = random_plan(code, seed % 3, budget, seed);
    const CorruptionPlan b = random_plan(code, seed % 3, budget, seed);
    CHECK(a.erasures == b.erasures);
    CHECK(a.errors == b.errors);
    CHECK(a.erasures.size() == seed % 3);
    CHECK(a.error_degree(code) <= budget);
    for (const auto& [i, d] : a.errors) {
      CHECK_FALSE(a.erasures.count(i));
      CHECK_FALSE(d.is_zero());
      CHECK(d.degree() < code.modulus(i).degree());
    }
    // Greedy fill: no unused position would still fit.
    for (std::size_t i = 0; i < code.n(); ++i) {
      if (a.erasures.count(i) || a.errors.count(i)) continue;
      CHECK(a.error_degree(code) + code.modulus_degree(i) > budget);
    }
  }
  CHECK_THROWS_AS(random_plan(code, 7, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_plan(code, 0, -1, 1), std::invalid_argument);
  const CorruptionPlan fixed = random_plan(code, PositionSet{1, 4}, 2, 9);
  CHECK(fixed.erasures == PositionSet{1, 4});

  Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    const Polynomial r = random_nonzero_residue(code, 5, rng);
    CHECK_FALSE(r.is_zero());
    CHECK(r.degree() < Degree(4));
  }
}

TEST_CASE("within-bound simulation always succeeds") {
  const CodeSpec code = prc::testing::rs256();
  const auto choices = all_gcd_choices(true);
  for (const Budget b : {Budget{0, 3}, Budget{2, 2}, Budget{4, 1}, Budget{6, 0}}) {
    const TrialStats st = simulate(code, 200, b, choices, 11, 2);
    CHECK(st.within_bound_trials == 200);
    for (const auto& row : st.per_choice) {
      CHECK(row.trials == 200);
      CHECK(row.successes == 200);
      CHECK(row.failures == 0);
      CHECK(row.miscorrections == 0);
    }
  }
}

TEST_CASE("zero corruption takes no gcd work for the fixed transforms") {
  const CodeSpec code = prc::testing::rs5();
  const TrialStats st = simulate(code, 50, Budget{0, 0}, all_gcd_choices(), 1, 1);
  for (const auto& row : st.per_choice) {
    CHECK(row.successes == 50);
    if (row.choice.kind != DecoderKind::kModified) CHECK(row.sum_iterations == 0);
  }
}

TEST_CASE("simulation is deterministic across thread counts") {
  const CodeSpec code = prc::testing::mixed_gf2();
  const auto choices = all_gcd_choices();
  const TrialStats one = simulate(code, 300, Budget{1, 4}, choices, 99, 1);
  const TrialStats four = simulate(code, 300, Budget{1, 4}, choices, 99, 4);
  const TrialStats seven = simulate(code, 300, Budget{1, 4}, choices, 99, 7);
  CHECK(one == four);
  CHECK(one == seven);
  CHECK_FALSE(one == simulate(code, 300, Budget{1, 4}, choices, 100, 1));
  for (const auto& row : one.per_choice) {
    CHECK(row.successes + row.failures + row.miscorrections == row.trials);
    CHECK(row.max_iterations * row.trials >= row.sum_iterations);
  }
  CHECK(one.within_bound_trials < 300);  // budget 4 exceeds the radius sometimes
}

TEST_CASE("tsv output") {
  const CodeSpec code = prc::testing::worked_code();
  std::vector<DecoderChoice> choices{{DecoderKind::kApproachI, Recovery::kRemainder, StopStyle::kThreshold, false},
                                     {DecoderKind::kOracle, Recovery::kQuotient, StopStyle::kAdaptive, false}};
  const TrialStats st = simulate(code, 10, Budget{0, 1}, choices, 4, 1);
  const std::string tsv = format_tsv(st);
  std::istringstream in(tsv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "approach\trecovery\tstop\ttrials\tsuccesses\tfailures\tmiscorrections\tmean_iter\tmean_mults");
  std::getline(in, line);
  CHECK(line.rfind("1\tremainder\tthreshold\t10\t10\t0\t0\t", 0) == 0);
  std::getline(in, line);
  CHECK(line.rfind("oracle\tquotient\tadaptive\t10\t10\t0\t0\t", 0) == 0);
  CHECK_FALSE(std::getline(in, line));
  CHECK_THROWS_AS(simulate(code, 1, Budget{4, 0}, choices, 1, 1), std::invalid_argument);
}
