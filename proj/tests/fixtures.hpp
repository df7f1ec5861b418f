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

// Shared codes and planted-error trials for the test suites.

#include <cstdint>
#include <vector>

#include "prc/channel.hpp"
#include "prc/code.hpp"
#include "prc/decode.hpp"
#include "prc/rng.hpp"

namespace prc::testing {

inline Polynomial P(const Field& f, std::vector<std::uint64_t> c) { return Polynomial(f, std::move(c)); }

/// GF(2), moduli x, x+1, x^2+x+1, k = 2 (N = 4, K = 2).
inline CodeSpec worked_code() {
  const Field gf2;
  return CodeSpec(gf2, {P(gf2, {0, 1}), P(gf2, {1, 1}), P(gf2, {1, 1, 1})}, 2);
}

/// GF(5) Reed-Solomon, points 0..3, k = 2.
inline CodeSpec rs5() {
  const std::vector<std::uint64_t> points{0, 1, 2, 3};
  return rs_code(Field::prime(5), points, 2);
}

/// GF(256) Reed-Solomon, points 0..9, k = 4.
inline CodeSpec rs256() {
  const std::vector<std::uint64_t> points{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  return rs_code(Field::extension(2, 8), points, 4);
}

/// GF(2) code with variable symbol sizes: degrees 1,1,2,3,3,4; k = 3.
inline CodeSpec mixed_gf2() {
  const Field gf2;
  return CodeSpec(gf2,
                  {P(gf2, {0, 1}), P(gf2, {1, 1}), P(gf2, {1, 1, 1}), P(gf2, {1, 1, 0, 1}), P(gf2, {1, 0, 1, 1}),
                   P(gf2, {1, 1, 0, 0, 1})},
                  3);
}

/// A planted corruption with its ground truth.
struct Trial {
  Polynomial message;
  CorruptionPlan plan;
  ReceivedWord received;
  Polynomial lambda_rho;
  Polynomial lambda_tau;  // product of moduli at the planted error positions
  Polynomial e;           // Y - a
  Polynomial e_hat;       // Lambda_rho * E
  bool within_bound = false;
};

inline Polynomial random_message(const CodeSpec& code, Rng& rng) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(code.K()));
  for (auto& v : c) v = rng.below(code.field().order());
  return Polynomial(code.field(), std::move(c));
}

inline Trial make_trial(const CodeSpec& code, const Polynomial& message, const CorruptionPlan& plan) {
  Trial t;
  t.message = message;
  t.plan = plan;
  t.received = corrupt(code, encode(code, message), plan);
  t.lambda_rho = Polynomial::constant(code.field(), 1);
  for (auto i : plan.erasures) t.lambda_rho = t.lambda_rho * code.modulus(i);
  t.lambda_tau = Polynomial::constant(code.field(), 1);
  for (const auto& [i, delta] : plan.errors) t.lambda_tau = t.lambda_tau * code.modulus(i);
  t.e = psi_inverse(code, t.received.symbols) - message;
  t.e_hat = t.lambda_rho * t.e;
  t.within_bound = plan.within_bound(code);
  return t;
}

inline Trial random_trial(const CodeSpec& code, Rng& rng, std::size_t erasures, int error_budget) {
  const Polynomial message = random_message(code, rng);
  return make_trial(code, message, random_plan(code, erasures, error_budget, rng.next()));
}

/// Random erasure count and error budget spread over the whole range,
/// including patterns beyond the correction radius.
inline Trial any_trial(const CodeSpec& code, Rng& rng) {
  const std::size_t erasures = rng.below(code.n());
  const int budget = static_cast<int>(rng.below(static_cast<std::uint64_t>(code.N() - code.K()) + 2));
  return random_trial(code, rng, erasures, budget);
}

/// Random pattern satisfying 2 deg Lambda_tau + deg Lambda_rho <= N - K.
inline Trial within_bound_trial(const CodeSpec& code, Rng& rng) {
  while (true) {
    const int slack = code.N() - code.K();
    const std::size_t erasures = rng.below(code.n());
    Trial t = random_trial(code, rng, erasures, 0);
    const int rho = t.lambda_rho.degree().value();
    if (rho > slack) continue;
    const int budget = (slack - rho) / 2;
    t = make_trial(code, t.message, random_plan(code, t.plan.erasures, budget, rng.next()));
    if (t.within_bound) return t;
  }
}

}  // namespace prc::testing
