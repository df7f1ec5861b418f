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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "prc/code.hpp"
#include "prc/poly.hpp"

namespace prc {

// GCD engine -----------------------------------------------------------------

enum class StopKind {
  kAdaptiveI,    // deg r < deg t + deg Lambda_rho + K
  kThresholdI,   // 2 deg r < N + K + deg Lambda_rho
  kAdaptiveII,   // deg r < deg t + K
  kThresholdII,  // 2 deg r < N + K - deg Lambda_rho
  kZero,         // r == 0 (full extended GCD)
};

struct StopRule {
  StopKind kind = StopKind::kZero;
  int N = 0;
  int K = 0;
  int rho = 0;  // deg Lambda_rho

  static StopRule zero() { return {}; }
  static StopRule adaptive_i(int n, int k, int rho) { return {StopKind::kAdaptiveI, n, k, rho}; }
  static StopRule threshold_i(int n, int k, int rho) { return {StopKind::kThresholdI, n, k, rho}; }
  static StopRule adaptive_ii(int n, int k, int rho) { return {StopKind::kAdaptiveII, n, k, rho}; }
  static StopRule threshold_ii(int n, int k, int rho) { return {StopKind::kThresholdII, n, k, rho}; }

  bool satisfied(const Polynomial& r, const Polynomial& t) const;
};

/// State of the extended GCD iteration. The row pairs satisfy
/// r = s*R0 + t*R1 and r_tilde = s_tilde*R0 + t_tilde*R1 at every checkpoint.
struct GcdState {
  Polynomial r, r_tilde, s, s_tilde, t, t_tilde;
  std::size_t iterations = 0;  // leading-term division steps
  std::size_t swaps = 0;
  bool prechecked = false;  // stop rule fired on (R1, 1) before the loop
};

/// Runs the leading-term extended GCD on (R0, R1) until `stop` fires after a
/// full division pass. The rule is also tried once on (R1, t = 1) before the
/// loop; if it fires the state (r, s, t) = (R1, 0, 1) is returned.
/// Throws std::invalid_argument when R0 is zero or a division by a zero
/// r_tilde would be required.
GcdState gcd_engine(const Polynomial& r0, const Polynomial& r1, const StopRule& stop);

/// Enables checkpoint verification of the loop invariant and unimodularity
/// inside gcd_engine (process-wide). Violations are counted, not thrown.
void set_invariant_checks(bool enabled);
bool invariant_checks_enabled();
std::uint64_t invariant_checkpoints();
std::uint64_t invariant_violations();
void reset_invariant_counters();

// Locators and transformed inputs -------------------------------------------

/// Product of m_i over `positions`; 1 for the empty set.
Polynomial lambda_of(const CodeSpec& code, const PositionSet& positions);
/// psi_inverse of the word with erasures read as zero.
Polynomial received_polynomial(const CodeSpec& code, const ReceivedWord& word);
/// Lambda_rho * Y, unreduced.
Polynomial hat_y(const CodeSpec& code, const ReceivedWord& word);
/// M_n / Lambda_rho.
Polynomial tilde_m(const CodeSpec& code, const PositionSet& erased);

// Full-knowledge and partial GCD --------------------------------------------

enum class Approach { kI, kII };
enum class Recovery { kRemainder, kQuotient };
enum class StopStyle { kAdaptive, kThreshold };

/// Stop-ZERO engine on (M_n, E_hat). Throws std::invalid_argument if E_hat is zero.
GcdState extended_gcd_i(const CodeSpec& code, const Polynomial& e_hat);
/// Stop-ZERO engine on (M_n / Lambda_rho, E). Throws if E is zero.
GcdState extended_gcd_ii(const CodeSpec& code, const PositionSet& erased, const Polynomial& e);

/// Engine on (M_n, Lambda_rho*Y) with the approach-I stop rule.
GcdState partial_gcd_i(const CodeSpec& code, const ReceivedWord& word, StopStyle style = StopStyle::kAdaptive);
/// Engine on (M_n / Lambda_rho, Y) with the approach-II stop rule.
GcdState partial_gcd_ii(const CodeSpec& code, const ReceivedWord& word, StopStyle style = StopStyle::kAdaptive);

// Message recovery ------------------------------------------------------------

enum class DecodeFailure {
  kNone,
  kNonDivisible,
  kDegreeOverflow,
  kVerifyMismatch,
  kAmbiguous,  // reference search only: several nearest codewords
};

std::string_view failure_name(DecodeFailure f);

struct Recovered {
  std::optional<Polynomial> message;
  DecodeFailure failure = DecodeFailure::kNone;

  bool ok() const { return message.has_value(); }
};

/// (t * Yhat mod M_n) / (t * Lambda_rho).
Recovered recover_i_remainder(const CodeSpec& code, const ReceivedWord& word, const Polynomial& t);
/// r / (t * Lambda_rho).
Recovered recover_i_quotient(const CodeSpec& code, const Polynomial& r, const Polynomial& t,
                             const Polynomial& lambda_rho);
/// (t * Y mod M_n/Lambda_rho) / t.
Recovered recover_ii_remainder(const CodeSpec& code, const ReceivedWord& word, const Polynomial& t);
/// r / t.
Recovered recover_ii_quotient(const CodeSpec& code, const Polynomial& r, const Polynomial& t);

/// Known-locator interpolation. G must be a multiple of Lambda_tau with
/// deg G <= N - K - deg Lambda_rho; the degree bound is checked and throws
/// std::invalid_argument when violated.
Recovered interpolate_with_locator(const CodeSpec& code, const ReceivedWord& word, const Polynomial& g,
                                   Approach approach);

// Decoder ---------------------------------------------------------------------

struct DecodeOptions {
  Approach approach = Approach::kII;
  Recovery recovery = Recovery::kQuotient;
  StopStyle stop = StopStyle::kAdaptive;
  bool verify = false;
};

struct DecodeStats {
  std::size_t iterations = 0;
  std::size_t swaps = 0;
  std::uint64_t gcd_mults = 0;    // field multiplications inside the GCD engine
  std::uint64_t total_mults = 0;  // whole decode, excluding re-encoding
  int input_degree_r0 = 0;        // deg of the engine's first input
  int input_degree_r1 = 0;        // deg of the engine's second input (-1 for zero)
};

struct DecodeOutcome {
  DecodeFailure failure = DecodeFailure::kNone;
  Polynomial message;
  Polynomial locator_tau;  // monic
  ReceivedWord corrected;
  DecodeStats stats;

  bool ok() const { return failure == DecodeFailure::kNone; }
};

/// Joint error-and-erasure decoding with a fixed transform. Never throws for
/// words that pass validate_word; malformed words raise CodeError.
DecodeOutcome decode(const CodeSpec& code, const ReceivedWord& word, const DecodeOptions& opts = {});

/// Re-encoding consistency check used by `verify`: the codeword of `message`
/// must agree with `word` outside the erasures and the support of
/// `locator_tau`, and 2 deg locator_tau + deg Lambda_rho <= N - K.
bool verify_consistent(const CodeSpec& code, const ReceivedWord& word, const Polynomial& message,
                       const Polynomial& locator_tau);

}  // namespace prc
