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
#include <map>
#include <string>
#include <vector>

#include "prc/code.hpp"
#include "prc/decode.hpp"
#include "prc/rng.hpp"

namespace prc {

/// Erasures (known positions) plus additive errors at unknown positions.
struct CorruptionPlan {
  PositionSet erasures;
  std::map<std::size_t, Polynomial> errors;  // position -> nonzero reduced delta
  std::uint64_t seed = 0;

  int erasure_degree(const CodeSpec& code) const;
  int error_degree(const CodeSpec& code) const;
  /// 2 * deg Lambda_tau + deg Lambda_rho <= N - K.
  bool within_bound(const CodeSpec& code) const;
};

/// Adds the error deltas and zero-flags the erasures. Throws CodeError when
/// sets overlap, a delta is zero or unreduced, or a position is out of range.
ReceivedWord corrupt(const CodeSpec& code, const ReceivedWord& word, const CorruptionPlan& plan);

/// Uniform nonzero element of F[x]/(m_i).
Polynomial random_nonzero_residue(const CodeSpec& code, std::size_t position, Rng& rng);

/// Random plan: `erasure_count` uniformly chosen erasures, then error
/// positions drawn in random order and kept while their total degree fits
/// `error_degree_budget`. Deltas are uniform nonzero residues. Throws
/// std::invalid_argument for infeasible budgets.
CorruptionPlan random_plan(const CodeSpec& code, std::size_t erasure_count, int error_degree_budget,
                           std::uint64_t seed);
/// Same, with the erasure positions given explicitly.
CorruptionPlan random_plan(const CodeSpec& code, const PositionSet& erasures, int error_degree_budget,
                           std::uint64_t seed);

// Decoder selection -------------------------------------------------------------

enum class DecoderKind { kApproachI, kApproachII, kModified, kOracle };

struct DecoderChoice {
  DecoderKind kind = DecoderKind::kApproachII;
  Recovery recovery = Recovery::kQuotient;
  StopStyle stop = StopStyle::kAdaptive;
  bool verify = false;

  friend bool operator==(const DecoderChoice&, const DecoderChoice&) = default;
};

DecodeOutcome run_decoder(const CodeSpec& code, const ReceivedWord& word, const DecoderChoice& choice);

/// Every {I, II, modified} x {remainder, quotient} x {adaptive, threshold} combination.
std::vector<DecoderChoice> all_gcd_choices(bool verify = false);

std::string decoder_label(DecoderKind kind);
std::string recovery_label(Recovery r);
std::string stop_label(StopStyle s);

// Simulation ------------------------------------------------------------------

struct Budget {
  std::size_t erasures = 0;
  int error_degree = 0;
};

struct ComboStats {
  DecoderChoice choice;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t failures = 0;
  std::uint64_t miscorrections = 0;
  std::uint64_t sum_iterations = 0;
  std::uint64_t max_iterations = 0;
  std::uint64_t sum_mults = 0;  // GCD-engine field multiplications

  double mean_iterations() const { return trials ? static_cast<double>(sum_iterations) / trials : 0.0; }
  double mean_mults() const { return trials ? static_cast<double>(sum_mults) / trials : 0.0; }
  void merge(const ComboStats& o);

  friend bool operator==(const ComboStats&, const ComboStats&) = default;
};

struct TrialStats {
  std::vector<ComboStats> per_choice;  // aligned with the requested choices
  std::uint64_t within_bound_trials = 0;

  friend bool operator==(const TrialStats&, const TrialStats&) = default;
};

/**
 * Monte Carlo harness. Trial t draws a message, a plan and deltas from
 * Rng(Rng::derive(master_seed, t)), so results do not depend on `threads`.
 * Outcomes: success = exact message, miscorrection = other message returned,
 * failure = typed decoder failure.
 */
TrialStats simulate(const CodeSpec& code, std::uint64_t trials, const Budget& budget,
                    const std::vector<DecoderChoice>& choices, std::uint64_t master_seed, unsigned threads = 1);

/// Tab-separated: header then one row per choice.
std::string format_tsv(const TrialStats& stats);

}  // namespace prc
