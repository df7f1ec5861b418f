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

#include "prc/channel.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "prc/oracle.hpp"

namespace prc {

int CorruptionPlan::erasure_degree(const CodeSpec& code) const {
  int d = 0;
  for (auto i : erasures) d += code.modulus_degree(i);
  return d;
}

int CorruptionPlan::error_degree(const CodeSpec& code) const {
  int d = 0;
  for (const auto& [i, delta] : errors) d += code.modulus_degree(i);
  return d;
}

bool CorruptionPlan::within_bound(const CodeSpec& code) const {
  return 2 * error_degree(code) + erasure_degree(code) <= code.N() - code.K();
}

ReceivedWord corrupt(const CodeSpec& code, const ReceivedWord& word, const CorruptionPlan& plan) {
  if (word.symbols.size() != code.n()) throw CodeError("word length does not match the code");
  ReceivedWord out = word;
  for (const auto& [i, delta] : plan.errors) {
    if (i >= code.n()) throw CodeError("error position out of range");
    if (plan.erasures.count(i)) throw CodeError("error and erasure sets overlap");
    if (delta.is_zero()) throw CodeError("error delta must be nonzero");
    if (delta.degree() >= code.modulus(i).degree()) throw CodeError("error delta is not reduced");
    out.symbols[i] = (out.symbols[i] + delta) % code.modulus(i);
  }
  for (auto i : plan.erasures) {
    if (i >= code.n()) throw CodeError("erasure position out of range");
    out.symbols[i] = Polynomial(code.field());
    out.erased.insert(i);
  }
  return out;
}

Polynomial random_nonzero_residue(const CodeSpec& code, std::size_t position, Rng& rng) {
  const auto deg = static_cast<std::size_t>(code.modulus_degree(position));
  const std::uint64_t q = code.field().order();
  while (true) {
    std::vector<std::uint64_t> c(deg);
    for (auto& v : c) v = rng.below(q);
    Polynomial p(code.field(), std::move(c));
    if (!p.is_zero()) return p;
  }
}

namespace {

template <class T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
}

}  // namespace

CorruptionPlan random_plan(const CodeSpec& code, const PositionSet& erasures, int error_degree_budget,
                           std::uint64_t seed) {
  if (error_degree_budget < 0) throw std::invalid_argument("error degree budget must be non-negative");
  for (auto i : erasures) {
    if (i >= code.n()) throw std::invalid_argument("erasure position out of range");
  }
  Rng rng(seed);
  CorruptionPlan plan;
  plan.seed = seed;
  plan.erasures = erasures;
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < code.n(); ++i) {
    if (!erasures.count(i)) candidates.push_back(i);
  }
  shuffle(candidates, rng);
  int left = error_degree_budget;
  for (auto i : candidates) {
    if (code.modulus_degree(i) > left) continue;
    left -= code.modulus_degree(i);
    plan.errors.emplace(i, random_nonzero_residue(code, i, rng));
  }
  return plan;
}

CorruptionPlan random_plan(const CodeSpec& code, std::size_t erasure_count, int error_degree_budget,
                           std::uint64_t seed) {
  if (erasure_count > code.n()) throw std::invalid_argument("more erasures than positions");
  Rng rng(seed);
  std::vector<std::size_t> positions(code.n());
  for (std::size_t i = 0; i < positions.size(); ++i) positions[i] = i;
  shuffle(positions, rng);
  const PositionSet erasures(positions.begin(), positions.begin() + static_cast<std::ptrdiff_t>(erasure_count));
  return random_plan(code, erasures, error_degree_budget, rng.next());
}

DecodeOutcome run_decoder(const CodeSpec& code, const ReceivedWord& word, const DecoderChoice& choice) {
  switch (choice.kind) {
    case DecoderKind::kApproachI:
      return decode(code, word, {Approach::kI, choice.recovery, choice.stop, choice.verify});
    case DecoderKind::kApproachII:
      return decode(code, word, {Approach::kII, choice.recovery, choice.stop, choice.verify});
    case DecoderKind::kModified:
      return decode_modified_transform(code, word, {Approach::kII, choice.recovery, choice.stop, choice.verify});
    case DecoderKind::kOracle:
      return decode_nearest(code, word);
  }
  throw std::logic_error("unknown decoder kind");
}

std::vector<DecoderChoice> all_gcd_choices(bool verify) {
  std::vector<DecoderChoice> out;
  for (auto kind : {DecoderKind::kApproachI, DecoderKind::kApproachII, DecoderKind::kModified}) {
    for (auto rec : {Recovery::kRemainder, Recovery::kQuotient}) {
      for (auto stop : {StopStyle::kAdaptive, StopStyle::kThreshold}) out.push_back({kind, rec, stop, verify});
    }
  }
  return out;
}

std::string decoder_label(DecoderKind kind) {
  switch (kind) {
    case DecoderKind::kApproachI:
      return "1";
    case DecoderKind::kApproachII:
      return "2";
    case DecoderKind::kModified:
      return "modified";
    case DecoderKind::kOracle:
      return "oracle";
  }
  return "?";
}

std::string recovery_label(Recovery r) { return r == Recovery::kRemainder ? "remainder" : "quotient"; }
std::string stop_label(StopStyle s) { return s == StopStyle::kAdaptive ? "adaptive" : "threshold"; }

void ComboStats::merge(const ComboStats& o) {
  trials += o.trials;
  successes += o.successes;
  failures += o.failures;
  miscorrections += o.miscorrections;
  sum_iterations += o.sum_iterations;
  max_iterations = std::max(max_iterations, o.max_iterations);
  sum_mults += o.sum_mults;
}

namespace {

struct Partial {
  std::vector<ComboStats> rows;
  std::uint64_t within_bound = 0;
};

void run_trials(const CodeSpec& code, std::uint64_t begin, std::uint64_t end, const Budget& budget,
                const std::vector<DecoderChoice>& choices, std::uint64_t master_seed, Partial& acc) {
  const std::uint64_t q = code.field().order();
  for (std::uint64_t trial = begin; trial < end; ++trial) {
    Rng rng(Rng::derive(master_seed, trial));
    std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(code.K()));
    for (auto& c : coeffs) c = rng.below(q);
    const Polynomial message(code.field(), std::move(coeffs));
    const CorruptionPlan plan = random_plan(code, budget.erasures, budget.error_degree, rng.next());
    if (plan.within_bound(code)) ++acc.within_bound;
    const ReceivedWord received = corrupt(code, encode(code, message), plan);
    for (std::size_t c = 0; c < choices.size(); ++c) {
      const DecodeOutcome out = run_decoder(code, received, choices[c]);
      ComboStats& row = acc.rows[c];
      ++row.trials;
      if (!out.ok()) {
        ++row.failures;
      } else if (out.message == message) {
        ++row.successes;
      } else {
        ++row.miscorrections;
      }
      row.sum_iterations += out.stats.iterations;
      row.max_iterations = std::max<std::uint64_t>(row.max_iterations, out.stats.iterations);
      row.sum_mults += out.stats.gcd_mults;
    }
  }
}

}  // namespace

TrialStats simulate(const CodeSpec& code, std::uint64_t trials, const Budget& budget,
                    const std::vector<DecoderChoice>& choices, std::uint64_t master_seed, unsigned threads) {
  if (budget.erasures > code.n() || budget.error_degree < 0) throw std::invalid_argument("infeasible budget");
  threads = std::max(1u, threads);
  std::vector<Partial> parts(threads);
  for (auto& p : parts) {
    p.rows.resize(choices.size());
    for (std::size_t c = 0; c < choices.size(); ++c) p.rows[c].choice = choices[c];
  }
  const std::uint64_t chunk = (trials + threads - 1) / threads;
  if (threads == 1) {
    run_trials(code, 0, trials, budget, choices, master_seed, parts[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      const std::uint64_t begin = std::min(trials, w * chunk);
      const std::uint64_t end = std::min(trials, begin + chunk);
      pool.emplace_back(run_trials, std::cref(code), begin, end, std::cref(budget), std::cref(choices), master_seed,
                        std::ref(parts[w]));
    }
    for (auto& th : pool) th.join();
  }
  TrialStats stats;
  stats.per_choice = std::move(parts[0].rows);
  stats.within_bound_trials = parts[0].within_bound;
  for (unsigned w = 1; w < threads; ++w) {
    for (std::size_t c = 0; c < choices.size(); ++c) stats.per_choice[c].merge(parts[w].rows[c]);
    stats.within_bound_trials += parts[w].within_bound;
  }
  return stats;
}

std::string format_tsv(const TrialStats& stats) {
  std::ostringstream out;
  out << "approach\trecovery\tstop\ttrials\tsuccesses\tfailures\tmiscorrections\tmean_iter\tmean_mults\n";
  char buf[64];
  for (const auto& row : stats.per_choice) {
    out << decoder_label(row.choice.kind) << '\t' << recovery_label(row.choice.recovery) << '\t'
        << stop_label(row.choice.stop) << '\t' << row.trials << '\t' << row.successes << '\t' << row.failures << '\t'
        << row.miscorrections << '\t';
    std::snprintf(buf, sizeof buf, "%.3f\t%.3f", row.mean_iterations(), row.mean_mults());
    out << buf << '\n';
  }
  return out.str();
}

}  // namespace prc
