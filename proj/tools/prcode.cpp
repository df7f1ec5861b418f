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

// prcode: command-line front end for polynomial remainder codes.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "prc/channel.hpp"
#include "prc/code.hpp"
#include "prc/decode.hpp"
#include "prc/oracle.hpp"
#include "prc/poly.hpp"
#include "prc/rng.hpp"

namespace {

using namespace prc;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDecodeFailure = 2;

// Raised for bad flag values or files; maps to exit code 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
  if (!out) throw UsageError("write failed: " + path);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

std::uint64_t parse_u64(const std::string& s, const char* what) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    if (s.empty() || s[0] == '-') throw std::invalid_argument(s);
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    throw UsageError(std::string("bad ") + what + ": '" + s + "'");
  }
  if (used != s.size()) throw UsageError(std::string("bad ") + what + ": '" + s + "'");
  return v;
}

PositionSet parse_positions(const CodeSpec& code, const std::string& list) {
  PositionSet out;
  for (const auto& item : split(list, ',')) {
    const auto i = parse_u64(item, "position");
    if (i >= code.n()) throw UsageError("position out of range: " + item);
    if (!out.insert(i).second) throw UsageError("repeated position: " + item);
  }
  return out;
}

// Number of monic irreducibles of degree d over GF(q); nullopt when huge.
std::optional<std::uint64_t> irreducible_count(std::uint64_t q, unsigned d) {
  if (static_cast<double>(d) * std::log2(static_cast<double>(q)) > 60.0) return std::nullopt;
  auto qpow = [q](unsigned e) {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < e; ++i) v *= q;
    return v;
  };
  auto mobius = [](unsigned n) {
    int sign = 1;
    for (unsigned p = 2; p * p <= n; ++p) {
      if (n % p) continue;
      n /= p;
      if (n % p == 0) return 0;
      sign = -sign;
    }
    return n > 1 ? -sign : sign;
  };
  std::int64_t sum = 0;
  for (unsigned e = 1; e <= d; ++e) {
    if (d % e) continue;
    sum += mobius(e) * static_cast<std::int64_t>(qpow(d / e));
  }
  return static_cast<std::uint64_t>(sum / d);
}

CodeSpec load_code(const std::string& path) {
  try {
    return parse_code_spec(read_file(path));
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

ReceivedWord load_word(const CodeSpec& code, const std::string& path) {
  try {
    return parse_word(code, read_file(path));
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Field parse_field(const std::string& desc) {
  try {
    return Field::parse(desc);
  } catch (const std::exception& e) {
    throw UsageError("bad field '" + desc + "': " + e.what());
  }
}

// gen-code --------------------------------------------------------------------

struct GenCodeArgs {
  std::string field = "2";
  std::string degrees;
  std::string rs;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_gen_code(const GenCodeArgs& a) {
  const Field field = parse_field(a.field);
  std::optional<CodeSpec> code;
  if (!a.rs.empty()) {
    std::vector<std::uint64_t> points;
    for (const auto& s : split(a.rs, ',')) points.push_back(parse_u64(s, "evaluation point"));
    try {
      code.emplace(rs_code(field, points, a.k));
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  } else {
    std::vector<unsigned> degrees;
    std::map<unsigned, std::uint64_t> wanted;
    for (const auto& s : split(a.degrees, ',')) {
      const auto d = parse_u64(s, "degree");
      if (d < 1 || d > 64) throw UsageError("degree out of range: " + s);
      degrees.push_back(static_cast<unsigned>(d));
      ++wanted[static_cast<unsigned>(d)];
    }
    if (degrees.empty()) throw UsageError("--degrees is empty");
    std::map<unsigned, std::vector<Polynomial>> pool;
    for (const auto& [d, count] : wanted) {
      const auto available = irreducible_count(field.order(), d);
      if (available && *available < count) {
        throw UsageError("only " + std::to_string(*available) + " monic irreducibles of degree " + std::to_string(d) +
                         " exist");
      }
      // Distinct random picks; each degree has its own seed stream.
      Rng rng(Rng::derive(a.seed, d));
      auto& picks = pool[d];
      std::uint64_t attempts = 0;
      while (picks.size() < count) {
        if (++attempts > 100000) throw UsageError("could not draw distinct moduli of degree " + std::to_string(d));
        Polynomial m = random_irreducible(field, d, rng.next());
        if (std::find(picks.begin(), picks.end(), m) == picks.end()) picks.push_back(std::move(m));
      }
    }
    std::vector<Polynomial> moduli;
    std::map<unsigned, std::size_t> used;
    for (unsigned d : degrees) moduli.push_back(pool[d][used[d]++]);
    try {
      code.emplace(field, std::move(moduli), a.k);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  }
  write_output(a.out, format_code_spec(*code));
  return kExitOk;
}

// encode ----------------------------------------------------------------------

struct EncodeArgs {
  std::string code;
  std::string message;
  std::string out;
};

int cmd_encode(const EncodeArgs& a) {
  const CodeSpec code = load_code(a.code);
  Polynomial msg;
  try {
    msg = parse_polynomial(code.field(), a.message);
  } catch (const std::exception& e) {
    throw UsageError("bad message: " + std::string(e.what()));
  }
  if (msg.degree() >= Degree(code.K())) throw UsageError("message degree must be below " + std::to_string(code.K()));
  write_output(a.out, format_word(encode(code, msg)));
  return kExitOk;
}

// corrupt ---------------------------------------------------------------------

struct CorruptArgs {
  std::string code;
  std::string word;
  std::string erase;
  std::size_t erase_count = 0;
  std::vector<std::string> errors;  // explicit i:c0.c1...
  std::string error_pos;
  int error_budget = -1;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_corrupt(const CorruptArgs& a) {
  const CodeSpec code = load_code(a.code);
  const ReceivedWord word = load_word(code, a.word);
  Rng rng(a.seed);

  CorruptionPlan plan;
  plan.seed = a.seed;
  if (!a.erase.empty()) {
    plan.erasures = parse_positions(code, a.erase);
  } else if (a.erase_count > 0) {
    if (a.erase_count > code.n()) throw UsageError("--erase-count exceeds the code length");
    plan.erasures = random_plan(code, a.erase_count, 0, rng.next()).erasures;
  }

  // Already-erased positions stay erased.
  plan.erasures.insert(word.erased.begin(), word.erased.end());

  if (!a.errors.empty()) {
    for (const auto& spec : a.errors) {
      const auto colon = spec.find(':');
      if (colon == std::string::npos) throw UsageError("--error expects i:coeffs, got '" + spec + "'");
      const auto i = parse_u64(spec.substr(0, colon), "position");
      if (i >= code.n()) throw UsageError("position out of range: " + spec);
      Polynomial delta;
      try {
        delta = parse_polynomial(code.field(), spec.substr(colon + 1));
      } catch (const std::exception& e) {
        throw UsageError("bad error value '" + spec + "': " + e.what());
      }
      if (!plan.errors.emplace(i, std::move(delta)).second) throw UsageError("repeated error position: " + spec);
    }
  } else if (!a.error_pos.empty()) {
    for (auto i : parse_positions(code, a.error_pos)) plan.errors.emplace(i, random_nonzero_residue(code, i, rng));
  } else if (a.error_budget >= 0) {
    plan = random_plan(code, plan.erasures, a.error_budget, rng.next());
    plan.seed = a.seed;
  }

  ReceivedWord base = word;
  base.erased.clear();
  try {
    write_output(a.out, format_word(corrupt(code, base, plan)));
  } catch (const CodeError& e) {
    throw UsageError(e.what());
  }
  if (!plan.within_bound(code)) std::cerr << "note: pattern exceeds the guaranteed correction radius\n";
  return kExitOk;
}

// decode ----------------------------------------------------------------------

struct DecodeArgs {
  std::string code;
  std::string word;
  std::string approach = "2";
  std::string recovery = "quotient";
  std::string stop = "adaptive";
  bool verify = false;
};

DecoderChoice make_choice(const std::string& approach, const std::string& recovery, const std::string& stop,
                          bool verify) {
  DecoderChoice c;
  if (approach == "1") c.kind = DecoderKind::kApproachI;
  else if (approach == "2") c.kind = DecoderKind::kApproachII;
  else if (approach == "modified") c.kind = DecoderKind::kModified;
  else if (approach == "oracle") c.kind = DecoderKind::kOracle;
  else throw UsageError("unknown approach: " + approach);
  c.recovery = recovery == "remainder" ? Recovery::kRemainder : Recovery::kQuotient;
  c.stop = stop == "threshold" ? StopStyle::kThreshold : StopStyle::kAdaptive;
  c.verify = verify;
  return c;
}

int cmd_decode(const DecodeArgs& a) {
  const CodeSpec code = load_code(a.code);
  const ReceivedWord word = load_word(code, a.word);
  const DecoderChoice choice = make_choice(a.approach, a.recovery, a.stop, a.verify);
  DecodeOutcome out;
  try {
    out = run_decoder(code, word, choice);
  } catch (const std::length_error& e) {
    throw UsageError(e.what());
  }
  std::cerr << "iterations " << out.stats.iterations << " swaps " << out.stats.swaps << " gcd_mults "
            << out.stats.gcd_mults << " total_mults " << out.stats.total_mults << '\n';
  if (!out.ok()) {
    std::cout << "failure: " << failure_name(out.failure) << '\n';
    return kExitDecodeFailure;
  }
  std::cout << "message: " << to_string(out.message) << '\n';
  std::cout << "locator_tau: " << to_string(out.locator_tau) << '\n';
  return kExitOk;
}

// simulate / bench ------------------------------------------------------------

struct SimArgs {
  std::string code;
  std::uint64_t trials = 1000;
  std::size_t erasures = 0;
  int error_budget = 0;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  bool verify = false;
  bool oracle = false;
  std::string out;
};

int run_sim(const SimArgs& a, std::vector<DecoderChoice> choices) {
  const CodeSpec code = load_code(a.code);
  if (a.erasures > code.n()) throw UsageError("--erasures exceeds the code length");
  const auto start = std::chrono::steady_clock::now();
  const TrialStats st = simulate(code, a.trials, Budget{a.erasures, a.error_budget}, choices, a.seed, a.threads);
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
  write_output(a.out, format_tsv(st));
  std::cerr << "trials " << a.trials << " within_bound " << st.within_bound_trials << " seconds " << dt.count()
            << '\n';
  return kExitOk;
}

int cmd_simulate(const SimArgs& a) {
  auto choices = all_gcd_choices(a.verify);
  if (a.oracle) choices.push_back({DecoderKind::kOracle, Recovery::kQuotient, StopStyle::kAdaptive, false});
  return run_sim(a, std::move(choices));
}

int cmd_bench(const SimArgs& a) {
  std::vector<DecoderChoice> choices;
  for (auto kind : {DecoderKind::kApproachI, DecoderKind::kApproachII}) {
    for (auto rec : {Recovery::kRemainder, Recovery::kQuotient}) {
      for (auto stop : {StopStyle::kAdaptive, StopStyle::kThreshold}) choices.push_back({kind, rec, stop, a.verify});
    }
  }
  return run_sim(a, std::move(choices));
}

void add_sim_flags(CLI::App* sub, SimArgs& a) {
  sub->add_option("--code", a.code, "code-spec file")->required();
  sub->add_option("--trials", a.trials, "number of trials");
  sub->add_option("--erasures", a.erasures, "erasures per trial");
  sub->add_option("--error-budget", a.error_budget, "error degree budget per trial")->check(CLI::NonNegativeNumber);
  sub->add_option("--seed", a.seed, "master seed");
  sub->add_option("--threads", a.threads, "worker threads")->check(CLI::PositiveNumber);
  sub->add_flag("--verify", a.verify, "run the consistency check");
  sub->add_option("-o", a.out, "output path (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial remainder code toolkit"};
  app.require_subcommand(1);

  GenCodeArgs gen;
  auto* gen_cmd = app.add_subcommand("gen-code", "construct a code-spec file");
  gen_cmd->add_option("--field", gen.field, "field descriptor p[:m[:poly]]");
  auto* deg_opt = gen_cmd->add_option("--degrees", gen.degrees, "comma-separated modulus degrees");
  auto* rs_opt = gen_cmd->add_option("--rs", gen.rs, "comma-separated Reed-Solomon evaluation points");
  deg_opt->excludes(rs_opt);
  gen_cmd->add_option("--k", gen.k, "number of message symbols")->required();
  gen_cmd->add_option("--seed", gen.seed, "seed for modulus selection");
  gen_cmd->add_option("-o", gen.out, "output path (default stdout)");

  EncodeArgs enc;
  auto* enc_cmd = app.add_subcommand("encode", "encode a message polynomial");
  enc_cmd->add_option("--code", enc.code, "code-spec file")->required();
  enc_cmd->add_option("--message", enc.message, "ascending coefficients, space or dot separated")->required();
  enc_cmd->add_option("-o", enc.out, "output path (default stdout)");

  CorruptArgs cor;
  auto* cor_cmd = app.add_subcommand("corrupt", "apply erasures and errors to a word");
  cor_cmd->add_option("--code", cor.code, "code-spec file")->required();
  cor_cmd->add_option("--word", cor.word, "word file")->required();
  auto* erase_opt = cor_cmd->add_option("--erase", cor.erase, "comma-separated erased positions");
  auto* erase_count_opt = cor_cmd->add_option("--erase-count", cor.erase_count, "number of random erasures");
  erase_opt->excludes(erase_count_opt);
  auto* err_opt = cor_cmd->add_option("--error", cor.errors, "explicit error i:c0.c1... (repeatable)");
  auto* pos_opt = cor_cmd->add_option("--error-pos", cor.error_pos, "comma-separated positions, random deltas");
  auto* budget_opt = cor_cmd->add_option("--error-budget", cor.error_budget, "random errors up to this total degree")
                         ->check(CLI::NonNegativeNumber);
  err_opt->excludes(pos_opt)->excludes(budget_opt);
  pos_opt->excludes(budget_opt);
  cor_cmd->add_option("--seed", cor.seed, "seed for random choices");
  cor_cmd->add_option("-o", cor.out, "output path (default stdout)");

  DecodeArgs dec;
  auto* dec_cmd = app.add_subcommand("decode", "decode a received word");
  dec_cmd->add_option("--code", dec.code, "code-spec file")->required();
  dec_cmd->add_option("--word", dec.word, "word file")->required();
  dec_cmd->add_option("--approach", dec.approach, "1, 2, modified or oracle")
      ->check(CLI::IsMember({"1", "2", "modified", "oracle"}));
  dec_cmd->add_option("--recovery", dec.recovery, "remainder or quotient")
      ->check(CLI::IsMember({"remainder", "quotient"}));
  dec_cmd->add_option("--stop", dec.stop, "adaptive or threshold")->check(CLI::IsMember({"adaptive", "threshold"}));
  dec_cmd->add_flag("--verify", dec.verify, "reject outputs that fail the consistency check");

  SimArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo over every decoder combination");
  add_sim_flags(sim_cmd, sim);
  sim_cmd->add_flag("--oracle", sim.oracle, "include the exhaustive nearest-codeword decoder");

  SimArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "compare fixed-transform approaches 1 and 2");
  add_sim_flags(bench_cmd, bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) {
      if (gen.degrees.empty() == gen.rs.empty()) throw UsageError("give exactly one of --degrees or --rs");
      return cmd_gen_code(gen);
    }
    if (*enc_cmd) return cmd_encode(enc);
    if (*cor_cmd) return cmd_corrupt(cor);
    if (*dec_cmd) return cmd_decode(dec);
    if (*sim_cmd) return cmd_simulate(sim);
    if (*bench_cmd) return cmd_bench(bench);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
