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

#include "prc/decode.hpp"

#include <atomic>
#include <stdexcept>
#include <utility>

#include "prc/counters.hpp"

namespace prc {

namespace {

std::atomic<bool> g_checks{false};
std::atomic<std::uint64_t> g_checkpoints{0};
std::atomic<std::uint64_t> g_violations{0};

// a - c * x^shift * b, with one field multiplication per coefficient of b.
Polynomial sub_shifted(const Polynomial& a, std::uint64_t c, std::size_t shift, const Polynomial& b) {
  const auto bc = b.coeffs();
  if (bc.empty()) return a;
  const Field& f = a.field();
  std::vector<std::uint64_t> out(a.coeffs().begin(), a.coeffs().end());
  if (out.size() < bc.size() + shift) out.resize(bc.size() + shift, 0);
  for (std::size_t i = 0; i < bc.size(); ++i) out[i + shift] = f.sub(out[i + shift], f.mul(c, bc[i]));
  return Polynomial(f, std::move(out));
}

void checkpoint(const GcdState& st, const Polynomial& r0, const Polynomial& r1) {
  if (!g_checks.load(std::memory_order_relaxed)) return;
  MulCountPause pause;
  ++g_checkpoints;
  const bool rows = st.r == st.s * r0 + st.t * r1 && st.r_tilde == st.s_tilde * r0 + st.t_tilde * r1;
  const Polynomial det = st.s * st.t_tilde - st.s_tilde * st.t;
  if (!rows || det.degree() != Degree(0)) ++g_violations;
}

int degree_or_minus_one(const Polynomial& p) { return p.is_zero() ? -1 : p.degree().value(); }

Recovered divide_out(const CodeSpec& code, const Polynomial& numer, const Polynomial& denom) {
  if (denom.is_zero()) return {std::nullopt, DecodeFailure::kNonDivisible};
  auto [q, rem] = divmod(numer, denom);
  if (!rem.is_zero()) return {std::nullopt, DecodeFailure::kNonDivisible};
  if (q.degree() >= code.K()) return {std::nullopt, DecodeFailure::kDegreeOverflow};
  return {std::move(q), DecodeFailure::kNone};
}

void require_nonzero(const Polynomial& t) {
  if (t.is_zero()) throw std::invalid_argument("locator polynomial must be nonzero");
}

StopRule stop_rule_for(Approach approach, StopStyle style, int n, int k, int rho) {
  if (approach == Approach::kI) {
    return style == StopStyle::kAdaptive ? StopRule::adaptive_i(n, k, rho) : StopRule::threshold_i(n, k, rho);
  }
  return style == StopStyle::kAdaptive ? StopRule::adaptive_ii(n, k, rho) : StopRule::threshold_ii(n, k, rho);
}

}  // namespace

bool StopRule::satisfied(const Polynomial& r, const Polynomial& t) const {
  const Degree dr = r.degree();
  switch (kind) {
    case StopKind::kAdaptiveI:
      return dr < t.degree() + Degree(rho + K);
    case StopKind::kThresholdI:
      return r.is_zero() || 2 * dr.value() < N + K + rho;
    case StopKind::kAdaptiveII:
      return dr < t.degree() + Degree(K);
    case StopKind::kThresholdII:
      return r.is_zero() || 2 * dr.value() < N + K - rho;
    case StopKind::kZero:
      return r.is_zero();
  }
  return false;
}

void set_invariant_checks(bool enabled) { g_checks = enabled; }
bool invariant_checks_enabled() { return g_checks; }
std::uint64_t invariant_checkpoints() { return g_checkpoints; }
std::uint64_t invariant_violations() { return g_violations; }
void reset_invariant_counters() {
  g_checkpoints = 0;
  g_violations = 0;
}

GcdState gcd_engine(const Polynomial& r0, const Polynomial& r1, const StopRule& stop) {
  if (r0.is_zero()) throw std::invalid_argument("gcd engine needs a nonzero first input");
  const Field& f = r0.field();
  const Polynomial zero(f);
  const Polynomial one = Polynomial::constant(f, 1);

  GcdState st{r0, r1, one, zero, zero, one};
  if (stop.satisfied(r1, one)) {
    st = GcdState{r1, r0, zero, one, one, zero};
    st.prechecked = true;
    checkpoint(st, r0, r1);
    return st;
  }

  while (true) {
    Degree i = st.r.degree();
    const Degree j = st.r_tilde.degree();
    checkpoint(st, r0, r1);
    while (i >= j) {
      if (st.r_tilde.is_zero()) throw std::invalid_argument("gcd engine reached a zero divisor");
      const auto shift = static_cast<std::size_t>(i.value() - j.value());
      const std::uint64_t c = f.div(st.r.lead(), st.r_tilde.lead());
      st.r = sub_shifted(st.r, c, shift, st.r_tilde);
      st.s = sub_shifted(st.s, c, shift, st.s_tilde);
      st.t = sub_shifted(st.t, c, shift, st.t_tilde);
      ++st.iterations;
      i = st.r.degree();
    }
    checkpoint(st, r0, r1);
    if (stop.satisfied(st.r, st.t)) return st;
    std::swap(st.r, st.r_tilde);
    std::swap(st.s, st.s_tilde);
    std::swap(st.t, st.t_tilde);
    ++st.swaps;
  }
}

Polynomial lambda_of(const CodeSpec& code, const PositionSet& positions) {
  Polynomial acc = Polynomial::constant(code.field(), 1);
  for (auto i : positions) {
    if (i >= code.n()) throw CodeError("position out of range");
    acc = acc * code.modulus(i);
  }
  return acc;
}

Polynomial received_polynomial(const CodeSpec& code, const ReceivedWord& word) {
  return psi_inverse(code, word.symbols);
}

Polynomial hat_y(const CodeSpec& code, const ReceivedWord& word) {
  return lambda_of(code, word.erased) * received_polynomial(code, word);
}

Polynomial tilde_m(const CodeSpec& code, const PositionSet& erased) {
  return *exact_div(code.M_n(), lambda_of(code, erased));
}

GcdState extended_gcd_i(const CodeSpec& code, const Polynomial& e_hat) {
  if (e_hat.is_zero()) throw std::invalid_argument("extended GCD needs a nonzero error polynomial");
  return gcd_engine(code.M_n(), e_hat, StopRule::zero());
}

GcdState extended_gcd_ii(const CodeSpec& code, const PositionSet& erased, const Polynomial& e) {
  if (e.is_zero()) throw std::invalid_argument("extended GCD needs a nonzero error polynomial");
  return gcd_engine(tilde_m(code, erased), e, StopRule::zero());
}

GcdState partial_gcd_i(const CodeSpec& code, const ReceivedWord& word, StopStyle style) {
  validate_word(code, word);
  const int rho = lambda_of(code, word.erased).degree().value();
  return gcd_engine(code.M_n(), hat_y(code, word), stop_rule_for(Approach::kI, style, code.N(), code.K(), rho));
}

GcdState partial_gcd_ii(const CodeSpec& code, const ReceivedWord& word, StopStyle style) {
  validate_word(code, word);
  const Polynomial lambda_rho = lambda_of(code, word.erased);
  const int rho = lambda_rho.degree().value();
  return gcd_engine(*exact_div(code.M_n(), lambda_rho), received_polynomial(code, word),
                    stop_rule_for(Approach::kII, style, code.N(), code.K(), rho));
}

std::string_view failure_name(DecodeFailure f) {
  switch (f) {
    case DecodeFailure::kNone:
      return "NONE";
    case DecodeFailure::kNonDivisible:
      return "NON_DIVISIBLE";
    case DecodeFailure::kDegreeOverflow:
      return "DEGREE_OVERFLOW";
    case DecodeFailure::kVerifyMismatch:
      return "VERIFY_MISMATCH";
    case DecodeFailure::kAmbiguous:
      return "AMBIGUOUS";
  }
  return "UNKNOWN";
}

Recovered recover_i_remainder(const CodeSpec& code, const ReceivedWord& word, const Polynomial& t) {
  require_nonzero(t);
  const Polynomial numer = (t * hat_y(code, word)) % code.M_n();
  return divide_out(code, numer, t * lambda_of(code, word.erased));
}

Recovered recover_i_quotient(const CodeSpec& code, const Polynomial& r, const Polynomial& t,
                             const Polynomial& lambda_rho) {
  require_nonzero(t);
  return divide_out(code, r, t * lambda_rho);
}

Recovered recover_ii_remainder(const CodeSpec& code, const ReceivedWord& word, const Polynomial& t) {
  require_nonzero(t);
  const Polynomial numer = (t * received_polynomial(code, word)) % tilde_m(code, word.erased);
  return divide_out(code, numer, t);
}

Recovered recover_ii_quotient(const CodeSpec& code, const Polynomial& r, const Polynomial& t) {
  require_nonzero(t);
  return divide_out(code, r, t);
}

Recovered interpolate_with_locator(const CodeSpec& code, const ReceivedWord& word, const Polynomial& g,
                                   Approach approach) {
  validate_word(code, word);
  const int rho = lambda_of(code, word.erased).degree().value();
  if (g.is_zero() || g.degree() > Degree(code.N() - code.K() - rho)) {
    throw std::invalid_argument("locator multiple exceeds the degree bound N - K - deg Lambda_rho");
  }
  return approach == Approach::kI ? recover_i_remainder(code, word, g) : recover_ii_remainder(code, word, g);
}

bool verify_consistent(const CodeSpec& code, const ReceivedWord& word, const Polynomial& message,
                       const Polynomial& locator_tau) {
  MulCountPause pause;
  const int rho = lambda_of(code, word.erased).degree().value();
  if (locator_tau.is_zero() || 2 * locator_tau.degree().value() + rho > code.N() - code.K()) return false;
  if (message.degree() >= code.K()) return false;
  Polynomial support_product = Polynomial::constant(code.field(), 1);
  std::vector<bool> in_support(code.n(), false);
  for (std::size_t i = 0; i < code.n(); ++i) {
    if (word.erased.count(i)) continue;
    if ((locator_tau % code.modulus(i)).is_zero()) {
      in_support[i] = true;
      support_product = support_product * code.modulus(i);
    }
  }
  if (!(support_product == locator_tau.monic())) return false;
  const Residues codeword = psi_forward(code, message);
  for (std::size_t i = 0; i < code.n(); ++i) {
    if (word.erased.count(i) || in_support[i]) continue;
    if (!(codeword[i] == word.symbols[i])) return false;
  }
  return true;
}

DecodeOutcome decode(const CodeSpec& code, const ReceivedWord& word, const DecodeOptions& opts) {
  validate_word(code, word);
  MulCounter total;
  DecodeOutcome out;
  out.message = Polynomial(code.field());
  out.locator_tau = Polynomial(code.field());

  const Polynomial lambda_rho = lambda_of(code, word.erased);
  const int rho = lambda_rho.degree().value();
  const Polynomial y = received_polynomial(code, word);
  const Polynomial m_tilde = *exact_div(code.M_n(), lambda_rho);

  Polynomial r0, r1;
  if (opts.approach == Approach::kI) {
    r0 = code.M_n();
    r1 = lambda_rho * y;
  } else {
    r0 = m_tilde;
    r1 = y;
  }
  out.stats.input_degree_r0 = degree_or_minus_one(r0);
  out.stats.input_degree_r1 = degree_or_minus_one(r1);

  GcdState st;
  {
    MulCounter gcd;
    st = gcd_engine(r0, r1, stop_rule_for(opts.approach, opts.stop, code.N(), code.K(), rho));
    out.stats.gcd_mults = gcd.count();
  }
  out.stats.iterations = st.iterations;
  out.stats.swaps = st.swaps;

  auto finish = [&](DecodeFailure f) {
    out.failure = f;
    out.stats.total_mults = total.count();
    return out;
  };

  if (st.t.is_zero()) return finish(DecodeFailure::kNonDivisible);
  // Recovery is invariant under scaling t (and r with it), so normalize here.
  const std::uint64_t lead_inv = code.field().inv(st.t.lead());
  const Polynomial t = st.t.scaled(lead_inv);

  Recovered rec;
  if (opts.recovery == Recovery::kRemainder) {
    const Polynomial& modulus = opts.approach == Approach::kI ? code.M_n() : m_tilde;
    const Polynomial numer = (t * r1) % modulus;
    rec = divide_out(code, numer, opts.approach == Approach::kI ? t * lambda_rho : t);
  } else {
    const Polynomial r = st.r.scaled(lead_inv);
    rec = divide_out(code, r, opts.approach == Approach::kI ? t * lambda_rho : t);
  }
  if (!rec.ok()) return finish(rec.failure);
  if (!exact_div(m_tilde, t)) return finish(DecodeFailure::kNonDivisible);

  out.message = *rec.message;
  out.locator_tau = t;
  out.stats.total_mults = total.count();
  {
    MulCountPause pause;
    out.corrected = encode(code, out.message);
  }
  if (opts.verify && !verify_consistent(code, word, out.message, t)) {
    out.failure = DecodeFailure::kVerifyMismatch;
  }
  return out;
}

}  // namespace prc
