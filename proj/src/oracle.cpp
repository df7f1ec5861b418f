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

#include "prc/oracle.hpp"

#include <stdexcept>

#include "prc/counters.hpp"

namespace prc {

ShortenedCode shorten(const CodeSpec& code, const PositionSet& erased) {
  ShortenedCode sc;
  int rho = 0;
  for (auto i : erased) {
    if (i >= code.n()) throw CodeError("erasure position out of range");
    rho += code.modulus_degree(i);
  }
  if (rho > code.N() - code.K()) throw CodeError("erasure budget exceeded: deg Lambda_rho > N - K");
  for (std::size_t i = 0; i < code.n(); ++i) {
    if (erased.count(i)) continue;
    sc.kept.push_back(i);
    sc.moduli.push_back(code.modulus(i));
  }
  sc.m_s = product_of(code.field(), sc.moduli);
  sc.beta_tilde = interpolation_basis(sc.moduli, sc.m_s);
  return sc;
}

DecodeOutcome decode_modified_transform(const CodeSpec& code, const ReceivedWord& word, const DecodeOptions& opts) {
  validate_word(code, word);
  MulCounter total;
  DecodeOutcome out;
  out.message = Polynomial(code.field());
  out.locator_tau = Polynomial(code.field());

  auto finish = [&](DecodeFailure f) {
    out.failure = f;
    out.stats.total_mults = total.count();
    return out;
  };

  const int rho = lambda_of(code, word.erased).degree().value();
  if (rho > code.N() - code.K()) return finish(DecodeFailure::kDegreeOverflow);

  const ShortenedCode sc = shorten(code, word.erased);
  Polynomial y_s(code.field());
  for (std::size_t j = 0; j < sc.kept.size(); ++j) {
    const auto& c = word.symbols[sc.kept[j]];
    if (!c.is_zero()) y_s += c * sc.beta_tilde[j];
  }
  y_s = y_s % sc.m_s;

  // Error-only decoding of the shortened code: N' = deg M_S, no erasures.
  const int n_s = sc.m_s.degree().value();
  const StopRule stop = opts.stop == StopStyle::kAdaptive ? StopRule::adaptive_ii(n_s, code.K(), 0)
                                                          : StopRule::threshold_ii(n_s, code.K(), 0);
  out.stats.input_degree_r0 = n_s;
  out.stats.input_degree_r1 = y_s.is_zero() ? -1 : y_s.degree().value();
  GcdState st;
  {
    MulCounter gcd;
    st = gcd_engine(sc.m_s, y_s, stop);
    out.stats.gcd_mults = gcd.count();
  }
  out.stats.iterations = st.iterations;
  out.stats.swaps = st.swaps;
  if (st.t.is_zero()) return finish(DecodeFailure::kNonDivisible);

  const std::uint64_t lead_inv = code.field().inv(st.t.lead());
  const Polynomial t = st.t.scaled(lead_inv);
  const Polynomial numer = opts.recovery == Recovery::kRemainder ? (t * y_s) % sc.m_s : st.r.scaled(lead_inv);
  auto [a, rem] = divmod(numer, t);
  if (!rem.is_zero() || !exact_div(sc.m_s, t)) return finish(DecodeFailure::kNonDivisible);
  if (a.degree() >= code.K()) return finish(DecodeFailure::kDegreeOverflow);

  out.message = a;
  out.locator_tau = t;
  out.stats.total_mults = total.count();
  {
    MulCountPause pause;
    out.corrected = encode(code, a);
  }
  if (opts.verify && !verify_consistent(code, word, a, t)) out.failure = DecodeFailure::kVerifyMismatch;
  return out;
}

namespace {

// Degree-weighted distance restricted to non-erased positions.
int restricted_distance(const CodeSpec& code, const Residues& codeword, const ReceivedWord& word) {
  int d = 0;
  for (std::size_t i = 0; i < code.n(); ++i) {
    if (word.erased.count(i)) continue;
    if (!(codeword[i] == word.symbols[i])) d += code.modulus_degree(i);
  }
  return d;
}

}  // namespace

NearestCodeword nearest_codeword(const CodeSpec& code, const ReceivedWord& word) {
  validate_word(code, word);
  MulCountPause pause;
  const std::uint64_t q = code.field().order();
  const auto big_k = static_cast<std::size_t>(code.K());
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < big_k; ++i) {
    if (count > kMaxEnumeration / q) throw std::length_error("message space too large to enumerate");
    count *= q;
  }

  NearestCodeword best;
  best.distance = code.N() + 1;
  std::vector<std::uint64_t> digits(big_k, 0);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    const Polynomial a(code.field(), digits);
    const int d = restricted_distance(code, psi_forward(code, a), word);
    if (d < best.distance) {
      best = {a, d, true};
    } else if (d == best.distance) {
      best.unique = false;
    }
    for (std::size_t i = 0; i < big_k && ++digits[i] == q; ++i) digits[i] = 0;
  }
  return best;
}

DecodeOutcome decode_nearest(const CodeSpec& code, const ReceivedWord& word) {
  DecodeOutcome out;
  const NearestCodeword nc = nearest_codeword(code, word);
  out.message = nc.message;
  out.corrected = encode(code, nc.message);
  PositionSet mismatched;
  for (std::size_t i = 0; i < code.n(); ++i) {
    if (!word.erased.count(i) && !(out.corrected.symbols[i] == word.symbols[i])) mismatched.insert(i);
  }
  out.locator_tau = lambda_of(code, mismatched);
  if (!nc.unique) out.failure = DecodeFailure::kAmbiguous;
  return out;
}

}  // namespace prc
