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

#include <cstdint>
#include <vector>

#include "prc/code.hpp"
#include "prc/decode.hpp"

namespace prc {

/// Code restricted to the non-erased positions, with its own CRT basis.
struct ShortenedCode {
  std::vector<std::size_t> kept;       // ascending positions of the base code
  std::vector<Polynomial> moduli;      // moduli at `kept`
  Polynomial m_s;                      // product of `moduli`
  std::vector<Polynomial> beta_tilde;  // basis over `moduli`, aligned with `kept`
};

/// Recomputes the interpolation basis for the positions outside `erased`.
/// Throws CodeError when deg Lambda_rho > N - K or a position is out of range.
ShortenedCode shorten(const CodeSpec& code, const PositionSet& erased);

/// Reference decoder: shorten, interpolate over the kept positions, then run
/// error-only partial-GCD decoding (approach II machinery with no erasures).
/// opts.approach is ignored; recovery, stop and verify are honored.
DecodeOutcome decode_modified_transform(const CodeSpec& code, const ReceivedWord& word,
                                        const DecodeOptions& opts = {});

struct NearestCodeword {
  Polynomial message;
  int distance = 0;  // degree-weighted, over non-erased positions
  bool unique = true;
};

/// Largest message space nearest_codeword will enumerate.
inline constexpr std::uint64_t kMaxEnumeration = std::uint64_t{1} << 20;

/// Exhaustive minimum degree-weighted-distance decoding over all q^K
/// messages. Throws std::length_error when q^K > kMaxEnumeration.
NearestCodeword nearest_codeword(const CodeSpec& code, const ReceivedWord& word);

/// Wraps nearest_codeword as a DecodeOutcome; ties decode to a failure.
/// locator_tau is the product of moduli at non-erased mismatching positions.
DecodeOutcome decode_nearest(const CodeSpec& code, const ReceivedWord& word);

}  // namespace prc
