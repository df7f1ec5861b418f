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

#include <atomic>
#include <cstdint>

namespace prc {

namespace detail {

struct MulTally {
  std::uint64_t total = 0;
  unsigned paused = 0;
};

inline thread_local MulTally mul_tally;

inline void note_mul() noexcept {
#ifndef PRC_DISABLE_MUL_COUNT
  if (mul_tally.paused == 0) ++mul_tally.total;
#endif
}

inline std::atomic<std::uint64_t> basis_builds{0};

}  // namespace detail

/// Counts field multiplications (mul, div and inv each count once) performed
/// on the calling thread while the counter is alive.
class MulCounter {
 public:
  MulCounter() noexcept : start_(detail::mul_tally.total) {}
  std::uint64_t count() const noexcept { return detail::mul_tally.total - start_; }

 private:
  std::uint64_t start_;
};

/// Suspends multiplication counting on this thread for its lifetime. Used by
/// the invariant checkers so verification work never leaks into statistics.
class MulCountPause {
 public:
  MulCountPause() noexcept { ++detail::mul_tally.paused; }
  ~MulCountPause() { --detail::mul_tally.paused; }
  MulCountPause(const MulCountPause&) = delete;
  MulCountPause& operator=(const MulCountPause&) = delete;
};

/// Number of CRT interpolation bases built since process start (any thread).
inline std::uint64_t basis_build_count() noexcept { return detail::basis_builds.load(); }

}  // namespace prc
