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
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prc/field.hpp"
#include "prc/poly.hpp"

namespace prc {

using Residues = std::vector<Polynomial>;
using PositionSet = std::set<std::size_t>;

/// Raised for structurally invalid code parameters or words.
class CodeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Irreducible polynomial remainder code over F[x].
 *
 * Codewords are residue vectors (a mod m_0, ..., a mod m_{n-1}) of messages
 * a(x) with deg a < K = deg(m_0 * ... * m_{k-1}). The CRT basis
 * beta_i = (M_n/m_i) * ((M_n/m_i)^-1 mod m_i) mod M_n is computed once at
 * construction and reused by every decode.
 */
class CodeSpec {
 public:
  /// Throws CodeError on non-monic, reducible or duplicate moduli, on
  /// n < 2, or on k outside [1, n].
  CodeSpec(Field field, std::vector<Polynomial> moduli, std::size_t k);

  const Field& field() const noexcept { return field_; }
  std::size_t n() const noexcept { return moduli_.size(); }
  std::size_t k() const noexcept { return k_; }
  const std::vector<Polynomial>& moduli() const noexcept { return moduli_; }
  const Polynomial& modulus(std::size_t i) const { return moduli_.at(i); }
  int modulus_degree(std::size_t i) const { return moduli_.at(i).degree().value(); }
  const Polynomial& M_n() const noexcept { return mn_; }
  const Polynomial& M_k() const noexcept { return mk_; }
  int N() const noexcept { return big_n_; }
  int K() const noexcept { return big_k_; }
  const std::vector<Polynomial>& beta() const noexcept { return beta_; }
  bool ordered_degree() const noexcept { return ordered_degree_; }

  friend bool operator==(const CodeSpec& a, const CodeSpec& b) {
    return a.field_ == b.field_ && a.k_ == b.k_ && a.moduli_ == b.moduli_;
  }

 private:
  Field field_;
  std::vector<Polynomial> moduli_;
  std::size_t k_;
  Polynomial mn_;
  Polynomial mk_;
  int big_n_ = 0;
  int big_k_ = 0;
  std::vector<Polynomial> beta_;
  bool ordered_degree_ = false;
};

/// Received (or transmitted) word. Erased positions hold the zero polynomial.
struct ReceivedWord {
  Residues symbols;
  PositionSet erased;

  friend bool operator==(const ReceivedWord&, const ReceivedWord&) = default;
};

/// CRT interpolation basis for pairwise coprime moduli; result i is
/// congruent to 1 mod m_i and 0 mod every other modulus, reduced mod their
/// product. Each call bumps basis_build_count().
std::vector<Polynomial> interpolation_basis(std::span<const Polynomial> moduli, const Polynomial& product);

/// Product of all polynomials (1 for an empty list).
Polynomial product_of(const Field& field, std::span<const Polynomial> factors);

/// Reed-Solomon code as the special case m_i = x - alpha_i.
CodeSpec rs_code(const Field& field, std::span<const std::uint64_t> points, std::size_t k);

/// a mod m_i for every position. Requires deg a < N.
Residues psi_forward(const CodeSpec& code, const Polynomial& a);
/// sum c_i beta_i mod M_n. Requires deg c_i < deg m_i.
Polynomial psi_inverse(const CodeSpec& code, std::span<const Polynomial> residues);

/// Codeword for message a (deg a < K), no erasures.
ReceivedWord encode(const CodeSpec& code, const Polynomial& a);

/// Sum of deg m_i over nonzero positions.
int degree_weight(const CodeSpec& code, std::span<const Polynomial> residues);
int hamming_weight(std::span<const Polynomial> residues);
/// Degree weight of u - v.
int dd_distance(const CodeSpec& code, std::span<const Polynomial> u, std::span<const Polynomial> v);

/// Throws CodeError unless the word fits the code: n symbols, each reduced
/// modulo its modulus, erased positions in range and zero.
void validate_word(const CodeSpec& code, const ReceivedWord& word);

// Text formats ---------------------------------------------------------------

/// Code-spec file: `field <descriptor>`, `k <int>`, `modulus <coeffs>` lines,
/// `#` comments. Throws std::invalid_argument or CodeError.
CodeSpec parse_code_spec(std::string_view text);
std::string format_code_spec(const CodeSpec& code);

/// Word file: `symbol <i> <coeffs>` or `symbol <i> ?` per position.
ReceivedWord parse_word(const CodeSpec& code, std::string_view text);
std::string format_word(const ReceivedWord& word);

}  // namespace prc
