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

#include "prc/code.hpp"

#include <charconv>
#include <optional>
#include <sstream>

#include "prc/counters.hpp"

namespace prc {

Polynomial product_of(const Field& field, std::span<const Polynomial> factors) {
  Polynomial acc = Polynomial::constant(field, 1);
  for (const auto& f : factors) acc = acc * f;
  return acc;
}

std::vector<Polynomial> interpolation_basis(std::span<const Polynomial> moduli, const Polynomial& product) {
  ++detail::basis_builds;
  std::vector<Polynomial> basis;
  basis.reserve(moduli.size());
  for (const auto& m : moduli) {
    const Polynomial cofactor = *exact_div(product, m);
    basis.push_back((cofactor * mod_inverse(cofactor, m)) % product);
  }
  return basis;
}

CodeSpec::CodeSpec(Field field, std::vector<Polynomial> moduli, std::size_t k)
    : field_(std::move(field)), moduli_(std::move(moduli)), k_(k) {
  if (moduli_.size() < 2) throw CodeError("a code needs at least two moduli");
  if (k_ < 1 || k_ > moduli_.size()) throw CodeError("k must satisfy 1 <= k <= n");
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    const auto& m = moduli_[i];
    if (!(m.field() == field_)) throw CodeError("modulus " + std::to_string(i) + " is over a different field");
    if (m.degree() < 1) throw CodeError("modulus " + std::to_string(i) + " must have positive degree");
    if (!m.is_monic()) throw CodeError("modulus " + std::to_string(i) + " is not monic");
    if (!is_irreducible(m)) throw CodeError("modulus " + std::to_string(i) + " is reducible");
    for (std::size_t j = 0; j < i; ++j) {
      if (moduli_[j] == m) {
        throw CodeError("moduli " + std::to_string(j) + " and " + std::to_string(i) + " are equal");
      }
    }
  }
  mn_ = product_of(field_, moduli_);
  mk_ = product_of(field_, std::span(moduli_).first(k_));
  big_n_ = mn_.degree().value();
  big_k_ = mk_.degree().value();
  beta_ = interpolation_basis(moduli_, mn_);
  ordered_degree_ = true;
  for (std::size_t i = 1; i < moduli_.size(); ++i) {
    if (moduli_[i - 1].degree() > moduli_[i].degree()) ordered_degree_ = false;
  }
}

CodeSpec rs_code(const Field& field, std::span<const std::uint64_t> points, std::size_t k) {
  std::vector<Polynomial> moduli;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!field.contains(points[i])) throw CodeError("evaluation point outside the field");
    for (std::size_t j = 0; j < i; ++j) {
      if (points[j] == points[i]) throw CodeError("repeated evaluation point");
    }
    moduli.emplace_back(field, std::vector<std::uint64_t>{field.neg(points[i]), 1});
  }
  return CodeSpec(field, std::move(moduli), k);
}

Residues psi_forward(const CodeSpec& code, const Polynomial& a) {
  if (a.degree() >= code.N()) throw CodeError("transform input must have degree below N");
  Residues out;
  out.reserve(code.n());
  for (const auto& m : code.moduli()) out.push_back(a % m);
  return out;
}

Polynomial psi_inverse(const CodeSpec& code, std::span<const Polynomial> residues) {
  if (residues.size() != code.n()) throw CodeError("residue count does not match the code length");
  Polynomial acc(code.field());
  for (std::size_t i = 0; i < residues.size(); ++i) {
    if (residues[i].degree() >= code.modulus(i).degree()) {
      throw CodeError("residue " + std::to_string(i) + " is not reduced");
    }
    if (!residues[i].is_zero()) acc += residues[i] * code.beta()[i];
  }
  return acc % code.M_n();
}

ReceivedWord encode(const CodeSpec& code, const Polynomial& a) {
  if (a.degree() >= code.K()) throw CodeError("message degree must be below K");
  return {psi_forward(code, a), {}};
}

int degree_weight(const CodeSpec& code, std::span<const Polynomial> residues) {
  if (residues.size() != code.n()) throw CodeError("residue count does not match the code length");
  int w = 0;
  for (std::size_t i = 0; i < residues.size(); ++i) {
    if (!residues[i].is_zero()) w += code.modulus_degree(i);
  }
  return w;
}

int hamming_weight(std::span<const Polynomial> residues) {
  int w = 0;
  for (const auto& r : residues) w += r.is_zero() ? 0 : 1;
  return w;
}

int dd_distance(const CodeSpec& code, std::span<const Polynomial> u, std::span<const Polynomial> v) {
  if (u.size() != v.size()) throw CodeError("distance between words of different length");
  Residues diff;
  diff.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) diff.push_back(u[i] - v[i]);
  return degree_weight(code, diff);
}

void validate_word(const CodeSpec& code, const ReceivedWord& word) {
  if (word.symbols.size() != code.n()) throw CodeError("word length does not match the code");
  for (std::size_t i = 0; i < code.n(); ++i) {
    if (!(word.symbols[i].field() == code.field())) throw CodeError("symbol over a different field");
    if (word.symbols[i].degree() >= code.modulus(i).degree()) {
      throw CodeError("symbol " + std::to_string(i) + " is not reduced modulo its modulus");
    }
  }
  for (auto i : word.erased) {
    if (i >= code.n()) throw CodeError("erasure position out of range");
    if (!word.symbols[i].is_zero()) throw CodeError("erased positions must hold the zero placeholder");
  }
}

// Text formats ---------------------------------------------------------------

namespace {

std::vector<std::string_view> content_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

std::pair<std::string_view, std::string_view> split_keyword(std::string_view line) {
  const auto sp = line.find_first_of(" \t");
  if (sp == std::string_view::npos) return {line, {}};
  std::string_view rest = line.substr(sp + 1);
  while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t')) rest.remove_prefix(1);
  return {line.substr(0, sp), rest};
}

std::size_t parse_index(std::string_view s, const char* what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument(std::string("malformed ") + what + ": '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

CodeSpec parse_code_spec(std::string_view text) {
  std::optional<Field> field;
  std::optional<std::size_t> k;
  std::vector<Polynomial> moduli;
  for (auto line : content_lines(text)) {
    auto [key, rest] = split_keyword(line);
    if (key == "field") {
      if (field) throw std::invalid_argument("duplicate field line");
      field = Field::parse(rest);
    } else if (key == "k") {
      if (k) throw std::invalid_argument("duplicate k line");
      k = parse_index(rest, "k");
    } else if (key == "modulus") {
      if (!field) throw std::invalid_argument("modulus line before field line");
      moduli.push_back(parse_polynomial(*field, rest));
    } else {
      throw std::invalid_argument("unknown code-spec keyword '" + std::string(key) + "'");
    }
  }
  if (!field) throw std::invalid_argument("code spec lacks a field line");
  if (!k) throw std::invalid_argument("code spec lacks a k line");
  return CodeSpec(*field, std::move(moduli), *k);
}

std::string format_code_spec(const CodeSpec& code) {
  std::ostringstream out;
  out << "field " << code.field().descriptor() << '\n';
  out << "k " << code.k() << '\n';
  for (const auto& m : code.moduli()) out << "modulus " << to_string(m) << '\n';
  return out.str();
}

ReceivedWord parse_word(const CodeSpec& code, std::string_view text) {
  ReceivedWord word;
  word.symbols.assign(code.n(), Polynomial(code.field()));
  std::vector<bool> seen(code.n(), false);
  for (auto line : content_lines(text)) {
    auto [key, rest] = split_keyword(line);
    if (key != "symbol") throw std::invalid_argument("unknown word keyword '" + std::string(key) + "'");
    auto [index_text, value] = split_keyword(rest);
    const std::size_t i = parse_index(index_text, "symbol index");
    if (i >= code.n()) throw std::invalid_argument("symbol index out of range");
    if (seen[i]) throw std::invalid_argument("symbol " + std::to_string(i) + " given twice");
    seen[i] = true;
    if (value == "?") {
      word.erased.insert(i);
    } else {
      word.symbols[i] = parse_polynomial(code.field(), value);
    }
  }
  for (std::size_t i = 0; i < code.n(); ++i) {
    if (!seen[i]) throw std::invalid_argument("symbol " + std::to_string(i) + " missing");
  }
  validate_word(code, word);
  return word;
}

std::string format_word(const ReceivedWord& word) {
  std::ostringstream out;
  for (std::size_t i = 0; i < word.symbols.size(); ++i) {
    out << "symbol " << i << ' ';
    if (word.erased.count(i)) {
      out << '?';
    } else {
      out << to_string(word.symbols[i]);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace prc
