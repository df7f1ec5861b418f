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

#include "prc/poly.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "prc/rng.hpp"

namespace prc {

namespace {

void require_same_field(const Polynomial& a, const Polynomial& b) {
  if (!(a.field() == b.field())) throw FieldMismatch();
}

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

Polynomial::Polynomial(Field field, std::vector<std::uint64_t> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (auto c : coeffs_) {
    if (!field_.contains(c)) throw std::invalid_argument("polynomial coefficient outside the field");
  }
  normalize();
}

Polynomial Polynomial::constant(const Field& field, std::uint64_t c) { return Polynomial(field, {c}); }

Polynomial Polynomial::monomial(const Field& field, std::uint64_t c, std::size_t exponent) {
  std::vector<std::uint64_t> v(exponent + 1, 0);
  v[exponent] = c;
  return Polynomial(field, std::move(v));
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monic() const {
  if (is_zero() || is_monic()) return *this;
  return scaled(field_.inv(lead()));
}

Polynomial Polynomial::scaled(std::uint64_t c) const {
  Polynomial out(field_);
  if (c == 0) return out;
  out.coeffs_.resize(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = field_.mul(coeffs_[i], c);
  out.normalize();
  return out;
}

std::uint64_t Polynomial::evaluate(std::uint64_t point) const {
  std::uint64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_.add(field_.mul(acc, point), *it);
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = field_.neg(c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_field(*this, o);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = field_.add(coeffs_[i], o.coeffs_[i]);
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_field(*this, o);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = field_.sub(coeffs_[i], o.coeffs_[i]);
  normalize();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  Polynomial out(a.field_);
  if (a.is_zero() || b.is_zero()) return out;
  const Field& f = a.field_;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out.coeffs_[i + j] = f.add(out.coeffs_[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  out.normalize();
  return out;
}

Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).quotient; }
Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).remainder; }

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const Field& f = a.field();
  if (a.degree() < b.degree()) return {Polynomial(f), a};

  std::vector<std::uint64_t> rem(a.coeffs().begin(), a.coeffs().end());
  const auto bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const std::uint64_t lead_inv = f.inv(b.lead());
  std::vector<std::uint64_t> quot(rem.size() - db, 0);
  for (std::size_t k = rem.size(); k-- > db;) {
    const std::uint64_t c = f.mul(rem[k], lead_inv);
    quot[k - db] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) rem[k - db + i] = f.sub(rem[k - db + i], f.mul(c, bc[i]));
  }
  rem.resize(db);
  return {Polynomial(f, std::move(quot)), Polynomial(f, std::move(rem))};
}

std::optional<Polynomial> exact_div(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

ExtGcd ext_gcd(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  const Field& f = a.field();
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  Polynomial r0 = a, r1 = b;
  Polynomial u0 = Polynomial::constant(f, 1), u1(f);
  Polynomial v0(f), v1 = Polynomial::constant(f, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    u0 = std::exchange(u1, u0 - q * u1);
    v0 = std::exchange(v1, v0 - q * v1);
  }
  const std::uint64_t scale = f.inv(r0.lead());
  return {r0.scaled(scale), u0.scaled(scale), v0.scaled(scale)};
}

Polynomial mod_inverse(const Polynomial& b, const Polynomial& m) {
  if (m.degree() < 1) throw std::invalid_argument("modulus must have positive degree");
  const Polynomial reduced = b % m;
  if (reduced.is_zero()) throw std::domain_error("zero is not invertible");
  auto g = ext_gcd(reduced, m);
  if (!g.gcd.is_one()) throw std::domain_error("polynomial is not invertible modulo m");
  return g.u % m;
}

Polynomial pow_mod(const Polynomial& base, std::uint64_t e, const Polynomial& m) {
  Polynomial result = Polynomial::constant(base.field(), 1) % m;
  Polynomial b = base % m;
  while (e != 0) {
    if (e & 1) result = (result * b) % m;
    e >>= 1;
    if (e != 0) b = (b * b) % m;
  }
  return result;
}

bool is_irreducible(const Polynomial& f) {
  if (f.degree() < 1) throw std::invalid_argument("irreducibility is defined for degree >= 1");
  const unsigned d = static_cast<unsigned>(f.degree().value());
  if (d == 1) return true;
  const Field& field = f.field();
  const std::uint64_t q = field.order();
  const Polynomial x = Polynomial::x(field);
  const Polynomial g = f.monic();

  // frob[i] = x^(q^i) mod g
  std::vector<Polynomial> frob{x % g};
  for (unsigned i = 1; i <= d; ++i) frob.push_back(pow_mod(frob.back(), q, g));
  if (!(frob[d] == x % g)) return false;
  for (unsigned r : prime_divisors(d)) {
    const Polynomial h = frob[d / r] - x;
    if (h.is_zero()) return false;
    if (!ext_gcd(h, g).gcd.is_one()) return false;
  }
  return true;
}

Polynomial random_irreducible(const Field& field, unsigned degree, std::uint64_t seed) {
  if (degree < 1) throw std::invalid_argument("degree must be at least 1");
  Rng rng(seed);
  while (true) {
    std::vector<std::uint64_t> c(degree + 1);
    for (unsigned i = 0; i < degree; ++i) c[i] = rng.below(field.order());
    c[degree] = 1;
    Polynomial cand(field, std::move(c));
    if (is_irreducible(cand)) return cand;
  }
}

Polynomial smallest_irreducible(const Field& field, unsigned degree) {
  if (degree < 1) throw std::invalid_argument("degree must be at least 1");
  const std::uint64_t q = field.order();
  std::vector<std::uint64_t> c(degree + 1, 0);
  c[degree] = 1;
  while (true) {
    Polynomial cand(field, c);
    if (is_irreducible(cand)) return cand;
    // Increment the base-q counter formed by c[0..degree-1].
    std::size_t i = 0;
    while (i < degree && ++c[i] == q) c[i++] = 0;
    if (i == degree) throw std::logic_error("no irreducible polynomial found");
  }
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  const auto c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
  return out.str();
}

Polynomial parse_polynomial(const Field& field, std::string_view text) {
  std::vector<std::uint64_t> coeffs;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == ' ' || ch == '\t' || ch == '.') {
      ++i;
      continue;
    }
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc() || ptr == text.data() + i) {
      throw std::invalid_argument("malformed polynomial: '" + std::string(text) + "'");
    }
    if (!field.contains(v)) throw std::invalid_argument("polynomial coefficient outside the field");
    coeffs.push_back(v);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  if (coeffs.empty()) throw std::invalid_argument("empty polynomial text");
  return Polynomial(field, std::move(coeffs));
}

}  // namespace prc
