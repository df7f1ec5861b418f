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

#include "prc/field.hpp"

#include <array>
#include <charconv>
#include <limits>
#include <sstream>

#include "prc/counters.hpp"
#include "prc/poly.hpp"

namespace prc {

namespace detail {

struct FieldImpl {
  std::uint32_t p = 2;
  unsigned m = 1;
  std::uint64_t q = 2;
  std::vector<std::uint64_t> poly;  // ascending, size m + 1 when m > 1
  // Log/antilog tables for extension fields with q <= 2^16.
  std::vector<std::uint32_t> exp;  // size 2(q-1)
  std::vector<std::uint32_t> log;  // size q

  using Digits = std::array<std::uint64_t, 16>;

  Digits split(std::uint64_t v) const {
    Digits d{};
    for (unsigned i = 0; i < m; ++i) {
      d[i] = v % p;
      v /= p;
    }
    return d;
  }

  std::uint64_t join(const Digits& d) const {
    std::uint64_t v = 0;
    for (unsigned i = m; i-- > 0;) v = v * p + d[i];
    return v;
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    if (m == 1) return (a + b) % p;
    if (p == 2) return a ^ b;
    auto da = split(a);
    const auto db = split(b);
    for (unsigned i = 0; i < m; ++i) da[i] = (da[i] + db[i]) % p;
    return join(da);
  }

  std::uint64_t neg(std::uint64_t a) const {
    if (m == 1) return a == 0 ? 0 : p - a;
    if (p == 2) return a;
    auto d = split(a);
    for (unsigned i = 0; i < m; ++i) d[i] = d[i] == 0 ? 0 : p - d[i];
    return join(d);
  }

  // Schoolbook product of digit vectors reduced by the monic field polynomial.
  std::uint64_t mul_slow(std::uint64_t a, std::uint64_t b) const {
    const auto da = split(a);
    const auto db = split(b);
    std::array<std::uint64_t, 32> prod{};
    for (unsigned i = 0; i < m; ++i) {
      if (da[i] == 0) continue;
      for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    }
    for (unsigned k = 2 * m - 1; k-- > m;) {
      const std::uint64_t c = prod[k];
      if (c == 0) continue;
      prod[k] = 0;
      // x^k = x^(k-m) * x^m and x^m = -(poly[0] + ... + poly[m-1] x^(m-1))
      for (unsigned i = 0; i < m; ++i) {
        prod[k - m + i] = (prod[k - m + i] + (p - c) * poly[i]) % p;
      }
    }
    Digits out{};
    for (unsigned i = 0; i < m; ++i) out[i] = prod[i];
    return join(out);
  }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    if (m == 1) return a * b % p;
    if (a == 0 || b == 0) return 0;
    if (!log.empty()) return exp[log[a] + log[b]];
    return mul_slow(a, b);
  }

  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e != 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  std::uint64_t inv(std::uint64_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero field element");
    if (!log.empty()) return exp[(q - 1 - log[a]) % (q - 1)];
    return pow(a, q - 2);
  }

  void build_tables() {
    if (m == 1 || q > (1u << 16)) return;
    std::vector<std::uint64_t> prime_factors;
    std::uint64_t rest = q - 1;
    for (std::uint64_t f = 2; f * f <= rest; ++f) {
      if (rest % f == 0) {
        prime_factors.push_back(f);
        while (rest % f == 0) rest /= f;
      }
    }
    if (rest > 1) prime_factors.push_back(rest);

    auto slow_pow = [&](std::uint64_t a, std::uint64_t e) {
      std::uint64_t r = 1;
      while (e != 0) {
        if (e & 1) r = mul_slow(r, a);
        a = mul_slow(a, a);
        e >>= 1;
      }
      return r;
    };
    std::uint64_t gen = 0;
    for (std::uint64_t g = 2; g < q && gen == 0; ++g) {
      bool primitive = true;
      for (auto f : prime_factors) {
        if (slow_pow(g, (q - 1) / f) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) gen = g;
    }
    if (q == 2 || gen == 0) gen = 1;  // q - 1 == 1: the multiplicative group is trivial
    exp.assign(2 * (q - 1), 0);
    log.assign(q, 0);
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < q - 1; ++i) {
      exp[i] = exp[i + q - 1] = static_cast<std::uint32_t>(v);
      log[v] = static_cast<std::uint32_t>(i);
      v = mul_slow(v, gen);
    }
  }
};

namespace {

std::shared_ptr<const FieldImpl> make_prime(std::uint32_t p) {
  if (p < 2 || p >= (1u << 16) || !is_prime(p)) {
    throw std::invalid_argument("field characteristic must be a prime below 2^16");
  }
  auto impl = std::make_shared<FieldImpl>();
  impl->p = p;
  impl->m = 1;
  impl->q = p;
  return impl;
}

const std::shared_ptr<const FieldImpl>& gf2() {
  static const std::shared_ptr<const FieldImpl> impl = make_prime(2);
  return impl;
}

std::uint64_t checked_order(std::uint32_t p, unsigned m) {
  if (m < 1 || m > 16) throw std::invalid_argument("extension degree must be in [1, 16]");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (q > std::numeric_limits<std::uint64_t>::max() / p) {
      throw std::invalid_argument("field order does not fit in 64 bits");
    }
    q *= p;
  }
  return q;
}

}  // namespace
}  // namespace detail

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field::Field() : impl_(detail::gf2()) {}

Field Field::prime(std::uint32_t p) {
  if (p == 2) return Field();
  return Field(detail::make_prime(p));
}

Field Field::extension(std::uint32_t p, unsigned m) {
  if (m == 1) return prime(p);
  detail::checked_order(p, m);
  const Polynomial f = smallest_irreducible(prime(p), m);
  return extension(p, m, {f.coeffs().begin(), f.coeffs().end()});
}

Field Field::extension(std::uint32_t p, unsigned m, std::vector<std::uint64_t> field_poly) {
  const Field base = prime(p);
  const std::uint64_t q = detail::checked_order(p, m);
  if (m == 1) {
    if (!field_poly.empty()) throw std::invalid_argument("prime fields take no field polynomial");
    return base;
  }
  if (field_poly.size() != m + 1 || field_poly.back() != 1) {
    throw std::invalid_argument("field polynomial must be monic of degree m");
  }
  for (auto c : field_poly) {
    if (c >= p) throw std::invalid_argument("field polynomial coefficient out of range");
  }
  if (!is_irreducible(Polynomial(base, field_poly))) {
    throw std::invalid_argument("field polynomial is reducible");
  }
  auto impl = std::make_shared<detail::FieldImpl>();
  impl->p = p;
  impl->m = m;
  impl->q = q;
  impl->poly = std::move(field_poly);
  impl->build_tables();
  return Field(std::move(impl));
}

namespace {

std::uint64_t parse_uint(std::string_view s, const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument(std::string("malformed ") + what + ": '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Field Field::parse(std::string_view descriptor) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto colon = descriptor.find(':', start);
    parts.push_back(descriptor.substr(start, colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (parts.size() > 3) throw std::invalid_argument("malformed field descriptor");
  const auto p = parse_uint(parts[0], "field characteristic");
  if (p >= (1u << 16)) throw std::invalid_argument("field characteristic must be below 2^16");
  if (parts.size() == 1) return prime(static_cast<std::uint32_t>(p));
  const auto m = parse_uint(parts[1], "extension degree");
  if (m > 16) throw std::invalid_argument("extension degree must be in [1, 16]");
  if (parts.size() == 2) return extension(static_cast<std::uint32_t>(p), static_cast<unsigned>(m));
  std::vector<std::uint64_t> poly;
  std::string_view rest = parts[2];
  while (true) {
    const auto dot = rest.find('.');
    poly.push_back(parse_uint(rest.substr(0, dot), "field polynomial coefficient"));
    if (dot == std::string_view::npos) break;
    rest.remove_prefix(dot + 1);
  }
  return extension(static_cast<std::uint32_t>(p), static_cast<unsigned>(m), std::move(poly));
}

std::string Field::descriptor() const {
  std::ostringstream out;
  out << impl_->p;
  if (impl_->m > 1) {
    out << ':' << impl_->m << ':';
    for (std::size_t i = 0; i < impl_->poly.size(); ++i) out << (i ? "." : "") << impl_->poly[i];
  }
  return out.str();
}

std::uint32_t Field::characteristic() const noexcept { return impl_->p; }
unsigned Field::degree() const noexcept { return impl_->m; }
std::uint64_t Field::order() const noexcept { return impl_->q; }
const std::vector<std::uint64_t>& Field::field_poly() const noexcept { return impl_->poly; }

std::uint64_t Field::add(std::uint64_t a, std::uint64_t b) const { return impl_->add(a, b); }
std::uint64_t Field::sub(std::uint64_t a, std::uint64_t b) const { return impl_->add(a, impl_->neg(b)); }
std::uint64_t Field::neg(std::uint64_t a) const { return impl_->neg(a); }

std::uint64_t Field::mul(std::uint64_t a, std::uint64_t b) const {
  detail::note_mul();
  return impl_->mul(a, b);
}

std::uint64_t Field::inv(std::uint64_t a) const {
  detail::note_mul();
  return impl_->inv(a);
}

std::uint64_t Field::div(std::uint64_t a, std::uint64_t b) const {
  detail::note_mul();
  return impl_->mul(a, impl_->inv(b));
}

std::uint64_t Field::pow(std::uint64_t a, std::uint64_t e) const { return impl_->pow(a, e); }

bool operator==(const Field& a, const Field& b) noexcept {
  if (a.impl_ == b.impl_) return true;
  return a.impl_->p == b.impl_->p && a.impl_->m == b.impl_->m && a.impl_->poly == b.impl_->poly;
}

FieldElement::FieldElement(Field field, std::uint64_t value) : field_(std::move(field)), value_(value) {
  if (!field_.contains(value_)) throw std::out_of_range("field element value out of range");
}

namespace {
void require_same(const FieldElement& a, const FieldElement& b) {
  if (!(a.field() == b.field())) throw FieldMismatch();
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.field_, a.field_.add(a.value_, b.value_)};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.field_, a.field_.sub(a.value_, b.value_)};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.field_, a.field_.mul(a.value_, b.value_)};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.field_, a.field_.div(a.value_, b.value_)};
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return a.value_ == b.value_;
}

}  // namespace prc
