// Copyright 2026 The charfield2 Authors.
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

#include "charfield2/bitpoly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <string>

#include "charfield2/error.hpp"

namespace charfield2 {

std::pair<std::uint64_t, std::uint64_t> clmul64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  while (b != 0) {
    const int i = std::countr_zero(b);
    lo ^= a << i;
    if (i != 0) hi ^= a >> (64 - i);
    b &= b - 1;
  }
  return {lo, hi};
}

void BitPoly::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BitPoly BitPoly::monomial(std::size_t k) {
  std::vector<std::uint64_t> limbs(k / 64 + 1, 0);
  limbs[k / 64] = std::uint64_t{1} << (k % 64);
  return BitPoly(std::move(limbs));
}

BitPoly BitPoly::from_exponents(std::initializer_list<std::size_t> exps) {
  return from_exponents(std::span<const std::size_t>(exps.begin(), exps.size()));
}

BitPoly BitPoly::from_exponents(std::span<const std::size_t> exps) {
  BitPoly p;
  for (std::size_t e : exps) p ^= monomial(e);
  return p;
}

std::optional<std::size_t> BitPoly::degree() const {
  if (limbs_.empty()) return std::nullopt;
  return (limbs_.size() - 1) * 64 + (63 - std::countl_zero(limbs_.back()));
}

bool BitPoly::coeff(std::size_t i) const {
  if (i / 64 >= limbs_.size()) return false;
  return (limbs_[i / 64] >> (i % 64)) & 1U;
}

void BitPoly::set_coeff(std::size_t i, bool v) {
  if (coeff(i) != v) *this ^= monomial(i);
}

std::size_t BitPoly::term_count() const {
  std::size_t c = 0;
  for (auto w : limbs_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<std::size_t> BitPoly::exponents() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < limbs_.size(); ++w) {
    std::uint64_t bits = limbs_[w];
    while (bits != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

BitPoly& BitPoly::operator^=(const BitPoly& o) {
  if (o.limbs_.size() > limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
  for (std::size_t i = 0; i < o.limbs_.size(); ++i) limbs_[i] ^= o.limbs_[i];
  trim();
  return *this;
}

BitPoly operator*(const BitPoly& a, const BitPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::uint64_t> out(a.limbs_.size() + b.limbs_.size(), 0);
  for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
    for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
      const auto [lo, hi] = clmul64(a.limbs_[i], b.limbs_[j]);
      out[i + j] ^= lo;
      out[i + j + 1] ^= hi;
    }
  }
  return BitPoly(std::move(out));
}

BitPoly BitPoly::shifted_left(std::size_t k) const {
  if (is_zero()) return {};
  const std::size_t words = k / 64;
  const unsigned bits = k % 64;
  std::vector<std::uint64_t> out(limbs_.size() + words + 1, 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    out[i + words] ^= limbs_[i] << bits;
    if (bits != 0) out[i + words + 1] ^= limbs_[i] >> (64 - bits);
  }
  return BitPoly(std::move(out));
}

std::pair<BitPoly, BitPoly> BitPoly::divmod(const BitPoly& divisor) const {
  const auto dd = divisor.degree();
  if (!dd) throw Error(ErrorCode::kDomain, "division by the zero polynomial");
  BitPoly q;
  BitPoly r = *this;
  while (true) {
    const auto rd = r.degree();
    if (!rd || *rd < *dd) break;
    const std::size_t shift = *rd - *dd;
    q.set_coeff(shift, true);
    r ^= divisor.shifted_left(shift);
  }
  return {q, r};
}

std::string BitPoly::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  if (is_zero()) return "00";
  const std::size_t nbytes = *degree() / 8 + 1;
  std::string s;
  s.reserve(2 * nbytes);
  for (std::size_t i = 0; i < nbytes; ++i) {
    const auto byte = static_cast<unsigned>((limbs_[i / 8] >> (8 * (i % 8))) & 0xFF);
    s.push_back(kDigits[byte >> 4]);
    s.push_back(kDigits[byte & 0xF]);
  }
  return s;
}

std::string BitPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t e : exponents()) {
    if (!s.empty()) s += '+';
    if (e == 0) {
      s += '1';
    } else if (e == 1) {
      s += 'x';
    } else {
      s += "x^" + std::to_string(e);
    }
  }
  return s;
}

bool BitPoly::less_numeric(const BitPoly& o) const {
  if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size();
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i];
  }
  return false;
}

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

BitPoly parse_hex(std::string_view s) {
  std::vector<std::uint64_t> limbs((s.size() / 2 + 7) / 8 + 1, 0);
  for (std::size_t i = 0; i < s.size() / 2; ++i) {
    const int hi = hex_value(s[2 * i]);
    const int lo = hex_value(s[2 * i + 1]);
    if (hi < 0 || lo < 0) throw Error(ErrorCode::kParse, "bad hex digit in '" + std::string(s) + "'");
    limbs[i / 8] |= static_cast<std::uint64_t>(hi * 16 + lo) << (8 * (i % 8));
  }
  return BitPoly(std::move(limbs));
}

BitPoly parse_human(std::string_view s) {
  BitPoly p;
  std::size_t pos = 0;
  auto fail = [&]() {
    throw Error(ErrorCode::kParse, "cannot parse polynomial '" + std::string(s) + "'");
  };
  while (pos < s.size()) {
    const std::size_t end = std::min(s.find('+', pos), s.size());
    std::string_view term = s.substr(pos, end - pos);
    if (term.empty()) fail();
    if (term == "0") {
      // contributes nothing
    } else if (term == "1") {
      p ^= BitPoly::monomial(0);
    } else if (term == "x") {
      p ^= BitPoly::monomial(1);
    } else if (term.size() > 2 && term.substr(0, 2) == "x^") {
      std::string_view e = term.substr(2);
      if (e.size() >= 2 && e.front() == '{' && e.back() == '}') e = e.substr(1, e.size() - 2);
      if (e.empty() || !std::all_of(e.begin(), e.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        fail();
      }
      p ^= BitPoly::monomial(std::stoul(std::string(e)));
    } else {
      fail();
    }
    pos = end + 1;
    if (end == s.size()) break;
    if (pos == s.size()) fail();
  }
  return p;
}

}  // namespace

BitPoly BitPoly::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw Error(ErrorCode::kParse, "empty polynomial");
  const bool human = s.find_first_of("x+^") != std::string::npos || s.size() % 2 == 1;
  return human ? parse_human(s) : parse_hex(s);
}

BitPoly gcd(BitPoly a, BitPoly b) {
  while (!b.is_zero()) {
    BitPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BitPoly mul_mod(const BitPoly& a, const BitPoly& b, const BitPoly& m) { return (a * b) % m; }

BitPoly x_pow_2k_mod(std::size_t k, const BitPoly& m) {
  BitPoly r = BitPoly::monomial(1) % m;
  for (std::size_t i = 0; i < k; ++i) r = mul_mod(r, r, m);
  return r;
}

std::vector<std::size_t> prime_divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_irreducible(const BitPoly& f) {
  const auto deg = f.degree();
  if (!deg || *deg == 0) throw Error(ErrorCode::kDomain, "irreducibility of a constant");
  const std::size_t n = *deg;
  const BitPoly x = BitPoly::monomial(1) % f;
  if (x_pow_2k_mod(n, f) != x) return false;
  for (std::size_t r : prime_divisors(n)) {
    const BitPoly h = x_pow_2k_mod(n / r, f) ^ x;
    const auto g = gcd(f, h).degree();
    if (!g || *g != 0) return false;
  }
  return true;
}

BitPoly least_sparse_irreducible(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kDomain, "degree 0 has no irreducible polynomial");
  if (n == 1) return BitPoly::from_exponents({0, 1});
  // Odd term counts only: an even count is divisible by 1+x.
  for (std::size_t terms = 3; terms <= n + 1; terms += 2) {
    const std::size_t middle = terms - 2;
    // Middle exponents e_1 < ... < e_k in [1, n-1]; enumerate in increasing
    // numeric value, i.e. colexicographic order on the exponent tuple.
    std::vector<std::size_t> e(middle);
    for (std::size_t i = 0; i < middle; ++i) e[i] = i + 1;
    if (middle > n - 1) break;
    while (true) {
      BitPoly f = BitPoly::monomial(0) ^ BitPoly::monomial(n);
      for (std::size_t v : e) f ^= BitPoly::monomial(v);
      if (is_irreducible(f)) return f;
      // next tuple in colex order
      std::size_t i = 0;
      while (i < middle && ((i + 1 < middle) ? e[i] + 1 == e[i + 1] : e[i] + 1 == n)) ++i;
      if (i == middle) break;
      ++e[i];
      for (std::size_t j = 0; j < i; ++j) e[j] = j + 1;
    }
  }
  throw Error(ErrorCode::kConstructionContradiction, "no irreducible polynomial found");
}

}  // namespace charfield2
