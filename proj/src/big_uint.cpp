// Copyright 2026 The mcpaths Authors
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

#include "mcpaths/big_uint.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace mcpaths {

namespace {
using u128 = unsigned __int128;
constexpr std::uint64_t kDecimalChunk = 10000000000000000000ULL;  // 10^19
constexpr int kDecimalChunkDigits = 19;
}  // namespace

BigUint::BigUint(std::uint64_t value) {
  if (value != 0) limbs_.push_back(value);
}

BigUint BigUint::shifted(std::uint64_t value, std::size_t shift) {
  BigUint out;
  if (value == 0) return out;
  const std::size_t word = shift / 64;
  const unsigned bit = shift % 64;
  out.limbs_.assign(word, 0);
  out.limbs_.push_back(value << bit);
  if (bit != 0) out.limbs_.push_back(value >> (64 - bit));
  out.trim();
  return out;
}

BigUint BigUint::from_decimal(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty decimal string");
  BigUint out;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("invalid decimal digit in '" +
                                  std::string(text) + "'");
    }
    out.mul_small_add(10, static_cast<std::uint64_t>(c - '0'));
  }
  return out;
}

std::size_t BigUint::bit_length() const {
  if (limbs_.empty()) return 0;
  return 64 * (limbs_.size() - 1) +
         (64 - static_cast<std::size_t>(__builtin_clzll(limbs_.back())));
}

bool BigUint::test_bit(std::size_t pos) const {
  const std::size_t word = pos / 64;
  if (word >= limbs_.size()) return false;
  return ((limbs_[word] >> (pos % 64)) & 1U) != 0;
}

std::uint64_t BigUint::extract_bits(std::size_t offset,
                                    std::size_t width) const {
  if (width > 64) throw std::invalid_argument("extract_bits width > 64");
  if (width == 0) return 0;
  const std::size_t word = offset / 64;
  const unsigned bit = offset % 64;
  auto limb = [&](std::size_t i) -> std::uint64_t {
    return i < limbs_.size() ? limbs_[i] : 0;
  };
  std::uint64_t v = limb(word) >> bit;
  if (bit != 0) v |= limb(word + 1) << (64 - bit);
  if (width < 64) v &= (std::uint64_t{1} << width) - 1;
  return v;
}

std::string BigUint::to_decimal() const {
  if (limbs_.empty()) return "0";
  BigUint tmp = *this;
  std::vector<std::uint64_t> chunks;
  while (!tmp.is_zero()) chunks.push_back(tmp.div_small(kDecimalChunk));
  std::string out = std::to_string(chunks.back());
  for (auto it = chunks.rbegin() + 1; it != chunks.rend(); ++it) {
    std::string part = std::to_string(*it);
    out.append(kDecimalChunkDigits - part.size(), '0');
    out += part;
  }
  return out;
}

BigUint& BigUint::operator+=(const BigUint& rhs) {
  if (rhs.limbs_.size() > limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    const std::uint64_t r = i < rhs.limbs_.size() ? rhs.limbs_[i] : 0;
    if (r == 0 && carry == 0 && i >= rhs.limbs_.size()) break;
    const u128 sum = static_cast<u128>(limbs_[i]) + r + carry;
    limbs_[i] = static_cast<std::uint64_t>(sum);
    carry = static_cast<std::uint64_t>(sum >> 64);
  }
  if (carry != 0) limbs_.push_back(carry);
  return *this;
}

BigUint& BigUint::operator-=(const BigUint& rhs) {
  if (*this < rhs) throw std::underflow_error("BigUint subtraction underflow");
  std::uint64_t borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    const std::uint64_t r = i < rhs.limbs_.size() ? rhs.limbs_[i] : 0;
    if (r == 0 && borrow == 0 && i >= rhs.limbs_.size()) break;
    const std::uint64_t cur = limbs_[i];
    limbs_[i] = cur - r - borrow;
    borrow = (cur < r || (cur - r) < borrow) ? 1 : 0;
  }
  trim();
  return *this;
}

std::strong_ordering operator<=>(const BigUint& a, const BigUint& b) {
  if (a.limbs_.size() != b.limbs_.size()) {
    return a.limbs_.size() <=> b.limbs_.size();
  }
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
  }
  return std::strong_ordering::equal;
}

void BigUint::mul_small_add(std::uint64_t mul, std::uint64_t add) {
  std::uint64_t carry = add;
  for (auto& limb : limbs_) {
    const u128 prod = static_cast<u128>(limb) * mul + carry;
    limb = static_cast<std::uint64_t>(prod);
    carry = static_cast<std::uint64_t>(prod >> 64);
  }
  if (carry != 0) limbs_.push_back(carry);
}

std::uint64_t BigUint::div_small(std::uint64_t divisor) {
  u128 rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    const u128 cur = (rem << 64) | limbs_[i];
    limbs_[i] = static_cast<std::uint64_t>(cur / divisor);
    rem = cur % divisor;
  }
  trim();
  return static_cast<std::uint64_t>(rem);
}

void BigUint::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::ostream& operator<<(std::ostream& os, const BigUint& v) {
  return os << v.to_decimal();
}

}  // namespace mcpaths
