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

#ifndef MCPATHS_BIG_UINT_HPP_
#define MCPATHS_BIG_UINT_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace mcpaths {

// Unsigned arbitrary-precision integer. Limbs are little-endian 64-bit words
// kept normalized (no high zero limbs), so zero is the empty limb vector and
// equality is limb-wise.
class BigUint {
 public:
  BigUint() = default;
  BigUint(std::uint64_t value);  // NOLINT(google-explicit-constructor)

  // Returns value * 2^shift.
  static BigUint shifted(std::uint64_t value, std::size_t shift);

  // Parses a base-10 string of digits. Throws std::invalid_argument on an
  // empty string or a non-digit character.
  static BigUint from_decimal(std::string_view text);

  bool is_zero() const { return limbs_.empty(); }

  // Number of significant bits; 0 for zero.
  std::size_t bit_length() const;

  bool test_bit(std::size_t pos) const;

  // Bits [offset, offset + width) as an integer. width must be <= 64.
  std::uint64_t extract_bits(std::size_t offset, std::size_t width) const;

  // True when the value fits in 64 bits; to_u64() is only meaningful then.
  bool fits_u64() const { return limbs_.size() <= 1; }
  std::uint64_t to_u64() const { return limbs_.empty() ? 0 : limbs_[0]; }

  std::string to_decimal() const;

  BigUint& operator+=(const BigUint& rhs);
  // Throws std::underflow_error when rhs > *this.
  BigUint& operator-=(const BigUint& rhs);

  friend BigUint operator+(BigUint lhs, const BigUint& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend BigUint operator-(BigUint lhs, const BigUint& rhs) {
    lhs -= rhs;
    return lhs;
  }

  friend bool operator==(const BigUint&, const BigUint&) = default;
  friend std::strong_ordering operator<=>(const BigUint& a, const BigUint& b);

 private:
  void mul_small_add(std::uint64_t mul, std::uint64_t add);
  std::uint64_t div_small(std::uint64_t divisor);
  void trim();

  std::vector<std::uint64_t> limbs_;
};

std::ostream& operator<<(std::ostream& os, const BigUint& v);

}  // namespace mcpaths

#endif  // MCPATHS_BIG_UINT_HPP_
