#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ifnas {

// Unsigned big integer in base 1e9, little-endian limbs. Only what the
// cardinality arithmetic needs: small multiplies, big products, powers, and
// exact decimal rendering.
class BigUint {
 public:
  BigUint() : limbs_{0} {}
  explicit BigUint(std::uint64_t v);

  static BigUint pow(std::uint64_t base, int exponent);

  BigUint& mul_small(std::uint64_t m);  // m < 2^32
  BigUint operator*(const BigUint& o) const;

  bool is_zero() const { return limbs_.size() == 1 && limbs_[0] == 0; }
  std::string to_string() const;  // decimal
  int digit_count() const;

  std::uint64_t mod_u64(std::uint64_t m) const;

  friend auto operator<=>(const BigUint& a, const BigUint& b) {
    if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() <=> b.limbs_.size();
    for (std::size_t i = a.limbs_.size(); i-- > 0;)
      if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
    return std::strong_ordering::equal;
  }
  friend bool operator==(const BigUint& a, const BigUint& b) { return a.limbs_ == b.limbs_; }

 private:
  void trim();
  std::vector<std::uint32_t> limbs_;
};

// Scientific rendering with `significant` digits, round half to even on the
// decimal expansion. For "1.8e116": mantissa "1.8", exponent 116.
struct SciNotation {
  std::string mantissa;  // "d.dd..." with significant digits
  int exponent = 0;
  std::string str() const { return mantissa + "e" + std::to_string(exponent); }
};

SciNotation to_scientific(const BigUint& v, int significant);

}  // namespace ifnas
