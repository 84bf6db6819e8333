#include "ifnas/bigint.hpp"

#include <algorithm>

#include "ifnas/errors.hpp"

namespace ifnas {

namespace {
constexpr std::uint64_t kBase = 1000000000ull;
}

BigUint::BigUint(std::uint64_t v) {
  if (v == 0) limbs_.push_back(0);
  while (v > 0) {
    limbs_.push_back(static_cast<std::uint32_t>(v % kBase));
    v /= kBase;
  }
}

void BigUint::trim() {
  while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
}

BigUint& BigUint::mul_small(std::uint64_t m) {
  if (m >= (1ull << 32)) throw ValidationError("BigUint::mul_small: factor too large");
  std::uint64_t carry = 0;
  for (std::uint32_t& limb : limbs_) {
    const std::uint64_t cur = static_cast<std::uint64_t>(limb) * m + carry;
    limb = static_cast<std::uint32_t>(cur % kBase);
    carry = cur / kBase;
  }
  while (carry > 0) {
    limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
    carry /= kBase;
  }
  trim();
  return *this;
}

BigUint BigUint::operator*(const BigUint& o) const {
  if (is_zero() || o.is_zero()) return BigUint(0);
  BigUint res;
  res.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
      const std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) * o.limbs_[j] +
                                res.limbs_[i + j] + carry;
      res.limbs_[i + j] = static_cast<std::uint32_t>(cur % kBase);
      carry = cur / kBase;
    }
    std::size_t k = i + o.limbs_.size();
    while (carry > 0) {
      const std::uint64_t cur = res.limbs_[k] + carry;
      res.limbs_[k] = static_cast<std::uint32_t>(cur % kBase);
      carry = cur / kBase;
      ++k;
    }
  }
  res.trim();
  return res;
}

BigUint BigUint::pow(std::uint64_t base, int exponent) {
  if (exponent < 0) throw ValidationError("BigUint::pow: negative exponent");
  BigUint acc(1);
  BigUint b(base);
  while (exponent > 0) {
    if (exponent & 1) acc = acc * b;
    b = b * b;
    exponent >>= 1;
  }
  return acc;
}

std::string BigUint::to_string() const {
  std::string s = std::to_string(limbs_.back());
  for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
    std::string part = std::to_string(limbs_[i]);
    s += std::string(9 - part.size(), '0') + part;
  }
  return s;
}

int BigUint::digit_count() const { return static_cast<int>(to_string().size()); }

std::uint64_t BigUint::mod_u64(std::uint64_t m) const {
  // Horner over base-1e9 limbs, high to low.
  unsigned __int128 acc = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) acc = (acc * kBase + limbs_[i]) % m;
  return static_cast<std::uint64_t>(acc);
}

SciNotation to_scientific(const BigUint& v, int significant) {
  if (significant < 1) throw ValidationError("to_scientific: need at least 1 significant digit");
  const std::string digits = v.to_string();
  SciNotation out;
  out.exponent = static_cast<int>(digits.size()) - 1;
  std::string mant = digits.substr(0, static_cast<std::size_t>(significant));
  while (mant.size() < static_cast<std::size_t>(significant)) mant += '0';

  // Round half to even on the dropped tail.
  if (digits.size() > static_cast<std::size_t>(significant)) {
    const std::string tail = digits.substr(static_cast<std::size_t>(significant));
    bool round_up = false;
    if (tail[0] > '5') {
      round_up = true;
    } else if (tail[0] == '5') {
      const bool exact_half = tail.find_first_not_of('0', 1) == std::string::npos;
      round_up = !exact_half || ((mant.back() - '0') % 2 == 1);
    }
    if (round_up) {
      int i = static_cast<int>(mant.size()) - 1;
      while (i >= 0) {
        if (mant[static_cast<std::size_t>(i)] != '9') {
          mant[static_cast<std::size_t>(i)]++;
          break;
        }
        mant[static_cast<std::size_t>(i)] = '0';
        --i;
      }
      if (i < 0) {  // 99... -> 10..., exponent bumps
        mant.insert(mant.begin(), '1');
        mant.pop_back();
        out.exponent++;
      }
    }
  }
  out.mantissa = mant.substr(0, 1);
  if (mant.size() > 1) out.mantissa += "." + mant.substr(1);
  return out;
}

}  // namespace ifnas
