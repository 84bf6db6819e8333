#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <random>

namespace ifnas {

// Deterministic RNG wrapper. std::mt19937_64 output is pinned by the
// standard, but the <random> distributions are not, so the value->double
// transforms live here and never change. Streamable for checkpoints.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in [0, 1) with 53 bits of randomness.
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n). Modulo bias is irrelevant here; stability is.
  std::uint64_t below(std::uint64_t n) { return eng_() % n; }

  int range(int lo, int hi_inclusive) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi_inclusive - lo + 1)));
  }

  bool coin() { return (eng_() & 1u) != 0; }

  // Box-Muller; the spare value is cached, so keep it in checkpoint state.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rng& r) {
    os << r.eng_ << ' ' << (r.has_spare_ ? 1 : 0) << ' ';
    os.precision(17);
    os << r.spare_;
    return os;
  }

  friend std::istream& operator>>(std::istream& is, Rng& r) {
    int has = 0;
    is >> r.eng_ >> has >> r.spare_;
    r.has_spare_ = has != 0;
    return is;
  }

  // Stable seed mixing for derived streams (per-sample noise, per-seed runs).
  static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t x = a + 0x9e3779b97f4a7c15ull + (b << 6) + (b >> 2);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return x;
  }

 private:
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace ifnas
