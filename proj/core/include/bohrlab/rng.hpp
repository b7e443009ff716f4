#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace bohrlab {

// Stateless 64-bit mixer; used to derive independent per-trial seeds so that
// sweeps are reproducible and order-independent under any execution schedule.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  return splitmix64(seed ^ splitmix64(trial + 1));
}

// Deterministic random source. Floating-point draws are derived from raw
// 64-bit outputs by explicit arithmetic (not std distributions, whose results
// are implementation-defined), so identical seeds give identical streams on
// every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  // Uniform w.r.t. area on the disk |z| <= radius.
  std::complex<double> in_disk(double radius) {
    const double rho = radius * std::sqrt(unit());
    const double theta = 6.283185307179586476925286766559 * unit();
    return {rho * std::cos(theta), rho * std::sin(theta)};
  }

  std::complex<double> on_circle() {
    const double theta = 6.283185307179586476925286766559 * unit();
    return {std::cos(theta), std::sin(theta)};
  }

  // Standard complex gaussian (Box-Muller); used for direction sampling and
  // random unitaries, where only the rotation-invariant law matters.
  std::complex<double> gaussian() {
    double u = unit();
    while (u == 0.0) u = unit();
    const double mag = std::sqrt(-2.0 * std::log(u));
    const double theta = 6.283185307179586476925286766559 * unit();
    return {mag * std::cos(theta) * 0.7071067811865476,
            mag * std::sin(theta) * 0.7071067811865476};
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace bohrlab
