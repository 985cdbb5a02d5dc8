#pragma once

#include <cmath>
#include <cstdint>

namespace goat {

// Deterministic splitmix64 generator. Used everywhere instead of <random>
// engines/distributions so that streams are reproducible across platforms
// and standard-library versions.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // uniform integer in [0, n)
  uint64_t next_below(uint64_t n) { return n ? next_u64() % n : 0; }

  int uniform_int(int lo, int hi_inclusive) {
    return lo + static_cast<int>(next_below(static_cast<uint64_t>(hi_inclusive - lo + 1)));
  }

  double normal(double mean = 0.0, double stddev = 1.0) {
    // Box-Muller, one value per call (the sibling value is discarded to keep
    // the stream position independent of call parity).
    double u1 = next_double();
    double u2 = next_double();
    if (u1 < 1e-300) u1 = 1e-300;
    double r = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * r * std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  // Derive an independent child stream; useful for per-sample seeds.
  Rng fork(uint64_t key) {
    uint64_t mixed = next_hash(state_ ^ (key * 0xA24BAED4963EE407ull));
    return Rng(mixed);
  }

  // Stateless mix of a key (for hash-based textures).
  static uint64_t next_hash(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
  }

  static uint64_t hash_combine(uint64_t a, uint64_t b) {
    return next_hash(a ^ (b + 0x9E3779B97F4A7C15ull + (a << 6) + (a >> 2)));
  }

 private:
  uint64_t state_;
};

}  // namespace goat
