#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace simcut {

enum class Err {
  EmptyInstance,
  VertexOutOfRange,
  WeightBelowFloor,
  BadWeightSum,
  TooLarge,
  BadTargets,
  NoActiveMass,
  NoHighDegreeVertex,
  NotNormalized,
  OverlappingSets,
  BadDistribution,
  UnknownAtom,
  LevelTooSmall,
  LevelExhausted,
  ZeroProbabilityEvent,
  GramNotPSD,
  DegenerateInputs,
  BudgetExhausted,
  NoEligibleSpecial,
  MissingTargets,
  AllFixingsInfeasible,
  BadConfig,
  IoError,
  ParseError,
};

struct Error : std::runtime_error {
  Err kind;
  Error(Err k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

[[noreturn]] inline void fail(Err k, const std::string& msg) { throw Error(k, msg); }

// splitmix64, used to derive independent substream seeds from one user seed.
inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline uint64_t derive_seed(uint64_t seed, uint64_t stream, uint64_t index = 0) {
  uint64_t s = seed ^ (0x6a09e667f3bcc909ULL + stream * 0x3c6ef372fe94f82bULL);
  uint64_t a = splitmix64(s);
  s ^= index * 0xd6e8feb86659fd93ULL;
  uint64_t b = splitmix64(s);
  return a ^ (b << 1);
}

// xoshiro256++ by Blackman and Vigna; fixed algorithm keeps streams identical
// across standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) {
    uint64_t s = seed;
    for (auto& w : s_) w = splitmix64(s);
  }

  uint64_t next() {
    auto rotl = [](uint64_t x, int k) { return (x << k) | (x >> (64 - k)); };
    uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // uniform in [0,1)
  double uniform() { return (next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // standard normal via Marsaglia polar, deterministic across platforms
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    have_spare_ = true;
    return u * m;
  }

  uint64_t below(uint64_t n) { return next() % n; }

 private:
  uint64_t s_[4];
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace simcut
