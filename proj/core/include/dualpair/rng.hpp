#ifndef DUALPAIR_RNG_HPP
#define DUALPAIR_RNG_HPP

#include <cstdint>

namespace dualpair {

// splitmix64. Deterministic across platforms; every randomized search in
// the project draws from this, seeded by a global seed mixed with a
// per-task key so results do not depend on evaluation order.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in {-bound,..,-1,1,..,bound}.
  long small_nonzero(long bound) {
    long v = static_cast<long>(next() % (2 * static_cast<std::uint64_t>(bound))) - bound;
    return v >= 0 ? v + 1 : v;
  }

  // Uniform in {lo,..,hi}.
  long in_range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

inline std::uint64_t mix_key(std::uint64_t seed, std::uint64_t key) {
  Rng r(seed ^ (key * 0xd1342543de82ef95ull + 0x2545F4914F6CDD1Dull));
  return r.next();
}

constexpr std::uint64_t kDefaultSeed = 20240801ull;

}  // namespace dualpair

#endif
