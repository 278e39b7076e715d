#ifndef FEDMERDEL_RNG_HPP
#define FEDMERDEL_RNG_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace fedmerdel {

// Deterministic counter-based generator (SplitMix64 core). All sampling is
// built on the raw 64-bit stream with fixed transforms, so a (seed, call
// sequence) pair reproduces bit-identical draws on any platform. The stream
// identifier below is recorded in data manifests.
inline constexpr const char* kRngVersion = "splitmix64-v1";

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0, 1) with 53-bit resolution.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n), rejection-sampled to avoid modulo bias.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % n;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Standard normal via Box-Muller (first coordinate only; the second is
  // discarded to keep the stream position a pure function of the call count).
  double normal();

  // Gamma(shape, 1) via Marsaglia-Tsang, with the U^{1/a} boost for shape < 1.
  double gamma(double shape);

  double beta(double a, double b);

  void dirichlet(std::span<const double> alpha, std::span<double> out);

  // Samples an index from unnormalized non-negative weights.
  std::size_t categorical(std::span<const double> weights);

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  // Derives an independent child seed; used to give every (dataset, run)
  // pair its own stream regardless of scheduling.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    Rng r(seed ^ (0xA0761D6478BD642FULL * (stream + 1)));
    r.next_u64();
    return r.next_u64();
  }

 private:
  std::uint64_t state_;
};

}  // namespace fedmerdel

#endif
