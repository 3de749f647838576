#ifndef DISPOSITIONS_RNG_HPP
#define DISPOSITIONS_RNG_HPP

#include <cstdint>
#include <random>

namespace dispositions {

// Reproducible uniform stream keyed by (seed, stream_id). The engine is
// seeded through std::seed_seq and uniforms are built from the top 53 bits,
// both of which the standard pins down exactly, so a given key yields the
// same sequence on every conforming toolchain.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  // Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double prob) { return uniform() < prob; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
};

}  // namespace dispositions

#endif  // DISPOSITIONS_RNG_HPP
