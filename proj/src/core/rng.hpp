// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <complex>
#include <cstdint>

namespace gaussens {

/// Philox 4x64 keyed counter block cipher, 10 rounds.
///
/// Stateless: output is a pure function of (counter, key), so independent
/// streams are obtained by fixing one counter word per stream. Matches the
/// generator of the same name in numpy.random bit for bit.
std::array<std::uint64_t, 4> philox4x64(const std::array<std::uint64_t, 4>& counter,
                                        const std::array<std::uint64_t, 2>& key);

/// One independent random stream, identified by (seed, stream index).
///
/// Every stream draws from its own counter lane, so any number of streams can
/// be consumed concurrently and in any order with no coordination. Draws are
/// sequential within a stream.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();

  /// Uniform on (0, 1]; never returns 0, so log(uniform()) is finite.
  double uniform();

  /// Standard normal via Box-Muller; generated in pairs, one cached.
  double normal();

  /// Real and imaginary part each standard normal. Consumes exactly one
  /// Box-Muller pair and does not interact with the normal() cache.
  std::complex<double> complex_normal();

  /// Unit-rate exponential.
  double exponential();

  std::uint64_t seed() const { return key_[0]; }
  std::uint64_t stream() const { return ctr_[1]; }

 private:
  void refill();

  std::array<std::uint64_t, 2> key_;
  std::array<std::uint64_t, 4> ctr_;
  std::array<std::uint64_t, 4> buf_{};
  int buf_pos_ = 4;
  double normal_spare_ = 0.0;
  bool has_normal_spare_ = false;
};

/// Deterministically derive a sub-seed (for scans that spawn many ensembles).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt_a, std::uint64_t salt_b);

}  // namespace gaussens
