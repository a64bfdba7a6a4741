#pragma once

// Convolution sums mod p, the delta(p, n) correction, and Chinese-remainder
// reconstruction of the triple-convolution constants t(n).

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "euler_forge/euler_exact.hpp"
#include "euler_forge/modular_arith.hpp"

namespace euler_forge {

/// sum_{k=0}^{N} E_k E_{N-k} mod p. Throws std::out_of_range past the cache.
Residue pair_convolution_mod(const EulerCache& cache, const PrimeContext& ctx, std::size_t total);
Residue pair_convolution_mod(const ConvolutionTable& table, const PrimeContext& ctx,
                             std::size_t total);

/// Ordered-triple convolution at N, reduced mod p from the exact value.
Residue triple_convolution_mod(const EulerCache& cache, const PrimeContext& ctx,
                               std::size_t total);
Residue triple_convolution_mod(const ConvolutionTable& table, const PrimeContext& ctx,
                               std::size_t total);

/// 1 if n > 0 and (p - 1) | 2n, else 0. Primality of p is not checked.
int delta(std::uint64_t p, std::uint64_t n);

/// Running CRT state over distinct primes. Value type; push returns a new
/// accumulator.
class CrtAccumulator {
 public:
  CrtAccumulator() = default;

  const BigInt& modulus_product() const noexcept { return modulus_product_; }
  const BigInt& combined_residue() const noexcept { return combined_residue_; }
  /// Consecutive pushes that left the balanced lift unchanged.
  std::size_t stable_count() const noexcept { return stable_count_; }
  /// Representative of combined_residue in (-M/2, M/2].
  const BigInt& last_balanced() const noexcept { return last_balanced_; }
  const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }
  bool empty() const noexcept { return primes_.empty(); }

  /// Throws std::invalid_argument if r.modulus() != p, p < 2, or p divides
  /// the current modulus product.
  CrtAccumulator push(std::uint64_t p, Residue r) const;

 private:
  BigInt modulus_product_ = 1;
  BigInt combined_residue_ = 0;
  std::size_t stable_count_ = 0;
  BigInt last_balanced_ = 0;
  std::vector<std::uint64_t> primes_;
};

inline CrtAccumulator crt_push(const CrtAccumulator& acc, std::uint64_t p, Residue r) {
  return acc.push(p, r);
}

/// The cache ran out before the CRT lift stabilized.
class ReconstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TReconstruction {
  std::uint64_t n = 0;
  BigInt value;
  /// Primes pushed, ascending.
  std::vector<std::uint64_t> primes;
  /// Number of primes consumed when the lift first held for `stability`
  /// consecutive pushes.
  std::size_t stabilized_after = 0;
};

/// First prime used for t(n): the least odd prime above 2n + 1.
std::uint64_t first_reconstruction_prime(std::uint64_t n);

/// Feeds triple_convolution_mod(p - 1 + 2n) for ascending odd primes p > 2n+1
/// into a CrtAccumulator until the balanced lift survives `stability`
/// consecutive pushes, then pushes `extra_primes` more. Throws
/// ReconstructionError if p - 1 + 2n leaves the table first and
/// std::invalid_argument if stability == 0.
TReconstruction reconstruct_t(std::uint64_t n, const ConvolutionTable& table,
                              std::size_t stability = 3, std::size_t extra_primes = 0);
TReconstruction reconstruct_t(std::uint64_t n, const EulerCache& cache,
                              std::size_t stability = 3, std::size_t extra_primes = 0);

}  // namespace euler_forge
