#pragma once

/**
 * @file euler_exact.hpp
 * @brief Exact Euler numbers and their convolutions.
 *
 * The Euler numbers are the integers E_0 = 1 and, for n >= 1,
 *
 *     sum_{k even, 0 <= k <= n} C(n, k) E_{n-k} = 0,
 *
 * so E_n = 0 for odd n and sign(E_{2m}) = (-1)^m. Their exponential
 * generating function is 2e^x / (e^{2x} + 1) and sec x = sum (-1)^n E_{2n}
 * x^{2n} / (2n)!. The secant series gives an independent oracle for the
 * recurrence.
 */

#include <cstddef>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace euler_forge {

using BigInt = mpz_class;

/// Largest max_index accepted by EulerCache::build. E_20000 has roughly
/// 73k decimal digits and the whole table needs a few hundred MB.
inline constexpr std::size_t kMaxCacheIndex = 20000;

/// Default table size for verification runs; covers p - 1 + 2n for
/// p <= 499 and n <= 50.
inline constexpr std::size_t kDefaultMaxIndex = 600;

/// Immutable table E_0..E_max. Safe for concurrent readers.
class EulerCache {
 public:
  /// Runs the even-binomial recurrence up to max_index.
  /// Throws std::length_error if max_index > kMaxCacheIndex.
  static EulerCache build(std::size_t max_index);

  std::size_t max_index() const noexcept { return values_.size() - 1; }
  bool covers(std::size_t n) const noexcept { return n < values_.size(); }

  /// Throws std::out_of_range when n > max_index().
  const BigInt& at(std::size_t n) const;
  const BigInt& operator[](std::size_t n) const noexcept { return values_[n]; }

  std::span<const BigInt> values() const noexcept { return values_; }

 private:
  explicit EulerCache(std::vector<BigInt> values) : values_(std::move(values)) {}

  std::vector<BigInt> values_;
};

/// E_0, E_2, ..., E_{max_even_index} from exact rational inversion of the
/// cosine series. Independent of EulerCache. Throws std::invalid_argument for
/// odd max_even_index and std::logic_error if a coefficient fails to clear
/// to an integer.
std::vector<BigInt> secant_oracle(std::size_t max_even_index);

/// f(n) = sum_k C(n,k) E_k E_{n-k}.
BigInt binomial_convolution(std::size_t n, const EulerCache& cache);

/// s(n) = sum_{k=0}^{n} E_{2k} E_{2n-2k}. Requires 2n <= max_index.
BigInt s_constant(std::size_t n, const EulerCache& cache);

/// sum_{k=0}^{N} E_k E_{N-k}.
BigInt pair_convolution_exact(std::size_t total, const EulerCache& cache);

/// Sum of E_i E_j E_k over ordered triples with i + j + k = N, computed as
/// sum_i E_i * pair(N - i).
BigInt triple_convolution_exact(std::size_t total, const EulerCache& cache);

/// Exact pair and triple convolutions for every N <= cache.max_index(),
/// built once in O(max_index^2) multiplications. Immutable.
class ConvolutionTable {
 public:
  static ConvolutionTable build(const EulerCache& cache);

  std::size_t max_index() const noexcept { return pair_.size() - 1; }
  bool covers(std::size_t n) const noexcept { return n < pair_.size(); }

  /// Throws std::out_of_range past max_index().
  const BigInt& pair(std::size_t total) const;
  const BigInt& triple(std::size_t total) const;
  /// s(n) == pair(2n).
  const BigInt& s(std::size_t n) const;

 private:
  ConvolutionTable(std::vector<BigInt> pair, std::vector<BigInt> triple)
      : pair_(std::move(pair)), triple_(std::move(triple)) {}

  std::vector<BigInt> pair_;
  std::vector<BigInt> triple_;
};

}  // namespace euler_forge
