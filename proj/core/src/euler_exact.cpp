#include "euler_forge/euler_exact.hpp"

#include <stdexcept>
#include <string>

namespace euler_forge {
namespace {

void require_covered(std::size_t index, std::size_t max_index, const char* what) {
  if (index > max_index) {
    throw std::out_of_range(std::string(what) + ": index " + std::to_string(index) +
                            " exceeds cache max_index " + std::to_string(max_index));
  }
}

// sum_{k} E_k E_{N-k} over even k only; odd-index terms vanish.
BigInt pair_sum(std::span<const BigInt> e, std::size_t total) {
  BigInt sum = 0;
  if (total % 2 != 0) return sum;
  for (std::size_t k = 0; k <= total; k += 2) {
    sum += e[k] * e[total - k];
  }
  return sum;
}

}  // namespace

EulerCache EulerCache::build(std::size_t max_index) {
  if (max_index > kMaxCacheIndex) {
    throw std::length_error("EulerCache: max_index " + std::to_string(max_index) +
                            " exceeds limit " + std::to_string(kMaxCacheIndex));
  }
  std::vector<BigInt> e(max_index + 1);
  e[0] = 1;
  // row holds C(n, 0..n), updated in place from row n-1.
  std::vector<BigInt> row{1};
  row.reserve(max_index + 1);
  for (std::size_t n = 1; n <= max_index; ++n) {
    row.emplace_back(1);
    for (std::size_t k = n - 1; k > 0; --k) row[k] += row[k - 1];
    if (n % 2 != 0) {
      e[n] = 0;
      continue;
    }
    BigInt acc = 0;
    for (std::size_t k = 2; k <= n; k += 2) acc += row[k] * e[n - k];
    e[n] = -acc;
  }
  return EulerCache(std::move(e));
}

const BigInt& EulerCache::at(std::size_t n) const {
  require_covered(n, max_index(), "EulerCache::at");
  return values_[n];
}

std::vector<BigInt> secant_oracle(std::size_t max_even_index) {
  if (max_even_index % 2 != 0) {
    throw std::invalid_argument("secant_oracle: max_even_index must be even");
  }
  const std::size_t terms = max_even_index / 2 + 1;

  // cos x = sum_m c_m x^{2m}, c_m = (-1)^m / (2m)!
  std::vector<mpq_class> cos_coeff(terms);
  BigInt factorial = 1;
  for (std::size_t m = 0; m < terms; ++m) {
    if (m > 0) factorial *= static_cast<unsigned long>((2 * m - 1) * (2 * m));
    cos_coeff[m] = mpq_class(m % 2 == 0 ? 1 : -1, factorial);
    cos_coeff[m].canonicalize();
  }

  // sec = 1 / cos: a_0 = 1, a_m = -sum_{j=1}^{m} c_j a_{m-j}
  std::vector<mpq_class> sec_coeff(terms);
  sec_coeff[0] = 1;
  for (std::size_t m = 1; m < terms; ++m) {
    mpq_class acc = 0;
    for (std::size_t j = 1; j <= m; ++j) acc += cos_coeff[j] * sec_coeff[m - j];
    sec_coeff[m] = -acc;
  }

  std::vector<BigInt> out(terms);
  factorial = 1;
  for (std::size_t m = 0; m < terms; ++m) {
    if (m > 0) factorial *= static_cast<unsigned long>((2 * m - 1) * (2 * m));
    mpq_class scaled = sec_coeff[m] * factorial;
    scaled.canonicalize();
    if (scaled.get_den() != 1) {
      throw std::logic_error("secant_oracle: E_" + std::to_string(2 * m) +
                             " did not clear to an integer");
    }
    out[m] = m % 2 == 0 ? BigInt(scaled.get_num()) : BigInt(-scaled.get_num());
  }
  return out;
}

BigInt binomial_convolution(std::size_t n, const EulerCache& cache) {
  require_covered(n, cache.max_index(), "binomial_convolution");
  BigInt sum = 0;
  if (n % 2 != 0) return sum;
  BigInt binom = 1;  // C(n, k)
  for (std::size_t k = 0; k <= n; ++k) {
    if (k % 2 == 0) sum += binom * cache[k] * cache[n - k];
    binom *= static_cast<unsigned long>(n - k);
    binom /= static_cast<unsigned long>(k + 1);
  }
  return sum;
}

BigInt s_constant(std::size_t n, const EulerCache& cache) {
  require_covered(2 * n, cache.max_index(), "s_constant");
  return pair_sum(cache.values(), 2 * n);
}

BigInt pair_convolution_exact(std::size_t total, const EulerCache& cache) {
  require_covered(total, cache.max_index(), "pair_convolution_exact");
  return pair_sum(cache.values(), total);
}

BigInt triple_convolution_exact(std::size_t total, const EulerCache& cache) {
  require_covered(total, cache.max_index(), "triple_convolution_exact");
  BigInt sum = 0;
  if (total % 2 != 0) return sum;
  const auto e = cache.values();
  for (std::size_t i = 0; i <= total; i += 2) {
    sum += e[i] * pair_sum(e, total - i);
  }
  return sum;
}

ConvolutionTable ConvolutionTable::build(const EulerCache& cache) {
  const auto e = cache.values();
  const std::size_t size = e.size();
  std::vector<BigInt> pair(size);
  for (std::size_t total = 0; total < size; total += 2) pair[total] = pair_sum(e, total);

  std::vector<BigInt> triple(size);
  for (std::size_t total = 0; total < size; total += 2) {
    BigInt sum = 0;
    for (std::size_t i = 0; i <= total; i += 2) sum += e[i] * pair[total - i];
    triple[total] = std::move(sum);
  }
  return ConvolutionTable(std::move(pair), std::move(triple));
}

const BigInt& ConvolutionTable::pair(std::size_t total) const {
  require_covered(total, max_index(), "ConvolutionTable::pair");
  return pair_[total];
}

const BigInt& ConvolutionTable::triple(std::size_t total) const {
  require_covered(total, max_index(), "ConvolutionTable::triple");
  return triple_[total];
}

const BigInt& ConvolutionTable::s(std::size_t n) const {
  require_covered(2 * n, max_index(), "ConvolutionTable::s");
  return pair_[2 * n];
}

}  // namespace euler_forge
