#include <doctest.h>

#include <stdexcept>

#include "euler_forge/euler_exact.hpp"
#include "oracles.hpp"

using euler_forge::BigInt;
using euler_forge::ConvolutionTable;
using euler_forge::EulerCache;

namespace {

std::vector<BigInt> as_vector(const EulerCache& cache) {
  return {cache.values().begin(), cache.values().end()};
}

}  // namespace

TEST_CASE("build_euler_cache small tables") {
  CHECK(as_vector(EulerCache::build(0)) == std::vector<BigInt>{1});
  CHECK(as_vector(EulerCache::build(1)) == std::vector<BigInt>{1, 0});
  CHECK(as_vector(EulerCache::build(4)) == std::vector<BigInt>{1, 0, -1, 0, 5});
}

TEST_CASE("build_euler_cache matches published E_0..E_20") {
  const auto cache = EulerCache::build(20);
  for (std::size_t n = 0; n <= 20; ++n) {
    CAPTURE(n);
    CHECK(cache[n] == BigInt(std::to_string(oracle::kEulerTo20[n])));
  }
}

TEST_CASE("EulerCache invariants up to 300") {
  const auto cache = EulerCache::build(300);
  REQUIRE(cache.max_index() == 300);
  CHECK(cache[0] == 1);
  for (std::size_t n = 1; n <= 300; n += 2) CHECK(cache[n] == 0);
  for (std::size_t m = 0; 2 * m <= 300; ++m) {
    CAPTURE(m);
    CHECK(sgn(cache[2 * m]) == (m % 2 == 0 ? 1 : -1));
  }
  // Recurrence residual with binomials computed independently.
  for (std::size_t n = 2; n <= 300; n += 2) {
    BigInt residual = 0;
    for (std::size_t k = 0; k <= n; k += 2) {
      BigInt c;
      mpz_bin_uiui(c.get_mpz_t(), n, k);
      residual += c * cache[n - k];
    }
    CAPTURE(n);
    CHECK(residual == 0);
  }
  CHECK(as_vector(cache) == oracle::euler_by_bin(300));
}

TEST_CASE("EulerCache bounds") {
  const auto cache = EulerCache::build(10);
  CHECK(cache.covers(10));
  CHECK_FALSE(cache.covers(11));
  CHECK_THROWS_AS(cache.at(11), std::out_of_range);
  CHECK_THROWS_AS(EulerCache::build(euler_forge::kMaxCacheIndex + 1), std::length_error);
}

TEST_CASE("secant_oracle") {
  CHECK(euler_forge::secant_oracle(0) == std::vector<BigInt>{1});
  CHECK(euler_forge::secant_oracle(4) == std::vector<BigInt>{1, -1, 5});
  CHECK_THROWS_AS(euler_forge::secant_oracle(3), std::invalid_argument);

  const auto cache = EulerCache::build(60);
  const auto sec = euler_forge::secant_oracle(60);
  REQUIRE(sec.size() == 31);
  for (std::size_t m = 0; m <= 30; ++m) {
    CAPTURE(m);
    CHECK(sec[m] == cache[2 * m]);
  }
}

TEST_CASE("binomial_convolution") {
  const auto cache = EulerCache::build(40);
  CHECK(euler_forge::binomial_convolution(0, cache) == 1);
  CHECK(euler_forge::binomial_convolution(1, cache) == 0);
  CHECK(euler_forge::binomial_convolution(2, cache) == -2);
  for (std::size_t n = 1; n <= 40; n += 2) CHECK(euler_forge::binomial_convolution(n, cache) == 0);
  // f(n) = n! [x^n] (sum E_k x^k / k!)^2
  for (std::size_t n = 0; n <= 40; n += 2) {
    mpq_class coeff = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      BigInt fk, fnk;
      mpz_fac_ui(fk.get_mpz_t(), k);
      mpz_fac_ui(fnk.get_mpz_t(), n - k);
      coeff += mpq_class(cache[k], fk) * mpq_class(cache[n - k], fnk);
    }
    BigInt fn;
    mpz_fac_ui(fn.get_mpz_t(), n);
    mpq_class scaled = coeff * fn;
    scaled.canonicalize();
    CAPTURE(n);
    CHECK(scaled == mpq_class(euler_forge::binomial_convolution(n, cache)));
  }
  CHECK_THROWS_AS(euler_forge::binomial_convolution(41, cache), std::out_of_range);
}

TEST_CASE("s_constant published values") {
  const auto cache = EulerCache::build(20);
  const long expected[] = {1, -2, 11, -132, 2917, -104422};
  for (std::size_t n = 0; n < 6; ++n) {
    CAPTURE(n);
    CHECK(euler_forge::s_constant(n, cache) == expected[n]);
  }
  CHECK_THROWS_AS(euler_forge::s_constant(11, cache), std::out_of_range);
}

TEST_CASE("pair_convolution_exact") {
  const auto cache = EulerCache::build(200);
  CHECK(euler_forge::pair_convolution_exact(0, cache) == 1);
  CHECK(euler_forge::pair_convolution_exact(3, cache) == 0);
  CHECK(euler_forge::pair_convolution_exact(8, cache) == 2917);

  const auto e = as_vector(cache);
  for (std::size_t total = 0; total <= 200; ++total) {
    CAPTURE(total);
    CHECK(euler_forge::pair_convolution_exact(total, cache) == oracle::brute_pair(e, total));
    if (total % 2 == 0) {
      CHECK(euler_forge::pair_convolution_exact(total, cache) ==
            euler_forge::s_constant(total / 2, cache));
    }
  }
}

TEST_CASE("triple_convolution_exact") {
  const auto cache = EulerCache::build(80);
  CHECK(euler_forge::triple_convolution_exact(0, cache) == 1);
  CHECK(euler_forge::triple_convolution_exact(2, cache) == -3);
  CHECK(euler_forge::triple_convolution_exact(4, cache) == 18);

  const auto e = as_vector(cache);
  for (std::size_t total = 0; total <= 80; ++total) {
    CAPTURE(total);
    CHECK(euler_forge::triple_convolution_exact(total, cache) == oracle::brute_triple(e, total));
  }
  CHECK_THROWS_AS(euler_forge::triple_convolution_exact(81, cache), std::out_of_range);
}

TEST_CASE("ConvolutionTable agrees with the direct sums") {
  const auto cache = EulerCache::build(150);
  const auto table = ConvolutionTable::build(cache);
  REQUIRE(table.max_index() == 150);
  for (std::size_t total = 0; total <= 150; ++total) {
    CAPTURE(total);
    CHECK(table.pair(total) == euler_forge::pair_convolution_exact(total, cache));
    CHECK(table.triple(total) == euler_forge::triple_convolution_exact(total, cache));
  }
  CHECK(table.s(5) == -104422);
  CHECK_THROWS_AS(table.s(76), std::out_of_range);
  CHECK_THROWS_AS(table.triple(151), std::out_of_range);
}
