#pragma once

// Prime sieving and arithmetic modulo a small odd prime p. Moduli are kept
// below 2^32 so products of two residues fit in 64 bits.

#include <compare>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace euler_forge {

/// Canonical residue in [0, modulus). The balanced lift is a view onto the
/// same class and is never stored.
class Residue {
 public:
  /// Reduces a signed 64-bit value. Throws std::invalid_argument unless
  /// 2 <= modulus < 2^32.
  static Residue from_signed(std::int64_t value, std::uint64_t modulus);
  /// Reduces an arbitrary-precision value.
  static Residue from_big(const mpz_class& value, std::uint64_t modulus);

  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  /// value if value <= (p-1)/2, else value - p.
  std::int64_t balanced() const noexcept;

  Residue operator+(Residue rhs) const;
  Residue operator-(Residue rhs) const;
  Residue operator*(Residue rhs) const;
  Residue operator-() const;

  bool operator==(const Residue&) const = default;

 private:
  Residue(std::uint64_t value, std::uint64_t modulus) : value_(value), modulus_(modulus) {}
  void require_same_modulus(Residue rhs) const;

  std::uint64_t value_ = 0;
  std::uint64_t modulus_ = 1;
};

/// Upper bound on primes accepted by PrimeContext (residue products must fit
/// in uint64_t).
inline constexpr std::uint64_t kMaxContextPrime = (std::uint64_t{1} << 31) - 1;

bool is_prime(std::uint64_t n);

/// Per-prime tables: k! and (k!)^{-1} mod p for 0 <= k < p, and the
/// character value (-1/p) = (-1)^((p-1)/2). Immutable after build.
class PrimeContext {
 public:
  /// Throws std::invalid_argument unless p is an odd prime <= kMaxContextPrime.
  static PrimeContext build(std::uint64_t p);

  std::uint64_t p() const noexcept { return p_; }
  int chi() const noexcept { return chi_; }

  Residue residue(std::int64_t value) const { return Residue::from_signed(value, p_); }
  Residue residue(const mpz_class& value) const { return Residue::from_big(value, p_); }

  Residue factorial(std::uint64_t k) const;
  Residue inverse_factorial(std::uint64_t k) const;
  /// C(n, k) mod p for 0 <= k <= n < p. Throws std::out_of_range for n >= p.
  Residue binomial(std::uint64_t n, std::uint64_t k) const;

  /// x^{-1} mod p. Throws std::domain_error for x == 0.
  Residue inverse(Residue x) const;

 private:
  PrimeContext() = default;

  std::uint64_t p_ = 0;
  int chi_ = 1;
  std::vector<std::uint64_t> fact_;
  std::vector<std::uint64_t> inv_fact_;
};

/// Primes in [lo, hi], ascending (Eratosthenes over [2, hi]). Throws
/// std::invalid_argument unless 2 <= lo; an empty range (lo > hi or no
/// primes inside) yields an empty vector.
std::vector<std::uint64_t> sieve_primes(std::uint64_t lo, std::uint64_t hi);

/// (-1/j) = (-1)^((j-1)/2) for odd j >= 1. Throws std::invalid_argument
/// otherwise.
int chi_minus_one(std::uint64_t j);

/// base^exponent by square-and-multiply, with 0^0 = 1.
Residue mod_pow(Residue base, std::uint64_t exponent);

/// sum_{j=1}^{p-1} j^e mod p.
Residue power_sum(const PrimeContext& ctx, std::uint64_t e);

/// sum over odd j in (0, p) of j^e mod p.
Residue odd_power_sum(const PrimeContext& ctx, std::uint64_t e);

/// sum_{k=1}^{p-1} k^{-2} mod p. Requires p >= 5 (throws
/// std::invalid_argument for p == 3, where the sum is not 0).
Residue wolstenholme_check(const PrimeContext& ctx);

}  // namespace euler_forge
