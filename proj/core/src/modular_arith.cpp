#include "euler_forge/modular_arith.hpp"

#include <stdexcept>
#include <string>

namespace euler_forge {
namespace {

void check_modulus(std::uint64_t modulus) {
  if (modulus < 2 || modulus > 0xFFFFFFFFULL) {
    throw std::invalid_argument("Residue: modulus " + std::to_string(modulus) +
                                " outside [2, 2^32)");
  }
}

}  // namespace

Residue Residue::from_signed(std::int64_t value, std::uint64_t modulus) {
  check_modulus(modulus);
  const auto m = static_cast<std::int64_t>(modulus);
  std::int64_t r = value % m;
  if (r < 0) r += m;
  return Residue(static_cast<std::uint64_t>(r), modulus);
}

Residue Residue::from_big(const mpz_class& value, std::uint64_t modulus) {
  check_modulus(modulus);
  // mpz_fdiv_ui returns the non-negative remainder.
  const unsigned long r = mpz_fdiv_ui(value.get_mpz_t(), static_cast<unsigned long>(modulus));
  return Residue(r, modulus);
}

std::int64_t Residue::balanced() const noexcept {
  const auto v = static_cast<std::int64_t>(value_);
  return value_ <= (modulus_ - 1) / 2 ? v : v - static_cast<std::int64_t>(modulus_);
}

void Residue::require_same_modulus(Residue rhs) const {
  if (modulus_ != rhs.modulus_) {
    throw std::invalid_argument("Residue: modulus mismatch (" + std::to_string(modulus_) +
                                " vs " + std::to_string(rhs.modulus_) + ")");
  }
}

Residue Residue::operator+(Residue rhs) const {
  require_same_modulus(rhs);
  std::uint64_t s = value_ + rhs.value_;
  if (s >= modulus_) s -= modulus_;
  return Residue(s, modulus_);
}

Residue Residue::operator-(Residue rhs) const {
  require_same_modulus(rhs);
  return Residue(value_ >= rhs.value_ ? value_ - rhs.value_ : value_ + modulus_ - rhs.value_,
                 modulus_);
}

Residue Residue::operator*(Residue rhs) const {
  require_same_modulus(rhs);
  // Moduli stay below 2^32, so the product fits in 64 bits.
  return Residue(value_ * rhs.value_ % modulus_, modulus_);
}

Residue Residue::operator-() const {
  return Residue(value_ == 0 ? 0 : modulus_ - value_, modulus_);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeContext PrimeContext::build(std::uint64_t p) {
  if (p < 3 || p > kMaxContextPrime || !is_prime(p)) {
    throw std::invalid_argument("PrimeContext: " + std::to_string(p) +
                                " is not an odd prime in range");
  }
  PrimeContext ctx;
  ctx.p_ = p;
  ctx.chi_ = ((p - 1) / 2) % 2 == 0 ? 1 : -1;
  ctx.fact_.resize(p);
  ctx.inv_fact_.resize(p);
  ctx.fact_[0] = 1;
  for (std::uint64_t k = 1; k < p; ++k) ctx.fact_[k] = ctx.fact_[k - 1] * k % p;
  ctx.inv_fact_[p - 1] = ctx.inverse(Residue::from_signed(
                                         static_cast<std::int64_t>(ctx.fact_[p - 1]), p))
                             .value();
  for (std::uint64_t k = p - 1; k > 0; --k) ctx.inv_fact_[k - 1] = ctx.inv_fact_[k] * k % p;
  return ctx;
}

Residue PrimeContext::factorial(std::uint64_t k) const {
  if (k >= p_) throw std::out_of_range("PrimeContext::factorial: k >= p");
  return Residue::from_signed(static_cast<std::int64_t>(fact_[k]), p_);
}

Residue PrimeContext::inverse_factorial(std::uint64_t k) const {
  if (k >= p_) throw std::out_of_range("PrimeContext::inverse_factorial: k >= p");
  return Residue::from_signed(static_cast<std::int64_t>(inv_fact_[k]), p_);
}

Residue PrimeContext::binomial(std::uint64_t n, std::uint64_t k) const {
  if (n >= p_) throw std::out_of_range("PrimeContext::binomial: n >= p");
  if (k > n) return residue(0);
  return factorial(n) * inverse_factorial(k) * inverse_factorial(n - k);
}

Residue PrimeContext::inverse(Residue x) const {
  if (x.modulus() != p_) throw std::invalid_argument("PrimeContext::inverse: modulus mismatch");
  if (x.value() == 0) throw std::domain_error("PrimeContext::inverse: zero has no inverse");
  return mod_pow(x, p_ - 2);
}

std::vector<std::uint64_t> sieve_primes(std::uint64_t lo, std::uint64_t hi) {
  if (lo < 2) throw std::invalid_argument("sieve_primes: lo must be >= 2");
  std::vector<std::uint64_t> primes;
  if (lo > hi) return primes;
  std::vector<bool> composite(hi + 1, false);
  for (std::uint64_t i = 2; i * i <= hi; ++i) {
    if (composite[i]) continue;
    for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
  }
  for (std::uint64_t n = lo; n <= hi; ++n) {
    if (!composite[n]) primes.push_back(n);
  }
  return primes;
}

int chi_minus_one(std::uint64_t j) {
  if (j % 2 == 0) {
    throw std::invalid_argument("chi_minus_one: j must be odd and positive, got " +
                                std::to_string(j));
  }
  return ((j - 1) / 2) % 2 == 0 ? 1 : -1;
}

Residue mod_pow(Residue base, std::uint64_t exponent) {
  Residue result = Residue::from_signed(1, base.modulus());
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    base = base * base;
    exponent >>= 1U;
  }
  return result;
}

Residue power_sum(const PrimeContext& ctx, std::uint64_t e) {
  Residue sum = ctx.residue(0);
  for (std::uint64_t j = 1; j < ctx.p(); ++j) {
    sum = sum + mod_pow(ctx.residue(static_cast<std::int64_t>(j)), e);
  }
  return sum;
}

Residue odd_power_sum(const PrimeContext& ctx, std::uint64_t e) {
  Residue sum = ctx.residue(0);
  for (std::uint64_t j = 1; j < ctx.p(); j += 2) {
    sum = sum + mod_pow(ctx.residue(static_cast<std::int64_t>(j)), e);
  }
  return sum;
}

Residue wolstenholme_check(const PrimeContext& ctx) {
  if (ctx.p() < 5) throw std::invalid_argument("wolstenholme_check: requires p >= 5");
  Residue sum = ctx.residue(0);
  for (std::uint64_t k = 1; k < ctx.p(); ++k) {
    const Residue inv = ctx.inverse(ctx.residue(static_cast<std::int64_t>(k)));
    sum = sum + inv * inv;
  }
  return sum;
}

}  // namespace euler_forge
