#include "euler_forge/convolution.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace euler_forge {

Residue pair_convolution_mod(const EulerCache& cache, const PrimeContext& ctx, std::size_t total) {
  return ctx.residue(pair_convolution_exact(total, cache));
}

Residue pair_convolution_mod(const ConvolutionTable& table, const PrimeContext& ctx,
                             std::size_t total) {
  return ctx.residue(table.pair(total));
}

Residue triple_convolution_mod(const EulerCache& cache, const PrimeContext& ctx,
                               std::size_t total) {
  return ctx.residue(triple_convolution_exact(total, cache));
}

Residue triple_convolution_mod(const ConvolutionTable& table, const PrimeContext& ctx,
                               std::size_t total) {
  return ctx.residue(table.triple(total));
}

int delta(std::uint64_t p, std::uint64_t n) {
  return n > 0 && p > 1 && (2 * n) % (p - 1) == 0 ? 1 : 0;
}

CrtAccumulator CrtAccumulator::push(std::uint64_t p, Residue r) const {
  if (p < 2) throw std::invalid_argument("crt_push: modulus must be >= 2");
  if (r.modulus() != p) {
    throw std::invalid_argument("crt_push: residue modulus " + std::to_string(r.modulus()) +
                                " does not match p = " + std::to_string(p));
  }
  const BigInt big_p = static_cast<unsigned long>(p);
  BigInt g;
  mpz_gcd(g.get_mpz_t(), modulus_product_.get_mpz_t(), big_p.get_mpz_t());
  if (g != 1) {
    throw std::invalid_argument("crt_push: " + std::to_string(p) +
                                " is not coprime to the accumulated modulus");
  }

  // x = c + M * ((r - c) * M^{-1} mod p)
  BigInt m_inv;
  mpz_invert(m_inv.get_mpz_t(), modulus_product_.get_mpz_t(), big_p.get_mpz_t());
  BigInt step = (BigInt(static_cast<unsigned long>(r.value())) - combined_residue_) * m_inv;
  mpz_fdiv_r(step.get_mpz_t(), step.get_mpz_t(), big_p.get_mpz_t());

  CrtAccumulator next = *this;
  next.combined_residue_ = combined_residue_ + modulus_product_ * step;
  next.modulus_product_ = modulus_product_ * big_p;
  next.primes_.push_back(p);

  BigInt lift = next.combined_residue_;
  if (2 * lift > next.modulus_product_) lift -= next.modulus_product_;
  if (!empty() && lift == last_balanced_) {
    next.stable_count_ = stable_count_ + 1;
  } else {
    next.stable_count_ = 0;
    next.last_balanced_ = std::move(lift);
  }
  return next;
}

std::uint64_t first_reconstruction_prime(std::uint64_t n) {
  std::uint64_t p = std::max<std::uint64_t>(3, 2 * n + 2);
  while (!is_prime(p)) ++p;
  return p;
}

namespace {

TReconstruction run_reconstruction(
    std::uint64_t n, std::size_t max_index, std::size_t stability, std::size_t extra_primes,
    const std::function<Residue(const PrimeContext&, std::size_t)>& triple_mod) {
  if (stability == 0) throw std::invalid_argument("reconstruct_t: stability must be positive");

  TReconstruction out;
  out.n = n;
  CrtAccumulator acc;
  std::size_t extra_pushed = 0;
  for (std::uint64_t p = first_reconstruction_prime(n);; p += 2) {
    if (!is_prime(p)) continue;
    const std::size_t total = p - 1 + 2 * n;
    if (total > max_index) {
      throw ReconstructionError(
          "reconstruct_t(" + std::to_string(n) + "): cache max_index " +
          std::to_string(max_index) + " exhausted at p = " + std::to_string(p) + " after " +
          std::to_string(acc.primes().size()) + " primes without stabilizing");
    }
    const PrimeContext ctx = PrimeContext::build(p);
    acc = acc.push(p, triple_mod(ctx, total));
    if (out.stabilized_after == 0) {
      if (acc.stable_count() >= stability) out.stabilized_after = acc.primes().size();
    } else {
      ++extra_pushed;
    }
    if (out.stabilized_after != 0 && extra_pushed >= extra_primes) break;
  }
  out.value = acc.last_balanced();
  out.primes = acc.primes();
  return out;
}

}  // namespace

TReconstruction reconstruct_t(std::uint64_t n, const ConvolutionTable& table,
                              std::size_t stability, std::size_t extra_primes) {
  return run_reconstruction(n, table.max_index(), stability, extra_primes,
                            [&](const PrimeContext& ctx, std::size_t total) {
                              return triple_convolution_mod(table, ctx, total);
                            });
}

TReconstruction reconstruct_t(std::uint64_t n, const EulerCache& cache, std::size_t stability,
                              std::size_t extra_primes) {
  return run_reconstruction(n, cache.max_index(), stability, extra_primes,
                            [&](const PrimeContext& ctx, std::size_t total) {
                              return triple_convolution_mod(cache, ctx, total);
                            });
}

}  // namespace euler_forge
