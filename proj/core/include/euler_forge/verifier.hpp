#pragma once

/**
 * @file verifier.hpp
 * @brief Checks every convolution congruence over ranges of odd primes.
 *
 * Identities (p an odd prime, s(n) = sum_{k<=n} E_{2k} E_{2n-2k}):
 *
 *   1.1  sum_{k<=p-3} E_k E_{p-3-k}          == 2 (-1/p) E_{p-3}
 *   1.2  sum_{k<=p-1+2n} E_k E_{p-1+2n-k}    == s(n) + delta(p, n)
 *   1.4  sum_{k<=p-1} E_k E_{p-1-k}          == 1
 *   1.5  sum_{k<=p+1} E_k E_{p+1-k}          == -2       (p > 3)
 *   1.6  sum_{k<=p+3} E_k E_{p+3-k}          == 11       (p > 5)
 *   1.7  s((p-1)/2 q + r)                    == s(r) + (q-1)[r = 0]
 *   1.8  sum_{i+j+k=p-3} E_i E_j E_k         == -2 E_{p-3}
 *   1.9  sum_{i+j+k=p-1+2n} E_i E_j E_k      == t(n)     (p > 2n+1)
 *
 * all modulo p.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "euler_forge/convolution.hpp"
#include "euler_forge/euler_exact.hpp"
#include "euler_forge/modular_arith.hpp"

namespace euler_forge {

enum class Identity { Eq1_1, Eq1_2, Eq1_4, Eq1_5, Eq1_6, Eq1_7, Eq1_8, Eq1_9 };

inline constexpr Identity kAllIdentities[] = {
    Identity::Eq1_1, Identity::Eq1_2, Identity::Eq1_4, Identity::Eq1_5,
    Identity::Eq1_6, Identity::Eq1_7, Identity::Eq1_8, Identity::Eq1_9,
};

/// Report tag, e.g. "T1.1-(1.1)", "Ex-(1.5)", "C1.1-(1.7)".
std::string_view identity_tag(Identity id);
/// Short selector used on the command line, e.g. "1.5".
std::string_view identity_name(Identity id);
/// Accepts either the tag or the short name.
std::optional<Identity> parse_identity(std::string_view text);

enum class Outcome { Pass, Fail, Skip };

std::string_view outcome_name(Outcome outcome);
std::optional<Outcome> parse_outcome(std::string_view text);

struct CongruenceReport {
  Identity identity = Identity::Eq1_1;
  std::uint64_t p = 0;
  std::optional<std::uint64_t> n;
  /// Absent on skipped rows.
  std::optional<Residue> lhs;
  std::optional<Residue> rhs;
  Outcome outcome = Outcome::Skip;
  std::string reason;

  bool operator==(const CongruenceReport&) const = default;
};

/// Orders by (identity, p, n).
bool report_less(const CongruenceReport& a, const CongruenceReport& b);

/// A check needed an index beyond the Euler table.
class CacheSizingError : public std::runtime_error {
 public:
  CacheSizingError(Identity identity, std::uint64_t p, std::optional<std::uint64_t> n,
                   std::size_t needed, std::size_t max_index);

  Identity identity() const noexcept { return identity_; }
  std::uint64_t p() const noexcept { return p_; }
  std::optional<std::uint64_t> n() const noexcept { return n_; }

 private:
  Identity identity_;
  std::uint64_t p_;
  std::optional<std::uint64_t> n_;
};

/// Exact Euler numbers plus their convolution tables, built once and shared
/// read-only by all checks.
class VerificationCache {
 public:
  static VerificationCache build(std::size_t max_index = kDefaultMaxIndex);

  const EulerCache& euler() const noexcept { return euler_; }
  const ConvolutionTable& convolutions() const noexcept { return conv_; }
  std::size_t max_index() const noexcept { return euler_.max_index(); }

 private:
  VerificationCache(EulerCache euler, ConvolutionTable conv)
      : euler_(std::move(euler)), conv_(std::move(conv)) {}

  EulerCache euler_;
  ConvolutionTable conv_;
};

enum class TSource { Published, Crt };

std::string_view to_string(TSource source);

struct TEntry {
  BigInt value;
  TSource source = TSource::Published;
  /// Primes used for CRT entries; empty for published values.
  std::vector<std::uint64_t> primes;
};

using TTable = std::map<std::uint64_t, TEntry>;

/// Published values t(0..3).
inline constexpr long kPublishedT[] = {3, -9, 68, -1068};

/// Published values for n <= 3, reconstruct_t beyond, up to n_max.
TTable default_t_table(const VerificationCache& cache, std::uint64_t n_max,
                       std::size_t stability = 3);

CongruenceReport verify_1_1(const VerificationCache& cache, const PrimeContext& ctx);
CongruenceReport verify_1_2(const VerificationCache& cache, const PrimeContext& ctx,
                            std::uint64_t n);
/// which must be one of Eq1_4, Eq1_5, Eq1_6.
CongruenceReport verify_example_1_1(const VerificationCache& cache, const PrimeContext& ctx,
                                    Identity which);
/// n = (p-1)/2 * q + r with q >= 1 and 0 <= r <= (p-3)/2.
CongruenceReport verify_cor_1_1(const VerificationCache& cache, const PrimeContext& ctx,
                                std::uint64_t q, std::uint64_t r);
CongruenceReport verify_1_8(const VerificationCache& cache, const PrimeContext& ctx);
/// Throws std::invalid_argument if t_table lacks n (and the row is not a skip).
CongruenceReport verify_1_9(const VerificationCache& cache, const PrimeContext& ctx,
                            std::uint64_t n, const TTable& t_table);

struct SuiteConfig {
  std::uint64_t prime_lo = 3;
  std::uint64_t prime_hi = 199;
  std::uint64_t n_max = 10;
  /// Largest q for 1.7; rows with 2n beyond the cache are not emitted.
  std::uint64_t q_max = 4;
  std::vector<Identity> identities;
  std::size_t stability = 3;
  std::size_t threads = 1;
};

struct SuiteResult {
  std::vector<CongruenceReport> reports;
  /// Populated when 1.9 was requested.
  TTable t_table;

  std::size_t count(Outcome outcome) const;
};

/// Runs every applicable (identity, p, n) for odd primes in
/// [prime_lo, prime_hi]. Output is sorted and independent of `threads`.
/// Throws std::invalid_argument for an empty prime range, CacheSizingError
/// and ReconstructionError as raised by the checks.
SuiteResult run_suite(const SuiteConfig& config, const VerificationCache& cache);

}  // namespace euler_forge
