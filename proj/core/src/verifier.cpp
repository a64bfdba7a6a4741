#include "euler_forge/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <thread>
#include <tuple>

namespace euler_forge {
namespace {

struct IdentityInfo {
  Identity id;
  std::string_view tag;
  std::string_view name;
};

constexpr IdentityInfo kIdentityInfo[] = {
    {Identity::Eq1_1, "T1.1-(1.1)", "1.1"}, {Identity::Eq1_2, "T1.1-(1.2)", "1.2"},
    {Identity::Eq1_4, "Ex-(1.4)", "1.4"},   {Identity::Eq1_5, "Ex-(1.5)", "1.5"},
    {Identity::Eq1_6, "Ex-(1.6)", "1.6"},   {Identity::Eq1_7, "C1.1-(1.7)", "1.7"},
    {Identity::Eq1_8, "T1.2-(1.8)", "1.8"}, {Identity::Eq1_9, "T1.2-(1.9)", "1.9"},
};

const IdentityInfo& info(Identity id) {
  return kIdentityInfo[static_cast<std::size_t>(id)];
}

void require_index(const VerificationCache& cache, Identity id, std::uint64_t p,
                   std::optional<std::uint64_t> n, std::size_t needed) {
  if (needed > cache.max_index()) throw CacheSizingError(id, p, n, needed, cache.max_index());
}

CongruenceReport compare(Identity id, std::uint64_t p, std::optional<std::uint64_t> n,
                         Residue lhs, Residue rhs) {
  return CongruenceReport{id, p, n, lhs, rhs, lhs == rhs ? Outcome::Pass : Outcome::Fail, {}};
}

CongruenceReport skipped(Identity id, std::uint64_t p, std::optional<std::uint64_t> n,
                         std::string reason) {
  return CongruenceReport{id, p, n, std::nullopt, std::nullopt, Outcome::Skip, std::move(reason)};
}

}  // namespace

std::string_view identity_tag(Identity id) { return info(id).tag; }
std::string_view identity_name(Identity id) { return info(id).name; }

std::optional<Identity> parse_identity(std::string_view text) {
  for (const auto& entry : kIdentityInfo) {
    if (text == entry.tag || text == entry.name) return entry.id;
  }
  return std::nullopt;
}

std::string_view outcome_name(Outcome outcome) {
  switch (outcome) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Skip: return "skip";
  }
  return "unknown";
}

std::optional<Outcome> parse_outcome(std::string_view text) {
  for (Outcome o : {Outcome::Pass, Outcome::Fail, Outcome::Skip}) {
    if (text == outcome_name(o)) return o;
  }
  return std::nullopt;
}

bool report_less(const CongruenceReport& a, const CongruenceReport& b) {
  return std::tie(a.identity, a.p, a.n) < std::tie(b.identity, b.p, b.n);
}

CacheSizingError::CacheSizingError(Identity identity, std::uint64_t p,
                                   std::optional<std::uint64_t> n, std::size_t needed,
                                   std::size_t max_index)
    : std::runtime_error(std::string(identity_tag(identity)) + " at p=" + std::to_string(p) +
                         (n ? ", n=" + std::to_string(*n) : std::string()) + " needs index " +
                         std::to_string(needed) + " but the Euler cache stops at " +
                         std::to_string(max_index)),
      identity_(identity),
      p_(p),
      n_(n) {}

VerificationCache VerificationCache::build(std::size_t max_index) {
  EulerCache euler = EulerCache::build(max_index);
  ConvolutionTable conv = ConvolutionTable::build(euler);
  return VerificationCache(std::move(euler), std::move(conv));
}

std::string_view to_string(TSource source) {
  return source == TSource::Published ? "published" : "crt";
}

TTable default_t_table(const VerificationCache& cache, std::uint64_t n_max,
                       std::size_t stability) {
  TTable table;
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    if (n < std::size(kPublishedT)) {
      table[n] = TEntry{BigInt(kPublishedT[n]), TSource::Published, {}};
      continue;
    }
    TReconstruction t = reconstruct_t(n, cache.convolutions(), stability);
    table[n] = TEntry{std::move(t.value), TSource::Crt, std::move(t.primes)};
  }
  return table;
}

CongruenceReport verify_1_1(const VerificationCache& cache, const PrimeContext& ctx) {
  const std::uint64_t p = ctx.p();
  require_index(cache, Identity::Eq1_1, p, std::nullopt, p - 3);
  const Residue lhs = pair_convolution_mod(cache.convolutions(), ctx, p - 3);
  const Residue rhs = ctx.residue(2 * ctx.chi()) * ctx.residue(cache.euler()[p - 3]);
  return compare(Identity::Eq1_1, p, std::nullopt, lhs, rhs);
}

CongruenceReport verify_1_2(const VerificationCache& cache, const PrimeContext& ctx,
                            std::uint64_t n) {
  const std::uint64_t p = ctx.p();
  const std::size_t total = p - 1 + 2 * n;
  require_index(cache, Identity::Eq1_2, p, n, total);
  const Residue lhs = pair_convolution_mod(cache.convolutions(), ctx, total);
  const Residue rhs = ctx.residue(cache.convolutions().s(n)) + ctx.residue(delta(p, n));
  return compare(Identity::Eq1_2, p, n, lhs, rhs);
}

CongruenceReport verify_example_1_1(const VerificationCache& cache, const PrimeContext& ctx,
                                    Identity which) {
  const std::uint64_t p = ctx.p();
  std::size_t total = 0;
  std::int64_t expected = 0;
  switch (which) {
    case Identity::Eq1_4:
      total = p - 1;
      expected = 1;
      break;
    case Identity::Eq1_5:
      if (p <= 3) return skipped(which, p, std::nullopt, "requires p>3");
      total = p + 1;
      expected = -2;
      break;
    case Identity::Eq1_6:
      if (p <= 5) return skipped(which, p, std::nullopt, "requires p>5");
      total = p + 3;
      expected = 11;
      break;
    default:
      throw std::invalid_argument("verify_example_1_1: identity must be 1.4, 1.5 or 1.6");
  }
  require_index(cache, which, p, std::nullopt, total);
  return compare(which, p, std::nullopt, pair_convolution_mod(cache.convolutions(), ctx, total),
                 ctx.residue(expected));
}

CongruenceReport verify_cor_1_1(const VerificationCache& cache, const PrimeContext& ctx,
                                std::uint64_t q, std::uint64_t r) {
  const std::uint64_t p = ctx.p();
  if (q == 0) throw std::invalid_argument("verify_cor_1_1: q must be positive");
  if (r > (p - 3) / 2) throw std::invalid_argument("verify_cor_1_1: r must be <= (p-3)/2");
  const std::uint64_t n = (p - 1) / 2 * q + r;
  require_index(cache, Identity::Eq1_7, p, n, 2 * n);
  const auto& conv = cache.convolutions();
  const Residue lhs = ctx.residue(conv.s(n));
  const Residue rhs =
      ctx.residue(conv.s(r)) + ctx.residue(r == 0 ? static_cast<std::int64_t>(q - 1) : 0);
  return compare(Identity::Eq1_7, p, n, lhs, rhs);
}

CongruenceReport verify_1_8(const VerificationCache& cache, const PrimeContext& ctx) {
  const std::uint64_t p = ctx.p();
  require_index(cache, Identity::Eq1_8, p, std::nullopt, p - 3);
  const Residue lhs = triple_convolution_mod(cache.convolutions(), ctx, p - 3);
  const Residue rhs = ctx.residue(-2) * ctx.residue(cache.euler()[p - 3]);
  return compare(Identity::Eq1_8, p, std::nullopt, lhs, rhs);
}

CongruenceReport verify_1_9(const VerificationCache& cache, const PrimeContext& ctx,
                            std::uint64_t n, const TTable& t_table) {
  const std::uint64_t p = ctx.p();
  if (p <= 2 * n + 1) return skipped(Identity::Eq1_9, p, n, "requires p>2n+1");
  const auto it = t_table.find(n);
  if (it == t_table.end()) {
    throw std::invalid_argument("verify_1_9: no t(" + std::to_string(n) + ") in table");
  }
  const std::size_t total = p - 1 + 2 * n;
  require_index(cache, Identity::Eq1_9, p, n, total);
  return compare(Identity::Eq1_9, p, n, triple_convolution_mod(cache.convolutions(), ctx, total),
                 ctx.residue(it->second.value));
}

std::size_t SuiteResult::count(Outcome outcome) const {
  return static_cast<std::size_t>(std::count_if(
      reports.begin(), reports.end(),
      [outcome](const CongruenceReport& r) { return r.outcome == outcome; }));
}

namespace {

std::vector<CongruenceReport> run_unit(Identity id, const PrimeContext& ctx,
                                       const SuiteConfig& config, const VerificationCache& cache,
                                       const TTable& t_table) {
  std::vector<CongruenceReport> out;
  const std::uint64_t p = ctx.p();
  switch (id) {
    case Identity::Eq1_1:
      out.push_back(verify_1_1(cache, ctx));
      break;
    case Identity::Eq1_2:
      for (std::uint64_t n = 0; n <= config.n_max; ++n) out.push_back(verify_1_2(cache, ctx, n));
      break;
    case Identity::Eq1_4:
    case Identity::Eq1_5:
    case Identity::Eq1_6:
      out.push_back(verify_example_1_1(cache, ctx, id));
      break;
    case Identity::Eq1_7:
      for (std::uint64_t q = 1; q <= config.q_max; ++q) {
        for (std::uint64_t r = 0; r <= (p - 3) / 2; ++r) {
          if (2 * ((p - 1) / 2 * q + r) > cache.max_index()) break;
          out.push_back(verify_cor_1_1(cache, ctx, q, r));
        }
      }
      break;
    case Identity::Eq1_8:
      out.push_back(verify_1_8(cache, ctx));
      break;
    case Identity::Eq1_9:
      for (std::uint64_t n = 0; n <= config.n_max; ++n) {
        out.push_back(verify_1_9(cache, ctx, n, t_table));
      }
      break;
  }
  return out;
}

}  // namespace

SuiteResult run_suite(const SuiteConfig& config, const VerificationCache& cache) {
  if (config.prime_lo > config.prime_hi) {
    throw std::invalid_argument("run_suite: empty prime range");
  }
  SuiteResult result;

  std::vector<Identity> identities = config.identities;
  std::sort(identities.begin(), identities.end());
  identities.erase(std::unique(identities.begin(), identities.end()), identities.end());
  if (identities.empty()) return result;

  if (std::find(identities.begin(), identities.end(), Identity::Eq1_9) != identities.end()) {
    result.t_table = default_t_table(cache, config.n_max, config.stability);
  }

  const auto primes = sieve_primes(std::max<std::uint64_t>(config.prime_lo, 3), config.prime_hi);
  std::vector<PrimeContext> contexts;
  contexts.reserve(primes.size());
  for (std::uint64_t p : primes) contexts.push_back(PrimeContext::build(p));

  struct Unit {
    Identity id;
    std::size_t ctx_index;
  };
  std::vector<Unit> units;
  for (Identity id : identities) {
    for (std::size_t i = 0; i < contexts.size(); ++i) units.push_back({id, i});
  }

  std::vector<std::vector<CongruenceReport>> slots(units.size());
  std::vector<std::exception_ptr> errors(units.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < units.size(); i = next++) {
      try {
        slots[i] = run_unit(units[i].id, contexts[units[i].ctx_index], config, cache,
                            result.t_table);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  const std::size_t threads = std::clamp<std::size_t>(config.threads, 1, units.size());
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  // Lowest failing unit wins so the reported error does not depend on timing.
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  for (auto& slot : slots) {
    std::move(slot.begin(), slot.end(), std::back_inserter(result.reports));
  }
  std::stable_sort(result.reports.begin(), result.reports.end(), report_less);
  return result;
}

}  // namespace euler_forge
