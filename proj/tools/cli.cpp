#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "euler_forge/convolution.hpp"
#include "euler_forge/euler_exact.hpp"
#include "euler_forge/euler_mod.hpp"
#include "euler_forge/verifier.hpp"
#include "report_io.hpp"

namespace euler_forge::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t parse_unsigned(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw UsageError(std::string(what) + ": expected a non-negative integer, got '" +
                     std::string(text) + "'");
  }
  return value;
}

std::pair<std::uint64_t, std::uint64_t> parse_prime_range(const std::string& text) {
  const auto dots = text.find("..");
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  if (dots == std::string::npos) {
    lo = hi = parse_unsigned(text, "--primes");
  } else {
    lo = parse_unsigned(std::string_view(text).substr(0, dots), "--primes");
    hi = parse_unsigned(std::string_view(text).substr(dots + 2), "--primes");
  }
  if (lo < 2 || lo > hi) throw UsageError("--primes: need 2 <= lo <= hi, got '" + text + "'");
  if (hi > kMaxContextPrime) throw UsageError("--primes: upper bound too large");
  return {lo, hi};
}

std::vector<Identity> parse_identities(const std::string& text) {
  if (text == "all") return {std::begin(kAllIdentities), std::end(kAllIdentities)};
  std::vector<Identity> ids;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto token =
        std::string_view(text).substr(start, comma == std::string::npos ? comma : comma - start);
    if (!token.empty()) {
      const auto id = parse_identity(token);
      if (!id) throw UsageError("--identities: unknown identity '" + std::string(token) + "'");
      ids.push_back(*id);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return ids;
}

std::size_t resolve_threads(std::optional<std::size_t> flag, const Environment& env) {
  if (flag) {
    if (*flag == 0) throw UsageError("--threads must be positive");
    return *flag;
  }
  if (env.threads) {
    const auto value = parse_unsigned(*env.threads, "EULER_FORGE_THREADS");
    if (value == 0) throw UsageError("EULER_FORGE_THREADS must be positive");
    return value;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

// Fields shared by every subcommand.
struct RunConfig {
  std::int64_t max = -1;
  std::optional<std::int64_t> modulus;
  bool want_s = false;
  bool want_t = false;
  std::int64_t cache_max = static_cast<std::int64_t>(kDefaultMaxIndex);
  std::string identities = "all";
  std::string primes = "3..199";
  std::int64_t n_max = 10;
  std::int64_t q_max = 4;
  std::string format = "csv";
  std::int64_t stability = 3;
  std::optional<std::size_t> threads;
};

Format to_format(const std::string& text) {
  return text == "json" ? Format::Json : Format::Csv;
}

std::size_t checked_cache_size(std::int64_t value, const char* flag) {
  if (value < 0) throw UsageError(std::string(flag) + " must be non-negative");
  if (static_cast<std::uint64_t>(value) > kMaxCacheIndex) {
    throw UsageError(std::string(flag) + " exceeds " + std::to_string(kMaxCacheIndex));
  }
  return static_cast<std::size_t>(value);
}

int cmd_euler(const RunConfig& config, std::ostream& out) {
  const std::size_t max = checked_cache_size(config.max, "--max");
  std::optional<PrimeContext> ctx;
  if (config.modulus) {
    if (*config.modulus < 3 || !is_prime(static_cast<std::uint64_t>(*config.modulus)) ||
        static_cast<std::uint64_t>(*config.modulus) > kMaxContextPrime) {
      throw UsageError("--mod must be an odd prime");
    }
    ctx = PrimeContext::build(static_cast<std::uint64_t>(*config.modulus));
  }
  const EulerCache cache = EulerCache::build(max);
  auto value = [&](std::size_t n) {
    return ctx ? std::to_string(ctx->residue(cache[n]).value()) : cache[n].get_str();
  };
  if (to_format(config.format) == Format::Csv) {
    out << "n,value\n";
    for (std::size_t n = 0; n <= max; ++n) out << n << ',' << value(n) << '\n';
  } else {
    Json doc = Json::array();
    for (std::size_t n = 0; n <= max; ++n) doc.push_back(Json{{"n", n}, {"value", value(n)}});
    out << doc.dump(2) << '\n';
  }
  return kExitOk;
}

struct ConstantRow {
  char constant;
  std::size_t n;
  BigInt value;
  std::vector<std::uint64_t> primes;
};

int cmd_constants(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const std::size_t max = checked_cache_size(config.max, "--max");
  const std::size_t cache_max = checked_cache_size(config.cache_max, "--cache-max");
  if (config.stability <= 0) throw UsageError("--stability must be positive");
  const bool want_s = config.want_s || !config.want_t;
  const bool want_t = config.want_t || !config.want_s;
  if (want_s && 2 * max > cache_max) {
    throw UsageError("--max " + std::to_string(max) + " needs --cache-max >= " +
                     std::to_string(2 * max));
  }

  const VerificationCache cache = VerificationCache::build(cache_max);
  std::vector<ConstantRow> rows;
  if (want_s) {
    for (std::size_t n = 0; n <= max; ++n) rows.push_back({'s', n, cache.convolutions().s(n), {}});
  }
  if (want_t) {
    for (std::size_t n = 0; n <= max; ++n) {
      try {
        auto t = reconstruct_t(n, cache.convolutions(), static_cast<std::size_t>(config.stability));
        rows.push_back({'t', n, std::move(t.value), std::move(t.primes)});
      } catch (const ReconstructionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitNoStabilization;
      }
    }
  }

  if (to_format(config.format) == Format::Csv) {
    out << "constant,n,value,primes\n";
    for (const auto& row : rows) {
      out << row.constant << ',' << row.n << ',' << row.value.get_str() << ',';
      for (std::size_t i = 0; i < row.primes.size(); ++i) {
        out << (i ? " " : "") << row.primes[i];
      }
      out << '\n';
    }
  } else {
    Json doc = Json::array();
    for (const auto& row : rows) {
      doc.push_back(Json{{"constant", std::string(1, row.constant)},
                         {"n", row.n},
                         {"value", row.value.get_str()},
                         {"primes", row.primes}});
    }
    out << doc.dump(2) << '\n';
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& config, const Environment& env, std::ostream& out,
               std::ostream& err) {
  SuiteConfig suite;
  std::tie(suite.prime_lo, suite.prime_hi) = parse_prime_range(config.primes);
  suite.identities = parse_identities(config.identities);
  if (config.n_max < 0) throw UsageError("--n-max must be non-negative");
  if (config.q_max < 1) throw UsageError("--q-max must be positive");
  if (config.stability <= 0) throw UsageError("--stability must be positive");
  suite.n_max = static_cast<std::uint64_t>(config.n_max);
  suite.q_max = static_cast<std::uint64_t>(config.q_max);
  suite.stability = static_cast<std::size_t>(config.stability);
  suite.threads = resolve_threads(config.threads, env);
  const std::size_t max_index =
      config.max < 0 ? kDefaultMaxIndex : checked_cache_size(config.max, "--max");

  SuiteResult result;
  try {
    result = run_suite(suite, VerificationCache::build(max_index));
  } catch (const CacheSizingError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCacheSizing;
  } catch (const ReconstructionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNoStabilization;
  }

  write_reports(out, result.reports, to_format(config.format));

  for (const auto& [n, entry] : result.t_table) {
    err << "t(" << n << ") = " << entry.value.get_str() << " [" << to_string(entry.source) << "]\n";
  }
  const std::size_t failures = result.count(Outcome::Fail);
  err << result.reports.size() << " reports: " << result.count(Outcome::Pass) << " pass, "
      << failures << " fail, " << result.count(Outcome::Skip) << " skip\n";
  return failures == 0 ? kExitOk : kExitCongruenceFailure;
}

}  // namespace

Environment Environment::from_process() {
  Environment env;
  if (const char* threads = std::getenv("EULER_FORGE_THREADS")) env.threads = threads;
  return env;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env) {
  CLI::App app{"Euler numbers, their convolutions, and congruences modulo primes",
               "euler_forge"};
  app.require_subcommand(1);

  RunConfig config;
  const std::vector<std::string> formats{"csv", "json"};

  auto* euler = app.add_subcommand("euler", "Print E_n for n <= --max (exact or mod --mod)");
  euler->add_option("--max", config.max, "Largest index")->required();
  euler->add_option("--mod", config.modulus, "Reduce modulo this odd prime");
  euler->add_option("--format", config.format, "csv or json")->check(CLI::IsMember(formats));

  auto* constants = app.add_subcommand("constants", "Print s(n) exactly and t(n) by CRT");
  constants->add_flag("--s", config.want_s, "Emit s(n)");
  constants->add_flag("--t", config.want_t, "Emit t(n)");
  constants->add_option("--max", config.max, "Largest n")->required();
  constants->add_option("--cache-max", config.cache_max, "Euler table size")
      ->capture_default_str();
  constants->add_option("--stability", config.stability,
                        "Consecutive unchanged CRT lifts required")
      ->capture_default_str();
  constants->add_option("--format", config.format, "csv or json")->check(CLI::IsMember(formats));

  auto* verify = app.add_subcommand("verify", "Check the congruences over a prime range");
  verify->add_option("--identities", config.identities,
                     "Comma list of 1.1,1.2,1.4,1.5,1.6,1.7,1.8,1.9 or 'all'")
      ->capture_default_str();
  verify->add_option("--primes", config.primes, "Prime range lo..hi")->capture_default_str();
  verify->add_option("--n-max", config.n_max, "Largest n for 1.2 and 1.9")->capture_default_str();
  verify->add_option("--q-max", config.q_max, "Largest q for 1.7")->capture_default_str();
  verify->add_option("--max", config.max, "Euler table size (default 600)");
  verify->add_option("--stability", config.stability, "CRT stability for t(n), n > 3")
      ->capture_default_str();
  verify->add_option("--threads", config.threads, "Worker threads (overrides EULER_FORGE_THREADS)");
  verify->add_option("--format", config.format, "csv or json")->check(CLI::IsMember(formats));

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (euler->parsed()) return cmd_euler(config, out);
    if (constants->parsed()) return cmd_constants(config, out, err);
    return cmd_verify(config, env, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace euler_forge::cli
