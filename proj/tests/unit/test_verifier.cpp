#include <doctest.h>

#include <stdexcept>

#include "euler_forge/verifier.hpp"

using namespace euler_forge;

namespace {

const VerificationCache& vcache() {
  static const VerificationCache instance = VerificationCache::build();
  return instance;
}

PrimeContext ctx(std::uint64_t p) { return PrimeContext::build(p); }

void check_pass(const CongruenceReport& r, std::uint64_t lhs) {
  CHECK(r.outcome == Outcome::Pass);
  REQUIRE(r.lhs.has_value());
  REQUIRE(r.rhs.has_value());
  CHECK(r.lhs->value() == lhs);
  CHECK(*r.lhs == *r.rhs);
  CHECK(r.reason.empty());
}

}  // namespace

TEST_CASE("identity tags and names") {
  CHECK(identity_tag(Identity::Eq1_1) == "T1.1-(1.1)");
  CHECK(identity_tag(Identity::Eq1_5) == "Ex-(1.5)");
  CHECK(identity_tag(Identity::Eq1_7) == "C1.1-(1.7)");
  CHECK(identity_tag(Identity::Eq1_9) == "T1.2-(1.9)");
  for (Identity id : kAllIdentities) {
    CHECK(parse_identity(identity_tag(id)) == id);
    CHECK(parse_identity(identity_name(id)) == id);
  }
  CHECK_FALSE(parse_identity("1.3").has_value());
  CHECK(parse_outcome("skip") == Outcome::Skip);
  CHECK_FALSE(parse_outcome("PASS").has_value());
}

TEST_CASE("verify_1_1") {
  check_pass(verify_1_1(vcache(), ctx(3)), 1);
  check_pass(verify_1_1(vcache(), ctx(5)), 3);
  CHECK(verify_1_1(vcache(), ctx(7)).outcome == Outcome::Pass);
  CHECK_FALSE(verify_1_1(vcache(), ctx(7)).n.has_value());
}

TEST_CASE("verify_1_2") {
  check_pass(verify_1_2(vcache(), ctx(5), 0), 1);
  check_pass(verify_1_2(vcache(), ctx(3), 1), 2);
  check_pass(verify_1_2(vcache(), ctx(5), 2), 2);
  CHECK(verify_1_2(vcache(), ctx(5), 2).n == 2U);
}

TEST_CASE("verify_example_1_1") {
  check_pass(verify_example_1_1(vcache(), ctx(5), Identity::Eq1_4), 1);
  const auto skip = verify_example_1_1(vcache(), ctx(3), Identity::Eq1_5);
  CHECK(skip.outcome == Outcome::Skip);
  CHECK(skip.reason == "requires p>3");
  CHECK_FALSE(skip.lhs.has_value());
  for (std::uint64_t p : {3ULL, 5ULL}) {
    const auto r = verify_example_1_1(vcache(), ctx(p), Identity::Eq1_6);
    CHECK(r.outcome == Outcome::Skip);
    CHECK(r.reason == "requires p>5");
  }
  check_pass(verify_example_1_1(vcache(), ctx(7), Identity::Eq1_6), 4);
  CHECK(verify_example_1_1(vcache(), ctx(5), Identity::Eq1_5).outcome == Outcome::Pass);
  CHECK_THROWS_AS(verify_example_1_1(vcache(), ctx(5), Identity::Eq1_1), std::invalid_argument);
}

TEST_CASE("verify_cor_1_1") {
  const auto r1 = verify_cor_1_1(vcache(), ctx(5), 1, 1);
  CHECK(r1.n == 3U);
  check_pass(r1, 3);
  const auto r2 = verify_cor_1_1(vcache(), ctx(5), 2, 0);
  CHECK(r2.n == 4U);
  check_pass(r2, 2);
  const auto r3 = verify_cor_1_1(vcache(), ctx(3), 5, 0);
  CHECK(r3.n == 5U);
  check_pass(r3, 2);
  CHECK_THROWS_AS(verify_cor_1_1(vcache(), ctx(5), 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(verify_cor_1_1(vcache(), ctx(5), 1, 2), std::invalid_argument);
}

TEST_CASE("verify_1_8") {
  check_pass(verify_1_8(vcache(), ctx(5)), 2);
  check_pass(verify_1_8(vcache(), ctx(3)), 1);
  CHECK(verify_1_8(vcache(), ctx(11)).outcome == Outcome::Pass);
}

TEST_CASE("verify_1_9") {
  const TTable published = default_t_table(vcache(), 3);
  check_pass(verify_1_9(vcache(), ctx(5), 0, published), 3);
  CHECK(verify_1_9(vcache(), ctx(7), 1, published).outcome == Outcome::Pass);
  const auto skip = verify_1_9(vcache(), ctx(3), 1, published);
  CHECK(skip.outcome == Outcome::Skip);
  CHECK(skip.reason == "requires p>2n+1");
  CHECK_THROWS_AS(verify_1_9(vcache(), ctx(11), 4, published), std::invalid_argument);

  TTable wrong = published;
  wrong[1].value = -8;
  const auto fail = verify_1_9(vcache(), ctx(7), 1, wrong);
  CHECK(fail.outcome == Outcome::Fail);
  CHECK(*fail.lhs != *fail.rhs);
}

TEST_CASE("default_t_table provenance") {
  const TTable table = default_t_table(vcache(), 5);
  REQUIRE(table.size() == 6);
  CHECK(table.at(0).source == TSource::Published);
  CHECK(table.at(3).value == -1068);
  CHECK(table.at(3).primes.empty());
  CHECK(table.at(4).source == TSource::Crt);
  CHECK(table.at(4).value == 29541);
  CHECK_FALSE(table.at(5).primes.empty());
}

TEST_CASE("cache sizing errors carry the offending (p, n)") {
  const auto small = VerificationCache::build(50);
  CHECK(verify_1_1(small, ctx(53)).outcome == Outcome::Pass);
  try {
    (void)verify_1_2(small, ctx(47), 3);
    FAIL("expected CacheSizingError");
  } catch (const CacheSizingError& e) {
    CHECK(e.identity() == Identity::Eq1_2);
    CHECK(e.p() == 47);
    CHECK(e.n() == 3U);
  }
  CHECK_THROWS_AS(verify_1_8(small, ctx(59)), CacheSizingError);
  CHECK_THROWS_AS(verify_cor_1_1(small, ctx(29), 2, 0), CacheSizingError);

  SuiteConfig config;
  config.prime_lo = 3;
  config.prime_hi = 61;
  config.identities = {Identity::Eq1_1};
  CHECK_THROWS_AS(run_suite(config, small), CacheSizingError);
}

TEST_CASE("run_suite examples") {
  SuiteConfig config;
  config.prime_lo = 3;
  config.prime_hi = 19;
  config.identities = {Identity::Eq1_1};
  auto result = run_suite(config, vcache());
  CHECK(result.reports.size() == 7);
  CHECK(result.count(Outcome::Pass) == 7);

  config.identities = {Identity::Eq1_2};
  config.n_max = 3;
  result = run_suite(config, vcache());
  CHECK(result.reports.size() == 28);
  CHECK(result.count(Outcome::Pass) == 28);

  config.identities = {};
  CHECK(run_suite(config, vcache()).reports.empty());

  config.prime_lo = 20;
  config.prime_hi = 10;
  config.identities = {Identity::Eq1_1};
  CHECK_THROWS_AS(run_suite(config, vcache()), std::invalid_argument);
}

TEST_CASE("run_suite is sorted, skips are reasoned, and threads do not matter") {
  SuiteConfig config;
  config.prime_lo = 2;
  config.prime_hi = 199;
  config.n_max = 10;
  config.identities = {std::begin(kAllIdentities), std::end(kAllIdentities)};
  config.threads = 1;
  const auto serial = run_suite(config, vcache());
  config.threads = 8;
  const auto parallel = run_suite(config, vcache());

  CHECK(serial.reports == parallel.reports);
  CHECK(std::is_sorted(serial.reports.begin(), serial.reports.end(), report_less));
  CHECK(serial.count(Outcome::Fail) == 0);
  for (const auto& r : serial.reports) {
    CHECK(r.p != 2);
    if (r.outcome == Outcome::Skip) {
      const bool known = r.reason == "requires p>3" || r.reason == "requires p>5" ||
                         r.reason == "requires p>2n+1";
      CHECK(known);
    }
  }
}
