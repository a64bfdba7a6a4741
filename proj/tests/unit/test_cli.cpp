#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "report_io.hpp"

using namespace euler_forge;
using euler_forge::cli::Environment;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, Environment env = {}) {
  args.insert(args.begin(), "euler_forge");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err, env);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("euler subcommand") {
  auto r = run({"euler", "--max", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "n,value\n0,1\n1,0\n2,-1\n3,0\n4,5\n");

  r = run({"euler", "--max", "4", "--mod", "5"});
  CHECK(r.code == 0);
  CHECK(r.out == "n,value\n0,1\n1,0\n2,4\n3,0\n4,0\n");

  r = run({"euler", "--max", "2", "--format", "json"});
  CHECK(r.code == 0);
  const auto doc = cli::Json::parse(r.out);
  CHECK(doc.size() == 3);
  CHECK(doc[2]["value"] == "-1");

  CHECK(run({"euler", "--max", "-1"}).code == 2);
  CHECK(run({"euler", "--max", "4", "--mod", "4"}).code == 2);
  CHECK(run({"euler", "--max", "4", "--format", "xml"}).code == 2);
  CHECK(run({"euler"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("constants subcommand") {
  auto r = run({"constants", "--s", "--max", "5"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "constant,n,value,primes\n"
        "s,0,1,\ns,1,-2,\ns,2,11,\ns,3,-132,\ns,4,2917,\ns,5,-104422,\n");

  r = run({"constants", "--t", "--max", "5", "--format", "json"});
  CHECK(r.code == 0);
  const auto doc = cli::Json::parse(r.out);
  REQUIRE(doc.size() == 6);
  const char* expected[] = {"3", "-9", "68", "-1068", "29541", "-1273423"};
  for (std::size_t n = 0; n < 6; ++n) {
    CHECK(doc[n]["constant"] == "t");
    CHECK(doc[n]["value"] == expected[n]);
    CHECK_FALSE(doc[n]["primes"].empty());
  }
  CHECK(doc[0]["primes"][0] == 3);

  CHECK(run({"constants", "--t", "--max", "3", "--cache-max", "20"}).code == 3);
  CHECK(run({"constants", "--s", "--max", "400"}).code == 2);
  CHECK(run({"constants", "--max", "2", "--stability", "0"}).code == 2);
}

TEST_CASE("verify subcommand exit codes and skip rows") {
  auto r = run({"verify", "--identities", "1.5", "--primes", "3..3"});
  CHECK(r.code == 0);
  CHECK(r.out == "identity,p,n,lhs,rhs,outcome,reason\nEx-(1.5),3,,,,skip,requires p>3\n");

  CHECK(run({"verify", "--identities", "bogus"}).code == 2);
  CHECK(run({"verify", "--primes", "10..3"}).code == 2);
  CHECK(run({"verify", "--primes", "abc"}).code == 2);
  CHECK(run({"verify", "--threads", "0"}).code == 2);
  CHECK(run({"verify", "--identities", "1.1", "--primes", "3..97", "--max", "50"}).code == 4);
  CHECK(run({"verify", "--identities", "1.9", "--primes", "3..5", "--n-max", "6", "--max", "16"})
            .code == 3);

  r = run({"verify", "--identities", "", "--primes", "3..19"});
  CHECK(r.code == 0);
  CHECK(r.out == "identity,p,n,lhs,rhs,outcome,reason\n");

  r = run({"verify", "--identities", "1.1,1.8", "--primes", "3..19", "--threads", "2"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 15);
}

TEST_CASE("thread count: flag beats environment") {
  Environment bad;
  bad.threads = "many";
  CHECK(run({"verify", "--identities", "1.1", "--primes", "3..7"}, bad).code == 2);
  CHECK(run({"verify", "--identities", "1.1", "--primes", "3..7", "--threads", "2"}, bad).code == 0);

  Environment four;
  four.threads = "4";
  const auto a = run({"verify", "--identities", "all", "--primes", "3..61", "--n-max", "4"}, four);
  const auto b = run({"verify", "--identities", "all", "--primes", "3..61", "--n-max", "4",
                      "--threads", "1"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("JSON reports round-trip") {
  const auto r = run({"verify", "--identities", "all", "--primes", "3..31", "--n-max", "5",
                      "--format", "json"});
  REQUIRE(r.code == 0);
  const auto parsed = cli::reports_from_json(cli::Json::parse(r.out));
  CHECK(cli::reports_to_json(parsed).dump(2) + "\n" == r.out);

  SuiteConfig config;
  config.prime_hi = 43;
  config.n_max = 6;
  config.identities = {std::begin(kAllIdentities), std::end(kAllIdentities)};
  const auto reports = run_suite(config, VerificationCache::build(200)).reports;
  CHECK(cli::reports_from_json(cli::reports_to_json(reports)) == reports);

  CHECK_THROWS_AS(cli::reports_from_json(cli::Json::object()), std::invalid_argument);
  auto bogus = cli::reports_to_json(reports);
  bogus[0]["identity"] = "T9.9";
  CHECK_THROWS_AS(cli::reports_from_json(bogus), std::invalid_argument);
}
