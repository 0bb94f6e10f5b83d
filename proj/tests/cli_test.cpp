#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>

#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

/// Runs the CLI with stderr folded into stdout.
Run cli(const std::string& args) {
  const std::string cmd = std::string(RIGIDPQ_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t k = 0;
  while ((k = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), k);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST(Cli, Invariants) {
  const auto r = cli("invariants --n 8 --format json");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["K2"], 50);
  EXPECT_EQ(j["chiO"], 7);
  EXPECT_EQ(j["pg"], 6);
  EXPECT_EQ(j["euler"], 34);
  EXPECT_EQ(j["h1Theta"], 6);
}

TEST(Cli, InvalidN) {
  const auto odd = cli("invariants --n 9");
  EXPECT_EQ(odd.code, 2);
  EXPECT_NE(odd.out.find("n must be even"), std::string::npos) << odd.out;
  const auto three = cli("certify --n 12");
  EXPECT_EQ(three.code, 2);
  EXPECT_NE(three.out.find("n must not be divisible by 3"), std::string::npos) << three.out;
  EXPECT_EQ(cli("certify --n 4").code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli("").code, 2);
  EXPECT_EQ(cli("table --n 8 --power 3").code, 2);
  EXPECT_EQ(cli("invariants --n 8 --format yaml").code, 2);
  EXPECT_EQ(cli("--help").code, 0);
}

TEST(Cli, TableCsv) {
  const auto r = cli("table --n 8 --power 1 --format csv");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "alpha\\beta,0,1,2,3,4,5,6,7");
  EXPECT_NE(r.out.find("\n0,-2,"), std::string::npos);
}

TEST(Cli, CertifyWithSearch) {
  const auto r = cli("certify --n 8 --search");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("RigidNotInfRigid"), std::string::npos);
  EXPECT_NE(r.out.find("paper sextuple found by search: true"), std::string::npos);
}

TEST(Cli, CertifyJsonIsStableAcrossJobs) {
  const auto a = cli("certify --n 10 --search --jobs 1 --format json");
  const auto b = cli("certify --n 10 --search --jobs 4 --format json");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["matrixRank"], 6);
  EXPECT_EQ(j["search"]["knownSextupleFound"], true);
}

TEST(Cli, ProductAndCatalog) {
  const auto p = cli("product --factors S8,S10 --format json");
  ASSERT_EQ(p.code, 0) << p.out;
  const auto j = nlohmann::json::parse(p.out);
  EXPECT_EQ(j["dim"], 4);
  EXPECT_EQ(j["kodaira"], 4);
  EXPECT_EQ(j["h1Theta"], 12);
  EXPECT_EQ(cli("product --factors S8,X").code, 2);

  const auto c = cli("catalog --dmax 4 --format csv");
  ASSERT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("4,4,S8 x S8"), std::string::npos) << c.out;
}

TEST(Cli, TextOutputs) {
  const auto inv = cli("invariants --n 8");
  ASSERT_EQ(inv.code, 0);
  EXPECT_NE(inv.out.find("K2=50 chiO=7 pg=6"), std::string::npos) << inv.out;

  const auto ten = cli("certify --n 10");
  EXPECT_EQ(ten.code, 0);
  EXPECT_NE(ten.out.find("obstruction matrix rank: 6"), std::string::npos) << ten.out;

  const auto p1 = cli("product --factors P1 --format csv");
  ASSERT_EQ(p1.code, 0);
  EXPECT_EQ(p1.out, "name,dim,kodaira,h0Theta,h1Theta,h1O,rigid,infRigid\nP1,1,-inf,3,0,0,true,true\n");
}
