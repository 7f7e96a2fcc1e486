#include <gtest/gtest.h>

#include <sstream>

#include "support.hpp"

using namespace unicrit;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  Outcome r;
  r.code = run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

Json parse(const Outcome& r) { return Json::parse(r.out); }

}  // namespace

TEST(Cli, CertifyMatchingCase) {
  const Outcome r = cli({"certify", "--set", R"({"p":2,"c":[-12,-4]})"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json doc = parse(r);
  EXPECT_EQ(doc["schema_version"], kSchemaVersion);
  EXPECT_EQ(doc["report"]["case_tag"], "TypeIPlusMatchingReducible");
  EXPECT_EQ(doc["report"]["prefix"], "[0,0,1,0]");
}

TEST(Cli, OpenCaseExitsThree) {
  const Outcome r = cli({"certify", "--set", R"({"p":5,"c":[-33554400,32]})"});
  EXPECT_EQ(r.code, kExitOpenCase);
  EXPECT_NE(r.err.find("OpenCase"), std::string::npos);
}

TEST(Cli, FamilyScan) {
  const Outcome r = cli({"modscan", "--family", "2,2", "--qmax", "500"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json doc = parse(r);
  EXPECT_EQ(doc["report"]["all_reducible"], true);
  EXPECT_EQ(doc["report"]["entries"].size(), 95U);
}

TEST(Cli, ScanOfNonFamilyWord) {
  const Outcome r = cli({"modscan", "--set", R"({"p":2,"c":[-12,-4]})", "--word", "[0]", "--qmax", "50"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(parse(r)["report"]["all_reducible"], false);
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(cli({}).code, kExitInput);
  EXPECT_EQ(cli({"certify", "--set", R"({"p":4,"c":[1]})"}).code, kExitInput);
  EXPECT_EQ(cli({"certify", "--set", R"({"p":2,"c":[1,1]})"}).code, kExitInput);
  EXPECT_EQ(cli({"certify", "--set", "{not json"}).code, kExitInput);
  EXPECT_EQ(cli({"classify", "--c", "abc"}).code, kExitInput);
  EXPECT_EQ(cli({"audit", "--claim", "nope"}).code, kExitInput);
  EXPECT_EQ(cli({"verify", "--set", R"({"p":2,"c":[-12,-4]})", "--prefix", "[0]", "--word", "[7]"}).code,
            kExitInput);
  EXPECT_EQ(cli({"certify", "--set", "/nonexistent/set.json"}).code, kExitInput);
}

TEST(Cli, VerifyInconclusiveExitsOne) {
  const Outcome ok = cli({"verify", "--set", R"({"p":2,"c":[-12,-4]})", "--prefix", "[0,0,1,0]", "--word", "[1,1]"});
  EXPECT_EQ(ok.code, kExitOk) << ok.err;
  EXPECT_EQ(parse(ok)["report"]["scope"], "PerWord");
  const Outcome bad = cli({"verify", "--set", R"({"p":2,"c":[-12,-4]})", "--prefix", "[0]", "--word", "[0,1]"});
  EXPECT_EQ(bad.code, kExitViolation);
  EXPECT_EQ(parse(bad)["report"]["kind"], "inconclusive");
}

TEST(Cli, ClassifyIntegerAndRational) {
  const Json a = parse(cli({"classify", "--p", "2", "--c", "-12"}));
  EXPECT_EQ(a["report"]["type1_witnesses"], Json::array({"2", "-2"}));
  const Outcome b = cli({"classify", "--c", "3/16"});
  EXPECT_EQ(b.code, kExitOk) << b.err;
  EXPECT_EQ(parse(b)["report"]["type1_witnesses"], Json::array({"1/2", "-1/2"}));
}

TEST(Cli, EnumerateStats) {
  const Outcome r = cli({"enumerate", "--set", R"({"p":2,"c":[-12,-4]})", "--maxlen", "12", "--stats"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json doc = parse(r);
  EXPECT_EQ(doc["report"]["fraction"], "73/1170");
  EXPECT_EQ(doc["report"]["inconclusive"], 0);
}

TEST(Cli, ExpandWord) {
  const Outcome r = cli({"expand", "--set", R"({"p":2,"c":[-12,-4]})", "--word", "[0,1]", "--format", "text"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("x^4 - 8x^2 + 4"), std::string::npos) << r.out;
}

TEST(Cli, AuditExitCodes) {
  EXPECT_EQ(cli({"audit", "--claim", "refinement_lemmas", "--range", "10"}).code, kExitOk);
  EXPECT_EQ(cli({"audit", "--claim", "curves", "--curve", "B3", "--range", "100"}).code, kExitViolation);
  EXPECT_EQ(cli({"audit", "--claim", "curves", "--curve", "Z", "--range", "100"}).code, kExitInput);
}

TEST(Cli, NoTimingIsByteIdentical) {
  const std::vector<std::string> args{"--no-timing", "--jobs", "2", "audit", "--claim", "square_classification",
                                      "--range", "40"};
  const Outcome a = cli(args);
  const Outcome b = cli(args);
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  ASSERT_EQ(parse(a)["report"].size(), 1U);
  EXPECT_EQ(parse(a)["report"][0]["seconds"], 0.0);
}

TEST(Cli, CsvAndTextFormats) {
  const Outcome csv = cli({"--format", "csv", "modscan", "--family", "3,2", "--qmax", "30"});
  ASSERT_EQ(csv.code, kExitOk) << csv.err;
  EXPECT_EQ(csv.out.rfind("p,t,word,q_max,q,irreducible,all_reducible\n", 0), 0U);
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 11);  // header + 10 primes
  const Outcome text = cli({"--format", "text", "certify", "--set", R"({"p":3,"c":[-504,8]})"});
  ASSERT_EQ(text.code, kExitOk) << text.err;
  EXPECT_NE(text.out.find("P3SpecialPair"), std::string::npos);
  EXPECT_EQ(cli({"--format", "xml", "certify", "--set", R"({"p":2,"c":[2]})"}).code, kExitInput);
}

TEST(Cli, FullFlagPrintsEveryDigit) {
  const Outcome r = cli({"--full", "classify", "--c", "-1000000000000000000000000000000000000000000000000000000"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("-1000000000000000000000000000000000000000000000000000000"), std::string::npos);
}
