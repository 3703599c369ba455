#include "polypart/cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <sstream>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = polypart::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST(CliTest, Count) {
  EXPECT_EQ(run({"count", "--t", "2", "--n", "6"}).out, "9\n");
  EXPECT_EQ(run({"count", "--t", "1", "--n", "100"}).out, "100\n");
  EXPECT_EQ(run({"count", "--t", "2", "--n", "6", "--fixed"}).out, "3\n");
  EXPECT_EQ(run({"count", "--t", "0", "--n", "12"}).out, "6\n");
}

TEST(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"count", "--t", "2"}).code, 2);
  EXPECT_EQ(run({"count", "--t", "-1", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"table", "--t", "0", "--max-n", "5"}).code, 2);
  EXPECT_EQ(run({"series", "--max-n", "5", "--form", "sum"}).code, 2);
  EXPECT_EQ(run({"series", "--t", "1", "--max-n", "5", "--form", "abr-sum"}).code, 2);
  EXPECT_EQ(run({"series", "--t", "2", "--max-n", "5", "--form", "bogus"}).code, 2);
  EXPECT_EQ(run({"map", "--t", "2", "--pair", "3,0"}).code, 2);
  EXPECT_EQ(run({"map", "--t", "2", "--pair", "2+1"}).code, 2);
  EXPECT_EQ(run({"unmap", "--t", "2", "--partition", "5+1"}).code, 2);
  EXPECT_EQ(run({"unmap", "--t", "2", "--partition", "1+2"}).code, 2);
  EXPECT_EQ(run({"verify", "cones", "--t", "2", "--max-m", "3"}).code, 2); // seed is required
  EXPECT_EQ(run({"table", "--t", "2", "--max-n", "3", "--format", "xml"}).code, 2);
  EXPECT_FALSE(run({"count"}).err.empty());
}

TEST(CliTest, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("count"), std::string::npos);
}

TEST(CliTest, TableCsv) {
  const auto r = run({"table", "--t", "2", "--max-n", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n,brute,sum_form,rational_form,quasipoly,match\n"
                   "1,1,1,1,1,true\n"
                   "2,2,2,2,2,true\n"
                   "3,3,3,3,3,true\n"
                   "4,5,5,5,5,true\n");
  EXPECT_EQ(run({"table", "--t", "3", "--max-n", "2"}).out,
            "n,brute,sum_form,rational_form,match\n1,1,1,1,true\n2,2,2,2,true\n");
}

TEST(CliTest, TableJson) {
  const auto r = run({"table", "--t", "3", "--max-n", "5", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["t"], 3);
  ASSERT_EQ(doc["rows"].size(), 5u);
  EXPECT_EQ(doc["rows"][4]["brute"], "7");
  EXPECT_EQ(doc["rows"][4]["rational_form"], "7");
  EXPECT_TRUE(doc["rows"][4]["match"].get<bool>());
  EXPECT_FALSE(doc["rows"][4].contains("quasipoly"));
}

TEST(CliTest, Series) {
  EXPECT_EQ(run({"series", "--t", "2", "--max-n", "3", "--form", "rational"}).out,
            "n,coeff\n0,0\n1,1\n2,2\n3,3\n");
  EXPECT_EQ(run({"series", "--max-n", "6", "--form", "divisor", "--format", "json"}).out,
            R"({"t":0,"N":6,"form":"divisor","coeffs":["0","1","2","2","3","2","4"]})"
            "\n");
  for (const char *form : {"abr-sum", "abr-closed", "fixed"}) {
    const auto doc = nlohmann::json::parse(
        run({"series", "--t", "2", "--max-n", "6", "--form", form, "--format", "json"}).out);
    EXPECT_EQ(doc["coeffs"], nlohmann::json({"0", "0", "0", "0", "1", "1", "3"})) << form;
  }
}

TEST(CliTest, Verify) {
  const auto tiling = run({"verify", "tiling", "--t", "2", "--max-height", "6"});
  EXPECT_EQ(tiling.code, 0);
  EXPECT_EQ(tiling.out,
            R"({"t":2,"H":6,"status":"pass","counts":[1,2,3,5,6,9],"checked":26,"counterexample":null})"
            "\n");
  const auto bijection = run({"verify", "bijection", "--t", "3", "--max-height", "8"});
  EXPECT_EQ(bijection.code, 0);
  EXPECT_EQ(nlohmann::json::parse(bijection.out)["status"], "pass");
  const auto cones =
      run({"verify", "cones", "--t", "2", "--max-m", "4", "--samples", "50", "--seed", "3"});
  EXPECT_EQ(cones.code, 0);
  const auto doc = nlohmann::json::parse(cones.out);
  EXPECT_EQ(doc["status"], "pass");
  EXPECT_EQ(doc["checked"], 200);
  EXPECT_EQ(doc["seed"], 3);
}

TEST(CliTest, MapAndUnmap) {
  const auto mapped = run({"map", "--t", "5", "--pair", "5+4^2+3^3+2^9+1^6,265"});
  EXPECT_EQ(mapped.code, 0);
  EXPECT_EQ(mapped.out, "17^5+16^6+15+14^2+13^3+12^4\n");
  const auto unmapped = run({"unmap", "--t", "5", "--partition", "17^5+16^6+15+14^2+13^3+12^4"});
  EXPECT_EQ(unmapped.out, "5+4^2+3^3+2^9+1^6,265\n");

  const auto doc = nlohmann::json::parse(
      run({"map", "--t", "5", "--pair", "5+4^2+3^3+2^9+1^6,265", "--format", "json"}).out);
  EXPECT_EQ(doc["mu_bar"], "5+4^2+3^3+2^9+1^6");
  EXPECT_EQ(doc["ell"], 265);
  EXPECT_EQ(doc["m"], 12);
  EXPECT_EQ(doc["point"], nlohmann::json({21, 15, 6, 3, 1, 265}));
}

TEST(CliTest, OutputIsDeterministic) {
  const std::vector<std::string> args{"verify", "cones", "--t", "3", "--max-m", "5",
                                      "--samples", "40", "--seed", "11"};
  EXPECT_EQ(run(args).out, run(args).out);
  const std::vector<std::string> table{"table", "--t", "4", "--max-n", "20", "--format", "json"};
  EXPECT_EQ(run(table).out, run(table).out);
}
