#include <gtest/gtest.h>

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "nilcone/cli.hpp"

namespace nilcone::cli {
namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

TEST(PolynomialParser, AcceptsMonicForms) {
    EXPECT_EQ(parse_polynomial("t^2-3/2*t+1").to_string(), "t^2-3/2*t+1");
    EXPECT_EQ(parse_polynomial("t^3+t").lower_coefficients(),
              (std::vector<Rational>{Rational(0), Rational(1), Rational(0)}));
    EXPECT_EQ(parse_polynomial(" t ").degree(), 1);
    EXPECT_EQ(parse_polynomial("1+t^2").to_string(), "t^2+1");
    EXPECT_EQ(parse_polynomial("t^2+2*t-t").to_string(), "t^2+t");
    EXPECT_EQ(parse_polynomial("-2+t").coefficient(0), Rational(-2));
}

TEST(PolynomialParser, RejectsBadInput) {
    for (const char* bad : {"", "2*t", "t^2*3", "x", "t^", "t+", "1/0*t+t^2", "3", "t^2+t^2", "t t"}) {
        EXPECT_THROW((void)parse_polynomial(bad), std::invalid_argument) << bad;
    }
}

TEST(Cli, IrrepV1) {
    const Result r = invoke({"irrep", "--n", "1"});
    EXPECT_EQ(r.code, pass);
    EXPECT_NE(r.out.find("casimir = 3/2"), std::string::npos);
    EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST(Cli, IrrepV0IsZero) {
    const Result r = invoke({"irrep", "--n", "0", "--format", "json"});
    EXPECT_EQ(r.code, pass);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["rho_h"], nlohmann::json::parse(R"([["0/1"]])"));
    EXPECT_EQ(j["casimir"], "0/1");
}

TEST(Cli, JsonIsStable) {
    const Result a = invoke({"irrep", "--n", "4", "--format", "json"});
    const Result b = invoke({"irrep", "--n", "4", "--format", "json"});
    EXPECT_EQ(a.code, pass);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(nlohmann::json::parse(a.out).dump(2) + "\n", a.out);
}

TEST(Cli, KernelN3) {
    const Result r = invoke({"kernel", "--n", "3", "--max-order", "6"});
    EXPECT_EQ(r.code, pass);
    EXPECT_NE(r.out.find("dimension = 2"), std::string::npos);
}

TEST(Cli, SolveOnlyZero) {
    const Result r = invoke({"solve", "--n", "2", "--poly", "t^3+t"});
    EXPECT_EQ(r.code, pass);
    EXPECT_NE(r.out.find("only zero"), std::string::npos);
}

TEST(Cli, SolveOddNilpotent) {
    const Result r = invoke({"solve", "--n", "5", "--poly", "t^3", "--format", "json"});
    EXPECT_EQ(r.code, pass);
    EXPECT_EQ(nlohmann::json::parse(r.out)["dimension"], 3);
}

TEST(Cli, OrbitSupp0AndClassify) {
    EXPECT_EQ(invoke({"orbit", "--n", "6", "--max-order", "4"}).code, pass);
    EXPECT_EQ(invoke({"orbit", "--n", "7", "--max-order", "9"}).code, pass);
    EXPECT_EQ(invoke({"supp0-dims", "--n", "4", "--max-degree", "10"}).code, pass);
    const Result c = invoke({"classify", "--n", "2", "--origin", "--nplus", "--nminus", "--format", "json"});
    EXPECT_EQ(c.code, pass);
    const auto j = nlohmann::json::parse(c.out);
    EXPECT_TRUE(j["cases"]["ii"]["applies"].get<bool>());
    EXPECT_TRUE(j["realizable"].get<bool>());
    EXPECT_FALSE(nlohmann::json::parse(invoke({"classify", "--n", "2", "--no-origin", "--format", "json"}).out)
                     ["query"]["contains_origin"]
                         .get<bool>());
}

TEST(Cli, NumcheckObstruction) {
    const Result r = invoke({"numcheck", "--n", "1", "--kind", "obstruction", "--grid", "128", "--format", "json"});
    EXPECT_EQ(r.code, pass);
    const auto j = nlohmann::json::parse(r.out);
    for (const auto& row : j["obstruction"]) {
        EXPECT_LT(row["relative"].get<double>(), 1e-12);
    }
}

TEST(Cli, NumcheckInvarianceAndPairing) {
    EXPECT_EQ(invoke({"numcheck", "--n", "2", "--kind", "invariance", "--grid", "128"}).code, pass);
    EXPECT_EQ(invoke({"numcheck", "--n", "0", "--kind", "pairing"}).code, pass);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(invoke({}).code, usage_error);
    EXPECT_EQ(invoke({"bogus"}).code, usage_error);
    EXPECT_EQ(invoke({"irrep"}).code, usage_error);
    EXPECT_EQ(invoke({"irrep", "--n", "-1"}).code, usage_error);
    EXPECT_EQ(invoke({"irrep", "--n", "x"}).code, usage_error);
    EXPECT_EQ(invoke({"irrep", "--n", "1", "--format", "xml"}).code, usage_error);
    EXPECT_EQ(invoke({"solve", "--n", "2", "--poly", "2*t"}).code, usage_error);
    EXPECT_EQ(invoke({"solve", "--n", "2"}).code, usage_error);
    EXPECT_EQ(invoke({"numcheck", "--n", "1", "--kind", "invariance"}).code, usage_error);
    EXPECT_EQ(invoke({"numcheck", "--n", "2", "--kind", "obstruction"}).code, usage_error);
    EXPECT_EQ(invoke({"numcheck", "--n", "2", "--kind", "pairing"}).code, usage_error);
    EXPECT_EQ(invoke({"numcheck", "--n", "2", "--kind", "other"}).code, usage_error);
    EXPECT_EQ(invoke({"--help"}).code, pass);
}

}  // namespace
}  // namespace nilcone::cli
