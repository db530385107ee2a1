#include <gtest/gtest.h>

#include "tetra/io/json.hpp"
#include "tetra/reduction.hpp"

using namespace tetra;
using io::json;

TEST(Json, ScalarRoundTrip) {
  const std::vector<Scalar> xs{
      Scalar(0), Scalar(1), Scalar::i(), -Scalar::i() * Scalar::v_pow(1),
      Scalar::fraction(LaurentPoly(1) - LaurentPoly::q_pow(3), LaurentPoly(1) + LaurentPoly::v_pow(-2)),
      Scalar(Rational::parse("-7/3")) * Scalar::q_pow(-2)};
  for (const auto& x : xs) {
    const json j = io::to_json(x);
    EXPECT_EQ(io::scalar_from_json(json::parse(j.dump())), x) << x;
    EXPECT_EQ(j.at("text").get<std::string>(), x.str());
  }
  EXPECT_EQ(io::to_json(Scalar::i()).at("num").dump(), R"([[0,"0","1"]])");
}

TEST(Json, SeriesAndStates) {
  const Series s = str_element({1, 0}, {0, 1}, {0, 1}, {1, 0}, 5);
  EXPECT_EQ(io::series_from_json(json::parse(io::to_json(s).dump())), s);
  State st({0, 1, 2}, Scalar::i());
  st.add({1, 0, 0}, Scalar::q_pow(2));
  EXPECT_EQ(io::state_from_json(io::to_json(st)), st);
  VectorState<Series> ss({1, 0}, s);
  EXPECT_EQ(io::series_state_from_json(io::to_json(ss)), ss);
  json bad = io::to_json(s);
  bad["coeffs"].erase(0);
  EXPECT_THROW(io::series_from_json(bad), std::invalid_argument);
  EXPECT_THROW(io::poly_from_json(json::parse(R"([[0,"1"]])")), std::invalid_argument);
}

TEST(Json, ReportRoundTrip) {
  Report r{.id = "x"};
  r.ok();
  r.fail({3, {1, 2}, "somewhere", "a", "b"});
  const json j = io::to_json(r);
  EXPECT_FALSE(j.at("pass").get<bool>());
  const Report back = io::report_from_json(j);
  EXPECT_EQ(back.checked, r.checked);
  EXPECT_EQ(back.failures, 1U);
  ASSERT_TRUE(back.first_failure);
  EXPECT_EQ(back.first_failure->indices, (std::vector<int>{1, 2}));
  EXPECT_EQ(back.first_failure->where, "somewhere");
  Report ok{.id = "y"};
  ok.ok();
  EXPECT_TRUE(io::to_json(ok).at("first_counterexample").is_null());
}

TEST(Json, DocumentAndCsv) {
  const json d = io::document("cmd", {{"n", 2}}, {{"pass", true}});
  EXPECT_EQ(d.dump(), R"({"schema":1,"command":"cmd","params":{"n":2},"pass":true})");
  std::ostringstream os;
  os << io::csv_header("label");
  io::csv_rows(os, "0 1", Series::monomial(Scalar::fraction(LaurentPoly(2), LaurentPoly(1) + LaurentPoly::q_pow(1)), {1}, 2));
  EXPECT_EQ(os.str(), "label,z_power,part,v_exponent,re,im\n0 1,1,num,0,2,0\n0 1,1,den,0,1,0\n0 1,1,den,2,1,0\n");
}
