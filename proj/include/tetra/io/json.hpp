/**
 * @file json.hpp
 * @brief JSON and CSV encodings of scalars, series, states and reports.
 *
 * A scalar is {"num": [[e, re, im], ...], "den": [...], "text": ...} with
 * v-exponents e in increasing order and rational parts as "p/q" strings.
 * Every document written by the tool carries "schema": 1.
 */
#pragma once

#include <json.hpp>
#include <sstream>

#include "tetra/fock.hpp"
#include "tetra/report.hpp"

namespace tetra::io {

using json = nlohmann::ordered_json;

inline constexpr int kSchema = 1;

inline json to_json(const LaurentPoly& p) {
  json out = json::array();
  p.for_each_term([&](int e, const GaussianRational& c) { out.push_back({e, c.re().str(), c.im().str()}); });
  return out;
}

inline LaurentPoly poly_from_json(const json& j) {
  LaurentPoly p;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw std::invalid_argument("polynomial term must be [exponent, re, im]");
    p += LaurentPoly::monomial(GaussianRational(Rational::parse(t[1].get<std::string>()), Rational::parse(t[2].get<std::string>())),
                               t[0].get<int>());
  }
  return p;
}

inline json to_json(const Scalar& s) {
  return {{"num", to_json(s.num())}, {"den", to_json(s.den())}, {"text", s.str()}};
}

inline Scalar scalar_from_json(const json& j) {
  return Scalar::fraction(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

inline json to_json(const Series& s) {
  json c = json::array();
  for (int k = 0; k <= s.order(); ++k) c.push_back(to_json(s.coeff(k)));
  return {{"order", s.order()}, {"coeffs", std::move(c)}};
}

inline Series series_from_json(const json& j) {
  const int order = j.at("order").get<int>();
  Series s(order);
  const auto& c = j.at("coeffs");
  if (static_cast<int>(c.size()) != order + 1) throw std::invalid_argument("series needs order + 1 coefficients");
  for (int k = 0; k <= order; ++k) s += Series::monomial(scalar_from_json(c[static_cast<std::size_t>(k)]), {k}, order);
  return s;
}

template <typename C>
json to_json(const VectorState<C>& v) {
  json out = json::array();
  for (const auto& [m, c] : v.terms()) out.push_back({{"label", m}, {"value", to_json(c)}});
  return out;
}

inline State state_from_json(const json& j) {
  State s;
  for (const auto& t : j) s.add(t.at("label").get<MultiIndex>(), scalar_from_json(t.at("value")));
  return s;
}

inline VectorState<Series> series_state_from_json(const json& j) {
  VectorState<Series> s;
  for (const auto& t : j) s.add(t.at("label").get<MultiIndex>(), series_from_json(t.at("value")));
  return s;
}

inline json to_json(const Report& r) {
  json out{{"id", r.id}, {"pass", r.pass()}, {"checked", r.checked}, {"failures", r.failures}, {"skipped", r.skipped}};
  if (r.first_failure) {
    const auto& f = *r.first_failure;
    out["first_counterexample"] = {{"ordinal", f.ordinal}, {"indices", f.indices}, {"where", f.where},
                                   {"lhs", f.lhs}, {"rhs", f.rhs}};
  } else {
    out["first_counterexample"] = nullptr;
  }
  return out;
}

inline Report report_from_json(const json& j) {
  Report r{.id = j.at("id").get<std::string>()};
  r.checked = j.at("checked").get<std::size_t>();
  r.failures = j.at("failures").get<std::size_t>();
  r.skipped = j.at("skipped").get<std::size_t>();
  const auto& f = j.at("first_counterexample");
  if (!f.is_null())
    r.first_failure = Counterexample{f.at("ordinal").get<std::size_t>(), f.at("indices").get<std::vector<int>>(),
                                     f.at("where").get<std::string>(), f.at("lhs").get<std::string>(),
                                     f.at("rhs").get<std::string>()};
  return r;
}

/// Wraps a payload with the schema version and the command that produced it.
inline json document(const std::string& command, json params, json body) {
  json out{{"schema", kSchema}, {"command", command}, {"params", std::move(params)}};
  for (auto& [k, v] : body.items()) out[k] = v;
  return out;
}

inline std::string csv_header(const std::string& prefix) {
  return prefix + (prefix.empty() ? "" : ",") + "z_power,part,v_exponent,re,im\n";
}

/// One CSV row per nonzero numerator or denominator coefficient of each z-power.
inline void csv_rows(std::ostream& os, const std::string& prefix, const Series& s) {
  for (int k = 0; k <= s.order(); ++k) {
    const Scalar c = s.coeff(k);
    if (c.is_zero()) continue;
    for (const auto& [part, poly] : {std::pair{"num", c.num()}, std::pair{"den", c.den()}})
      poly.for_each_term([&](int e, const GaussianRational& x) {
        os << prefix << (prefix.empty() ? "" : ",") << k << "," << part << "," << e << "," << x.re().str() << ","
           << x.im().str() << "\n";
      });
  }
}

inline std::string label_text(const MultiIndex& m) {
  std::string s;
  for (std::size_t k = 0; k < m.size(); ++k) s += (k ? " " : "") + std::to_string(m[k]);
  return s;
}

}  // namespace tetra::io
