#pragma once

// JSON encodings.  Integers within 53 bits are JSON numbers, larger ones
// decimal strings; parsers accept both.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cremona/curves.hpp"
#include "cremona/error.hpp"
#include "cremona/lattice.hpp"
#include "cremona/nef.hpp"
#include "cremona/polytopes.hpp"
#include "cremona/weyl.hpp"

namespace cremona::io {

using nlohmann::json;

inline json integer_to_json(const Integer& x) {
  static const Integer limit = Integer(1) << 53;
  if (abs(x) < limit) return json(x.convert_to<std::int64_t>());
  return json(x.str());
}

inline Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw PreconditionError("expected an integer or a decimal string, got " + j.dump());
}

inline json to_json(const PicClass& v) {
  json coords = json::array();
  for (const auto& x : v.coords()) coords.push_back(integer_to_json(x));
  return {{"n", v.n()}, {"coords", coords}};
}

inline PicClass pic_class_from_json(const json& j) {
  require(j.is_object() && j.contains("n") && j.contains("coords") && j["coords"].is_array(),
          "PicClass JSON needs \"n\" and \"coords\"");
  const int n = j["n"].get<int>();
  std::vector<Integer> c;
  for (const auto& x : j["coords"]) c.push_back(integer_from_json(x));
  require(c.size() == static_cast<std::size_t>(n) + 1, "PicClass JSON: coords must have n+1 entries");
  return PicClass(std::move(c));
}

inline json to_json(const Generator& g) {
  const auto& idx = g.indices();
  if (g.is_phi()) return {{"phi", {idx[0], idx[1], idx[2]}}};
  return {{"sigma", idx[0]}};
}

inline json to_json(const WeylWord& w) {
  json out = json::array();
  for (const auto& g : w.gens) out.push_back(to_json(g));
  return out;
}

inline WeylWord weyl_word_from_json(const json& j) {
  require(j.is_array(), "WeylWord JSON must be an array");
  WeylWord w;
  for (const auto& g : j) {
    if (g.contains("phi")) {
      const auto& p = g["phi"];
      require(p.is_array() && p.size() == 3, "phi needs three indices");
      w.gens.push_back(Generator::phi(p[0].get<int>(), p[1].get<int>(), p[2].get<int>()));
    } else if (g.contains("sigma")) {
      w.gens.push_back(Generator::sigma(g["sigma"].get<int>()));
    } else {
      throw PreconditionError("unknown generator " + g.dump());
    }
  }
  return w;
}

inline json to_json(const ReductionResult& r) {
  return {{"status", r.in_cone() ? "in_cone" : "not_nef"},
          {"reduced", to_json(r.reduced)},
          {"witness", to_json(r.witness)},
          {"violated", r.violated ? to_json(*r.violated) : json(nullptr)},
          {"iterations", r.iterations}};
}

inline ReductionResult reduction_result_from_json(const json& j) {
  const std::string status = j.at("status").get<std::string>();
  require(status == "in_cone" || status == "not_nef", "unknown reduction status " + status);
  ReductionResult r{status == "in_cone" ? ReductionResult::Status::InFundamentalCone : ReductionResult::Status::NotNef,
                    pic_class_from_json(j.at("reduced")),
                    weyl_word_from_json(j.at("witness")),
                    std::nullopt,
                    std::nullopt,
                    {},
                    0,
                    j.value("iterations", std::size_t{0})};
  if (!j.at("violated").is_null()) r.violated = pic_class_from_json(j["violated"]);
  r.phi_steps = r.witness.phi_count();
  return r;
}

inline json to_json(const NefVerdict& v) {
  json witness;
  if (v.nef && v.word)
    witness = {{"word", to_json(*v.word)}, {"reduced", v.reduced ? to_json(*v.reduced) : json(nullptr)}};
  else if (v.nef)
    witness = nullptr;
  else
    witness = {{"violating", v.violating ? to_json(*v.violating) : json(nullptr)}, {"reason", v.reason}};
  json out{{"verdict", v.nef ? "nef" : "not_nef"}, {"method", v.method.to_string()}, {"witness", witness}};
  if (!v.conclusive()) out["note"] = "necessary condition only: no violation found up to the degree bound";
  return out;
}

inline std::string rational_string(const Rational& q) {
  const Integer den = boost::multiprecision::denominator(q);
  const Integer num = boost::multiprecision::numerator(q);
  return num.str() + "/" + den.str();
}

inline Rational rational_from_string(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s));
  const Integer den = parse_integer(s.substr(slash + 1));
  require(den != 0, "zero denominator");
  return Rational(parse_integer(s.substr(0, slash)), den);
}

inline json to_json(const CartanMatrix& c) {
  json out = json::array();
  for (const auto& row : c) {
    json r = json::array();
    for (const auto& e : row) r.push_back({{"sign", e.sign}, {"cos2", rational_string(e.cos2)}});
    out.push_back(r);
  }
  return out;
}

inline CartanMatrix cartan_from_json(const json& j) {
  require(j.is_array(), "Cartan JSON must be an array of rows");
  CartanMatrix c;
  for (const auto& row : j) {
    c.emplace_back();
    for (const auto& e : row)
      c.back().push_back({e.at("sign").get<int>(), rational_from_string(e.at("cos2").get<std::string>())});
  }
  return c;
}

inline json coords_json(const PicClass& v) {
  json out = json::array();
  for (const auto& x : v.coords()) out.push_back(integer_to_json(x));
  return out;
}

inline json to_json(const std::vector<Ray>& rays) {
  json out = json::array();
  for (const auto& r : rays) out.push_back(coords_json(r.generator));
  return out;
}

inline json to_json(const MinusOneClass& c) {
  json m = json::array();
  for (const auto& x : c.multiplicities()) m.push_back(integer_to_json(x));
  return {{"degree", integer_to_json(c.degree())}, {"multiplicities", m}, {"class", to_json(c.cls)}};
}

}  // namespace cremona::io
