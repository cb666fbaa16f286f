#include "qzeta/json_io.hpp"

#include <cstdint>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace qzeta {
namespace {

using nlohmann::json;

json poly_to_json(const IntPoly& p) {
  json out = json::object();
  for (int i = 0; i <= p.degree(); ++i) {
    if (p.coeff(i) == 0) continue;
    out[std::to_string(i)] = p.coeff(i).get_str();
  }
  return out;
}

IntPoly poly_from_json(const json& j) {
  IntPoly p;
  for (const auto& [key, value] : j.items()) {
    const int e = std::stoi(key);
    if (e < 0) throw std::invalid_argument("negative exponent in polynomial record");
    p += IntPoly::monomial(BigInt(value.get<std::string>()), e);
  }
  return p;
}

json rat_to_json(const RatFunc& f) {
  json out = json::object();
  out["num"] = poly_to_json(f.num());
  out["den"] = poly_to_json(f.den());
  out["scale"] = f.scale().get_str();
  return out;
}

RatFunc rat_from_json(const json& j) {
  IntPoly num = poly_from_json(j.at("num"));
  IntPoly den = poly_from_json(j.at("den"));
  BigRat scale = parse_rational(j.at("scale").get<std::string>());
  if (den.is_zero()) {
    throw std::invalid_argument("zero denominator in rational function record");
  }
  return RatFunc(std::move(num), std::move(den), std::move(scale));
}

json form_to_json(const LinearForm& form) {
  json out = json::object();
  out["params"] = {{"A", form.params.A}, {"r", form.params.r}, {"n", form.params.n}};
  out["constant"] = rat_to_json(form.constant_coeff);
  json zeta = json::object();
  for (const auto& [s, coeff] : form.zeta_coeff) {
    zeta[std::to_string(s)] = rat_to_json(coeff);
  }
  out["zeta"] = zeta;
  return out;
}

json parse_or_throw(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("malformed JSON");
  return j;
}

}  // namespace

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

std::string to_json_string(const RatFunc& f) { return rat_to_json(f).dump(2); }

std::string to_json_string(const LinearForm& form) { return form_to_json(form).dump(2); }

std::string to_json_string(const DenominatorReport& report) {
  json out = json::object();
  out["params"] = {
      {"A", report.params.A}, {"r", report.params.r}, {"n", report.params.n}};
  json checks = json::array();
  for (const auto& check : report.checks) {
    checks.push_back({{"claim", check.claim},
                      {"zeta_index", check.zeta_index},
                      {"pass", check.pass},
                      {"witness_digest", check.witness_digest}});
  }
  out["checks"] = checks;
  out["pass"] = report.pass;
  return out.dump(2);
}

RatFunc rat_func_from_json(const std::string& text) {
  try {
    return rat_from_json(parse_or_throw(text));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed rational function record: ") + e.what());
  }
}

LinearForm linear_form_from_json(const std::string& text) {
  try {
    const json j = parse_or_throw(text);
    const json& jp = j.at("params");
    FormParams params{jp.at("A").get<int>(), jp.at("r").get<int>(), jp.at("n").get<int>()};
    validate_form_params(params);
    LinearForm form;
    form.params = params;
    form.constant_coeff = rat_from_json(j.at("constant"));
    for (const auto& [key, value] : j.at("zeta").items()) {
      form.zeta_coeff[std::stoi(key)] = rat_from_json(value);
    }
    return form;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed linear form record: ") + e.what());
  }
}

}  // namespace qzeta
