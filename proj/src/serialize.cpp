#include "ramopuc/serialize.hpp"

#include "ramopuc/errors.hpp"

namespace ramopuc {

using nlohmann::json;

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

json rationals_to_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(rational_to_json(q));
  return out;
}

std::vector<Rational> rationals_from_json(const json& j) {
  std::vector<Rational> out;
  for (const auto& item : j) out.push_back(rational_from_json(item));
  return out;
}

}  // namespace

json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw InvalidArgument("rational must be encoded as a \"num/den\" string");
  return parse_rational(j.get<std::string>());
}

json poly_to_json(const Poly& p) { return rationals_to_json(p.coeffs()); }

Poly poly_from_json(const json& j) {
  if (!j.is_array()) throw InvalidArgument("polynomial must be a JSON array");
  return Poly(rationals_from_json(j));
}

json system_to_json(const PopucSystem& sys) {
  json phis = json::array();
  for (const auto& p : sys.phis) phis.push_back(poly_to_json(p));
  return {{"family", sys.family},
          {"source", sys.source},
          {"N", sys.n()},
          {"verblunsky", rationals_to_json(sys.verblunsky.values())},
          {"phis", std::move(phis)},
          {"h", rationals_to_json(sys.h)},
          {"delta", rationals_to_json(sys.delta)},
          {"moments", rationals_to_json(sys.moments.values())}};
}

PopucSystem system_from_json(const json& j) {
  return guarded("PopucSystem", [&] {
    PopucSystem sys;
    sys.family = j.at("family").get<std::string>();
    sys.source = j.at("source").get<std::string>();
    sys.verblunsky = VerblunskySequence(rationals_from_json(j.at("verblunsky")));
    if (j.at("N").get<std::size_t>() != sys.n()) throw InvalidArgument("\"N\" disagrees with the Verblunsky length");
    for (const auto& p : j.at("phis")) sys.phis.push_back(poly_from_json(p));
    sys.h = rationals_from_json(j.at("h"));
    sys.delta = rationals_from_json(j.at("delta"));
    sys.moments = MomentSequence(rationals_from_json(j.at("moments")), sys.source);
    return sys;
  });
}

json checks_to_json(const DualChecks& c) {
  return {{"shared_charpoly", c.shared_charpoly},   {"mirror_relation", c.mirror_relation},
          {"mirror_involution", c.mirror_involution}, {"sturm_condition", c.sturm_condition},
          {"h_terminal_equal", c.h_terminal_equal}, {"equal_mass_moments", c.equal_mass_moments}};
}

json dual_to_json(const DualPair& pair) {
  return {{"spec", pair.spec.to_string()},
          {"charpoly", poly_to_json(pair.charpoly)},
          {"ramanujan", system_to_json(pair.ramanujan)},
          {"sturmian", system_to_json(pair.sturmian)},
          {"checks", checks_to_json(pair.checks)}};
}

DualPair dual_from_json(const json& j) {
  return guarded("DualPair", [&] {
    DualPair pair{parse_kronecker_spec(j.at("spec").get<std::string>()), system_from_json(j.at("ramanujan")),
                  system_from_json(j.at("sturmian")), poly_from_json(j.at("charpoly")), {}};
    const auto& c = j.at("checks");
    pair.checks.shared_charpoly = c.at("shared_charpoly").get<bool>();
    pair.checks.mirror_relation = c.at("mirror_relation").get<bool>();
    pair.checks.mirror_involution = c.at("mirror_involution").get<bool>();
    pair.checks.sturm_condition = c.at("sturm_condition").get<bool>();
    pair.checks.h_terminal_equal = c.at("h_terminal_equal").get<bool>();
    pair.checks.equal_mass_moments = c.at("equal_mass_moments").get<bool>();
    return pair;
  });
}

json weights_to_json(const WeightReport& r) {
  json roots = json::array();
  for (const auto& x : r.roots)
    roots.push_back({{"angle", std::to_string(x.angle.numerator) + "/" + std::to_string(x.angle.order)},
                     {"w", x.w},
                     {"tw", x.tw},
                     {"residuals",
                      {{"on_circle", x.on_circle},
                       {"charpoly", x.charpoly_value},
                       {"ramanujan_weight", x.ramanujan_weight},
                       {"sturmian_imag", x.sturmian_imag},
                       {"sturmian_routes", x.sturmian_routes},
                       {"dual_weight", x.dual_weight},
                       {"product", x.product}}},
                     {"positive", x.positive}});
  return {{"digits", r.digits},
          {"tolerance", r.tolerance},
          {"max_residual", r.max_residual},
          {"sturmian_sum_residual", r.sturmian_sum_residual},
          {"passed", r.passed},
          {"roots", std::move(roots)}};
}

json table_to_json(const RamanujanTable& t) {
  json values = json::array();
  for (const auto& v : t.values) values.push_back(to_string(v));
  return {{"modulus", t.modulus}, {"values", std::move(values)}};
}

RamanujanTable table_from_json(const json& j) {
  return guarded("RamanujanTable", [&] {
    RamanujanTable t;
    t.modulus = j.at("modulus").get<std::uint64_t>();
    for (const auto& v : j.at("values")) {
      const Rational q = rational_from_json(v);
      if (q.get_den() != 1) throw InvalidArgument("Ramanujan sums are integers");
      t.values.push_back(q.get_num());
    }
    return t;
  });
}

}  // namespace ramopuc
