#include "weylhom/json_io.hpp"

#include <stdexcept>

namespace weylhom {

using nlohmann::json;

json homelement_to_json(const HomElement& h) {
  json terms = json::array();
  for (const auto& [tab, c] : h.terms()) {
    terms.push_back({{"tableau", tab.to_text()}, {"coeff", c.to_string()}});
  }
  return json{{"shape", h.shape()}, {"type", h.type()}, {"terms", std::move(terms)}};
}

HomElement homelement_from_json(const json& j, const FieldPtr& field) {
  if (!j.is_object() || !j.contains("shape") || !j.contains("type") || !j.contains("terms"))
    throw std::invalid_argument("hom element json: expected shape, type, and terms");
  Partition shape = j.at("shape").get<std::vector<int>>();
  Composition type = j.at("type").get<std::vector<int>>();
  HomElement h(shape, type, field);
  for (const auto& term : j.at("terms")) {
    Tableau tab = Tableau::from_text(term.at("tableau").get<std::string>());
    if (tab.num_values() < static_cast<int>(type.size()))
      tab = tab.padded_to_values(static_cast<int>(type.size()));
    Scalar c = field->parse_scalar(term.at("coeff").get<std::string>());
    h.add_term(tab, c);
  }
  return h;
}

json kernel_to_json(const KernelResult& k) {
  json index = json::array();
  for (const auto& tab : k.index) index.push_back(tab.to_text());
  json basis = json::array();
  for (const auto& v : k.basis) {
    json row = json::array();
    for (const auto& c : v) row.push_back(c.to_string());
    basis.push_back(std::move(row));
  }
  return json{{"dimension", k.dimension}, {"index", std::move(index)}, {"basis", std::move(basis)}};
}

json membership_to_json(const MembershipReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"d", c.d},
                      {"t", c.t},
                      {"vanishes", c.vanishes},
                      {"residual_terms", c.residual_terms}});
  }
  return json{{"member", r.member}, {"checks", std::move(checks)}};
}

}  // namespace weylhom
