#pragma once

#include <string>

#include <json.hpp>

#include "cycloribbon/hopf/linear_combination.hpp"

namespace cycloribbon {

using Json = nlohmann::ordered_json;

inline Json label_to_json(const Label& l) {
  return Json{{"parts", l.parts}, {"colors", l.colors}};
}

inline Label label_from_json(const Json& j) {
  Label l;
  l.parts = j.at("parts").get<std::vector<int>>();
  l.colors = j.at("colors").get<std::vector<int>>();
  return l;
}

/// {"basis": "MR-R", "terms": [{"coeff": "1", "label": {"parts": [...], "colors": [...]}}, ...]}
/// Terms appear in canonical label order, coefficients as exact decimal strings.
inline Json to_json(const LinearCombination& a) {
  Json terms = Json::array();
  for (const auto& [l, c] : a.terms())
    terms.push_back(Json{{"coeff", to_string(c)}, {"label", label_to_json(l)}});
  return Json{{"basis", std::string(basis_name(a.basis()))}, {"terms", std::move(terms)}};
}

inline LinearCombination linear_combination_from_json(const Json& j) {
  LinearCombination out(parse_basis(j.at("basis").get<std::string>()));
  for (const auto& t : j.at("terms")) {
    auto label = label_from_json(t.at("label"));
    const auto coeff = parse_rational(t.at("coeff").get<std::string>());
    if (coeff == 0) throw std::invalid_argument("zero coefficients are not stored");
    if (out.coefficient(label) != 0) throw std::invalid_argument("repeated label in terms");
    out.add(std::move(label), coeff);
  }
  return out;
}

inline Json to_json(const TensorCombination& t) {
  Json terms = Json::array();
  for (const auto& [key, c] : t.terms())
    terms.push_back(Json{{"coeff", to_string(c)},
                         {"left", label_to_json(key.first)},
                         {"right", label_to_json(key.second)}});
  return Json{{"basis", std::string(basis_name(t.basis()))}, {"terms", std::move(terms)}};
}

inline TensorCombination tensor_combination_from_json(const Json& j) {
  TensorCombination out(parse_basis(j.at("basis").get<std::string>()));
  for (const auto& t : j.at("terms")) {
    auto left = label_from_json(t.at("left"));
    auto right = label_from_json(t.at("right"));
    validate_label(out.basis(), left);
    validate_label(out.basis(), right);
    out.add(std::move(left), std::move(right), parse_rational(t.at("coeff").get<std::string>()));
  }
  return out;
}

}  // namespace cycloribbon
