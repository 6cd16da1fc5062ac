#pragma once

#include <json.hpp>

#include <string>

#include "majdes/perm.hpp"
#include "majdes/qpoly.hpp"

namespace majdes {

/// {"min_degree": 4, "coeffs": ["5","5","5"]}; coefficients travel as decimal
/// strings so arbitrary precision survives JSON.
nlohmann::json to_json(const QPolynomial& p);
QPolynomial qpolynomial_from_json(const nlohmann::json& j);

/// {"terms": {"0": {...}, "1": {...}}}
nlohmann::json to_json(const BivariatePolynomial& f);

/// {"n": 5, "pattern": "321", "terms": {...}}
nlohmann::json distribution_json(int n, const std::string& pattern,
                                 const BivariatePolynomial& f);

}  // namespace majdes
