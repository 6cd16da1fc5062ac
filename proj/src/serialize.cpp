#include "majdes/serialize.hpp"

namespace majdes {

nlohmann::json to_json(const QPolynomial& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Int& c : p.coefficients()) coeffs.push_back(c.get_str());
    return {{"min_degree", p.is_zero() ? 0 : p.min_degree()}, {"coeffs", std::move(coeffs)}};
}

QPolynomial qpolynomial_from_json(const nlohmann::json& j) {
    std::vector<Int> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.emplace_back(c.get<std::string>());
    return QPolynomial(j.at("min_degree").get<long>(), std::move(coeffs));
}

nlohmann::json to_json(const BivariatePolynomial& f) {
    nlohmann::json terms = nlohmann::json::object();
    for (const auto& [i, poly] : f.terms()) terms[std::to_string(i)] = to_json(poly);
    return {{"terms", std::move(terms)}};
}

nlohmann::json distribution_json(int n, const std::string& pattern,
                                 const BivariatePolynomial& f) {
    nlohmann::json j = to_json(f);
    j["n"] = n;
    j["pattern"] = pattern;
    return j;
}

}  // namespace majdes
