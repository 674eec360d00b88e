#include "slicecliff/json.hpp"

namespace slicecliff {

nlohmann::json to_json(const Multivector& x)
{
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [b, c] : x.terms())
        j[blade_key(b)] = to_string(c);
    return j;
}

Multivector multivector_from_json(const nlohmann::json& j)
{
    if (!j.is_object())
        throw ParseError("multivector JSON must be an object");
    Multivector x;
    for (const auto& [key, value] : j.items()) {
        if (!value.is_string())
            throw ParseError("coefficient of blade '" + key + "' must be a rational string");
        x.add_term(parse_blade_key(key), parse_rational(value.get<std::string>()));
    }
    return x;
}

nlohmann::json to_json(const BiPoly& f)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, c] : f.terms())
        terms.push_back({{"a", key.first}, {"b", key.second}, {"coef", to_json(c)}});
    return {{"terms", terms}};
}

BiPoly bipoly_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw ParseError("BiPoly JSON needs a \"terms\" array");
    BiPoly f;
    for (const auto& t : j["terms"]) {
        if (!t.contains("a") || !t.contains("b") || !t.contains("coef"))
            throw ParseError("BiPoly term needs a, b and coef");
        f.add_term(t["a"].get<int>(), t["b"].get<int>(), multivector_from_json(t["coef"]));
    }
    BiPoly typed(detect_parity(f));
    typed += f;
    return typed;
}

nlohmann::json to_json(const KernelReport& r)
{
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& p : r.counterexamples)
        failures.push_back(to_string(p));
    return {{"m", r.m},
            {"k", r.k},
            {"deg_max", r.deg_max},
            {"trials", r.trials},
            {"in_kernel_low_degree", r.in_kernel_low_degree},
            {"out_of_kernel_high_degree", r.out_of_kernel_high_degree},
            {"failures", failures},
            {"elapsed_ms", r.elapsed_ms}};
}

}  // namespace slicecliff
