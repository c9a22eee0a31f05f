#include "ktower/tower/serialize.hpp"

namespace ktower {

Json to_json(const ValidationReport& report) {
    Json failures = Json::array();
    for (const auto& f : report.failures) {
        failures.push_back({{"constraint", f.constraint}, {"citation", f.citation}});
    }
    return {{"passed", report.passed()}, {"failures", failures}, {"notes", report.notes}};
}

Json to_json(const GammaSpec& gamma) {
    Json out = {{"p", gamma.p}, {"d", gamma.d}, {"m", gamma.m}, {"family", std::string(to_string(gamma.family))}};
    if (gamma.family == GammaFamily::Nilpotent) out["s"] = gamma.s;
    if (gamma.family == GammaFamily::Custom) out["presentation"] = gamma.presentation;
    return out;
}

Json to_json(const FieldDiagram& diagram) {
    Json nodes = Json::array();
    for (const auto& n : diagram.nodes) nodes.push_back({{"id", n.id}, {"label", n.label}});
    Json edges = Json::array();
    for (const auto& e : diagram.edges) {
        Json edge = {{"lower", e.lower}, {"upper", e.upper}, {"label", e.label}};
        edge["degree"] = e.degree ? Json(*e.degree) : Json(nullptr);
        edges.push_back(std::move(edge));
    }
    return {{"nodes", nodes}, {"edges", edges}};
}

Json plan_to_json(const TowerPlan& plan, std::uint64_t n_max) {
    Json base = {{"kind", plan.base.kind == BaseField::Kind::Cyclotomic ? "cyclotomic" : "relative"},
                 {"conductor", plan.base.conductor},
                 {"description", plan.base.describe()}};
    if (plan.base.relative_poly) base["polynomial"] = plan.base.relative_poly->to_string();

    Json primes = Json::array();
    for (const auto& q : plan.selected_primes) primes.push_back(q.to_string());
    Json places = Json::array();
    for (const auto& v : plan.places) places.push_back(v.describe());

    Json layers = Json::array();
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        const LayerCounts c = plan.layer(n);
        layers.push_back({{"n", n},
                          {"ramified_lower", c.ramified_lower.to_string()},
                          {"degree_lower", c.degree_lower.to_string()}});
    }

    Json out = {{"schema", kSchemaVersion},
                {"kind", "tower-plan"},
                {"parameters",
                 {{"ell", plan.ell},
                  {"p", plan.p},
                  {"N", plan.N.to_string()},
                  {"requested_N", plan.requested_N().to_string()},
                  {"inflation_s0", plan.inflation_s0},
                  {"q_min", plan.q_min},
                  {"gamma", to_json(plan.gamma)},
                  {"base", base}}},
                {"t", plan.t.to_string()},
                {"selected_primes", primes},
                {"places", places},
                {"alpha", plan.alpha.to_string()},
                {"alpha_digits", plan.alpha.to_string().size()},
                {"diagram", to_json(plan.diagram)},
                {"layers", layers},
                {"notes", plan.notes}};
    if (plan.assumption) {
        Json a = to_json(static_cast<const ValidationReport&>(*plan.assumption));
        a["vacuous"] = plan.assumption->vacuous;
        a["p_rational"] = plan.assumption->p_rational;
        out["assumption"] = a;
    }
    return out;
}

}  // namespace ktower
