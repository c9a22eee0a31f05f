#include "ktower/tower/plan.hpp"

#include <algorithm>

#include "ktower/arith/number_theory.hpp"
#include "ktower/arith/primes.hpp"
#include "ktower/cyclotomic/cyclotomic.hpp"
#include "ktower/cyclotomic/splitting.hpp"
#include "ktower/error.hpp"
#include "ktower/finite_poly/relative.hpp"

namespace ktower {

namespace {

std::string zeta(std::uint64_t c) { return "ζ_" + std::to_string(c); }

// (Z/cZ)^* is cyclic iff c is 1, 2, 4, r^k or 2r^k for an odd prime r.
bool unit_group_cyclic(std::uint64_t c) {
    if (c <= 4) return true;
    auto factors = factor_u64(c);
    if (factors.size() == 1) return factors[0].first != 2;
    return factors.size() == 2 && factors[0].first == 2 && factors[0].second == 1;
}

// Number of primes of Q(ζ_c) above p.
std::uint64_t primes_above_count(std::uint64_t p, std::uint64_t c) {
    while (c % p == 0) c /= p;
    if (c <= 2) return 1;
    return euler_phi(c) / mult_order_u64(p, c);
}

FieldDiagram make_diagram(const TowerPlan& plan) {
    const std::string ell = std::to_string(plan.ell);
    const std::string c = std::to_string(plan.base.conductor);
    FieldDiagram d;
    if (plan.base.kind == BaseField::Kind::Cyclotomic) {
        d.nodes.push_back({"K0", "K_0 = Q(" + zeta(plan.base.conductor) + ")^+"});
        d.nodes.push_back({"K", "K = Q(" + zeta(plan.base.conductor) + ")"});
    } else {
        d.nodes.push_back({"K0", "K_0 = F_0 = Q(" + zeta(plan.base.conductor) + ")"});
        d.nodes.push_back({"K", "K = F = F_0(θ), θ root of " + plan.base.relative_poly->to_string()});
    }
    d.nodes.push_back({"K(zeta_l)", "K(" + zeta(plan.ell) + ")"});
    d.nodes.push_back({"L", "L = K(" + zeta(plan.ell) + ", α^(1/" + ell + "))"});
    d.nodes.push_back({"K_inf", "K_∞"});
    d.nodes.push_back({"K_inf(zeta_l)", "K_∞(" + zeta(plan.ell) + ")"});
    d.nodes.push_back({"L_inf", "L_∞ = K_∞·L"});

    d.edges.push_back({"K0", "K", std::to_string(plan.gamma.m), plan.gamma.m});
    d.edges.push_back({"K", "K(zeta_l)", std::to_string(plan.ell - 1), plan.ell - 1});
    d.edges.push_back({"K(zeta_l)", "L", ell, plan.ell});
    d.edges.push_back({"K", "K_inf", "Γ", std::nullopt});
    d.edges.push_back({"K_inf", "K_inf(zeta_l)", std::to_string(plan.ell - 1), plan.ell - 1});
    d.edges.push_back({"K(zeta_l)", "K_inf(zeta_l)", "Γ", std::nullopt});
    d.edges.push_back({"K_inf(zeta_l)", "L_inf", ell, plan.ell});
    d.edges.push_back({"L", "L_inf", "Γ", std::nullopt});
    return d;
}

void check_base(const TowerRequest& req, ValidationReport& report) {
    const auto& base = req.base;
    const std::uint64_t c = base.conductor;
    const std::uint64_t m = req.gamma.m;
    if (c < 3) {
        report.fail("base conductor must be >= 3, got " + std::to_string(c), "base.cm-cyclic");
        return;
    }
    if (c % req.ell == 0) {
        report.fail("ℓ = " + std::to_string(req.ell) + " divides the base conductor, so [K(ζ_ℓ):K] < ℓ − 1",
                    "tower.degree");
    }
    if (m == 2) {
        if (base.kind != BaseField::Kind::Cyclotomic) {
            report.fail("m = 2 needs a cyclotomic CM base field", "base.cm-cyclic");
            return;
        }
        const std::uint64_t phi = euler_phi(c);
        if (phi != 2 * req.gamma.d) {
            report.fail("[Q(ζ_" + std::to_string(c) + "):Q] = " + std::to_string(phi) + " but 2d = " +
                            std::to_string(2 * req.gamma.d),
                        "base.cm-cyclic");
        }
        if (!unit_group_cyclic(c)) {
            report.fail("Gal(Q(ζ_" + std::to_string(c) + ")/Q) is not cyclic", "base.cm-cyclic");
        }
        if (is_prime_u64(req.p) && primes_above_count(req.p, c) != 1) {
            report.fail("p = " + std::to_string(req.p) + " has " + std::to_string(primes_above_count(req.p, c)) +
                            " primes above it in Q(ζ_" + std::to_string(c) + ")",
                        "base.cm-cyclic");
        }
        return;
    }
    if (base.kind != BaseField::Kind::Relative || !base.relative_poly) {
        report.fail("m > 2 needs a relative base F/F_0 of degree m", "base.relative-inert");
        return;
    }
    if (static_cast<std::uint64_t>(base.relative_poly->degree()) != m || !base.relative_poly->is_monic()) {
        report.fail("defining polynomial " + base.relative_poly->to_string() + " is not monic of degree m = " +
                        std::to_string(m),
                    "assumption.1");
    }
    if (euler_phi(c) < 2 * req.gamma.d) {
        report.fail("[F_0:Q] = " + std::to_string(euler_phi(c)) + " < 2d", "base.layer-degree");
    }
}

std::vector<std::uint64_t> select_primes(const TowerRequest& req, std::uint64_t rational_count) {
    if (req.explicit_primes) return *req.explicit_primes;
    const BaseField& base = req.base;
    auto found = primes_ascending(
        [&](const Integer& q) { return base.selects(*q.to_u64()); }, {Integer(req.p)},
        static_cast<std::size_t>(rational_count));
    std::vector<std::uint64_t> out;
    for (const auto& q : found) out.push_back(*q.to_u64());
    return out;
}

void check_selection(const std::vector<std::uint64_t>& primes, const TowerRequest& req,
                     std::uint64_t rational_count, ValidationReport& report) {
    const char* tag = req.base.kind == BaseField::Kind::Cyclotomic ? "base.inert-splits" : "base.relative-inert";
    if (primes.size() != rational_count) {
        report.fail("need " + std::to_string(rational_count) + " rational primes, got " +
                        std::to_string(primes.size()),
                    "tower.t");
    }
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const std::uint64_t q = primes[i];
        if (i > 0 && primes[i - 1] >= q) report.fail("selected primes must be strictly ascending", "tower.kummer");
        if (q == req.p) report.fail("selected prime equals p = " + std::to_string(q), tag);
        if (!is_prime_u64(q)) {
            report.fail(std::to_string(q) + " is not prime", "tower.kummer");
        } else if (!req.base.selects(q)) {
            report.fail(std::to_string(q) + " fails the inertness predicate for " + req.base.describe(), tag);
        }
    }
}

}  // namespace

Integer compute_t(const Integer& N, std::uint64_t m, std::uint64_t d, std::uint64_t ell) {
    return N + Integer(m) * Integer(d) * Integer(ell) * Integer(ell - 1);
}

BaseField BaseField::cyclotomic(std::uint64_t conductor) { return BaseField{Kind::Cyclotomic, conductor, std::nullopt}; }

BaseField BaseField::relative(std::uint64_t conductor, IntPoly poly) {
    return BaseField{Kind::Relative, conductor, std::move(poly)};
}

std::string BaseField::describe() const {
    if (kind == Kind::Cyclotomic) return "Q(" + zeta(conductor) + ")";
    return "Q(" + zeta(conductor) + ")(θ), θ root of " + relative_poly->to_string();
}

std::uint64_t BaseField::places_per_prime() const { return kind == Kind::Cyclotomic ? 1 : euler_phi(conductor); }

bool BaseField::selects(std::uint64_t q) const {
    if (!is_prime_u64(q) || conductor % q == 0) return false;
    if (kind == Kind::Cyclotomic) return is_inert(q, conductor);
    if (splitting_data(q, conductor).f != 1) return false;
    if ((discriminant(*relative_poly) % Integer(q)).is_zero()) return false;
    return is_inert_in_relative_extension(*relative_poly, q, conductor).all_inert();
}

std::string Place::describe() const {
    if (!root) return "(" + std::to_string(q) + ")";
    return "(" + std::to_string(q) + ", ζ_" + std::to_string(conductor) + " − " + std::to_string(*root) + ")";
}

const FieldEdge* FieldDiagram::find(std::string_view lower, std::string_view upper) const {
    for (const auto& e : edges) {
        if (e.lower == lower && e.upper == upper) return &e;
    }
    return nullptr;
}

Integer TowerPlan::degree_factor() const {
    return Integer(gamma.m) * Integer(gamma.d) * Integer(ell) * Integer(ell - 1);
}

LayerCounts TowerPlan::layer(std::uint64_t n) const {
    const Integer pn = Integer::pow(Integer(p), n);
    return LayerCounts{n, t * pn, degree_factor() * pn};
}

ValidationReport validate_request(const TowerRequest& req, std::optional<AssumptionReport>* assumption_out) {
    ValidationReport report;
    if (!is_prime_u64(req.ell)) report.fail("ℓ = " + std::to_string(req.ell) + " is not prime", "tower.primes");
    if (req.ell == 2) report.fail("ℓ = 2 is not supported; ℓ must be odd", "tower.primes");
    if (req.N < 1) report.fail("N must be >= 1", "tower.t");
    if (req.gamma.p != req.p) {
        report.fail("Γ is pro-" + std::to_string(req.gamma.p) + " but p = " + std::to_string(req.p), "gamma.uniform");
    }
    ValidationReport gamma_report = validate_gamma(req.gamma);
    report.failures.insert(report.failures.end(), gamma_report.failures.begin(), gamma_report.failures.end());

    std::optional<AssumptionReport> assumption;
    if (req.gamma.m > 2) {
        if (!req.checklist) {
            report.fail("m > 2 requires the F/F_0 checklist", "assumption.1");
        } else {
            assumption = check_assumption(*req.checklist);
            report.failures.insert(report.failures.end(), assumption->failures.begin(), assumption->failures.end());
        }
    } else if (req.checklist) {
        assumption = check_assumption(*req.checklist);
    }
    if (report.passed()) check_base(req, report);
    if (assumption_out) *assumption_out = std::move(assumption);
    return report;
}

TowerPlan build_tower_plan(const TowerRequest& req) {
    if (req.ell == req.p) {
        throw Error(ErrorCode::EqualPrimes, "ℓ = p = " + std::to_string(req.p) + "; the construction needs ℓ ≠ p");
    }

    std::optional<AssumptionReport> assumption;
    const ValidationReport report = validate_request(req, &assumption);
    if (!report.passed()) throw Error(ErrorCode::ValidationFailed, report.summary());

    TowerPlan plan;
    plan.ell = req.ell;
    plan.p = req.p;
    plan.N = req.N + Integer(2 * req.inflate_s0);
    plan.inflation_s0 = req.inflate_s0;
    plan.gamma = req.gamma;
    plan.base = req.base;
    plan.assumption = assumption;
    plan.q_min = std::min(req.ell, req.p);
    plan.t = compute_t(plan.N, req.gamma.m, req.gamma.d, req.ell);

    const auto t_small = plan.t.to_u64();
    if (!t_small || *t_small > 1'000'000) throw Error(ErrorCode::OutOfRange, "t = " + plan.t.to_string() + " is too large");
    const std::uint64_t per_prime = req.base.places_per_prime();
    const std::uint64_t rational_count = (*t_small + per_prime - 1) / per_prime;

    const std::vector<std::uint64_t> primes = select_primes(req, rational_count);
    ValidationReport selection;
    check_selection(primes, req, rational_count, selection);
    if (!selection.passed()) throw Error(ErrorCode::ValidationFailed, selection.summary());

    for (std::uint64_t q : primes) {
        plan.selected_primes.emplace_back(q);
        if (req.base.kind == BaseField::Kind::Cyclotomic) {
            plan.places.push_back(Place{q, std::nullopt, req.base.conductor});
            continue;
        }
        for (const auto& ideal : primes_above(q, req.base.conductor)) {
            if (plan.places.size() == *t_small) break;
            plan.places.push_back(Place{q, ideal.root, req.base.conductor});
        }
    }
    if (rational_count * per_prime > *t_small) {
        plan.notes.push_back(std::to_string(rational_count * per_prime - *t_small) +
                             " further places above the last prime also have valuation 1 in α");
    }
    plan.alpha = mul_many(plan.selected_primes);
    plan.diagram = make_diagram(plan);
    if (req.inflate_s0 > 0) {
        plan.notes.push_back("N inflated from " + req.N.to_string() + " to " + plan.N.to_string() + " (s_0 = " +
                             std::to_string(req.inflate_s0) + ")");
    }
    if (req.explicit_primes) plan.notes.push_back("prime list supplied explicitly and re-verified");
    return plan;
}

ValidationReport verify_plan(const TowerPlan& plan) {
    ValidationReport report;
    if (plan.t != compute_t(plan.N, plan.gamma.m, plan.gamma.d, plan.ell)) {
        report.fail("t ≠ N + m·d·ℓ(ℓ−1)", "tower.t");
    }
    if (plan.places.size() != *plan.t.to_u64()) report.fail("number of places v_i ≠ t", "tower.t");
    const char* tag = plan.base.kind == BaseField::Kind::Cyclotomic ? "base.inert-splits" : "base.relative-inert";
    for (std::size_t i = 0; i < plan.selected_primes.size(); ++i) {
        const Integer& q = plan.selected_primes[i];
        if (i > 0 && !(plan.selected_primes[i - 1] < q)) report.fail("primes not strictly ascending", "tower.kummer");
        if (q == plan.p) report.fail("p was selected", tag);
        if (!plan.base.selects(*q.to_u64())) report.fail(q.to_string() + " fails the inertness predicate", tag);
        auto [quot, rem] = divmod(plan.alpha, q);
        if (!rem.is_zero() || (quot % q).is_zero()) {
            report.fail("ord_" + q.to_string() + "(α) ≠ 1", "tower.kummer");
        }
    }
    if (plan.selected_primes.empty() || plan.alpha != mul_many(plan.selected_primes)) {
        report.fail("α is not the product of the selected primes", "tower.kummer");
    }
    if (plan.base.kind == BaseField::Kind::Relative) {
        // Φ_c(root) ≡ 0 mod q certifies each degree-one prime of F_0.
        const IntPoly phi = cyclotomic_polynomial(plan.base.conductor).polynomial;
        for (const auto& place : plan.places) {
            if (!place.root || phi.evaluate_mod(*place.root, place.q) != 0) {
                report.fail(place.describe() + " is not a degree-one prime of F_0", "base.relative-inert");
            }
        }
    }
    return report;
}

}  // namespace ktower
