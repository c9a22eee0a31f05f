#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"
#include "ktower/arith/number_theory.hpp"
#include "ktower/cli/fixtures.hpp"
#include "ktower/cyclotomic/splitting.hpp"
#include "ktower/tower/plan.hpp"
#include "ktower/tower/serialize.hpp"
#include "../support/errors.hpp"
#include "../support/oracles.hpp"
#include "../support/random_integers.hpp"

using namespace ktower;
using ktower::testing::code_of;

namespace {

TowerRequest cm_request(std::uint64_t ell, std::uint64_t p, std::uint64_t N, std::uint64_t d, std::uint64_t c) {
    TowerRequest req;
    req.ell = ell;
    req.p = p;
    req.N = N;
    req.gamma = GammaSpec{p, d, 2, GammaFamily::Abelian, 0, ""};
    req.base = BaseField::cyclotomic(c);
    return req;
}

TowerRequest relative_request(std::uint64_t N) {
    const auto& ex = fixtures::example3();
    TowerRequest req;
    req.ell = 3;
    req.p = 7;
    req.N = N;
    req.gamma = GammaSpec{7, 3, 3, GammaFamily::Nilpotent, 1, ""};
    req.base = BaseField::relative(7, IntPoly::parse(*ex.relative_poly));
    req.checklist = ex.checklist;
    return req;
}

std::string failures_of(const TowerRequest& req) {
    try {
        build_tower_plan(req);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ValidationFailed);
        return e.what();
    }
    FAIL("expected ValidationFailed");
    return "";
}

mpz_class naive_product(const std::vector<Integer>& primes) {
    mpz_class acc = 1;
    for (const auto& q : primes) acc *= mpz_class(q.to_string());
    return acc;
}

}  // namespace

TEST_CASE("t formula") {
    CHECK(compute_t(2, 2, 1, 5) == 42);
    CHECK(compute_t(6, 3, 3, 3) == 60);
    CHECK(compute_t(10, 2, 3, 5) == 130);
    CHECK(compute_t(10, 2, 2, 5) == 90);
}

TEST_CASE("gamma validation") {
    CHECK(validate_gamma({3, 1, 2, GammaFamily::Abelian, 0, ""}).passed());
    CHECK(validate_gamma({7, 3, 3, GammaFamily::Nilpotent, 1, ""}).passed());

    const auto bad = validate_gamma({5, 3, 3, GammaFamily::Nilpotent, 1, ""});
    REQUIRE(bad.failures.size() == 1);
    CHECK(bad.failures[0].constraint.find("p ≢ 1 mod 3") != std::string::npos);
    CHECK(bad.failures[0].citation == "gamma.order3");

    CHECK_FALSE(validate_gamma({3, 3, 2, GammaFamily::Nilpotent, 1, ""}).passed());
    CHECK_FALSE(validate_gamma({7, 2, 3, GammaFamily::Nilpotent, 1, ""}).passed());
    CHECK_FALSE(validate_gamma({7, 3, 3, GammaFamily::Nilpotent, 0, ""}).passed());
    CHECK_FALSE(validate_gamma({3, 1, 4, GammaFamily::Abelian, 0, ""}).passed());
    CHECK_FALSE(validate_gamma({3, 1, 3, GammaFamily::Abelian, 0, ""}).passed());
    CHECK_FALSE(validate_gamma({6, 1, 2, GammaFamily::Abelian, 0, ""}).passed());
    CHECK_FALSE(validate_gamma({5, 2, 3, GammaFamily::Custom, 0, ""}).passed());
    CHECK(validate_gamma({5, 2, 3, GammaFamily::Custom, 0, "⟨a, b⟩"}).passed());
    CHECK(parse_gamma_family("nilpotent") == GammaFamily::Nilpotent);
    CHECK_FALSE(parse_gamma_family("solvable"));

    SUBCASE("every citation resolves") {
        const auto r = validate_gamma({4, 0, 6, GammaFamily::Nilpotent, 0, ""});
        CHECK(r.failures.size() >= 4);
        for (const auto& f : r.failures) CHECK_NOTHROW(cite(f.citation));
        CHECK(r.summary().find("[gamma.") != std::string::npos);
    }
    CHECK(code_of([] { cite("no.such.tag"); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("assumption checklist") {
    const auto report = check_assumption(*fixtures::example3().checklist);
    CHECK(report.passed());
    CHECK(report.p_rational);
    CHECK_FALSE(report.vacuous);

    auto checklist = *fixtures::example3().checklist;
    checklist.unique_prime_above_p = false;
    const auto failed = check_assumption(checklist);
    REQUIRE(failed.failures.size() == 1);
    CHECK(failed.failures[0].citation == "assumption.3");
    CHECK_FALSE(failed.p_rational);

    AssumptionChecklist quadratic;
    quadratic.m = 2;
    const auto vacuous = check_assumption(quadratic);
    CHECK(vacuous.passed());
    CHECK(vacuous.vacuous);
    CHECK_FALSE(vacuous.notes.empty());
}

TEST_CASE("plan for the Q(zeta_3) example") {
    const TowerPlan plan = build_tower_plan(cm_request(5, 3, 2, 1, 3));
    CHECK(plan.t == 42);
    CHECK(plan.q_min == 3);
    std::vector<std::string> primes;
    for (const auto& q : plan.selected_primes) primes.push_back(q.to_string());
    CHECK(primes == fixtures::example1().expected_prime_list);
    CHECK(mpz_class(plan.alpha.to_string()) == naive_product(plan.selected_primes));
    CHECK(plan.places.size() == 42);
    for (std::uint64_t n = 0; n <= 5; ++n) {
        const std::uint64_t pn = static_cast<std::uint64_t>(std::pow(3, n));
        CHECK(plan.layer(n).degree_lower == Integer(40 * pn));
        CHECK(plan.layer(n).ramified_lower == Integer(42 * pn));
    }
    CHECK(verify_plan(plan).passed());

    const FieldEdge* kummer = plan.diagram.find("K(zeta_l)", "L");
    REQUIRE(kummer);
    CHECK(kummer->degree == 5u);
    CHECK(plan.diagram.find("K", "K(zeta_l)")->degree == 4u);
    CHECK(plan.diagram.find("K0", "K")->degree == 2u);
    CHECK(plan.diagram.find("L", "L_inf")->label == "Γ");
    CHECK_FALSE(plan.diagram.find("L", "L_inf")->degree);
    CHECK(plan.diagram.nodes.size() == 7);
}

TEST_CASE("plan for the Q(zeta_9) example") {
    const TowerPlan plan = build_tower_plan(cm_request(5, 3, 10, 3, 9));
    CHECK(plan.t == 130);
    CHECK(plan.selected_primes.size() == 130);
    const auto& printed = fixtures::example2().expected_prime_list;
    for (std::size_t i = 0; i < printed.size(); ++i) CHECK(plan.selected_primes[i].to_string() == printed[i]);
    for (const auto& q : plan.selected_primes) CHECK(testing::naive_order(*q.to_u64() % 9, 9) == 6u);
}

TEST_CASE("plan over the relative cubic base") {
    const TowerPlan plan = build_tower_plan(relative_request(6));
    CHECK(plan.t == 60);
    CHECK(plan.places.size() == 60);
    std::vector<std::uint64_t> primes;
    for (const auto& q : plan.selected_primes) primes.push_back(*q.to_u64());
    CHECK(primes == std::vector<std::uint64_t>{29, 43, 71, 113, 127, 197, 211, 379, 449, 491});
    CHECK(plan.layer(1).ramified_lower == 420);
    CHECK(plan.layer(2).ramified_lower == 2940);
    CHECK(plan.assumption->p_rational);
    CHECK(verify_plan(plan).passed());

    SUBCASE("explicit printed primes are accepted after re-verification") {
        TowerRequest req = relative_request(6);
        std::vector<std::uint64_t> printed;
        for (const auto& q : fixtures::example3().expected_prime_list) printed.push_back(std::stoull(q));
        req.explicit_primes = printed;
        const TowerPlan explicit_plan = build_tower_plan(req);
        CHECK(explicit_plan.places.size() == 60);
        CHECK(explicit_plan.places[0].describe().find("(43, ζ_7 − ") == 0);
        CHECK(verify_plan(explicit_plan).passed());
    }

    SUBCASE("t not divisible by the places per prime") {
        const TowerPlan odd = build_tower_plan(relative_request(7));
        CHECK(odd.t == 61);
        CHECK(odd.places.size() == 61);
        CHECK(odd.selected_primes.size() == 11);
        CHECK_FALSE(odd.notes.empty());
    }

    SUBCASE("bad explicit primes are rejected") {
        TowerRequest req = relative_request(6);
        req.explicit_primes = std::vector<std::uint64_t>{43, 127, 491, 673, 953, 1499, 1583, 2129, 2311, 13};
        CHECK(failures_of(req).find("base.relative-inert") != std::string::npos);
        req.explicit_primes = std::vector<std::uint64_t>{43, 29, 71, 113, 127, 197, 211, 379, 449, 491};
        CHECK(failures_of(req).find("ascending") != std::string::npos);
        req.explicit_primes = std::vector<std::uint64_t>{29, 43};
        CHECK(failures_of(req).find("need 10 rational primes") != std::string::npos);
    }
}

TEST_CASE("plan preconditions") {
    CHECK(code_of([] { build_tower_plan(cm_request(5, 5, 2, 1, 3)); }) == ErrorCode::EqualPrimes);
    CHECK(failures_of(cm_request(2, 3, 2, 1, 3)).find("ℓ = 2") != std::string::npos);
    CHECK(failures_of(cm_request(9, 3, 2, 1, 3)).find("not prime") != std::string::npos);
    CHECK(failures_of(cm_request(5, 3, 0, 1, 3)).find("N must be") != std::string::npos);
    // [Q(ζ_9):Q] = 6 ≠ 2d for d = 1.
    CHECK(failures_of(cm_request(5, 3, 2, 1, 9)).find("base.cm-cyclic") != std::string::npos);
    // (Z/15)^* is not cyclic.
    CHECK(failures_of(cm_request(7, 3, 2, 4, 15)).find("not cyclic") != std::string::npos);
    // 7 splits in Q(ζ_3).
    CHECK(failures_of(cm_request(5, 7, 2, 1, 3)).find("primes above it") != std::string::npos);
    CHECK(failures_of(cm_request(3, 5, 2, 1, 3)).find("tower.degree") != std::string::npos);

    TowerRequest no_checklist = relative_request(6);
    no_checklist.checklist.reset();
    CHECK(failures_of(no_checklist).find("assumption.1") != std::string::npos);

    TowerRequest failed_checklist = relative_request(6);
    failed_checklist.checklist->contains_mu_p = false;
    CHECK(failures_of(failed_checklist).find("assumption.2") != std::string::npos);

    TowerRequest wrong_degree = relative_request(6);
    wrong_degree.base = BaseField::relative(7, IntPoly::parse("x^2 + x + 1"));
    CHECK(failures_of(wrong_degree).find("degree m = 3") != std::string::npos);

    TowerRequest cm_for_cubic = relative_request(6);
    cm_for_cubic.base = BaseField::cyclotomic(7);
    CHECK(failures_of(cm_for_cubic).find("relative base") != std::string::npos);

    TowerRequest gamma_mismatch = cm_request(5, 3, 2, 1, 3);
    gamma_mismatch.gamma.p = 7;
    CHECK(failures_of(gamma_mismatch).find("pro-7") != std::string::npos);
}

TEST_CASE("plan invariants on random parameters") {
    auto& g = testing::rng();
    const std::vector<std::uint64_t> small_primes = {3, 5, 7, 11, 13};
    int built = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const std::uint64_t ell = small_primes[g() % small_primes.size()];
        const std::uint64_t p = small_primes[g() % small_primes.size()];
        if (ell == p) continue;
        const std::uint64_t d = g() % 3 + 1;
        const std::uint64_t N = g() % 20 + 1;
        TowerRequest req = cm_request(ell, p, N, d, 3);
        bool found = false;
        for (std::uint64_t c = 3; c < 200 && !found; ++c) {
            req.base = BaseField::cyclotomic(c);
            found = euler_phi(c) == 2 * d && validate_request(req).passed();
        }
        if (!found) continue;
        const TowerPlan plan = build_tower_plan(req);
        ++built;

        CHECK(plan.t == Integer(N + 2 * d * ell * (ell - 1)));
        std::set<Integer> distinct(plan.selected_primes.begin(), plan.selected_primes.end());
        CHECK(distinct.size() == plan.selected_primes.size());
        CHECK(std::is_sorted(plan.selected_primes.begin(), plan.selected_primes.end()));
        CHECK_FALSE(distinct.count(Integer(p)));
        for (const auto& q : plan.selected_primes) {
            const auto v = *q.to_u64();
            CHECK(testing::naive_order(v % req.base.conductor, req.base.conductor) == euler_phi(req.base.conductor));
            CHECK((plan.alpha % q).is_zero());
            CHECK_FALSE((plan.alpha % (q * q)).is_zero());
        }
        for (std::uint64_t n = 0; n <= 6; ++n) {
            const LayerCounts layer = plan.layer(n);
            CHECK(layer.ramified_lower - layer.degree_lower == Integer(N) * Integer::pow(Integer(p), n));
        }
        std::uint64_t path = 1;
        for (auto [lower, upper] : {std::pair{"K0", "K"}, std::pair{"K", "K(zeta_l)"}, std::pair{"K(zeta_l)", "L"}}) {
            path *= *plan.diagram.find(lower, upper)->degree;
        }
        CHECK(Integer(path * d) == plan.layer(0).degree_lower);
        CHECK(verify_plan(plan).passed());
    }
    CHECK(built > 10);
}

TEST_CASE("plan serialization") {
    const TowerPlan plan = build_tower_plan(cm_request(5, 3, 2, 1, 3));
    const Json doc = plan_to_json(plan, 4);
    CHECK(doc["schema"] == 1);
    CHECK(doc["t"] == "42");
    CHECK(doc["selected_primes"].size() == 42);
    CHECK(doc["selected_primes"][0] == "2");
    CHECK(doc["alpha"] == plan.alpha.to_string());
    CHECK(doc["layers"].size() == 5);
    CHECK(doc["layers"][4]["degree_lower"] == "3240");
    CHECK(doc["diagram"]["edges"].size() == plan.diagram.edges.size());
    CHECK(doc.dump() == plan_to_json(build_tower_plan(cm_request(5, 3, 2, 1, 3)), 4).dump());
    CHECK(doc.begin().key() == "schema");
}
