#include <algorithm>
#include <vector>

#include "doctest.h"
#include "ktower/arith/number_theory.hpp"
#include "ktower/cli/fixtures.hpp"
#include "ktower/cyclotomic/cyclotomic.hpp"
#include "ktower/cyclotomic/int_poly.hpp"
#include "ktower/cyclotomic/splitting.hpp"
#include "ktower/cyclotomic/zeta_format.hpp"
#include "../support/errors.hpp"
#include "../support/oracles.hpp"
#include "../support/random_integers.hpp"

using namespace ktower;
using ktower::testing::code_of;

namespace {

IntPoly poly(std::initializer_list<long long> coeffs) {
    std::vector<Integer> c;
    for (auto v : coeffs) c.emplace_back(v);
    return IntPoly(std::move(c));
}

std::vector<long long> small_coeffs(const CycloElement& e) {
    std::vector<long long> out;
    for (const auto& c : e.coeffs()) out.push_back(*c.to_i64());
    return out;
}

}  // namespace

TEST_CASE("integer polynomial parsing and printing") {
    const IntPoly f = IntPoly::parse("x^3 - x^2 - 4*x - 1");
    CHECK(f == poly({-1, -4, -1, 1}));
    CHECK(f.to_string() == "x^3 - x^2 - 4*x - 1");
    CHECK(IntPoly::parse("x^3 - x^2 - 4x - 1") == f);
    CHECK(IntPoly::parse("  7 ") == poly({7}));
    CHECK(IntPoly::parse("-x") == poly({0, -1}));
    CHECK(IntPoly::parse("x^2 + x - x^2") == poly({0, 1}));
    CHECK(IntPoly::parse("x - x").is_zero());
    CHECK(IntPoly().degree() == -1);

    CHECK(code_of([] { IntPoly::parse(""); }) == ErrorCode::ParseError);
    CHECK(code_of([] { IntPoly::parse("x^"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { IntPoly::parse("3 y"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { IntPoly::parse("x x"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { IntPoly().leading(); }) == ErrorCode::ZeroPolynomial);
}

TEST_CASE("resultant and discriminant") {
    CHECK(discriminant(IntPoly::parse("x^3 - x^2 - 4x - 1")) == 169);
    CHECK(discriminant(IntPoly::parse("x^2 + 1")) == -4);
    CHECK(discriminant(IntPoly::parse("x^2 - 5x + 6")) == 1);
    CHECK(discriminant(IntPoly::parse("x^3 - 2")) == -108);
    CHECK(discriminant(IntPoly::parse("2x^2 + 3x + 1")) == 1);
    CHECK(discriminant(IntPoly::parse("x^2 - 2x + 1")) == 0);
    // Res(x - a, g) = g(a).
    CHECK(resultant(IntPoly::parse("x - 3"), IntPoly::parse("x^2 + 1")) == 10);
    CHECK(resultant(IntPoly::parse("x^2 + 1"), IntPoly::parse("x^2 - 1")) == 4);
    CHECK(code_of([] { discriminant(IntPoly::parse("5")); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1).polynomial == poly({-1, 1}));
    CHECK(cyclotomic_polynomial(2).polynomial == poly({1, 1}));
    CHECK(cyclotomic_polynomial(3).polynomial == poly({1, 1, 1}));
    CHECK(cyclotomic_polynomial(7).polynomial == poly({1, 1, 1, 1, 1, 1, 1}));
    CHECK(cyclotomic_polynomial(9).polynomial == poly({1, 0, 0, 1, 0, 0, 1}));
    CHECK(cyclotomic_polynomial(12).polynomial == poly({1, 0, -1, 0, 1}));
    // First cyclotomic polynomial with a coefficient outside {-1, 0, 1}.
    CHECK(cyclotomic_polynomial(105).polynomial.coeff(7) == -2);

    SUBCASE("degree is phi(m) and the product over divisors is x^m - 1") {
        for (std::uint64_t m = 1; m <= 120; ++m) {
            const auto c = cyclotomic_polynomial(m);
            CHECK(c.phi == testing::naive_phi(m));
            CHECK(static_cast<std::uint64_t>(c.polynomial.degree()) == c.phi);
            CHECK(c.polynomial.is_monic());
            IntPoly product = poly({1});
            for (std::uint64_t d = 1; d <= m; ++d) {
                if (m % d == 0) product = product * cyclotomic_polynomial(d).polynomial;
            }
            CHECK(product == IntPoly::monomial(1, m) - poly({1}));
        }
    }
}

TEST_CASE("arithmetic in Q(zeta_m)") {
    const auto k7 = make_cyclotomic_field(7);
    const auto zeta = CycloElement::zeta_power(k7, 1);
    CHECK(CycloElement::zeta_power(k7, 7) == CycloElement::constant(k7, 1));
    CHECK(CycloElement::zeta_power(k7, 10) == CycloElement::zeta_power(k7, 3));

    CycloElement sum = CycloElement::constant(k7, 0);
    for (std::uint64_t k = 0; k < 7; ++k) sum = sum + CycloElement::zeta_power(k7, k);
    CHECK(sum.is_rational());
    CHECK(sum.rational_part() == 0);

    // (1 - ζ) is a unit times the prime above 7: the norm is 7.
    CycloElement norm = CycloElement::constant(k7, 1);
    for (std::uint64_t k = 1; k < 7; ++k) {
        norm = norm * (CycloElement::constant(k7, 1) - CycloElement::zeta_power(k7, k));
    }
    CHECK(norm == CycloElement::constant(k7, 7));
    CHECK(zeta * zeta == CycloElement::zeta_power(k7, 2));

    SUBCASE("ring laws on random elements") {
        auto& g = testing::rng();
        for (std::uint64_t m : {3, 5, 9, 12, 15}) {
            const auto field = make_cyclotomic_field(m);
            auto random_element = [&] {
                std::vector<Integer> c(static_cast<std::size_t>(g() % (2 * m) + 1));
                for (auto& x : c) x = Integer::from_string(testing::random_decimal(12));
                return CycloElement(field, c);
            };
            for (int i = 0; i < 20; ++i) {
                const auto a = random_element(), b = random_element(), c = random_element();
                CHECK(a * b == b * a);
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * (b + c) == a * b + a * c);
                CHECK(a.coeffs().size() == field->phi);
            }
        }
    }

    const auto k5 = make_cyclotomic_field(5);
    CHECK(code_of([&] { (void)(zeta * CycloElement::zeta_power(k5, 1)); }) == ErrorCode::ModulusMismatch);
}

TEST_CASE("zeta rendering and parsing") {
    const auto k7 = make_cyclotomic_field(7);
    const auto x = parse_cyclo("ζ₇⁵ + 2ζ₇³ + ζ₇² + 1", k7);
    CHECK(small_coeffs(x) == std::vector<long long>{1, 0, 1, 2, 0, 1});
    CHECK(render(x) == "ζ₇⁵ + 2ζ₇³ + ζ₇² + 1");
    CHECK(render(x, ZetaStyle::Ascii) == "z^5 + 2*z^3 + z^2 + 1");
    CHECK(parse_cyclo("z^5 + 2*z^3 + z^2 + 1", k7) == x);
    CHECK(parse_cyclo("zeta_7^5 + 2 zeta_7^3 + zeta_7^2 + 1", k7) == x);
    CHECK(parse_cyclo("(ζ₇⁵ + 2ζ₇³ + ζ₇² + 1)", k7) == x);
    CHECK(parse_cyclo("−2ζ₇⁵ − ζ₇⁴ − 1", k7) == parse_cyclo("-2z^5 - z^4 - 1", k7));
    CHECK(parse_cyclo("z^7", k7) == CycloElement::constant(k7, 1));
    CHECK(parse_cyclo("z^6", k7) == parse_cyclo("-z^5 - z^4 - z^3 - z^2 - z - 1", k7));

    SUBCASE("round trip") {
        auto& g = testing::rng();
        const auto k9 = make_cyclotomic_field(9);
        for (int i = 0; i < 50; ++i) {
            std::vector<Integer> c(6);
            for (auto& v : c) v = Integer(static_cast<long long>(g() % 21) - 10);
            const CycloElement e(k9, c);
            CHECK(parse_cyclo(render(e), k9) == e);
            CHECK(parse_cyclo(render(e, ZetaStyle::Ascii), k9) == e);
        }
    }

    CHECK(code_of([&] { parse_cyclo("ζ₅² + 1", k7); }) == ErrorCode::ParseError);
    CHECK(code_of([&] { parse_cyclo("z^", k7); }) == ErrorCode::ParseError);
    CHECK(code_of([&] { parse_cyclo("", k7); }) == ErrorCode::ParseError);
    CHECK(code_of([&] { parse_cyclo("x + 1", k7); }) == ErrorCode::ParseError);
}

TEST_CASE("product of printed factors of 43") {
    const auto& ex = fixtures::example3();
    const auto k7 = make_cyclotomic_field(7);
    std::vector<CycloElement> factors;
    std::vector<std::vector<long long>> raw;
    for (const auto& text : ex.factors) {
        factors.push_back(parse_cyclo(text, k7));
        raw.push_back(small_coeffs(factors.back()));
    }
    const auto check = verify_factorization(k7, 43, factors);
    const auto oracle = testing::cyclotomic_product(raw, 7, {1, 1, 1, 1, 1, 1, 1});
    CHECK(small_coeffs(check.product) == oracle);
    CHECK(oracle == std::vector<long long>{0, 0, -43, 0, 0, 0});
    REQUIRE(check.outcome == FactorizationCheck::Outcome::UnitMultiple);
    CHECK(check.unit->sign == -1);
    CHECK(check.unit->power == 2);

    SUBCASE("each factor has norm 43") {
        for (const auto& f : raw) {
            std::vector<std::vector<long long>> conjugates;
            for (std::size_t k = 1; k < 7; ++k) {
                std::vector<long long> c(7, 0);
                for (std::size_t i = 0; i < f.size(); ++i) c[(i * k) % 7] += f[i];
                conjugates.push_back(c);
            }
            const auto n = testing::cyclotomic_product(conjugates, 7, {1, 1, 1, 1, 1, 1, 1});
            CHECK(n == std::vector<long long>{43, 0, 0, 0, 0, 0});
        }
    }

    SUBCASE("five of the six factors do not give a rational product") {
        std::vector<CycloElement> five(factors.begin(), factors.end() - 1);
        const auto partial = verify_factorization(k7, 43, five);
        CHECK(partial.outcome == FactorizationCheck::Outcome::Mismatch);
        CHECK_FALSE(partial.product.is_rational());
    }

    const auto k3 = make_cyclotomic_field(3);
    const std::vector<CycloElement> seven = {CycloElement::constant(k3, 7)};
    CHECK(verify_factorization(k3, 7, seven).outcome == FactorizationCheck::Outcome::Exact);
}

TEST_CASE("splitting law") {
    CHECK(splitting_data(43, 7).describe() == "e=1 f=1 g=6 (splits completely)");
    CHECK(splitting_data(3, 7).describe() == "e=1 f=6 g=1 (inert)");
    CHECK(splitting_data(2, 7).describe() == "e=1 f=3 g=2 (splits into 2 primes of degree 3)");
    CHECK(splitting_data(2, 9).f == 6);
    CHECK(splitting_data(5, 9).f == 6);
    CHECK(splitting_data(7, 9).f == 3);
    CHECK(is_inert(2, 3));
    CHECK_FALSE(is_inert(7, 3));
    CHECK(splitting_data(5, 2).g == 1);
    CHECK(code_of([] { splitting_data(3, 9); }) == ErrorCode::RamifiedPrime);
    CHECK(code_of([] { splitting_data(7, 7); }) == ErrorCode::RamifiedPrime);
    CHECK(code_of([] { splitting_data(4, 7); }) == ErrorCode::InvalidArgument);

    SUBCASE("f is the order of q and e f g = phi(m)") {
        for (std::uint64_t m = 1; m <= 60; ++m) {
            for (std::uint64_t q : testing::sieve(300)) {
                if (m % q == 0) continue;
                const auto sd = splitting_data(q, m);
                CHECK(sd.e == 1);
                CHECK(sd.f == *testing::naive_order(q, m));
                CHECK(sd.e * sd.f * sd.g == testing::naive_phi(m));
            }
        }
    }
}

TEST_CASE("primes above a totally split prime") {
    const auto ideals = primes_above(43, 7);
    REQUIRE(ideals.size() == 6);
    const IntPoly phi7 = cyclotomic_polynomial(7).polynomial;
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        CHECK(phi7.evaluate_mod(ideals[i].root, 43) == 0);
        if (i > 0) CHECK(ideals[i - 1].root < ideals[i].root);
    }
    // The sixth roots of unity mod 43 other than 1, listed by brute force.
    std::vector<std::uint64_t> roots;
    for (std::uint64_t a = 2; a < 43; ++a) {
        if (testing::naive_order(a, 43) == 7) roots.push_back(a);
    }
    std::vector<std::uint64_t> got;
    for (const auto& ideal : ideals) got.push_back(ideal.root);
    CHECK(got == roots);
    CHECK(ideals[0].to_string().find("(43, ") == 0);
    CHECK(code_of([] { primes_above(2, 7); }) == ErrorCode::NotTotallySplit);
}
