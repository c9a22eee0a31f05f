#include "ktower/cli/commands.hpp"

#include <algorithm>

#include "ktower/arith/number_theory.hpp"
#include "ktower/arith/primes.hpp"
#include "ktower/bounds/abelian_group.hpp"
#include "ktower/cyclotomic/splitting.hpp"
#include "ktower/cyclotomic/zeta_format.hpp"
#include "ktower/error.hpp"
#include "ktower/finite_poly/relative.hpp"
#include "ktower/tower/serialize.hpp"

namespace ktower::cli {

namespace {

constexpr std::uint64_t kMaxConductorSearch = 10'000;

std::string join(const std::vector<Integer>& values, std::size_t limit = SIZE_MAX) {
    std::string out;
    for (std::size_t i = 0; i < values.size() && i < limit; ++i) {
        if (i) out += ", ";
        out += values[i].to_string();
    }
    return out;
}

std::string join_strings(const std::vector<std::string>& values) {
    std::string out;
    for (const auto& v : values) out += (out.empty() ? "" : ", ") + v;
    return out;
}

std::string render_unit(const RootOfUnity& unit, std::uint64_t m) {
    std::string out = unit.sign < 0 ? "−" : "";
    if (unit.power == 0) return out + "1";
    out += "ζ_" + std::to_string(m);
    if (unit.power > 1) out += "^" + std::to_string(unit.power);
    return out;
}

// Warning codes of the form W-EX<k>-... belong to fixture "example<k>".
bool catalogued_for(std::string_view code, const fixtures::Fixture& f) {
    if (!code.starts_with("W-EX")) return false;
    const auto dash = code.find('-', 4);
    return f.id == "example" + std::string(code.substr(4, dash - 4));
}

class Reporter {
public:
    explicit Reporter(Reproduction& r) : r_(r) {}

    void pass(std::string name, std::string detail) { add(std::move(name), CheckStatus::Pass, std::move(detail), ""); }
    void fail(std::string name, std::string detail) { add(std::move(name), CheckStatus::Fail, std::move(detail), ""); }

    // A discrepancy: a warning if catalogued for this example, else a failure.
    void discrepancy(std::string name, const std::string& code, std::string detail) {
        if (catalogued_for(code, *r_.fixture)) {
            r_.warnings.push_back({code, detail});
            add(std::move(name), CheckStatus::Warn, std::move(detail), code);
        } else {
            fail(std::move(name), std::move(detail));
        }
    }

private:
    void add(std::string name, CheckStatus status, std::string detail, std::string code) {
        r_.checks.push_back({std::move(name), status, std::move(detail), std::move(code)});
    }
    Reproduction& r_;
};

TowerRequest fixture_request(const fixtures::Fixture& f) {
    TowerRequest req;
    req.ell = f.ell;
    req.p = f.p;
    req.N = Integer(f.N);
    req.gamma = GammaSpec{f.p, f.d, f.m, f.family, f.s, ""};
    if (f.relative_poly) {
        req.base = BaseField::relative(f.base_conductor, IntPoly::parse(*f.relative_poly));
        std::vector<std::uint64_t> primes;
        for (const auto& q : f.expected_prime_list) primes.push_back(*Integer::from_string(q).to_u64());
        req.explicit_primes = primes;
    } else {
        req.base = BaseField::cyclotomic(f.base_conductor);
    }
    req.checklist = f.checklist;
    return req;
}

void check_t(Reporter& rep, const fixtures::Fixture& f, const TowerPlan& plan) {
    if (plan.t == Integer(f.printed_t)) {
        rep.pass("t", "t = " + plan.t.to_string() + " matches printed \"" + f.printed_t_text + "\"");
        return;
    }
    const std::uint64_t per_d = f.m * f.ell * (f.ell - 1);
    std::string detail = "printed \"" + f.printed_t_text + "\" but N + m·d·ℓ(ℓ−1) = " + std::to_string(f.N) + " + " +
                         std::to_string(f.m) + "·" + std::to_string(f.d) + "·" + std::to_string(f.ell) + "·" +
                         std::to_string(f.ell - 1) + " = " + plan.t.to_string();
    if (f.printed_t > f.N && (f.printed_t - f.N) % per_d == 0) {
        detail += "; the printed value needs d = " + std::to_string((f.printed_t - f.N) / per_d);
    }
    rep.discrepancy("t", "W-EX" + f.id.substr(7) + "-T-FORMULA", detail);
}

void check_prime_list(Reporter& rep, const fixtures::Fixture& f, const TowerPlan& plan) {
    const std::size_t k = f.expected_prime_list.size();
    if (plan.selected_primes.size() < k) {
        rep.fail("prime list", "plan selected " + std::to_string(plan.selected_primes.size()) + " primes, " +
                                   std::to_string(k) + " printed");
        return;
    }
    std::vector<std::string> computed;
    for (std::size_t i = 0; i < k; ++i) computed.push_back(plan.selected_primes[i].to_string());
    const std::string a = join_strings(computed);
    const std::string b = join_strings(f.expected_prime_list);
    if (auto at = first_difference(a, b)) {
        rep.fail("prime list", "first difference at character " + std::to_string(*at) + ": computed [" + a +
                                   "], printed [" + b + "]");
        return;
    }
    std::string detail = std::to_string(k) + " printed primes equal the first " + std::to_string(k) +
                         " primes selected in ascending order";
    if (plan.selected_primes.size() > k) {
        detail += " (the plan uses " + std::to_string(plan.selected_primes.size()) + ")";
    }
    rep.pass("prime list", detail);
}

void check_alpha_product(Reporter& rep, const fixtures::Fixture& f, const TowerPlan& plan) {
    const std::size_t k = f.expected_prime_list.size();
    std::vector<Integer> prefix(plan.selected_primes.begin(),
                                plan.selected_primes.begin() + static_cast<std::ptrdiff_t>(k));
    const Integer computed = mul_many(prefix);
    const std::string c = computed.to_string();
    const auto at = first_difference(c, f.expected_alpha);
    if (!at) {
        rep.pass("alpha", "product of the " + std::to_string(k) + " primes equals the printed α (" +
                              std::to_string(c.size()) + " digits)");
        return;
    }
    std::string detail = "computed " + std::to_string(c.size()) + "-digit product " + c + " differs from printed " +
                         std::to_string(f.expected_alpha.size()) + "-digit α at digit " + std::to_string(*at);
    const Integer printed = Integer::from_string(f.expected_alpha);
    auto [cofactor, rem] = divmod(printed, computed);
    if (rem.is_zero()) {
        // Does the printed value carry exactly the next prime of the same enumeration?
        auto next = primes_ascending([&](const Integer& q) { return plan.base.selects(*q.to_u64()); },
                                     {Integer(plan.p)}, k + 1);
        if (cofactor == next.back()) {
            detail += "; printed α = computed × " + cofactor.to_string() + ", the next prime of the same enumeration (number " +
                      std::to_string(k + 1) + ")";
            rep.discrepancy("alpha", "W-EX" + f.id.substr(7) + "-ALPHA", detail);
            return;
        }
        detail += "; printed α = computed × " + cofactor.to_string();
    }
    rep.fail("alpha", detail);
}

void check_class_bound(Reporter& rep, const fixtures::Fixture& f, const TowerPlan& plan) {
    const std::string printed = std::to_string(f.printed_class_coefficient) + "·" +
                                std::to_string(f.printed_class_base) + "^n";
    const std::string derived = plan.N.to_string() + "·" + std::to_string(plan.p) + "^n";
    if (Integer(f.printed_class_coefficient) == plan.N && f.printed_class_base == plan.p) {
        rep.pass("class-group bound", "printed r_ℓ(Cl(L_n)) ≥ " + printed + " equals N·p^n");
        return;
    }
    rep.discrepancy("class-group bound", "W-EX" + f.id.substr(7) + "-LAYER-BASE",
                    "printed r_ℓ(Cl(L_n)) ≥ " + printed + " but N·p^n = " + derived);
}

void check_dimension(Reporter& rep, const fixtures::Fixture& f) {
    if (f.printed_extension_dimension == 0 || f.printed_extension_dimension == f.d) return;
    rep.discrepancy("dimension", "W-EX" + f.id.substr(7) + "-DIMENSION",
                    "Γ is given as Z_" + std::to_string(f.p) + "^" + std::to_string(f.d) + " (d = " +
                        std::to_string(f.d) + ") but L_∞/L is called a Z_" + std::to_string(f.p) + "^" +
                        std::to_string(f.printed_extension_dimension) + "-extension");
}

void check_relative_example(Reporter& rep, Reproduction& r, const fixtures::Fixture& f) {
    const TowerPlan& plan = r.plan;
    const IntPoly& poly = *plan.base.relative_poly;
    const std::uint64_t c = plan.base.conductor;

    std::size_t places = 0;
    bool all_ok = true;
    std::string bad;
    for (const auto& q : plan.selected_primes) {
        const auto qq = *q.to_u64();
        const SplittingData sd = splitting_data(qq, c);
        const bool inert = is_inert_in_relative_extension(poly, qq, c).all_inert();
        places += primes_above(qq, c).size();
        if (!(sd.e == 1 && sd.f == 1 && sd.g == f.places_per_prime && inert)) {
            all_ok = false;
            bad += " " + q.to_string() + " (" + sd.describe() + (inert ? "" : ", reducible") + ")";
        }
    }
    if (all_ok && places == *plan.t.to_u64()) {
        rep.pass("splitting", std::to_string(plan.selected_primes.size()) + " primes: each e=1 f=1 g=" +
                                  std::to_string(f.places_per_prime) + " in Q(ζ_" + std::to_string(c) + "), " +
                                  poly.to_string() + " irreducible mod each; " + std::to_string(places) +
                                  " places in total");
    } else {
        rep.fail("splitting", "unexpected data:" + bad + "; " + std::to_string(places) + " places");
    }

    auto ascending = primes_ascending([&](const Integer& q) { return plan.base.selects(*q.to_u64()); },
                                      {Integer(plan.p)}, plan.selected_primes.size());
    if (ascending == plan.selected_primes) {
        rep.pass("minimality", "printed primes are the smallest admissible ones");
    } else {
        rep.discrepancy("minimality", "W-EX" + f.id.substr(7) + "-PRIMES-NOT-MINIMAL",
                        "ascending selection gives " + join(ascending) + "; printed " + join(plan.selected_primes));
    }

    const auto field = make_cyclotomic_field(c);
    std::vector<CycloElement> factors;
    for (const auto& text : f.factors) factors.push_back(parse_cyclo(text, field));
    r.factorization = verify_factorization(field, Integer(f.factored_prime), factors);
    const std::string product = render(r.factorization->product);
    switch (r.factorization->outcome) {
        case FactorizationCheck::Outcome::Exact:
            rep.pass("factorization", "product of the " + std::to_string(factors.size()) + " factors is " + product);
            break;
        case FactorizationCheck::Outcome::UnitMultiple:
            rep.discrepancy("factorization", "W-EX" + f.id.substr(7) + "-UNIT",
                            "product of the " + std::to_string(factors.size()) + " factors is " + product + " = " +
                                render_unit(*r.factorization->unit, c) + "·" + std::to_string(f.factored_prime));
            break;
        case FactorizationCheck::Outcome::Mismatch:
            rep.fail("factorization", "product of the factors is " + product);
            break;
    }

    if (plan.assumption && plan.assumption->passed() && plan.assumption->p_rational) {
        rep.pass("assumption", "checklist passes (" + std::string(to_string(f.checklist->provenance)) +
                                   "); F is p-rational");
    } else {
        rep.fail("assumption", "checklist does not pass");
    }
    const FiniteAbelianGroup cl({Integer(f.class_number)});
    const auto rank = ell_rank(cl, f.p);
    if (rank == 0) {
        rep.pass("class number", "Cl(F) of order " + std::to_string(f.class_number) + " has r_" +
                                     std::to_string(f.p) + " = 0, consistent with checklist item 4");
    } else {
        rep.fail("class number", "Cl(F) has nontrivial " + std::to_string(f.p) + "-part");
    }

    const std::string computed = plan.alpha.to_string();
    if (!first_difference(computed, f.expected_alpha)) {
        rep.pass("alpha", "printed α equals the product of the selected primes");
        return;
    }
    const Integer printed = Integer::from_string(f.expected_alpha);
    auto [cofactor, rem] = divmod(printed, plan.alpha);
    std::string detail = "printed α has " + std::to_string(f.expected_alpha.size()) + " digits; product of the " +
                         std::to_string(plan.selected_primes.size()) + " primes is " + computed + " (" +
                         std::to_string(computed.size()) + " digits)";
    if (rem.is_zero()) detail += "; the printed value is that product times a " +
                                 std::to_string(cofactor.to_string().size()) + "-digit cofactor";
    detail += "; α = product is used";
    rep.discrepancy("alpha", "W-EX" + f.id.substr(7) + "-ALPHA", detail);
}

AbelianVarietyDesc fixture_variety(const fixtures::Fixture& f) {
    AbelianVarietyDesc a;
    a.label = f.variety_label;
    a.dim_A = f.variety_dim;
    a.torsion_nontrivial_at_ell = true;
    a.bad_primes = f.variety_bad_primes;
    a.provenance = Provenance::Asserted;
    return a;
}

int report_error(const Error& e, const GlobalOptions& global, std::ostream& out, std::ostream& err) {
    if (global.json) {
        Json doc = {{"schema", kSchemaVersion},
                    {"kind", "error"},
                    {"code", std::string(to_string(e.code()))},
                    {"message", e.what()}};
        out << doc.dump(2) << "\n";
    }
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::ParseError ? kExitUsage : kExitFailure;
}

template <typename F>
int guarded(const GlobalOptions& global, std::ostream& out, std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const Error& e) {
        return report_error(e, global, out, err);
    }
}

Json checks_json(const Reproduction& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json entry = {{"name", c.name}, {"status", std::string(to_string(c.status))}, {"detail", c.detail}};
        if (!c.warning.empty()) entry["warning"] = c.warning;
        checks.push_back(std::move(entry));
    }
    return checks;
}

Json warnings_json(const std::vector<Warning>& warnings) {
    Json out = Json::array();
    for (const auto& w : warnings) {
        out.push_back({{"code", w.code}, {"summary", std::string(warning_info(w.code).summary)}, {"detail", w.detail}});
    }
    return out;
}

std::string layer_table(const TowerPlan& plan, std::uint64_t n_max) {
    std::string out = "n  ramified_lower  degree_lower  class_rank_lower\n";
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        const LayerCounts c = plan.layer(n);
        out += std::to_string(n) + "  " + c.ramified_lower.to_string() + "  " + c.degree_lower.to_string() + "  " +
               class_rank_lower(plan, n).to_string() + "\n";
    }
    return out;
}

void print_plan_text(const TowerPlan& plan, std::uint64_t n_max, std::ostream& out) {
    out << "ℓ = " << plan.ell << ", p = " << plan.p << ", N = " << plan.N << ", Γ = " << plan.gamma.describe()
        << ", m = " << plan.gamma.m << "\n";
    out << "K = " << plan.base.describe() << "\n";
    out << "t = " << plan.t << "\n";
    out << "primes (" << plan.selected_primes.size() << "): " << join(plan.selected_primes) << "\n";
    if (plan.base.kind == BaseField::Kind::Relative) out << "places: " << plan.places.size() << "\n";
    out << "alpha = " << plan.alpha << "\n";
    for (const auto& e : plan.diagram.edges) out << "  " << e.lower << " ⊂ " << e.upper << " : " << e.label << "\n";
    for (const auto& note : plan.notes) out << "note: " << note << "\n";
    out << layer_table(plan, n_max);
}

// Smallest conductor c for which Q(ζ_c) passes the m = 2 base checks.
std::optional<std::uint64_t> default_cm_conductor(TowerRequest req) {
    for (std::uint64_t c = 3; c <= kMaxConductorSearch; ++c) {
        if (c % 4 == 2 || euler_phi(c) != 2 * req.gamma.d) continue;
        req.base = BaseField::cyclotomic(c);
        if (validate_request(req).passed()) return c;
    }
    return std::nullopt;
}

GammaSpec parse_gamma(const TowerOptions& o) {
    GammaSpec g{o.p, o.d, o.m, GammaFamily::Abelian, 0, o.presentation};
    const std::string& fam = o.family;
    if (fam.starts_with("gamma") && fam.size() > 5) {
        g.family = GammaFamily::Nilpotent;
        auto s = Integer::from_string(fam.substr(5)).to_u64();
        if (!s) throw Error(ErrorCode::ParseError, "bad family " + fam);
        g.s = *s;
        return g;
    }
    auto family = parse_gamma_family(fam);
    if (!family) throw Error(ErrorCode::ParseError, "unknown family '" + fam + "'");
    g.family = *family;
    if (g.family == GammaFamily::Nilpotent) g.s = o.s;
    return g;
}

AssumptionChecklist parse_checklist(const TowerOptions& o, const std::string& base_desc) {
    const std::string& flags = *o.checklist;
    if (flags.size() != 4 || flags.find_first_not_of("01") != std::string::npos) {
        throw Error(ErrorCode::ParseError, "checklist must be four 0/1 flags, got '" + flags + "'");
    }
    auto provenance = parse_provenance(o.provenance);
    if (!provenance) throw Error(ErrorCode::ParseError, "unknown provenance '" + o.provenance + "'");
    AssumptionChecklist c;
    c.m = o.m;
    c.base_field_desc = base_desc;
    c.f0_totally_imaginary = flags[0] == '1';
    c.contains_mu_p = flags[1] == '1';
    c.unique_prime_above_p = flags[2] == '1';
    c.p_part_of_p_class_group_trivial = flags[3] == '1';
    c.provenance = *provenance;
    return c;
}

std::optional<AbelianVarietyDesc> variety_from(const TowerOptions& o) {
    if (!o.variety) return std::nullopt;
    AbelianVarietyDesc a;
    a.label = *o.variety;
    a.dim_A = o.dim_a;
    a.torsion_nontrivial_at_ell = o.torsion;
    a.bad_primes = {o.bad_primes.begin(), o.bad_primes.end()};
    a.provenance = Provenance::Asserted;
    return a;
}

std::uint64_t resolve_s0(const TowerOptions& o) {
    if (o.s0) return *o.s0;
    return count_s0(o.ell, o.p, {o.bad_primes.begin(), o.bad_primes.end()});
}

}  // namespace

std::string_view to_string(CheckStatus status) noexcept {
    switch (status) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Warn: return "warn";
        case CheckStatus::Fail: return "fail";
    }
    return "?";
}

bool Reproduction::passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Fail; });
}

std::optional<std::size_t> first_difference(std::string_view a, std::string_view b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return i;
    }
    if (a.size() != b.size()) return n;
    return std::nullopt;
}

Reproduction run_reproduction(const fixtures::Fixture& f, std::uint64_t n_max) {
    Reproduction r;
    r.fixture = &f;
    Reporter rep(r);
    try {
        r.plan = build_tower_plan(fixture_request(f));
    } catch (const Error& e) {
        rep.fail("plan", e.what());
        return r;
    }
    const ValidationReport verified = verify_plan(r.plan);
    if (verified.passed()) {
        rep.pass("plan invariants", "t, places, predicate and ord_v(α) = 1 re-verified");
    } else {
        rep.fail("plan invariants", verified.summary());
    }

    check_t(rep, f, r.plan);
    check_dimension(rep, f);
    if (f.relative_poly) {
        check_relative_example(rep, r, f);
    } else {
        check_prime_list(rep, f, r.plan);
        check_alpha_product(rep, f, r.plan);
    }
    check_class_bound(rep, f, r.plan);

    const AbelianVarietyDesc variety = fixture_variety(f);
    const std::uint64_t s0 = count_s0(f.ell, f.p, variety.bad_primes);
    r.certificate = build_certificate(r.plan, variety, s0, n_max, InflationPolicy::PaperFaithful);
    for (const auto& flag : r.certificate->flags) r.warnings.push_back({flag.code, flag.text});
    rep.pass("certificate", "rows n = 0.." + std::to_string(n_max) + ", s0 = " + std::to_string(s0));
    return r;
}

TowerRequest make_request(const TowerOptions& o) {
    TowerRequest req;
    req.ell = o.ell;
    req.p = o.p;
    req.N = Integer::from_string(o.N);
    req.gamma = parse_gamma(o);
    if (o.inflate) req.inflate_s0 = resolve_s0(o);

    if (o.m == 2 && !o.relative_poly) {
        if (o.base_conductor) {
            req.base = BaseField::cyclotomic(*o.base_conductor);
        } else {
            req.base = BaseField::cyclotomic(3);
            if (auto c = default_cm_conductor(req)) req.base = BaseField::cyclotomic(*c);
        }
        if (o.checklist) req.checklist = parse_checklist(o, req.base.describe());
        return req;
    }
    if (o.relative_poly) {
        if (!o.base_conductor) throw Error(ErrorCode::ParseError, "--relative-poly needs --base-conductor");
        req.base = BaseField::relative(*o.base_conductor, IntPoly::parse(*o.relative_poly));
        if (o.checklist) req.checklist = parse_checklist(o, req.base.describe());
        return req;
    }
    for (const fixtures::Fixture* f : fixtures::all()) {
        if (f->relative_poly && f->m == o.m && f->p == o.p &&
            (!o.base_conductor || *o.base_conductor == f->base_conductor)) {
            req.base = BaseField::relative(f->base_conductor, IntPoly::parse(*f->relative_poly));
            req.checklist = o.checklist ? parse_checklist(o, req.base.describe()) : f->checklist;
            return req;
        }
    }
    throw Error(ErrorCode::ParseError, "m > 2 needs --base-conductor, --relative-poly and --checklist");
}

int cmd_reproduce(std::string_view example_id, const GlobalOptions& global, std::ostream& out, std::ostream& err) {
    const fixtures::Fixture* f = fixtures::find(example_id);
    if (!f) {
        err << "error: unknown example '" << example_id << "' (example1, example2, example3)\n";
        return kExitUsage;
    }
    return guarded(global, out, err, [&] {
        const Reproduction r = run_reproduction(*f, global.n_max);
        const std::string status = !r.passed() ? "fail" : r.warnings.empty() ? "pass" : "pass-with-warnings";
        if (global.json) {
            Json doc = {{"schema", kSchemaVersion},
                        {"kind", "reproduction"},
                        {"example", f->id},
                        {"status", status},
                        {"checks", checks_json(r)},
                        {"warnings", warnings_json(r.warnings)}};
            if (!r.plan.t.is_zero()) doc["plan"] = plan_to_json(r.plan, global.n_max);
            if (r.certificate) doc["certificate"] = certificate_to_json(*r.certificate);
            out << doc.dump(2) << "\n";
        } else {
            out << f->id << ": ℓ = " << f->ell << ", p = " << f->p << ", N = " << f->N << ", d = " << f->d
                << ", m = " << f->m << "\n";
            for (const auto& c : r.checks) {
                std::string tag = c.status == CheckStatus::Pass   ? "PASS"
                                  : c.status == CheckStatus::Fail ? "FAIL"
                                                                  : "WARN " + c.warning;
                out << "[" << tag << "] " << c.name << ": " << c.detail << "\n";
            }
            if (r.certificate) out << "\n" << certificate_table(*r.certificate);
            out << "status: " << status << "\n";
        }
        return r.passed() ? kExitOk : kExitFailure;
    });
}

int cmd_construct(const TowerOptions& options, const GlobalOptions& global, std::ostream& out, std::ostream& err) {
    return guarded(global, out, err, [&] {
        const TowerPlan plan = build_tower_plan(make_request(options));
        const ValidationReport verified = verify_plan(plan);
        if (!verified.passed()) throw Error(ErrorCode::ValidationFailed, verified.summary());
        std::optional<BoundCertificate> cert;
        if (auto variety = variety_from(options)) {
            const auto policy = options.inflate ? InflationPolicy::Require : InflationPolicy::PaperFaithful;
            cert = build_certificate(plan, *variety, resolve_s0(options), global.n_max, policy);
        }
        if (global.json) {
            Json doc = {{"schema", kSchemaVersion}, {"kind", "construction"}, {"plan", plan_to_json(plan, global.n_max)}};
            doc["certificate"] = cert ? certificate_to_json(*cert) : Json(nullptr);
            out << doc.dump(2) << "\n";
        } else {
            print_plan_text(plan, global.n_max, out);
            if (cert) out << "\n" << certificate_table(*cert);
        }
        return kExitOk;
    });
}

int cmd_certificate(const std::optional<std::string>& example_id, const TowerOptions& options,
                    const GlobalOptions& global, std::ostream& out, std::ostream& err) {
    return guarded(global, out, err, [&] {
        std::optional<BoundCertificate> cert;
        if (example_id) {
            const fixtures::Fixture* f = fixtures::find(*example_id);
            if (!f) throw Error(ErrorCode::ParseError, "unknown example '" + *example_id + "'");
            const TowerPlan plan = build_tower_plan(fixture_request(*f));
            const AbelianVarietyDesc variety = fixture_variety(*f);
            cert = build_certificate(plan, variety, count_s0(f->ell, f->p, variety.bad_primes), global.n_max,
                                     InflationPolicy::PaperFaithful);
        } else {
            auto variety = variety_from(options);
            if (!variety) throw Error(ErrorCode::ParseError, "certificate needs --example or --variety");
            const TowerPlan plan = build_tower_plan(make_request(options));
            const auto policy = options.inflate ? InflationPolicy::Require : InflationPolicy::PaperFaithful;
            cert = build_certificate(plan, *variety, resolve_s0(options), global.n_max, policy);
        }
        if (global.json) {
            out << certificate_to_json(*cert).dump(2) << "\n";
        } else {
            out << certificate_table(*cert);
            for (const auto& e : cert->inequality_trace) {
                out << "  " << (e.n ? "n=" + std::to_string(*e.n) : std::string("all")) << " [" << e.citation
                    << "] " << e.text << "\n";
            }
        }
        return kExitOk;
    });
}

int cmd_verify_factorization(std::uint64_t conductor, std::uint64_t prime, const std::vector<std::string>& factors,
                             const GlobalOptions& global, std::ostream& out, std::ostream& err) {
    return guarded(global, out, err, [&] {
        if (factors.empty()) throw Error(ErrorCode::ParseError, "at least one factor is required");
        const auto field = make_cyclotomic_field(conductor);
        std::vector<CycloElement> parsed;
        for (const auto& text : factors) parsed.push_back(parse_cyclo(text, field));
        const FactorizationCheck check = verify_factorization(field, Integer(prime), parsed);
        const std::string product = render(check.product);
        std::string status = "mismatch";
        std::vector<Warning> warnings;
        if (check.outcome == FactorizationCheck::Outcome::Exact) {
            status = "exact";
        } else if (check.outcome == FactorizationCheck::Outcome::UnitMultiple) {
            status = "unit-multiple";
            warnings.push_back({"W-EX3-UNIT", "product = " + render_unit(*check.unit, conductor) + "·" +
                                                  std::to_string(prime)});
        }
        if (global.json) {
            Json doc = {{"schema", kSchemaVersion},
                        {"kind", "factorization"},
                        {"conductor", conductor},
                        {"prime", std::to_string(prime)},
                        {"factor_count", parsed.size()},
                        {"product", product},
                        {"product_ascii", render(check.product, ZetaStyle::Ascii)},
                        {"rational", check.product.is_rational()},
                        {"status", status},
                        {"warnings", warnings_json(warnings)}};
            if (check.unit) doc["unit"] = render_unit(*check.unit, conductor);
            out << doc.dump(2) << "\n";
        } else {
            out << "product mod Φ_" << conductor << " of " << parsed.size() << " factors: " << product << "\n";
            for (const auto& w : warnings) out << "[" << w.code << "] " << w.detail << "\n";
            out << "status: " << status << "\n";
        }
        return check.outcome == FactorizationCheck::Outcome::Mismatch ? kExitFailure : kExitOk;
    });
}

int cmd_split(std::uint64_t q, std::uint64_t m, const GlobalOptions& global, std::ostream& out, std::ostream& err) {
    return guarded(global, out, err, [&] {
        const SplittingData sd = splitting_data(q, m);
        if (global.json) {
            Json doc = {{"schema", kSchemaVersion}, {"kind", "splitting"}, {"q", q},         {"m", m},
                        {"e", sd.e},                {"f", sd.f},           {"g", sd.g},      {"summary", sd.describe()}};
            out << doc.dump(2) << "\n";
        } else {
            out << sd.describe() << "\n";
        }
        return kExitOk;
    });
}

int cmd_inert_primes(std::uint64_t m, std::uint64_t count, const std::vector<std::uint64_t>& exclude,
                     const GlobalOptions& global, std::ostream& out, std::ostream& err) {
    return guarded(global, out, err, [&] {
        if (m < 1) throw Error(ErrorCode::ParseError, "m must be >= 1");
        std::set<Integer> excluded;
        for (auto q : exclude) excluded.insert(Integer(q));
        const auto primes = primes_ascending(
            [&](const Integer& q) {
                const auto v = *q.to_u64();
                return m % v != 0 && is_inert(v, m);
            },
            excluded, count);
        if (global.json) {
            Json list = Json::array();
            for (const auto& q : primes) list.push_back(q.to_string());
            Json doc = {{"schema", kSchemaVersion}, {"kind", "inert-primes"}, {"m", m}, {"count", count},
                        {"exclude", exclude},       {"primes", list}};
            out << doc.dump(2) << "\n";
        } else {
            std::string line;
            for (const auto& q : primes) line += (line.empty() ? "" : " ") + q.to_string();
            out << line << "\n";
        }
        return kExitOk;
    });
}

}  // namespace ktower::cli
