#include "ktower/bounds/certificate.hpp"

#include <algorithm>
#include <sstream>

#include "ktower/error.hpp"

namespace ktower {

namespace {

std::string str(const Integer& v) { return v.to_string(); }
std::string str(std::uint64_t v) { return std::to_string(v); }

void trace_row(BoundCertificate& cert, const CertificateRow& r) {
    const TowerPlan& plan = cert.plan;
    const std::string n = str(r.n);
    const std::string pn = str(plan.p) + "^" + n;
    auto add = [&](std::string tag, std::string text) {
        cert.inequality_trace.push_back({r.n, std::move(tag), std::move(text)});
    };
    add("tower.ramified", "T_" + n + " ≥ t·p^n = " + str(plan.t) + "·" + pn + " = " + str(r.T_lower));
    add("tower.degree", "[L_" + n + ":Q] = m·d·ℓ(ℓ−1)·p^n = " + str(plan.degree_factor()) + "·" + pn + " = " +
                            str(r.degree_lower));
    add("bounds.ambiguous", "r_ℓ(Am_st(L_" + n + "/K_" + n + ")) ≥ " + str(r.T_lower) + " − " +
                                str(r.degree_lower) + " = " + str(r.ambiguous_lower));
    add("bounds.class-growth", "r_ℓ(Cl(L_" + n + ")) ≥ " + str(r.class_rank_lower) + " = " + str(plan.N) + "·" + pn);

    const Integer cl_s = r.class_rank_lower - r.s_class_gap;
    add("bounds.s-class-gap", "r_ℓ(Cl_S(L_" + n + ")) ≥ " + str(r.class_rank_lower) + " − 2·" + str(cert.s0) +
                                  "·" + str(plan.ell) + "^" + n + " = " + str(cl_s) +
                                  (cl_s.sign() <= 0 ? " (vacuous)" : ""));
    const Integer selmer = cl_s - Integer(2 * cert.variety.dim_A);
    add("bounds.selmer-class", "r_ℓ(R_ℓ∞(A/L_" + n + ")) ≥ r_ℓ(Cl_S)·r_ℓ(A[ℓ]) − 2·dim A ≥ " + str(cl_s) +
                                   " − " + str(2 * cert.variety.dim_A) + " = " + str(selmer));
    add("bounds.fine-selmer", "paper: N·q^n = " + str(plan.requested_N()) + "·" + str(cert.q) + "^" + n + " = " +
                                  str(r.fine_selmer_paper) + "; conservative: max(" + str(r.fine_selmer_paper) +
                                  " − " + str(2 * cert.variety.dim_A) + ", 0) = " + str(r.fine_selmer_conservative));
}

void add_flags(BoundCertificate& cert) {
    const TowerPlan& plan = cert.plan;
    std::string gap = "the S-class gap is used as an upper bound |r_ℓ(Cl) − r_ℓ(Cl_S)| ≤ 2·s_0·ℓ^n, the direction "
                      "the exact sequence Z^{s_0} → Cl → Cl_S supports; the base ℓ^n is kept as stated although "
                      "the layers have p-power degree";
    if (plan.ell > plan.p) {
        gap += "; with ℓ = " + str(plan.ell) + " > p = " + str(plan.p) +
               " the term 2·s_0·ℓ^n outgrows the N + 2·s_0 inflation, which only adds 2·s_0·p^n";
    }
    cert.flags.push_back({"W-LEMMA-GAP-DIRECTION", "bounds.s-class-gap", gap});
    cert.flags.push_back({"W-SELMER-FINAL-STEP", "bounds.fine-selmer",
                          "N·q^n − 2·dim A ≥ N·q^n fails for dim A ≥ 1; both the stated value (paper) and the "
                          "value the arithmetic supports (conservative) are reported"});
    if (plan.inflation_s0 != cert.s0) {
        cert.flags.push_back({"W-SELMER-NOT-INFLATED", "bounds.inflate",
                              "plan uses N = " + str(plan.N) + " without the + 2·s_0 = " + str(2 * cert.s0) +
                                  " inflation; fine-Selmer rows follow the worked example, not the full chain"});
    }
}

Json json_row(const CertificateRow& r) {
    return {{"n", r.n},
            {"T_lower", str(r.T_lower)},
            {"degree_lower", str(r.degree_lower)},
            {"ambiguous_lower", str(r.ambiguous_lower)},
            {"class_rank_lower", str(r.class_rank_lower)},
            {"s_class_gap", str(r.s_class_gap)},
            {"fine_selmer_lower", {{"paper", str(r.fine_selmer_paper)}, {"conservative", str(r.fine_selmer_conservative)}}}};
}

}  // namespace

BoundCertificate build_certificate(const TowerPlan& plan, const AbelianVarietyDesc& A, std::uint64_t s0,
                                   std::uint64_t n_max, InflationPolicy policy) {
    if (n_max > kMaxCertificateLayers) {
        throw Error(ErrorCode::OutOfRange, "n_max must be <= " + std::to_string(kMaxCertificateLayers));
    }
    BoundCertificate cert{plan, A, s0, 0, policy, {}, {}, {}};
    cert.inequality_trace.push_back({std::nullopt, "tower.t",
                                     "t = N + m·d·ℓ(ℓ−1) = " + str(plan.N) + " + " + str(plan.degree_factor()) +
                                         " = " + str(plan.t)});
    if (plan.inflation_s0 > 0) {
        cert.inequality_trace.push_back({std::nullopt, "bounds.inflate",
                                         "N = " + str(plan.requested_N()) + " + 2·" + str(plan.inflation_s0) +
                                             " = " + str(plan.N)});
    }
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        const LayerCounts layer = plan.layer(n);
        const FineSelmerBound selmer = fine_selmer_lower(plan, A, s0, n, policy);
        cert.q = selmer.q;
        CertificateRow row{n,
                           layer.ramified_lower,
                           layer.degree_lower,
                           ambiguous_lower(layer.ramified_lower, layer.degree_lower),
                           class_rank_lower(plan, n),
                           s_class_gap(s0, plan.ell, n),
                           selmer.conservative,
                           selmer.paper};
        trace_row(cert, row);
        cert.rows.push_back(std::move(row));
    }
    add_flags(cert);
    return cert;
}

Json certificate_to_json(const BoundCertificate& cert) {
    Json rows = Json::array();
    for (const auto& r : cert.rows) rows.push_back(json_row(r));
    Json trace = Json::array();
    for (const auto& e : cert.inequality_trace) {
        Json entry = {{"n", e.n ? Json(*e.n) : Json(nullptr)}, {"citation", e.citation}};
        entry["statement"] = std::string(cite(e.citation).statement);
        entry["text"] = e.text;
        trace.push_back(std::move(entry));
    }
    Json flags = Json::array();
    for (const auto& f : cert.flags) flags.push_back({{"code", f.code}, {"citation", f.citation}, {"text", f.text}});
    Json bad = Json::array();
    for (auto b : cert.variety.bad_primes) bad.push_back(b);
    return {{"schema", kSchemaVersion},
            {"kind", "bound-certificate"},
            {"ell", cert.plan.ell},
            {"p", cert.plan.p},
            {"q", cert.q},
            {"N", str(cert.plan.N)},
            {"requested_N", str(cert.plan.requested_N())},
            {"t", str(cert.plan.t)},
            {"s0", cert.s0},
            {"policy", cert.policy == InflationPolicy::Require ? "require-inflation" : "paper-faithful"},
            {"variety",
             {{"label", cert.variety.label},
              {"dim_A", cert.variety.dim_A},
              {"torsion_nontrivial_at_ell", cert.variety.torsion_nontrivial_at_ell},
              {"bad_primes", bad},
              {"provenance", std::string(to_string(cert.variety.provenance))}}},
            {"rows", rows},
            {"inequality_trace", trace},
            {"flags", flags}};
}

std::string certificate_table(const BoundCertificate& cert) {
    const std::vector<std::string> head = {"n", "T", "[L_n:Q]", "Am_st", "Cl", "Selmer(paper)", "Selmer(cons)"};
    std::vector<std::vector<std::string>> cells = {head};
    for (const auto& r : cert.rows) {
        cells.push_back({str(r.n), str(r.T_lower), str(r.degree_lower), str(r.ambiguous_lower),
                         str(r.class_rank_lower), str(r.fine_selmer_paper), str(r.fine_selmer_conservative)});
    }
    std::vector<std::size_t> width(head.size(), 0);
    for (const auto& row : cells) {
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    std::ostringstream out;
    out << "ℓ = " << cert.plan.ell << ", p = " << cert.plan.p << ", q = " << cert.q << ", N = " << cert.plan.N
        << ", t = " << cert.plan.t << ", s0 = " << cert.s0 << ", A = " << cert.variety.label << "\n";
    for (const auto& row : cells) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "  " : "") << std::string(width[i] - row[i].size(), ' ') << row[i];
        }
        out << "\n";
    }
    for (const auto& f : cert.flags) out << "[" << f.code << "] " << f.text << "\n";
    return out.str();
}

}  // namespace ktower
