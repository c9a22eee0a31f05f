#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ktower/cli/commands.hpp"

namespace {

void add_tower_options(CLI::App* cmd, ktower::cli::TowerOptions& o, bool required) {
    cmd->add_option("--ell", o.ell, "odd prime ℓ")->required(required);
    cmd->add_option("--p", o.p, "prime p ≠ ℓ")->required(required);
    cmd->add_option("--N", o.N, "target rank coefficient N ≥ 1");
    cmd->add_option("--d", o.d, "dimension of Γ");
    cmd->add_option("--m", o.m, "order of the fixed-point-free automorphism");
    cmd->add_option("--family", o.family, "abelian | nilpotent | gamma<s> | custom");
    cmd->add_option("--s", o.s, "s for the nilpotent family");
    cmd->add_option("--presentation", o.presentation, "presentation text for the custom family");
    cmd->add_option("--base-conductor", o.base_conductor, "conductor c of the cyclotomic base Q(ζ_c)");
    cmd->add_option("--relative-poly", o.relative_poly, "monic polynomial defining F over Q(ζ_c)");
    cmd->add_option("--checklist", o.checklist, "four 0/1 flags for the F/F_0 hypotheses");
    cmd->add_option("--provenance", o.provenance, "computed | external-database | asserted");
    cmd->add_option("--variety", o.variety, "label of the abelian variety A");
    cmd->add_option("--dim-a", o.dim_a, "dimension of A");
    cmd->add_flag("--torsion", o.torsion, "assert A(Q(ζ_ℓ))[ℓ] ≠ 0");
    cmd->add_option("--bad-primes", o.bad_primes, "primes of bad reduction of A")->delimiter(',');
    cmd->add_option("--s0", o.s0, "number of finite places in S (default: counted over Q(ζ_ℓ))");
    cmd->add_flag("--inflate", o.inflate, "build the tower with N + 2·s0");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Split-prime selection, Kummer tower plans and rank-bound certificates"};
    app.name("ktower");
    app.require_subcommand(1);
    app.fallthrough();

    ktower::cli::GlobalOptions global;
    std::string out_path;
    app.add_flag("--json", global.json, "emit JSON");
    app.add_option("--n-max", global.n_max, "last layer in per-layer tables");
    app.add_option("--out", out_path, "write output to this file");

    std::string example;
    auto* reproduce = app.add_subcommand("reproduce", "rerun a worked example and diff against its printed data");
    reproduce->add_option("example", example, "example1 | example2 | example3")->required();

    ktower::cli::TowerOptions construct_opts;
    auto* construct = app.add_subcommand("construct", "build a tower plan (and certificate when --variety is set)");
    add_tower_options(construct, construct_opts, true);

    ktower::cli::TowerOptions cert_opts;
    std::optional<std::string> cert_example;
    auto* certificate = app.add_subcommand("certificate", "per-layer bound certificate");
    certificate->add_option("--example", cert_example, "use a worked example's data");
    add_tower_options(certificate, cert_opts, false);

    std::uint64_t conductor = 0, prime = 0;
    std::vector<std::string> factors;
    auto* verify = app.add_subcommand("verify-factorization", "multiply factors in Q(ζ_m) and compare to a prime");
    verify->add_option("conductor", conductor)->required();
    verify->add_option("prime", prime)->required();
    verify->add_option("factors", factors)->required();

    std::uint64_t split_q = 0, split_m = 0;
    auto* split = app.add_subcommand("split", "splitting data of q in Q(ζ_m)");
    split->add_option("q", split_q)->required();
    split->add_option("m", split_m)->required();

    std::uint64_t inert_m = 0, count = 0;
    std::vector<std::uint64_t> exclude;
    auto* inert = app.add_subcommand("inert-primes", "ascending primes inert in Q(ζ_m)");
    inert->add_option("m", inert_m)->required();
    inert->add_option("--count", count)->required();
    inert->add_option("--exclude", exclude)->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return ktower::cli::kExitUsage;
    }

    std::ostringstream buffer;
    std::ostream& out = out_path.empty() ? std::cout : buffer;
    int status = ktower::cli::kExitUsage;
    if (*reproduce) {
        status = ktower::cli::cmd_reproduce(example, global, out, std::cerr);
    } else if (*construct) {
        status = ktower::cli::cmd_construct(construct_opts, global, out, std::cerr);
    } else if (*certificate) {
        status = ktower::cli::cmd_certificate(cert_example, cert_opts, global, out, std::cerr);
    } else if (*verify) {
        status = ktower::cli::cmd_verify_factorization(conductor, prime, factors, global, out, std::cerr);
    } else if (*split) {
        status = ktower::cli::cmd_split(split_q, split_m, global, out, std::cerr);
    } else if (*inert) {
        status = ktower::cli::cmd_inert_primes(inert_m, count, exclude, global, out, std::cerr);
    }

    if (!out_path.empty()) {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return ktower::cli::kExitUsage;
        }
        file << buffer.str();
    }
    return status;
}
