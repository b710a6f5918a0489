/*
   Copyright 2026 The qbounds Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// qbounds: numerical characters, genus bounds and degree-bound derivations.
//
// Exit codes: 0 verified/derived, 1 a mathematical check failed, 2 usage error.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qbounds/report.hpp"

namespace {

using namespace qbounds;

int emit(const ReportDocument& doc, bool as_json) {
    if (as_json) {
        std::cout << to_json(doc).dump(2) << "\n";
    } else {
        std::cout << render_text(doc);
    }
    return doc.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical characters of plane point sets and degree bounds for surfaces on quartics"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    app.set_version_flag("--version", std::string(kVersion));

    bool as_json = false;
    app.add_flag("--json", as_json, "Emit the JSON report instead of a table");

    Integer chars_degree = 0, chars_sigma = 0;
    auto* chars = app.add_subcommand("chars", "List the connected characters of a degree and length");
    chars->add_option("--degree,-d", chars_degree, "Degree d")->required()->check(CLI::PositiveNumber);
    chars->add_option("--sigma,-s", chars_sigma, "Length sigma")->required()->check(CLI::PositiveNumber);

    Integer genus_from = 0, genus_to = 0, genus_s = 4;
    std::optional<Integer> genus_degree, genus_mu;
    auto* genus_cmd = app.add_subcommand("genus", "Maximal genus G(d,s), cross-checked against characters");
    genus_cmd->add_option("--degree,-d", genus_degree, "A single degree");
    genus_cmd->add_option("--from", genus_from, "First degree of a table");
    genus_cmd->add_option("--to", genus_to, "Last degree of a table");
    genus_cmd->add_option("--surface-degree,-s", genus_s, "Surface degree s")->check(CLI::PositiveNumber);
    genus_cmd->add_option("--mu", genus_mu, "Singularity invariant mu; adds the Jacobi genus and delta (s = 4)");

    std::string poly_family = "rho";
    Integer poly_k = 0, poly_delta = 0, poly_r = 0, poly_pg = 0;
    auto* poly = app.add_subcommand("poly", "Evaluate a lower-bound polynomial for h^2(I_S(k))");
    poly->add_option("--family,-f", poly_family, "rho | lambda | phi | riemann-roch")
        ->check(CLI::IsMember({"rho", "lambda", "phi", "riemann-roch"}));
    poly->add_option("--k,-k", poly_k, "k")->required()->check(CLI::PositiveNumber);
    poly->add_option("--delta", poly_delta, "Genus defect delta")->check(CLI::NonNegativeNumber);
    poly->add_option("--r,-r", poly_r, "Residue r in d = 4k + r")->check(CLI::Range(0, 3));
    poly->add_option("--p-g", poly_pg, "Geometric genus (riemann-roch family only)")->check(CLI::NonNegativeNumber);

    std::optional<Integer> bounds_r;
    bool bounds_all = false;
    std::string bounds_assumption;
    Integer mu_cap = kDefaultMuCap;
    unsigned jobs = 1;
    auto* bounds = app.add_subcommand("bounds", "Derive the degree bound with a replayable trace");
    auto* r_opt = bounds->add_option("--r,-r", bounds_r, "Residue r in d = 4k + r")->check(CLI::Range(0, 3));
    auto* all_opt = bounds->add_flag("--all", bounds_all, "All four residues");
    r_opt->excludes(all_opt);
    bounds->add_option("--assumption,-a", bounds_assumption, "pg0 | omega")
        ->required()
        ->check(CLI::IsMember({"pg0", "omega"}));
    bounds->add_option("--mu-cap", mu_cap, "Upper bound on mu for the quartic")->check(CLI::NonNegativeNumber);
    bounds->add_option("--jobs,-j", jobs, "Derive residues concurrently")->check(CLI::PositiveNumber);

    std::string corrupt;
    auto* verify = app.add_subcommand("verify", "Run the golden suite");
    verify->add_option("--corrupt", corrupt, "Test mode: corrupt one family's coefficients")
        ->check(CLI::IsMember({"rho", "lambda", "phi"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*chars) return emit(cmd_chars(chars_degree, chars_sigma), as_json);
        if (*genus_cmd) {
            if (genus_degree) genus_from = genus_to = *genus_degree;
            if (genus_from <= 0 || genus_to <= 0) {
                std::cerr << "genus: give --degree or both --from and --to\n";
                return kExitUsage;
            }
            return emit(cmd_genus(genus_from, genus_to, genus_s, genus_mu), as_json);
        }
        if (*poly) {
            return emit(cmd_poly(parse_family(poly_family), poly_k, poly_delta, CaseResidue(poly_r), Rational(poly_pg)),
                        as_json);
        }
        if (*bounds) {
            if (!bounds_all && !bounds_r) {
                std::cerr << "bounds: give --r N or --all\n";
                return kExitUsage;
            }
            return emit(cmd_bounds(bounds_r, parse_assumption(bounds_assumption), mu_cap, jobs), as_json);
        }
        if (*verify) {
            VerifyOptions opts;
            if (!corrupt.empty()) opts.corrupt = parse_family(corrupt);
            return emit(cmd_verify(opts), as_json);
        }
    } catch (const EncodingError& e) {
        std::cerr << "derivation failed: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const IntegralityError& e) {
        std::cerr << "integrality check failed: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
