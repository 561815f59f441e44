// slnverify: exact verification suites for the structure of SL_n over finite
// local rings (Steinberg relations, elementary factorization, closure orders,
// conjugation modules, H^1, extension splitting, and square-zero lift
// counting), with JSON/CSV reports.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "sln/suites.hpp"

using namespace sln;

namespace {

struct GlobalFlags {
    SuiteConfig cfg;
    std::string json_path;
    std::string csv_path;
};

void add_common_flags(CLI::App* cmd, GlobalFlags& gf) {
    cmd->add_option("--seed", gf.cfg.seed, "seed for sampled sweeps");
    cmd->add_option("--budget", gf.cfg.budget, "work cap for exhaustive sweeps");
    cmd->add_option("--json", gf.json_path, "write the full report as JSON");
    cmd->add_option("--csv", gf.csv_path, "write the summary table as CSV");
    cmd->add_flag("--allow-skip", gf.cfg.allow_skip, "exit 0 even when suites were skipped");
    cmd->add_flag("--parallel", gf.cfg.parallel, "run independent suites concurrently");
    cmd->add_option("--cache", gf.cfg.cache_dir, "directory for cached group tables");
}

int emit(const std::vector<SuiteReport>& reports, const GlobalFlags& gf) {
    for (const auto& r : reports) {
        std::cout << "[" << verdict_name(r.verdict) << "] " << r.suite;
        if (!r.claim.empty()) std::cout << " - " << r.claim;
        std::cout << " (" << int(r.wall_ms) << " ms)\n";
        if (r.verdict == Verdict::Fail && !r.counterexample.is_null())
            std::cout << "    counterexample: " << r.counterexample.dump() << "\n";
    }
    if (!gf.json_path.empty()) {
        std::ofstream os(gf.json_path);
        os << reports_to_json(reports, gf.cfg).dump(2) << "\n";
    }
    if (!gf.csv_path.empty()) {
        std::ofstream os(gf.csv_path);
        os << reports_to_csv(reports);
    }
    return exit_code_for(reports, gf.cfg);
}

int run_command(const std::string& suite, GlobalFlags& gf) {
    SuiteContext ctx(gf.cfg);
    std::vector<SuiteReport> reports;
    if (suite == "all")
        reports = run_all(ctx);
    else
        reports.push_back(run_suite(suite, ctx));
    return emit(reports, gf);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification suites for SL_n over finite local rings"};
    app.require_subcommand(1);
    GlobalFlags gf;

    // run <suite> [flags]
    std::string suite = "all";
    auto* run = app.add_subcommand("run", "run a verification suite (or 'all')");
    std::vector<std::string> valid = suite_names();
    valid.push_back("all");
    run->add_option("suite", suite, "suite name or 'all'")->required()->check(CLI::IsMember(valid));
    run->add_option("--ring", gf.cfg.ring_key, "restrict to one catalog ring");
    run->add_option("--field", gf.cfg.field_key, "restrict to one residue field");
    run->add_option("--n", gf.cfg.n, "matrix dimension override");
    run->add_option("--mode", gf.cfg.mode, "steinberg sweep mode: exhaustive|sampled")
        ->check(CLI::IsMember({"exhaustive", "sampled"}));
    add_common_flags(run, gf);

    // verify <suite>: alias of run for the structural suites
    auto* verify = app.add_subcommand("verify", "alias of `run` for the structural suites");
    std::string verify_suite;
    verify->add_option("suite", verify_suite, "steinberg|conjugation|commutant|decompose")
        ->required()
        ->check(CLI::IsMember({"steinberg", "conjugation", "commutant", "decompose"}));
    verify->add_option("--ring", gf.cfg.ring_key, "catalog ring key");
    verify->add_option("--n", gf.cfg.n, "matrix dimension");
    verify->add_option("--mode", gf.cfg.mode, "exhaustive|sampled");
    add_common_flags(verify, gf);

    // cohomology h1 --field f3 --n 3 --module m0
    auto* coh = app.add_subcommand("cohomology", "single cohomology computations");
    auto* h1cmd = coh->add_subcommand("h1", "crossed-homomorphism H^1 dimension");
    std::string h1_field = "f3", h1_module = "m0", h1_group = "sl3";
    int h1_n = 3;
    h1cmd->add_option("--group", h1_group, "group family (sl<n>)");
    h1cmd->add_option("--field", h1_field, "residue field key")->check(CLI::IsMember({"f2", "f3", "f4"}));
    h1cmd->add_option("--n", h1_n, "matrix dimension");
    h1cmd->add_option("--module", h1_module, "m|m0|v|trivial")
        ->check(CLI::IsMember({"m", "m0", "v", "trivial"}));
    add_common_flags(h1cmd, gf);

    // extension split --field f3 --n 3 --variant full --subgroup sylow
    auto* extc = app.add_subcommand("extension", "extension splitting decisions");
    auto* splitc = extc->add_subcommand("split", "decide splitting over a subgroup");
    std::string sp_field = "f3", sp_variant = "full", sp_subgroup = "sylow", sp_lift = "teich";
    int sp_n = 3;
    splitc->add_option("--field", sp_field, "residue field key")->check(CLI::IsMember({"f2", "f3", "f4"}));
    splitc->add_option("--n", sp_n, "matrix dimension");
    splitc->add_option("--variant", sp_variant, "full|scalar")->check(CLI::IsMember({"full", "scalar"}));
    splitc->add_option("--subgroup", sp_subgroup, "sylow|full")->check(CLI::IsMember({"sylow", "full"}));
    splitc->add_option("--lift", sp_lift, "teich|digit")->check(CLI::IsMember({"teich", "digit"}));
    add_common_flags(splitc, gf);

    // deformation audit / reconstruct
    auto* def = app.add_subcommand("deformation", "lift counting and section reconstruction");
    auto* audit = def->add_subcommand("audit", "lift classes vs homomorphism counts");
    std::string au_k = "f3", au_targets = "f3,f3_dual,z9";
    int au_n = 3;
    audit->add_option("--k", au_k, "residue field key");
    audit->add_option("--n", au_n, "matrix dimension");
    audit->add_option("--targets", au_targets, "comma-separated target ring keys");
    add_common_flags(audit, gf);
    auto* recon = def->add_subcommand("reconstruct", "rebuild the ring section from a split subgroup");
    std::string re_R = "f3_dual";
    int re_n = 3;
    uint64_t twist_seed = 7;
    recon->add_option("--R", re_R, "square-zero source ring key");
    recon->add_option("--n", re_n, "matrix dimension");
    recon->add_option("--twist-seed", twist_seed, "seed for the random kernel twist");
    add_common_flags(recon, gf);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (run->parsed()) return run_command(suite, gf);
        if (verify->parsed()) return run_command(verify_suite, gf);

        if (h1cmd->parsed()) {
            if (h1_group != "sl" + std::to_string(h1_n) && h1_group != "sl3")
                throw std::invalid_argument("unsupported group family: " + h1_group);
            SuiteContext ctx(gf.cfg);
            const GroupTable& g = ctx.sl(h1_field, h1_n);
            ModuleKind kind = h1_module == "m"    ? ModuleKind::Full
                              : h1_module == "m0" ? ModuleKind::TraceZero
                              : h1_module == "v"  ? ModuleKind::TraceZeroModScalar
                                                  : ModuleKind::TrivialLine;
            GModule mod = module_make(kind, g);
            auto h1 = h1_dim(mod);
            nlohmann::json out{{"group", "sl" + std::to_string(h1_n) + "(" + h1_field + ")"},
                               {"module", h1_module},
                               {"k_dim", h1.k_dim},
                               {"fp_dim", h1.fp_dim},
                               {"z1_dim", h1.z1_dim},
                               {"b1_dim", h1.b1_dim}};
            std::cout << out.dump(2) << "\n";
            if (!gf.json_path.empty()) std::ofstream(gf.json_path) << out.dump(2) << "\n";
            return 0;
        }

        if (splitc->parsed()) {
            SuiteContext ctx(gf.cfg);
            const Ring& k = preset(sp_field);
            const GroupTable& quot = ctx.sl(sp_field, sp_n);
            const GroupTable& sub = sp_subgroup == "full" ? quot : ctx.sylow(sp_field, sp_n);
            ExtVariant variant = sp_variant == "scalar" ? ExtVariant::ScalarQuotient : ExtVariant::SlFull;
            LiftMode mode = sp_lift == "digit" ? LiftMode::Digit : LiftMode::Teichmuller;
            ExtensionDesc ext = extension_make(k, sp_n, variant, quot, mode);
            SplitDecision dec = splitting_decide(ext, sub);
            nlohmann::json out{{"field", sp_field},     {"n", sp_n},
                               {"variant", sp_variant}, {"subgroup", sp_subgroup},
                               {"split", dec.split},    {"rank", dec.rank},
                               {"gaschutz", dec.gaschutz_applicable}};
            if (dec.full_group_split) out["full_group_split"] = *dec.full_group_split;
            if (dec.split) {
                out["pairs_verified"] = dec.pairs_verified;
                nlohmann::json section = nlohmann::json::array();
                for (const Mat& m : dec.section) section.push_back(mat_to_string(m));
                out["section"] = std::move(section);
            }
            std::cout << out.dump(2) << "\n";
            if (!gf.json_path.empty()) std::ofstream(gf.json_path) << out.dump(2) << "\n";
            return 0;
        }

        if (audit->parsed()) {
            SuiteContext ctx(gf.cfg);
            LiftSetting ls{&ctx.sl(au_k, au_n), &ctx.sylow(au_k, au_n)};
            std::vector<const Ring*> targets;
            std::stringstream ss(au_targets);
            std::string tok;
            while (std::getline(ss, tok, ',')) targets.push_back(&preset(tok));
            auto rows = universal_property_audit(ls, targets);
            nlohmann::json out = nlohmann::json::array();
            bool all = true;
            for (auto& r : rows) {
                out.push_back({{"target", r.target},
                               {"lift_classes", r.lift_count},
                               {"hom_count", r.hom_count},
                               {"match", r.match}});
                all &= r.match;
            }
            std::cout << out.dump(2) << "\n";
            if (!gf.json_path.empty()) std::ofstream(gf.json_path) << out.dump(2) << "\n";
            return all ? 0 : 1;
        }

        if (recon->parsed()) {
            SuiteContext ctx(gf.cfg);
            const Ring& R = preset(re_R);
            const Ring& k = R.residue_field();
            const GroupTable& slk = ctx.sl(k.name(), re_n);
            GModule M = module_make(ModuleKind::Full, slk);
            std::vector<Mat> gens;
            for (const Mat& g : slk.gens()) gens.push_back(mat_lift_digits(R, g));
            Rng rng(twist_seed);
            Mat X0 = random_kernel_twist(R, re_n, rng);
            Mat X0inv = mat_inv(X0);
            for (Mat& g : gens) g = mat_mul(mat_mul(X0, g), X0inv);
            Mat X = find_conjugator(gens, slk, M);
            Mat Xinv = mat_inv(X);
            for (Mat& g : gens) g = mat_mul(mat_mul(X, g), Xinv);
            GroupTable G = closure(gens);
            SectionMap sm = section_reconstruct(R, k, G);
            nlohmann::json table = nlohmann::json::array();
            bool lambda_one = true;
            for (size_t x = 0; x < k.size(); ++x) {
                table.push_back({{"x", k.to_string(RElem(x))},
                                 {"s", R.to_string(sm.s_table[x])},
                                 {"lambda", R.to_string(sm.lambda_table[x])}});
                lambda_one &= sm.lambda_table[x] == R.one();
            }
            nlohmann::json out{{"R", re_R},
                               {"twist_seed", twist_seed},
                               {"conjugator", mat_to_string(X)},
                               {"section_table", std::move(table)},
                               {"additive", sm.additive},
                               {"multiplicative", sm.multiplicative},
                               {"section_of_pi", sm.section_of_pi},
                               {"lambda_all_one", lambda_one}};
            std::cout << out.dump(2) << "\n";
            if (!gf.json_path.empty()) std::ofstream(gf.json_path) << out.dump(2) << "\n";
            return (sm.additive && sm.multiplicative && sm.section_of_pi && lambda_one) ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
