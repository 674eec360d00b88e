#include "commands.hpp"

#include "slicecliff/json.hpp"
#include "slicecliff/operators.hpp"
#include "slicecliff/theorem.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

namespace slicecliff::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const CLI::Validator kOddM(
    [](std::string& value) -> std::string {
        int m = 0;
        try {
            m = std::stoi(value);
        } catch (const std::exception&) {
            return "must be an integer";
        }
        if (m < 3 || m % 2 == 0 || m > AlgebraSignature::kMaxGenerators)
            return "must be odd with 3 <= m <= 31";
        return {};
    },
    "ODD");

std::uint64_t default_seed()
{
    if (const char* env = std::getenv("SCE_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError("SCE_SEED: not a 64-bit natural number: '" + std::string(env) + "'");
        }
    }
    return 0;
}

int repro_examples(const CliConfig& config, std::ostream& out)
{
    struct Example {
        int m;
        int k_max;
    };
    const Example examples[] = {{5, 2}, {9, 3}};
    nlohmann::json doc = nlohmann::json::array();
    if (config.format == Format::Text)
        out << "note: the worked examples scale the Dirac operator by (1-m) instead of (1-m)/2; "
               "using the unital convention\n";
    int index = 1;
    for (const auto& ex : examples) {
        AlgebraSignature sig(ex.m);
        SlicePoly f = SlicePoly::monomial(sig, 5);
        nlohmann::json rows = nlohmann::json::array();
        if (config.format == Format::Text)
            out << "example " << index << ": m=" << ex.m << " f=" << to_string(f) << "\n";
        for (int k = 0; k <= ex.k_max; ++k) {
            BiPoly value = frak_F(f, k, DiracConvention::Unital);
            if (config.format == Format::Text)
                out << "F_" << k << " f = " << to_string(value) << "\n";
            else
                rows.push_back({{"k", k}, {"value", to_json(value)}, {"text", to_string(value)}});
        }
        doc.push_back({{"m", ex.m}, {"poly", to_string(f)}, {"convention", "unital"}, {"rows", rows}});
        ++index;
    }
    if (config.format == Format::Json)
        out << doc.dump() << "\n";
    return kExitOk;
}

int apply(const CliConfig& config, std::ostream& out)
{
    AlgebraSignature sig(config.m);
    SlicePoly p(sig);
    try {
        p = parse_slice_poly(config.poly, sig);
    } catch (const ParseError& e) {
        throw UsageError(std::string("--poly: ") + e.what());
    }
    auto conv = config.unital ? DiracConvention::Unital : DiracConvention::Half;
    BiPoly value = frak_F(p, config.k, conv);
    bool by_prefactor = vanishes_by_prefactor(config.m, config.k);
    if (config.format == Format::Json) {
        nlohmann::json j = to_json(value);
        if (by_prefactor)
            j["note"] = "trivially zero via prefactor";
        out << j.dump() << "\n";
    } else {
        out << to_string(value) << "\n";
        if (by_prefactor)
            out << "# trivially zero via prefactor (k >= gamma_m = " << sig.sce_exponent() << ")\n";
    }
    return kExitOk;
}

int verify(const CliConfig& config, std::ostream& out)
{
    AlgebraSignature sig(config.m);
    if (config.k >= sig.sce_exponent())
        throw UsageError("--k: must be < gamma_m = " + std::to_string(sig.sce_exponent()));
    int deg_max = config.deg_max.value_or(2 * config.k + 4);
    if (deg_max <= 2 * config.k)
        throw UsageError("--deg-max: must exceed 2k = " + std::to_string(2 * config.k));
    KernelReport r = verify_main_theorem(config.m, config.k, deg_max, config.trials, config.seed);
    if (config.format == Format::Json) {
        out << to_json(r).dump() << "\n";
    } else {
        out << "m=" << r.m << " k=" << r.k << " deg_max=" << r.deg_max << " trials/degree=" << r.trials
            << " seed=" << config.seed << "\n";
        out << "degree <= " << 2 * r.k << " in kernel: " << r.in_kernel_low_degree << "/" << r.low_degree_trials
            << "\n";
        out << "degree >  " << 2 * r.k << " outside kernel: " << r.out_of_kernel_high_degree << "/"
            << r.high_degree_trials << "\n";
        for (const auto& p : r.counterexamples)
            out << "counterexample: " << to_string(p) << "\n";
        out << (r.ok() ? "PASS" : "FAIL") << "\n";
    }
    return r.ok() ? kExitOk : kExitFailed;
}

int coeffs(const CliConfig& config, std::ostream& out)
{
    if (config.k < 1)
        throw UsageError("--k: must be >= 1");
    const CoeffTable table = coeff_table_recursive(config.k).back();
    if (config.format == Format::Json) {
        nlohmann::json j = nlohmann::json::array();
        for (int l = 1; l <= table.k; ++l)
            j.push_back({{"k", table.k}, {"l", l}, {"value", to_string(table.at(l))}});
        out << j.dump() << "\n";
        return kExitOk;
    }
    for (int l = 1; l <= table.k; ++l)
        out << (l > 1 ? " " : "") << "a(" << table.k << "," << l << ")=" << to_string(table.at(l));
    out << "\n";
    return kExitOk;
}

int identities(const CliConfig& config, std::ostream& out)
{
    int k_max = config.k > 0 ? config.k : 10;
    int cases = 0;
    int lemma_bad = 0;
    int ode_bad = 0;
    for (int k = 1; k <= k_max; ++k) {
        for (int h = 0; h <= config.h_max; ++h) {
            ++cases;
            BigInt product = 1;
            for (int l = 0; l < k; ++l)
                product *= h - l;
            BigInt four_k;
            mpz_ui_pow_ui(four_k.get_mpz_t(), 4, static_cast<unsigned long>(k));
            BigInt expected = (k % 2 == 0 ? four_k : BigInt(-four_k)) * product;
            if (lemma_sum(k, h) != expected)
                ++lemma_bad;
            BigInt two_k;
            mpz_ui_pow_ui(two_k.get_mpz_t(), 2, static_cast<unsigned long>(k));
            if (!(ode_residual(k, h) == OdeResidual{BigInt(two_k * product), 2 * h - 1}))
                ++ode_bad;
        }
    }
    if (config.format == Format::Json) {
        out << nlohmann::json{{"k_max", k_max},
                              {"h_max", config.h_max},
                              {"cases", cases},
                              {"lemma_sum_mismatches", lemma_bad},
                              {"ode_residual_mismatches", ode_bad}}
                   .dump()
            << "\n";
    } else {
        out << "lemma_sum(k,h) = (-4)^k prod_{l<k}(h-l): " << cases - lemma_bad << "/" << cases << " cases\n";
        out << "ode_residual(k,h) = 2^k prod_{l<k}(h-l) x^(2h-1): " << cases - ode_bad << "/" << cases
            << " cases\n";
    }
    return lemma_bad == 0 && ode_bad == 0 ? kExitOk : kExitFailed;
}

}  // namespace

int run(const CliConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        switch (config.command) {
        case Command::ReproExamples:
            return repro_examples(config, out);
        case Command::Apply:
            return apply(config, out);
        case Command::Verify:
            return verify(config, out);
        case Command::Coeffs:
            return coeffs(config, out);
        case Command::Identities:
            return identities(config, out);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Slice regular polynomials over Clifford algebras and the operators dbar Delta^k", "slicecliff"};
    app.require_subcommand(1);

    CliConfig config;
    std::string convention = "half";
    std::string format = "text";
    std::optional<std::uint64_t> seed;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    auto* repro = app.add_subcommand("repro-examples", "Print F_k x^5 for m = 5 and m = 9");
    add_format(repro);

    auto* apply_cmd = app.add_subcommand("apply", "Print F_k f as a polynomial in a = Re x, b = |Im x|");
    apply_cmd->add_option("--m", config.m, "Number of generators (odd)")->required()->check(kOddM);
    apply_cmd->add_option("--k", config.k, "Laplacian power")->required()->check(CLI::NonNegativeNumber);
    apply_cmd->add_option("--poly", config.poly, "Slice polynomial, e.g. \"x^5 + (1 + e1) x^2\"")->required();
    apply_cmd->add_option("--convention", convention, "Dirac scaling")->check(CLI::IsMember({"half", "unital"}));
    add_format(apply_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Randomized check that ker F_k is the degree <= 2k polynomials");
    verify_cmd->add_option("--m", config.m, "Number of generators (odd)")->required()->check(kOddM);
    verify_cmd->add_option("--k", config.k, "Laplacian power, k < (m-1)/2")->required()->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--deg-max", config.deg_max, "Largest degree tried (default 2k+4)")
        ->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--trials", config.trials, "Random polynomials per degree")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", seed, "RNG seed (default: $SCE_SEED, then 0)");
    add_format(verify_cmd);

    auto* coeffs_cmd = app.add_subcommand("coeffs", "Print a_l^(k) from the recursion");
    coeffs_cmd->add_option("--k", config.k, "Table index")->required()->check(CLI::PositiveNumber);
    add_format(coeffs_cmd);

    auto* ident_cmd = app.add_subcommand("identities", "Check the lemma_sum and ODE residual identities");
    ident_cmd->add_option("--k", config.k, "Largest k (default 10)")->check(CLI::PositiveNumber);
    ident_cmd->add_option("--h-max", config.h_max, "Largest h")->check(CLI::NonNegativeNumber);
    add_format(ident_cmd);

    std::vector<const char*> argv;
    argv.push_back("slicecliff");
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (repro->parsed())
        config.command = Command::ReproExamples;
    else if (apply_cmd->parsed())
        config.command = Command::Apply;
    else if (verify_cmd->parsed())
        config.command = Command::Verify;
    else if (coeffs_cmd->parsed())
        config.command = Command::Coeffs;
    else
        config.command = Command::Identities;

    config.unital = convention == "unital";
    config.format = format == "json" ? Format::Json : Format::Text;
    try {
        config.seed = seed ? *seed : default_seed();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return run(config, out, err);
}

}  // namespace slicecliff::cli
