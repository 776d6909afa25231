// Command-line front end: analyze, generate, fuzz, freiman, selftest.

#include <iostream>

#include "CLI11.hpp"
#include "ffreiman/ffreiman.hpp"

namespace {

int emit(const ffreiman::CommandResult& r) {
    std::cout << r.out << std::flush;
    std::cerr << r.err << std::flush;
    return r.code;
}

/// Field flag text to FieldSpec; input errors exit 2 like every other one.
std::optional<ffreiman::FieldSpec> field_flag(const std::string& text, int& code) {
    if (text.empty()) return std::nullopt;
    try {
        return ffreiman::parse_field_spec(text);
    } catch (const ffreiman::Error& e) {
        std::cerr << "error: --field: " << e.what() << "\n";
        code = 2;
        return std::nullopt;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact analysis of subspaces of K(x): genus, filtrations, divisors, Riemann-Roch bounds"};
    app.require_subcommand(1);

    bool json = false, table = false;
    std::uint64_t seed = 0;
    std::string field_text;
    int max_dim = 24;

    auto* analyze = app.add_subcommand("analyze", "Analyze an instance file");
    std::string path;
    std::optional<int> needed_col;
    analyze->add_option("file", path, "Instance file")->required();
    analyze->add_flag("--json", json, "Machine-readable report");
    analyze->add_flag("--table", table, "Print the degree table");
    analyze->add_option("--seed", seed, "Seed for randomized probes");
    analyze->add_option("--field", field_text, "Override the file's field: q or fp:P");
    analyze->add_option("--needed-col", needed_col, "Neededness column (default t)");
    analyze->add_option("--max-dim", max_dim, "Refuse spans larger than this")->check(CLI::PositiveNumber);

    auto* generate = app.add_subcommand("generate", "Print an instance file for a family");
    std::string family;
    std::vector<std::string> params;
    generate->add_option("family", family, "gamma0 | gamma1a | gamma1b | degset | monomial | random-rr")->required();
    generate->add_option("params", params, "key=value parameters");
    generate->add_option("--seed", seed, "Seed used when random-rr lacks seed=");
    generate->add_option("--field", field_text, "q or fp:P");

    auto* fuzz = app.add_subcommand("fuzz", "Analyze a seeded batch of random instances");
    ffreiman::FuzzConfig cfg;
    std::vector<std::string> fields;
    std::string witness_dir;
    fuzz->add_option("--count", cfg.count, "Number of instances");
    fuzz->add_option("--max-degree", cfg.max_degree, "Largest coefficient of inf in D");
    fuzz->add_option("--max-poles", cfg.max_poles, "Largest number of finite places in D");
    fuzz->add_option("--field", fields, "Field to run over (repeatable): q or fp:P");
    fuzz->add_option("--seed", seed, "Master seed");
    fuzz->add_option("--witness-dir", witness_dir, "Directory for failing-instance witness files");
    fuzz->add_option("--max-dim", max_dim, "Largest dimension drawn")->check(CLI::PositiveNumber);
    fuzz->add_flag("--json", json, "Machine-readable summary");

    auto* freiman = app.add_subcommand("freiman", "Integer 3k-4 check on a finite set");
    std::string set_text;
    freiman->add_option("set", set_text, "Comma-separated integers, e.g. 0,1,2,4")->required();
    freiman->add_flag("--json", json, "Machine-readable report");

    auto* selftest = app.add_subcommand("selftest", "Run the built-in acceptance checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    int code = 0;
    if (analyze->parsed()) {
        ffreiman::AnalyzeFlags flags;
        flags.json = json;
        flags.table = table;
        flags.seed = seed;
        flags.field = field_flag(field_text, code);
        flags.needed_col = needed_col;
        flags.max_dim = max_dim;
        if (code) return code;
        return emit(ffreiman::cmd_analyze(path, flags));
    }
    if (generate->parsed()) {
        ffreiman::InstanceSpec spec;
        spec.family = family;
        for (const auto& p : params) {
            const auto eq = p.find('=');
            if (eq == std::string::npos || eq == 0) {
                std::cerr << "error: expected key=value, got '" << p << "'\n";
                return 2;
            }
            spec.params[p.substr(0, eq)] = p.substr(eq + 1);
        }
        const auto fs = field_flag(field_text, code);
        if (code) return code;
        return emit(ffreiman::cmd_generate(spec, fs.value_or(ffreiman::FieldSpec{}), seed));
    }
    if (fuzz->parsed()) {
        cfg.seed = seed;
        cfg.max_dim = max_dim;
        if (!witness_dir.empty()) cfg.witness_dir = witness_dir;
        if (!fields.empty()) {
            cfg.fields.clear();
            for (const auto& f : fields) {
                const auto fs = field_flag(f, code);
                if (code) return code;
                cfg.fields.push_back(*fs);
            }
        }
        return emit(ffreiman::cmd_fuzz(cfg, json));
    }
    if (freiman->parsed()) return emit(ffreiman::cmd_freiman(set_text, json));
    if (selftest->parsed()) {
        int failed = 0;
        ffreiman::run_acceptance({}, [&](const ffreiman::CriterionResult& r) {
            std::cout << ffreiman::format_criterion(r) << std::endl;
            if (!r.pass) ++failed;
        });
        std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << std::endl;
        return failed == 0 ? 0 : 1;
    }
    return code;
}
