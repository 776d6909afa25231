#pragma once

// Command bodies behind the CLI verbs. Each returns its stdout text, stderr
// text and exit code so tests can drive them without a process boundary.
// Exit codes: 0 ok, 1 a checked statement failed (or an internal invariant
// broke), 2 input error, 3 non-split place.

#include <array>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "generators.hpp"
#include "report.hpp"

namespace ffreiman {

struct CommandResult {
    std::string out;
    std::string err;
    int code = 0;
};

namespace detail {

/// Runs fn, mapping library errors onto exit codes.
template <class Fn>
CommandResult guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const NonSplitPlace& e) {
        return {"", std::string("error: ") + e.what() + "\n", 3};
    } catch (const InternalInvariantViolation& e) {
        return {"", std::string("finding: ") + e.what() + "\n", 1};
    } catch (const Error& e) {
        return {"", std::string("error: ") + e.what() + "\n", 2};
    } catch (const nlohmann::json::exception& e) {
        return {"", std::string("error: ") + e.what() + "\n", 2};
    }
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidParameter("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// The InstanceSpec recorded by `generate`, if the text carries one.
inline std::optional<std::string> recorded_spec(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        const std::string t = trim(line);
        if (t.rfind("# spec:", 0) == 0) return trim(t.substr(7));
    }
    return std::nullopt;
}

}  // namespace detail

struct AnalyzeFlags {
    bool json = false;
    bool table = false;
    std::uint64_t seed = 0;
    std::optional<FieldSpec> field;  // overrides the file header
    std::optional<int> needed_col;
    int max_dim = 24;
};

/// Analysis of instance file text; origin names the instance in witnesses.
inline CommandResult analyze_text(std::string_view text, const std::string& origin, const AnalyzeFlags& flags) {
    return detail::guarded([&] {
        const InstanceText inst = parse_instance_file(text);
        const FieldSpec fs = flags.field.value_or(inst.field);
        AnalyzeOptions opt;
        opt.needed_col = flags.needed_col;
        opt.max_dim = flags.max_dim;
        opt.seed = flags.seed;
        opt.origin = detail::recorded_spec(text).value_or(origin);
        return with_field(fs, [&](const auto& K) {
            const auto gens = instance_generators(inst, K);
            if (static_cast<int>(gens.size()) > 4 * flags.max_dim + 64)
                throw InvalidParameter("too many generator lines for --max-dim " + std::to_string(flags.max_dim));
            const auto r = analyze(gens, K, opt);
            CommandResult res;
            res.out = flags.json ? report_json(r).dump(2) + "\n" : report_text(r, flags.table);
            for (const auto& f : r.findings)
                if (f.status == Status::fail) res.err += "finding: " + f.id + " fails: " + f.witness + "\n";
            res.code = r.exit_code();
            return res;
        });
    });
}

inline CommandResult cmd_analyze(const std::string& path, const AnalyzeFlags& flags) {
    std::string text;
    try {
        text = detail::read_file(path);
    } catch (const Error& e) {
        return {"", std::string("error: ") + e.what() + "\n", 2};
    }
    return analyze_text(text, path, flags);
}

/// Instance file for family + params. seed fills in a missing seed parameter
/// of the random family.
inline CommandResult cmd_generate(InstanceSpec spec, const FieldSpec& field, std::uint64_t seed) {
    return detail::guarded([&] {
        if (spec.family == "random-rr" && !spec.params.count("seed")) spec.params["seed"] = std::to_string(seed);
        return with_field(field, [&](const auto& K) {
            return CommandResult{instance_file_text(spec, field, generate_instance(spec, K)), "", 0};
        });
    });
}

struct FuzzConfig {
    int count = 100;
    int max_degree = 6;  // coefficient of inf in D is drawn from 1..max_degree
    int max_poles = 2;   // finite places in D, each of multiplicity 1 or 2
    std::vector<FieldSpec> fields{FieldSpec{}};
    std::uint64_t seed = 0;
    std::optional<std::string> witness_dir;
    int max_dim = 24;
};

/// Spec of the k-th fuzz instance: a random subspace of a random effective D.
inline InstanceSpec fuzz_instance(std::uint64_t instance_seed, const FuzzConfig& cfg) {
    Rng rng(instance_seed);
    const int inf = static_cast<int>(uniform_int(rng, 1, std::max(cfg.max_degree, 1)));
    std::map<long, int> poles;
    const int k = static_cast<int>(uniform_int(rng, 0, std::max(cfg.max_poles, 0)));
    for (int i = 0; i < k; ++i) poles[uniform_int(rng, -3, 3)] = static_cast<int>(uniform_int(rng, 1, 2));
    std::string d = std::to_string(inf) + "*inf";
    int deg = inf;
    for (const auto& [a, m] : poles) {
        d += " + " + std::to_string(m) + "*" + std::to_string(a);
        deg += m;
    }
    const int n = static_cast<int>(uniform_int(rng, 2, std::min(deg + 1, cfg.max_dim)));
    InstanceSpec spec;
    spec.family = "random-rr";
    spec.params = {{"D", d}, {"n", std::to_string(n)}, {"seed", std::to_string(rng() >> 1)}};
    return spec;
}

/// Sequential batch run; the summary depends only on the config.
inline CommandResult cmd_fuzz(const FuzzConfig& cfg, bool json = false) {
    return detail::guarded([&] {
        if (cfg.count < 0) throw InvalidParameter("fuzz count must be >= 0");
        std::map<std::string, std::array<int, 3>> tally;
        for (const auto& id : finding_ids()) tally[id] = {0, 0, 0};
        int analyzed = 0, errors = 0, invariant = 0, nonsplit = 0;
        std::vector<std::string> witnesses;
        Rng master(cfg.seed);
        if (cfg.witness_dir) std::filesystem::create_directories(*cfg.witness_dir);
        for (int k = 0; k < cfg.count; ++k) {
            const std::uint64_t iseed = master() >> 1;
            const InstanceSpec spec = fuzz_instance(iseed, cfg);
            for (const auto& fs : cfg.fields) {
                const CommandResult r = detail::guarded([&] {
                    return with_field(fs, [&](const auto& K) {
                        const auto s = generate_instance(spec, K);
                        const std::string text = instance_file_text(spec, fs, s);
                        AnalyzeOptions opt;
                        opt.seed = iseed;
                        opt.max_dim = cfg.max_dim;
                        opt.origin = spec.to_string() + " field=" + fs.flag();
                        const auto rep = analyze(s.basis(), K, opt);
                        std::string err;
                        for (const auto& f : rep.findings) {
                            ++tally[f.id][static_cast<std::size_t>(f.status)];
                            if (f.status == Status::fail) err += "finding: " + f.id + " fails: " + f.witness + "\n";
                        }
                        return CommandResult{text, err, rep.exit_code()};
                    });
                });
                if (r.code == 0 || (r.code == 1 && !r.out.empty())) ++analyzed;
                if (r.code == 1) {
                    if (r.out.empty()) ++invariant;
                    const std::string name = "witness-" + std::to_string(iseed) + "-" + fs.flag().substr(0, 2) +
                                             (fs.prime ? std::to_string(fs.p) : "") + ".txt";
                    witnesses.push_back(name);
                    if (cfg.witness_dir) {
                        std::ofstream out(std::filesystem::path(*cfg.witness_dir) / name);
                        out << (r.out.empty() ? "# spec: " + spec.to_string() + "\nfield: " + fs.header() + "\n" : r.out);
                        std::istringstream lines(r.err);
                        for (std::string l; std::getline(lines, l);) out << "# " << l << "\n";
                    }
                } else if (r.code == 3) {
                    ++nonsplit;
                } else if (r.code != 0) {
                    ++errors;
                }
            }
        }
        std::string fields;
        for (const auto& fs : cfg.fields) fields += (fields.empty() ? "" : ",") + fs.flag();
        CommandResult res;
        if (json) {
            nlohmann::ordered_json j;
            j["seed"] = cfg.seed;
            j["count"] = cfg.count;
            j["fields"] = fields;
            j["analyzed"] = analyzed;
            j["non_split"] = nonsplit;
            j["errors"] = errors;
            j["invariant_failures"] = invariant;
            nlohmann::ordered_json t = nlohmann::ordered_json::object();
            for (const auto& id : finding_ids())
                t[id] = {{"pass", tally[id][0]}, {"fail", tally[id][1]}, {"not-applicable", tally[id][2]}};
            j["findings"] = t;
            j["witnesses"] = witnesses;
            res.out = j.dump(2) + "\n";
        } else {
            std::ostringstream o;
            o << "fuzz seed=" << cfg.seed << " count=" << cfg.count << " fields=" << fields << "\n";
            o << "analyzed " << analyzed << "  non-split " << nonsplit << "  errors " << errors << "  invariant failures "
              << invariant << "\n";
            for (const auto& id : finding_ids()) {
                const auto& c = tally[id];
                o << "  " << id << std::string(8 - id.size(), ' ') << "pass " << c[0] << "  fail " << c[1]
                  << "  not-applicable " << c[2] << "\n";
            }
            for (const auto& w : witnesses) o << "witness " << w << "\n";
            res.out = o.str();
        }
        res.code = witnesses.empty() ? 0 : 1;
        return res;
    });
}

/// Integer list such as "0,1,2,4" or "{0, 1, 2, 4}".
inline IntSet parse_set_literal(std::string_view text) {
    std::string s = detail::trim(text);
    if (!s.empty() && s.front() == '{' && s.back() == '}') s = s.substr(1, s.size() - 2);
    if (s.find_first_not_of("0123456789,- ") != std::string::npos)
        throw SyntaxError("set literal may hold only integers and commas", 1, 1);
    return parse_int_list(s);
}

inline CommandResult cmd_freiman(std::string_view set_text, bool json = false) {
    return detail::guarded([&] {
        const IntSet a = parse_set_literal(set_text);
        if (a.size() < 2) throw InvalidParameter("need at least 2 distinct integers");
        if (a.max() - a.min() > 4096) throw InvalidParameter("set spread exceeds 4096");
        const FreimanReport r = freiman_3k4(a);
        // gamma of span{x^(a - min A)} over Q, computed in K(x)
        std::vector<long> shifted;
        for (long v : a.elems()) shifted.push_back(v - a.min());
        const RationalField Q;
        const GenusProfile prof = genus_profile(filtered_basis(monomial_space(IntSet(shifted), Q)));
        CommandResult res;
        if (json) {
            nlohmann::ordered_json j;
            j["set"] = a.elems();
            j["sumset"] = sumset(a).elems();
            j["size"] = r.size;
            j["sumset_size"] = r.sumset_size;
            j["hypothesis"] = r.hypothesis_holds;
            j["ap_start"] = r.ap_start;
            j["ap_step"] = r.ap_step;
            j["hull_length"] = r.hull_length;
            j["bound"] = r.bound;
            j["conclusion"] = r.conclusion_holds;
            j["additive_genus"] = additive_genus(a);
            j["monomial_gamma"] = prof.gamma();
            res.out = j.dump(2) + "\n";
        } else {
            std::ostringstream o;
            o << "A            " << a.to_string() << "\n";
            o << "A+A          " << sumset(a).to_string() << "\n";
            o << "|A| = " << r.size << "  |A+A| = " << r.sumset_size << "  3|A|-4 = " << 3 * static_cast<long>(r.size) - 4
              << "\n";
            o << "hypothesis   " << (r.hypothesis_holds ? "holds" : "fails (informational)") << "\n";
            o << "AP hull      start " << r.ap_start << " step " << r.ap_step << " length " << r.hull_length << "\n";
            o << "bound        |A+A|-|A|+1 = " << r.bound << "  " << (r.conclusion_holds ? "holds" : "exceeded") << "\n";
            o << "gamma        " << prof.gamma() << " (monomial space), " << additive_genus(a) << " (additive)\n";
            res.out = o.str();
        }
        if (prof.gamma() != additive_genus(a))
            throw InternalInvariantViolation("monomial gamma differs from the additive genus");
        return res;
    });
}

}  // namespace ffreiman
