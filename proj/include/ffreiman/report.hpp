#pragma once

// End-to-end analysis of a subspace: descent to K(S) = K(x), filtered basis,
// genus profile, neededness, super filtered basis and divisor growth, subfield
// tower, minimal divisor, the Riemann-Roch bound, and a fixed checklist of
// structural statements evaluated on the instance.

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "filtration.hpp"
#include "tower.hpp"

namespace ffreiman {

enum class Status { pass, fail, not_applicable };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        default: return "not-applicable";
    }
}

/// Checklist ids in report order.
inline const std::vector<std::string>& finding_ids() {
    static const std::vector<std::string> ids{"L2.2", "L2.4", "L2.5",  "L2.8", "L2.9", "L2.10i",
                                              "L2.10ii", "L5.1", "L5.3", "T1.7", "C1.6", "Conj1"};
    return ids;
}

struct Finding {
    std::string id;
    Status status = Status::not_applicable;
    std::string note;     // reason for not-applicable, or what was checked
    std::string witness;  // set on fail: origin, seed and the offending data
};

struct AnalyzeOptions {
    std::optional<int> needed_col;
    int max_dim = 24;
    std::uint64_t seed = 0;
    int gap_trials = 4;
    std::string origin = "<input>";
};

struct Conjecture {
    bool hypothesis = false;  // gamma <= n - 3
    int bound = 0;            // n + gamma
    int dim_LD = 0;
    bool holds = false;
};

template <class F>
struct AnalysisReport {
    std::string field;
    int dim = 0;
    int index_original = 1;
    bool descended = false;
    std::optional<RatFunc<F>> generator;
    FilteredBasis<F> basis;
    std::vector<Subspace<F>> filtration;
    GenusProfile profile;
    std::vector<std::vector<std::optional<int>>> degree_table;
    std::optional<NeededColumn> needed;
    std::optional<SuperFilteredBasis<F>> super_basis;
    std::optional<GrowthProfile<F>> growth;
    std::string growth_note;
    std::vector<std::optional<int>> tower_indices;
    std::vector<Divisor<F>> divisors;  // D_1..D_n
    Divisor<F> input_divisor;          // minimal divisor of the input, before descent
    int delta_max = 0;                 // max deg D_i - deg D_{i-1}
    Conjecture conjecture;
    std::vector<Finding> findings;

    const Divisor<F>& D() const { return divisors.back(); }
    int n() const { return profile.n(); }
    const Finding& finding(const std::string& id) const {
        for (const auto& f : findings)
            if (f.id == id) return f;
        throw InvalidParameter("no finding " + id);
    }
    bool any_fail() const {
        for (const auto& f : findings)
            if (f.status == Status::fail) return true;
        return false;
    }
    int exit_code() const { return any_fail() ? 1 : 0; }
};

namespace detail {

inline std::string join_ints(const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

template <class F>
Finding finding_genus_rule(const AnalysisReport<F>& r) {
    Finding f{"L2.2", Status::pass, "gamma_1 = 0 and gamma_i non-decreasing", ""};
    if (const auto bad = genus_rule_violations(r.profile.gamma_seq); !bad.empty()) {
        f.status = Status::fail;
        f.witness = "gamma_seq=" + join_ints(r.profile.gamma_seq) + " breaks at i=" + std::to_string(bad.front());
    }
    return f;
}

template <class F>
Finding finding_bounded_extension(const AnalysisReport<F>& r) {
    Finding f{"L2.4", Status::not_applicable, "", ""};
    if (!r.profile.delta) {
        f.note = "delta needs n >= 2";
        return f;
    }
    const int i = *r.profile.delta + 2;
    if (i > r.n()) {
        f.note = "delta + 2 exceeds n";
        return f;
    }
    const auto idx = r.tower_indices[static_cast<std::size_t>(i - 1)];
    f.note = "[K(S) : K(S_" + std::to_string(i) + ")] = 1";
    if (idx && *idx == 1) {
        f.status = Status::pass;
    } else {
        f.status = Status::fail;
        f.witness = "S_" + std::to_string(i) + " generates a subfield of index " + (idx ? std::to_string(*idx) : "inf");
    }
    return f;
}

template <class F>
Finding finding_valuation_gap(const AnalysisReport<F>& r, const AnalyzeOptions& opt) {
    Finding f{"L2.5", Status::not_applicable, "", ""};
    if (!r.profile.delta || *r.profile.delta + 2 > r.n()) {
        f.note = "needs n >= 2";
        return f;
    }
    const int i = *r.profile.delta + 2;
    std::vector<GapWitness<F>> w;
    try {
        w = valuation_gap_probe(r.filtration[static_cast<std::size_t>(i - 1)], opt.gap_trials, opt.seed);
    } catch (const FieldTooSmall& e) {
        f.note = e.what();
        return f;
    }
    f.note = std::to_string(opt.gap_trials) + " sampled places on S_" + std::to_string(i);
    if (static_cast<int>(w.size()) != opt.gap_trials) {
        f.status = Status::fail;
        f.witness = "only " + std::to_string(w.size()) + " of " + std::to_string(opt.gap_trials) +
                    " sampled places have a valuation gap 1 (probe seed " + std::to_string(opt.seed) + ")";
        return f;
    }
    for (const auto& g : w)
        if (g.gcd_valuations != 1) {
            f.status = Status::fail;
            f.witness = "gcd of valuations at " + g.alpha.to_string() + " is " + std::to_string(g.gcd_valuations);
            return f;
        }
    f.status = Status::pass;
    return f;
}

/// c with (e2 + c) x in S_3, when it exists.
template <class F>
std::optional<typename F::value_type> gamma1_shift(const Subspace<F>& s3, const RatFunc<F>& e2) {
    const F& K = s3.field();
    const RatFunc<F> x = RatFunc<F>::x(K);
    const RatFunc<F> u = e2 * x;
    if (s3.contains(x)) {
        if (s3.contains(u)) return K.zero();
        return std::nullopt;
    }
    // u + c x in S_3 iff the remainders of u and x modulo S_3 are proportional
    const RatFunc<F> d(s3.common_den());
    const RatFunc<F> ud = u * d, xd = x * d;
    if (!ud.is_polynomial()) return std::nullopt;
    const Poly<F> ru = s3.reduce(ud.num()), rx = s3.reduce(xd.num());
    const auto lambda = ru.is_zero() ? K.zero() : ru.leading() / rx.leading();
    if (ru != rx * lambda) return std::nullopt;
    return -lambda;
}

template <class F>
Finding finding_structure(const AnalysisReport<F>& r) {
    Finding f{"L2.8", Status::not_applicable, "", ""};
    const F& K = r.basis.space.field();
    const int n = r.n(), g = r.profile.gamma();
    auto fail = [&](const std::string& w) {
        f.status = Status::fail;
        f.witness = w;
        return f;
    };
    if (g == 0 && n >= 3) {
        f.note = "S_i = p_{i-1} and S_i^2 = p_{2i-2}";
        for (int i = 1; i <= n; ++i) {
            const auto& si = r.filtration[static_cast<std::size_t>(i - 1)];
            if (si != Subspace<F>::poly_space(K, i - 1)) return fail("S_" + std::to_string(i) + " != p_" + std::to_string(i - 1));
            if (product(si, si) != Subspace<F>::poly_space(K, 2 * i - 2))
                return fail("S_" + std::to_string(i) + "^2 != p_" + std::to_string(2 * i - 2));
        }
        f.status = Status::pass;
        return f;
    }
    if (g == 1 && n >= 4 && r.profile.t1 && *r.profile.t1 == n) {
        f.note = "S_{n-1} = p_{n-2}";
        if (r.filtration[static_cast<std::size_t>(n - 2)] != Subspace<F>::poly_space(K, n - 2))
            return fail("S_" + std::to_string(n - 1) + " != p_" + std::to_string(n - 2));
        f.status = Status::pass;
        return f;
    }
    if (g == 1 && n >= 4 && r.profile.t1 && *r.profile.t1 == 3) {
        f.note = "S_i = K + e p_{i-2} and S_i^2 = K + e p_{2i-2} with e = e_2 + c";
        const auto c = gamma1_shift(r.filtration[2], r.basis.elements[1]);
        if (!c) return fail("no shift c with (e_2 + c) x in S_3");
        const RatFunc<F> e = r.basis.elements[1] + RatFunc<F>::one(K) * *c;
        auto k_plus = [&](int d) {
            std::vector<RatFunc<F>> gens{RatFunc<F>::one(K)};
            RatFunc<F> xp = RatFunc<F>::one(K);
            for (int k = 0; k <= d; ++k, xp = xp * RatFunc<F>::x(K)) gens.push_back(e * xp);
            return Subspace<F>::span(K, gens);
        };
        for (int i = 3; i <= n; ++i) {
            const auto& si = r.filtration[static_cast<std::size_t>(i - 1)];
            if (si != k_plus(i - 2)) return fail("S_" + std::to_string(i) + " != K + e p_" + std::to_string(i - 2));
            if (product(si, si) != k_plus(2 * i - 2))
                return fail("S_" + std::to_string(i) + "^2 != K + e p_" + std::to_string(2 * i - 2));
        }
        f.status = Status::pass;
        return f;
    }
    f.note = "needs gamma = 0 with n >= 3, or gamma = 1 with n >= 4 and t1 in {3, n}";
    return f;
}

template <class F>
Finding finding_pole_count(const AnalysisReport<F>& r) {
    Finding f{"L2.9", Status::not_applicable, "", ""};
    if (r.n() < 2) {
        f.note = "needs a nonconstant basis element";
        return f;
    }
    const F& K = r.basis.space.field();
    f.note = "pole count of e_i equals deg of the minimal divisor of <1, e_i>";
    for (std::size_t i = 1; i < r.basis.size(); ++i) {
        const auto& e = r.basis.elements[i];
        const int pc = pole_count(e);
        const int dd = minimal_divisor(Subspace<F>::span(K, {RatFunc<F>::one(K), e})).degree();
        if (pc != dd) {
            f.status = Status::fail;
            f.witness = "e_" + std::to_string(i + 1) + " = " + e.to_string() + ": " + std::to_string(pc) + " poles, degree " +
                        std::to_string(dd);
            return f;
        }
    }
    f.status = Status::pass;
    return f;
}

template <class F>
Finding finding_divisor_growth(const AnalysisReport<F>& r) {
    Finding f{"L2.10i", Status::not_applicable, "", ""};
    const auto& d = r.divisors;
    int checked = 0;
    for (int i = 2; i < r.n(); ++i) {
        if (r.profile.gamma_at(i + 1) != r.profile.gamma_at(i)) continue;
        ++checked;
        const auto& a = d[static_cast<std::size_t>(i - 2)];
        const auto& b = d[static_cast<std::size_t>(i - 1)];
        const auto& c = d[static_cast<std::size_t>(i)];
        if (c - b != b - a) {
            f.status = Status::fail;
            f.witness = "i=" + std::to_string(i) + ": D_{i+1}-D_i = " + (c - b).to_string() + " but D_i-D_{i-1} = " +
                        (b - a).to_string();
            return f;
        }
    }
    if (checked == 0) {
        f.note = "no i >= 2 with gamma_{i+1} = gamma_i";
        return f;
    }
    f.note = std::to_string(checked) + " indices checked";
    f.status = Status::pass;
    return f;
}

template <class F>
Finding finding_divisor_support(const AnalysisReport<F>& r) {
    Finding f{"L2.10ii", Status::not_applicable, "", ""};
    const auto& d = r.divisors;
    int checked = 0;
    for (int i = 3; i < r.n(); ++i) {
        if (r.profile.gamma_at(i + 1) != r.profile.gamma_at(i)) continue;
        ++checked;
        const auto& prev = d[static_cast<std::size_t>(i - 2)];
        const auto& cur = d[static_cast<std::size_t>(i - 1)];
        for (const auto& [p, c] : cur.terms())
            if (prev.coeff(p) == 0) {
                f.status = Status::fail;
                f.witness = "i=" + std::to_string(i) + ": place " + p.to_string() + " absent from D_{i-1} = " +
                            prev.to_string() + " but in D_i = " + cur.to_string();
                return f;
            }
    }
    if (checked == 0) {
        f.note = "no i >= 3 with gamma_{i+1} = gamma_i";
        return f;
    }
    f.note = std::to_string(checked) + " indices checked";
    f.status = Status::pass;
    return f;
}

template <class F>
Finding finding_super_filtered(const AnalysisReport<F>& r) {
    Finding f{"L5.1", Status::not_applicable, "", ""};
    if (!r.super_basis) {
        f.note = r.growth_note;
        return f;
    }
    f.note = std::to_string(r.super_basis->pole_floor.size()) + " finite poles";
    if (auto why = super_filtered_violation(*r.super_basis, r.basis.space); !why.empty()) {
        f.status = Status::fail;
        f.witness = why;
        return f;
    }
    f.status = Status::pass;
    return f;
}

template <class F>
Finding finding_T_inclusions(const AnalysisReport<F>& r) {
    Finding f{"L5.3", Status::not_applicable, "", ""};
    if (!r.growth) {
        f.note = r.growth_note;
        return f;
    }
    if (auto why = t_inclusion_gate(*r.growth, r.profile)) {
        f.note = *why;
        return f;
    }
    const auto inc = check_T_inclusions(*r.growth, r.profile, r.filtration);
    const int t = *r.profile.first_jump;
    f.note = "T_i in S_i^2 for i = " + std::to_string(t - 1) + ".." + std::to_string(r.n());
    for (std::size_t k = 0; k < inc.size(); ++k)
        if (!inc[k]) {
            f.status = Status::fail;
            const int i = t - 1 + static_cast<int>(k);
            const auto& idx = r.tower_indices[static_cast<std::size_t>(t - 2)];
            f.witness = "T_" + std::to_string(i) + " = L(" + std::to_string(t - 2) + "*inf + D_" + std::to_string(i) +
                        ") is not contained in S_" + std::to_string(i) + "^2; [K(S) : K(S_" + std::to_string(t - 1) +
                        ")] = " + (idx ? std::to_string(*idx) : std::string("-"));
            return f;
        }
    f.status = Status::pass;
    return f;
}

template <class F>
Finding finding_max_growth(const AnalysisReport<F>& r) {
    Finding f{"T1.7", Status::not_applicable, "", ""};
    const int n = r.n(), g = r.profile.gamma(), dm = r.delta_max;
    if (n < 3 || r.profile.gamma_at(3) != 0) {
        f.note = "needs n >= 3 and gamma_3 = 0";
        return f;
    }
    if (dm < 1 || dm > n || r.profile.gamma_at(dm) != 0) {
        f.note = "needs gamma_{Delta_Max} = 0 (Delta_Max = " + std::to_string(dm) + ")";
        return f;
    }
    if (g > n - 3) {
        f.note = "needs gamma <= n - 3";
        return f;
    }
    f.note = "dim L(D) <= n + gamma";
    if (r.conjecture.dim_LD > n + g) {
        f.status = Status::fail;
        f.witness = "dim L(D) = " + std::to_string(r.conjecture.dim_LD) + " > " + std::to_string(n + g);
        return f;
    }
    f.status = Status::pass;
    return f;
}

template <class F>
Finding finding_genus_two(const AnalysisReport<F>& r) {
    Finding f{"C1.6", Status::not_applicable, "", ""};
    const int n = r.n();
    if (n < 5 || r.profile.gamma() != 2) {
        f.note = "needs n >= 5 and gamma = 2";
        return f;
    }
    f.note = "deg D <= n + 1";
    if (r.D().degree() > n + 1) {
        f.status = Status::fail;
        f.witness = "deg D = " + std::to_string(r.D().degree()) + " > " + std::to_string(n + 1) + ", D = " + r.D().to_string();
        return f;
    }
    f.status = Status::pass;
    return f;
}

template <class F>
Finding finding_conjecture(const AnalysisReport<F>& r) {
    Finding f{"Conj1", Status::not_applicable, "", ""};
    const auto& c = r.conjecture;
    if (!c.hypothesis) {
        f.note = "needs gamma <= n - 3";
        return f;
    }
    f.note = "dim L(D) = " + std::to_string(c.dim_LD) + " <= " + std::to_string(c.bound);
    if (!c.holds) {
        f.status = Status::fail;
        f.witness = "dim L(D) = " + std::to_string(c.dim_LD) + " > n + gamma = " + std::to_string(c.bound) +
                    ", D = " + r.D().to_string();
        return f;
    }
    f.status = Status::pass;
    return f;
}

}  // namespace detail

/// Full pipeline over the span of gens. The space is first rewritten in a
/// generator of K(S), so every later stage runs with K(S) = K(x).
template <class F>
AnalysisReport<F> analyze(const std::vector<RatFunc<F>>& gens, const F& field, const AnalyzeOptions& opt = {}) {
    const Subspace<F> s = Subspace<F>::span(field, gens);
    if (s.is_zero()) throw InvalidParameter("the generators span the zero space");
    if (static_cast<int>(s.dim()) > opt.max_dim)
        throw InvalidParameter("dimension " + std::to_string(s.dim()) + " exceeds --max-dim " + std::to_string(opt.max_dim));
    AnalysisReport<F> r;
    r.field = field.name();
    r.dim = static_cast<int>(s.dim());
    // places of the input itself must split, before any descent merges them
    r.input_divisor = minimal_divisor(s);
    r.basis = filtered_basis(s);
    if (r.basis.size() >= 2) {
        const RatFunc<F> y = luroth_generator(r.basis.elements);
        r.generator = y;
        r.index_original = pole_count(y);
        if (r.index_original > 1) {
            r.basis = filtered_basis(descend(r.basis.space, y));
            r.descended = true;
        }
    }
    r.filtration = natural_filtration(r.basis);
    r.profile = raw_genus_profile(r.basis);
    r.degree_table = degree_table(r.basis, r.n());

    const std::optional<int> col = opt.needed_col ? opt.needed_col : r.profile.t;
    if (col) {
        if (*col < 2 || *col > r.n())
            throw InvalidParameter("needed column " + std::to_string(*col) + " outside 2.." + std::to_string(r.n()));
        r.needed = needed_column(r.basis, r.filtration, *col);
    }

    for (const auto& si : r.filtration) r.divisors.push_back(minimal_divisor(si));
    for (std::size_t i = 1; i < r.divisors.size(); ++i)
        r.delta_max = std::max(r.delta_max, r.divisors[i].degree() - r.divisors[i - 1].degree());

    try {
        r.super_basis = super_filtered_basis(r.basis);
        r.growth = growth_profile(*r.super_basis, r.filtration);
    } catch (const SmallFieldExhausted& e) {
        r.super_basis.reset();
        r.growth_note = e.what();
    }

    r.tower_indices = subfield_index_chain(r.filtration);

    const Divisor<F>& d = r.D();
    if (!contained_in_L(r.basis.space, d)) throw InternalInvariantViolation("S is not contained in L(minimal divisor)");
    const int n = r.n(), g = r.profile.gamma();
    r.conjecture.hypothesis = g <= n - 3;
    r.conjecture.bound = n + g;
    r.conjecture.dim_LD = static_cast<int>(riemann_roch_space(field, d).dim());
    if (r.conjecture.dim_LD != std::max(d.degree() + 1, 0))
        throw InternalInvariantViolation("dim L(D) differs from deg D + 1");
    r.conjecture.holds = r.conjecture.dim_LD <= r.conjecture.bound;

    r.findings = {detail::finding_genus_rule(r),       detail::finding_bounded_extension(r),
                  detail::finding_valuation_gap(r, opt), detail::finding_structure(r),
                  detail::finding_pole_count(r),       detail::finding_divisor_growth(r),
                  detail::finding_divisor_support(r),  detail::finding_super_filtered(r),
                  detail::finding_T_inclusions(r),     detail::finding_max_growth(r),
                  detail::finding_genus_two(r),        detail::finding_conjecture(r)};
    for (auto& f : r.findings)
        if (f.status == Status::fail) f.witness = opt.origin + " seed=" + std::to_string(opt.seed) + ": " + f.witness;
    return r;
}

template <class F>
nlohmann::ordered_json report_json(const AnalysisReport<F>& r) {
    using J = nlohmann::ordered_json;
    auto opt_int = [](const std::optional<int>& v) { return v ? J(*v) : J(nullptr); };
    J j;
    j["field"] = r.field;
    j["dim"] = r.dim;
    J basis = J::array();
    for (const auto& e : r.basis.elements) basis.push_back(e.to_string());
    j["basis"] = basis;
    j["gamma"] = r.profile.gamma();
    j["gamma_seq"] = r.profile.gamma_seq;
    j["t"] = opt_int(r.profile.t);
    j["t1"] = opt_int(r.profile.t1);
    j["delta"] = opt_int(r.profile.delta);
    j["degrees"] = r.profile.degrees;
    J table = J::array();
    for (const auto& row : r.degree_table) {
        J jr = J::array();
        for (const auto& c : row) jr.push_back(opt_int(c));
        table.push_back(jr);
    }
    j["degree_table"] = table;

    // coefficient lists over D_1..D_n, infinity first
    std::vector<Place<F>> places{Place<F>::infinity()};
    std::set<Place<F>> finite;
    for (const auto& d : r.divisors)
        for (const auto& [p, c] : d.terms())
            if (!p.is_infinity()) finite.insert(p);
    places.insert(places.end(), finite.begin(), finite.end());
    J divs = J::object();
    for (const auto& p : places) {
        J col = J::array();
        for (const auto& d : r.divisors) col.push_back(d.coeff(p));
        divs[p.to_string()] = col;
    }
    j["divisors"] = divs;
    j["D"] = r.D().to_string();
    j["conjecture"] = {{"hypothesis", r.conjecture.hypothesis},
                       {"bound", r.conjecture.bound},
                       {"dim_LD", r.conjecture.dim_LD},
                       {"holds", r.conjecture.holds}};
    J needed = J::array();
    if (r.needed) {
        for (std::size_t i = 0; i < r.needed->needed.size(); ++i)
            needed.push_back({{"i", static_cast<int>(i) + 1},
                              {"j", r.needed->column},
                              {"degree", r.needed->degrees[i]},
                              {"needed", static_cast<bool>(r.needed->needed[i])},
                              {"forced", static_cast<bool>(r.needed->forced[i])}});
    }
    j["needed"] = needed;
    J indices = J::array();
    for (const auto& v : r.tower_indices) indices.push_back(opt_int(v));
    j["tower"] = {{"indices", indices},
                  {"index_original", r.index_original},
                  {"descended", r.descended},
                  {"input_divisor", r.input_divisor.to_string()},
                  {"generator", r.generator ? J(r.generator->to_string()) : J(nullptr)}};
    if (r.growth)
        j["growth"] = {{"M", r.growth->M}, {"mu", r.growth->mu}, {"delta_max", r.growth->delta_max}};
    else
        j["growth"] = nullptr;
    J findings = J::array();
    for (const auto& f : r.findings)
        findings.push_back({{"id", f.id}, {"status", status_name(f.status)}, {"note", f.note}, {"witness", f.witness}});
    j["findings"] = findings;
    return j;
}

template <class F>
std::string report_text(const AnalysisReport<F>& r, bool with_table) {
    auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("-"); };
    std::string s;
    s += "field      " + r.field + "\n";
    s += "dim        " + std::to_string(r.dim) + "\n";
    if (r.descended)
        s += "descended  index " + std::to_string(r.index_original) + " via y = " + r.generator->to_string() + "\n";
    s += "basis     ";
    for (const auto& e : r.basis.elements) s += " " + e.to_string() + ";";
    s += "\n";
    s += "degrees    " + detail::join_ints(r.profile.degrees) + "\n";
    s += "gamma_seq  " + detail::join_ints(r.profile.gamma_seq) + "\n";
    s += "gamma      " + std::to_string(r.profile.gamma()) + "   t " + opt(r.profile.t) + "   t1 " + opt(r.profile.t1) +
         "   delta " + opt(r.profile.delta) + "\n";
    s += "D          " + r.D().to_string() + "\n";
    s += "dim L(D)   " + std::to_string(r.conjecture.dim_LD) + "   bound n + gamma = " + std::to_string(r.conjecture.bound) +
         (r.conjecture.hypothesis ? "" : "   (gamma > n - 3)") + "\n";
    std::string idx;
    for (const auto& v : r.tower_indices) idx += " " + opt(v);
    s += "tower     " + idx + "\n";
    if (r.growth) {
        s += "M          " + detail::join_ints(r.growth->M) + "   mu " + detail::join_ints(r.growth->mu) +
             "   Delta_Max " + std::to_string(r.growth->delta_max) + "\n";
    }
    if (r.needed) {
        s += "needed for column " + std::to_string(r.needed->column) + " (codim " + std::to_string(r.needed->codim) + "):";
        for (std::size_t i = 0; i < r.needed->needed.size(); ++i)
            if (r.needed->needed[i]) s += " e" + std::to_string(i + 1) + "e" + std::to_string(r.needed->column);
        s += "\n";
    }
    if (with_table) s += "degree table\n" + render_degree_table(r.degree_table);
    s += "findings\n";
    for (const auto& f : r.findings) {
        s += "  " + f.id + std::string(8 - std::min<std::size_t>(f.id.size(), 7), ' ') + status_name(f.status);
        if (f.status == Status::fail)
            s += "  " + f.witness;
        else if (!f.note.empty())
            s += "  (" + f.note + ")";
        s += "\n";
    }
    return s;
}

}  // namespace ffreiman
