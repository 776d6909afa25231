#pragma once

// The fourteen acceptance checks, shared by the acceptance test binary and the
// `selftest` verb. Each check pairs the library with an independent oracle
// (brute force, direct valuation scans, or a second field) where one exists.

#include <chrono>
#include <functional>
#include <set>

#include "commands.hpp"

namespace ffreiman {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
};

struct AcceptanceOptions {
    std::optional<std::string> golden_table1;  // path of the frozen JSON report
};

namespace acceptance {

inline const char* kTable1Text = "# spec: family=monomial set=0,1,2,4,5\nfield: q\n1\nx\nx^2\nx^4\nx^5\n";

/// D_i by scanning valuations of the basis elements at ∞ and at every root of
/// every denominator; no gcd of numerators involved.
template <class F>
Divisor<F> scan_divisor(const std::vector<RatFunc<F>>& elems) {
    std::set<Place<F>> places{Place<F>::infinity()};
    for (const auto& e : elems)
        for (const auto& [a, m] : linear_root_factorization(e.den()).roots) places.insert(Place<F>::finite(a));
    Divisor<F> d;
    for (const auto& p : places) {
        int lo = valuation(elems.front(), p);
        for (const auto& e : elems) lo = std::min(lo, valuation(e, p));
        d.set(p, -lo);
    }
    return d;
}

/// Running tallies over every analyzed instance of every suite.
struct Pool {
    int instances = 0;
    int genus_rule_breaks = 0;
    int genus_disagreements = 0;
    int divisor_disagreements = 0;
    int growth_checked = 0, growth_breaks = 0;
    int support_checked = 0, support_breaks = 0;
    int index_checked = 0, index_breaks = 0;
    std::string first_problem;

    void problem(const std::string& what) {
        if (first_problem.empty()) first_problem = what;
    }

    template <class F>
    void record(const AnalysisReport<F>& r, const std::string& origin) {
        ++instances;
        const F& K = r.basis.space.field();
        const auto& e = r.basis.elements;
        const int n = static_cast<int>(e.size());
        std::vector<int> gamma;
        std::vector<Divisor<F>> divs;
        for (int i = 1; i <= n; ++i) {
            const std::vector<RatFunc<F>> prefix(e.begin(), e.begin() + i);
            const Subspace<F> si = Subspace<F>::span(K, prefix);
            gamma.push_back(static_cast<int>(product(si, si).dim()) - 2 * i + 1);
            divs.push_back(scan_divisor(prefix));
        }
        if (!genus_rule_violations(gamma).empty()) {
            ++genus_rule_breaks;
            problem(origin + ": genus rule breaks");
        }
        if (gamma != r.profile.gamma_seq) {
            ++genus_disagreements;
            problem(origin + ": gamma sequence disagrees with the product oracle");
        }
        if (divs != r.divisors) {
            ++divisor_disagreements;
            problem(origin + ": minimal divisors disagree with the valuation scan");
        }
        for (int i = 2; i < n; ++i) {
            if (gamma[static_cast<std::size_t>(i)] != gamma[static_cast<std::size_t>(i - 1)]) continue;
            const auto& a = divs[static_cast<std::size_t>(i - 2)];
            const auto& b = divs[static_cast<std::size_t>(i - 1)];
            const auto& c = divs[static_cast<std::size_t>(i)];
            ++growth_checked;
            if (c - b != b - a) {
                ++growth_breaks;
                problem(origin + ": D_{i+1} - D_i != D_i - D_{i-1} at i=" + std::to_string(i));
            }
            if (i >= 3) {
                ++support_checked;
                for (const auto& [p, v] : b.terms())
                    if (a.coeff(p) == 0) {
                        ++support_breaks;
                        problem(origin + ": new place " + p.to_string() + " in D_" + std::to_string(i));
                        break;
                    }
            }
        }
        const Finding& f = r.finding("L2.4");
        if (f.status != Status::not_applicable) ++index_checked;
        if (f.status == Status::fail) {
            ++index_breaks;
            problem(f.witness);
        }
    }
};

template <class F>
std::optional<AnalysisReport<F>> try_analyze(const Subspace<F>& s, const F& K, const std::string& origin, int* skipped) {
    AnalyzeOptions opt;
    opt.origin = origin;
    try {
        return analyze(s.basis(), K, opt);
    } catch (const NonSplitPlace&) {
        if (skipped) ++*skipped;
        return std::nullopt;
    }
}

struct Context {
    Pool pool;
    std::vector<CriterionResult> results;

    void add(int id, std::string title, bool pass, std::string detail) {
        results.push_back({id, std::move(title), pass, std::move(detail)});
    }
};

inline void check_gamma0(Context& cx) {
    const RationalField Q;
    std::string bad;
    for (int n = 3; n <= 10; ++n) {
        const auto r = analyze(canonical_gamma0(Q, n).basis(), Q, {});
        cx.pool.record(r, "gamma0 n=" + std::to_string(n));
        const bool ok = r.profile.gamma() == 0 && r.D() == Divisor<RationalField>::at(Place<RationalField>::infinity(), n - 1) &&
                        r.conjecture.dim_LD == n + r.profile.gamma();
        if (!ok && bad.empty()) bad = "n=" + std::to_string(n) + " D=" + r.D().to_string();
    }
    cx.add(1, "gamma = 0 family: D = (n-1)P_inf and dim L(D) = n", bad.empty(), bad.empty() ? "dims 3..10" : bad);
}

inline void check_gamma1(Context& cx) {
    const RationalField Q;
    std::string bad;
    int count = 0;
    for (int shape : {1, 2})
        for (int n = 4; n <= 10; ++n)
            for (long a : {0L, 1L, 2L, -1L}) {
                const auto r = analyze(canonical_gamma1(Q, n, shape, Rational(a)).basis(), Q, {});
                const std::string tag = "gamma1 shape=" + std::to_string(shape) + " n=" + std::to_string(n) + " alpha=" + std::to_string(a);
                cx.pool.record(r, tag);
                ++count;
                if ((r.profile.gamma() != 1 || r.conjecture.dim_LD > n + 1) && bad.empty())
                    bad = tag + " gamma=" + std::to_string(r.profile.gamma()) + " dim_LD=" + std::to_string(r.conjecture.dim_LD);
            }
    cx.add(2, "gamma = 1 families: gamma = 1 and dim L(D) <= n + 1", bad.empty(),
           bad.empty() ? std::to_string(count) + " instances" : bad);
}

/// Degree sets for gamma = 2 with optional single-place poles, and random
/// subspaces of L(D) with deg D = n; checks deg D <= n + 1 whenever gamma = 2.
inline void check_genus_two(Context& cx) {
    const RationalField Q;
    std::string bad;
    int families = 0, randoms = 0, attempts = 0, skipped = 0;
    auto check = [&](const AnalysisReport<RationalField>& r, const std::string& tag) {
        cx.pool.record(r, tag);
        if (r.n() < 5 || r.profile.gamma() != 2) return false;
        if (r.D().degree() > r.n() + 1 && bad.empty()) bad = tag + " deg D = " + std::to_string(r.D().degree());
        return true;
    };
    const std::vector<std::vector<long>> sets{{0, 1, 2, 3, 4}, {0, 1, 3, 4, 5}, {0, 2, 3, 4, 5},
                                              {0, 3, 4, 5, 6}, {0, 2, 4, 5, 6}, {0, 1, 2, 4, 5}};
    for (const auto& set : sets) {
        // orders (0, k2, ..., k5) with k_i in {0, 1, 2} at alpha in {0, 1}
        for (int code = 0; code < 81; ++code)
            for (long alpha : {0L, 1L}) {
                if (code == 0 && alpha == 1) continue;
                std::vector<int> orders{0};
                for (int c = code, k = 0; k < 4; ++k, c /= 3) orders.push_back(c % 3);
                const PolePlan<RationalField> plan{Rational(alpha), orders};
                const auto s = degree_family(Q, IntSet(set), code == 0 ? std::nullopt : std::optional(plan));
                std::string tag = "degset " + IntSet(set).to_string() + " alpha=" + std::to_string(alpha) + " orders=";
                for (int o : orders) tag += std::to_string(o);
                const auto r = try_analyze(s, Q, tag, &skipped);
                if (r && check(*r, tag)) ++families;
            }
    }
    Rng rng(2024);
    while (randoms < 500 && attempts < 4000) {
        ++attempts;
        const int n = static_cast<int>(uniform_int(rng, 5, 8));
        const int finite = static_cast<int>(uniform_int(rng, 0, 2));
        Divisor<RationalField> d = Divisor<RationalField>::at(Place<RationalField>::infinity(), n - finite);
        for (int k = 0; k < finite; ++k) d.add(Place<RationalField>::finite(Rational(uniform_int(rng, -2, 2))), 1);
        const std::uint64_t seed = rng() >> 1;
        const auto s = random_in_RR(Q, d, n, seed);
        const std::string tag = "family=random-rr D=\"" + d.to_string() + "\" n=" + std::to_string(n) + " seed=" + std::to_string(seed);
        const auto r = try_analyze(s, Q, tag, &skipped);
        if (r && check(*r, tag)) ++randoms;
    }
    const bool pass = bad.empty() && randoms >= 500 && families > 0;
    cx.add(3, "gamma = 2 with n >= 5: deg D <= n + 1", pass,
           bad.empty() ? std::to_string(families) + " degree-family and " + std::to_string(randoms) + " random instances with gamma = 2 (" +
                             std::to_string(attempts) + " random draws, " + std::to_string(skipped) + " non-split skipped)"
                       : bad);
}

inline void check_monomial_bridge(Context& cx) {
    const RationalField Q;
    Rng rng(4);
    std::string bad;
    for (int k = 0; k < 200; ++k) {
        const int size = static_cast<int>(uniform_int(rng, 1, 8));
        std::vector<long> v;
        for (int i = 0; i < size; ++i) v.push_back(uniform_int(rng, 0, 30));
        const IntSet a(v);
        std::set<long> sums;  // brute-force A + A
        for (long x : a.elems())
            for (long y : a.elems()) sums.insert(x + y);
        const auto s = monomial_space(a, Q);
        if (product(s, s).dim() != sums.size() && bad.empty()) bad = a.to_string();
    }
    cx.add(4, "dim (monomial space)^2 = |A+A|", bad.empty(), bad.empty() ? "200 random sets in [0,30]" : "mismatch on " + bad);
}

inline void check_super_filtered(Context& cx) {
    const RationalField Q;
    Rng rng(51);
    int checked = 0, attempts = 0, skipped = 0;
    std::string bad;
    while (checked < 100 && attempts < 1000) {
        ++attempts;
        const int inf = static_cast<int>(uniform_int(rng, 1, 5));
        Divisor<RationalField> d = Divisor<RationalField>::at(Place<RationalField>::infinity(), inf);
        const int finite = static_cast<int>(uniform_int(rng, 1, 2));
        for (int k = 0; k < finite; ++k)
            d.add(Place<RationalField>::finite(Rational(uniform_int(rng, -3, 3))), static_cast<int>(uniform_int(rng, 1, 2)));
        const int n = static_cast<int>(uniform_int(rng, 2, std::min(d.degree() + 1, 8)));
        const std::uint64_t seed = rng() >> 1;
        const std::string tag = "family=random-rr D=\"" + d.to_string() + "\" n=" + std::to_string(n) + " seed=" + std::to_string(seed);
        const auto r = try_analyze(random_in_RR(Q, d, n, seed), Q, tag, &skipped);
        if (!r) continue;
        cx.pool.record(*r, tag);
        if (!r->super_basis) continue;
        // pole floors by direct scan of the filtered basis
        std::map<Rational, int> floors;
        for (const auto& e : r->basis.elements)
            for (const auto& [a, m] : linear_root_factorization(e.den()).roots) {
                const int v = valuation(e, Place<RationalField>::finite(a));
                auto it = floors.find(a);
                floors[a] = it == floors.end() ? v : std::min(it->second, v);
            }
        if (floors.empty()) continue;
        ++checked;
        const auto& sb = r->super_basis->elements;
        std::string why;
        if (Subspace<RationalField>::span(Q, sb) != r->basis.space) why = "does not span S";
        for (std::size_t i = 1; i < sb.size() && why.empty(); ++i)
            if (sb[i].degree() <= sb[i - 1].degree()) why = "degree order lost";
        for (const auto& [a, m] : floors) {
            const auto p = Place<RationalField>::finite(a);
            for (std::size_t i = 1; i < sb.size() && why.empty(); ++i)
                if (valuation(sb[i], p) > valuation(sb[i - 1], p)) why = "v_" + a.to_string() + " increases";
            if (why.empty() && valuation(sb.back(), p) != m) why = "v_" + a.to_string() + "(e_n) != m_alpha";
        }
        if (!why.empty() && bad.empty()) bad = tag + ": " + why;
    }
    cx.add(7, "super filtered basis: v_alpha chains non-increasing down to m_alpha", bad.empty() && checked >= 100,
           bad.empty() ? std::to_string(checked) + " instances with finite poles (" + std::to_string(skipped) + " non-split skipped)" : bad);
}

/// T_i in S_i^2 through an explicit basis x^k / c of T_i.
template <class F>
bool T_inclusions_direct(const AnalysisReport<F>& r) {
    const F& K = r.basis.space.field();
    const int t = *r.profile.first_jump;
    for (int i = t - 1; i <= r.n(); ++i) {
        const auto& d = r.divisors[static_cast<std::size_t>(i - 1)];
        Poly<F> c = Poly<F>::one(K);
        for (const auto& [p, v] : d.terms())
            if (!p.is_infinity()) c = c * Poly<F>::linear(K, *p.alpha).pow(static_cast<unsigned>(v));
        const int top = t - 2 + d.degree();
        const auto& si = r.filtration[static_cast<std::size_t>(i - 1)];
        const Subspace<F> sq = product(si, si);
        for (int k = 0; k <= top; ++k)
            if (!sq.contains(RatFunc<F>(Poly<F>::monomial(K, K.one(), k), c))) return false;
    }
    return true;
}

/// Every T_i in S_i^2 and dim L(D) <= n + gamma, reported separately: the
/// inclusions fail on spaces whose S_{t-1} generates a proper subfield (the
/// degree family {0,2,4,...,2g,2g+1,2g+2} among them) while the bound holds.
inline void check_max_growth(Context& cx) {
    const RationalField Q;
    int qualifying = 0, skipped = 0, t_breaks = 0, bound_breaks = 0, bound_breaks_in_range = 0;
    std::string first_t, first_bound;
    auto consider = [&](const Subspace<RationalField>& s, const std::string& tag) {
        const auto r = try_analyze(s, Q, tag, &skipped);
        if (!r) return;
        cx.pool.record(*r, tag);
        const int n = r->n(), dm = r->delta_max;
        if (n < 3 || r->profile.gamma_at(3) != 0 || dm < 1 || dm > n || r->profile.gamma_at(dm) != 0) return;
        if (!r->growth || t_inclusion_gate(*r->growth, r->profile)) return;
        ++qualifying;
        if (!T_inclusions_direct(*r)) {
            ++t_breaks;
            if (first_t.empty()) first_t = r->finding("L5.3").witness;
        }
        if (r->conjecture.dim_LD > n + r->profile.gamma()) {
            ++bound_breaks;
            if (r->conjecture.hypothesis) ++bound_breaks_in_range;
            if (first_bound.empty())
                first_bound = tag + ": dim L(D) = " + std::to_string(r->conjecture.dim_LD) + " > n + gamma";
        }
    };
    for (int n = 5; n <= 9; ++n)
        for (long a : {0L, 1L, 2L, -1L}) consider(canonical_gamma1(Q, n, 1, Rational(a)), "gamma1a n=" + std::to_string(n));
    std::vector<std::vector<long>> sets{{0, 1, 2, 3, 5}, {0, 1, 2, 3, 4, 6}, {0, 1, 2, 3, 5, 6},
                                       {0, 1, 2, 3, 4, 5, 7}, {0, 1, 2, 3, 4}, {0, 1, 2, 3, 4, 5}};
    // degree sets of S_5 for gamma = 2 and of S_6 for gamma = 3, and the two shapes of S_{g+3}
    for (const auto& v : std::vector<std::vector<long>>{{0, 1, 3, 4, 5}, {0, 2, 3, 4, 5}, {0, 3, 4, 5, 6}, {0, 2, 4, 5, 6},
                                                        {0, 2, 3, 4, 5, 6}, {0, 3, 4, 5, 6, 7}, {0, 4, 5, 6, 7, 8},
                                                        {0, 1, 3, 4, 5, 6}, {0, 2, 4, 5, 6, 7}, {0, 2, 4, 6, 7, 8}})
        sets.push_back(v);
    for (const auto& set : sets)
        for (int last = 0; last <= 2; ++last)
            for (long alpha : {0L, 1L, -2L}) {
                if (last == 0 && alpha != 0) continue;
                std::vector<int> orders(set.size(), 0);
                orders.back() = last;
                if (set.size() >= 6) orders[orders.size() - 2] = last > 0 ? 1 : 0;
                const PolePlan<RationalField> plan{Rational(alpha), orders};
                consider(degree_family(Q, IntSet(set), std::optional(plan)),
                         "degset " + IntSet(set).to_string() + " alpha=" + std::to_string(alpha) + " last order " + std::to_string(last));
            }
    Rng rng(8);
    for (int k = 0; k < 150; ++k) {
        const int n = static_cast<int>(uniform_int(rng, 4, 8));
        Divisor<RationalField> d = Divisor<RationalField>::at(Place<RationalField>::infinity(), n + static_cast<int>(uniform_int(rng, -1, 1)));
        if (uniform_int(rng, 0, 1)) d.add(Place<RationalField>::finite(Rational(uniform_int(rng, -2, 2))), 1);
        if (d.degree() + 1 < n) continue;
        const std::uint64_t seed = rng() >> 1;
        consider(random_in_RR(Q, d, n, seed), "family=random-rr D=\"" + d.to_string() + "\" n=" + std::to_string(n) + " seed=" + std::to_string(seed));
    }
    const bool pass = t_breaks == 0 && bound_breaks == 0 && qualifying >= 20;
    std::string detail = std::to_string(qualifying) + " qualifying instances; T_i in S_i^2 fails on " + std::to_string(t_breaks) +
                         ", dim L(D) <= n + gamma fails on " + std::to_string(bound_breaks) + " (" +
                         std::to_string(bound_breaks_in_range) + " of them with gamma <= n - 3)";
    if (!first_t.empty()) detail += "; first inclusion failure: " + first_t;
    if (!first_bound.empty()) detail += "; first bound failure: " + first_bound;
    cx.add(8, "gamma_3 = 0 = gamma_{Delta_Max} under the t gate: T_i in S_i^2 and dim L(D) <= n + gamma", pass, detail);
}

inline void check_pole_count(Context& cx) {
    const RationalField Q;
    Rng rng(9);
    std::string bad;
    int done = 0;
    while (done < 200) {
        std::vector<Rational> num;
        const int dn = static_cast<int>(uniform_int(rng, 0, 8));
        for (int i = 0; i <= dn; ++i) num.emplace_back(uniform_int(rng, -10, 10));
        Poly<RationalField> den = Poly<RationalField>::one(Q);
        const int dd = static_cast<int>(uniform_int(rng, 0, 8));
        for (int i = 0; i < dd; ++i) den = den * Poly<RationalField>::linear(Q, Rational(uniform_int(rng, -10, 10)));
        const Poly<RationalField> p(Q, num);
        if (p.is_zero()) continue;
        const RatFunc<RationalField> f(p, den);
        if (f.num().is_constant() && f.den().is_constant()) continue;
        ++done;
        // poles by multiplicity: finite roots of the reduced denominator plus the order at infinity
        int poles = std::max(0, f.num().degree() - f.den().degree());
        for (const auto& [a, m] : linear_root_factorization(f.den()).roots) poles += m;
        const int via_divisor = minimal_divisor(Subspace<RationalField>::span(Q, {RatFunc<RationalField>::one(Q), f})).degree();
        if ((pole_count(f) != poles || via_divisor != poles) && bad.empty()) bad = f.to_string();
    }
    cx.add(9, "pole count = deg minimal divisor of <1, f>", bad.empty(), bad.empty() ? "200 random f" : "mismatch on " + bad);
}

/// Every B in E of size codim with base + span(B) = target; returns the
/// masks. |E| <= 8 keeps this at 256 subsets.
template <class F>
std::vector<unsigned> complement_bases(const Subspace<F>& target, const Subspace<F>& base, const std::vector<RatFunc<F>>& e) {
    std::vector<unsigned> out;
    const std::size_t codim = target.dim() - base.dim();
    for (unsigned mask = 0; mask < (1u << e.size()); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != codim) continue;
        Subspace<F> s = base;
        std::vector<RatFunc<F>> pick;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (mask >> i & 1u) pick.push_back(e[i]);
        if (!pick.empty()) s = sum(base, Subspace<F>::span(base.field(), pick));
        if (s == target) out.push_back(mask);
    }
    return out;
}

inline void check_needed(Context& cx) {
    const RationalField Q;
    int instances = 0;
    std::string bad;
    bool table1 = false;
    auto run = [&](const Subspace<RationalField>& s, const std::string& tag) {
        const auto fb = filtered_basis(s);
        const auto filt = natural_filtration(fb);
        for (int c = 2; c <= static_cast<int>(fb.size()) && c <= 8; ++c) {
            const auto col = needed_column(fb, filt, c);
            const auto& sc = filt[static_cast<std::size_t>(c - 1)];
            const auto& sp = filt[static_cast<std::size_t>(c - 2)];
            const auto target = product(sc, sc), base = product(sp, sp);
            std::vector<RatFunc<RationalField>> e;
            for (int i = 1; i <= c; ++i) e.push_back(fb.elements[static_cast<std::size_t>(i - 1)] * fb.elements[static_cast<std::size_t>(c - 1)]);
            const auto bases = complement_bases(target, base, e);
            ++instances;
            unsigned common = (1u << c) - 1;
            for (unsigned m : bases) common &= m;
            for (int i = 0; i < c; ++i)
                if (col.needed[static_cast<std::size_t>(i)] != static_cast<bool>(common >> i & 1u) && bad.empty())
                    bad = tag + " column " + std::to_string(c) + ": neededness of e" + std::to_string(i + 1) + " disagrees";
            // every T over the lowest c bits: rank formulas vs the subset extremes
            for (unsigned tmask = 0; tmask < (1u << c); ++tmask) {
                std::vector<std::size_t> t;
                for (int i = 0; i < c; ++i)
                    if (tmask >> i & 1u) t.push_back(static_cast<std::size_t>(i));
                int lo = c + 1, hi = -1;
                for (unsigned m : bases) {
                    const int k = __builtin_popcount(m & tmask);
                    lo = std::min(lo, k);
                    hi = std::max(hi, k);
                }
                const NeededCount nc = needed_count(target, base, e, t);
                if ((nc.min_count != lo || nc.max_count != hi) && bad.empty())
                    bad = tag + " column " + std::to_string(c) + ": needed_count differs from subset search";
            }
            if (tag == "table1" && c == 5) {
                const std::vector<bool> expect{false, false, true, true, true};
                table1 = col.needed == expect;
            }
        }
    };
    run(monomial_space(IntSet({0, 1, 2, 4, 5}), Q), "table1");
    for (const auto& set : std::vector<std::vector<long>>{{0, 2, 4, 5, 6}, {0, 1, 3, 4, 5}, {0, 3, 4, 5, 6}, {0, 1, 2, 3, 5, 7}})
        run(monomial_space(IntSet(set), Q), IntSet(set).to_string());
    Rng rng(11);
    int skipped = 0;
    for (int k = 0; k < 12; ++k) {
        Divisor<RationalField> d = Divisor<RationalField>::at(Place<RationalField>::infinity(), static_cast<int>(uniform_int(rng, 3, 6)));
        if (uniform_int(rng, 0, 1)) d.add(Place<RationalField>::finite(Rational(uniform_int(rng, -2, 2))), 1);
        const int n = static_cast<int>(uniform_int(rng, 3, std::min(d.degree() + 1, 6)));
        const auto s = random_in_RR(Q, d, n, rng() >> 1);
        try {
            run(s, "random " + d.to_string());
        } catch (const NonSplitPlace&) {
            ++skipped;
        }
    }
    cx.add(11, "needed_count and is_needed match exhaustive subset search", bad.empty() && table1 && instances >= 50,
           bad.empty() ? std::to_string(instances) + " columns; Table 1 column 5 needs e3e5, e4e5, e5e5 " + (table1 ? "(reproduced)" : "(NOT reproduced)")
                       : bad);
}

inline void check_integer_freiman(Context& cx) {
    const auto start = std::chrono::steady_clock::now();
    int hyp = 0;
    std::string bad;
    for (unsigned mask = 0; mask < (1u << 13); ++mask) {
        if (__builtin_popcount(mask) < 2) continue;
        std::vector<long> v;
        for (long i = 0; i <= 12; ++i)
            if (mask >> i & 1u) v.push_back(i);
        std::set<long> sums;
        for (long x : v)
            for (long y : v) sums.insert(x + y);
        const long k = static_cast<long>(v.size()), s2 = static_cast<long>(sums.size());
        // largest step d dividing every difference, by trial
        long step = 1;
        for (long d = v.back() - v.front(); d >= 1; --d) {
            bool all = true;
            for (long x : v) all = all && (x - v.front()) % d == 0;
            if (all) {
                step = d;
                break;
            }
        }
        const long hull = (v.back() - v.front()) / step + 1;
        const FreimanReport r = freiman_3k4(IntSet(v));
        if ((r.hull_length != hull || static_cast<long>(r.sumset_size) != s2) && bad.empty())
            bad = IntSet(v).to_string() + ": report disagrees with brute force";
        if (s2 <= 3 * k - 4) {
            ++hyp;
            if (hull > s2 - k + 1 && bad.empty()) bad = IntSet(v).to_string() + ": hull exceeds |A+A|-|A|+1";
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    cx.add(12, "3k-4: AP hull <= |A+A| - |A| + 1 for all A in [0,12]", bad.empty() && secs < 5.0,
           bad.empty() ? std::to_string(hyp) + " sets meet the hypothesis" : bad);
}

inline std::string random_integer_instance(Rng& rng) {
    std::string text = "1\n";
    const int n = static_cast<int>(uniform_int(rng, 3, 6));
    for (int i = 1; i < n; ++i) {
        std::string e;
        const int deg = static_cast<int>(uniform_int(rng, 1, 5));
        for (int k = deg; k >= 0; --k) {
            long c = uniform_int(rng, -5, 5);
            if (k == deg && c == 0) c = 1;
            if (c == 0) continue;
            e += (e.empty() ? "" : " + ") + ("(" + std::to_string(c) + ")") + "*x^" + std::to_string(k);
        }
        if (uniform_int(rng, 0, 2) == 0) {
            long c = uniform_int(rng, 1, 5);
            e += " + " + std::to_string(c) + "/(x - (" + std::to_string(uniform_int(rng, -3, 3)) + "))^" + std::to_string(uniform_int(rng, 1, 2));
        }
        text += e + "\n";
    }
    return text;
}

inline void check_cross_field(Context& cx) {
    const std::vector<std::uint64_t> primes{1000003ULL, 1000033ULL, 1000037ULL};
    Rng rng(13);
    int compared = 0, degenerate = 0, nonsplit = 0, draws = 0;
    std::string bad;
    struct Shape {
        int dim;
        std::vector<int> gamma_seq, degrees, divisor_degrees;
        bool operator==(const Shape&) const = default;
    };
    auto shape_of = [](const auto& r) {
        Shape s{r.dim, r.profile.gamma_seq, r.profile.degrees, {}};
        for (const auto& d : r.divisors) s.divisor_degrees.push_back(d.degree());
        return s;
    };
    while (compared < 100 && draws < 1000) {
        ++draws;
        const std::string body = random_integer_instance(rng);
        const std::string tag = "instance #" + std::to_string(draws);
        const RationalField Q;
        const auto gq = instance_generators(parse_instance_file("field: q\n" + body), Q);
        std::optional<AnalysisReport<RationalField>> rq;
        try {
            rq = analyze(gq, Q, {});
        } catch (const NonSplitPlace&) {
            ++nonsplit;
            continue;
        }
        cx.pool.record(*rq, tag + " over q");
        bool skip = false;
        std::vector<Shape> shapes;
        for (auto p : primes) {
            const PrimeField K(p);
            const auto gp = instance_generators(parse_instance_file("field: fp " + std::to_string(p) + "\n" + body), K);
            if (Subspace<PrimeField>::span(K, gp).dim() < static_cast<std::size_t>(rq->dim)) {
                skip = true;
                break;
            }
            try {
                const auto rp = analyze(gp, K, {});
                cx.pool.record(rp, tag + " over fp " + std::to_string(p));
                shapes.push_back(shape_of(rp));
            } catch (const NonSplitPlace&) {
                skip = true;
                break;
            }
        }
        if (skip) {
            ++degenerate;
            continue;
        }
        ++compared;
        for (const auto& s : shapes)
            if (!(s == shape_of(*rq)) && bad.empty()) bad = tag + ":\n" + body;
    }
    cx.add(13, "Q vs F_p (p = 1000003, 1000033, 1000037): identical dim, gamma_seq, degrees, divisor degrees",
           bad.empty() && compared >= 100,
           bad.empty() ? std::to_string(compared) + " instances compared, " + std::to_string(degenerate) + " degenerate, " +
                             std::to_string(nonsplit) + " non-split over Q"
                       : "differs on " + bad);
}

inline void check_determinism(Context& cx, const AcceptanceOptions& opt) {
    AnalyzeFlags jf;
    jf.json = true;
    const auto a1 = analyze_text(kTable1Text, "table1", jf), a2 = analyze_text(kTable1Text, "table1", jf);
    const auto t1 = analyze_text(kTable1Text, "table1", {}), t2 = analyze_text(kTable1Text, "table1", {});
    FuzzConfig cfg;
    cfg.count = 40;
    cfg.seed = 7;
    cfg.fields = {FieldSpec{}, FieldSpec{true, 101}};
    const auto f1 = cmd_fuzz(cfg), f2 = cmd_fuzz(cfg);
    std::string bad;
    if (a1.out != a2.out || t1.out != t2.out || a1.code != 0) bad = "analyze output differs between runs";
    if (f1.out != f2.out || f1.out.empty()) bad = "fuzz summary differs between runs";
    std::string golden = "golden file not checked (no path given)";
    if (opt.golden_table1) {
        std::string want;
        try {
            want = detail::read_file(*opt.golden_table1);
        } catch (const Error& e) {
            bad = e.what();
        }
        if (bad.empty() && want != a1.out) bad = "Table 1 JSON differs from " + *opt.golden_table1;
        golden = "Table 1 JSON matches the golden file";
    }
    cx.add(14, "determinism: analyze and fuzz byte-identical; Table 1 golden JSON", bad.empty(), bad.empty() ? golden : bad);
}

/// Genus rule and divisor growth over everything the other suites analyzed,
/// topped up with random subspaces over F_101 to at least 1500 instances.
inline void check_pool(Context& cx) {
    const PrimeField K(101);
    Rng rng(55);
    int skipped = 0;
    while (cx.pool.instances < 1500) {
        Divisor<PrimeField> d = Divisor<PrimeField>::at(Place<PrimeField>::infinity(), static_cast<int>(uniform_int(rng, 1, 6)));
        if (uniform_int(rng, 0, 1)) d.add(Place<PrimeField>::finite(K.from_int(uniform_int(rng, 0, 5))), static_cast<int>(uniform_int(rng, 1, 2)));
        const int n = static_cast<int>(uniform_int(rng, 1, std::min(d.degree() + 1, 8)));
        const std::uint64_t seed = rng() >> 1;
        const std::string tag = "family=random-rr D=\"" + d.to_string() + "\" n=" + std::to_string(n) + " seed=" + std::to_string(seed) + " field=fp:101";
        if (const auto r = try_analyze(random_in_RR(K, d, n, seed), K, tag, &skipped)) cx.pool.record(*r, tag);
    }
    const Pool& p = cx.pool;
    const bool genus = p.genus_rule_breaks == 0 && p.genus_disagreements == 0;
    cx.add(5, "gamma_1 = 0 and gamma_i non-decreasing on every instance", genus,
           std::to_string(p.instances) + " instances, " + std::to_string(p.genus_rule_breaks) + " rule breaks, " +
               std::to_string(p.genus_disagreements) + " disagreements with the product oracle" +
               (genus ? "" : "; first: " + p.first_problem));
    const bool growth = p.growth_breaks == 0 && p.support_breaks == 0 && p.divisor_disagreements == 0;
    cx.add(6, "divisor growth: equal steps when gamma stalls; no new places for i >= 3", growth,
           std::to_string(p.growth_checked) + " equal-step and " + std::to_string(p.support_checked) + " support checks, " +
               std::to_string(p.growth_breaks + p.support_breaks) + " breaks, " + std::to_string(p.divisor_disagreements) +
               " divisor disagreements" + (growth ? "" : "; first: " + p.first_problem));
    cx.add(10, "[K(S) : K(S_{delta+2})] = 1 wherever delta is defined", p.index_breaks == 0 && p.index_checked > 0,
           std::to_string(p.index_checked) + " instances, " + std::to_string(p.index_breaks) + " breaks" +
               (p.index_breaks == 0 ? "" : "; first: " + p.first_problem));
}

}  // namespace acceptance

/// Runs all criteria; results sorted by id. A criterion that throws is a fail.
inline std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {},
                                                   const std::function<void(const CriterionResult&)>& progress = {}) {
    using namespace acceptance;
    Context cx;
    const std::vector<std::pair<int, std::function<void()>>> steps{
        {1, [&] { check_gamma0(cx); }},           {2, [&] { check_gamma1(cx); }},
        {3, [&] { check_genus_two(cx); }},        {4, [&] { check_monomial_bridge(cx); }},
        {7, [&] { check_super_filtered(cx); }},   {8, [&] { check_max_growth(cx); }},
        {9, [&] { check_pole_count(cx); }},       {11, [&] { check_needed(cx); }},
        {12, [&] { check_integer_freiman(cx); }}, {13, [&] { check_cross_field(cx); }},
        {14, [&] { check_determinism(cx, opt); }}, {5, [&] { check_pool(cx); }},
    };
    for (const auto& [id, fn] : steps) {
        const std::size_t before = cx.results.size();
        try {
            fn();
        } catch (const std::exception& e) {
            cx.add(id, "criterion " + std::to_string(id), false, std::string("threw: ") + e.what());
            if (id == 5) {
                cx.add(6, "criterion 6", false, "pool check threw");
                cx.add(10, "criterion 10", false, "pool check threw");
            }
        }
        if (progress)
            for (std::size_t i = before; i < cx.results.size(); ++i) progress(cx.results[i]);
    }
    std::sort(cx.results.begin(), cx.results.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return cx.results;
}

inline std::string format_criterion(const CriterionResult& r) {
    return "criterion " + std::string(r.id < 10 ? " " : "") + std::to_string(r.id) + ": " + (r.pass ? "PASS" : "FAIL") + "  " +
           r.title + "  [" + r.detail + "]";
}

}  // namespace ffreiman
