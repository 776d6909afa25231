#pragma once

// Filtered bases with respect to v_inf, the natural filtration S_1 < ... < S_n,
// genus sequences, degree tables, neededness of products, super filtered
// bases and the growth of the minimal divisors D_i.

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "divisor.hpp"

namespace ffreiman {

/// e_1 = 1, e_2, ..., e_n with strictly increasing degree. `space` is the
/// normalized space S / normalizer.
template <class F>
struct FilteredBasis {
    Subspace<F> space;
    std::vector<RatFunc<F>> elements;
    RatFunc<F> normalizer;
    std::vector<int> degrees;

    std::size_t size() const noexcept { return elements.size(); }
    /// Numerators over space.common_den(), aligned with elements.
    std::vector<Poly<F>> numerators() const {
        const auto& rows = space.numerators();
        return {rows.rbegin(), rows.rend()};
    }
};

template <class F>
FilteredBasis<F> filtered_basis(const Subspace<F>& s) {
    if (s.is_zero()) throw InvalidParameter("filtered basis of the zero space");
    const auto raw = s.basis();
    FilteredBasis<F> out;
    out.normalizer = raw.back();
    out.space = s.scaled(out.normalizer.inverse());
    const auto b = out.space.basis();
    out.elements.assign(b.rbegin(), b.rend());
    if (out.elements.front() != RatFunc<F>::one(s.field()))
        throw InternalInvariantViolation("normalized filtered basis does not start with 1");
    out.degrees = out.space.degrees_ascending();
    return out;
}

/// S_i = <e_1, ..., e_i> for i = 1..n.
template <class F>
std::vector<Subspace<F>> natural_filtration(const FilteredBasis<F>& b) {
    const auto nums = b.numerators();
    std::vector<Subspace<F>> out;
    std::vector<Poly<F>> prefix;
    for (const auto& p : nums) {
        prefix.push_back(p);
        out.push_back(Subspace<F>::from_numerators(b.space.field(), b.space.common_den(), prefix));
    }
    return out;
}

/// dim S_i^2 for i = 1..n, by one incremental echelon over den^2.
template <class F>
std::vector<int> square_dims(const FilteredBasis<F>& b) {
    const auto nums = b.numerators();
    PolyEchelon<F> ech(b.space.field());
    std::vector<int> dims;
    for (std::size_t i = 0; i < nums.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) ech.insert(nums[j] * nums[i]);
        dims.push_back(static_cast<int>(ech.rank()));
    }
    return dims;
}

struct GenusProfile {
    std::vector<int> gamma_seq;     // gamma_1..gamma_n
    std::vector<int> square_dims;   // dim S_i^2
    std::vector<int> degrees;       // deg e_i
    std::optional<int> t;           // gamma_t = gamma_n > gamma_{t-1}
    std::optional<int> t1;          // gamma_{t1} = 1 > gamma_{t1-1}
    std::optional<int> first_jump;  // gamma_j > gamma_{j-1} = 0
    std::optional<int> delta;       // max (gamma_{i+1} - gamma_i); needs n >= 2

    int n() const noexcept { return static_cast<int>(gamma_seq.size()); }
    int gamma() const { return gamma_seq.back(); }
    /// 1-based.
    int gamma_at(int i) const { return gamma_seq.at(static_cast<std::size_t>(i - 1)); }
};

/// Indices of a sequence where the genus rule gamma_1 = 0, gamma_i <= gamma_{i+1}
/// breaks; empty when it holds.
inline std::vector<int> genus_rule_violations(const std::vector<int>& gamma_seq) {
    std::vector<int> bad;
    if (!gamma_seq.empty() && gamma_seq.front() != 0) bad.push_back(1);
    for (std::size_t i = 1; i < gamma_seq.size(); ++i)
        if (gamma_seq[i] < gamma_seq[i - 1]) bad.push_back(static_cast<int>(i + 1));
    return bad;
}

/// Profile without the monotonicity assertion; used to report violations.
template <class F>
GenusProfile raw_genus_profile(const FilteredBasis<F>& b) {
    GenusProfile g;
    g.degrees = b.degrees;
    g.square_dims = square_dims(b);
    for (std::size_t i = 0; i < g.square_dims.size(); ++i)
        g.gamma_seq.push_back(g.square_dims[i] - 2 * static_cast<int>(i + 1) + 1);
    const int n = g.n();
    const int last = g.gamma_seq.back();
    for (int i = 2; i <= n; ++i) {
        const int cur = g.gamma_at(i), prev = g.gamma_at(i - 1);
        if (last > 0 && cur == last && prev < last && !g.t) g.t = i;
        if (cur == 1 && prev == 0 && !g.t1) g.t1 = i;
        if (cur > 0 && prev == 0 && !g.first_jump) g.first_jump = i;
        g.delta = std::max(g.delta.value_or(cur - prev), cur - prev);
    }
    return g;
}

template <class F>
GenusProfile genus_profile(const FilteredBasis<F>& b) {
    GenusProfile g = raw_genus_profile(b);
    if (const auto bad = genus_rule_violations(g.gamma_seq); !bad.empty())
        throw InternalInvariantViolation("genus sequence breaks monotonicity at index " + std::to_string(bad.front()));
    return g;
}

/// Upper-triangular table of deg(e_i e_j), i <= j <= k; empty cells below.
inline std::vector<std::vector<std::optional<int>>> degree_table(const std::vector<int>& degrees, int k) {
    if (k < 1 || k > static_cast<int>(degrees.size())) throw InvalidParameter("degree table size out of range");
    std::vector<std::vector<std::optional<int>>> t(static_cast<std::size_t>(k),
                                                   std::vector<std::optional<int>>(static_cast<std::size_t>(k)));
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) t[i][j] = degrees[i] + degrees[j];
    return t;
}

template <class F>
std::vector<std::vector<std::optional<int>>> degree_table(const FilteredBasis<F>& b, int k) {
    return degree_table(b.degrees, k);
}

inline std::string render_degree_table(const std::vector<std::vector<std::optional<int>>>& t) {
    std::string s = "     ";
    char buf[32];
    for (std::size_t j = 0; j < t.size(); ++j) {
        std::snprintf(buf, sizeof buf, "%5s", ("e" + std::to_string(j + 1)).c_str());
        s += buf;
    }
    s += "\n";
    for (std::size_t i = 0; i < t.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%5s", ("e" + std::to_string(i + 1)).c_str());
        s += buf;
        for (const auto& c : t[i]) {
            std::snprintf(buf, sizeof buf, "%5s", c ? std::to_string(*c).c_str() : "-");
            s += buf;
        }
        s += "\n";
    }
    return s;
}

struct NeededCount {
    int min_count;
    int max_count;
    /// "exactly k" is meaningful only when every complement basis agrees.
    bool exact() const noexcept { return min_count == max_count; }
};

namespace detail {

template <class F>
Subspace<F> span_with(const Subspace<F>& base, const std::vector<RatFunc<F>>& extra) {
    if (extra.empty()) return base;
    return sum(base, Subspace<F>::span(base.field(), extra));
}

template <class F>
void check_target(const Subspace<F>& target, const Subspace<F>& base, const std::vector<RatFunc<F>>& e) {
    if (span_with(base, e) != target) throw SpanMismatch();
}

}  // namespace detail

/// Over all B in E with base + span(B) = target and |B| = codim, the least and
/// greatest |B cap T|. T holds indices into E.
template <class F>
NeededCount needed_count(const Subspace<F>& target, const Subspace<F>& base, const std::vector<RatFunc<F>>& e,
                         const std::vector<std::size_t>& t) {
    detail::check_target(target, base, e);
    std::vector<bool> in_t(e.size(), false);
    for (auto i : t) {
        if (i >= e.size()) throw InvalidParameter("T is not a subset of E");
        in_t[i] = true;
    }
    std::vector<RatFunc<F>> rest, only;
    for (std::size_t i = 0; i < e.size(); ++i) (in_t[i] ? only : rest).push_back(e[i]);
    const int full = static_cast<int>(target.dim());
    const int without_t = static_cast<int>(detail::span_with(base, rest).dim());
    const int with_t = static_cast<int>(detail::span_with(base, only).dim());
    return {full - without_t, with_t - static_cast<int>(base.dim())};
}

/// s = E[index] is needed iff s is not in base + span(E \ {s}).
template <class F>
bool is_needed(std::size_t index, const Subspace<F>& target, const Subspace<F>& base,
               const std::vector<RatFunc<F>>& e) {
    detail::check_target(target, base, e);
    if (index >= e.size()) throw InvalidParameter("needed element is not in E");
    std::vector<RatFunc<F>> rest;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (i != index) rest.push_back(e[i]);
    return !detail::span_with(base, rest).contains(e[index]);
}

/// 1-based indices i <= t with deg(e_i e_t) > max deg S_{t-1}^2 = 2 deg(e_{t-1}).
inline std::vector<int> needed_degree_screen(const std::vector<int>& degrees, int t) {
    if (t < 2 || t > static_cast<int>(degrees.size())) throw InvalidParameter("screen column out of range");
    const int threshold = 2 * degrees[static_cast<std::size_t>(t - 2)];
    std::vector<int> out;
    for (int i = 1; i <= t; ++i)
        if (degrees[static_cast<std::size_t>(i - 1)] + degrees[static_cast<std::size_t>(t - 1)] > threshold) out.push_back(i);
    return out;
}

/// Neededness of the products e_i e_c for S_c^2 compared to S_{c-1}^2.
struct NeededColumn {
    int column = 0;
    int codim = 0;
    std::vector<int> degrees;     // deg(e_i e_c)
    std::vector<bool> needed;     // per i
    std::vector<bool> forced;     // degree screen
    NeededCount all_count{0, 0};  // T = E
};

template <class F>
NeededColumn needed_column(const FilteredBasis<F>& b, const std::vector<Subspace<F>>& filtration, int c) {
    if (c < 2 || c > static_cast<int>(b.size())) throw InvalidParameter("needed column out of range");
    const auto& sc = filtration[static_cast<std::size_t>(c - 1)];
    const auto& sp = filtration[static_cast<std::size_t>(c - 2)];
    const Subspace<F> target = product(sc, sc), base = product(sp, sp);
    std::vector<RatFunc<F>> e;
    const auto& ec = b.elements[static_cast<std::size_t>(c - 1)];
    for (int i = 1; i <= c; ++i) e.push_back(b.elements[static_cast<std::size_t>(i - 1)] * ec);
    NeededColumn out;
    out.column = c;
    out.codim = static_cast<int>(target.dim() - base.dim());
    const auto screen = needed_degree_screen(b.degrees, c);
    std::vector<std::size_t> all;
    for (int i = 1; i <= c; ++i) {
        out.degrees.push_back(b.degrees[static_cast<std::size_t>(i - 1)] + b.degrees[static_cast<std::size_t>(c - 1)]);
        out.needed.push_back(is_needed(static_cast<std::size_t>(i - 1), target, base, e));
        out.forced.push_back(std::find(screen.begin(), screen.end(), i) != screen.end());
        all.push_back(static_cast<std::size_t>(i - 1));
    }
    out.all_count = needed_count(target, base, e, all);
    return out;
}

/// (v_alpha(f), leading Laurent coefficient at alpha).
template <class F>
std::pair<int, typename F::value_type> laurent_lead(const RatFunc<F>& f, const typename F::value_type& a) {
    if (f.is_zero()) throw ZeroElement();
    const Poly<F> n = f.num().shift(a), d = f.den().shift(a);
    const int on = n.trailing_degree(), od = d.trailing_degree();
    return {on - od, n.coeff(on) / d.coeff(od)};
}

template <class F>
struct SuperFilteredBasis {
    using T = typename F::value_type;
    std::vector<RatFunc<F>> elements;
    std::map<T, int> pole_floor;  // alpha -> m_alpha < 0
    std::vector<long> shifts;     // a used at step i (index 0 unused)
};

/// Sweep e_i <- e_i + a e_{i-1} for i = 2..n, with a the least nonnegative
/// integer avoiding every cancellation value a_alpha.
template <class F>
SuperFilteredBasis<F> super_filtered_basis(const FilteredBasis<F>& b) {
    using T = typename F::value_type;
    const F& K = b.space.field();
    SuperFilteredBasis<F> out;
    out.elements = b.elements;
    out.shifts.assign(b.size(), 0);
    for (const auto& [a, mult] : split_roots(b.space.common_den())) {
        int m = 0;
        for (const auto& e : b.elements) m = std::min(m, valuation(e, Place<F>::finite(a)));
        if (m < 0) out.pole_floor[a] = m;
    }
    for (std::size_t i = 1; i < out.elements.size(); ++i) {
        std::vector<T> bad;
        for (const auto& [a, m] : out.pole_floor) {
            const auto [vp, cp] = laurent_lead(out.elements[i - 1], a);
            const auto [vi, ci] = laurent_lead(out.elements[i], a);
            if (vi > vp)
                bad.push_back(K.zero());
            else if (vi == vp)
                bad.push_back(-(ci / cp));
        }
        long pick = 0;
        for (;; ++pick) {
            if (K.characteristic() != 0 && static_cast<std::uint64_t>(pick) >= K.characteristic())
                throw SmallFieldExhausted();
            const T c = K.from_int(pick);
            if (std::find(bad.begin(), bad.end(), c) == bad.end()) break;
        }
        out.shifts[i] = pick;
        if (pick != 0) out.elements[i] = out.elements[i] + out.elements[i - 1] * K.from_int(pick);
    }
    return out;
}

template <class F>
SuperFilteredBasis<F> super_filtered_basis(const Subspace<F>& s) {
    return super_filtered_basis(filtered_basis(s));
}

/// Checks the super filtered postcondition against the minimal divisor of the
/// space; returns an empty string on success, else a description.
template <class F>
std::string super_filtered_violation(const SuperFilteredBasis<F>& sb, const Subspace<F>& space) {
    const auto& e = sb.elements;
    for (std::size_t i = 1; i < e.size(); ++i)
        if (e[i].degree() <= e[i - 1].degree()) return "degrees not strictly increasing at e" + std::to_string(i + 1);
    if (!Subspace<F>::span(space.field(), e).contains(space) || Subspace<F>::span(space.field(), e).dim() != space.dim())
        return "elements do not span the space";
    const Divisor<F> d = minimal_divisor(space);
    std::map<typename F::value_type, int> floors;
    for (const auto& [p, c] : d.terms())
        if (!p.is_infinity() && c > 0) floors[*p.alpha] = -c;
    if (floors != sb.pole_floor) return "pole floors disagree with the minimal divisor";
    for (const auto& [a, m] : floors) {
        const Place<F> p = Place<F>::finite(a);
        for (std::size_t i = 1; i < e.size(); ++i)
            if (valuation(e[i], p) > valuation(e[i - 1], p))
                return "v_" + a.to_string() + " increases at e" + std::to_string(i + 1);
        if (valuation(e.back(), p) != m) return "v_" + a.to_string() + "(e_n) misses the floor";
    }
    return {};
}

template <class F>
struct GrowthProfile {
    std::vector<Divisor<F>> divisors;  // D_1..D_n
    std::vector<int> M;                // M_1..M_n
    std::vector<int> mu;               // mu_2..mu_n
    std::vector<int> degree_jumps;     // Delta_2..Delta_n
    std::vector<int> divisor_jumps;    // deg D_i - deg D_{i-1}, i = 2..n
    int delta_max = 0;                 // 0 when n = 1
};

template <class F>
GrowthProfile<F> growth_profile(const SuperFilteredBasis<F>& sb, const std::vector<Subspace<F>>& filtration) {
    GrowthProfile<F> g;
    const std::size_t n = sb.elements.size();
    if (filtration.size() != n) throw InvalidParameter("filtration and basis lengths differ");
    for (std::size_t i = 0; i < n; ++i) {
        g.divisors.push_back(minimal_divisor(filtration[i]));
        int m = 0;
        for (const auto& [a, floor] : sb.pole_floor) m += std::max(-valuation(sb.elements[i], Place<F>::finite(a)), 0);
        g.M.push_back(m);
        if (m + sb.elements[i].degree() != g.divisors.back().degree())
            throw InternalInvariantViolation("M_i + deg e_i != deg D_i at i = " + std::to_string(i + 1));
        if (i > 0) {
            g.mu.push_back(g.M[i] - g.M[i - 1]);
            g.degree_jumps.push_back(sb.elements[i].degree() - sb.elements[i - 1].degree());
            g.divisor_jumps.push_back(g.divisors[i].degree() - g.divisors[i - 1].degree());
            g.delta_max = std::max(g.delta_max, g.divisor_jumps.back());
            if (g.mu.back() < 0) throw InternalInvariantViolation("M_i decreases along a super filtered basis");
        }
    }
    return g;
}

/// Reason the inclusion check T_i in S_i^2 is outside its hypotheses, if any:
/// t is the first jump of gamma away from 0, S_{t-1} must have dimension >= 3,
/// and t > mu_j + Delta_j for every j.
template <class F>
std::optional<std::string> t_inclusion_gate(const GrowthProfile<F>& gp, const GenusProfile& prof) {
    if (!prof.first_jump) return "gamma_n = 0, so no first jump t";
    const int t = *prof.first_jump;
    if (t < 4) return "t = " + std::to_string(t) + " < 4";
    for (std::size_t j = 0; j < gp.mu.size(); ++j)
        if (t <= gp.mu[j] + gp.degree_jumps[j])
            return "t <= mu_j + Delta_j at j = " + std::to_string(j + 2);
    return std::nullopt;
}

/// For i = t-1..n: whether T_i = L((t-2)P_inf + D_i) lies in S_i^2.
template <class F>
std::vector<bool> check_T_inclusions(const GrowthProfile<F>& gp, const GenusProfile& prof,
                                     const std::vector<Subspace<F>>& filtration) {
    if (auto why = t_inclusion_gate(gp, prof)) throw HypothesisNotMet(*why);
    const int t = *prof.first_jump;
    const F& K = filtration.front().field();
    std::vector<bool> out;
    for (int i = t - 1; i <= prof.n(); ++i) {
        const auto& si = filtration[static_cast<std::size_t>(i - 1)];
        const Divisor<F> d = Divisor<F>::at(Place<F>::infinity(), t - 2) + gp.divisors[static_cast<std::size_t>(i - 1)];
        out.push_back(product(si, si).contains(riemann_roch_space(K, d)));
    }
    return out;
}

}  // namespace ffreiman
