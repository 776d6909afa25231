#pragma once

// Subfields K(f_1, ..., f_k) of K(x): pole counts, constructive Lueroth
// generators, rewriting elements in a generator, and the valuation gap probe.

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "divisor.hpp"
#include "linalg.hpp"
#include "random.hpp"

namespace ffreiman {

/// Number of poles with multiplicity = [K(x) : K(f)].
template <class F>
int pole_count(const RatFunc<F>& f) {
    if (f.is_constant()) throw ConstantElement();
    return std::max(f.num().degree(), f.den().degree());
}

namespace detail {

/// Polynomial in T with coefficients in K[x]; index = power of T.
template <class F>
using BiPoly = std::vector<Poly<F>>;

template <class F>
void bi_trim(BiPoly<F>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

template <class F>
int bi_degree(const BiPoly<F>& p) {
    return static_cast<int>(p.size()) - 1;
}

/// b(x) a(T) - a(x) b(T) for f = a/b: vanishes at T = x.
template <class F>
BiPoly<F> min_poly_of_x(const RatFunc<F>& f) {
    const F& K = f.field();
    const int d = std::max(f.num().degree(), f.den().degree());
    BiPoly<F> out(static_cast<std::size_t>(d) + 1, Poly<F>(K));
    for (int k = 0; k <= d; ++k) {
        const Poly<F> ak = Poly<F>::constant(K, f.num().coeff(k));
        const Poly<F> bk = Poly<F>::constant(K, f.den().coeff(k));
        out[static_cast<std::size_t>(k)] = f.den() * ak - f.num() * bk;
    }
    bi_trim(out);
    return out;
}

template <class F>
BiPoly<F> primitive_part(BiPoly<F> p) {
    bi_trim(p);
    if (p.empty()) return p;
    Poly<F> c(p.front().field());
    for (const auto& q : p) {
        c = gcd(c, q);
        if (c.degree() == 0) break;
    }
    for (auto& q : p) q = q / c;
    // fix the unit: leading coefficient in T has monic leading term in x
    const auto inv = p.back().leading().inverse();
    for (auto& q : p) q = q * inv;
    return p;
}

/// Pseudo-remainder of a by b in K[x][T].
template <class F>
BiPoly<F> pseudo_rem(BiPoly<F> a, const BiPoly<F>& b) {
    const int db = bi_degree(b);
    const Poly<F>& lb = b.back();
    while (!a.empty() && bi_degree(a) >= db) {
        const Poly<F> la = a.back();
        const std::size_t shift = static_cast<std::size_t>(bi_degree(a) - db);
        for (auto& q : a) q = q * lb;
        for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= la * b[k];
        bi_trim(a);
    }
    return a;
}

/// gcd over K(x)[T], as a primitive polynomial in K[x][T].
template <class F>
BiPoly<F> bi_gcd(BiPoly<F> a, BiPoly<F> b) {
    a = primitive_part(std::move(a));
    b = primitive_part(std::move(b));
    if (bi_degree(a) < bi_degree(b)) std::swap(a, b);
    while (!b.empty()) {
        if (bi_degree(b) == 0) return b;
        BiPoly<F> r = primitive_part(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Monic gcd over K of the specializations b_i(x0) a_i(T) - a_i(x0) b_i(T);
/// nullopt when x0 drops the T-degree of some specialization.
template <class F>
std::optional<Poly<F>> min_poly_at(const std::vector<RatFunc<F>>& gens, const typename F::value_type& x0) {
    Poly<F> acc(gens.front().field());
    for (const auto& f : gens) {
        const Poly<F> p = f.num() * f.den()(x0) - f.den() * f.num()(x0);
        if (p.degree() != pole_count(f)) return std::nullopt;
        acc = gcd(acc, p);
    }
    return acc;
}

/// N/D with deg N, deg D <= m through the points; nullopt if none exists.
template <class F>
std::optional<RatFunc<F>> rational_interpolate(const F& K, const std::vector<typename F::value_type>& xs,
                                               const std::vector<typename F::value_type>& vs, int m) {
    const std::size_t w = static_cast<std::size_t>(m) + 1;
    Matrix<F> a(K, xs.size(), 2 * w);
    for (std::size_t j = 0; j < xs.size(); ++j) {
        auto pw = K.one();
        for (std::size_t k = 0; k < w; ++k) {
            a.at(j, k) = pw;
            a.at(j, w + k) = -(vs[j] * pw);
            pw = pw * xs[j];
        }
    }
    for (const auto& v : a.nullspace()) {
        const Poly<F> d(K, std::vector<typename F::value_type>(v.begin() + static_cast<std::ptrdiff_t>(w), v.end()));
        if (d.is_zero()) continue;
        return RatFunc<F>(Poly<F>(K, std::vector<typename F::value_type>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(w))), d);
    }
    return std::nullopt;
}

}  // namespace detail

template <class F>
std::optional<RatFunc<F>> express_in(const RatFunc<F>& e, const RatFunc<F>& y);

namespace detail {

/// Lueroth generator by specializing x: the monic minimal polynomial M(x, T)
/// of x has T-degree m = index and coefficients of degree <= m in x, so 2m+1
/// points where the specialization gcd has degree m determine them exactly.
/// Pseudo-remainder sequences over K[x][T] blow up over Q; this does not.
/// nullopt when too few usable points exist (small prime fields) or the
/// result fails verification.
template <class F>
std::optional<RatFunc<F>> luroth_by_evaluation(const std::vector<RatFunc<F>>& nc, int bound) {
    using T = typename F::value_type;
    const F& K = nc.front().field();
    std::vector<T> xs;
    std::vector<Poly<F>> polys;
    int m = bound + 1;
    std::vector<T> seen;
    const int limit = 6 * bound + 16;
    for (int i = 0; i < limit; ++i) {
        const T x0 = K.from_int(i % 2 == 0 ? i / 2 : -(i + 1) / 2);
        if (std::find(seen.begin(), seen.end(), x0) != seen.end()) continue;
        seen.push_back(x0);
        const auto g = min_poly_at(nc, x0);
        if (!g || g->degree() > m) continue;
        if (g->degree() < m) {
            m = g->degree();
            xs.clear();
            polys.clear();
        }
        xs.push_back(x0);
        polys.push_back(*g);
        if (static_cast<int>(xs.size()) >= 2 * m + 2) break;
    }
    if (m < 1 || static_cast<int>(xs.size()) < 2 * m + 1) return std::nullopt;
    if (m == 1) return RatFunc<F>::x(K);
    for (int k = 0; k < m; ++k) {
        std::vector<T> vs;
        for (const auto& p : polys) vs.push_back(p.coeff(k));
        if (std::all_of(vs.begin(), vs.end(), [&](const T& v) { return v == vs.front(); })) continue;
        const auto c = rational_interpolate(K, xs, vs, m);
        if (!c || c->is_constant() || pole_count(*c) != m) return std::nullopt;
        for (const auto& f : nc)
            if (!express_in(f, *c)) return std::nullopt;
        return c;
    }
    return std::nullopt;
}

/// Same generator through a gcd over K(x)[T]; exact but slow over Q.
template <class F>
RatFunc<F> luroth_by_gcd(const std::vector<RatFunc<F>>& nc) {
    BiPoly<F> acc = min_poly_of_x(nc.front());
    for (std::size_t i = 1; i < nc.size() && bi_degree(acc) > 1; ++i) acc = bi_gcd(acc, min_poly_of_x(nc[i]));
    if (bi_degree(acc) == 1) return RatFunc<F>::x(nc.front().field());
    for (std::size_t k = 0; k + 1 < acc.size(); ++k) {
        const RatFunc<F> c(acc[k], acc.back());
        if (!c.is_constant()) return c;
    }
    throw InternalInvariantViolation("minimal polynomial of x has constant coefficients");
}

}  // namespace detail

/// y with K(gens) = K(y). Any nonconstant coefficient of the monic minimal
/// polynomial of x over K(gens) generates; the one of least T-degree is taken.
/// Returns x itself when the subfield is all of K(x).
template <class F>
RatFunc<F> luroth_generator(const std::vector<RatFunc<F>>& gens) {
    std::vector<RatFunc<F>> nc;
    for (const auto& g : gens)
        if (!g.is_constant()) nc.push_back(g);
    if (nc.empty()) throw AllConstant();
    const F& K = nc.front().field();
    std::stable_sort(nc.begin(), nc.end(), [](const auto& a, const auto& b) { return pole_count(a) < pole_count(b); });
    // the index divides every pole count
    int g = 0;
    for (const auto& f : nc) g = std::gcd(g, pole_count(f));
    if (g == 1) return RatFunc<F>::x(K);
    if (nc.size() == 1) return nc.front();
    if (auto y = detail::luroth_by_evaluation(nc, g)) return *y;
    return detail::luroth_by_gcd(nc);
}

/// [K(x) : K(gens)].
template <class F>
int subfield_index(const std::vector<RatFunc<F>>& gens) {
    return pole_count(luroth_generator(gens));
}

/// R with e = R(y), deg R <= pole_count(e) / pole_count(y); nullopt when e is
/// not in K(y).
template <class F>
std::optional<RatFunc<F>> express_in(const RatFunc<F>& e, const RatFunc<F>& y) {
    const F& K = e.field();
    if (e.is_constant()) return e;
    const int py = pole_count(y), pe = pole_count(e);
    if (pe % py != 0) return std::nullopt;
    const int k = pe / py;
    // w * sum a_j p^j q^(k-j) - u * sum b_j p^j q^(k-j) = 0 with y = p/q, e = u/w
    std::vector<Poly<F>> terms;
    for (int j = 0; j <= k; ++j)
        terms.push_back(y.num().pow(static_cast<unsigned>(j)) * y.den().pow(static_cast<unsigned>(k - j)));
    std::vector<Poly<F>> cols;
    for (const auto& t : terms) cols.push_back(e.den() * t);
    for (const auto& t : terms) cols.push_back(-(e.num() * t));
    int rows = 0;
    for (const auto& c : cols) rows = std::max(rows, c.degree() + 1);
    Matrix<F> m(K, static_cast<std::size_t>(rows), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (int r = 0; r <= cols[c].degree(); ++r) m.at(static_cast<std::size_t>(r), c) = cols[c].coeff(r);
    for (const auto& v : m.nullspace()) {
        std::vector<typename F::value_type> a(v.begin(), v.begin() + k + 1), b(v.begin() + k + 1, v.end());
        const Poly<F> pa(K, a), pb(K, b);
        if (pb.is_zero()) continue;
        const RatFunc<F> r(pa, pb);
        if (r.compose(y) == e) return r;
    }
    return std::nullopt;
}

/// The same space written in a generator y of K(S): span{R_i} with e_i = R_i(y).
template <class F>
Subspace<F> descend(const Subspace<F>& s, const RatFunc<F>& y) {
    std::vector<RatFunc<F>> out;
    for (const auto& e : s.basis()) {
        auto r = express_in(e, y);
        if (!r) throw InternalInvariantViolation("basis element " + e.to_string() + " is not in K(" + y.to_string() + ")");
        out.push_back(*r);
    }
    Subspace<F> d = Subspace<F>::span(s.field(), out);
    if (d.dim() != s.dim()) throw InternalInvariantViolation("descent changed the dimension");
    return d;
}

/// [K(x) : K(S_i)] per prefix; nullopt where S_i consists of constants.
template <class F>
std::vector<std::optional<int>> subfield_index_chain(const std::vector<Subspace<F>>& filtration) {
    std::vector<std::optional<int>> out;
    for (const auto& s : filtration) {
        const auto b = s.basis();
        const bool constant = std::all_of(b.begin(), b.end(), [](const auto& f) { return f.is_constant(); });
        out.push_back(constant ? std::nullopt : std::optional<int>(subfield_index(b)));
    }
    return out;
}

template <class F>
struct GapWitness {
    typename F::value_type alpha;
    RatFunc<F> s1;  // v_alpha(s1) = v_alpha(s2) + 1
    RatFunc<F> s2;
    int gcd_valuations = 0;  // gcd of v_alpha(S)
};

/// Set of v_alpha over the nonzero elements of S, ascending.
template <class F>
std::vector<int> valuation_set(const Subspace<F>& s, const typename F::value_type& a) {
    const F& K = s.field();
    // pivot on the lowest power of (x - a): reverse the shifted numerators
    std::vector<Poly<F>> rev;
    int width = 0;
    for (const auto& r : s.numerators()) width = std::max(width, r.degree());
    for (const auto& r : s.numerators()) {
        const Poly<F> sh = r.shift(a);
        std::vector<typename F::value_type> c(static_cast<std::size_t>(width) + 1, K.zero());
        for (int k = 0; k <= sh.degree(); ++k) c[static_cast<std::size_t>(width - k)] = sh.coeff(k);
        rev.emplace_back(K, c);
    }
    PolyEchelon<F> e(K);
    for (const auto& r : rev) e.insert(r);
    const int den_order = root_multiplicity(s.common_den(), a);
    std::vector<int> out;
    for (int p : e.pivots_ascending()) out.push_back(width - p - den_order);
    std::sort(out.begin(), out.end());
    return out;
}

/// Witnesses of a valuation gap 1 at `trials` sampled alpha outside the bad set
/// of zeros of f, g and f g' - f' g, where g/f = e_2 / e_1 for the two lowest
/// filtered elements. An alpha with no witness would falsify the gap claim; the
/// result then holds fewer entries than sampled points.
template <class F>
std::vector<GapWitness<F>> valuation_gap_probe(const Subspace<F>& s, int trials, std::uint64_t seed) {
    using T = typename F::value_type;
    const F& K = s.field();
    if (s.dim() < 2) throw InvalidParameter("gap probe needs dim S >= 2");
    const auto b = s.basis();
    const RatFunc<F>& s1 = b[b.size() - 1];
    const RatFunc<F>& s2 = b[b.size() - 2];
    const RatFunc<F> q = s2 / s1;  // g/f with f, g coprime polynomials
    const Poly<F>& f = q.den();
    const Poly<F>& g = q.num();
    const Poly<F> w = f * g.derivative() - f.derivative() * g;
    const Poly<F> bad = f * g * w;
    Rng rng(seed);
    auto draw = [&]() -> T {
        if (K.characteristic() == 0) return K.from_int(uniform_int(rng, -10000, 10000));
        return K.from_int(static_cast<long>(uniform_below(rng, K.characteristic())));
    };
    if (K.characteristic() != 0 && K.characteristic() <= static_cast<std::uint64_t>(std::max(bad.degree(), 0)) + 1) {
        bool any = false;
        for (std::uint64_t v = 0; v < K.characteristic() && !any; ++v) any = !bad(K.from_int(static_cast<long>(v))).is_zero();
        if (!any) throw FieldTooSmall();
    }
    std::vector<GapWitness<F>> out;
    for (int k = 0; k < trials; ++k) {
        T a = draw();
        int guard = 0;
        while (bad(a).is_zero()) {
            if (++guard > 100000) throw FieldTooSmall();
            a = draw();
        }
        const T c = -(f(a) / g(a));
        const RatFunc<F> t1 = s1 + s2 * c;
        const Place<F> p = Place<F>::finite(a);
        if (t1.is_zero() || valuation(t1, p) - valuation(s1, p) != 1) continue;
        const auto vs = valuation_set(s, a);
        int gg = 0;
        for (int v : vs) gg = std::gcd(gg, v);
        out.push_back({a, t1, s1, gg});
    }
    return out;
}

}  // namespace ffreiman
