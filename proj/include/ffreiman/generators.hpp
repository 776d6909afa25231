#pragma once

// Instance families: the canonical gamma = 0 and gamma = 1 bases, prescribed
// degree sets with optional finite poles, monomial spaces, and seeded random
// subspaces of a Riemann-Roch space.

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "freiman.hpp"
#include "parser.hpp"
#include "random.hpp"

namespace ffreiman {

/// span{1, x, ..., x^(n-1)}.
template <class F>
Subspace<F> canonical_gamma0(const F& field, int n) {
    if (n < 3) throw InvalidParameter("gamma0 family needs n >= 3");
    return Subspace<F>::poly_space(field, n - 1);
}

/// shape 1: 1, x, ..., x^(n-2), (x+a)x^(n-1)
/// shape 2: 1, (x+a)x, (x+a)x^2, ..., (x+a)x^(n-1)
template <class F>
Subspace<F> canonical_gamma1(const F& field, int n, int shape, const typename F::value_type& alpha) {
    using P = Poly<F>;
    if (n < 4) throw InvalidParameter("gamma1 families need n >= 4");
    if (shape != 1 && shape != 2) throw InvalidParameter("gamma1 shape must be 1 or 2");
    const P xa = P::linear(field, -alpha);
    std::vector<P> nums{P::one(field)};
    if (shape == 1) {
        for (int k = 1; k <= n - 2; ++k) nums.push_back(P::monomial(field, field.one(), k));
        nums.push_back(xa * P::monomial(field, field.one(), n - 1));
    } else {
        for (int k = 1; k <= n - 1; ++k) nums.push_back(xa * P::monomial(field, field.one(), k));
    }
    return Subspace<F>::from_numerators(field, P::one(field), nums);
}

/// Pole orders k_i at one finite place alpha: e_i = x^(d_i) + (x - alpha)^(-k_i).
template <class F>
struct PolePlan {
    typename F::value_type alpha;
    std::vector<int> orders;
};

template <class F>
Subspace<F> degree_family(const F& field, const IntSet& degset, const std::optional<PolePlan<F>>& plan = std::nullopt) {
    using R = RatFunc<F>;
    if (degset.min() != 0) throw InvalidParameter("degree set must start at 0");
    const auto& d = degset.elems();
    if (plan) {
        if (plan->orders.size() != d.size())
            throw DegreeRealizationFailed("pole plan lists " + std::to_string(plan->orders.size()) + " orders for " +
                                          std::to_string(d.size()) + " degrees");
        if (plan->orders.front() != 0) throw DegreeRealizationFailed("e_1 = 1 cannot carry a pole");
        for (int k : plan->orders)
            if (k < 0) throw DegreeRealizationFailed("pole orders must be nonnegative");
    }
    std::vector<R> gens;
    const R x = R::x(field);
    for (std::size_t i = 0; i < d.size(); ++i) {
        R e = x.pow(static_cast<unsigned>(d[i]));
        if (plan && plan->orders[i] > 0) {
            const R lin(Poly<F>::linear(field, plan->alpha));
            e = e + lin.pow(static_cast<unsigned>(plan->orders[i])).inverse();
        }
        gens.push_back(e);
    }
    Subspace<F> s = Subspace<F>::span(field, gens);
    std::vector<int> want(d.begin(), d.end());
    if (s.degrees_ascending() != want) throw DegreeRealizationFailed("filtered degrees differ from the requested set");
    return s;
}

/// A seeded n-dimensional subspace of L(D) containing 1. Coefficients are
/// small integers; a per-instance density keeps some combinations sparse.
template <class F>
Subspace<F> random_in_RR(const F& field, const Divisor<F>& d, int n, std::uint64_t seed) {
    const int deg = d.degree();
    if (deg < 0) throw InvalidParameter("random_in_RR needs deg D >= 0");
    if (!d.is_effective()) throw InvalidParameter("random_in_RR needs D >= 0 so that 1 lies in L(D)");
    if (n < 1) throw InvalidParameter("random_in_RR needs n >= 1");
    if (n > deg + 1) throw DimensionTooLarge();
    const Subspace<F> l = riemann_roch_space(field, d);
    const auto basis = l.basis();
    Rng rng(seed);
    const long zero_weight = uniform_int(rng, 0, 3);  // out of 4
    std::vector<RatFunc<F>> gens{RatFunc<F>::one(field)};
    Subspace<F> s = Subspace<F>::span(field, gens);
    for (int guard = 0; static_cast<int>(s.dim()) < n; ++guard) {
        if (guard > 100000) throw InternalInvariantViolation("random_in_RR failed to reach the dimension");
        RatFunc<F> v(field);
        for (const auto& b : basis) {
            if (uniform_int(rng, 0, 3) < zero_weight) continue;
            long c = uniform_int(rng, -3, 2);
            if (c >= 0) ++c;
            v = v + b * field.from_int(c);
        }
        if (v.is_zero() || s.contains(v)) continue;
        gens.push_back(v);
        s = Subspace<F>::span(field, gens);
    }
    return s;
}

/// Family tag plus parameters, serialized as "family=... key=value ...".
struct InstanceSpec {
    std::string family;
    std::map<std::string, std::string> params;

    std::string get(const std::string& key) const {
        auto it = params.find(key);
        if (it == params.end()) throw InvalidParameter("family " + family + " needs parameter " + key);
        return it->second;
    }
    std::string get_or(const std::string& key, const std::string& fallback) const {
        auto it = params.find(key);
        return it == params.end() ? fallback : it->second;
    }
    long get_int(const std::string& key) const { return parse_long(get(key)); }
    long get_int_or(const std::string& key, long fallback) const {
        auto it = params.find(key);
        return it == params.end() ? fallback : parse_long(it->second);
    }

    /// Values containing spaces are double-quoted.
    std::string to_string() const {
        std::string s = "family=" + family;
        for (const auto& [k, v] : params) {
            s += " " + k + "=";
            s += v.find(' ') == std::string::npos ? v : "\"" + v + "\"";
        }
        return s;
    }

    static InstanceSpec parse(std::string_view text) {
        InstanceSpec spec;
        std::size_t pos = 0;
        while (pos < text.size()) {
            while (pos < text.size() && text[pos] == ' ') ++pos;
            if (pos >= text.size()) break;
            const std::size_t eq = text.find('=', pos);
            if (eq == std::string_view::npos) throw SyntaxError("expected key=value", 1, static_cast<int>(pos) + 1);
            const std::string key(text.substr(pos, eq - pos));
            pos = eq + 1;
            std::string value;
            if (pos < text.size() && text[pos] == '"') {
                const std::size_t close = text.find('"', pos + 1);
                if (close == std::string_view::npos) throw SyntaxError("unterminated quote", 1, static_cast<int>(pos) + 1);
                value = std::string(text.substr(pos + 1, close - pos - 1));
                pos = close + 1;
            } else {
                const std::size_t sp = std::min(text.find(' ', pos), text.size());
                value = std::string(text.substr(pos, sp - pos));
                pos = sp;
            }
            if (key == "family")
                spec.family = value;
            else
                spec.params[key] = value;
        }
        if (spec.family.empty()) throw InvalidParameter("instance spec lacks a family");
        return spec;
    }

    static long parse_long(const std::string& v) {
        std::size_t used = 0;
        long out = 0;
        try {
            out = std::stol(v, &used);
        } catch (const std::exception&) {
            throw InvalidParameter("expected an integer, got '" + v + "'");
        }
        if (used != v.size()) throw InvalidParameter("expected an integer, got '" + v + "'");
        return out;
    }
};

inline IntSet parse_int_list(const std::string& text) {
    std::vector<long> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const std::string t = detail::trim(item);
        if (t.empty()) continue;
        v.push_back(InstanceSpec::parse_long(t));
    }
    if (v.empty()) throw InvalidParameter("empty integer list");
    return IntSet(v);
}

/// Space described by spec over field. Families: gamma0 (n), gamma1a and
/// gamma1b (n, alpha), degset (set, optional alpha + orders), monomial (set),
/// random-rr (D, n, seed).
template <class F>
Subspace<F> generate_instance(const InstanceSpec& spec, const F& field) {
    const std::string& f = spec.family;
    auto scalar = [&](const std::string& key) {
        return parse_place(spec.get(key), field).alpha.value();
    };
    if (f == "gamma0") return canonical_gamma0(field, static_cast<int>(spec.get_int("n")));
    if (f == "gamma1a" || f == "gamma1b")
        return canonical_gamma1(field, static_cast<int>(spec.get_int("n")), f == "gamma1a" ? 1 : 2, scalar("alpha"));
    if (f == "degset") {
        const IntSet set = parse_int_list(spec.get("set"));
        std::optional<PolePlan<F>> plan;
        if (spec.params.count("orders")) {
            std::vector<int> orders;
            std::stringstream ss(spec.get("orders"));
            std::string item;
            while (std::getline(ss, item, ',')) orders.push_back(static_cast<int>(InstanceSpec::parse_long(detail::trim(item))));
            plan = PolePlan<F>{scalar("alpha"), orders};
        }
        return degree_family(field, set, plan);
    }
    if (f == "monomial") return monomial_space(parse_int_list(spec.get("set")), field);
    if (f == "random-rr")
        return random_in_RR(field, parse_divisor(spec.get("D"), field), static_cast<int>(spec.get_int("n")),
                            static_cast<std::uint64_t>(spec.get_int_or("seed", 0)));
    throw InvalidParameter("unknown family '" + f + "'");
}

/// Instance file text for a space: spec comment, field header, one basis
/// element per line in increasing degree.
template <class F>
std::string instance_file_text(const InstanceSpec& spec, const FieldSpec& fs, const Subspace<F>& s) {
    std::string out = "# spec: " + spec.to_string() + "\n";
    out += "field: " + fs.header() + "\n";
    const auto b = s.basis();
    for (auto it = b.rbegin(); it != b.rend(); ++it) out += it->to_string() + "\n";
    return out;
}

}  // namespace ffreiman
