#pragma once

// Places of the projective line over K, valuations, divisors and explicit
// Riemann-Roch spaces (genus 0: dim L(D) = deg D + 1 for deg D >= 0).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "subspace.hpp"

namespace ffreiman {

/// P_alpha for alpha in K, or P_inf.
template <class F>
struct Place {
    using T = typename F::value_type;
    std::optional<T> alpha;  // empty: infinity

    static Place infinity() { return Place{}; }
    static Place finite(T a) { return Place{std::move(a)}; }
    bool is_infinity() const noexcept { return !alpha.has_value(); }

    std::string to_string() const { return alpha ? alpha->to_string() : "inf"; }

    friend bool operator==(const Place& a, const Place& b) { return a.alpha == b.alpha; }
    /// Finite places by alpha, then infinity.
    friend bool operator<(const Place& a, const Place& b) {
        if (!a.alpha) return false;
        if (!b.alpha) return true;
        return *a.alpha < *b.alpha;
    }
};

/// Order of f at P.
template <class F>
int valuation(const RatFunc<F>& f, const Place<F>& p) {
    if (f.is_zero()) throw ZeroElement();
    if (p.is_infinity()) return f.den().degree() - f.num().degree();
    return root_multiplicity(f.num(), *p.alpha) - root_multiplicity(f.den(), *p.alpha);
}

template <class F>
class Divisor {
   public:
    using Pl = Place<F>;

    Divisor() = default;

    static Divisor at(const Pl& p, int c) {
        Divisor d;
        d.add(p, c);
        return d;
    }

    int coeff(const Pl& p) const {
        auto it = c_.find(p);
        return it == c_.end() ? 0 : it->second;
    }
    void add(const Pl& p, int c) {
        if (c == 0) return;
        int& v = c_[p];
        v += c;
        if (v == 0) c_.erase(p);
    }
    void set(const Pl& p, int c) {
        if (c == 0)
            c_.erase(p);
        else
            c_[p] = c;
    }

    int degree() const {
        int d = 0;
        for (const auto& [p, c] : c_) d += c;
        return d;
    }
    const std::map<Pl, int>& terms() const noexcept { return c_; }
    bool in_support(const Pl& p) const { return c_.count(p) != 0; }
    bool is_effective() const {
        for (const auto& [p, c] : c_)
            if (c < 0) return false;
        return true;
    }

    friend Divisor operator+(Divisor a, const Divisor& b) {
        for (const auto& [p, c] : b.c_) a.add(p, c);
        return a;
    }
    friend Divisor operator-(Divisor a, const Divisor& b) {
        for (const auto& [p, c] : b.c_) a.add(p, -c);
        return a;
    }
    friend bool operator==(const Divisor& a, const Divisor& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Divisor& a, const Divisor& b) { return !(a == b); }
    /// Coefficientwise a <= b.
    friend bool operator<=(const Divisor& a, const Divisor& b) {
        for (const auto& [p, c] : a.c_)
            if (c > b.coeff(p)) return false;
        for (const auto& [p, c] : b.c_)
            if (a.coeff(p) > c) return false;
        return true;
    }

    /// "5*inf + 1*0 - 2*1/2"; "0" for the zero divisor. Infinity first.
    std::string to_string() const {
        if (c_.empty()) return "0";
        std::vector<std::pair<std::string, int>> parts;
        if (auto it = c_.find(Pl::infinity()); it != c_.end()) parts.emplace_back("inf", it->second);
        for (const auto& [p, c] : c_)
            if (!p.is_infinity()) parts.emplace_back(p.to_string(), c);
        std::string s;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            const auto& [name, c] = parts[i];
            if (i == 0)
                s += (c < 0 ? "-" : "");
            else
                s += (c < 0 ? " - " : " + ");
            s += std::to_string(c < 0 ? -c : c) + "*" + name;
        }
        return s;
    }

   private:
    std::map<Pl, int> c_;
};

/// Roots of p as places; throws NonSplitPlace when p has a factor without
/// roots in K.
template <class F>
std::map<typename F::value_type, int> split_roots(const Poly<F>& p) {
    const auto fac = linear_root_factorization(p);
    if (fac.nonsplit.degree() > 0) throw NonSplitPlace(fac.nonsplit.to_string());
    return fac.roots;
}

/// Least-degree D with S in L(D): v_P(D) = -min_{s in S} v_P(s).
template <class F>
Divisor<F> minimal_divisor(const Subspace<F>& s) {
    if (s.is_zero()) throw InvalidParameter("minimal divisor of the zero space");
    Divisor<F> d;
    d.set(Place<F>::infinity(), s.max_degree());
    for (const auto& [a, m] : split_roots(s.common_den())) d.add(Place<F>::finite(a), m);
    Poly<F> g = s.numerators().front();
    for (const auto& r : s.numerators()) g = gcd(g, r);
    for (const auto& [a, m] : split_roots(g)) d.add(Place<F>::finite(a), -m);
    return d;
}

/// c = prod over finite places of (x - alpha)^{v_alpha(D)}; f in L(D) iff f*c
/// is a polynomial of degree <= deg D.
template <class F>
RatFunc<F> finite_shift(const F& field, const Divisor<F>& d) {
    Poly<F> num = Poly<F>::one(field), den = Poly<F>::one(field);
    for (const auto& [p, c] : d.terms()) {
        if (p.is_infinity()) continue;
        const Poly<F> lin = Poly<F>::linear(field, *p.alpha);
        if (c > 0)
            num = num * lin.pow(static_cast<unsigned>(c));
        else
            den = den * lin.pow(static_cast<unsigned>(-c));
    }
    return RatFunc<F>(num, den);
}

template <class F>
bool in_riemann_roch(const RatFunc<F>& f, const Divisor<F>& d) {
    if (f.is_zero()) return true;
    const int deg = d.degree();
    if (deg < 0) return false;
    const RatFunc<F> h = f * finite_shift(f.field(), d);
    return h.is_polynomial() && h.num().degree() <= deg;
}

template <class F>
bool contained_in_L(const Subspace<F>& s, const Divisor<F>& d) {
    for (const auto& f : s.basis())
        if (!in_riemann_roch(f, d)) return false;
    return true;
}

/// L(D) = (1/c) * p_{deg D}; the zero space when deg D < 0.
template <class F>
Subspace<F> riemann_roch_space(const F& field, const Divisor<F>& d) {
    const int deg = d.degree();
    if (deg < 0) return Subspace<F>(field);
    const RatFunc<F> inv_c = finite_shift(field, d).inverse();
    const Subspace<F> l = Subspace<F>::poly_space(field, deg).scaled(inv_c);
    for (const auto& f : l.basis()) {
        for (const auto& [p, c] : d.terms())
            if (valuation(f, p) < -c) throw InternalInvariantViolation("L(D) basis element violates a valuation bound");
        if (valuation(f, Place<F>::infinity()) < -d.coeff(Place<F>::infinity()))
            throw InternalInvariantViolation("L(D) basis element violates the bound at infinity");
    }
    return l;
}

}  // namespace ffreiman
