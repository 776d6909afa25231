#pragma once

// Finite-dimensional K-subspaces of K(x).
//
// A subspace is stored as (common_den, echelon_numerators): every element is
// a K-combination of the numerators divided by one monic denominator. The
// denominator is the least common denominator of the space and the
// numerators are in reduced echelon form pivoting on the leading coefficient,
// so equal subspaces have identical representations.

#include <string>
#include <vector>

#include "linalg.hpp"
#include "ratfunc.hpp"

namespace ffreiman {

template <class F>
class Subspace {
   public:
    using P = Poly<F>;
    using R = RatFunc<F>;
    using T = typename F::value_type;

    Subspace() : den_(P::one(F{})) {}
    explicit Subspace(F field) : field_(field), den_(P::one(field)) {}

    /// Canonical subspace spanned by numerators / den.
    static Subspace from_numerators(const F& field, P den, const std::vector<P>& numerators) {
        Subspace s(field);
        s.assign(std::move(den), numerators);
        return s;
    }

    /// K-linear span; zero generators are discarded.
    static Subspace span(const F& field, const std::vector<R>& gens) {
        P common = P::one(field);
        for (const auto& g : gens) {
            if (!(g.field() == field)) throw MixedFields();
            if (!g.is_zero()) common = lcm(common, g.den());
        }
        std::vector<P> nums;
        nums.reserve(gens.size());
        for (const auto& g : gens)
            if (!g.is_zero()) nums.push_back(g.num() * (common / g.den()));
        return from_numerators(field, common, nums);
    }

    /// The polynomials of degree at most i.
    static Subspace poly_space(const F& field, int i) {
        if (i < 0) throw InvalidParameter("poly_space needs i >= 0");
        std::vector<P> nums;
        for (int k = i; k >= 0; --k) nums.push_back(P::monomial(field, field.one(), k));
        return from_numerators(field, P::one(field), nums);
    }

    const F& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return rows_.size(); }
    bool is_zero() const noexcept { return rows_.empty(); }
    const P& common_den() const noexcept { return den_; }
    /// Echelon numerators by strictly decreasing leading degree.
    const std::vector<P>& numerators() const noexcept { return rows_; }

    /// Canonical basis, by strictly decreasing degree.
    std::vector<R> basis() const {
        std::vector<R> out;
        out.reserve(rows_.size());
        for (const auto& r : rows_) out.emplace_back(r, den_);
        return out;
    }

    /// Maximal degree (= -min v_inf) over the space.
    int max_degree() const {
        if (rows_.empty()) throw ZeroElement();
        return rows_.front().degree() - den_.degree();
    }

    /// Degrees of the nonzero elements; distinct, one per dimension.
    std::vector<int> degrees_ascending() const {
        std::vector<int> out;
        for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) out.push_back(it->degree() - den_.degree());
        return out;
    }

    bool contains(const R& f) const {
        if (!(f.field() == field_)) throw MixedFields();
        if (f.is_zero()) return true;
        if (rows_.empty()) return false;
        auto [q, r] = den_.divmod(f.den());
        if (!r.is_zero()) return false;
        return reduce(f.num() * q).is_zero();
    }

    /// Remainder of a numerator (over common_den) after eliminating every pivot.
    P reduce(P v) const {
        for (const auto& row : rows_) {
            const T c = v.coeff(row.degree());
            if (!c.is_zero()) v -= row * c;
        }
        return v;
    }

    bool contains(const Subspace& other) const {
        for (const auto& f : other.basis())
            if (!contains(f)) return false;
        return true;
    }

    /// h * S
    Subspace scaled(const R& h) const {
        if (h.is_zero()) return Subspace(field_);
        std::vector<P> nums;
        for (const auto& r : rows_) nums.push_back(r * h.num());
        return from_numerators(field_, den_ * h.den(), nums);
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.field_ == b.field_ && a.den_ == b.den_ && a.rows_ == b.rows_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    std::string to_string() const {
        std::string s = "<";
        bool first = true;
        for (const auto& f : basis()) {
            if (!first) s += ", ";
            first = false;
            s += f.to_string();
        }
        return s + ">";
    }

    PolyEchelon<F> echelon() const {
        PolyEchelon<F> e(field_);
        for (const auto& r : rows_) e.insert(r);
        return e;
    }

   private:
    void assign(P den, const std::vector<P>& numerators) {
        if (den.is_zero()) throw ZeroDenominator();
        PolyEchelon<F> e(field_);
        for (const auto& n : numerators) {
            if (!(n.field() == field_)) throw MixedFields();
            e.insert(n);
        }
        rows_ = e.rows_descending();
        den_ = den.monic();
        if (rows_.empty()) {
            den_ = P::one(field_);
            return;
        }
        // strip the factor shared by the denominator and every numerator
        P g = den_;
        for (const auto& r : rows_) {
            if (g.degree() == 0) break;
            g = gcd(g, r);
        }
        if (g.degree() > 0) {
            den_ = den_ / g;
            PolyEchelon<F> e2(field_);
            for (const auto& r : rows_) e2.insert(r / g);
            rows_ = e2.rows_descending();
        }
    }

    F field_{};
    P den_;
    std::vector<P> rows_;
};

template <class F>
Subspace<F> sum(const Subspace<F>& s, const Subspace<F>& t) {
    if (!(s.field() == t.field())) throw MixedFields();
    if (s.is_zero()) return t;
    if (t.is_zero()) return s;
    const Poly<F> common = lcm(s.common_den(), t.common_den());
    std::vector<Poly<F>> nums;
    const Poly<F> fs = common / s.common_den(), ft = common / t.common_den();
    for (const auto& r : s.numerators()) nums.push_back(r * fs);
    for (const auto& r : t.numerators()) nums.push_back(r * ft);
    return Subspace<F>::from_numerators(s.field(), common, nums);
}

/// Span of all products s*t; product(S, S) is S^2.
template <class F>
Subspace<F> product(const Subspace<F>& s, const Subspace<F>& t) {
    if (!(s.field() == t.field())) throw MixedFields();
    std::vector<Poly<F>> nums;
    const auto& a = s.numerators();
    const auto& b = t.numerators();
    if (s == t) {
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = i; j < a.size(); ++j) nums.push_back(a[i] * a[j]);
    } else {
        for (const auto& x : a)
            for (const auto& y : b) nums.push_back(x * y);
    }
    return Subspace<F>::from_numerators(s.field(), s.common_den() * t.common_den(), nums);
}

template <class F>
Subspace<F> span_of(const F& field, const std::vector<RatFunc<F>>& gens) {
    return Subspace<F>::span(field, gens);
}

}  // namespace ffreiman
