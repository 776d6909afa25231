#pragma once

#include <string>
#include <utility>

#include "poly.hpp"

namespace ffreiman {

/// Element of K(x) in canonical form: gcd(num, den) = 1 and den monic.
/// Equal elements have identical fields.
template <class F>
class RatFunc {
   public:
    using T = typename F::value_type;
    using P = Poly<F>;

    RatFunc() : num_(), den_(P::one(F{})) {}
    explicit RatFunc(const F& field) : num_(field), den_(P::one(field)) {}
    explicit RatFunc(P num) : num_(std::move(num)), den_(P::one(num_.field())) {}
    RatFunc(P num, P den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RatFunc constant(const F& field, const T& c) { return RatFunc(P::constant(field, c)); }
    static RatFunc one(const F& field) { return RatFunc(P::one(field)); }
    static RatFunc x(const F& field) { return RatFunc(P::x(field)); }

    const F& field() const noexcept { return num_.field(); }
    const P& num() const noexcept { return num_; }
    const P& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_constant() const noexcept { return num_.degree() <= 0 && den_.degree() == 0; }
    bool is_polynomial() const noexcept { return den_.degree() == 0; }

    /// -v_inf: deg num - deg den. Zero has no degree.
    int degree() const {
        if (is_zero()) throw ZeroElement();
        return num_.degree() - den_.degree();
    }

    RatFunc inverse() const {
        if (is_zero()) throw ZeroDenominator("inverse of zero rational function");
        return RatFunc(den_, num_);
    }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        const P g = gcd(a.den_, b.den_);
        const P ad = a.den_ / g, bd = b.den_ / g;
        return RatFunc(a.num_ * bd + b.num_ * ad, ad * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        // cross-cancel before multiplying keeps intermediate degrees small
        if (a.is_zero() || b.is_zero()) return RatFunc(a.field());
        const P g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
        RatFunc r(a.field());
        r.num_ = (a.num_ / g1) * (b.num_ / g2);
        r.den_ = (a.den_ / g2) * (b.den_ / g1);
        r.normalize_lead();
        return r;
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
    friend RatFunc operator*(const RatFunc& a, const T& s) { return RatFunc(a.num_ * s, a.den_); }
    friend RatFunc operator*(const T& s, const RatFunc& a) { return a * s; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc pow(unsigned e) const { return RatFunc(num_.pow(e), den_.pow(e)); }

    /// Substitute x -> g.
    RatFunc compose(const RatFunc& g) const {
        auto eval = [&](const P& p) {
            RatFunc acc(g.field());
            for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * g + constant(g.field(), *it);
            return acc;
        };
        return eval(num_) / eval(den_);
    }

    std::string to_string() const {
        if (den_.degree() == 0) return num_.to_string();
        auto wrap = [](const P& p) {
            const std::string s = p.to_string();
            const bool atom = p.coeffs().size() == 1 || (p.trailing_degree() == p.degree() && p.leading().is_one());
            return atom && s.find(' ') == std::string::npos && s.find('/') == std::string::npos ? s : "(" + s + ")";
        };
        return wrap(num_) + "/" + wrap(den_);
    }

   private:
    void normalize() {
        if (den_.is_zero()) throw ZeroDenominator();
        if (!(num_.field() == den_.field())) throw MixedFields();
        if (num_.is_zero()) {
            den_ = P::one(num_.field());
            return;
        }
        const P g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        normalize_lead();
    }
    void normalize_lead() {
        if (num_.is_zero()) {
            den_ = P::one(num_.field());
            return;
        }
        if (!den_.is_monic()) {
            const T inv = den_.leading().inverse();
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    P num_;
    P den_;
};

}  // namespace ffreiman
