#pragma once

// Dense univariate polynomials over an exact field, with Euclidean gcd and
// extraction of the linear factors (the K-rational places below a polynomial).

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"

namespace ffreiman {

/// Degree of the zero polynomial. Never -1, so it cannot collide with
/// ordinary valuation arithmetic.
inline constexpr int kDegNegInf = std::numeric_limits<int>::min();

template <class F>
class Poly {
   public:
    using T = typename F::value_type;

    Poly() = default;
    explicit Poly(F field) : field_(std::move(field)) {}
    Poly(F field, std::vector<T> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

    static Poly constant(const F& field, const T& c) { return Poly(field, {c}); }
    static Poly one(const F& field) { return constant(field, field.one()); }
    static Poly monomial(const F& field, const T& c, int k) {
        std::vector<T> v(static_cast<std::size_t>(k) + 1, field.zero());
        v.back() = c;
        return Poly(field, std::move(v));
    }
    static Poly x(const F& field) { return monomial(field, field.one(), 1); }
    /// x - a
    static Poly linear(const F& field, const T& a) { return Poly(field, {-a, field.one()}); }

    const F& field() const noexcept { return field_; }
    const std::vector<T>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return c_.empty() ? kDegNegInf : static_cast<int>(c_.size()) - 1; }
    bool is_constant() const noexcept { return c_.size() <= 1; }

    T coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return field_.zero();
        return c_[static_cast<std::size_t>(k)];
    }
    T leading() const { return c_.empty() ? field_.zero() : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    /// Lowest index with a nonzero coefficient; order of vanishing at 0.
    int trailing_degree() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return static_cast<int>(i);
        return kDegNegInf;
    }

    T operator()(const T& at) const {
        T acc = field_.zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
        return acc;
    }

    Poly monic() const {
        if (c_.empty() || c_.back().is_one()) return *this;
        return *this * c_.back().inverse();
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly(field_);
        std::vector<T> d;
        d.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * field_.from_int(static_cast<long>(i)));
        return Poly(field_, std::move(d));
    }

    /// p(x + a)
    Poly shift(const T& a) const {
        Poly out(field_);
        const Poly lin(field_, {a, field_.one()});
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * lin + constant(field_, *it);
        return out;
    }

    Poly pow(unsigned e) const {
        Poly acc = one(field_), base = *this;
        while (e) {
            if (e & 1U) acc = acc * base;
            e >>= 1U;
            if (e) base = base * base;
        }
        return acc;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    Poly& operator+=(const Poly& o) {
        check_field(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check_field(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_field(b);
        if (a.is_zero() || b.is_zero()) return Poly(a.field_);
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, a.field_.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(a.field_, std::move(r));
    }
    friend Poly operator*(Poly a, const T& s) {
        if (s.is_zero()) return Poly(a.field_);
        for (auto& v : a.c_) v *= s;
        return a;
    }
    friend Poly operator*(const T& s, Poly a) { return std::move(a) * s; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Quotient and remainder of Euclidean division.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        check_field(d);
        if (d.is_zero()) throw ZeroDenominator("polynomial division by zero");
        if (degree() < d.degree()) return {Poly(field_), *this};
        std::vector<T> rem = c_;
        const std::size_t dn = d.c_.size();
        std::vector<T> q(c_.size() - dn + 1, field_.zero());
        const T inv = d.c_.back().inverse();
        for (std::size_t k = q.size(); k-- > 0;) {
            const T f = rem[k + dn - 1] * inv;
            q[k] = f;
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < dn; ++j) rem[k + j] -= f * d.c_[j];
        }
        rem.resize(dn - 1, field_.zero());
        return {Poly(field_, std::move(q)), Poly(field_, std::move(rem))};
    }
    friend Poly operator/(const Poly& a, const Poly& b) { return a.divmod(b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return a.divmod(b).second; }

    bool divides(const Poly& other) const { return (other % *this).is_zero(); }

    std::string to_string(const std::string& var = "x") const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = c_.size(); k-- > 0;) {
            const T& c = c_[k];
            if (c.is_zero()) continue;
            std::string s = c.to_string();
            bool negative = !s.empty() && s[0] == '-';
            if (negative) s.erase(0, 1);
            if (first) {
                if (negative) os << "-";
            } else {
                os << (negative ? " - " : " + ");
            }
            first = false;
            const bool unit = (s == "1");
            if (k == 0) {
                os << s;
            } else {
                if (!unit) os << s << "*";
                os << var;
                if (k > 1) os << "^" << k;
            }
        }
        return os.str();
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    void check_field(const Poly& o) const {
        if (!(field_ == o.field_)) throw MixedFields();
    }

    F field_{};
    std::vector<T> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        Poly<F> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <class F>
Poly<F> lcm(const Poly<F>& a, const Poly<F>& b) {
    if (a.is_zero() || b.is_zero()) return Poly<F>(a.field());
    return ((a * b) / gcd(a, b)).monic();
}

/// Multiplicity of (x - a) in p; p must be nonzero.
template <class F>
int root_multiplicity(Poly<F> p, const typename F::value_type& a) {
    int m = 0;
    const Poly<F> lin = Poly<F>::linear(p.field(), a);
    while (!p.is_zero() && p(a).is_zero()) {
        p = p / lin;
        ++m;
    }
    return m;
}

template <class F>
struct RootFactorization {
    typename F::value_type lc;
    std::map<typename F::value_type, int> roots;  // alpha -> multiplicity
    Poly<F> nonsplit;                             // monic, no roots in K

    /// lc * prod (x - alpha)^m * nonsplit
    Poly<F> expand() const {
        Poly<F> acc = Poly<F>::constant(nonsplit.field(), lc) * nonsplit;
        for (const auto& [a, m] : roots) acc = acc * Poly<F>::linear(nonsplit.field(), a).pow(static_cast<unsigned>(m));
        return acc;
    }
};

namespace detail {

// Pollard-Brent on mpz; returns a nontrivial factor of a composite n.
inline mpz_class pollard_brent(const mpz_class& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        mpz_class y = 2, x, g = 1, q = 1, ys;
        unsigned long r = 1;
        const unsigned long m = 64;
        auto f = [&](const mpz_class& v) { return mpz_class((v * v + c) % n); };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = (q * abs(x - y)) % n;
                }
                g = gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(mpz_class(abs(x - ys)), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

inline void factor_into(mpz_class n, std::map<mpz_class, int>& out) {
    if (n == 1) return;
    for (unsigned long p = 2; p < 1000; ++p) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out[mpz_class(p)]++;
            n /= p;
        }
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
        out[n]++;
        return;
    }
    mpz_class d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

inline std::vector<mpz_class> positive_divisors(const mpz_class& n) {
    std::map<mpz_class, int> fac;
    factor_into(abs(n), fac);
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : fac) {
        const std::size_t sz = divs.size();
        mpz_class pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

/// Distinct rational roots of a nonzero polynomial over Q.
inline std::vector<Rational> rational_roots(const Poly<RationalField>& p) {
    std::vector<Rational> out;
    if (p.degree() <= 0) return out;
    // square-free part keeps candidate tests cheap
    Poly<RationalField> sf = p / gcd(p, p.derivative());
    if (sf.coeff(0).is_zero()) {
        out.emplace_back(0);
        sf = sf / Poly<RationalField>::x(sf.field());
    }
    if (sf.degree() <= 0) return out;
    mpz_class den_lcm = 1;
    for (const auto& c : sf.coeffs()) den_lcm = lcm(den_lcm, c.denominator());
    std::vector<mpz_class> ints;
    mpz_class content = 0;
    for (const auto& c : sf.coeffs()) {
        ints.push_back(c.numerator() * (den_lcm / c.denominator()));
        content = gcd(content, ints.back());
    }
    for (auto& v : ints) v /= content;
    const auto num_divs = positive_divisors(ints.front());
    const auto den_divs = positive_divisors(ints.back());
    for (const auto& q : den_divs) {
        for (const auto& a : num_divs) {
            if (gcd(a, q) != 1) continue;
            for (int sign : {1, -1}) {
                Rational cand(mpz_class(a * sign), q);
                if (sf(cand).is_zero()) out.push_back(cand);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

template <class F>
Poly<F> powmod(Poly<F> base, mpz_class e, const Poly<F>& m) {
    Poly<F> acc = Poly<F>::one(m.field()) % m;
    base = base % m;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = (acc * base) % m;
        e >>= 1;
        if (e > 0) base = (base * base) % m;
    }
    return acc;
}

/// Distinct roots of a monic square-free product of linear factors over F_p.
inline void split_linear(const Poly<PrimeField>& g, std::vector<Zp>& out, std::uint64_t& salt) {
    const PrimeField& K = g.field();
    if (g.degree() <= 0) return;
    if (g.degree() == 1) {
        out.push_back(-g.coeff(0) / g.coeff(1));
        return;
    }
    const mpz_class half = (mpz_class(std::to_string(K.p)) - 1) / 2;
    for (;;) {
        const Zp a = K.from_int(static_cast<long>(salt++ % K.p));
        Poly<PrimeField> h = powmod(Poly<PrimeField>(K, {a, K.one()}), half, g) - Poly<PrimeField>::one(K);
        Poly<PrimeField> d = gcd(g, h);
        if (d.degree() > 0 && d.degree() < g.degree()) {
            split_linear(d, out, salt);
            split_linear(g / d, out, salt);
            return;
        }
    }
}

inline std::vector<Zp> prime_field_roots(const Poly<PrimeField>& p) {
    const PrimeField& K = p.field();
    std::vector<Zp> out;
    if (p.degree() <= 0) return out;
    if (K.p <= 4096) {
        for (std::uint64_t v = 0; v < K.p; ++v) {
            const Zp a(v, K.p);
            if (p(a).is_zero()) out.push_back(a);
        }
        return out;
    }
    const Poly<PrimeField> m = p.monic();
    const Poly<PrimeField> xp = powmod(Poly<PrimeField>::x(K), mpz_class(std::to_string(K.p)), m);
    Poly<PrimeField> g = gcd(m, xp - Poly<PrimeField>::x(K));
    if (g.coeff(0).is_zero()) {
        out.push_back(K.zero());
        g = g / Poly<PrimeField>::x(K);
    }
    std::uint64_t salt = 1;
    split_linear(g.monic(), out, salt);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Rational> distinct_roots(const Poly<RationalField>& p) { return rational_roots(p); }
inline std::vector<Zp> distinct_roots(const Poly<PrimeField>& p) { return prime_field_roots(p); }

}  // namespace detail

/// p = lc * prod (x - alpha)^m * nonsplit, where nonsplit has no roots in K.
template <class F>
RootFactorization<F> linear_root_factorization(const Poly<F>& p) {
    if (p.is_zero()) throw InvalidParameter("linear_root_factorization of the zero polynomial");
    RootFactorization<F> out{p.leading(), {}, p.monic()};
    for (const auto& a : detail::distinct_roots(p)) {
        const int m = root_multiplicity(out.nonsplit, a);
        out.roots[a] = m;
        out.nonsplit = out.nonsplit / Poly<F>::linear(p.field(), a).pow(static_cast<unsigned>(m));
    }
    return out;
}

}  // namespace ffreiman
