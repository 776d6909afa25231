#pragma once

// Exact base fields: the rationals (GMP-backed) and prime fields Z/pZ.
//
// Every algebraic object in the library is templated on a field descriptor
// `F` that provides `F::value_type` plus constructors for constants. Field
// descriptors are small values; two objects are compatible iff their
// descriptors compare equal.

#include <gmpxx.h>

#include <cassert>
#include <cstdint>
#include <ostream>
#include <string>

#include "errors.hpp"

namespace ffreiman {

class Rational {
   public:
    Rational() = default;
    Rational(long v) : v_(v) {}  // NOLINT: implicit by design of numeric literals
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw ZeroDenominator();
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw ZeroDenominator();
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    const mpq_class& get() const noexcept { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const noexcept { return sgn(v_) == 0; }
    bool is_one() const noexcept { return v_ == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) {
        v_ += o.v_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        v_ -= o.v_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        v_ *= o.v_;
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw ZeroDenominator("division by zero scalar");
        v_ /= o.v_;
        return *this;
    }
    Rational inverse() const {
        if (is_zero()) throw ZeroDenominator("inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    /// "3/4", "-2", "0".
    std::string to_string() const { return v_.get_str(); }

   private:
    mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

/// Residue modulo a prime carried alongside its modulus.
class Zp {
   public:
    Zp() = default;
    Zp(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}

    std::uint64_t value() const noexcept { return v_; }
    std::uint64_t modulus() const noexcept { return p_; }
    bool is_zero() const noexcept { return v_ == 0; }
    bool is_one() const noexcept { return v_ == 1; }

    Zp operator-() const { return Zp(v_ == 0 ? 0 : p_ - v_, p_); }
    Zp& operator+=(const Zp& o) {
        assert(p_ == o.p_);
        v_ += o.v_;
        if (v_ >= p_) v_ -= p_;
        return *this;
    }
    Zp& operator-=(const Zp& o) {
        assert(p_ == o.p_);
        v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
        return *this;
    }
    Zp& operator*=(const Zp& o) {
        assert(p_ == o.p_);
        v_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v_) * o.v_) % p_);
        return *this;
    }
    Zp& operator/=(const Zp& o) { return *this *= o.inverse(); }

    Zp pow(std::uint64_t e) const {
        Zp base = *this, acc(1, p_);
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }
    Zp inverse() const {
        if (v_ == 0) throw ZeroDenominator("inverse of zero residue");
        // extended Euclid on signed 128-bit to stay exact for p < 2^63
        __int128 a = v_, m = p_, x0 = 1, x1 = 0;
        while (m) {
            __int128 q = a / m;
            __int128 t = a - q * m;
            a = m;
            m = t;
            t = x0 - q * x1;
            x0 = x1;
            x1 = t;
        }
        if (x0 < 0) x0 += p_;
        return Zp(static_cast<std::uint64_t>(x0), p_);
    }

    friend Zp operator+(Zp a, const Zp& b) { return a += b; }
    friend Zp operator-(Zp a, const Zp& b) { return a -= b; }
    friend Zp operator*(Zp a, const Zp& b) { return a *= b; }
    friend Zp operator/(Zp a, const Zp& b) { return a /= b; }
    friend bool operator==(const Zp& a, const Zp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }
    friend bool operator<(const Zp& a, const Zp& b) { return a.v_ < b.v_; }

    std::string to_string() const { return std::to_string(v_); }

   private:
    std::uint64_t v_ = 0;
    std::uint64_t p_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Zp& r) { return os << r.to_string(); }

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % d == 0) return n == d;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
    };
    auto powmod = [&](std::uint64_t b, std::uint64_t e, std::uint64_t m) {
        std::uint64_t r = 1;
        b %= m;
        while (e) {
            if (e & 1) r = mulmod(r, b, m);
            b = mulmod(b, b, m);
            e >>= 1;
        }
        return r;
    };
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// The field of rational numbers.
struct RationalField {
    using value_type = Rational;

    value_type zero() const { return Rational(0); }
    value_type one() const { return Rational(1); }
    value_type from_int(long v) const { return Rational(v); }
    value_type from_mpz(const mpz_class& v) const { return Rational(mpq_class(v)); }
    value_type from_rational(const Rational& r) const { return r; }

    /// Characteristic 0; used to pick sampling strategies.
    std::uint64_t characteristic() const noexcept { return 0; }
    std::string name() const { return "q"; }

    friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// Z/pZ for a prime p < 2^63.
struct PrimeField {
    using value_type = Zp;

    std::uint64_t p = 2;

    PrimeField() = default;
    explicit PrimeField(std::uint64_t prime) : p(prime) {
        if (!is_prime(prime) || prime >= (1ULL << 63)) throw NotPrime(std::to_string(prime));
    }

    value_type zero() const { return Zp(0, p); }
    value_type one() const { return Zp(1, p); }
    value_type from_int(long v) const {
        const long m = static_cast<long>(p);  // p < 2^63 fits
        long r = v % m;
        if (r < 0) r += m;
        return Zp(static_cast<std::uint64_t>(r), p);
    }
    value_type from_mpz(const mpz_class& v) const {
        if (v.fits_slong_p()) return from_int(v.get_si());
        mpz_class m(std::to_string(p));
        mpz_class r = v % m;
        if (r < 0) r += m;
        return Zp(std::stoull(r.get_str()), p);
    }
    value_type from_rational(const Rational& r) const {
        Zp den = from_mpz(r.denominator());
        if (den.is_zero()) throw ZeroDenominator("denominator vanishes modulo " + std::to_string(p));
        return from_mpz(r.numerator()) / den;
    }

    std::uint64_t characteristic() const noexcept { return p; }
    std::string name() const { return "fp " + std::to_string(p); }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p == b.p; }
};

}  // namespace ffreiman
