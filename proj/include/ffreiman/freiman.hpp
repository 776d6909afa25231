#pragma once

// Integer side: sumsets, the 3k-4 hypothesis and conclusion, arithmetic
// progression hulls, and the monomial embedding A -> span{x^a}.

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "subspace.hpp"

namespace ffreiman {

/// Nonempty finite set of integers, sorted ascending without duplicates.
class IntSet {
   public:
    IntSet() = default;
    explicit IntSet(std::vector<long> v) : v_(std::move(v)) {
        std::sort(v_.begin(), v_.end());
        v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
        if (v_.empty()) throw InvalidParameter("IntSet must be nonempty");
    }

    const std::vector<long>& elems() const noexcept { return v_; }
    std::size_t size() const noexcept { return v_.size(); }
    long min() const { return v_.front(); }
    long max() const { return v_.back(); }

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < v_.size(); ++i) s += (i ? "," : "") + std::to_string(v_[i]);
        return s + "}";
    }

    friend bool operator==(const IntSet& a, const IntSet& b) { return a.v_ == b.v_; }

   private:
    std::vector<long> v_;
};

inline IntSet sumset(const IntSet& a) {
    std::set<long> s;
    const auto& e = a.elems();
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i; j < e.size(); ++j) s.insert(e[i] + e[j]);
    return IntSet(std::vector<long>(s.begin(), s.end()));
}

struct FreimanReport {
    std::size_t size = 0;
    std::size_t sumset_size = 0;
    bool hypothesis_holds = false;  // |A+A| <= 3|A| - 4
    long ap_start = 0;
    long ap_step = 0;               // 0 for a singleton
    long hull_length = 0;           // terms of the least AP containing A
    long bound = 0;                 // |A+A| - |A| + 1
    bool conclusion_holds = false;  // hull_length <= bound
};

/// Least arithmetic progression containing A: step = gcd of differences.
inline FreimanReport freiman_3k4(const IntSet& a) {
    if (a.size() < 2) throw InvalidParameter("3k-4 check needs |A| >= 2");
    FreimanReport r;
    r.size = a.size();
    r.sumset_size = sumset(a).size();
    r.hypothesis_holds = r.sumset_size + 4 <= 3 * r.size;
    long d = 0;
    for (long v : a.elems()) d = std::gcd(d, v - a.min());
    r.ap_start = a.min();
    r.ap_step = d;
    r.hull_length = (a.max() - a.min()) / d + 1;
    r.bound = static_cast<long>(r.sumset_size) - static_cast<long>(r.size) + 1;
    r.conclusion_holds = r.hull_length <= r.bound;
    if (r.hypothesis_holds && !r.conclusion_holds)
        throw InternalInvariantViolation("3k-4 conclusion fails on " + a.to_string());
    return r;
}

/// span{x^a : a in A}; A must be nonnegative.
template <class F>
Subspace<F> monomial_space(const IntSet& a, const F& field) {
    if (a.min() < 0) throw InvalidParameter("monomial space needs min(A) >= 0; translate first");
    std::vector<Poly<F>> nums;
    for (long v : a.elems()) nums.push_back(Poly<F>::monomial(field, field.one(), static_cast<int>(v)));
    return Subspace<F>::from_numerators(field, Poly<F>::one(field), nums);
}

/// |A+A| - 2|A| + 1, the additive genus matching gamma of the monomial space.
inline long additive_genus(const IntSet& a) {
    return static_cast<long>(sumset(a).size()) - 2 * static_cast<long>(a.size()) + 1;
}

}  // namespace ffreiman
