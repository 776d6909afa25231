#pragma once

// Text input: rational-function expressions, divisors and instance files.
//
// Expression grammar (left-associative binaries):
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' INTEGER)?
//   primary := INTEGER | 'x' | '(' expr ')'
// so '^' binds tighter than unary minus: -x^2 = -(x^2). A literal 3/4 is the
// quotient of two integer literals, which is the same value either way.

#include <cctype>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "divisor.hpp"

namespace ffreiman {

/// Largest exponent or resulting degree accepted from text.
inline constexpr int kMaxParsedDegree = 4096;
inline constexpr int kMaxNesting = 200;

struct ExprNode {
    enum class Kind { Number, Var, Neg, Add, Sub, Mul, Div, Pow };
    Kind kind;
    mpz_class value;  // Number
    int exponent = 0;  // Pow
    std::unique_ptr<ExprNode> lhs, rhs;
    int line = 1, column = 1;
};

namespace detail {

class ExprParser {
   public:
    ExprParser(std::string_view text, int line) : s_(text), line_(line) {}

    std::unique_ptr<ExprNode> parse() {
        skip_ws();
        if (at_end()) fail("empty expression");
        auto e = expr(0);
        skip_ws();
        if (!at_end()) fail(std::string("unexpected '") + s_[pos_] + "'");
        return e;
    }

   private:
    [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, line_, static_cast<int>(pos_) + 1); }
    bool at_end() const { return pos_ >= s_.size(); }
    void skip_ws() {
        while (!at_end() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r')) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (!at_end() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::unique_ptr<ExprNode> node(ExprNode::Kind k) {
        auto n = std::make_unique<ExprNode>();
        n->kind = k;
        n->line = line_;
        n->column = static_cast<int>(pos_) + 1;
        return n;
    }
    std::unique_ptr<ExprNode> binary(ExprNode::Kind k, std::unique_ptr<ExprNode> a, std::unique_ptr<ExprNode> b) {
        auto n = node(k);
        n->lhs = std::move(a);
        n->rhs = std::move(b);
        return n;
    }
    void enter(int depth) const {
        if (depth > kMaxNesting) fail("expression nested too deeply");
    }

    std::unique_ptr<ExprNode> expr(int depth) {
        enter(depth);
        auto lhs = term(depth);
        for (;;) {
            if (eat('+'))
                lhs = binary(ExprNode::Kind::Add, std::move(lhs), term(depth));
            else if (eat('-'))
                lhs = binary(ExprNode::Kind::Sub, std::move(lhs), term(depth));
            else
                return lhs;
        }
    }
    std::unique_ptr<ExprNode> term(int depth) {
        auto lhs = unary(depth);
        for (;;) {
            if (eat('*')) {
                lhs = binary(ExprNode::Kind::Mul, std::move(lhs), unary(depth));
            } else if (eat('/')) {
                skip_ws();
                const std::size_t at = pos_;
                auto rhs = unary(depth);
                if (rhs->kind == ExprNode::Kind::Number && rhs->value == 0) {
                    pos_ = at;
                    fail("division by the literal 0");
                }
                lhs = binary(ExprNode::Kind::Div, std::move(lhs), std::move(rhs));
            } else {
                return lhs;
            }
        }
    }
    std::unique_ptr<ExprNode> unary(int depth) {
        enter(depth);
        if (eat('-')) {
            auto n = node(ExprNode::Kind::Neg);
            n->lhs = unary(depth + 1);
            return n;
        }
        return power(depth);
    }
    std::unique_ptr<ExprNode> power(int depth) {
        auto base = primary(depth);
        if (!eat('^')) return base;
        skip_ws();
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("exponent must be a nonnegative integer literal");
        if (pos_ - start > 5 || std::stoi(std::string(s_.substr(start, pos_ - start))) > kMaxParsedDegree) {
            pos_ = start;
            fail("exponent too large");
        }
        auto n = node(ExprNode::Kind::Pow);
        n->column = static_cast<int>(start) + 1;
        n->exponent = std::stoi(std::string(s_.substr(start, pos_ - start)));
        n->lhs = std::move(base);
        return n;
    }
    std::unique_ptr<ExprNode> primary(int depth) {
        skip_ws();
        if (at_end()) fail("unexpected end of expression");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto n = node(ExprNode::Kind::Number);
            const std::size_t start = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            n->value = mpz_class(std::string(s_.substr(start, pos_ - start)), 10);  // base 0 would read "010" as octal
            return n;
        }
        if (c == 'x') {
            auto n = node(ExprNode::Kind::Var);
            ++pos_;
            return n;
        }
        if (c == '(') {
            ++pos_;
            auto e = expr(depth + 1);
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    int line_;
};

template <class F>
RatFunc<F> evaluate(const ExprNode& n, const F& K) {
    using R = RatFunc<F>;
    using K_ = ExprNode::Kind;
    switch (n.kind) {
        case K_::Number:
            return R::constant(K, K.from_mpz(n.value));
        case K_::Var:
            return R::x(K);
        case K_::Neg:
            return -evaluate(*n.lhs, K);
        case K_::Add:
            return evaluate(*n.lhs, K) + evaluate(*n.rhs, K);
        case K_::Sub:
            return evaluate(*n.lhs, K) - evaluate(*n.rhs, K);
        case K_::Mul: {
            R r = evaluate(*n.lhs, K) * evaluate(*n.rhs, K);
            if (std::max(r.num().degree(), r.den().degree()) > kMaxParsedDegree)
                throw SyntaxError("expression degree too large", n.line, n.column);
            return r;
        }
        case K_::Div: {
            const R d = evaluate(*n.rhs, K);
            if (d.is_zero()) throw ZeroDenominator("expression divides by zero");
            return evaluate(*n.lhs, K) / d;
        }
        case K_::Pow: {
            const R b = evaluate(*n.lhs, K);
            const long deg = std::max(b.num().degree(), b.den().degree());
            if (deg > 0 && deg * n.exponent > kMaxParsedDegree)
                throw SyntaxError("exponent too large", n.line, n.column);
            return b.pow(static_cast<unsigned>(n.exponent));
        }
    }
    throw InternalInvariantViolation("unknown expression node");
}

inline std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

}  // namespace detail

inline std::unique_ptr<ExprNode> parse_expr(std::string_view text, int line = 1) {
    return detail::ExprParser(text, line).parse();
}

/// Canonical value of an expression over K.
template <class F>
RatFunc<F> parse_ratfunc(std::string_view text, const F& field, int line = 1) {
    return detail::evaluate(*parse_expr(text, line), field);
}

/// Base field named in text: "q" or "fp <p>" (also "fp:<p>").
struct FieldSpec {
    bool prime = false;
    std::uint64_t p = 0;

    std::string header() const { return prime ? "fp " + std::to_string(p) : "q"; }
    std::string flag() const { return prime ? "fp:" + std::to_string(p) : "q"; }
    friend bool operator==(const FieldSpec& a, const FieldSpec& b) { return a.prime == b.prime && a.p == b.p; }
};

inline FieldSpec parse_field_spec(std::string_view text, int line = 1) {
    const std::string s = detail::trim(text);
    if (s == "q" || s == "Q") return {};
    std::string rest;
    if (s.rfind("fp:", 0) == 0)
        rest = detail::trim(s.substr(3));
    else if (s.rfind("fp ", 0) == 0)
        rest = detail::trim(s.substr(3));
    else
        throw SyntaxError("field must be 'q' or 'fp <prime>'", line, 1);
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
        throw SyntaxError("prime must be a decimal integer", line, 1);
    if (rest.size() > 19) throw NotPrime(rest);
    const std::uint64_t p = std::stoull(rest);
    PrimeField check(p);  // throws NotPrime
    return {true, check.p};
}

/// Calls fn with the field descriptor named by spec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
    if (spec.prime) return fn(PrimeField(spec.p));
    return fn(RationalField{});
}

/// Header plus raw generator lines; expressions are evaluated once a field is
/// chosen, so a command-line field can override the header.
struct InstanceText {
    FieldSpec field;
    std::vector<std::pair<int, std::string>> lines;  // (line number, expression)
};

inline InstanceText parse_instance_file(std::string_view text) {
    InstanceText out;
    bool have_header = false;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        const std::string line = detail::trim(raw);
        if (line.empty()) continue;
        if (!have_header) {
            if (line.rfind("field:", 0) != 0) throw SyntaxError("expected 'field: q' or 'field: fp <prime>'", line_no, 1);
            out.field = parse_field_spec(line.substr(6), line_no);
            have_header = true;
            continue;
        }
        out.lines.emplace_back(line_no, line);
    }
    if (!have_header) throw SyntaxError("missing field header", line_no, 1);
    return out;
}

template <class F>
std::vector<RatFunc<F>> instance_generators(const InstanceText& inst, const F& field) {
    std::vector<RatFunc<F>> out;
    for (const auto& [line, text] : inst.lines) out.push_back(parse_ratfunc(text, field, line));
    return out;
}

/// Place text: "inf" or a rational scalar such as "-1" or "1/2".
template <class F>
Place<F> parse_place(std::string_view text, const F& field) {
    const std::string s = detail::trim(text);
    if (s == "inf") return Place<F>::infinity();
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
    const std::size_t slash = s.find('/', i);
    const std::string a = s.substr(i, slash == std::string::npos ? std::string::npos : slash - i);
    const std::string b = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto digits = [](const std::string& t) { return !t.empty() && t.find_first_not_of("0123456789") == std::string::npos; };
    if (!digits(a) || !digits(b)) throw SyntaxError("bad place '" + s + "'", 1, 1);
    if (mpz_class(b, 10) == 0) throw SyntaxError("zero denominator in place '" + s + "'", 1, 1);
    const Rational r(mpz_class(neg ? "-" + a : a, 10), mpz_class(b, 10));
    return Place<F>::finite(field.from_rational(r));
}

/// "5*inf + 1*0 - 2*1/2"; "0" is the zero divisor.
template <class F>
Divisor<F> parse_divisor(std::string_view text, const F& field) {
    const std::string s = detail::trim(text);
    Divisor<F> d;
    if (s == "0") return d;
    std::size_t pos = 0;
    auto fail = [&](const std::string& msg) -> void { throw SyntaxError(msg, 1, static_cast<int>(pos) + 1); };
    auto ws = [&] {
        while (pos < s.size() && s[pos] == ' ') ++pos;
    };
    bool first = true;
    while (true) {
        ws();
        if (pos >= s.size()) {
            if (first) fail("empty divisor");
            break;
        }
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
            ws();
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        const std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos || pos - start > 6) fail("expected a coefficient");
        const int c = std::stoi(s.substr(start, pos - start));
        ws();
        if (pos >= s.size() || s[pos] != '*') fail("expected '*'");
        ++pos;
        ws();
        const std::size_t pstart = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && s[pos] != ' ' && s[pos] != '+' && s[pos] != '-') ++pos;
        try {
            d.add(parse_place(s.substr(pstart, pos - pstart), field), sign * c);
        } catch (const SyntaxError& e) {
            pos = pstart;
            fail(e.what());
        }
        first = false;
    }
    return d;
}

}  // namespace ffreiman
