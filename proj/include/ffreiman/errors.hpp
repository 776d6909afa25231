#pragma once

#include <stdexcept>
#include <string>

namespace ffreiman {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class ZeroDenominator : public Error {
   public:
    ZeroDenominator() : Error("zero denominator") {}
    explicit ZeroDenominator(const std::string& what) : Error(what) {}
};

class MixedFields : public Error {
   public:
    MixedFields() : Error("operands live over different base fields") {}
};

class ZeroElement : public Error {
   public:
    ZeroElement() : Error("valuation of the zero element is undefined") {}
};

/// A place of degree > 1 over the base field was encountered (an irreducible
/// factor without roots in K); the computable-place regime is left.
class NonSplitPlace : public Error {
   public:
    explicit NonSplitPlace(const std::string& factor)
        : Error("non-split place: factor " + factor + " has no roots in the base field") {}
};

class ConstantElement : public Error {
   public:
    ConstantElement() : Error("element is constant") {}
};

class AllConstant : public Error {
   public:
    AllConstant() : Error("all generators are constant") {}
};

class SpanMismatch : public Error {
   public:
    SpanMismatch() : Error("base + span(E) does not equal the target space") {}
};

class SmallFieldExhausted : public Error {
   public:
    SmallFieldExhausted() : Error("every residue of the prime field is a cancellation value") {}
};

class FieldTooSmall : public Error {
   public:
    FieldTooSmall() : Error("prime field too small to sample a good point") {}
};

class InternalInvariantViolation : public Error {
   public:
    explicit InternalInvariantViolation(const std::string& what)
        : Error("internal invariant violated: " + what) {}
};

class HypothesisNotMet : public Error {
   public:
    explicit HypothesisNotMet(const std::string& what) : Error("hypothesis not met: " + what) {}
};

class DegreeRealizationFailed : public Error {
   public:
    explicit DegreeRealizationFailed(const std::string& what)
        : Error("degree realization failed: " + what) {}
};

class DimensionTooLarge : public Error {
   public:
    DimensionTooLarge() : Error("requested dimension exceeds deg D + 1") {}
};

class InvalidParameter : public Error {
   public:
    using Error::Error;
};

class NotPrime : public Error {
   public:
    explicit NotPrime(const std::string& p) : Error(p + " is not prime") {}
};

class SyntaxError : public Error {
   public:
    SyntaxError(const std::string& msg, int line, int column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

   private:
    int line_;
    int column_;
};

}  // namespace ffreiman
