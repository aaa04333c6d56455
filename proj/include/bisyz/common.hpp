#pragma once

#include <ostream>
#include <stdexcept>
#include <string>

namespace bisyz {

/// A bidegree (m, n).  Negative components are allowed; they arise as
/// twists R(-a, -b) and as arguments of cohomological dimension formulas.
struct BiDeg {
    long m = 0;
    long n = 0;

    friend BiDeg operator+(BiDeg a, BiDeg b) { return {a.m + b.m, a.n + b.n}; }
    friend BiDeg operator-(BiDeg a, BiDeg b) { return {a.m - b.m, a.n - b.n}; }
    friend bool operator==(BiDeg a, BiDeg b) { return a.m == b.m && a.n == b.n; }
    friend bool operator!=(BiDeg a, BiDeg b) { return !(a == b); }

    /// Componentwise comparison (partial order).
    bool leq(BiDeg other) const { return m <= other.m && n <= other.n; }
    bool nonnegative() const { return m >= 0 && n >= 0; }

    std::string str() const
    {
        return "(" + std::to_string(m) + "," + std::to_string(n) + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, BiDeg d) { return os << d.str(); }

    /// Order for use as a map key / in sorted shift lists.
    friend bool operator<(BiDeg a, BiDeg b)
    {
        return a.m != b.m ? a.m < b.m : a.n < b.n;
    }
};

/// The trichotomy of input triples.  Degenerate <=> the triple has a common
/// zero on P^1 x P^1 <=> Res_{(2,1)} vanishes.
enum class InstanceClass { Generic, NonGeneric, Degenerate };

inline const char* to_string(InstanceClass c)
{
    switch (c) {
    case InstanceClass::Generic: return "Generic";
    case InstanceClass::NonGeneric: return "NonGeneric";
    default: return "Degenerate";
    }
}

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };
struct NonSquare : Error { using Error::Error; };
struct WrongBidegree : Error { using Error::Error; };
struct ZeroDivisor : Error { using Error::Error; };
struct DegreeMismatch : Error { using Error::Error; };
struct DegenerateInput : Error { using Error::Error; };
struct GenericInstance : Error { using Error::Error; };
struct DegenerateClass : Error { using Error::Error; };
struct NotCompleteIntersection : Error { using Error::Error; };
struct LiftInconsistent : Error { using Error::Error; };
struct VerificationFailure : Error { using Error::Error; };
struct FactorizationFailure : Error { using Error::Error; };
struct ZeroInput : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

/// Conditions that indicate a bug in this library rather than bad input.
struct InternalNonExactDivision : Error { using Error::Error; };
struct InternalInvariantViolation : Error { using Error::Error; };

}  // namespace bisyz
