#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace frobq {

/// Exact arbitrary-precision integer. All arithmetic in this library is
/// exact; nothing is ever rounded or allowed to wrap.
using Int = mpz_class;

/// True iff m is a valid radicand: m >= 2 and m is not a perfect square.
/// Decided with an exact integer square root, never floating point.
bool is_nonsquare(const Int& m);

/// The ring Z[sqrt(m)] for a fixed non-square radicand m >= 2.
/// Immutable after construction; construction validates the radicand.
class RingContext {
public:
    explicit RingContext(Int m);

    const Int& radicand() const { return m_; }

    friend bool operator==(const RingContext& a, const RingContext& b) {
        return a.m_ == b.m_;
    }

private:
    Int m_;
};

/// An element rat + irr*sqrt(m) of Z[sqrt(m)]. Since sqrt(m) is irrational
/// the (rat, irr) representation is unique, so equality is componentwise.
struct QuadInt {
    Int rat;
    Int irr;

    QuadInt() : rat(0), irr(0) {}
    QuadInt(Int r, Int i) : rat(std::move(r)), irr(std::move(i)) {}

    friend bool operator==(const QuadInt& a, const QuadInt& b) {
        return a.rat == b.rat && a.irr == b.irr;
    }
    friend bool operator!=(const QuadInt& a, const QuadInt& b) {
        return !(a == b);
    }
};

inline QuadInt add(const QuadInt& x, const QuadInt& y) {
    return {x.rat + y.rat, x.irr + y.irr};
}

inline QuadInt sub(const QuadInt& x, const QuadInt& y) {
    return {x.rat - y.rat, x.irr - y.irr};
}

inline QuadInt negate(const QuadInt& x) {
    return {-x.rat, -x.irr};
}

/// (x.rat*y.rat + x.irr*y.irr*m) + (x.rat*y.irr + x.irr*y.rat)*sqrt(m)
QuadInt mul(const QuadInt& x, const QuadInt& y, const RingContext& ctx);

/// rat - irr*sqrt(m)
inline QuadInt conjugate(const QuadInt& x) {
    return {x.rat, -x.irr};
}

/// rat^2 - irr^2*m, i.e. x * conjugate(x). Multiplicative.
Int norm(const QuadInt& x, const RingContext& ctx);

/// Both parts nonnegative (element of N[sqrt(m)]).
inline bool is_natural(const QuadInt& x) {
    return x.rat >= 0 && x.irr >= 0;
}

inline bool is_zero(const QuadInt& x) {
    return x.rat == 0 && x.irr == 0;
}

/// g = gcd(|p|, |q|) >= 1 together with one Bezout pair: u*p + v*q = g.
/// Which pair is returned is unspecified beyond the identity; callers must
/// not depend on the particular (u, v).
struct EgcdResult {
    Int g;
    Int u;
    Int v;
};

/// Extended gcd. Throws std::domain_error when both inputs are zero.
EgcdResult egcd(const Int& p, const Int& q);

/// gcd of absolute values, always >= 0.
Int gcd_abs(const Int& p, const Int& q);

/// Floor division: n = q*d + r with 0 <= r < d. The quotient rounds toward
/// -infinity, so negative n reduce into the same nonnegative residue range.
/// Throws std::domain_error unless d >= 1.
std::pair<Int, Int> floor_divmod(const Int& n, const Int& d);

}  // namespace frobq
