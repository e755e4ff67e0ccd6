#pragma once

#include "frobq/quad.hpp"

namespace frobq {

/// Which linear system over Z^4 is being solved, for generators drawn from
/// N[sqrt(m)] with b + c*sqrt(m) mixed (b, c >= 1):
///
///   RationalGen:  a(x + y*sqrt(m)) + (b + c*sqrt(m))(z + w*sqrt(m)) = A + B*sqrt(m)
///   RootGen:      a*sqrt(m)(x + y*sqrt(m)) + (b + c*sqrt(m))(z + w*sqrt(m)) = A + B*sqrt(m)
enum class SystemCase {
    RationalGen,
    RootGen,
};

struct Solution4 {
    Int x;
    Int y;
    Int z;
    Int w;

    friend bool operator==(const Solution4& p, const Solution4& q) {
        return p.x == q.x && p.y == q.y && p.z == q.z && p.w == q.w;
    }
    friend bool operator!=(const Solution4& p, const Solution4& q) {
        return !(p == q);
    }
};

/// One of the two mixed systems above, with its solvability precondition
/// checked at construction:
///
///   RationalGen requires gcd(a, b^2 - c^2*m) = 1,
///   RootGen requires gcd(a*m, b^2 - c^2*m) = 1,
///
/// which is exactly the condition for the pair to span 1 in Z[sqrt(m)], and
/// makes the system solvable for every target. Matching the element
/// equation componentwise gives two scalar equations over Z^4:
///
///   RationalGen:  a*x + b*z + c*m*w = A      a*y + c*z + b*w = B
///   RootGen:      a*m*y + b*z + c*m*w = A    a*x + c*z + b*w = B
class MixedSystem {
public:
    /// Throws std::domain_error when a, b or c is < 1 or the gcd
    /// precondition fails.
    MixedSystem(SystemCase kase, Int a, Int b, Int c, RingContext ctx, QuadInt target);

    SystemCase kase() const { return case_; }
    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }
    const RingContext& ctx() const { return ctx_; }
    const QuadInt& target() const { return target_; }

    /// b^2 - c^2*m. Never zero (m is not a perfect square). May be negative.
    const Int& d() const { return d_; }

    /// Modulus of the canonical z-range: a for RationalGen, a*m for RootGen.
    const Int& zmod() const { return zmod_; }
    /// Modulus of the canonical w-range: a in both cases.
    const Int& wmod() const { return a_; }

    /// Checks both scalar equations exactly.
    bool satisfies(const Solution4& s) const;

    /// Same system with a different right-hand side.
    MixedSystem with_target(QuadInt target) const;

private:
    SystemCase case_;
    Int a_;
    Int b_;
    Int c_;
    RingContext ctx_;
    QuadInt target_;
    Int d_;
    Int zmod_;
};

/// The unique solution with 0 <= z < zmod and 0 <= w < wmod. Its sign
/// pattern on (x, y) decides semigroup membership of the target.
struct CanonicalSolution {
    Solution4 sol;
    Int zmod;
    Int wmod;

    friend bool operator==(const CanonicalSolution& p, const CanonicalSolution& q) {
        return p.sol == q.sol && p.zmod == q.zmod && p.wmod == q.wmod;
    }
};

/// One solution of the system, built from a Bezout pair:
/// with a*lambda + d*mu = 1 (RationalGen) or a*m*lambda + d*mu = 1 (RootGen),
///
///   x + y*sqrt(m) = lambda * (A + B*sqrt(m))            (RationalGen)
///   x + y*sqrt(m) = sqrt(m) * lambda * (A + B*sqrt(m))  (RootGen)
///   z + w*sqrt(m) = (b - c*sqrt(m)) * mu * (A + B*sqrt(m))
Solution4 particular_solution(const MixedSystem& sys);

/// The solution family that moves (z, w). Per unit k:
///   RationalGen: (x, y, z, w) += (-(b - c*m), b - c, a, -a) * k
///   RootGen:     (x, y, z, w) += (b - c*m, -(b - c), a*m, -a) * k
Solution4 shift_primary(const Solution4& sol, const Int& k, const MixedSystem& sys);

/// The solution family that moves z only (w is unchanged). Per unit l:
///   RationalGen: (x, y, z, w) += (b, c, -a, 0) * l
///   RootGen:     (x, y, z, w) += (c*m, b, -a*m, 0) * l
Solution4 shift_secondary(const Solution4& sol, const Int& l, const MixedSystem& sys);

/// Reduces any solution to the canonical one: first shift_primary with
/// k = floor(w / a) to bring w into [0, a), then shift_secondary with
/// l = floor(z' / zmod) to bring z into [0, zmod). The second step leaves w
/// unchanged, so two steps always suffice.
CanonicalSolution canonicalize(const Solution4& sol, const MixedSystem& sys);

/// canonicalize(particular_solution(sys), sys).
CanonicalSolution solve_canonical(const MixedSystem& sys);

}  // namespace frobq
