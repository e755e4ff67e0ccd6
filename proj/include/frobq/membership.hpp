#pragma once

#include <optional>
#include <utility>

#include "frobq/diophantine.hpp"
#include "frobq/quad.hpp"

namespace frobq {

/// A membership proof: lambda1 * alpha1 + lambda2 * alpha2 = target with
/// both coefficients in N[sqrt(m)] (all four parts nonnegative).
struct Certificate {
    QuadInt lambda1;
    QuadInt lambda2;
};

struct MembershipResult {
    bool member = false;
    std::optional<Certificate> certificate;
    /// Present for the mixed-generator deciders only.
    std::optional<CanonicalSolution> canonical;
};

/// Membership of the target in SG(alpha1, alpha2) for the mixed systems:
/// the target is representable with coefficients in N[sqrt(m)] iff the
/// canonical solution has x >= 0 and y >= 0, in which case
/// (x + y*sqrt(m), z + w*sqrt(m)) is the certificate.
MembershipResult member_mixed(const MixedSystem& sys);

/// Classic two-coin kernel: is n = i*p + j*q with integers i, j >= 0?
/// Decided by O(n / max(p,q)) trial steps. p, q must be >= 1; any n < 0 is
/// a non-member.
bool coin_member(const Int& p, const Int& q, const Int& n);

/// The (i, j) behind coin_member, when it exists (smallest coefficient on
/// the larger coin first).
std::optional<std::pair<Int, Int>> coin_decompose(const Int& p, const Int& q,
                                                  const Int& n);

/// Generator shapes whose membership splits into two independent
/// integer coin problems.
enum class SplitShape {
    /// Generators a and b: lambda1*a + lambda2*b expands to
    /// A = p1*a + p2*b, B = q1*a + q2*b with disjoint coefficient pairs,
    /// so target is a member iff A and B are both in SG_Z(a, b).
    RatRat,
    /// Generators a and b*sqrt(m): the expansion couples
    /// A = p1*a + q2*(b*m) and B = q1*a + p2*b, again disjoint, so target
    /// is a member iff A is in SG_Z(a, b*m) and B is in SG_Z(a, b).
    RatRootMult,
};

MembershipResult member_split(SplitShape shape, const Int& a, const Int& b,
                              const QuadInt& target, const RingContext& ctx);

/// True iff the certificate has all parts >= 0 and reproduces the target
/// exactly under ring arithmetic. Total: never throws on bad certificates.
bool certificate_check(const QuadInt& alpha1, const QuadInt& alpha2,
                       const QuadInt& target, const Certificate& cert,
                       const RingContext& ctx);

}  // namespace frobq
