#include "frobq/membership.hpp"

namespace frobq {

MembershipResult member_mixed(const MixedSystem& sys) {
    MembershipResult res;
    CanonicalSolution canon = solve_canonical(sys);
    res.member = canon.sol.x >= 0 && canon.sol.y >= 0;
    if (res.member) {
        res.certificate = Certificate{QuadInt(canon.sol.x, canon.sol.y),
                                      QuadInt(canon.sol.z, canon.sol.w)};
    }
    res.canonical = std::move(canon);
    return res;
}

std::optional<std::pair<Int, Int>> coin_decompose(const Int& p, const Int& q,
                                                  const Int& n) {
    if (p < 1 || q < 1) {
        throw std::domain_error("coin_decompose requires positive coin values");
    }
    if (n < 0) {
        return std::nullopt;
    }
    // Walk multiples of the larger coin so the loop is as short as possible.
    const bool p_large = p >= q;
    const Int& big = p_large ? p : q;
    const Int& small = p_large ? q : p;
    for (Int i = 0; i * big <= n; ++i) {
        Int rest = n - i * big;
        auto [j, rem] = floor_divmod(rest, small);
        if (rem == 0) {
            return p_large ? std::make_pair(i, j) : std::make_pair(j, i);
        }
    }
    return std::nullopt;
}

bool coin_member(const Int& p, const Int& q, const Int& n) {
    return coin_decompose(p, q, n).has_value();
}

MembershipResult member_split(SplitShape shape, const Int& a, const Int& b,
                              const QuadInt& target, const RingContext& ctx) {
    if (a < 1 || b < 1) {
        throw std::domain_error("split shapes require a, b >= 1");
    }
    MembershipResult res;
    if (shape == SplitShape::RatRat) {
        auto da = coin_decompose(a, b, target.rat);
        auto db = coin_decompose(a, b, target.irr);
        res.member = da && db;
        if (res.member) {
            // A = p1*a + p2*b, B = q1*a + q2*b
            res.certificate = Certificate{QuadInt(da->first, db->first),
                                          QuadInt(da->second, db->second)};
        }
        return res;
    }
    // RatRootMult: A = p1*a + q2*(b*m), B = q1*a + p2*b
    auto da = coin_decompose(a, b * ctx.radicand(), target.rat);
    auto db = coin_decompose(a, b, target.irr);
    res.member = da && db;
    if (res.member) {
        res.certificate = Certificate{QuadInt(da->first, db->first),
                                      QuadInt(db->second, da->second)};
    }
    return res;
}

bool certificate_check(const QuadInt& alpha1, const QuadInt& alpha2,
                       const QuadInt& target, const Certificate& cert,
                       const RingContext& ctx) {
    if (!is_natural(cert.lambda1) || !is_natural(cert.lambda2)) {
        return false;
    }
    return add(mul(cert.lambda1, alpha1, ctx), mul(cert.lambda2, alpha2, ctx)) ==
           target;
}

}  // namespace frobq
