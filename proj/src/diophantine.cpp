#include "frobq/diophantine.hpp"

namespace frobq {

MixedSystem::MixedSystem(SystemCase kase, Int a, Int b, Int c, RingContext ctx,
                         QuadInt target)
    : case_(kase),
      a_(std::move(a)),
      b_(std::move(b)),
      c_(std::move(c)),
      ctx_(std::move(ctx)),
      target_(std::move(target)) {
    if (a_ < 1 || b_ < 1 || c_ < 1) {
        throw std::domain_error("mixed system requires a, b, c >= 1");
    }
    d_ = b_ * b_ - c_ * c_ * ctx_.radicand();
    const Int lhs = case_ == SystemCase::RationalGen ? a_ : Int(a_ * ctx_.radicand());
    const Int g = gcd_abs(lhs, d_);
    if (g != 1) {
        throw std::domain_error(
            "generator pair does not span 1: gcd(" + lhs.get_str() + ", " +
            d_.get_str() + ") = " + g.get_str());
    }
    zmod_ = case_ == SystemCase::RationalGen ? a_ : Int(a_ * ctx_.radicand());
}

bool MixedSystem::satisfies(const Solution4& s) const {
    const Int& m = ctx_.radicand();
    if (case_ == SystemCase::RationalGen) {
        return a_ * s.x + b_ * s.z + c_ * m * s.w == target_.rat &&
               a_ * s.y + c_ * s.z + b_ * s.w == target_.irr;
    }
    return a_ * m * s.y + b_ * s.z + c_ * m * s.w == target_.rat &&
           a_ * s.x + c_ * s.z + b_ * s.w == target_.irr;
}

MixedSystem MixedSystem::with_target(QuadInt target) const {
    return MixedSystem(case_, a_, b_, c_, ctx_, std::move(target));
}

Solution4 particular_solution(const MixedSystem& sys) {
    const Int& m = sys.ctx().radicand();
    const Int& A = sys.target().rat;
    const Int& B = sys.target().irr;

    const Int lhs = sys.kase() == SystemCase::RationalGen ? sys.a() : Int(sys.a() * m);
    const EgcdResult bez = egcd(lhs, sys.d());
    const Int& lambda = bez.u;
    const Int& mu = bez.v;

    // z + w*sqrt(m) = (b - c*sqrt(m)) * mu * (A + B*sqrt(m))
    Solution4 s;
    s.z = mu * (sys.b() * A - sys.c() * m * B);
    s.w = mu * (sys.b() * B - sys.c() * A);
    if (sys.kase() == SystemCase::RationalGen) {
        s.x = lambda * A;
        s.y = lambda * B;
    } else {
        // sqrt(m) * lambda * (A + B*sqrt(m)) = lambda*B*m + lambda*A*sqrt(m)
        s.x = lambda * B * m;
        s.y = lambda * A;
    }
    return s;
}

Solution4 shift_primary(const Solution4& sol, const Int& k, const MixedSystem& sys) {
    const Int& m = sys.ctx().radicand();
    Solution4 s;
    if (sys.kase() == SystemCase::RationalGen) {
        s.x = sol.x - (sys.b() - sys.c() * m) * k;
        s.y = sol.y + (sys.b() - sys.c()) * k;
        s.z = sol.z + sys.a() * k;
        s.w = sol.w - sys.a() * k;
    } else {
        s.x = sol.x + (sys.b() - sys.c() * m) * k;
        s.y = sol.y - (sys.b() - sys.c()) * k;
        s.z = sol.z + sys.a() * m * k;
        s.w = sol.w - sys.a() * k;
    }
    return s;
}

Solution4 shift_secondary(const Solution4& sol, const Int& l, const MixedSystem& sys) {
    const Int& m = sys.ctx().radicand();
    Solution4 s;
    if (sys.kase() == SystemCase::RationalGen) {
        s.x = sol.x + sys.b() * l;
        s.y = sol.y + sys.c() * l;
        s.z = sol.z - sys.a() * l;
    } else {
        s.x = sol.x + sys.c() * m * l;
        s.y = sol.y + sys.b() * l;
        s.z = sol.z - sys.a() * m * l;
    }
    s.w = sol.w;
    return s;
}

CanonicalSolution canonicalize(const Solution4& sol, const MixedSystem& sys) {
    const Int k = floor_divmod(sol.w, sys.wmod()).first;
    Solution4 s = shift_primary(sol, k, sys);
    const Int l = floor_divmod(s.z, sys.zmod()).first;
    s = shift_secondary(s, l, sys);
    return {s, sys.zmod(), sys.wmod()};
}

CanonicalSolution solve_canonical(const MixedSystem& sys) {
    return canonicalize(particular_solution(sys), sys);
}

}  // namespace frobq
