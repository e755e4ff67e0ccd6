#include "frobq/quad.hpp"

namespace frobq {

bool is_nonsquare(const Int& m) {
    if (m < 2) {
        return false;
    }
    Int root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), m.get_mpz_t());
    return rem != 0;
}

RingContext::RingContext(Int m) : m_(std::move(m)) {
    if (!is_nonsquare(m_)) {
        throw std::domain_error("radicand must be >= 2 and not a perfect square, got " +
                                m_.get_str());
    }
}

QuadInt mul(const QuadInt& x, const QuadInt& y, const RingContext& ctx) {
    return {x.rat * y.rat + x.irr * y.irr * ctx.radicand(),
            x.rat * y.irr + x.irr * y.rat};
}

Int norm(const QuadInt& x, const RingContext& ctx) {
    return x.rat * x.rat - x.irr * x.irr * ctx.radicand();
}

EgcdResult egcd(const Int& p, const Int& q) {
    if (p == 0 && q == 0) {
        throw std::domain_error("egcd(0, 0) is undefined");
    }
    EgcdResult r;
    mpz_gcdext(r.g.get_mpz_t(), r.u.get_mpz_t(), r.v.get_mpz_t(),
               p.get_mpz_t(), q.get_mpz_t());
    return r;
}

Int gcd_abs(const Int& p, const Int& q) {
    Int g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    return g;
}

std::pair<Int, Int> floor_divmod(const Int& n, const Int& d) {
    if (d <= 0) {
        throw std::domain_error("floor_divmod requires a positive divisor, got " +
                                d.get_str());
    }
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return {q, r};
}

}  // namespace frobq
