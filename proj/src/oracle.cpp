#include "frobq/oracle.hpp"

#include <algorithm>
#include <optional>

#include "frobq/text.hpp"

namespace frobq {

namespace {

template <typename I>
struct SearchInput {
    I a1r, a1i;  // alpha1 parts
    I a2r, a2i;  // alpha2 parts
    I m;
    I ta, tb;  // target parts, both >= 0
};

template <typename I>
struct FoundTuple {
    I p1, q1, p2, q2;
};

// Largest value of a variable with contribution (ca, cb) against the
// remaining target (ra, rb): min over its positive coefficients of
// floor(r / c). Generators are nonzero, so at least one coefficient of
// every variable is positive and the bound is finite.
template <typename I>
I var_bound(const I& ca, const I& cb, const I& ra, const I& rb) {
    if (ca > 0 && cb > 0) {
        I ba = ra / ca;
        I bb = rb / cb;
        return bb < ba ? bb : ba;
    }
    if (ca > 0) {
        return ra / ca;
    }
    return rb / cb;
}

// Exhaustive first-found search in lexicographic (p1, q1, p2, q2) order.
// The coefficient vectors are p1: (a1r, a1i), q1: (a1i*m, a1r),
// p2: (a2r, a2i), q2: (a2i*m, a2r); all entries nonnegative, so remaining
// targets stay nonnegative inside the bounds and q2 has at most one
// candidate, found by exact division.
template <typename I>
std::optional<FoundTuple<I>> search4(const SearchInput<I>& in) {
    const I q1_coef_rat = in.a1i * in.m;
    const I q2_coef_rat = in.a2i * in.m;
    const I p1_max = var_bound(in.a1r, in.a1i, in.ta, in.tb);
    for (I p1 = 0; p1 <= p1_max; ++p1) {
        const I ra1 = in.ta - p1 * in.a1r;
        const I rb1 = in.tb - p1 * in.a1i;
        const I q1_max = var_bound(q1_coef_rat, in.a1r, ra1, rb1);
        for (I q1 = 0; q1 <= q1_max; ++q1) {
            const I ra2 = ra1 - q1 * q1_coef_rat;
            const I rb2 = rb1 - q1 * in.a1r;
            const I p2_max = var_bound(in.a2r, in.a2i, ra2, rb2);
            for (I p2 = 0; p2 <= p2_max; ++p2) {
                const I ra3 = ra2 - p2 * in.a2r;
                const I rb3 = rb2 - p2 * in.a2i;
                if (in.a2i > 0) {
                    if (ra3 % q2_coef_rat != 0) {
                        continue;
                    }
                    const I q2 = ra3 / q2_coef_rat;
                    if (q2 * in.a2r == rb3) {
                        return FoundTuple<I>{p1, q1, p2, q2};
                    }
                } else {
                    if (ra3 == 0 && rb3 % in.a2r == 0) {
                        return FoundTuple<I>{p1, q1, p2, rb3 / in.a2r};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

// Values this small run the search in native integers; all intermediate
// products stay far below the 64-bit range.
constexpr long kFastLimit = 1L << 20;

bool fits_fast(const Int& v) {
    if (!mpz_fits_slong_p(v.get_mpz_t())) {
        return false;
    }
    const long s = v.get_si();
    return -kFastLimit < s && s < kFastLimit;
}

}  // namespace

MembershipResult oracle_member(const QuadInt& alpha1, const QuadInt& alpha2,
                               const QuadInt& target, const RingContext& ctx) {
    for (const QuadInt* g : {&alpha1, &alpha2}) {
        if (is_zero(*g) || !is_natural(*g)) {
            throw std::domain_error("oracle_member requires generators in N[sqrt(m)] \\ {0}, got " +
                                    format_element(*g));
        }
    }
    MembershipResult res;
    if (target.rat < 0 || target.irr < 0) {
        return res;  // all contributions are nonnegative
    }
    std::optional<FoundTuple<Int>> found;
    const bool fast = fits_fast(alpha1.rat) && fits_fast(alpha1.irr) &&
                      fits_fast(alpha2.rat) && fits_fast(alpha2.irr) &&
                      fits_fast(ctx.radicand()) && fits_fast(target.rat) &&
                      fits_fast(target.irr);
    if (fast) {
        SearchInput<long> in{alpha1.rat.get_si(), alpha1.irr.get_si(),
                             alpha2.rat.get_si(), alpha2.irr.get_si(),
                             ctx.radicand().get_si(), target.rat.get_si(),
                             target.irr.get_si()};
        if (auto f = search4(in)) {
            found = FoundTuple<Int>{Int(f->p1), Int(f->q1), Int(f->p2), Int(f->q2)};
        }
    } else {
        SearchInput<Int> in{alpha1.rat, alpha1.irr, alpha2.rat, alpha2.irr,
                            ctx.radicand(), target.rat, target.irr};
        found = search4(in);
    }
    if (found) {
        res.member = true;
        res.certificate = Certificate{QuadInt(found->p1, found->q1),
                                      QuadInt(found->p2, found->q2)};
    }
    return res;
}

RegionReport verify_region(const GeneratorPair& pair, const Int& pad) {
    if (pad < 1) {
        throw std::domain_error("verify_region requires pad >= 1");
    }
    const FrobResult frob = frobenius_set(pair);
    if (frob.kind != FrobKind::Cone) {
        throw std::domain_error(
            "verify_region requires a pair whose Frobenius set is a cone; "
            "this pair is " +
            std::string(frob.kind == FrobKind::NotSpanning ? "not spanning"
                                                           : "spanning with empty Frobenius set"));
    }
    RegionReport rep;
    rep.corner = frob.corner;
    const Int margin = (pad + 1) / 2;
    rep.box = Box{-margin, frob.corner.rat + pad, -margin, frob.corner.irr + pad};
    for (Int a = rep.box.a_min; a <= rep.box.a_max; ++a) {
        for (Int b = rep.box.b_min; b <= rep.box.b_max; ++b) {
            const QuadInt t(a, b);
            PointVerdict v;
            v.target = t;
            v.formula_member = formula_member(pair, t).member;
            v.oracle_member = oracle_member(pair.alpha1, pair.alpha2, t, pair.ctx).member;
            ++rep.total;
            if (v.formula_member == v.oracle_member) {
                ++rep.agreements;
            } else {
                rep.mismatches.push_back(v);
            }
            if (a >= frob.corner.rat && b >= frob.corner.irr && !v.oracle_member) {
                rep.cone_violations.push_back(t);
            }
            rep.points.push_back(std::move(v));
        }
    }
    return rep;
}

bool WitnessReport::pass() const {
    return std::none_of(entries.begin(), entries.end(),
                        [](const WitnessEntry& e) { return e.failed(); });
}

long WitnessReport::skipped() const {
    return std::count_if(entries.begin(), entries.end(),
                         [](const WitnessEntry& e) { return e.skipped; });
}

long WitnessReport::failures() const {
    return std::count_if(entries.begin(), entries.end(),
                         [](const WitnessEntry& e) { return e.failed(); });
}

WitnessReport falsify_frontier(const GeneratorPair& pair, long count) {
    if (count < 1) {
        throw std::domain_error("falsify_frontier requires count >= 1");
    }
    const FrobResult frob = frobenius_set(pair);
    if (frob.kind != FrobKind::Cone) {
        throw std::domain_error("falsify_frontier requires a pair whose Frobenius set is a cone");
    }
    WitnessReport rep;
    rep.tag = pair.tag;
    auto probe = [&](Int ta, Int tb) {
        WitnessEntry e;
        e.target = QuadInt(std::move(ta), std::move(tb));
        if (e.target.rat < 0 || e.target.irr < 0) {
            e.skipped = true;
        } else {
            e.oracle_member =
                oracle_member(pair.alpha1, pair.alpha2, e.target, pair.ctx).member;
        }
        rep.entries.push_back(std::move(e));
    };

    const Int& m = pair.ctx.radicand();
    switch (pair.tag) {
        case PairTag::RatMixed: {
            const Int& a = pair.alpha1.rat;
            const Int& b = pair.alpha2.rat;
            const Int& c = pair.alpha2.irr;
            // Row family: rational part one below the corner, irrational
            // part marching upward; canonical solutions are (-1, k, a-1, a-1).
            const Int row_rat = (a - 1) * (b - 1 + c * m) - 1;
            for (long k = 0; k < count; ++k) {
                probe(row_rat, (a - 1) * (b + c) + a * k);
            }
            // Column family: canonical solutions (l, -1, a-1, a-1).
            const Int col_irr = (a - 1) * (b - 1 + c) - 1;
            for (long l = 0; l < count; ++l) {
                probe((a - 1) * (b + c * m) + a * l, col_irr);
            }
            break;
        }
        case PairTag::RootMixed: {
            const Int& a = pair.alpha1.irr;
            const Int& b = pair.alpha2.rat;
            const Int& c = pair.alpha2.irr;
            // Canonical solutions (k, -1, a*m-1, a-1).
            const Int row_rat = a * b * m + a * c * m - a * m - c * m - b;
            for (long k = 0; k < count; ++k) {
                probe(row_rat, a * c * m + a * b - b - c + a * k);
            }
            // Canonical solutions (-1, l, a*m-1, a-1).
            const Int col_irr = a * c * m + a * b - a - b - c;
            for (long l = 0; l < count; ++l) {
                probe(a * b * m + a * c * m - c * m - b + a * m * l, col_irr);
            }
            break;
        }
        case PairTag::RatRat: {
            const Int& a = pair.alpha1.rat;
            const Int& b = pair.alpha2.rat;
            // (a-1)(b-1)-1 is the largest integer missing from SG_Z(a, b);
            // either part stuck there blocks membership outright.
            const Int gap = (a - 1) * (b - 1) - 1;
            for (long k = 0; k < count; ++k) {
                probe(gap, frob.corner.irr + k);
            }
            for (long l = 0; l < count; ++l) {
                probe(frob.corner.rat + l, gap);
            }
            break;
        }
        case PairTag::RatRootMult: {
            const Int& a = pair.alpha1.rat;
            const Int& b = pair.alpha2.irr;
            // Rational parts live in SG_Z(a, b*m), irrational in SG_Z(a, b).
            const Int gap_rat = (a - 1) * (b * m - 1) - 1;
            const Int gap_irr = (a - 1) * (b - 1) - 1;
            for (long k = 0; k < count; ++k) {
                probe(gap_rat, frob.corner.irr + k);
            }
            for (long l = 0; l < count; ++l) {
                probe(frob.corner.rat + l, gap_irr);
            }
            break;
        }
        default:
            // Unreachable: the Cone check has already excluded these tags.
            throw std::domain_error("no witness families for a " + to_string(pair.tag) + " pair");
    }
    return rep;
}

}  // namespace frobq
