#include "frobq/frobenius.hpp"

#include <array>

#include "frobq/text.hpp"

namespace frobq {

namespace {

enum class Shape { Rat, Root, Mixed };

Shape shape_of(const QuadInt& g) {
    if (g.irr == 0) {
        return Shape::Rat;
    }
    if (g.rat == 0) {
        return Shape::Root;
    }
    return Shape::Mixed;
}

int rank_of(Shape s) {
    switch (s) {
        case Shape::Rat: return 0;
        case Shape::Root: return 1;
        case Shape::Mixed: return 2;
    }
    return 2;
}

}  // namespace

std::string to_string(PairTag tag) {
    switch (tag) {
        case PairTag::RatRat: return "RatRat";
        case PairTag::RatRootMult: return "RatRootMult";
        case PairTag::RootRootMult: return "RootRootMult";
        case PairTag::RatMixed: return "RatMixed";
        case PairTag::RootMixed: return "RootMixed";
        case PairTag::MixedMixed: return "MixedMixed";
    }
    return "?";
}

GeneratorPair classify(const QuadInt& alpha1, const QuadInt& alpha2,
                       const RingContext& ctx) {
    for (const QuadInt* g : {&alpha1, &alpha2}) {
        if (is_zero(*g)) {
            throw std::domain_error("generators must be nonzero");
        }
        if (!is_natural(*g)) {
            throw std::domain_error("generator " + format_element(*g) +
                                    " has a negative part");
        }
    }
    QuadInt first = alpha1;
    QuadInt second = alpha2;
    if (rank_of(shape_of(second)) < rank_of(shape_of(first))) {
        std::swap(first, second);
    }
    const Shape s1 = shape_of(first);
    const Shape s2 = shape_of(second);
    PairTag tag;
    if (s1 == Shape::Rat) {
        tag = s2 == Shape::Rat ? PairTag::RatRat
              : s2 == Shape::Root ? PairTag::RatRootMult
                                  : PairTag::RatMixed;
    } else if (s1 == Shape::Root) {
        tag = s2 == Shape::Root ? PairTag::RootRootMult : PairTag::RootMixed;
    } else {
        tag = PairTag::MixedMixed;
    }
    return {std::move(first), std::move(second), ctx, tag};
}

bool lattice_spans_one(const QuadInt& alpha1, const QuadInt& alpha2,
                       const RingContext& ctx) {
    const Int& m = ctx.radicand();
    // Columns of the 2x4 matrix: each generator and its sqrt(m) multiple.
    const std::array<std::array<Int, 2>, 4> col = {{
        {alpha1.rat, alpha1.irr},
        {alpha1.irr * m, alpha1.rat},
        {alpha2.rat, alpha2.irr},
        {alpha2.irr * m, alpha2.rat},
    }};
    // The column lattice is Z^2 iff the gcd of all 2x2 minors is 1 (the
    // second determinantal divisor; it also vanishes exactly when the rank
    // drops below 2).
    Int g = 0;
    for (size_t i = 0; i < col.size(); ++i) {
        for (size_t j = i + 1; j < col.size(); ++j) {
            g = gcd_abs(g, col[i][0] * col[j][1] - col[i][1] * col[j][0]);
        }
    }
    return g == 1;
}

bool spans_one(const GeneratorPair& pair) {
    const Int& m = pair.ctx.radicand();
    switch (pair.tag) {
        case PairTag::RatRat:
            return gcd_abs(pair.alpha1.rat, pair.alpha2.rat) == 1;
        case PairTag::RatRootMult:
            return gcd_abs(pair.alpha1.rat, pair.alpha2.irr * m) == 1;
        case PairTag::RootRootMult:
            return false;
        case PairTag::RatMixed: {
            const Int d = pair.alpha2.rat * pair.alpha2.rat -
                          pair.alpha2.irr * pair.alpha2.irr * m;
            return gcd_abs(pair.alpha1.rat, d) == 1;
        }
        case PairTag::RootMixed: {
            const Int d = pair.alpha2.rat * pair.alpha2.rat -
                          pair.alpha2.irr * pair.alpha2.irr * m;
            return gcd_abs(pair.alpha1.irr * m, d) == 1;
        }
        case PairTag::MixedMixed:
            return lattice_spans_one(pair.alpha1, pair.alpha2, pair.ctx);
    }
    return false;
}

FrobResult frobenius_set(const GeneratorPair& pair) {
    if (!spans_one(pair)) {
        return {FrobKind::NotSpanning, QuadInt()};
    }
    if (pair.tag == PairTag::MixedMixed) {
        // A nonempty Frobenius set requires some generator with a vanishing
        // part; a spanning pair of two mixed generators has none.
        return {FrobKind::EmptyFrob, QuadInt()};
    }
    const QuadInt one(1, 0);
    const QuadInt one_plus_root(1, 1);
    const QuadInt corner = mul(mul(sub(pair.alpha1, one), sub(pair.alpha2, one), pair.ctx),
                               one_plus_root, pair.ctx);
    return {FrobKind::Cone, corner};
}

MixedSystem system_for(const GeneratorPair& pair, const QuadInt& target) {
    switch (pair.tag) {
        case PairTag::RatMixed:
            return MixedSystem(SystemCase::RationalGen, pair.alpha1.rat,
                               pair.alpha2.rat, pair.alpha2.irr, pair.ctx, target);
        case PairTag::RootMixed:
            return MixedSystem(SystemCase::RootGen, pair.alpha1.irr,
                               pair.alpha2.rat, pair.alpha2.irr, pair.ctx, target);
        default:
            throw std::domain_error(
                "no mixed linear system for a " + to_string(pair.tag) + " pair");
    }
}

MembershipResult formula_member(const GeneratorPair& pair, const QuadInt& target) {
    switch (pair.tag) {
        case PairTag::RatRat:
            return member_split(SplitShape::RatRat, pair.alpha1.rat,
                                pair.alpha2.rat, target, pair.ctx);
        case PairTag::RatRootMult:
            return member_split(SplitShape::RatRootMult, pair.alpha1.rat,
                                pair.alpha2.irr, target, pair.ctx);
        case PairTag::RatMixed:
        case PairTag::RootMixed:
            return member_mixed(system_for(pair, target));
        default:
            throw std::domain_error("no closed-form membership decider for a " +
                                    to_string(pair.tag) + " pair");
    }
}

Certificate representable_above(const MixedSystem& sys) {
    const Int& m = sys.ctx().radicand();
    const Int& a = sys.a();
    const Int& b = sys.b();
    const Int& c = sys.c();
    Int bound_rat, bound_irr;
    if (sys.kase() == SystemCase::RationalGen) {
        bound_rat = (a - 1) * (b - 1 + c * m);
        bound_irr = (a - 1) * (b - 1 + c);
    } else {
        bound_rat = a * b * m + a * c * m - a * m - c * m - b + 1;
        bound_irr = a * c * m + a * b - a - b - c + 1;
    }
    if (sys.target().rat < bound_rat || sys.target().irr < bound_irr) {
        throw std::domain_error(
            "target " + format_element(sys.target()) +
            " is below the guaranteed-representable region (needs rational part >= " +
            bound_rat.get_str() + " and irrational part >= " + bound_irr.get_str() +
            "); the point may still be representable, use member_mixed");
    }
    CanonicalSolution canon = solve_canonical(sys);
    return Certificate{QuadInt(canon.sol.x, canon.sol.y),
                       QuadInt(canon.sol.z, canon.sol.w)};
}

}  // namespace frobq
