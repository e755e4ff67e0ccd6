#pragma once

#include <string>

#include "frobq/diophantine.hpp"
#include "frobq/membership.hpp"
#include "frobq/quad.hpp"

namespace frobq {

/// Shape of a generator pair after normalization, by which parts vanish:
/// Rat means a pure rational a, Root a pure multiple a*sqrt(m), Mixed an
/// element with both parts nonzero.
enum class PairTag {
    RatRat,
    RatRootMult,
    RootRootMult,
    RatMixed,
    RootMixed,
    MixedMixed,
};

std::string to_string(PairTag tag);

/// A classified pair of generators from N[sqrt(m)] \ {0}, normalized so a
/// pure rational generator comes first, else a pure root multiple; ties
/// keep the input order.
struct GeneratorPair {
    QuadInt alpha1;
    QuadInt alpha2;
    RingContext ctx;
    PairTag tag;
};

/// Validates the generators (nonzero, no negative part) and assigns the tag.
/// Throws std::domain_error on invalid input.
GeneratorPair classify(const QuadInt& alpha1, const QuadInt& alpha2,
                       const RingContext& ctx);

/// Whether the ideal generated by the pair is all of Z[sqrt(m)], decided by
/// the per-shape gcd criterion:
///   RatRat(a, b)                  gcd(a, b) = 1
///   RatRootMult(a, b*sqrt(m))     gcd(a, b*m) = 1
///   RootRootMult                  never
///   RatMixed(a, b+c*sqrt(m))      gcd(a, b^2 - c^2*m) = 1
///   RootMixed(a*sqrt(m), b+c*..)  gcd(a*m, b^2 - c^2*m) = 1
///   MixedMixed                    generic lattice test (below)
bool spans_one(const GeneratorPair& pair);

/// Shape-independent spanning test: the columns alpha1, sqrt(m)*alpha1,
/// alpha2, sqrt(m)*alpha2, written as (rat, irr) vectors, generate the full
/// lattice Z^2 iff the gcd of all 2x2 minors is 1. Agrees with the gcd
/// criteria wherever both apply.
bool lattice_spans_one(const QuadInt& alpha1, const QuadInt& alpha2,
                       const RingContext& ctx);

enum class FrobKind {
    /// The pair does not span 1; Frob is empty for lack of an ideal reason.
    NotSpanning,
    /// The pair spans 1 but both generators are mixed; Frob is empty.
    EmptyFrob,
    /// Frob = corner + N[sqrt(m)].
    Cone,
};

struct FrobResult {
    FrobKind kind;
    /// Meaningful iff kind == Cone; always has nonnegative parts then.
    QuadInt corner;
};

/// The Frobenius set of the pair: the corner, when there is one, is
/// (alpha1 - 1)(alpha2 - 1)(1 + sqrt(m)) in exact ring arithmetic. This is
/// the least element whose full upper quadrant lies in SG(alpha1, alpha2).
FrobResult frobenius_set(const GeneratorPair& pair);

/// Builds the mixed linear system "lambda1*alpha1 + lambda2*alpha2 = target"
/// for a RatMixed or RootMixed pair. Throws std::domain_error for other tags
/// or when the pair does not span 1.
MixedSystem system_for(const GeneratorPair& pair, const QuadInt& target);

/// The closed-form membership decider for the four solvable tags (RatRat,
/// RatRootMult, RatMixed, RootMixed). Throws std::domain_error for
/// RootRootMult and MixedMixed, which have no formula-side decider.
MembershipResult formula_member(const GeneratorPair& pair, const QuadInt& target);

/// Nonnegative certificate for a target at or beyond the representability
/// bounds, straight from the canonical solution:
///   RationalGen: A >= (a-1)(b-1+c*m) and B >= (a-1)(b-1+c)
///   RootGen:     A >= a*b*m+a*c*m-a*m-c*m-b+1 and B >= a*c*m+a*b-a-b-c+1
/// Throws std::domain_error when the bounds are not met (the target may
/// still be representable; use member_mixed to decide).
Certificate representable_above(const MixedSystem& sys);

}  // namespace frobq
