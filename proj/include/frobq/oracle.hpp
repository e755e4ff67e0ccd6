#pragma once

#include <vector>

#include "frobq/frobenius.hpp"
#include "frobq/membership.hpp"
#include "frobq/quad.hpp"

namespace frobq {

/// Inclusive bounds on the rational (a_) and irrational (b_) target parts.
struct Box {
    Int a_min;
    Int a_max;
    Int b_min;
    Int b_max;
};

struct PointVerdict {
    QuadInt target;
    bool formula_member = false;
    bool oracle_member = false;
};

/// Per-lattice-point agreement between the closed-form decider and the
/// brute-force oracle over a finite box, plus the cone check: every point
/// at or beyond the corner (componentwise) must be oracle-accepted.
struct RegionReport {
    QuadInt corner;
    Box box;
    /// Every point visited, sorted by (rational, irrational) part.
    std::vector<PointVerdict> points;
    long total = 0;
    long agreements = 0;
    std::vector<PointVerdict> mismatches;
    std::vector<QuadInt> cone_violations;

    bool pass() const { return mismatches.empty() && cone_violations.empty(); }
};

struct WitnessEntry {
    QuadInt target;
    /// A witness with a negative coordinate is vacuous and skipped.
    bool skipped = false;
    /// Oracle verdict; the expected verdict is always non-member.
    bool oracle_member = false;

    bool failed() const { return !skipped && oracle_member; }
};

/// Outcomes of probing the frontier witness families: parameterized targets
/// just below the corner that must all be non-representable.
struct WitnessReport {
    PairTag tag;
    std::vector<WitnessEntry> entries;

    bool pass() const;
    long skipped() const;
    long failures() const;
};

/// Ground-truth membership by exhaustive enumeration of coefficient
/// 4-tuples (p1, q1, p2, q2) >= 0 with
/// (p1 + q1*sqrt(m))*alpha1 + (p2 + q2*sqrt(m))*alpha2 = target.
/// Every variable is bounded by dividing the (remaining) target component
/// by any strictly positive coefficient it carries, so the search is finite
/// and exact. Returns the first certificate in lexicographic
/// (p1, q1, p2, q2) order, or non-member after exhaustion. Targets with a
/// negative part are immediately non-members (all contributions are
/// nonnegative). Generators must be in N[sqrt(m)] \ {0}.
MembershipResult oracle_member(const QuadInt& alpha1, const QuadInt& alpha2,
                               const QuadInt& target, const RingContext& ctx);

/// Compares formula_member against oracle_member at every lattice point of
/// [-ceil(pad/2), corner_rat + pad] x [-ceil(pad/2), corner_irr + pad]
/// (the negative margin exercises the deciders below zero) and checks the
/// cone property on the box. Requires frobenius_set(pair) to be a Cone and
/// pad >= 1; throws std::domain_error otherwise.
RegionReport verify_region(const GeneratorPair& pair, const Int& pad);

/// Oracle-checks `count` members of each frontier witness family of the
/// pair. For the mixed shapes these are the two families whose canonical
/// solutions pin x = -1 (resp. y = -1); for the split shapes, targets whose
/// rational or irrational part is the largest coin-problem gap. Requires a
/// Cone pair and count >= 1.
WitnessReport falsify_frontier(const GeneratorPair& pair, long count);

}  // namespace frobq
