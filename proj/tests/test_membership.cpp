#include "doctest.h"

#include <random>

#include "frobq/membership.hpp"
#include "test_util.hpp"

using namespace frobq;
using testutil::rand_in;

namespace {

// Two-variable scan, the dumbest possible decider for i*p + j*q = n.
bool coin_scan(long p, long q, long n) {
    if (n < 0) {
        return false;
    }
    for (long i = 0; i * p <= n; ++i) {
        for (long j = 0; i * p + j * q <= n; ++j) {
            if (i * p + j * q == n) {
                return true;
            }
        }
    }
    return false;
}

QuadInt generator_one(const MixedSystem& sys) {
    return sys.kase() == SystemCase::RationalGen ? QuadInt(sys.a(), 0)
                                                 : QuadInt(0, sys.a());
}

QuadInt generator_two(const MixedSystem& sys) {
    return QuadInt(sys.b(), sys.c());
}

}  // namespace

TEST_SUITE("membership") {

TEST_CASE("coin_member fixed values") {
    CHECK(coin_member(2, 3, 0));
    CHECK_FALSE(coin_member(2, 3, 1));
    CHECK(coin_member(2, 3, 2));
    CHECK(coin_member(2, 3, 7));
    CHECK_FALSE(coin_member(3, 7, 5));
    CHECK_FALSE(coin_member(3, 7, 11));  // largest gap of <3, 7>
    CHECK(coin_member(3, 7, 12));
    CHECK_FALSE(coin_member(2, 3, -1));
    CHECK(coin_member(1, 5, 4));
    CHECK(coin_member(4, 6, 10));        // works without coprimality
    CHECK_FALSE(coin_member(4, 6, 11));  // odd targets never hit
    CHECK_THROWS_AS(coin_member(0, 3, 1), std::domain_error);
    CHECK_THROWS_AS(coin_member(3, -1, 1), std::domain_error);
}

TEST_CASE("coin_member and coin_decompose agree with a plain scan") {
    std::mt19937_64 rng(2301);
    for (int i = 0; i < 600; ++i) {
        long p = 1 + static_cast<long>(rng() % 9);
        long q = 1 + static_cast<long>(rng() % 9);
        long n = static_cast<long>(rng() % 120) - 10;
        bool expect = coin_scan(p, q, n);
        CHECK(coin_member(p, q, n) == expect);
        auto dec = coin_decompose(p, q, n);
        CHECK(dec.has_value() == expect);
        if (dec) {
            CHECK(dec->first >= 0);
            CHECK(dec->second >= 0);
            CHECK(dec->first * p + dec->second * q == n);
        }
    }
}

TEST_CASE("coin gaps close at the classic frontier") {
    // For coprime coins, p*q - p - q is the last non-member.
    const long pairs[][2] = {{2, 3}, {3, 4}, {2, 5}, {3, 7}, {4, 9}};
    for (auto [p, q] : pairs) {
        CHECK_FALSE(coin_member(p, q, p * q - p - q));
        for (long n = (p - 1) * (q - 1); n < (p - 1) * (q - 1) + 2 * p * q; ++n) {
            CHECK(coin_member(p, q, n));
        }
    }
}

TEST_CASE("member_mixed fixed verdicts at the example corner") {
    RingContext ctx2((Int(2)));
    // Generators 3 and 1 + sqrt(2).
    MixedSystem base(SystemCase::RationalGen, 3, 1, 1, ctx2, QuadInt(0, 0));

    MembershipResult at_corner = member_mixed(base.with_target(QuadInt(4, 2)));
    CHECK(at_corner.member);
    REQUIRE(at_corner.certificate.has_value());
    CHECK(at_corner.certificate->lambda1 == QuadInt(0, 0));
    CHECK(at_corner.certificate->lambda2 == QuadInt(0, 2));
    REQUIRE(at_corner.canonical.has_value());
    CHECK(at_corner.canonical->sol == Solution4{0, 0, 0, 2});

    MembershipResult below = member_mixed(base.with_target(QuadInt(3, 4)));
    CHECK_FALSE(below.member);
    CHECK_FALSE(below.certificate.has_value());
    REQUIRE(below.canonical.has_value());
    CHECK(below.canonical->sol == Solution4{-1, 0, 2, 2});

    CHECK(member_mixed(base.with_target(QuadInt(0, 0))).member);
    CHECK(member_mixed(base.with_target(QuadInt(3, 0))).member);
    CHECK_FALSE(member_mixed(base.with_target(QuadInt(1, 0))).member);
    CHECK_FALSE(member_mixed(base.with_target(QuadInt(-1, 5))).member);

    // Generators sqrt(2) and 1 + sqrt(2).
    MixedSystem root(SystemCase::RootGen, 1, 1, 1, ctx2, QuadInt(0, 0));
    CHECK_FALSE(member_mixed(root.with_target(QuadInt(1, 0))).member);
    CHECK(member_mixed(root.with_target(QuadInt(2, 1))).member);
    CHECK(member_mixed(root.with_target(QuadInt(0, 1))).member);
}

TEST_CASE("member_mixed verdict matches its own canonical sign pattern") {
    std::mt19937_64 rng(2302);
    for (long m : {2L, 3L, 5L}) {
        RingContext ctx((Int(m)));
        for (long a = 1; a <= 4; ++a) {
            for (long b = 1; b <= 4; ++b) {
                for (long c = 1; c <= 4; ++c) {
                    const Int d = Int(b) * b - Int(c) * c * m;
                    for (int kase = 0; kase < 2; ++kase) {
                        const bool rational = kase == 0;
                        if (gcd_abs(rational ? Int(a) : Int(a) * m, d) != 1) {
                            continue;
                        }
                        MixedSystem base(rational ? SystemCase::RationalGen : SystemCase::RootGen,
                                         a, b, c, ctx, QuadInt(0, 0));
                        for (int i = 0; i < 8; ++i) {
                            QuadInt target(rand_in(rng, -20, 50), rand_in(rng, -20, 50));
                            MixedSystem sys = base.with_target(target);
                            MembershipResult res = member_mixed(sys);
                            REQUIRE(res.canonical.has_value());
                            const Solution4& s = res.canonical->sol;
                            CHECK(sys.satisfies(s));
                            CHECK(res.member == (s.x >= 0 && s.y >= 0));
                            CHECK(res.certificate.has_value() == res.member);
                            if (res.certificate) {
                                CHECK(certificate_check(generator_one(sys), generator_two(sys),
                                                        target, *res.certificate, ctx));
                            }
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("member_split fixed verdicts") {
    RingContext ctx2((Int(2)));

    MembershipResult rr = member_split(SplitShape::RatRat, 2, 3, QuadInt(6, 5), ctx2);
    CHECK(rr.member);
    REQUIRE(rr.certificate.has_value());
    CHECK(certificate_check(QuadInt(2, 0), QuadInt(3, 0), QuadInt(6, 5), *rr.certificate, ctx2));
    CHECK_FALSE(rr.canonical.has_value());

    CHECK_FALSE(member_split(SplitShape::RatRat, 2, 3, QuadInt(1, 0), ctx2).member);
    CHECK_FALSE(member_split(SplitShape::RatRat, 2, 3, QuadInt(4, 1), ctx2).member);
    CHECK(member_split(SplitShape::RatRat, 2, 3, QuadInt(2, 2), ctx2).member);
    CHECK_FALSE(member_split(SplitShape::RatRat, 2, 3, QuadInt(-2, 0), ctx2).member);

    // Generators 3 and sqrt(2): rational parts from <3, 2>, irrational from <3, 1>.
    MembershipResult rm = member_split(SplitShape::RatRootMult, 3, 1, QuadInt(2, 2), ctx2);
    CHECK(rm.member);
    REQUIRE(rm.certificate.has_value());
    CHECK(certificate_check(QuadInt(3, 0), QuadInt(0, 1), QuadInt(2, 2), *rm.certificate, ctx2));

    CHECK_FALSE(member_split(SplitShape::RatRootMult, 3, 1, QuadInt(1, 0), ctx2).member);
    CHECK(member_split(SplitShape::RatRootMult, 3, 1, QuadInt(2, 0), ctx2).member);
    CHECK(member_split(SplitShape::RatRootMult, 3, 1, QuadInt(0, 4), ctx2).member);
}

TEST_CASE("member_split agrees with independent coin scans") {
    std::mt19937_64 rng(2303);
    RingContext ctx3((Int(3)));
    for (int i = 0; i < 400; ++i) {
        long a = 1 + static_cast<long>(rng() % 5);
        long b = 1 + static_cast<long>(rng() % 5);
        long A = static_cast<long>(rng() % 90) - 10;
        long B = static_cast<long>(rng() % 90) - 10;
        QuadInt target(A, B);

        MembershipResult rr = member_split(SplitShape::RatRat, a, b, target, ctx3);
        CHECK(rr.member == (coin_scan(a, b, A) && coin_scan(a, b, B)));
        if (rr.certificate) {
            CHECK(certificate_check(QuadInt(a, 0), QuadInt(b, 0), target, *rr.certificate, ctx3));
        }

        MembershipResult rm = member_split(SplitShape::RatRootMult, a, b, target, ctx3);
        CHECK(rm.member == (coin_scan(a, 3 * b, A) && coin_scan(a, b, B)));
        if (rm.certificate) {
            CHECK(certificate_check(QuadInt(a, 0), QuadInt(0, b), target, *rm.certificate, ctx3));
        }
    }
}

TEST_CASE("certificate_check is strict about signs and sums") {
    RingContext ctx2((Int(2)));
    QuadInt alpha1(3, 0);
    QuadInt alpha2(1, 1);

    CHECK(certificate_check(alpha1, alpha2, QuadInt(4, 2),
                            Certificate{QuadInt(0, 0), QuadInt(0, 2)}, ctx2));
    CHECK(certificate_check(alpha1, alpha2, QuadInt(3, 0),
                            Certificate{QuadInt(1, 0), QuadInt(0, 0)}, ctx2));

    // Right sum, negative coefficient: 3*(-1) + (1+r)(2+2r) = 3+4r.
    CHECK_FALSE(certificate_check(alpha1, alpha2, QuadInt(3, 4),
                                  Certificate{QuadInt(-1, 0), QuadInt(2, 2)}, ctx2));
    // Natural coefficients, wrong sum.
    CHECK_FALSE(certificate_check(alpha1, alpha2, QuadInt(4, 2),
                                  Certificate{QuadInt(1, 0), QuadInt(0, 2)}, ctx2));
}

}  // TEST_SUITE
