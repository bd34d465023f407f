#include <doctest.h>

#include "fjf/operators.hpp"

using namespace fjf;

namespace {

long gcdAll(long a, long b, long c) {
    long g = std::gcd(std::labs(a), std::labs(b));
    g = std::gcd(g, std::labs(c));
    return g;
}

JacobiFormQExp cuspGenerator(long k, long m, long prec) {
    auto basis = jacobiBasis(k, m, SpaceKind::cusp(), std::max(prec, jacobiSufficientPrec(k, m)));
    REQUIRE(basis.size() >= 1);
    return basis.front().truncated(prec);
}

}  // namespace

TEST_CASE("V_1 and U_1 are the identity") {
    auto phi = cuspGenerator(10, 1, 8);
    CHECK(applyV(phi, 1) == phi);
    CHECK(applyU(phi, 1) == phi);
}

TEST_CASE("V_ell against the divisor-sum definition") {
    auto phi = cuspGenerator(10, 1, 25);
    for (long ell : {2L, 3L, 4L}) {
        auto v = applyV(phi, ell);
        CHECK(v.index() == ell);
        CHECK(v.weight() == 10);
        for (const auto& [nr, c] : v.coeffs()) {
            auto [n, r] = nr;
            // independent accumulation, divisors enumerated downward
            long g = n == 0 ? (r == 0 ? ell : std::gcd(std::labs(r), ell)) : gcdAll(n, r, ell);
            Rat expect(0);
            for (long a = g; a >= 1; --a) {
                if (g % a != 0) continue;
                Int p(1);
                for (long i = 0; i < 9; ++i) p *= a;
                expect += Rat(p) * phi.coefficient(n * ell / (a * a), r / a);
            }
            CHECK(c == expect);
        }
    }
}

TEST_CASE("U_ell substitutes z -> ell z") {
    auto phi = cuspGenerator(10, 1, 8);
    auto u = applyU(phi, 3);
    CHECK(u.index() == 9);
    for (const auto& [nr, c] : phi.coeffs()) CHECK(u.coefficient(nr.first, 3 * nr.second) == c);
    for (const auto& [nr, c] : u.coeffs()) CHECK(nr.second % 3 == 0);
}

TEST_CASE("series of an Eisenstein-type form has the zeta-value constant term") {
    // J_{4,1} is spanned by the Eisenstein series E_{4,1} with c(0,0) = 1
    auto basis = jacobiBasis(4, 1, SpaceKind::holomorphic(), 20);
    REQUIRE(basis.size() == 1);
    const auto& e41 = basis.front();
    CHECK(e41.coefficient(0, 0) == 1);
    auto lift = gritsenkoFJ(e41, 3, 5);
    // phi_0 = -B_4/8 * E_4 = 1/240 + q + 9 q^2 + 28 q^3 + ...
    CHECK(lift.part(0).coefficient(0, 0) == ratFrac(1, 240));
    CHECK(lift.part(0).coefficient(1, 0) == 1);
    CHECK(lift.part(0).coefficient(2, 0) == 9);
    CHECK(lift.part(0).coefficient(3, 0) == 28);
    CHECK(lift.part(1) == e41.truncated(5));
}

TEST_CASE("series of a cusp form has zero leading part") {
    auto phi = cuspGenerator(10, 1, 21);
    auto lift = gritsenkoFJ(phi, 4, 6);
    CHECK(lift.part(0).isZero());
    CHECK(lift.depth() == 4);
    CHECK(frickeInvolutionResiduals(lift, 1).empty());
}

TEST_CASE("lift rejects odd weight with a singular term") {
    JacobiFormQExp fake(11, 1, 6);
    fake.setCoefficient(0, 0, Rat(1));
    CHECK_THROWS_AS(gritsenkoFJ(fake, 2, 3), std::invalid_argument);
}

TEST_CASE("level raising variants") {
    auto phi = cuspGenerator(10, 1, 41);
    auto lift = gritsenkoFJ(phi, 4, 10);
    REQUIRE(lift.part(0).isZero());

    auto byEta = levelRaise(lift, 2, RaiseVariant::Eta);
    CHECK(byEta.level() == 4);
    for (long j = 0; j <= byEta.depth(); ++j) CHECK(byEta.part(j) == applyU(lift.part(j), 2));

    auto byTheta = levelRaise(lift, 2, RaiseVariant::Theta);
    CHECK(byTheta.level() == 2);
    CHECK(byTheta.part(1) == applyV(lift.part(1), 2, byTheta.prec()));

    auto byThetaPrime = levelRaise(lift, 2, RaiseVariant::ThetaPrime);
    CHECK(byThetaPrime.level() == 2);
    CHECK(byThetaPrime.depth() == 2);
    // part 1 only receives delta = 1: phi_2 | U_1
    CHECK(byThetaPrime.part(1) == lift.part(2).truncated(byThetaPrime.prec()));

    auto withConstant = lift.withCoefficient(0, 0, 0, Rat(1));
    CHECK_THROWS_AS(levelRaise(withConstant, 2, RaiseVariant::Eta), std::invalid_argument);
}

TEST_CASE("compatibility of the two theta raisings") {
    auto phi = cuspGenerator(10, 1, 49);
    auto lift = gritsenkoFJ(phi, 4, 13);
    CHECK(thetaCompatibilityCheck(lift, 2, 1) == CompatResult::Pass);
    CHECK(thetaCompatibilityCheck(lift, 3, 1) == CompatResult::Pass);

    // a diagonal mutation keeps the involution condition (eps = +1 there);
    // on the shared window the operator identity follows term-by-term from
    // that condition, so the check still passes
    Rat v = lift.part(1).coefficient(1, 0) + 1;
    auto bad = lift.withCoefficient(1, 1, 0, v);
    REQUIRE(frickeInvolutionResiduals(bad, 1).empty());
    CHECK(thetaCompatibilityCheck(bad, 2, 1) == CompatResult::Pass);

    // corrupting an off-diagonal coefficient violates the precondition
    auto worse = lift.withCoefficient(2, 1, 1, lift.part(2).coefficient(1, 1) + 1);
    CHECK(thetaCompatibilityCheck(worse, 2, 1) == CompatResult::PreconditionViolated);
}

TEST_CASE("insufficient precision is reported") {
    auto phi = cuspGenerator(10, 1, 9);
    CHECK_THROWS_AS(gritsenkoFJ(phi, 4, 5), PrecisionError);
    CHECK_THROWS_AS(applyV(phi, 3, 5), PrecisionError);
}
