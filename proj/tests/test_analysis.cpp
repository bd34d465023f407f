#include <doctest.h>

#include "fjf/analysis.hpp"
#include "fjf/operators.hpp"

using namespace fjf;

namespace {

JacobiFormQExp cusp101(long prec) {
    auto basis = jacobiBasis(10, 1, SpaceKind::cusp(), std::max(prec, jacobiSufficientPrec(10, 1)));
    REQUIRE(basis.size() == 1);
    return basis.front().truncated(prec);
}

}  // namespace

TEST_CASE("psi functions") {
    CHECK(psiJ(1, 1) == 1);
    CHECK(psiJ(1, 2) == ratFrac(1, 2));
    CHECK(psiJ(2, 6) == ratFrac(3, 4) * ratFrac(8, 9));  // (1-1/4)(1-1/9)
    CHECK(psi(2) == 3);
    CHECK(psi(3) == 4);
    CHECK(psi(4) == 6);
    CHECK(psi(5) == 12);
    for (long t = 2; t <= 40; ++t) CHECK(psi(t) >= 3);
    CHECK_THROWS_AS(psi(1), std::invalid_argument);
    CHECK_THROWS_AS(psiJ(1, 0), std::invalid_argument);
}

TEST_CASE("vanishing-order inequality") {
    auto phi = cusp101(6);
    auto rep = aokiInequalityCheck(phi, 50);
    CHECK(rep.pass);
    CHECK(rep.lhs == 0);  // min(1, 1 - 6 + 5)
    CHECK(rep.rhs == 0);
    CHECK(rep.tSatisfying.empty());

    // order-zero forms trivially pass
    auto e41 = jacobiBasis(4, 1, SpaceKind::holomorphic(), 6).front();
    CHECK(aokiInequalityCheck(e41, 50).pass);

    // a synthetic table with an impossible vanishing order fails
    JacobiFormQExp fake(4, 1, 20);
    fake.setCoefficient(10, 0, Rat(1));
    CHECK_FALSE(aokiInequalityCheck(fake, 50).pass);

    CHECK_THROWS_AS(aokiInequalityCheck(JacobiFormQExp(11, 2, 5), 50), std::invalid_argument);
}

TEST_CASE("truncation threshold") {
    CHECK(truncationThreshold(4, 1) == 0);
    CHECK(truncationThreshold(10, 2) == 3);
    CHECK(truncationThreshold(12, 3) == 6);
}

TEST_CASE("numeric evaluation") {
    JacobiFormQExp zero(10, 1, 6);
    auto zv = evalJacobiNumeric(zero, EvaluationPoint(Cplx(0, 1)));
    CHECK(zv.value == Cplx(0, 0));
    CHECK(zv.tailBound == 0.0);

    auto phi = cusp101(8);
    EvaluationPoint p(Cplx(0.1, 1.0), Cplx(0.2, 0.1));
    EvaluationPoint pm(Cplx(0.1, 1.0), Cplx(-0.2, -0.1));
    auto v1 = evalJacobiNumeric(phi, p);
    auto v2 = evalJacobiNumeric(phi, pm);
    // even weight: phi(tau, -z) = phi(tau, z)
    CHECK(std::abs(v1.value - v2.value) < 1e-12);

    // doubling the stored window moves the value by less than the tail bound
    auto v3 = evalJacobiNumeric(cusp101(16), p);
    CHECK(std::abs(v3.value - v1.value) <= v1.tailBound);
    CHECK(v3.tailBound < v1.tailBound);

    CHECK_THROWS_AS(evalJacobiNumeric(phi, EvaluationPoint(Cplx(0, 0.01))),
                    std::invalid_argument);
}

TEST_CASE("sup-norm grid estimate") {
    CHECK(heckeBoundEstimate(JacobiFormQExp(10, 1, 6)) == 0.0);
    auto phi = cusp101(10);
    double base = heckeBoundEstimate(phi);
    CHECK(base > 0.0);

    GridSpec shifted;
    shifted.reOffset = 1.0;
    CHECK(heckeBoundEstimate(phi, shifted) == doctest::Approx(base).epsilon(1e-3));

    GridSpec fine;
    fine.tauRePoints = 48;
    fine.tauImPoints = 47;  // refines the 24-point log spacing
    fine.zPoints = 16;
    CHECK(heckeBoundEstimate(phi, fine) >= base);

    // non-cuspidal input is rejected
    auto e41 = jacobiBasis(4, 1, SpaceKind::holomorphic(), 6).front();
    CHECK_THROWS_AS(heckeBoundEstimate(e41), std::invalid_argument);
}

TEST_CASE("coefficient bound") {
    CHECK(coefficientBoundCheck(JacobiFormQExp(10, 1, 6), 0.0, 1.05));
    auto phi = cusp101(10);
    double hb = heckeBoundEstimate(phi);
    CHECK(coefficientBoundCheck(phi, hb, 1.05));
    CHECK_FALSE(coefficientBoundCheck(phi, hb / 1000.0, 1.05));
}

TEST_CASE("rational specialization") {
    auto phi = cusp101(61);
    auto lift = gritsenkoFJ(phi, 2, 21);

    SUBCASE("zero slope reduces to z = 0") {
        SpecializationDatum s(Rat(0), Rat(0), 1);
        CHECK(s.D == 1);
        auto fm = specialize(lift, s, 1, 4);
        for (long v = 1; v <= 4; ++v) {
            Rat expect(0);
            for (long l = -1; l * l < 4 * v; ++l)
                if (l * l < 4 * v) expect += lift.part(1).coefficient(v, l);
            // recompute from scratch over the full range
            expect = 0;
            for (long l = -2 * v; l <= 2 * v; ++l)
                if (l * l < 4 * v) expect += lift.part(1).coefficient(v, l);
            double got = fm.coeffs.count(v) ? fm.coeffs.at(v).real() : 0.0;
            CHECK(got == doctest::Approx(expect.get_d()).epsilon(1e-9));
        }
    }

    SUBCASE("lambda sets respect the counting bound") {
        SpecializationDatum s(ratFrac(1, 2), Rat(0), 1);
        CHECK(s.D == 2);
        for (long m = 1; m <= 2; ++m) {
            auto fm = specialize(lift, s, m, 4);
            for (const auto& [w, size] : fm.lambdaSizes) {
                double v = static_cast<double>(w) / fm.denomSq;
                CHECK(static_cast<double>(size) <= 4.0 * std::sqrt(m * v) + 1.0);
            }
        }
    }

    SUBCASE("window exhaustion is reported") {
        auto shallow = gritsenkoFJ(cusp101(13), 2, 5);
        SpecializationDatum s(ratFrac(1, 2), Rat(0), 1);
        CHECK_THROWS_AS(specialize(shallow, s, 2, 6), PrecisionError);
    }

    SUBCASE("membership criteria") {
        CHECK_THROWS_AS(SpecializationDatum(ratFrac(1, 3), Rat(0), 2), std::invalid_argument);
        CHECK_THROWS_AS(SpecializationDatum(ratFrac(1, 2), ratFrac(1, 3), 1),
                        std::invalid_argument);
        CHECK_NOTHROW(SpecializationDatum(ratFrac(1, 2), ratFrac(1, 2), 1));
    }
}

TEST_CASE("partial sums of a lift decay geometrically") {
    auto phi = cusp101(41);
    auto lift = gritsenkoFJ(phi, 4, 10);

    auto zrep = partialSumProbe(TruncatedFormalSeries::zero(10, 1, 4, 6),
                                EvaluationPoint(Cplx(0, 2), 0.0, Cplx(0, 2)), 4);
    for (const auto& s : zrep.partialSums) CHECK(std::abs(s) == 0.0);

    // z off the lattice, else every phi_m(tau, 0) is a weight-10 cusp form
    // of level one and vanishes identically
    auto rep = partialSumProbe(lift, EvaluationPoint(Cplx(0, 2), Cplx(0.3, 0.0), Cplx(0, 2)), 4);
    REQUIRE(rep.increments.size() == 4);
    // increments shrink roughly like e^{-4 pi} per step beyond m = 2
    for (size_t i = 2; i < rep.increments.size(); ++i)
        CHECK(rep.increments[i] < rep.increments[i - 1]);
    CHECK(rep.maxAbs < 1.0);

    CHECK_THROWS_AS(partialSumProbe(lift, EvaluationPoint(Cplx(0, 2), 0.0), 4),
                    std::invalid_argument);
}
