// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// any criterion fails.
#include <chrono>
#include <iostream>
#include <random>

#include "fjf/analysis.hpp"
#include "fjf/operators.hpp"

using namespace fjf;

namespace {

long isqrt(long x) {
    long r = static_cast<long>(std::sqrt(static_cast<double>(x))) + 2;
    while (r * r > x) --r;
    return r;
}

std::vector<JacobiFormQExp> cuspBasis(long k, long m, long prec) {
    return jacobiBasis(k, m, SpaceKind::cusp(), std::max(prec, jacobiSufficientPrec(k, m)));
}

// 1. dim J_{11,2}^cusp = 1 at two precisions
bool criterion1() {
    return jacobiBasis(11, 2, SpaceKind::cusp(), 12).size() == 1 &&
           jacobiBasis(11, 2, SpaceKind::cusp(), 17).size() == 1;
}

// 2. J_{k,N nu}(nu) = {0} for the least nu > Nk/6
bool criterion2() {
    for (long k : {4L, 6L, 8L, 10L, 12L}) {
        for (long N : {1L, 2L}) {
            long nu = truncationThreshold(k, N) + 1;
            long m = N * nu;
            long prec = std::max(jacobiSufficientPrec(k, m), nu + 2);
            if (!jacobiBasis(k, m, SpaceKind::order(nu), prec).empty()) return false;
        }
    }
    return true;
}

// 3. monotone stabilization of the truncated dimensions
bool criterion3() {
    struct Case {
        long k, N;
        int eps;
        long stabilized;  // -1: no pinned value
    };
    for (const Case& c : {Case{4, 1, 1, 1}, Case{10, 1, 1, 2}, Case{11, 1, -1, 0},
                          Case{10, 2, 1, -1}, Case{10, 2, -1, -1}}) {
        long from = truncationThreshold(c.k, c.N);
        std::vector<long> dims;
        for (long d = from; d <= from + 3; ++d)
            dims.push_back(involutionSolutionSpace(c.k, c.N, c.eps, d, d + 2).dimension);
        for (size_t i = 1; i < dims.size(); ++i)
            if (dims[i] > dims[i - 1]) return false;
        if (dims[1] != dims[2] || dims[2] != dims[3]) return false;
        if (c.stabilized >= 0 && dims.back() != c.stabilized) return false;
    }
    return true;
}

// 4. lifts of cusp forms satisfy the involution condition exactly
bool criterion4() {
    for (auto [k, N] : {std::pair<long, long>{10, 1}, {11, 2}, {12, 2}}) {
        int eps = k % 2 == 0 ? 1 : -1;
        long d = 4, outPrec = d + 2;
        for (const auto& phi : cuspBasis(k, N, d * (outPrec - 1) + 1)) {
            auto lift = gritsenkoFJ(phi, d, outPrec);
            if (!frickeInvolutionResiduals(lift, eps).empty()) return false;
        }
    }
    return true;
}

// 5. the two level raisings agree through the involution
bool criterion5() {
    auto basis = cuspBasis(10, 1, 4 * 12 + 1);
    if (basis.size() != 1) return false;
    auto lift = gritsenkoFJ(basis.front(), 4, 13);
    return thetaCompatibilityCheck(lift, 2, 1) == CompatResult::Pass &&
           thetaCompatibilityCheck(lift, 3, 1) == CompatResult::Pass;
}

// 6. coefficient bound with grid-estimated sup norm, slack 1.05
bool criterion6() {
    for (auto [k, m] : {std::pair<long, long>{10, 1}, {12, 1}, {11, 2}}) {
        for (const auto& phi : cuspBasis(k, m, jacobiSufficientPrec(k, m))) {
            double hb = heckeBoundEstimate(phi);
            if (!coefficientBoundCheck(phi, hb, 1.05)) return false;
        }
    }
    return true;
}

// 7. specialization: lambda-set counting bound and sup-norm growth
bool criterion7() {
    auto basis = cuspBasis(10, 1, 6 * 13 + 1);
    if (basis.size() != 1) return false;
    auto lift = gritsenkoFJ(basis.front(), 6, 14);
    SpecializationDatum s(ratFrac(1, 2), Rat(0), 1);
    double lo = 0.0, hi = 0.0;
    for (long m = 1; m <= 6; ++m) {
        auto fm = specialize(lift, s, m, 4);
        for (const auto& [w, size] : fm.lambdaSizes) {
            double v = static_cast<double>(w) / fm.denomSq;
            if (static_cast<double>(size) > 4.0 * std::sqrt(m * v) + 1.0) return false;
        }
        double ratio = heckeBoundElliptic(fm) / std::pow(static_cast<double>(m), 11.0 / 2.0);
        if (m == 1) {
            lo = hi = ratio;
        } else {
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
    }
    return lo > 0.0 && hi / lo < 10.0;
}

// 8. vanishing-order inequality on every even-weight basis element
bool criterion8() {
    for (auto [k, m] : {std::pair<long, long>{4, 1}, {10, 1}, {12, 1}, {10, 2}, {12, 2},
                        {10, 3}, {10, 4}}) {
        for (const auto& f : jacobiBasis(k, m, SpaceKind::holomorphic(),
                                         jacobiSufficientPrec(k, m))) {
            if (!aokiInequalityCheck(f, 50).pass) return false;
        }
    }
    return true;
}

// 9. cusp-dimension and codimension inequalities
bool criterion9() {
    for (auto [k, m] : {std::pair<long, long>{4, 1}, {6, 1}, {8, 1}, {10, 1}, {12, 1},
                        {10, 2}, {11, 2}, {12, 2}, {10, 3}, {10, 4}}) {
        long cusp = jacobiDim(k, m, SpaceKind::cusp());
        long hol = jacobiDim(k, m, SpaceKind::holomorphic());
        if (Rat(cusp) > ratFrac((m + 1) * (2 * k + 35), 24)) return false;
        long b = 1;
        for (long t = 1; t * t <= m; ++t)
            if (m % (t * t) == 0) b = t;
        if (hol - cusp > b / 2 + 1) return false;
    }
    return true;
}

// 10. ring and group-action structure on random data
bool criterion10() {
    std::mt19937 rng(20260824);
    auto randomSeries = [&](long weight, long level, long depth, long prec) {
        auto f = TruncatedFormalSeries::zero(weight, level, depth, prec);
        for (long m = 0; m <= depth; ++m) {
            long idx = level * m;
            for (long n = 0; n < prec; ++n) {
                long rMax = idx == 0 ? 0 : isqrt(4 * idx * n + idx * idx);
                for (long r = -rMax; r <= rMax; ++r) {
                    long v = static_cast<long>(rng() % 5) - 2;
                    if (v != 0) f = f.withCoefficient(m, n, r, Rat(v));
                }
            }
        }
        return f;
    };
    for (int trial = 0; trial < 100; ++trial) {
        long N = 1 + static_cast<long>(rng() % 2);
        long depth = 1, prec = 3;
        auto f = randomSeries(4, N, depth, prec);
        auto g = randomSeries(6, N, depth, prec);
        auto h = cauchyProduct(f, g);
        for (long m = 0; m <= depth; ++m) {
            long idx = N * m;
            for (long n = 0; n < prec; ++n) {
                long rMax = idx == 0 ? 0 : isqrt(4 * idx * n + idx * idx);
                for (long r = -rMax; r <= rMax; ++r) {
                    Rat expect(0);
                    for (long m1 = 0; m1 <= m; ++m1)
                        for (long n1 = 0; n1 <= n; ++n1) {
                            long i1 = N * m1, i2 = N * (m - m1);
                            long r1Max = i1 == 0 ? 0 : isqrt(4 * i1 * n1 + i1 * i1);
                            for (long r1 = -r1Max; r1 <= r1Max; ++r1) {
                                long r2 = r - r1;
                                long cap = i2 == 0 ? 0 : 4 * i2 * (n - n1) + i2 * i2;
                                if (r2 * r2 > cap) continue;
                                expect += f.part(m1).coefficient(n1, r1) *
                                          g.part(m - m1).coefficient(n - n1, r2);
                            }
                        }
                    if (h.part(m).coefficient(n, r) != expect) return false;
                }
            }
        }
    }
    for (int trial = 0; trial < 100; ++trial) {
        MatrixIndexEntry t{static_cast<long>(rng() % 30), static_cast<long>(rng() % 61) - 30,
                           static_cast<long>(rng() % 30), 1 + static_cast<long>(rng() % 5)};
        if (!(frickeIndexMap(frickeIndexMap(t)) == t)) return false;
    }
    for (int trial = 0; trial < 100; ++trial) {
        long N = 1 + static_cast<long>(rng() % 3);
        auto randomElt = [&]() {
            GroupElement g(1, 0, 0, 1, N);
            GroupElement tN(1, N, 0, 1, N), tNi(1, -N, 0, 1, N);
            GroupElement l(1, 0, 1, 1, N), li(1, 0, -1, 1, N);
            GroupElement flip(-1, 0, 0, 1, N);
            for (int i = 0; i < 5; ++i) {
                switch (rng() % 5) {
                    case 0: g = g * tN; break;
                    case 1: g = g * tNi; break;
                    case 2: g = g * l; break;
                    case 3: g = g * li; break;
                    default: g = g * flip; break;
                }
            }
            return g;
        };
        MatrixIndexEntry t{static_cast<long>(rng() % 6), static_cast<long>(rng() % 11) - 5,
                           static_cast<long>(rng() % 6), N};
        GroupElement s1 = randomElt(), s2 = randomElt();
        if (!(actIndex(t, s1 * s2) == actIndex(actIndex(t, s1), s2))) return false;
    }
    return true;
}

}  // namespace

int main() {
    struct Entry {
        const char* label;
        bool (*run)();
    };
    const Entry entries[] = {
        {"criterion 1 (dim J_{11,2}^cusp = 1 at prec 12 and 17)", criterion1},
        {"criterion 2 (vanishing beyond the order threshold)", criterion2},
        {"criterion 3 (monotone stabilization of truncated dimensions)", criterion3},
        {"criterion 4 (lift series satisfy the involution condition)", criterion4},
        {"criterion 5 (level-raising compatibility, ell = 2, 3)", criterion5},
        {"criterion 6 (coefficient bound with slack 1.05)", criterion6},
        {"criterion 7 (specialization counting and growth bounds)", criterion7},
        {"criterion 8 (vanishing-order inequality, tMax = 50)", criterion8},
        {"criterion 9 (cusp dimension and codimension bounds)", criterion9},
        {"criterion 10 (convolution and group-action structure)", criterion10},
    };
    int failures = 0;
    for (const auto& e : entries) {
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string note;
        try {
            ok = e.run();
        } catch (const std::exception& ex) {
            note = std::string(" [exception: ") + ex.what() + "]";
        }
        auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
        std::cout << e.label << ": " << (ok ? "PASS" : "FAIL") << note << "  ("
                  << secs.count() << " s)\n";
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
