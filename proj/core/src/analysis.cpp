#include "fjf/analysis.hpp"

#include <cmath>
#include <limits>
#include <numeric>

namespace fjf {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

Cplx expITwoPi(const Cplx& w) {
    // e(w) = exp(2 pi i w)
    return std::exp(Cplx(0.0, kTwoPi) * w);
}

double ratD(const Rat& r) { return r.get_d(); }
}  // namespace

EvaluationPoint::EvaluationPoint(Cplx tau, Cplx z, std::optional<Cplx> omega)
    : tau(tau), z(z), omega(omega) {
    if (tau.imag() <= 0) throw std::invalid_argument("tau must lie in the upper half plane");
    if (omega) {
        if (omega->imag() <= 0)
            throw std::invalid_argument("omega must lie in the upper half plane");
        if (tau.imag() * omega->imag() <= z.imag() * z.imag())
            throw std::invalid_argument("Im(tau) Im(omega) > (Im z)^2 required");
    }
}

SpecializationDatum::SpecializationDatum(const Rat& x, const Rat& y, long level)
    : x(x), y(y), level(level) {
    if (level < 1) throw std::invalid_argument("level must be positive");
    Rat xc = x;
    xc.canonicalize();
    if (!xc.get_den().fits_slong_p()) throw std::invalid_argument("denominator too large");
    D = xc.get_den().get_si();
    if (D % level != 0)
        throw std::invalid_argument("x outside the admissible orbit: need N | Denom(x)");
    Rat yd = y * D;
    yd.canonicalize();
    if (yd.get_den() != 1) throw std::invalid_argument("y * Denom(x) must be integral");
}

NumericValue evalJacobiNumeric(const JacobiFormQExp& phi, const EvaluationPoint& p,
                               double imFloor) {
    const double yt = p.tau.imag();
    if (yt < imFloor) throw std::invalid_argument("Im(tau) below the evaluation floor");
    const double yz = std::abs(p.z.imag());
    const long m = phi.index();
    const long k = phi.weight();

    Cplx value = 0.0;
    double maxAbsCoeff = 0.0;
    for (const auto& [nr, c] : phi.coeffs()) {
        double cd = ratD(c);
        value += cd * expITwoPi(Cplx(nr.first) * p.tau + Cplx(nr.second) * p.z);
        maxAbsCoeff = std::max(maxAbsCoeff, std::abs(cd));
    }
    if (phi.isZero()) return {0.0, 0.0};

    // Tail estimate: beyond the window, |c(n,r)| is majorized by
    // C exp(2 pi sqrt((m+1) n)) (subexponential circle-method growth) and
    // |e(n tau + r z)| <= exp(-2 pi (n yt - rmax yz)), rmax^2 = 4mn + m^2.
    // Sum a stretch of explicit per-n bounds, then close with a geometric
    // remainder when the ratio has dropped below 1.
    auto perN = [&](long n) {
        double rmax = std::sqrt(static_cast<double>(4 * m * n + m * m));
        double lg = std::log(maxAbsCoeff) + std::log(2 * rmax + 1) +
                    kTwoPi * (std::sqrt(static_cast<double>((m + 1) * n)) - n * yt +
                              rmax * yz);
        return std::exp(lg);
    };
    double tail = 0.0;
    long n0 = phi.prec();
    long nEnd = n0 + 200;
    for (long n = n0; n < nEnd; ++n) tail += perN(n);
    double last = perN(nEnd);
    double prev = perN(nEnd - 1);
    if (last > 0.0 && prev > 0.0) {
        double ratio = last / prev;
        if (ratio < 1.0)
            tail += last / (1.0 - ratio);
        else
            tail = std::numeric_limits<double>::infinity();
    }
    // per-term bounds that underflowed to zero contribute nothing
    return {value, tail};
}

namespace {
void requireCusp(const JacobiFormQExp& phi) {
    const long m = phi.index();
    for (const auto& [nr, c] : phi.coeffs()) {
        bool ok = m == 0 ? nr.first >= 1 : 4 * m * nr.first - nr.second * nr.second > 0;
        if (!ok) throw std::invalid_argument("form is not cuspidal");
    }
}

std::vector<double> tauImSamples(const GridSpec& g) {
    std::vector<double> ims;
    for (int j = 0; j < g.tauImPoints; ++j) {
        double t = g.tauImPoints == 1 ? 0.0 : static_cast<double>(j) / (g.tauImPoints - 1);
        ims.push_back(g.imMin * std::pow(g.imMax / g.imMin, t));
    }
    return ims;
}
}  // namespace

double heckeBoundEstimate(const JacobiFormQExp& phi, const GridSpec& grid) {
    requireCusp(phi);
    if (phi.isZero()) return 0.0;
    const long m = phi.index();
    const long k = phi.weight();
    double best = 0.0;
    for (double yt : tauImSamples(grid)) {
        for (int i = 0; i < grid.tauRePoints; ++i) {
            double xt = -0.5 + grid.reOffset + static_cast<double>(i) / grid.tauRePoints;
            Cplx tau(xt, yt);
            for (int ia = 0; ia < grid.zPoints; ++ia) {
                for (int ib = 0; ib < grid.zPoints; ++ib) {
                    double alpha = static_cast<double>(ia) / grid.zPoints;
                    double beta = static_cast<double>(ib) / grid.zPoints;
                    Cplx z = alpha * tau + beta;
                    Cplx val = 0.0;
                    for (const auto& [nr, c] : phi.coeffs())
                        val += ratD(c) *
                               expITwoPi(Cplx(nr.first) * tau + Cplx(nr.second) * z);
                    double yz = z.imag();
                    double w = std::pow(yt, k / 2.0) *
                               std::exp(-kTwoPi * m * yz * yz / yt) * std::abs(val);
                    best = std::max(best, w);
                }
            }
        }
    }
    return best;
}

bool coefficientBoundCheck(const JacobiFormQExp& phi, double heckeBound, double slack) {
    const long m = phi.index();
    const long k = phi.weight();
    if (m < 1 || k < 1) throw std::invalid_argument("need k >= 1 and m >= 1");
    const double e = std::exp(1.0);
    const double pi = kTwoPi / 2.0;
    for (const auto& [nr, c] : phi.coeffs()) {
        double disc = std::abs(static_cast<double>(4 * m * nr.first - nr.second * nr.second));
        double bound = slack * heckeBound * std::pow(e * pi * disc / (m * k), k / 2.0);
        if (std::abs(ratD(c)) > bound) return false;
    }
    return true;
}

SpecializedSeries specialize(const TruncatedFormalSeries& f, const SpecializationDatum& s,
                             long m, long vMax) {
    if (s.level != f.level()) throw std::invalid_argument("level mismatch");
    if (m < 0 || m > f.depth()) throw std::invalid_argument("part index beyond depth");
    if (vMax < 1) throw std::invalid_argument("vMax must be positive");
    const long Nm = f.level() * m;
    const JacobiFormQExp& phi = f.part(m);
    SpecializedSeries out;
    out.weight = f.weight();
    out.denomSq = s.D * s.D;

    for (long w = 1; w <= vMax * out.denomSq; ++w) {
        Rat v(w, out.denomSq);
        v.canonicalize();
        // (l + 2Nmx)^2 < 4Nmv bounds the loop
        double center = -2.0 * Nm * ratD(s.x);
        double radius = 2.0 * std::sqrt(std::max(0.0, Nm * ratD(v))) + 1.0;
        long lLo = static_cast<long>(std::floor(center - radius));
        long lHi = static_cast<long>(std::ceil(center + radius));
        Cplx acc = 0.0;
        long count = 0;
        for (long l = lLo; l <= lHi; ++l) {
            Rat nRat = v - Rat(Nm) * s.x * s.x - s.x * l;
            nRat.canonicalize();
            if (nRat.get_den() != 1) continue;
            if (!nRat.get_num().fits_slong_p()) continue;
            long n = nRat.get_num().get_si();
            if (4 * Nm * n <= l * l) continue;
            if (n >= phi.prec())
                throw PrecisionError("specialization window exhausted at (n, l) = (" +
                                     std::to_string(n) + ", " + std::to_string(l) + ")");
            ++count;
            Rat angle = s.y * l;  // e(y l), a root of unity of order dividing D
            acc += ratD(phi.coefficient(n, l)) * expITwoPi(Cplx(ratD(angle)));
        }
        if (count > 0) {
            out.coeffs[w] = acc;
            out.lambdaSizes[w] = count;
        }
    }
    return out;
}

double heckeBoundElliptic(const SpecializedSeries& f, const GridSpec& grid) {
    double best = 0.0;
    for (double yt : tauImSamples(grid)) {
        for (int i = 0; i < grid.tauRePoints; ++i) {
            double xt = -0.5 + grid.reOffset + static_cast<double>(i) / grid.tauRePoints;
            Cplx tau(xt, yt);
            Cplx val = 0.0;
            for (const auto& [w, a] : f.coeffs)
                val += a * expITwoPi(Cplx(static_cast<double>(w) / f.denomSq) * tau);
            best = std::max(best, std::pow(yt, f.weight / 2.0) * std::abs(val));
        }
    }
    return best;
}

ProbeReport partialSumProbe(const TruncatedFormalSeries& f, const EvaluationPoint& p,
                            long M) {
    if (!p.omega) throw std::invalid_argument("degree-2 point required");
    if (M < 0 || M > f.depth()) throw std::invalid_argument("M beyond the stored depth");
    ProbeReport rep;
    Cplx sum = 0.0;
    for (long m = 0; m <= M; ++m) {
        Cplx term = evalJacobiNumeric(f.part(m), p).value *
                    expITwoPi(Cplx(static_cast<double>(f.level() * m)) * *p.omega);
        sum += term;
        rep.partialSums.push_back(sum);
        if (m >= 1) rep.increments.push_back(std::abs(term));
        rep.maxAbs = std::max(rep.maxAbs, std::abs(sum));
    }
    return rep;
}

Rat psiJ(long j, long u) {
    if (u < 1) throw std::invalid_argument("psi_j needs u >= 1");
    Rat out(1);
    long rest = u;
    for (long p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        while (rest % p == 0) rest /= p;
        Int pj;
        mpz_ui_pow_ui(pj.get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(j));
        out *= Rat(1) - Rat(1) / Rat(pj);
    }
    if (rest > 1) {
        Int pj;
        mpz_ui_pow_ui(pj.get_mpz_t(), static_cast<unsigned long>(rest),
                      static_cast<unsigned long>(j));
        out *= Rat(1) - Rat(1) / Rat(pj);
    }
    return out;
}

Rat psi(long t) {
    if (t < 2) throw std::invalid_argument("psi needs t >= 2");
    if (t == 2) return Rat(3);
    return ratFrac(t * t, 2) * psiJ(2, t);
}

AokiReport aokiInequalityCheck(const JacobiFormQExp& phi, long tMax) {
    if (phi.weight() % 2 != 0)
        throw std::invalid_argument("inequality check is stated for even weight");
    auto mu = phi.orderOf();
    if (!mu) throw std::invalid_argument("zero form has no vanishing order");
    const long k = phi.weight();
    const long m = phi.index();

    AokiReport rep;
    Rat slope = Rat(m) - Rat(6) * *mu + ratFrac(k, 2);
    rep.lhs = std::min(Rat(m), slope);
    rep.rhs = 0;
    for (long t = 2; t <= tMax; ++t) {
        Rat lhsT(0);
        for (long c = 0; c < t; ++c) {
            Rat excess = Rat(*mu) - ratFrac(m * c * (t - c), t * t);
            if (excess > 0) lhsT += psiJ(1, c == 0 ? t : std::gcd(t, c)) * excess;
        }
        if (lhsT > ratFrac(k * t, 12) * psiJ(2, t)) {
            rep.tSatisfying.push_back(t);
            rep.rhs += psi(t);
        }
    }
    rep.pass = rep.lhs >= rep.rhs;
    return rep;
}

long truncationThreshold(long k, long N) {
    if (k < 1 || N < 1) throw std::invalid_argument("need k, N >= 1");
    return N * k / 6;
}

}  // namespace fjf
