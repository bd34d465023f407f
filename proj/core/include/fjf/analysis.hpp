#pragma once

#include <complex>
#include <optional>

#include "fjf/formal.hpp"

namespace fjf {

using Cplx = std::complex<double>;

/// Point (tau, z) in H x C, optionally extended to degree 2 by omega with
/// Im(tau) Im(omega) > (Im z)^2.
struct EvaluationPoint {
    Cplx tau;
    Cplx z = 0.0;
    std::optional<Cplx> omega;

    EvaluationPoint(Cplx tau, Cplx z = 0.0, std::optional<Cplx> omega = std::nullopt);
};

/// Rational slope data (x, y) for the specialization z = x*tau + y; D is
/// the denominator of x.  Requires N | D and y*D integral.
struct SpecializationDatum {
    Rat x, y;
    long D;
    long level;

    SpecializationDatum(const Rat& x, const Rat& y, long level);
};

struct NumericValue {
    Cplx value;
    double tailBound;  // may be +inf when the tail estimate does not converge
};

/// Partial Fourier sum over the stored window plus a geometric tail
/// estimate.  Rejects points with Im(tau) below imFloor.
NumericValue evalJacobiNumeric(const JacobiFormQExp& phi, const EvaluationPoint& p,
                               double imFloor = 0.05);

struct GridSpec {
    int tauRePoints = 24;
    int tauImPoints = 24;  // log-spaced over [imMin, imMax]
    int zPoints = 8;       // z = alpha*tau + beta, alpha, beta on a zPoints^2 grid
    double imMin = 0.8660254037844386;  // sqrt(3)/2
    double imMax = 4.0;
    double reOffset = 0.0;  // shifts the Re(tau) window (periodicity checks)
};

/// max over the grid of (Im tau)^{k/2} exp(-2 pi m (Im z)^2 / Im tau) |phi|;
/// a lower estimate of the true supremum.  phi must be cuspidal.
double heckeBoundEstimate(const JacobiFormQExp& phi, const GridSpec& grid = {});

/// true iff |c(n,r)| <= slack * HB * (e pi |4mn - r^2| / (mk))^{k/2} for
/// every stored coefficient.
bool coefficientBoundCheck(const JacobiFormQExp& phi, double heckeBound, double slack);

/// f_m(tau) = e(Nm x^2 tau) phi_m(tau, x tau + y), a q-series in
/// q^{1/D^2}; keys are D^2 * v.
struct SpecializedSeries {
    long weight;
    long denomSq;
    std::map<long, Cplx> coeffs;
    std::map<long, long> lambdaSizes;  // |Lambda_{Nm,x,v}| per key
};

/// Coefficients a(v; f_m) for 0 < v <= vMax via enumeration of
/// Lambda_{Nm,x,v} = {(n,l): Nm x^2 + x l + n = v, 4Nmn > l^2}.
/// Throws PrecisionError naming the first (n, l) outside the stored window.
SpecializedSeries specialize(const TruncatedFormalSeries& f, const SpecializationDatum& s,
                             long m, long vMax);

/// sup over the tau grid of (Im tau)^{k/2} |f(tau)| for a specialized
/// elliptic cusp form.
double heckeBoundElliptic(const SpecializedSeries& f, const GridSpec& grid = {});

struct ProbeReport {
    std::vector<Cplx> partialSums;  // S_0 .. S_M
    std::vector<double> increments;  // |S_M - S_{M-1}|, M = 1..
    double maxAbs = 0.0;
};

/// S_M = sum_{m <= M} phi_m(tau, z) e(N m omega) at a degree-2 point.
ProbeReport partialSumProbe(const TruncatedFormalSeries& f, const EvaluationPoint& p, long M);

/// psi_j(u) = prod_{p | u} (1 - p^{-j})
Rat psiJ(long j, long u);

/// psi(2) = 3, psi(t) = (1/2) t^2 psi_2(t) for t >= 3
Rat psi(long t);

struct AokiReport {
    Rat lhs, rhs;
    bool pass = false;
    std::vector<long> tSatisfying;
};

/// Necessary-condition check min(m, m - 6 mu + k/2) >= sum_{t} psi(t) over
/// t in [2, tMax] satisfying
///   sum_{c=0}^{t-1} psi_1(gcd(t,c)) max(mu - m c(t-c)/t^2, 0) > (kt/12) psi_2(t).
/// Even weight only; phi must be nonzero.
AokiReport aokiInequalityCheck(const JacobiFormQExp& phi, long tMax);

/// floor(N k / 6): orders above this vanish, and the truncated dimension
/// is monotone from this depth on.
long truncationThreshold(long k, long N);

}  // namespace fjf
