#include "fjf/operators.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>

#include "fjf/generators.hpp"

namespace fjf {

namespace {
long gcd3(long n, long r, long ell) {
    long g = std::gcd(std::labs(n), std::labs(r));
    g = std::gcd(g, ell);
    return g == 0 ? ell : g;
}

Int powLong(long base, long exp) {
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return p;
}

long isqrtFloor(long x) {
    if (x < 0) return -1;
    long r = static_cast<long>(std::sqrt(static_cast<double>(x))) + 2;
    while (r * r > x) --r;
    return r;
}
}  // namespace

JacobiFormQExp applyV(const JacobiFormQExp& phi, long ell, long outPrec) {
    if (ell < 1) throw std::invalid_argument("ell must be positive");
    long maxPrec = (phi.prec() - 1) / ell + 1;
    if (outPrec == 0) outPrec = maxPrec;
    if (outPrec > maxPrec)
        throw PrecisionError("input precision supports V_" + std::to_string(ell) +
                             " only up to prec " + std::to_string(maxPrec));
    const long k = phi.weight();
    const long mOut = phi.index() * ell;
    JacobiFormQExp out(k, mOut, outPrec);
    for (long n = 0; n < outPrec; ++n) {
        long rMax = mOut == 0 ? 0 : isqrtFloor(4 * mOut * n + mOut * mOut);
        for (long r = -rMax; r <= rMax; ++r) {
            Rat acc(0);
            long g = gcd3(n, r, ell);
            for (long a = 1; a <= g; ++a) {
                if (g % a != 0) continue;
                acc += Rat(powLong(a, k - 1)) * phi.coefficient(n * ell / (a * a), r / a);
            }
            if (acc != 0) out.setCoefficient(n, r, acc);
        }
    }
    return out;
}

JacobiFormQExp applyU(const JacobiFormQExp& phi, long ell) {
    if (ell < 1) throw std::invalid_argument("ell must be positive");
    JacobiFormQExp out(phi.weight(), phi.index() * ell * ell, phi.prec());
    for (const auto& [nr, c] : phi.coeffs()) out.setCoefficient(nr.first, nr.second * ell, c);
    return out;
}

TruncatedFormalSeries gritsenkoFJ(const JacobiFormQExp& phi, long d, long outPrec) {
    if (d < 0) throw std::invalid_argument("negative depth");
    const long N = phi.index();
    if (N < 1) throw std::invalid_argument("lift input needs positive index");
    const long k = phi.weight();
    long maxPrec = d >= 1 ? (phi.prec() - 1) / d + 1 : phi.prec();
    if (outPrec == 0) outPrec = maxPrec;
    if (outPrec > maxPrec || outPrec <= d)
        throw PrecisionError("input precision too small for the requested lift depth");

    Rat c00 = phi.coefficient(0, 0);
    JacobiFormQExp part0(k, 0, outPrec);
    if (c00 != 0) {
        if (k < 4 || k % 2 != 0)
            throw std::invalid_argument(
                "nonzero singular term requires even weight k >= 4");
        BernoulliTable bern(k);
        Rat factor = c00 * bern.zetaOneMinus(k) / 2;
        QSeries ek = eisenstein(k, Rat(outPrec));
        for (const auto& [e, c] : ek.scaledCoeffs()) {
            if (e % ek.expDenom() != 0) continue;
            part0.setCoefficient(e / ek.expDenom(), 0, factor * c);
        }
    }

    std::vector<JacobiFormQExp> parts{std::move(part0)};
    for (long m = 1; m <= d; ++m) parts.push_back(applyV(phi, m, outPrec));
    return TruncatedFormalSeries(k, N, std::move(parts));
}

TruncatedFormalSeries levelRaise(const TruncatedFormalSeries& f, long ell,
                                 RaiseVariant variant) {
    if (ell < 1) throw std::invalid_argument("ell must be positive");
    if (!f.part(0).isZero())
        throw std::invalid_argument("level raising needs a cuspidal series (part 0 = 0)");
    const long k = f.weight();
    const long N = f.level();

    switch (variant) {
        case RaiseVariant::Eta: {
            std::vector<JacobiFormQExp> parts;
            for (long j = 0; j <= f.depth(); ++j) parts.push_back(applyU(f.part(j), ell));
            return TruncatedFormalSeries(k, N * ell * ell, std::move(parts));
        }
        case RaiseVariant::Theta: {
            long prec = (f.prec() - 1) / ell + 1;
            if (prec <= f.depth())
                throw PrecisionError("insufficient precision for the Theta raise");
            std::vector<JacobiFormQExp> parts;
            for (long j = 0; j <= f.depth(); ++j)
                parts.push_back(applyV(f.part(j), ell, prec));
            return TruncatedFormalSeries(k, N * ell, std::move(parts));
        }
        case RaiseVariant::ThetaPrime: {
            long depth = f.depth() / ell;
            if (depth < 1)
                throw std::invalid_argument("depth too small to populate any output part");
            std::vector<JacobiFormQExp> parts;
            for (long j = 0; j <= depth; ++j) {
                JacobiFormQExp acc(k, N * ell * j, f.prec());
                long g = std::gcd(ell, j);
                if (j > 0) {
                    for (long delta = 1; delta <= g; ++delta) {
                        if (g % delta != 0) continue;
                        long srcIndex = ell * j / (delta * delta);
                        acc = acc +
                              applyU(f.part(srcIndex), delta) * Rat(powLong(delta, k - 1));
                    }
                }
                parts.push_back(std::move(acc));
            }
            return TruncatedFormalSeries(k, N * ell, std::move(parts));
        }
    }
    throw std::invalid_argument("unknown raise variant");
}

CompatResult thetaCompatibilityCheck(const TruncatedFormalSeries& f, long ell, int eps) {
    if (!frickeInvolutionResiduals(f, eps).empty()) return CompatResult::PreconditionViolated;

    TruncatedFormalSeries g = levelRaise(f, ell, RaiseVariant::Theta);
    TruncatedFormalSeries h = levelRaise(f, ell, RaiseVariant::ThetaPrime);
    const long NL = g.level();
    Rat sign(eps);

    // (g | mu_{N ell}) part m at (n, r) equals c(m, -r; g_n); compare with
    // eps * h over the window both sides can see.
    long mMax = std::min(h.depth(), g.prec() - 1);
    long nMax = std::min(g.depth(), h.prec() - 1);
    for (long m = 0; m <= mMax; ++m) {
        for (long n = 0; n <= nMax; ++n) {
            long rMax = isqrtFloor(4 * NL * n * m);
            for (long r = -rMax; r <= rMax; ++r) {
                Rat lhs = g.part(n).coefficient(m, -r);
                Rat rhs = sign * h.part(m).coefficient(n, r);
                if (lhs != rhs) return CompatResult::Fail;
            }
        }
    }
    return CompatResult::Pass;
}

}  // namespace fjf
