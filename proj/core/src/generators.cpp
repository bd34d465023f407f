#include "fjf/generators.hpp"

#include <functional>

namespace fjf {

BernoulliTable::BernoulliTable(long maxIndex) {
    if (maxIndex < 0) throw std::invalid_argument("maxIndex must be non-negative");
    values_.resize(static_cast<size_t>(maxIndex) + 1);
    values_[0] = 1;
    for (long m = 1; m <= maxIndex; ++m) {
        // sum_{j=0}^{m} C(m+1,j) B_j = 0  =>  solve for B_m
        Rat acc(0);
        Int binom(1);  // C(m+1, 0)
        for (long j = 0; j < m; ++j) {
            acc += Rat(binom) * values_[static_cast<size_t>(j)];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        values_[static_cast<size_t>(m)] = -acc / Rat(binom);
    }
}

const Rat& BernoulliTable::value(long n) const {
    if (n < 0 || n > maxIndex()) throw std::out_of_range("Bernoulli index out of range");
    return values_[static_cast<size_t>(n)];
}

Rat BernoulliTable::zetaOneMinus(long k) const {
    if (k < 1) throw std::invalid_argument("zeta(1-k) needs k >= 1");
    return -value(k) / k;
}

QSeries eta(const Rat& prec) {
    if (prec <= 0) throw std::invalid_argument("prec must be positive");
    // q^{1/24} sum_j (-1)^j q^{j(3j-1)/2}, pentagonal numbers
    QSeries s = QSeries::zero(prec, 24);
    for (long j = 0;; ++j) {
        bool any = false;
        for (long sgn : {1L, -1L}) {
            long jj = sgn * j;
            if (j == 0 && sgn < 0) continue;
            Rat e = ratFrac(jj * (3 * jj - 1), 2) + ratFrac(1, 24);
            if (e < prec) {
                s.setCoefficient(e, (j % 2 == 0) ? Rat(1) : Rat(-1));
                any = true;
            }
        }
        if (!any && j > 0) break;
    }
    return s;
}

QSeries eisenstein(long k, const Rat& prec) {
    if (prec <= 0) throw std::invalid_argument("prec must be positive");
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("Eisenstein weight must be even and >= 2");
    BernoulliTable bern(k);
    Rat factor = Rat(-2 * k) / bern.value(k);
    QSeries s = QSeries::one(prec, 24);
    long nMax = static_cast<long>(prec.get_d()) + 1;
    for (long n = 1; n < nMax && Rat(n) < prec; ++n) {
        Int sigma(0);
        for (long d = 1; d <= n; ++d) {
            if (n % d == 0) {
                Int p;
                mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d),
                              static_cast<unsigned long>(k - 1));
                sigma += p;
            }
        }
        s.setCoefficient(Rat(n), factor * Rat(sigma));
    }
    return s;
}

QSeries discriminantDelta(const Rat& prec) {
    QSeries e4 = eisenstein(4, prec);
    QSeries e6 = eisenstein(6, prec);
    return (e4.pow(3) - e6.pow(2)) * ratFrac(1, 1728);
}

namespace {
// sum over a lattice coset r in Z + offset (offset 0 or 1/2) of
// sign(r) * q^{r^2/2} * zeta^r
BivariateQExpansion thetaSum(const Rat& prec, bool halfShift,
                             const std::function<Rat(long)>& signOfTwiceR) {
    BivariateQExpansion s = BivariateQExpansion::zero(prec, 24, 2);
    // iterate over 2r = t (t odd for half shift, even otherwise)
    for (long a = 0;; ++a) {
        bool any = false;
        for (long sgn : {1L, -1L}) {
            if (a == 0 && sgn < 0 && !halfShift) continue;  // t = 0 has no mirror
            long t = sgn * (halfShift ? 2 * a + 1 : 2 * a);  // t = 2r
            Rat e = ratFrac(t * t, 8);  // r^2/2
            if (e < prec) {
                Rat zExp = ratFrac(t, 2);
                s.setCoefficient(e, zExp, s.coefficient(e, zExp) + signOfTwiceR(t));
                any = true;
            }
        }
        if (!any) break;
    }
    return s;
}
}  // namespace

BivariateQExpansion thetaOdd(const Rat& prec) {
    if (prec <= 0) throw std::invalid_argument("prec must be positive");
    // sum_{r in Z+1/2} (-1)^{r-1/2} q^{r^2/2} zeta^r
    return thetaSum(prec, true, [](long t) {
        long a = (t - 1) / 2;  // r - 1/2
        return ((a % 2 + 2) % 2 == 0) ? Rat(1) : Rat(-1);
    });
}

BivariateQExpansion theta2(const Rat& prec) {
    if (prec <= 0) throw std::invalid_argument("prec must be positive");
    return thetaSum(prec, true, [](long) { return Rat(1); });
}

BivariateQExpansion theta3(const Rat& prec) {
    if (prec <= 0) throw std::invalid_argument("prec must be positive");
    return thetaSum(prec, false, [](long) { return Rat(1); });
}

BivariateQExpansion theta4(const Rat& prec) {
    if (prec <= 0) throw std::invalid_argument("prec must be positive");
    return thetaSum(prec, false, [](long t) {
        long n = t / 2;
        return ((n % 2 + 2) % 2 == 0) ? Rat(1) : Rat(-1);
    });
}

BivariateQExpansion phiM21(const Rat& prec) {
    // theta_odd^2 / eta^6; sign pinned by the leading term zeta - 2 + 1/zeta
    Rat work = prec + 2;
    BivariateQExpansion num = thetaOdd(work) * thetaOdd(work);
    QSeries den = eta(work).pow(6);
    return (num * den.inverse()).truncated(prec);
}

BivariateQExpansion phi01(const Rat& prec) {
    Rat work = prec + 2;
    BivariateQExpansion acc = BivariateQExpansion::zero(work, 24, 2);
    for (auto* fn : {&theta2, &theta3, &theta4}) {
        BivariateQExpansion th = fn(work);
        QSeries at0 = th.atZetaZero();
        acc = acc + th * th * at0.pow(2).inverse();
    }
    return (acc * Rat(4)).truncated(prec);
}

BivariateQExpansion phiM12(const Rat& prec) {
    Rat work = prec + 2;
    BivariateQExpansion num = thetaOdd(work).zetaScaled(2);
    QSeries den = eta(work).pow(3);
    return (num * den.inverse()).truncated(prec);
}

GeneratorValue generator(GeneratorName name, const Rat& prec, long eisensteinWeight) {
    switch (name) {
        case GeneratorName::Eta: return eta(prec);
        case GeneratorName::Eisenstein: return eisenstein(eisensteinWeight, prec);
        case GeneratorName::Delta: return discriminantDelta(prec);
        case GeneratorName::ThetaOdd: return thetaOdd(prec);
        case GeneratorName::Theta2: return theta2(prec);
        case GeneratorName::Theta3: return theta3(prec);
        case GeneratorName::Theta4: return theta4(prec);
        case GeneratorName::Phi01: return phi01(prec);
        case GeneratorName::PhiM21: return phiM21(prec);
        case GeneratorName::PhiM12: return phiM12(prec);
    }
    throw std::invalid_argument("unknown generator");
}

}  // namespace fjf
