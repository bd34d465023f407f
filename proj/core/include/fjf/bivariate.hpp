#pragma once

#include <map>
#include <utility>

#include "fjf/qseries.hpp"

namespace fjf {

/// Truncated exact series in (q, zeta) with fractional q-exponents and
/// half-integer zeta-exponents.  Truncation applies in q only; for each
/// stored q-exponent the zeta support is finite.
class BivariateQExpansion {
  public:
    using Key = std::pair<long, long>;  // (scaled q-exponent, scaled zeta-exponent)

    explicit BivariateQExpansion(long qDen = 24, long zDen = 2, Rat qPrec = Rat(0));

    static BivariateQExpansion zero(Rat qPrec, long qDen = 24, long zDen = 2);
    static BivariateQExpansion fromQSeries(const QSeries& s, long zDen = 2);

    long qExpDenom() const { return qDen_; }
    long zetaExpDenom() const { return zDen_; }
    const Rat& qPrec() const { return qPrec_; }
    const std::map<Key, Rat>& scaledCoeffs() const { return coeffs_; }
    bool isZero() const { return coeffs_.empty(); }

    Rat qValuation() const;  // qPrec for the empty series

    Rat coefficient(const Rat& qExp, const Rat& zExp) const;
    void setCoefficient(const Rat& qExp, const Rat& zExp, const Rat& value);

    BivariateQExpansion withDenoms(long newQDen, long newZDen) const;
    BivariateQExpansion truncated(const Rat& newQPrec) const;

    /// Substitution z -> scale*z (zeta -> zeta^scale).
    BivariateQExpansion zetaScaled(long scale) const;
    /// Restriction z = 0: collapses each q-slice to the sum of its zeta terms.
    QSeries atZetaZero() const;

    BivariateQExpansion operator-() const;
    BivariateQExpansion operator+(const BivariateQExpansion& o) const;
    BivariateQExpansion operator-(const BivariateQExpansion& o) const;
    BivariateQExpansion operator*(const BivariateQExpansion& o) const;
    BivariateQExpansion operator*(const Rat& c) const;
    BivariateQExpansion operator*(const QSeries& s) const;

    bool operator==(const BivariateQExpansion& o) const;

  private:
    long qDen_, zDen_;
    std::map<Key, Rat> coeffs_;
    Rat qPrec_;

    long scaleQ(const Rat& e) const;
    long scaleZ(const Rat& e) const;
};

}  // namespace fjf
