#pragma once

#include <map>
#include <vector>

#include "fjf/rational.hpp"

namespace fjf {

/// Truncated one-variable Laurent series with exact rational coefficients.
/// All exponents are integers divided by a common positive denominator
/// `expDenom`; coefficients at exponents >= `prec` are undefined (truncated
/// away), and zero coefficients are never stored.
class QSeries {
  public:
    explicit QSeries(long expDenom = 24, Rat prec = Rat(0));

    static QSeries one(Rat prec, long expDenom = 24);
    static QSeries zero(Rat prec, long expDenom = 24);
    /// coeff * q^exponent, truncated at prec.
    static QSeries monomial(const Rat& coeff, const Rat& exponent, Rat prec,
                            long expDenom = 24);

    long expDenom() const { return expDenom_; }
    const Rat& prec() const { return prec_; }
    const std::map<long, Rat>& scaledCoeffs() const { return coeffs_; }
    bool isZero() const { return coeffs_.empty(); }

    /// Lowest stored exponent; for the empty series the truncation order,
    /// which is the best available lower bound.
    Rat valuation() const;

    Rat coefficient(const Rat& exponent) const;
    void setCoefficient(const Rat& exponent, const Rat& value);

    /// Rewrites the series over a denominator that `expDenom` divides.
    QSeries withExpDenom(long newDenom) const;
    QSeries truncated(const Rat& newPrec) const;

    QSeries operator-() const;
    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    QSeries operator*(const Rat& c) const;

    /// Multiplicative inverse; the series must be nonzero.  A nonzero
    /// valuation v is allowed and produces a series starting at -v.
    QSeries inverse() const;
    QSeries pow(long e) const;

    bool operator==(const QSeries& o) const;

  private:
    long expDenom_;
    std::map<long, Rat> coeffs_;  // scaled exponent -> coefficient
    Rat prec_;

    long scaleExp(const Rat& e) const;
    void dropBeyondPrec();
    friend class BivariateQExpansion;
};

}  // namespace fjf
