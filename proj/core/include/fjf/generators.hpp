#pragma once

#include <variant>

#include "fjf/bivariate.hpp"

namespace fjf {

/// Exact Bernoulli numbers B_0..B_max via the defining recurrence
/// sum_{j=0}^{m} C(m+1,j) B_j = 0.
class BernoulliTable {
  public:
    explicit BernoulliTable(long maxIndex);
    const Rat& value(long n) const;
    long maxIndex() const { return static_cast<long>(values_.size()) - 1; }
    /// zeta(1-k) = -B_k / k for k >= 1.
    Rat zetaOneMinus(long k) const;

  private:
    std::vector<Rat> values_;
};

enum class GeneratorName {
    Eta,
    Eisenstein,  // carries the weight parameter
    Delta,
    ThetaOdd,
    Theta2,
    Theta3,
    Theta4,
    Phi01,    // weak Jacobi generator of weight 0, index 1
    PhiM21,   // weight -2, index 1
    PhiM12,   // weight -1, index 2
};

QSeries eta(const Rat& prec);
QSeries eisenstein(long k, const Rat& prec);
QSeries discriminantDelta(const Rat& prec);

BivariateQExpansion thetaOdd(const Rat& prec);
BivariateQExpansion theta2(const Rat& prec);
BivariateQExpansion theta3(const Rat& prec);
BivariateQExpansion theta4(const Rat& prec);

BivariateQExpansion phi01(const Rat& prec);
BivariateQExpansion phiM21(const Rat& prec);
BivariateQExpansion phiM12(const Rat& prec);

using GeneratorValue = std::variant<QSeries, BivariateQExpansion>;
GeneratorValue generator(GeneratorName name, const Rat& prec, long eisensteinWeight = 0);

}  // namespace fjf
