#pragma once

#include <optional>

#include "fjf/bivariate.hpp"
#include "fjf/generators.hpp"
#include "fjf/matrix.hpp"

namespace fjf {

/// Weight/index-tagged Fourier coefficient table c(n,r) of a Jacobi form,
/// stored for 0 <= n < prec.  Coefficients with r^2 > 4mn + m^2 vanish for
/// every weak form of index m and are never stored.
class JacobiFormQExp {
  public:
    JacobiFormQExp(long weight, long index, long prec);

    long weight() const { return weight_; }
    long index() const { return index_; }
    long prec() const { return prec_; }
    bool isZero() const { return coeffs_.empty(); }
    const std::map<std::pair<long, long>, Rat>& coeffs() const { return coeffs_; }

    /// c(n,r); zero outside the support window, PrecisionError for n >= prec.
    Rat coefficient(long n, long r) const;
    void setCoefficient(long n, long r, const Rat& v);

    bool inWindow(long n, long r) const;

    /// Least n with a nonzero coefficient; nullopt for the zero form.
    std::optional<long> orderOf() const;

    JacobiFormQExp truncated(long newPrec) const;

    JacobiFormQExp operator-() const;
    JacobiFormQExp operator+(const JacobiFormQExp& o) const;
    JacobiFormQExp operator-(const JacobiFormQExp& o) const;
    JacobiFormQExp operator*(const JacobiFormQExp& o) const;  // weights/indices add
    JacobiFormQExp operator*(const Rat& c) const;
    bool operator==(const JacobiFormQExp& o) const;

    /// Conversion from a bivariate expansion with integral exponents.
    static JacobiFormQExp fromBivariate(const BivariateQExpansion& b, long weight, long index);

  private:
    long weight_, index_, prec_;
    std::map<std::pair<long, long>, Rat> coeffs_;
};

struct SpaceKind {
    enum class Tag { Weak, Holomorphic, Cusp, Order } tag;
    long nu = 0;  // only for Order

    static SpaceKind weak() { return {Tag::Weak, 0}; }
    static SpaceKind holomorphic() { return {Tag::Holomorphic, 0}; }
    static SpaceKind cusp() { return {Tag::Cusp, 0}; }
    static SpaceKind order(long nu);

    bool operator==(const SpaceKind&) const = default;
    std::string name() const;
};

/// Default truncation order that the basis machinery accepts for J_{k,m};
/// callers confirm sufficiency through rank stability.
long jacobiSufficientPrec(long k, long m);

/// Basis of the requested space truncated at prec, in reduced echelon form
/// with respect to the coefficient order (n asc, |r| asc, r>0 before r<0).
std::vector<JacobiFormQExp> jacobiBasis(long k, long m, SpaceKind kind, long prec);

/// dim of the space, with internally chosen precision confirmed by rank
/// stability at prec+5.
long jacobiDim(long k, long m, SpaceKind kind);

/// Reduced echelon form of a span of forms (same weight/index/prec).
std::vector<JacobiFormQExp> echelonize(const std::vector<JacobiFormQExp>& forms);

/// Canonical coefficient ordering used for echelonization and serialization:
/// every (n, r) window key for index m below prec, sorted by
/// (n, |r|, sign).
std::vector<std::pair<long, long>> coefficientOrder(long m, long prec);

}  // namespace fjf
