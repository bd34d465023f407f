#pragma once

#include "fjf/jacobi.hpp"

namespace fjf {

/// Index matrix t = [[n, r/2], [r/2, N*m]] of a Fourier coefficient.
struct MatrixIndexEntry {
    long n = 0, r = 0, m = 0;
    long level = 1;

    /// membership in the semidefinite cone over the level
    bool semidefinite() const { return n >= 0 && m >= 0 && 4 * level * n * m - r * r >= 0; }
    bool operator==(const MatrixIndexEntry&) const = default;
};

/// Element of Gamma^0_pm(N): integral 2x2 with det +-1 and upper-right
/// entry divisible by N.
struct GroupElement {
    long a = 1, b = 0, c = 0, d = 1;
    long level = 1;

    GroupElement() = default;
    GroupElement(long a, long b, long c, long d, long level);
    long det() const { return a * d - b * c; }
    GroupElement operator*(const GroupElement& o) const;
};

/// Truncation of a formal Fourier-Jacobi series: weight k, level N and
/// Jacobi-form parts phi_0..phi_d with index(phi_m) = N*m.
class TruncatedFormalSeries {
  public:
    TruncatedFormalSeries(long weight, long level, std::vector<JacobiFormQExp> parts);

    long weight() const { return weight_; }
    long level() const { return level_; }
    long depth() const { return static_cast<long>(parts_.size()) - 1; }
    long prec() const { return prec_; }
    const JacobiFormQExp& part(long m) const;
    const std::vector<JacobiFormQExp>& parts() const { return parts_; }

    /// a(t; f) = c(n, r; phi_m)
    Rat coefficientAt(const MatrixIndexEntry& t) const;

    static TruncatedFormalSeries zero(long weight, long level, long depth, long prec);
    /// copy with a single coefficient changed (mutation testing hook)
    TruncatedFormalSeries withCoefficient(long m, long n, long r, const Rat& v) const;

  private:
    long weight_, level_, prec_;
    std::vector<JacobiFormQExp> parts_;
};

TruncatedFormalSeries cauchyProduct(const TruncatedFormalSeries& f1,
                                    const TruncatedFormalSeries& f2);

/// t[sigma] = sigma' t sigma
MatrixIndexEntry actIndex(const MatrixIndexEntry& t, const GroupElement& sigma);

/// (n, r, m) -> (m, -r, n)
MatrixIndexEntry frickeIndexMap(const MatrixIndexEntry& t);

struct ResidualEntry {
    MatrixIndexEntry t;
    Rat residual;
};

/// Violations of c(n,r;phi_m) = (-1)^k eps c(m,r;phi_n) over the window
/// n <= m <= depth, r^2 <= 4Nnm.  Empty list certifies membership in the
/// involution-conditioned space at this depth.
std::vector<ResidualEntry> frickeInvolutionResiduals(const TruncatedFormalSeries& f, int eps);

struct SymmetryReport {
    std::vector<ResidualEntry> residuals;
    long pairsChecked = 0;
    long pairsSkipped = 0;  // t[sigma] left the truncation window
};

SymmetryReport gamma0SymmetryResiduals(const TruncatedFormalSeries& f, const GroupElement& sigma);

struct SolutionSpace {
    long dimension = 0;
    std::vector<std::vector<Rat>> coordinateBasis;   // over the concatenated Jacobi bases
    std::vector<std::vector<JacobiFormQExp>> bases;  // B_m, m = 0..d
    std::vector<long> offsets;                       // column offset of B_m

    /// Materialize coordinate vector #i as a formal series.
    TruncatedFormalSeries materialize(size_t i, long weight, long level) const;
};

/// dim and basis of the depth-d involution-conditioned space: tuples
/// (phi_m) in prod_m J_{k,Nm} subject to the involution condition for all
/// n <= m <= d.
SolutionSpace involutionSolutionSpace(long k, long N, int eps, long d, long prec);

/// Upper bound sum_{j<=floor(Nk/6)} dim J_{k,Nj}(j+delta) with delta
/// determined by (-1)^k eps.
long dimUpperViaOrders(long k, long N, int eps);

}  // namespace fjf
