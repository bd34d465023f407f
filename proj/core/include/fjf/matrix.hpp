#pragma once

#include <map>
#include <vector>

#include "fjf/rational.hpp"

namespace fjf {

/// Sparse matrix over exact rationals.
class ExactMatrix {
  public:
    ExactMatrix(long rows, long cols);

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    Rat get(long r, long c) const;
    void set(long r, long c, const Rat& v);
    void add(long r, long c, const Rat& v);

    const std::map<std::pair<long, long>, Rat>& entries() const { return entries_; }

  private:
    long rows_, cols_;
    std::map<std::pair<long, long>, Rat> entries_;
};

/// Basis of the right kernel {v : Mv = 0}, computed by fraction-free
/// integer elimination after clearing denominators per row.  Pivots are
/// chosen deterministically (leftmost column, then smallest row index),
/// and each basis vector is integral, content-free, with positive leading
/// entry; vectors are ordered by their free column.
std::vector<std::vector<Rat>> exactKernel(const ExactMatrix& m);

long exactRank(const ExactMatrix& m);

/// In-place reduced row echelon form over Q on dense rows; returns the
/// pivot column of each surviving (nonzero) row.  Zero rows are removed.
std::vector<long> rrefRational(std::vector<std::vector<Rat>>& rows);

}  // namespace fjf
