#include "fjf/matrix.hpp"

#include <algorithm>

namespace fjf {

ExactMatrix::ExactMatrix(long rows, long cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

Rat ExactMatrix::get(long r, long c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Rat(0) : it->second;
}

void ExactMatrix::set(long r, long c, const Rat& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
    if (v == 0)
        entries_.erase({r, c});
    else
        entries_[{r, c}] = v;
}

void ExactMatrix::add(long r, long c, const Rat& v) { set(r, c, get(r, c) + v); }

namespace {

using IntRow = std::map<long, Int>;

void divideByContent(IntRow& row) {
    Int g(0);
    for (const auto& [c, v] : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g > 1) {
        for (auto& [c, v] : row) v /= g;
    }
}

// rows as integer sparse maps with denominators cleared
std::vector<IntRow> integerRows(const ExactMatrix& m) {
    std::vector<IntRow> rows(static_cast<size_t>(m.rows()));
    std::vector<Int> dens(static_cast<size_t>(m.rows()), Int(1));
    for (const auto& [rc, v] : m.entries()) {
        Int& d = dens[static_cast<size_t>(rc.first)];
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), v.get_den().get_mpz_t());
    }
    for (const auto& [rc, v] : m.entries()) {
        const Int& d = dens[static_cast<size_t>(rc.first)];
        rows[static_cast<size_t>(rc.first)][rc.second] = v.get_num() * (d / v.get_den());
    }
    return rows;
}

struct Eliminated {
    std::vector<IntRow> rows;                   // original row order preserved
    std::vector<std::pair<long, long>> pivots;  // (column, row) in column order
};

Eliminated eliminate(const ExactMatrix& m) {
    Eliminated out;
    out.rows = integerRows(m);
    std::vector<bool> used(out.rows.size(), false);
    for (long c = 0; c < m.cols(); ++c) {
        long pr = -1;
        for (size_t r = 0; r < out.rows.size(); ++r) {
            if (used[r]) continue;
            auto it = out.rows[r].find(c);
            if (it != out.rows[r].end() && it->second != 0) {
                pr = static_cast<long>(r);
                break;
            }
        }
        if (pr < 0) continue;
        used[static_cast<size_t>(pr)] = true;
        out.pivots.emplace_back(c, pr);
        IntRow& piv = out.rows[static_cast<size_t>(pr)];
        Int p = piv.at(c);
        for (size_t r = 0; r < out.rows.size(); ++r) {
            if (static_cast<long>(r) == pr) continue;
            auto it = out.rows[r].find(c);
            if (it == out.rows[r].end() || it->second == 0) continue;
            Int f = it->second;
            IntRow& row = out.rows[r];
            // row <- p * row - f * piv; the scaling hits every column
            for (auto& [cc, v] : row) v *= p;
            for (const auto& [cc, pv] : piv) row[cc] -= pv * f;
            for (auto rit = row.begin(); rit != row.end();)
                rit = rit->second == 0 ? row.erase(rit) : std::next(rit);
            divideByContent(row);
        }
    }
    return out;
}

void normalizeKernelVector(std::vector<Rat>& v) {
    Int l(1), g(0);
    for (const auto& x : v) {
        if (x != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    }
    for (auto& x : v) x *= Rat(l);
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
    if (g > 1)
        for (auto& x : v) x /= Rat(g);
    for (const auto& x : v) {
        if (x != 0) {
            if (x < 0)
                for (auto& y : v) y = -y;
            break;
        }
    }
}

}  // namespace

std::vector<std::vector<Rat>> exactKernel(const ExactMatrix& m) {
    Eliminated e = eliminate(m);
    std::vector<bool> isPivotCol(static_cast<size_t>(m.cols()), false);
    for (const auto& [c, r] : e.pivots) isPivotCol[static_cast<size_t>(c)] = true;

    std::vector<std::vector<Rat>> basis;
    for (long f = 0; f < m.cols(); ++f) {
        if (isPivotCol[static_cast<size_t>(f)]) continue;
        std::vector<Rat> v(static_cast<size_t>(m.cols()));
        v[static_cast<size_t>(f)] = 1;
        for (const auto& [c, r] : e.pivots) {
            const IntRow& row = e.rows[static_cast<size_t>(r)];
            auto it = row.find(f);
            if (it != row.end() && it->second != 0)
                v[static_cast<size_t>(c)] = -Rat(it->second) / Rat(row.at(c));
        }
        normalizeKernelVector(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

long exactRank(const ExactMatrix& m) {
    return static_cast<long>(eliminate(m).pivots.size());
}

std::vector<long> rrefRational(std::vector<std::vector<Rat>>& rows) {
    if (rows.empty()) return {};
    size_t cols = rows[0].size();
    std::vector<long> pivots;
    size_t nextRow = 0;
    for (size_t c = 0; c < cols && nextRow < rows.size(); ++c) {
        size_t pr = rows.size();
        for (size_t r = nextRow; r < rows.size(); ++r) {
            if (rows[r][c] != 0) {
                pr = r;
                break;
            }
        }
        if (pr == rows.size()) continue;
        std::swap(rows[nextRow], rows[pr]);
        Rat inv = 1 / rows[nextRow][c];
        for (size_t j = c; j < cols; ++j) rows[nextRow][j] *= inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == nextRow || rows[r][c] == 0) continue;
            Rat f = rows[r][c];
            for (size_t j = c; j < cols; ++j) rows[r][j] -= f * rows[nextRow][j];
        }
        pivots.push_back(static_cast<long>(c));
        ++nextRow;
    }
    rows.resize(nextRow);
    return pivots;
}

}  // namespace fjf
