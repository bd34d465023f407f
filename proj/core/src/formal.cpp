#include "fjf/formal.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace fjf {

GroupElement::GroupElement(long a, long b, long c, long d, long level)
    : a(a), b(b), c(c), d(d), level(level) {
    if (level <= 0) throw std::invalid_argument("level must be positive");
    long det = a * d - b * c;
    if (det != 1 && det != -1) throw std::invalid_argument("group element must have det +-1");
    if (b % level != 0)
        throw std::invalid_argument("upper-right entry must be divisible by the level");
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
    if (level != o.level) throw std::invalid_argument("level mismatch");
    return GroupElement(a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
                        c * o.b + d * o.d, level);
}

TruncatedFormalSeries::TruncatedFormalSeries(long weight, long level,
                                             std::vector<JacobiFormQExp> parts)
    : weight_(weight), level_(level), parts_(std::move(parts)) {
    if (level_ <= 0) throw std::invalid_argument("level must be positive");
    if (parts_.empty()) throw std::invalid_argument("need at least the index-0 part");
    prec_ = parts_.front().prec();
    for (size_t m = 0; m < parts_.size(); ++m) {
        if (parts_[m].weight() != weight_)
            throw std::invalid_argument("part weight mismatch");
        if (parts_[m].index() != level_ * static_cast<long>(m))
            throw std::invalid_argument("part " + std::to_string(m) + " must have index " +
                                        std::to_string(level_ * static_cast<long>(m)));
        prec_ = std::min(prec_, parts_[m].prec());
    }
    if (prec_ < depth() + 1)
        throw PrecisionError("common precision must exceed the depth");
}

const JacobiFormQExp& TruncatedFormalSeries::part(long m) const {
    if (m < 0 || m > depth()) throw std::out_of_range("part index beyond depth");
    return parts_[static_cast<size_t>(m)];
}

Rat TruncatedFormalSeries::coefficientAt(const MatrixIndexEntry& t) const {
    if (t.level != level_) throw std::invalid_argument("level mismatch");
    if (t.m < 0 || t.m > depth() || t.n < 0 || t.n >= prec_)
        throw PrecisionError("coefficient outside the truncation window");
    return part(t.m).coefficient(t.n, t.r);
}

TruncatedFormalSeries TruncatedFormalSeries::zero(long weight, long level, long depth,
                                                  long prec) {
    std::vector<JacobiFormQExp> parts;
    for (long m = 0; m <= depth; ++m) parts.emplace_back(weight, level * m, prec);
    return TruncatedFormalSeries(weight, level, std::move(parts));
}

TruncatedFormalSeries TruncatedFormalSeries::withCoefficient(long m, long n, long r,
                                                             const Rat& v) const {
    std::vector<JacobiFormQExp> parts = parts_;
    parts.at(static_cast<size_t>(m)).setCoefficient(n, r, v);
    return TruncatedFormalSeries(weight_, level_, std::move(parts));
}

TruncatedFormalSeries cauchyProduct(const TruncatedFormalSeries& f1,
                                    const TruncatedFormalSeries& f2) {
    if (f1.level() != f2.level()) throw std::invalid_argument("level mismatch");
    long depth = std::min(f1.depth(), f2.depth());
    long prec = std::min(f1.prec(), f2.prec());
    std::vector<JacobiFormQExp> parts;
    for (long m = 0; m <= depth; ++m) {
        JacobiFormQExp acc(f1.weight() + f2.weight(), f1.level() * m, prec);
        for (long m1 = 0; m1 <= m; ++m1) {
            long m2 = m - m1;
            acc = acc + (f1.part(m1) * f2.part(m2)).truncated(prec);
        }
        parts.push_back(std::move(acc));
    }
    return TruncatedFormalSeries(f1.weight() + f2.weight(), f1.level(), std::move(parts));
}

MatrixIndexEntry actIndex(const MatrixIndexEntry& t, const GroupElement& sigma) {
    if (sigma.level != t.level) throw std::invalid_argument("level mismatch");
    const long N = t.level;
    // sigma' t sigma for t = [[n, r/2], [r/2, Nm]]
    long n2 = sigma.a * sigma.a * t.n + sigma.a * sigma.c * t.r + sigma.c * sigma.c * N * t.m;
    long r2 = 2 * sigma.a * sigma.b * t.n + (sigma.a * sigma.d + sigma.b * sigma.c) * t.r +
              2 * sigma.c * sigma.d * N * t.m;
    long mNum = sigma.b * sigma.b * t.n + sigma.b * sigma.d * t.r + sigma.d * sigma.d * N * t.m;
    // b = 0 mod N guarantees divisibility
    return MatrixIndexEntry{n2, r2, mNum / N, N};
}

MatrixIndexEntry frickeIndexMap(const MatrixIndexEntry& t) {
    return MatrixIndexEntry{t.m, -t.r, t.n, t.level};
}

namespace {
long isqrtFloor(long x) {
    if (x < 0) return -1;
    long r = static_cast<long>(std::sqrt(static_cast<double>(x))) + 2;
    while (r * r > x) --r;
    return r;
}
}  // namespace

std::vector<ResidualEntry> frickeInvolutionResiduals(const TruncatedFormalSeries& f, int eps) {
    if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be +-1");
    const long N = f.level();
    Rat sign((f.weight() % 2 == 0) ? eps : -eps);
    std::vector<ResidualEntry> out;
    for (long m = 0; m <= f.depth(); ++m) {
        for (long n = 0; n <= m; ++n) {
            long rMax = isqrtFloor(4 * N * n * m);
            for (long r = -rMax; r <= rMax; ++r) {
                Rat res = f.part(m).coefficient(n, r) - sign * f.part(n).coefficient(m, r);
                if (res != 0)
                    out.push_back({MatrixIndexEntry{n, r, m, N}, std::move(res)});
            }
        }
    }
    return out;
}

SymmetryReport gamma0SymmetryResiduals(const TruncatedFormalSeries& f,
                                       const GroupElement& sigma) {
    if (sigma.level != f.level()) throw std::invalid_argument("level mismatch");
    const long N = f.level();
    Rat detK = (sigma.det() == 1 || f.weight() % 2 == 0) ? Rat(1) : Rat(-1);
    SymmetryReport rep;
    for (long m = 0; m <= f.depth(); ++m) {
        for (long n = 0; n < f.prec(); ++n) {
            long rMax = isqrtFloor(4 * N * n * m);
            for (long r = -rMax; r <= rMax; ++r) {
                MatrixIndexEntry t{n, r, m, N};
                MatrixIndexEntry ts = actIndex(t, sigma);
                if (ts.m < 0 || ts.m > f.depth() || ts.n < 0 || ts.n >= f.prec()) {
                    ++rep.pairsSkipped;
                    continue;
                }
                ++rep.pairsChecked;
                Rat res = f.coefficientAt(ts) - detK * f.coefficientAt(t);
                if (res != 0) rep.residuals.push_back({t, std::move(res)});
            }
        }
    }
    return rep;
}

TruncatedFormalSeries SolutionSpace::materialize(size_t i, long weight, long level) const {
    const auto& v = coordinateBasis.at(i);
    long prec = static_cast<long>(bases.size()) + 1;
    for (const auto& bm : bases)
        if (!bm.empty()) prec = std::max(prec, bm.front().prec());
    for (const auto& bm : bases)
        if (!bm.empty()) prec = std::min(prec, bm.front().prec());
    std::vector<JacobiFormQExp> parts;
    for (size_t m = 0; m < bases.size(); ++m) {
        JacobiFormQExp acc(weight, level * static_cast<long>(m), prec);
        for (size_t j = 0; j < bases[m].size(); ++j) {
            const Rat& x = v[static_cast<size_t>(offsets[m]) + j];
            if (x != 0) acc = acc + bases[m][j] * x;
        }
        parts.push_back(std::move(acc));
    }
    return TruncatedFormalSeries(weight, level, std::move(parts));
}

SolutionSpace involutionSolutionSpace(long k, long N, int eps, long d, long prec) {
    if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be +-1");
    if (d < 0) throw std::invalid_argument("negative depth");
    if (prec <= d) throw PrecisionError("need prec > d for the involution window");

    SolutionSpace out;
    long cols = 0;
    for (long m = 0; m <= d; ++m) {
        out.offsets.push_back(cols);
        auto basis = jacobiBasis(k, N * m, SpaceKind::holomorphic(),
                                 std::max(prec, jacobiSufficientPrec(k, N * m)));
        // align precision across parts
        for (auto& f : basis) f = f.truncated(prec);
        cols += static_cast<long>(basis.size());
        out.bases.push_back(std::move(basis));
    }

    Rat sign((k % 2 == 0) ? eps : -eps);
    std::vector<std::array<long, 3>> triples;
    for (long m = 0; m <= d; ++m)
        for (long n = 0; n <= m; ++n) {
            long rMax = isqrtFloor(4 * N * n * m);
            for (long r = -rMax; r <= rMax; ++r) triples.push_back({n, r, m});
        }

    ExactMatrix cm(static_cast<long>(triples.size()), cols);
    for (size_t row = 0; row < triples.size(); ++row) {
        auto [n, r, m] = triples[row];
        for (size_t j = 0; j < out.bases[static_cast<size_t>(m)].size(); ++j) {
            Rat v = out.bases[static_cast<size_t>(m)][j].coefficient(n, r);
            if (v != 0)
                cm.add(static_cast<long>(row),
                       out.offsets[static_cast<size_t>(m)] + static_cast<long>(j), v);
        }
        for (size_t j = 0; j < out.bases[static_cast<size_t>(n)].size(); ++j) {
            Rat v = out.bases[static_cast<size_t>(n)][j].coefficient(m, r);
            if (v != 0)
                cm.add(static_cast<long>(row),
                       out.offsets[static_cast<size_t>(n)] + static_cast<long>(j), -sign * v);
        }
    }
    out.coordinateBasis = exactKernel(cm);
    out.dimension = static_cast<long>(out.coordinateBasis.size());
    return out;
}

long dimUpperViaOrders(long k, long N, int eps) {
    if (k < 1 || N < 1) throw std::invalid_argument("need k, N >= 1");
    if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be +-1");
    int parity = (k % 2 == 0) ? 1 : -1;
    long delta = (parity * eps == 1) ? 0 : 1;
    long cap = (N * k) / 6;
    long total = 0;
    for (long j = 0; j <= cap; ++j)
        total += jacobiDim(k, N * j, SpaceKind::order(j + delta));
    return total;
}

}  // namespace fjf
