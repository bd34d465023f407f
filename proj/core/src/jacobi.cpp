#include "fjf/jacobi.hpp"

#include <algorithm>
#include <cmath>

namespace fjf {

JacobiFormQExp::JacobiFormQExp(long weight, long index, long prec)
    : weight_(weight), index_(index), prec_(prec) {
    if (index < 0) throw std::invalid_argument("Jacobi form index must be non-negative");
    if (prec <= 0) throw std::invalid_argument("prec must be positive");
}

bool JacobiFormQExp::inWindow(long n, long r) const {
    if (index_ == 0) return r == 0;
    return r * r <= 4 * index_ * n + index_ * index_;
}

Rat JacobiFormQExp::coefficient(long n, long r) const {
    if (n < 0) return Rat(0);
    if (n >= prec_)
        throw PrecisionError("coefficient c(" + std::to_string(n) + "," + std::to_string(r) +
                             ") beyond truncation order " + std::to_string(prec_));
    auto it = coeffs_.find({n, r});
    return it == coeffs_.end() ? Rat(0) : it->second;
}

void JacobiFormQExp::setCoefficient(long n, long r, const Rat& v) {
    if (n < 0 || n >= prec_) throw std::out_of_range("coefficient index outside window");
    if (v == 0)
        coeffs_.erase({n, r});
    else
        coeffs_[{n, r}] = v;
}

std::optional<long> JacobiFormQExp::orderOf() const {
    if (coeffs_.empty()) return std::nullopt;
    long best = prec_;
    for (const auto& [nr, c] : coeffs_) best = std::min(best, nr.first);
    return best;
}

JacobiFormQExp JacobiFormQExp::truncated(long newPrec) const {
    JacobiFormQExp out(weight_, index_, std::min(prec_, newPrec));
    for (const auto& [nr, c] : coeffs_) {
        if (nr.first < out.prec_) out.coeffs_[nr] = c;
    }
    return out;
}

JacobiFormQExp JacobiFormQExp::operator-() const {
    JacobiFormQExp out(weight_, index_, prec_);
    for (const auto& [nr, c] : coeffs_) out.coeffs_[nr] = -c;
    return out;
}

JacobiFormQExp JacobiFormQExp::operator+(const JacobiFormQExp& o) const {
    if (weight_ != o.weight_ || index_ != o.index_)
        throw std::invalid_argument("weight/index mismatch in Jacobi form sum");
    JacobiFormQExp out(weight_, index_, std::min(prec_, o.prec_));
    for (const auto& [nr, c] : coeffs_)
        if (nr.first < out.prec_) out.coeffs_[nr] = c;
    for (const auto& [nr, c] : o.coeffs_) {
        if (nr.first >= out.prec_) continue;
        Rat& slot = out.coeffs_[nr];
        slot += c;
        if (slot == 0) out.coeffs_.erase(nr);
    }
    return out;
}

JacobiFormQExp JacobiFormQExp::operator-(const JacobiFormQExp& o) const { return *this + (-o); }

JacobiFormQExp JacobiFormQExp::operator*(const JacobiFormQExp& o) const {
    JacobiFormQExp out(weight_ + o.weight_, index_ + o.index_, std::min(prec_, o.prec_));
    for (const auto& [nr1, c1] : coeffs_) {
        for (const auto& [nr2, c2] : o.coeffs_) {
            long n = nr1.first + nr2.first;
            if (n >= out.prec_) continue;
            auto key = std::make_pair(n, nr1.second + nr2.second);
            Rat& slot = out.coeffs_[key];
            slot += c1 * c2;
            if (slot == 0) out.coeffs_.erase(key);
        }
    }
    return out;
}

JacobiFormQExp JacobiFormQExp::operator*(const Rat& c) const {
    JacobiFormQExp out(weight_, index_, prec_);
    if (c == 0) return out;
    for (const auto& [nr, v] : coeffs_) out.coeffs_[nr] = v * c;
    return out;
}

bool JacobiFormQExp::operator==(const JacobiFormQExp& o) const {
    return weight_ == o.weight_ && index_ == o.index_ && prec_ == o.prec_ && coeffs_ == o.coeffs_;
}

JacobiFormQExp JacobiFormQExp::fromBivariate(const BivariateQExpansion& b, long weight,
                                             long index) {
    Rat qp = b.qPrec();
    if (qp.get_den() != 1) throw std::invalid_argument("non-integral truncation order");
    JacobiFormQExp out(weight, index, qp.get_num().get_si());
    long qd = b.qExpDenom(), zd = b.zetaExpDenom();
    for (const auto& [key, c] : b.scaledCoeffs()) {
        if (key.first % qd != 0 || key.second % zd != 0)
            throw std::invalid_argument("bivariate expansion has fractional exponents");
        out.setCoefficient(key.first / qd, key.second / zd, c);
    }
    return out;
}

SpaceKind SpaceKind::order(long nu) {
    if (nu < 0) throw std::invalid_argument("order filter must be non-negative");
    if (nu == 0) return holomorphic();  // order(0) is the holomorphic space
    return {Tag::Order, nu};
}

std::string SpaceKind::name() const {
    switch (tag) {
        case Tag::Weak: return "weak";
        case Tag::Holomorphic: return "hol";
        case Tag::Cusp: return "cusp";
        case Tag::Order: return "order" + std::to_string(nu);
    }
    return "?";
}

long jacobiSufficientPrec(long k, long m) {
    long kk = (k + 11) / 12;  // ceil(k/12)
    return kk * (m + 1) + 2;
}

std::vector<std::pair<long, long>> coefficientOrder(long m, long prec) {
    std::vector<std::pair<long, long>> keys;
    for (long n = 0; n < prec; ++n) {
        if (m == 0) {
            keys.emplace_back(n, 0);
            continue;
        }
        long rMax = static_cast<long>(std::sqrt(static_cast<double>(4 * m * n + m * m))) + 2;
        while (rMax * rMax > 4 * m * n + m * m) --rMax;
        keys.emplace_back(n, 0);
        for (long r = 1; r <= rMax; ++r) {
            keys.emplace_back(n, r);
            keys.emplace_back(n, -r);
        }
    }
    return keys;
}

namespace {

// Monomials E4^a E6^b phi01^c phiM21^d spanning the weak space of even
// weight k and index m, expanded to the given q-precision.  Deterministic
// order: d ascending, then b ascending.
std::vector<BivariateQExpansion> weakMonomialsEven(long k, long m, long prec) {
    if (k % 2 != 0 || k < 0) return {};
    Rat work(prec);
    QSeries e4 = eisenstein(4, work);
    QSeries e6 = eisenstein(6, work);
    BivariateQExpansion p01 = phi01(work);
    BivariateQExpansion pm21 = phiM21(work);

    std::vector<BivariateQExpansion> out;
    // powers are cached so each monomial costs one product
    std::vector<QSeries> e4pow{QSeries::one(work)}, e6pow{QSeries::one(work)};
    std::vector<BivariateQExpansion> p01pow{BivariateQExpansion::fromQSeries(QSeries::one(work))};
    std::vector<BivariateQExpansion> pm21pow{p01pow[0]};
    auto e4p = [&](long a) -> const QSeries& {
        while (static_cast<long>(e4pow.size()) <= a) e4pow.push_back(e4pow.back() * e4);
        return e4pow[static_cast<size_t>(a)];
    };
    auto e6p = [&](long b) -> const QSeries& {
        while (static_cast<long>(e6pow.size()) <= b) e6pow.push_back(e6pow.back() * e6);
        return e6pow[static_cast<size_t>(b)];
    };
    auto p01p = [&](long c) -> const BivariateQExpansion& {
        while (static_cast<long>(p01pow.size()) <= c) p01pow.push_back(p01pow.back() * p01);
        return p01pow[static_cast<size_t>(c)];
    };
    auto pm21p = [&](long d) -> const BivariateQExpansion& {
        while (static_cast<long>(pm21pow.size()) <= d) pm21pow.push_back(pm21pow.back() * pm21);
        return pm21pow[static_cast<size_t>(d)];
    };

    for (long d = 0; d <= m; ++d) {
        long c = m - d;
        long w = k + 2 * d;  // 4a + 6b = w
        if (w < 0) continue;
        for (long b = 0; 6 * b <= w; ++b) {
            long rest = w - 6 * b;
            if (rest % 4 != 0) continue;
            long a = rest / 4;
            BivariateQExpansion mono = p01p(c) * pm21p(d) * e4p(a) * e6p(b);
            out.push_back(mono.truncated(Rat(prec)));
        }
    }
    return out;
}

std::vector<BivariateQExpansion> weakMonomials(long k, long m, long prec) {
    if (k < 0 || m < 0) return {};
    if (k % 2 == 0) return weakMonomialsEven(k, m, prec);
    // odd weight: phiM12 (weight -1, index 2) times the even span
    if (m < 2) return {};
    BivariateQExpansion gen = phiM12(Rat(prec));
    std::vector<BivariateQExpansion> base = weakMonomialsEven(k + 1, m - 2, prec);
    std::vector<BivariateQExpansion> out;
    out.reserve(base.size());
    for (const auto& b : base) out.push_back((gen * b).truncated(Rat(prec)));
    return out;
}

bool violatesKind(const SpaceKind& kind, long m, long n, long r) {
    long disc = 4 * m * n - r * r;
    switch (kind.tag) {
        case SpaceKind::Tag::Weak: return false;
        case SpaceKind::Tag::Holomorphic: return disc < 0;
        case SpaceKind::Tag::Cusp:
            if (m == 0) return n == 0;  // constant term must vanish
            return disc <= 0;
        case SpaceKind::Tag::Order:
            if (n < kind.nu) return true;
            return m != 0 && disc < 0;
    }
    return false;
}

}  // namespace

std::vector<JacobiFormQExp> echelonize(const std::vector<JacobiFormQExp>& forms) {
    if (forms.empty()) return {};
    long m = forms.front().index();
    long prec = forms.front().prec();
    long k = forms.front().weight();
    for (const auto& f : forms) {
        if (f.index() != m || f.weight() != k)
            throw std::invalid_argument("echelonize: mixed weight/index");
        prec = std::min(prec, f.prec());
    }
    auto keys = coefficientOrder(m, prec);
    std::vector<std::vector<Rat>> rows;
    rows.reserve(forms.size());
    for (const auto& f : forms) {
        std::vector<Rat> row;
        row.reserve(keys.size());
        for (const auto& [n, r] : keys) row.push_back(f.coefficient(n, r));
        rows.push_back(std::move(row));
    }
    rrefRational(rows);
    std::vector<JacobiFormQExp> out;
    for (const auto& row : rows) {
        JacobiFormQExp f(k, m, prec);
        for (size_t i = 0; i < keys.size(); ++i) {
            if (row[i] != 0) f.setCoefficient(keys[i].first, keys[i].second, row[i]);
        }
        if (!f.isZero()) out.push_back(std::move(f));
    }
    return out;
}

std::vector<JacobiFormQExp> jacobiBasis(long k, long m, SpaceKind kind, long prec) {
    if (k < 0) throw std::invalid_argument("negative weight not supported");
    if (m < 0) throw std::invalid_argument("negative index");
    if (prec < jacobiSufficientPrec(k, m))
        throw PrecisionError("prec " + std::to_string(prec) + " below sufficiency bound " +
                             std::to_string(jacobiSufficientPrec(k, m)) + " for J_{" +
                             std::to_string(k) + "," + std::to_string(m) + "}");
    if (kind.tag == SpaceKind::Tag::Order && kind.nu >= prec)
        throw PrecisionError("order filter at or beyond truncation order");

    std::vector<JacobiFormQExp> weak;
    for (const auto& mono : weakMonomials(k, m, prec))
        weak.push_back(JacobiFormQExp::fromBivariate(mono, k, m));
    if (weak.empty()) return {};
    if (kind.tag == SpaceKind::Tag::Weak) return echelonize(weak);

    // linear conditions c(n,r) = 0 on the monomial coordinates
    std::vector<std::pair<long, long>> conditions;
    for (const auto& [n, r] : coefficientOrder(m, prec)) {
        if (violatesKind(kind, m, n, r)) conditions.emplace_back(n, r);
    }
    ExactMatrix cm(static_cast<long>(conditions.size()), static_cast<long>(weak.size()));
    for (size_t i = 0; i < conditions.size(); ++i) {
        for (size_t j = 0; j < weak.size(); ++j) {
            Rat v = weak[j].coefficient(conditions[i].first, conditions[i].second);
            if (v != 0) cm.set(static_cast<long>(i), static_cast<long>(j), v);
        }
    }
    auto kernel = exactKernel(cm);
    std::vector<JacobiFormQExp> combos;
    for (const auto& v : kernel) {
        JacobiFormQExp f(k, m, prec);
        for (size_t j = 0; j < weak.size(); ++j) {
            if (v[j] != 0) f = f + weak[j] * v[j];
        }
        combos.push_back(std::move(f));
    }
    return echelonize(combos);
}

long jacobiDim(long k, long m, SpaceKind kind) {
    long prec = jacobiSufficientPrec(k, m);
    if (kind.tag == SpaceKind::Tag::Order) prec = std::max(prec, kind.nu + 2);
    for (int attempt = 0; attempt < 6; ++attempt) {
        long d1 = static_cast<long>(jacobiBasis(k, m, kind, prec).size());
        long d2 = static_cast<long>(jacobiBasis(k, m, kind, prec + 5).size());
        if (d1 == d2) return d1;
        prec += 5;
    }
    throw PrecisionError("rank did not stabilize for J_{" + std::to_string(k) + "," +
                         std::to_string(m) + "}");
}

}  // namespace fjf
