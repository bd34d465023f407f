#include "fjf/qseries.hpp"

#include <algorithm>
#include <cmath>

namespace {
// smallest integer >= r
long ceilToLong(const fjf::Rat& r) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q.get_si();
}
}  // namespace

namespace fjf {

QSeries::QSeries(long expDenom, Rat prec) : expDenom_(expDenom), prec_(std::move(prec)) {
    if (expDenom_ <= 0) throw std::invalid_argument("expDenom must be positive");
}

QSeries QSeries::one(Rat prec, long expDenom) {
    QSeries s(expDenom, std::move(prec));
    if (s.prec_ > 0) s.coeffs_[0] = 1;
    return s;
}

QSeries QSeries::zero(Rat prec, long expDenom) { return QSeries(expDenom, std::move(prec)); }

QSeries QSeries::monomial(const Rat& coeff, const Rat& exponent, Rat prec, long expDenom) {
    QSeries s(expDenom, std::move(prec));
    if (coeff != 0 && exponent < s.prec_) s.coeffs_[s.scaleExp(exponent)] = coeff;
    return s;
}

long QSeries::scaleExp(const Rat& e) const {
    Rat scaled = e * expDenom_;
    if (scaled.get_den() != 1)
        throw std::invalid_argument("exponent " + ratToString(e) +
                                    " not representable over denominator " +
                                    std::to_string(expDenom_));
    if (!scaled.get_num().fits_slong_p())
        throw std::overflow_error("scaled exponent overflow");
    return scaled.get_num().get_si();
}

Rat QSeries::valuation() const {
    if (coeffs_.empty()) return prec_;
    return ratFrac(coeffs_.begin()->first, expDenom_);
}

Rat QSeries::coefficient(const Rat& exponent) const {
    if (exponent >= prec_)
        throw PrecisionError("coefficient at exponent " + ratToString(exponent) +
                             " beyond truncation order " + ratToString(prec_));
    auto it = coeffs_.find(scaleExp(exponent));
    return it == coeffs_.end() ? Rat(0) : it->second;
}

void QSeries::setCoefficient(const Rat& exponent, const Rat& value) {
    if (exponent >= prec_) return;
    long e = scaleExp(exponent);
    if (value == 0)
        coeffs_.erase(e);
    else
        coeffs_[e] = value;
}

QSeries QSeries::withExpDenom(long newDenom) const {
    if (newDenom == expDenom_) return *this;
    if (newDenom % expDenom_ != 0)
        throw std::invalid_argument("new denominator must be a multiple of the old one");
    long f = newDenom / expDenom_;
    QSeries out(newDenom, prec_);
    for (const auto& [e, c] : coeffs_) out.coeffs_[e * f] = c;
    return out;
}

QSeries QSeries::truncated(const Rat& newPrec) const {
    QSeries out(expDenom_, std::min(prec_, newPrec));
    for (const auto& [e, c] : coeffs_) {
        if (ratFrac(e, expDenom_) < out.prec_) out.coeffs_[e] = c;
    }
    return out;
}

void QSeries::dropBeyondPrec() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (ratFrac(it->first, expDenom_) >= prec_ || it->second == 0)
            it = coeffs_.erase(it);
        else
            ++it;
    }
}

QSeries QSeries::operator-() const {
    QSeries out(expDenom_, prec_);
    for (const auto& [e, c] : coeffs_) out.coeffs_[e] = -c;
    return out;
}

QSeries QSeries::operator+(const QSeries& o) const {
    long den = lcmLong(expDenom_, o.expDenom_);
    QSeries a = withExpDenom(den), b = o.withExpDenom(den);
    QSeries out(den, std::min(prec_, o.prec_));
    out.coeffs_ = std::move(a.coeffs_);
    for (const auto& [e, c] : b.coeffs_) {
        Rat& slot = out.coeffs_[e];
        slot += c;
        if (slot == 0) out.coeffs_.erase(e);
    }
    out.dropBeyondPrec();
    return out;
}

QSeries QSeries::operator-(const QSeries& o) const { return *this + (-o); }

QSeries QSeries::operator*(const QSeries& o) const {
    long den = lcmLong(expDenom_, o.expDenom_);
    QSeries a = withExpDenom(den), b = o.withExpDenom(den);
    // f known below Pa with valuation va, g below Pb with valuation vb:
    // the product is determined below min(Pa+vb, Pb+va).
    Rat precOut = std::min(prec_ + o.valuation(), o.prec_ + valuation());
    QSeries out(den, precOut);
    long precScaled = ceilToLong(precOut * den);  // e admissible iff e/den < precOut
    for (const auto& [ea, ca] : a.coeffs_) {
        for (const auto& [eb, cb] : b.coeffs_) {
            long e = ea + eb;
            if (e >= precScaled) continue;
            Rat& slot = out.coeffs_[e];
            slot += ca * cb;
            if (slot == 0) out.coeffs_.erase(e);
        }
    }
    return out;
}

QSeries QSeries::operator*(const Rat& c) const {
    QSeries out(expDenom_, prec_);
    if (c == 0) return out;
    for (const auto& [e, v] : coeffs_) out.coeffs_[e] = v * c;
    return out;
}

QSeries QSeries::inverse() const {
    if (coeffs_.empty()) throw std::domain_error("cannot invert the zero series");
    long vScaled = coeffs_.begin()->first;
    Rat v(vScaled, expDenom_);
    // unit part u = q^{-v} * this, known on [0, prec - v)
    Rat unitPrec = prec_ - v;
    long len = ceilToLong(unitPrec * expDenom_);
    if (len < 1) throw PrecisionError("series truncated to nothing; cannot invert");

    std::vector<Rat> u(static_cast<size_t>(len));
    for (const auto& [e, c] : coeffs_) {
        long i = e - vScaled;
        if (i < len) u[static_cast<size_t>(i)] = c;
    }
    std::vector<Rat> b(static_cast<size_t>(len));
    b[0] = 1 / u[0];
    for (long n = 1; n < len; ++n) {
        Rat acc(0);
        for (long j = 1; j <= n; ++j) {
            if (u[static_cast<size_t>(j)] != 0)
                acc += u[static_cast<size_t>(j)] * b[static_cast<size_t>(n - j)];
        }
        b[static_cast<size_t>(n)] = -acc / u[0];
    }
    // result = q^{-v} * (unit inverse), known on [-v, prec - 2v)
    QSeries out(expDenom_, prec_ - 2 * v);
    for (long n = 0; n < len; ++n) {
        if (b[static_cast<size_t>(n)] == 0) continue;
        long e = n - vScaled;
        if (ratFrac(e, expDenom_) < out.prec_) out.coeffs_[e] = b[static_cast<size_t>(n)];
    }
    return out;
}

QSeries QSeries::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    QSeries acc = QSeries::one(prec_ + (e > 0 ? (e - 1) : 0) * valuation(), expDenom_);
    // repeated multiplication keeps the precision bookkeeping exact
    QSeries base = *this;
    long n = e;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return acc;
}

bool QSeries::operator==(const QSeries& o) const {
    long den = lcmLong(expDenom_, o.expDenom_);
    QSeries a = withExpDenom(den), b = o.withExpDenom(den);
    return a.prec_ == b.prec_ && a.coeffs_ == b.coeffs_;
}

}  // namespace fjf
