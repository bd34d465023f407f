#include "fjf/bivariate.hpp"

namespace fjf {

namespace {
long ceilToLong(const Rat& r) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q.get_si();
}

long scaleExact(const Rat& e, long den, const char* what) {
    Rat scaled = e * den;
    if (scaled.get_den() != 1)
        throw std::invalid_argument(std::string(what) + " exponent " + ratToString(e) +
                                    " not representable over denominator " + std::to_string(den));
    return scaled.get_num().get_si();
}
}  // namespace

BivariateQExpansion::BivariateQExpansion(long qDen, long zDen, Rat qPrec)
    : qDen_(qDen), zDen_(zDen), qPrec_(std::move(qPrec)) {
    if (qDen_ <= 0 || zDen_ <= 0) throw std::invalid_argument("exponent denominators must be positive");
}

BivariateQExpansion BivariateQExpansion::zero(Rat qPrec, long qDen, long zDen) {
    return BivariateQExpansion(qDen, zDen, std::move(qPrec));
}

BivariateQExpansion BivariateQExpansion::fromQSeries(const QSeries& s, long zDen) {
    BivariateQExpansion out(s.expDenom(), zDen, s.prec());
    for (const auto& [e, c] : s.scaledCoeffs()) out.coeffs_[{e, 0}] = c;
    return out;
}

long BivariateQExpansion::scaleQ(const Rat& e) const { return scaleExact(e, qDen_, "q"); }
long BivariateQExpansion::scaleZ(const Rat& e) const { return scaleExact(e, zDen_, "zeta"); }

Rat BivariateQExpansion::qValuation() const {
    if (coeffs_.empty()) return qPrec_;
    return ratFrac(coeffs_.begin()->first.first, qDen_);
}

Rat BivariateQExpansion::coefficient(const Rat& qExp, const Rat& zExp) const {
    if (qExp >= qPrec_)
        throw PrecisionError("coefficient at q-exponent " + ratToString(qExp) +
                             " beyond truncation order " + ratToString(qPrec_));
    auto it = coeffs_.find({scaleQ(qExp), scaleZ(zExp)});
    return it == coeffs_.end() ? Rat(0) : it->second;
}

void BivariateQExpansion::setCoefficient(const Rat& qExp, const Rat& zExp, const Rat& value) {
    if (qExp >= qPrec_) return;
    Key k{scaleQ(qExp), scaleZ(zExp)};
    if (value == 0)
        coeffs_.erase(k);
    else
        coeffs_[k] = value;
}

BivariateQExpansion BivariateQExpansion::withDenoms(long newQDen, long newZDen) const {
    if (newQDen == qDen_ && newZDen == zDen_) return *this;
    if (newQDen % qDen_ != 0 || newZDen % zDen_ != 0)
        throw std::invalid_argument("new denominators must be multiples of the old ones");
    long fq = newQDen / qDen_, fz = newZDen / zDen_;
    BivariateQExpansion out(newQDen, newZDen, qPrec_);
    for (const auto& [k, c] : coeffs_) out.coeffs_[{k.first * fq, k.second * fz}] = c;
    return out;
}

BivariateQExpansion BivariateQExpansion::truncated(const Rat& newQPrec) const {
    BivariateQExpansion out(qDen_, zDen_, std::min(qPrec_, newQPrec));
    long bound = ceilToLong(out.qPrec_ * qDen_);
    for (const auto& [k, c] : coeffs_) {
        if (k.first < bound) out.coeffs_[k] = c;
    }
    return out;
}

BivariateQExpansion BivariateQExpansion::zetaScaled(long scale) const {
    BivariateQExpansion out(qDen_, zDen_, qPrec_);
    for (const auto& [k, c] : coeffs_) out.coeffs_[{k.first, k.second * scale}] = c;
    return out;
}

QSeries BivariateQExpansion::atZetaZero() const {
    QSeries out = QSeries::zero(qPrec_, qDen_);
    for (const auto& [k, c] : coeffs_) {
        Rat e(k.first, qDen_);
        out.setCoefficient(e, out.coefficient(e) + c);
    }
    return out;
}

BivariateQExpansion BivariateQExpansion::operator-() const {
    BivariateQExpansion out(qDen_, zDen_, qPrec_);
    for (const auto& [k, c] : coeffs_) out.coeffs_[k] = -c;
    return out;
}

BivariateQExpansion BivariateQExpansion::operator+(const BivariateQExpansion& o) const {
    long qd = lcmLong(qDen_, o.qDen_), zd = lcmLong(zDen_, o.zDen_);
    BivariateQExpansion a = withDenoms(qd, zd), b = o.withDenoms(qd, zd);
    BivariateQExpansion out(qd, zd, std::min(qPrec_, o.qPrec_));
    long bound = ceilToLong(out.qPrec_ * qd);
    for (const auto& [k, c] : a.coeffs_)
        if (k.first < bound) out.coeffs_[k] = c;
    for (const auto& [k, c] : b.coeffs_) {
        if (k.first >= bound) continue;
        Rat& slot = out.coeffs_[k];
        slot += c;
        if (slot == 0) out.coeffs_.erase(k);
    }
    return out;
}

BivariateQExpansion BivariateQExpansion::operator-(const BivariateQExpansion& o) const {
    return *this + (-o);
}

BivariateQExpansion BivariateQExpansion::operator*(const BivariateQExpansion& o) const {
    long qd = lcmLong(qDen_, o.qDen_), zd = lcmLong(zDen_, o.zDen_);
    BivariateQExpansion a = withDenoms(qd, zd), b = o.withDenoms(qd, zd);
    Rat precOut = std::min(qPrec_ + o.qValuation(), o.qPrec_ + qValuation());
    BivariateQExpansion out(qd, zd, precOut);
    long bound = ceilToLong(precOut * qd);
    for (const auto& [ka, ca] : a.coeffs_) {
        for (const auto& [kb, cb] : b.coeffs_) {
            long qe = ka.first + kb.first;
            if (qe >= bound) continue;
            Key k{qe, ka.second + kb.second};
            Rat& slot = out.coeffs_[k];
            slot += ca * cb;
            if (slot == 0) out.coeffs_.erase(k);
        }
    }
    return out;
}

BivariateQExpansion BivariateQExpansion::operator*(const Rat& c) const {
    BivariateQExpansion out(qDen_, zDen_, qPrec_);
    if (c == 0) return out;
    for (const auto& [k, v] : coeffs_) out.coeffs_[k] = v * c;
    return out;
}

BivariateQExpansion BivariateQExpansion::operator*(const QSeries& s) const {
    return *this * fromQSeries(s, zDen_);
}

bool BivariateQExpansion::operator==(const BivariateQExpansion& o) const {
    long qd = lcmLong(qDen_, o.qDen_), zd = lcmLong(zDen_, o.zDen_);
    BivariateQExpansion a = withDenoms(qd, zd), b = o.withDenoms(qd, zd);
    return a.qPrec_ == b.qPrec_ && a.coeffs_ == b.coeffs_;
}

}  // namespace fjf
