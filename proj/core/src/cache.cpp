#include "fjf/cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fjf/generators.hpp"

namespace fjf {

namespace {
using nlohmann::json;

void fnvMix(uint64_t& h, const std::string& s) {
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
}

void mixQSeries(uint64_t& h, const QSeries& s) {
    fnvMix(h, std::to_string(s.expDenom()));
    for (const auto& [e, c] : s.scaledCoeffs()) {
        fnvMix(h, std::to_string(e));
        fnvMix(h, ratToString(c));
    }
}

void mixBivariate(uint64_t& h, const BivariateQExpansion& b) {
    fnvMix(h, std::to_string(b.qExpDenom()));
    fnvMix(h, std::to_string(b.zetaExpDenom()));
    for (const auto& [key, c] : b.scaledCoeffs()) {
        fnvMix(h, std::to_string(key.first));
        fnvMix(h, std::to_string(key.second));
        fnvMix(h, ratToString(c));
    }
}
}  // namespace

std::string generatorFingerprint() {
    static const std::string cached = [] {
        const Rat prec(6);
        uint64_t h = 1469598103934665603ULL;  // FNV offset basis
        mixQSeries(h, eta(prec));
        mixQSeries(h, eisenstein(4, prec));
        mixQSeries(h, eisenstein(6, prec));
        mixQSeries(h, discriminantDelta(prec));
        mixBivariate(h, thetaOdd(prec));
        mixBivariate(h, phi01(prec));
        mixBivariate(h, phiM21(prec));
        mixBivariate(h, phiM12(prec));
        char buf[20];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
        return std::string(buf);
    }();
    return cached;
}

std::string cacheFileName(long k, long m, SpaceKind kind, long prec) {
    return "basis_k" + std::to_string(k) + "_m" + std::to_string(m) + "_" + kind.name() +
           "_p" + std::to_string(prec) + ".fjc";
}

void saveBasis(const std::filesystem::path& dir, long k, long m, SpaceKind kind, long prec,
               const std::vector<JacobiFormQExp>& basis) {
    std::filesystem::create_directories(dir);
    json header = {{"schemaVersion", kCacheSchemaVersion},
                   {"k", k},
                   {"m", m},
                   {"kind", kind.name()},
                   {"prec", prec},
                   {"generatorFingerprint", generatorFingerprint()},
                   {"rows", basis.size()}};
    auto order = coefficientOrder(m, prec);

    std::filesystem::path target = dir / cacheFileName(k, m, kind, prec);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open cache file " + tmp.string());
        out << header.dump() << '\n';
        for (const auto& f : basis) {
            json row = json::array();
            for (const auto& [n, r] : order) row.push_back(ratToString(f.coefficient(n, r)));
            out << row.dump() << '\n';
        }
        if (!out) throw std::runtime_error("cache write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

std::optional<std::vector<JacobiFormQExp>> loadBasis(const std::filesystem::path& dir, long k,
                                                     long m, SpaceKind kind, long prec) {
    std::ifstream in(dir / cacheFileName(k, m, kind, prec));
    if (!in) return std::nullopt;
    std::string line;
    if (!std::getline(in, line)) return std::nullopt;
    json header = json::parse(line, nullptr, false);
    if (header.is_discarded()) return std::nullopt;
    if (header.value("schemaVersion", -1) != kCacheSchemaVersion) return std::nullopt;
    if (header.value("k", -1L) != k || header.value("m", -1L) != m ||
        header.value("prec", -1L) != prec || header.value("kind", std::string()) != kind.name())
        return std::nullopt;
    if (header.value("generatorFingerprint", std::string()) != generatorFingerprint())
        return std::nullopt;

    auto order = coefficientOrder(m, prec);
    std::vector<JacobiFormQExp> basis;
    size_t rows = header.value("rows", size_t{0});
    for (size_t i = 0; i < rows; ++i) {
        if (!std::getline(in, line)) return std::nullopt;
        json row = json::parse(line, nullptr, false);
        if (row.is_discarded() || !row.is_array() || row.size() != order.size())
            return std::nullopt;
        JacobiFormQExp f(k, m, prec);
        for (size_t j = 0; j < order.size(); ++j) {
            Rat v = ratFromString(row[j].get<std::string>());
            if (v != 0) f.setCoefficient(order[j].first, order[j].second, v);
        }
        basis.push_back(std::move(f));
    }
    return basis;
}

std::vector<JacobiFormQExp> cachedJacobiBasis(long k, long m, SpaceKind kind, long prec,
                                              const std::filesystem::path& dir) {
    if (dir.empty()) return jacobiBasis(k, m, kind, prec);
    if (auto hit = loadBasis(dir, k, m, kind, prec)) return *hit;
    auto basis = jacobiBasis(k, m, kind, prec);
    saveBasis(dir, k, m, kind, prec, basis);
    return basis;
}

}  // namespace fjf
