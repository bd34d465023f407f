// Command-line driver: dimensions of Jacobi-form spaces, truncated
// involution-conditioned spaces, Gritsenko series, level raising, and the
// numeric diagnostic checks.
#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fjf/analysis.hpp"
#include "fjf/cache.hpp"
#include "fjf/operators.hpp"

using nlohmann::json;
using namespace fjf;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitPrecision = 3;
constexpr int kExitInvariant = 4;

struct CommonOpts {
    std::string format = "tsv";
    std::string cacheDir;
    int threads = 1;
};

void addCommon(CLI::App* app, CommonOpts& c) {
    app->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"tsv", "json"}));
    app->add_option("--cache-dir", c.cacheDir, "Basis cache directory");
    app->add_option("--threads", c.threads, "Worker thread count")->check(CLI::PositiveNumber);
}

std::filesystem::path cachePath(const CommonOpts& c) {
    if (!c.cacheDir.empty()) return c.cacheDir;
    if (const char* env = std::getenv("FJF_CACHE_DIR")) return env;
    return {};
}

SpaceKind parseKind(const std::string& s) {
    if (s == "weak") return SpaceKind::weak();
    if (s == "hol") return SpaceKind::holomorphic();
    if (s == "cusp") return SpaceKind::cusp();
    if (s.rfind("order:", 0) == 0) return SpaceKind::order(std::stol(s.substr(6)));
    throw CLI::ValidationError("--kind", "expected weak|hol|cusp|order:NU");
}

int parseEps(const std::string& s) {
    if (s == "+1" || s == "1") return 1;
    if (s == "-1") return -1;
    throw CLI::ValidationError("eps", "expected +1 or -1");
}

void emit(const CommonOpts& c, const std::string& tsv, const json& j) {
    if (c.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << tsv;
}

/// Cusp basis of J_{k,N} with enough precision to lift to depth d.
std::vector<JacobiFormQExp> cuspBasisForLift(long k, long N, long d, long outPrec,
                                             const std::filesystem::path& cache) {
    long prec = std::max(jacobiSufficientPrec(k, N), d * (outPrec - 1) + 1);
    return cachedJacobiBasis(k, N, SpaceKind::cusp(), prec, cache);
}

long mdimOnce(long k, long N, int eps, long d) {
    return involutionSolutionSpace(k, N, eps, d, d + 2).dimension;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Truncated Fourier-Jacobi series and Jacobi-form space computations"};
    app.require_subcommand(1);
    CommonOpts common;

    // jdim
    long jK = 0, jM = 0, jPrec = 0;
    std::string jKind = "hol";
    auto* jdim = app.add_subcommand("jdim", "Dimension of a Jacobi-form space");
    jdim->add_option("k", jK, "weight")->required();
    jdim->add_option("m", jM, "index")->required();
    jdim->add_option("--kind", jKind, "weak|hol|cusp|order:NU");
    jdim->add_option("--prec", jPrec, "truncation override");
    addCommon(jdim, common);

    // mdim
    long mK = 0, mN = 0, mD = -1;
    std::string mEps;
    auto* mdim = app.add_subcommand("mdim", "Truncated involution-conditioned dimension");
    mdim->add_option("k", mK)->required();
    mdim->add_option("N", mN)->required();
    mdim->add_option("eps", mEps)->required();
    mdim->add_option("--d", mD, "truncation depth (default floor(Nk/6)+3)");
    addCommon(mdim, common);

    // table
    long tK = 0, tN = 0, tDmax = 0;
    std::string tEps;
    auto* table = app.add_subcommand("table", "Dimension per depth with monotonicity flags");
    table->add_option("k", tK)->required();
    table->add_option("N", tN)->required();
    table->add_option("eps", tEps)->required();
    table->add_option("--dmax", tDmax)->required();
    addCommon(table, common);

    // grit
    long gK = 0, gN = 0, gD = 4;
    auto* grit = app.add_subcommand("grit", "Gritsenko series of the cusp basis");
    grit->add_option("k", gK)->required();
    grit->add_option("N", gN)->required();
    grit->add_option("--d", gD, "depth");
    addCommon(grit, common);

    // check
    auto* check = app.add_subcommand("check", "Residual and inequality reports");
    check->require_subcommand(1);
    long cK = 0, cN = 1, cM = 0, cD = 4, cTmax = 50;
    std::string cEps = "+1", cKind = "cusp", cSigma = "1,0,0,1";
    double cSlack = 1.05;
    auto* cInv = check->add_subcommand("involution", "Involution residuals of solution bases");
    cInv->add_option("k", cK)->required();
    cInv->add_option("N", cN)->required();
    cInv->add_option("eps", cEps)->required();
    cInv->add_option("--d", cD);
    addCommon(cInv, common);
    auto* cGam = check->add_subcommand("gamma0", "Index-symmetry residuals of lifts");
    cGam->add_option("k", cK)->required();
    cGam->add_option("N", cN)->required();
    cGam->add_option("--d", cD);
    cGam->add_option("--sigma", cSigma, "a,b,c,d entries");
    addCommon(cGam, common);
    auto* cAoki = check->add_subcommand("aoki", "Vanishing-order inequality per basis form");
    cAoki->add_option("k", cK)->required();
    cAoki->add_option("m", cM)->required();
    cAoki->add_option("--kind", cKind);
    cAoki->add_option("--tmax", cTmax);
    addCommon(cAoki, common);
    auto* cHB = check->add_subcommand("heckebound", "Coefficient bound per cusp basis form");
    cHB->add_option("k", cK)->required();
    cHB->add_option("m", cM)->required();
    cHB->add_option("--slack", cSlack);
    addCommon(cHB, common);

    // raise
    long rK = 0, rN = 0, rEll = 0, rD = 4;
    std::string rVariant;
    auto* raise = app.add_subcommand("raise", "Level raising of a Gritsenko series");
    raise->add_option("variant", rVariant)->required()
        ->check(CLI::IsMember({"eta", "theta", "thetaprime"}));
    raise->add_option("k", rK)->required();
    raise->add_option("N", rN)->required();
    raise->add_option("ell", rEll)->required();
    raise->add_option("--d", rD);
    addCommon(raise, common);

    // specialize
    long sK = 0, sN = 0, sM = 1, sVmax = 4;
    std::string sX = "0", sY = "0";
    auto* spec = app.add_subcommand("specialize", "Rational specialization of a lift part");
    spec->add_option("k", sK)->required();
    spec->add_option("N", sN)->required();
    spec->add_option("--x", sX, "slope, e.g. 1/2")->required();
    spec->add_option("--y", sY, "offset");
    spec->add_option("--m", sM, "part index");
    spec->add_option("--vmax", sVmax, "largest integer exponent");
    addCommon(spec, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        auto cache = cachePath(common);

        if (*jdim) {
            SpaceKind kind = parseKind(jKind);
            long dim;
            if (jPrec > 0)
                dim = static_cast<long>(cachedJacobiBasis(jK, jM, kind, jPrec, cache).size());
            else
                dim = jacobiDim(jK, jM, kind);
            emit(common, std::to_string(dim) + "\n",
                 {{"k", jK}, {"m", jM}, {"kind", kind.name()}, {"dim", dim}});
            return 0;
        }

        if (*mdim) {
            int eps = parseEps(mEps);
            long d = mD >= 0 ? mD : truncationThreshold(mK, mN) + 3;
            long dim = mdimOnce(mK, mN, eps, d);
            emit(common, std::to_string(dim) + "\n",
                 {{"k", mK}, {"N", mN}, {"eps", eps}, {"d", d}, {"dim", dim}});
            return 0;
        }

        if (*table) {
            int eps = parseEps(tEps);
            long from = truncationThreshold(tK, tN);
            std::string tsv = "d\tdim\tmonotoneFrom\n";
            json rows = json::array();
            long prev = -1;
            for (long d = 0; d <= tDmax; ++d) {
                long dim = mdimOnce(tK, tN, eps, d);
                bool mono = d > from && prev >= 0 ? dim <= prev : d >= from;
                tsv += std::to_string(d) + "\t" + std::to_string(dim) + "\t" +
                       (d >= from ? (mono ? "true" : "false") : "-") + "\n";
                rows.push_back({{"d", d}, {"dim", dim}, {"monotone", d >= from && mono}});
                prev = dim;
            }
            emit(common, tsv,
                 {{"k", tK}, {"N", tN}, {"eps", eps}, {"monotoneFrom", from}, {"rows", rows}});
            return 0;
        }

        if (*grit) {
            long outPrec = gD + 2;
            auto basis = cuspBasisForLift(gK, gN, gD, outPrec, cache);
            int eps = gK % 2 == 0 ? 1 : -1;  // lifts land in the (-1)^k eigenspace
            std::string tsv = "form\tinvolutionResiduals\tsymmetryResiduals\tpairsChecked\n";
            json rows = json::array();
            bool allClean = true;
            GroupElement sigma(1, gN, 0, 1, gN);
            for (size_t i = 0; i < basis.size(); ++i) {
                auto lift = gritsenkoFJ(basis[i], gD, outPrec);
                auto res = frickeInvolutionResiduals(lift, eps);
                auto rep = gamma0SymmetryResiduals(lift, sigma);
                allClean = allClean && res.empty() && rep.residuals.empty();
                tsv += std::to_string(i) + "\t" + std::to_string(res.size()) + "\t" +
                       std::to_string(rep.residuals.size()) + "\t" +
                       std::to_string(rep.pairsChecked) + "\n";
                rows.push_back({{"form", i},
                                {"involutionResiduals", res.size()},
                                {"symmetryResiduals", rep.residuals.size()},
                                {"pairsChecked", rep.pairsChecked},
                                {"pairsSkipped", rep.pairsSkipped}});
            }
            emit(common, tsv,
                 {{"k", gK}, {"N", gN}, {"d", gD}, {"eps", eps}, {"rows", rows}});
            return allClean ? 0 : kExitInvariant;
        }

        if (*cInv) {
            int eps = parseEps(cEps);
            auto sol = involutionSolutionSpace(cK, cN, eps, cD, cD + 2);
            size_t bad = 0;
            for (size_t i = 0; i < sol.coordinateBasis.size(); ++i) {
                auto f = sol.materialize(i, cK, cN);
                bad += frickeInvolutionResiduals(f, eps).empty() ? 0 : 1;
            }
            std::string tsv = "dim\t" + std::to_string(sol.dimension) + "\nviolations\t" +
                              std::to_string(bad) + "\n";
            emit(common, tsv,
                 {{"k", cK}, {"N", cN}, {"eps", eps}, {"d", cD},
                  {"dim", sol.dimension}, {"violations", bad}});
            return bad == 0 ? 0 : kExitInvariant;
        }

        if (*cGam) {
            long a, b, c2, d2;
            if (std::sscanf(cSigma.c_str(), "%ld,%ld,%ld,%ld", &a, &b, &c2, &d2) != 4)
                throw CLI::ValidationError("--sigma", "expected a,b,c,d");
            GroupElement sigma(a, b, c2, d2, cN);
            long outPrec = cD + 2;
            auto basis = cuspBasisForLift(cK, cN, cD, outPrec, cache);
            std::string tsv = "form\tresiduals\tpairsChecked\tpairsSkipped\n";
            json rows = json::array();
            bool clean = true;
            for (size_t i = 0; i < basis.size(); ++i) {
                auto rep = gamma0SymmetryResiduals(gritsenkoFJ(basis[i], cD, outPrec), sigma);
                clean = clean && rep.residuals.empty();
                tsv += std::to_string(i) + "\t" + std::to_string(rep.residuals.size()) + "\t" +
                       std::to_string(rep.pairsChecked) + "\t" +
                       std::to_string(rep.pairsSkipped) + "\n";
                json residuals = json::array();
                for (const auto& r : rep.residuals)
                    residuals.push_back({{"n", r.t.n}, {"r", r.t.r}, {"m", r.t.m},
                                         {"residual", ratToString(r.residual)}});
                rows.push_back({{"form", i}, {"residuals", residuals},
                                {"pairsChecked", rep.pairsChecked},
                                {"pairsSkipped", rep.pairsSkipped}});
            }
            emit(common, tsv, {{"k", cK}, {"N", cN}, {"d", cD}, {"rows", rows}});
            return clean ? 0 : kExitInvariant;
        }

        if (*cAoki) {
            auto basis = cachedJacobiBasis(cK, cM, parseKind(cKind),
                                           jacobiSufficientPrec(cK, cM), cache);
            std::string tsv = "form\tlhs\trhs\tpass\n";
            json rows = json::array();
            bool allPass = true;
            for (size_t i = 0; i < basis.size(); ++i) {
                auto rep = aokiInequalityCheck(basis[i], cTmax);
                allPass = allPass && rep.pass;
                tsv += std::to_string(i) + "\t" + ratToString(rep.lhs) + "\t" +
                       ratToString(rep.rhs) + "\t" + (rep.pass ? "true" : "false") + "\n";
                rows.push_back({{"form", i}, {"lhs", ratToString(rep.lhs)},
                                {"rhs", ratToString(rep.rhs)}, {"pass", rep.pass},
                                {"tSatisfying", rep.tSatisfying}});
            }
            emit(common, tsv, {{"k", cK}, {"m", cM}, {"tMax", cTmax}, {"rows", rows}});
            return allPass ? 0 : kExitInvariant;
        }

        if (*cHB) {
            auto basis = cachedJacobiBasis(cK, cM, SpaceKind::cusp(),
                                           jacobiSufficientPrec(cK, cM), cache);
            std::string tsv = "form\theckeBound\tpass\n";
            json rows = json::array();
            bool allPass = true;
            for (size_t i = 0; i < basis.size(); ++i) {
                double hb = heckeBoundEstimate(basis[i]);
                bool pass = coefficientBoundCheck(basis[i], hb, cSlack);
                allPass = allPass && pass;
                tsv += std::to_string(i) + "\t" + std::to_string(hb) + "\t" +
                       (pass ? "true" : "false") + "\n";
                rows.push_back({{"form", i}, {"heckeBound", hb}, {"pass", pass}});
            }
            emit(common, tsv, {{"k", cK}, {"m", cM}, {"slack", cSlack}, {"rows", rows}});
            return allPass ? 0 : kExitInvariant;
        }

        if (*raise) {
            RaiseVariant variant = rVariant == "eta"      ? RaiseVariant::Eta
                                   : rVariant == "theta"  ? RaiseVariant::Theta
                                                          : RaiseVariant::ThetaPrime;
            long outPrec = rEll * (rD + 2);  // headroom for the V_ell precision loss
            auto basis = cuspBasisForLift(rK, rN, rD, outPrec, cache);
            if (basis.empty()) throw std::invalid_argument("no cusp forms to lift");
            auto lift = gritsenkoFJ(basis.front(), rD, outPrec);
            auto raised = levelRaise(lift, rEll, variant);
            std::string tsv = "part\tindex\tterms\n";
            json rows = json::array();
            for (long j = 0; j <= raised.depth(); ++j) {
                tsv += std::to_string(j) + "\t" + std::to_string(raised.part(j).index()) +
                       "\t" + std::to_string(raised.part(j).coeffs().size()) + "\n";
                rows.push_back({{"part", j}, {"index", raised.part(j).index()},
                                {"terms", raised.part(j).coeffs().size()}});
            }
            json out = {{"k", rK}, {"N", rN}, {"ell", rEll}, {"variant", rVariant},
                        {"level", raised.level()}, {"rows", rows}};
            int eps = rK % 2 == 0 ? 1 : -1;
            auto compat = thetaCompatibilityCheck(lift, rEll, eps);
            std::string compatStr = compat == CompatResult::Pass   ? "pass"
                                    : compat == CompatResult::Fail ? "fail"
                                                                   : "precondition";
            tsv += "compatibility\t" + compatStr + "\n";
            out["compatibility"] = compatStr;
            emit(common, tsv, out);
            return compat == CompatResult::Pass ? 0 : kExitInvariant;
        }

        if (*spec) {
            SpecializationDatum datum(ratFromString(sX), ratFromString(sY), sN);
            // part prec must cover every n reachable below vMax
            long partPrec =
                sVmax + 2 * static_cast<long>(std::sqrt(double(sN * sM * sVmax))) + sN * sM + 3;
            long outPrec = std::max(sM + 2, partPrec);
            auto basis = cuspBasisForLift(sK, sN, std::max(sM, 1L), outPrec, cache);
            if (basis.empty()) throw std::invalid_argument("no cusp forms to lift");
            auto lift = gritsenkoFJ(basis.front(), std::max(sM, 1L), outPrec);
            auto fm = specialize(lift, datum, sM, sVmax);
            std::string tsv = "scaledV\tlambdaSize\tre\tim\n";
            json rows = json::array();
            for (const auto& [w, a] : fm.coeffs) {
                tsv += std::to_string(w) + "\t" + std::to_string(fm.lambdaSizes.at(w)) + "\t" +
                       std::to_string(a.real()) + "\t" + std::to_string(a.imag()) + "\n";
                rows.push_back({{"scaledV", w}, {"lambdaSize", fm.lambdaSizes.at(w)},
                                {"re", a.real()}, {"im", a.imag()}});
            }
            emit(common, tsv,
                 {{"k", sK}, {"N", sN}, {"m", sM}, {"denomSq", fm.denomSq}, {"rows", rows}});
            return 0;
        }
    } catch (const PrecisionError& e) {
        std::cerr << "precision: " << e.what() << "\n";
        return kExitPrecision;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
