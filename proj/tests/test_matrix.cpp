#include <doctest.h>

#include <random>

#include "fjf/matrix.hpp"

using namespace fjf;

namespace {

// Independent elimination with a different pivot strategy (last nonzero row,
// right-to-left column sweep) so agreement is not an artifact of shared code.
long obliqueRank(std::vector<std::vector<Rat>> a) {
    if (a.empty()) return 0;
    size_t rows = a.size(), cols = a[0].size();
    std::vector<bool> used(rows, false);
    long rank = 0;
    for (size_t ci = cols; ci-- > 0;) {
        size_t p = rows;
        for (size_t r = rows; r-- > 0;) {
            if (!used[r] && a[r][ci] != 0) {
                p = r;
                break;
            }
        }
        if (p == rows) continue;
        used[p] = true;
        ++rank;
        for (size_t r = 0; r < rows; ++r) {
            if (r == p || a[r][ci] == 0) continue;
            Rat f = a[r][ci] / a[p][ci];
            for (size_t j = 0; j < cols; ++j) a[r][j] -= f * a[p][j];
        }
    }
    return rank;
}

}  // namespace

TEST_CASE("kernel dimension and vectors agree with an independent elimination") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 150; ++trial) {
        long R = 1 + static_cast<long>(rng() % 9);
        long C = 1 + static_cast<long>(rng() % 9);
        ExactMatrix m(R, C);
        std::vector<std::vector<Rat>> dense(static_cast<size_t>(R),
                                            std::vector<Rat>(static_cast<size_t>(C), Rat(0)));
        for (long i = 0; i < R; ++i)
            for (long j = 0; j < C; ++j) {
                if (rng() % 3 == 0) continue;
                long num = static_cast<long>(rng() % 11) - 5;
                long den = 1 + static_cast<long>(rng() % 4);
                Rat v = ratFrac(num, den);
                if (v != 0) {
                    m.set(i, j, v);
                    dense[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
                }
            }
        auto ker = exactKernel(m);
        CHECK(static_cast<long>(ker.size()) == C - obliqueRank(dense));
        CHECK(exactRank(m) == obliqueRank(dense));
        for (const auto& v : ker) {
            for (long i = 0; i < R; ++i) {
                Rat s(0);
                for (long j = 0; j < C; ++j)
                    s += dense[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                         v[static_cast<size_t>(j)];
                CHECK(s == 0);
            }
        }
    }
}

TEST_CASE("kernel vectors are integral, content-free, positive-leading") {
    ExactMatrix m(1, 3);
    m.set(0, 0, ratFrac(1, 2));
    m.set(0, 1, ratFrac(1, 3));
    m.set(0, 2, Rat(1));
    auto ker = exactKernel(m);
    REQUIRE(ker.size() == 2);
    for (const auto& v : ker) {
        Int content(0);
        bool seenNonzero = false;
        for (const auto& x : v) {
            CHECK(x.get_den() == 1);
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_num().get_mpz_t());
            if (!seenNonzero && x != 0) {
                CHECK(x > 0);
                seenNonzero = true;
            }
        }
        CHECK(content == 1);
    }
}

TEST_CASE("kernel of the zero and identity matrices") {
    ExactMatrix z(3, 4);
    CHECK(exactKernel(z).size() == 4);
    ExactMatrix id(3, 3);
    for (long i = 0; i < 3; ++i) id.set(i, i, Rat(1));
    CHECK(exactKernel(id).empty());
    CHECK(exactRank(id) == 3);
}

TEST_CASE("rational RREF is idempotent with sorted pivots") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        size_t R = 2 + rng() % 5, C = 2 + rng() % 5;
        std::vector<std::vector<Rat>> rows(R, std::vector<Rat>(C, Rat(0)));
        for (auto& row : rows)
            for (auto& x : row) x = Rat(static_cast<long>(rng() % 7) - 3);
        auto pivots = rrefRational(rows);
        CHECK(std::is_sorted(pivots.begin(), pivots.end()));
        auto again = rows;
        auto pivots2 = rrefRational(again);
        CHECK(pivots == pivots2);
        CHECK(rows == again);
        // pivot entries are 1 and alone in their column
        for (size_t i = 0; i < pivots.size(); ++i) {
            size_t c = static_cast<size_t>(pivots[i]);
            CHECK(rows[i][c] == 1);
            for (size_t r = 0; r < rows.size(); ++r)
                if (r != i) CHECK(rows[r][c] == 0);
        }
    }
}
