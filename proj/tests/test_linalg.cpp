#include <catch2/catch_amalgamated.hpp>

#include "gentle/generators.hpp"
#include "gentle/int_matrix.hpp"

using namespace gentle;

namespace {

BigInt det_cofactor(const IntMatrix& m, std::vector<int> rows, std::vector<int> cols) {
    if (rows.empty()) return 1;
    BigInt acc = 0;
    int sign = 1;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto sub_rows = rows;
        sub_rows.erase(sub_rows.begin() + i);
        auto sub_cols = std::vector<int>(cols.begin() + 1, cols.end());
        acc += sign * m.at(rows[i], cols[0]) * det_cofactor(m, sub_rows, sub_cols);
        sign = -sign;
    }
    return acc;
}

// rank as the size of the largest nonzero minor
int rank_by_minors(const IntMatrix& m) {
    int best = 0;
    std::vector<int> rows(m.rows), cols(m.cols);
    for (int i = 0; i < m.rows; ++i) rows[i] = i;
    for (int j = 0; j < m.cols; ++j) cols[j] = j;
    for (int k = std::min(m.rows, m.cols); k >= 1; --k) {
        std::vector<bool> rsel(m.rows, false), csel(m.cols, false);
        std::fill(rsel.begin(), rsel.begin() + k, true);
        do {
            std::vector<int> rs;
            for (int i = 0; i < m.rows; ++i)
                if (rsel[i]) rs.push_back(i);
            std::vector<bool> cs_mask(m.cols, false);
            std::fill(cs_mask.begin(), cs_mask.begin() + k, true);
            do {
                std::vector<int> cs;
                for (int j = 0; j < m.cols; ++j)
                    if (cs_mask[j]) cs.push_back(j);
                if (det_cofactor(m, rs, cs) != 0) return k;
            } while (std::prev_permutation(cs_mask.begin(), cs_mask.end()));
        } while (std::prev_permutation(rsel.begin(), rsel.end()));
    }
    return best;
}

IntMatrix random_matrix(Rng& rng, int rows, int cols, int lo, int hi) {
    IntMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = rng.uniform(lo, hi);
    return m;
}

}  // namespace

TEST_CASE("rational rank basics", "[linalg]") {
    REQUIRE(rank_rational(IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == 3);
    REQUIRE(rank_rational(IntMatrix{{1, 1}, {1, 1}}) == 1);
    REQUIRE(rank_rational(IntMatrix{{1, -1}, {-1, 1}}) == 1);
    REQUIRE(rank_rational(IntMatrix(0, 5)) == 0);
    REQUIRE(rank_rational(IntMatrix(4, 0)) == 0);
}

TEST_CASE("mod-p rank basics", "[linalg]") {
    REQUIRE(rank_mod_p(IntMatrix{{2}}, 2) == 0);
    REQUIRE(rank_mod_p(IntMatrix{{1, 1}, {1, -1}}, 2) == 1);
    REQUIRE(rank_mod_p(IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3) == 3);
    REQUIRE_THROWS_AS(rank_mod_p(IntMatrix{{1}}, 4), std::invalid_argument);
    REQUIRE_THROWS_AS(rank_mod_p(IntMatrix{{1}}, 1), std::invalid_argument);
}

TEST_CASE("rank agrees with the cofactor-minor oracle", "[linalg]") {
    Rng rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        int rows = static_cast<int>(rng.uniform(1, 5));
        int cols = static_cast<int>(rng.uniform(1, 5));
        IntMatrix m = random_matrix(rng, rows, cols, -3, 3);
        REQUIRE(rank_rational(m) == rank_by_minors(m));
    }
}

TEST_CASE("mod-p rank never exceeds the rational rank", "[linalg]") {
    Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix m = random_matrix(rng, static_cast<int>(rng.uniform(1, 6)),
                                    static_cast<int>(rng.uniform(1, 6)), -4, 4);
        int rq = rank_rational(m);
        for (long long p : {2, 3, 5}) REQUIRE(rank_mod_p(m, p) <= rq);
    }
}

TEST_CASE("rank is invariant under transpose and row permutation", "[linalg]") {
    Rng rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        IntMatrix m = random_matrix(rng, static_cast<int>(rng.uniform(1, 6)),
                                    static_cast<int>(rng.uniform(1, 6)), -2, 2);
        REQUIRE(rank_rational(m) == rank_rational(m.transposed()));
        REQUIRE(rank_mod_p(m, 3) == rank_mod_p(m.transposed(), 3));

        IntMatrix perm = m;
        if (perm.rows > 1)
            for (int c = 0; c < perm.cols; ++c) std::swap(perm.at(0, c), perm.at(perm.rows - 1, c));
        REQUIRE(rank_rational(m) == rank_rational(perm));
        REQUIRE(rank_mod_p(m, 2) == rank_mod_p(perm, 2));
    }
}

TEST_CASE("Bareiss handles larger entries exactly", "[linalg]") {
    // Hilbert-like integer matrix with huge determinant growth
    IntMatrix m(6, 6);
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) m.at(r, c) = BigInt(1) << (r * c % 13);
    REQUIRE(rank_rational(m) == rank_by_minors(m));
}

TEST_CASE("matrix multiply shape checks", "[linalg]") {
    IntMatrix a{{1, 2}, {3, 4}};
    IntMatrix b{{1, 0}, {0, 1}};
    REQUIRE(multiply(a, b).at(1, 0) == 3);
    REQUIRE_THROWS_AS(multiply(a, IntMatrix(3, 2)), std::invalid_argument);
}
