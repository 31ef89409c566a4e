#include "scldpc/cycle_check.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "scldpc/coupled_code.hpp"
#include "scldpc/lifting.hpp"
#include "test_data.hpp"

using namespace scldpc;

namespace {

BinaryMatrix identity(int n) {
    BinaryMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        m.set(i, i);
    }
    return m;
}

BinaryMatrix all_ones(int rows, int cols) {
    BinaryMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            m.set(r, c);
        }
    }
    return m;
}

BinaryMatrix random_binary(std::mt19937& gen, int max_dim = 12) {
    const int rows = 1 + static_cast<int>(gen() % max_dim);
    const int cols = 1 + static_cast<int>(gen() % max_dim);
    BinaryMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (gen() % 4 == 0) {
                m.set(r, c);
            }
        }
    }
    return m;
}

BinaryMatrix eq2_terminated(int coupling_length) {
    const auto code =
        build_coupled_code(testdata::eq2_matrix(), IndexSet::of({0, 1, 2, 3, 4, 5}));
    return terminated_pcm(code, coupling_length);
}

}  // namespace

TEST_CASE("has_four_cycle basics") {
    CHECK_FALSE(has_four_cycle(identity(5)));
    CHECK(has_four_cycle(all_ones(2, 2)));
    CHECK_FALSE(has_four_cycle(eq2_terminated(12)));
}

TEST_CASE("girth basics") {
    CHECK(girth(identity(4)).kind == GirthResult::Kind::Infinite);

    const auto g22 = girth(all_ones(2, 2));
    CHECK(g22.kind == GirthResult::Kind::Exact);
    CHECK(g22.value == 4);

    const auto g33 = girth(all_ones(3, 3));
    CHECK(g33.kind == GirthResult::Kind::Exact);
    CHECK(g33.value == 4);

    const auto gpcm = girth(eq2_terminated(12));
    CHECK(gpcm.kind == GirthResult::Kind::Exact);
    CHECK(gpcm.value == 6);
}

TEST_CASE("girth cap reports a lower bound") {
    // Two parallel length-8 column paths closing into a single 16-cycle.
    BinaryMatrix ring(8, 8);
    for (int i = 0; i < 8; ++i) {
        ring.set(i, i);
        ring.set(i, (i + 1) % 8);
    }
    const auto exact = girth(ring, 16);
    CHECK(exact.kind == GirthResult::Kind::Exact);
    CHECK(exact.value == 16);

    const auto capped = girth(ring, 12);
    CHECK(capped.kind == GirthResult::Kind::AtLeast);
    CHECK(capped.value == 14);
    CHECK(capped.is_at_least(6));
}

TEST_CASE("girth equals four exactly when a four-cycle exists") {
    std::mt19937 gen(1001);
    for (int trial = 0; trial < 200; ++trial) {
        const auto m = random_binary(gen);
        const auto g = girth(m);
        CHECK((g.kind == GirthResult::Kind::Exact && g.value == 4) == has_four_cycle(m));
    }
}

TEST_CASE("girth is invariant under row and column permutations") {
    std::mt19937 gen(77);
    for (int trial = 0; trial < 50; ++trial) {
        const auto m = random_binary(gen, 8);
        std::vector<int> rp(m.rows());
        std::vector<int> cp(m.cols());
        std::iota(rp.begin(), rp.end(), 0);
        std::iota(cp.begin(), cp.end(), 0);
        std::shuffle(rp.begin(), rp.end(), gen);
        std::shuffle(cp.begin(), cp.end(), gen);
        BinaryMatrix shuffled(m.rows(), m.cols());
        for (int r = 0; r < m.rows(); ++r) {
            for (std::int32_t c : m.row(r)) {
                shuffled.set(rp[r], cp[c]);
            }
        }
        const auto a = girth(m);
        const auto b = girth(shuffled);
        CHECK(a.kind == b.kind);
        if (a.kind != GirthResult::Kind::Infinite) {
            CHECK(a.value == b.value);
        }
    }
}

TEST_CASE("qc exponent girth-6 condition") {
    CHECK(qc_exponent_girth6(testdata::eq2_matrix(), 7));
    CHECK_FALSE(qc_exponent_girth6(ExponentMatrix::from_rows({{3, 3}, {3, 3}}), 5));
    CHECK(qc_exponent_girth6(testdata::eq2_matrix(), 1000));
    CHECK_THROWS_AS(qc_exponent_girth6(testdata::eq2_matrix(), 1), std::invalid_argument);
}

TEST_CASE("qc condition matches the lifted girth") {
    std::mt19937 gen(31337);
    for (int trial = 0; trial < 80; ++trial) {
        const int p = 1 + static_cast<int>(gen() % 3);
        const int q = 1 + static_cast<int>(gen() % 4);
        const int n = 2 + static_cast<int>(gen() % 6);
        std::vector<int> flat(static_cast<std::size_t>(p) * q);
        for (int& v : flat) {
            v = static_cast<int>(gen() % 8);
        }
        const ExponentMatrix e(p, q, flat);
        CHECK(qc_exponent_girth6(e, n) == girth(cpm_lift(e, n)).is_at_least(6));
    }
}
