// Acceptance suite: one numbered criterion per function, each printing a
// single PASS/FAIL line. Run all with no arguments or one with its number.

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "scldpc/alist.hpp"
#include "scldpc/coupled_code.hpp"
#include "scldpc/cycle_check.hpp"
#include "scldpc/exponent_matrix.hpp"
#include "scldpc/good_sequence.hpp"
#include "scldpc/lifting.hpp"
#include "scldpc/simulator.hpp"
#include "test_data.hpp"

using namespace scldpc;

namespace {

struct Checker {
    int failures = 0;
    std::string detail;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            ++failures;
            detail += "\n    failed: " + what;
        }
    }
};

ExponentMatrix random_matrix(std::mt19937& gen, int max_p, int max_q, int max_e) {
    const int p = 1 + static_cast<int>(gen() % max_p);
    const int q = 1 + static_cast<int>(gen() % max_q);
    std::vector<int> flat(static_cast<std::size_t>(p) * q);
    for (int& v : flat) {
        v = static_cast<int>(gen() % (max_e + 1));
    }
    return ExponentMatrix(p, q, std::move(flat));
}

IndexSet interval_for(const ExponentMatrix& e) {
    const auto values = soe(e);
    std::vector<int> indices;
    for (int v = values.front(); v <= values.back(); ++v) {
        indices.push_back(v);
    }
    return IndexSet::of(indices);
}

bool is_interval(const IndexSet& set) {
    return set.at(set.width()) - set.at(0) == set.width();
}

bool oracle_matches(const ExponentMatrix& e, const IndexSet& set) {
    const auto code = build_coupled_code(e, set);
    const auto h = terminated_pcm(code, 2 * (set.width() + 1));
    return h_is_four_cycle_free(e, set) == !has_four_cycle(h);
}

// C1: every published table row passes the predicate with the stated MOE.
Checker criterion1() {
    Checker c;
    for (const auto& row : testdata::coupling_width_table()) {
        const std::string tag = "(" + std::to_string(row.p) + "," + std::to_string(row.q) + ")";
        c.expect(row.sequence.size() == static_cast<std::size_t>(row.p + row.q - 1),
                 tag + " length");
        c.expect(is_good_sequence(row.sequence, row.p, row.q), tag + " goodness");
        c.expect(moe(row.sequence) == row.w3, tag + " moe == w3");
    }
    return c;
}

// C2: exact minimum MOE for the small cases, with failure below it.
Checker criterion2() {
    Checker c;
    const std::vector<std::array<int, 3>> cases = {
        {2, 3, 1}, {2, 4, 2}, {2, 5, 2}, {2, 6, 3}, {3, 4, 2}, {3, 5, 2}, {3, 6, 3},
    };
    for (const auto& [p, q, expected] : cases) {
        const std::string tag = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
        const auto found = find_min_moe(p, q, 10);
        c.expect(found.has_value(), tag + " search succeeds");
        if (found) {
            c.expect(found->w == expected, tag + " minimum w == " + std::to_string(expected));
            c.expect(is_good_sequence(found->sequence, p, q), tag + " sequence is good");
        }
        c.expect(!generate_good_sequence(p, q, expected - 1).has_value(),
                 tag + " absent at w-1");
    }
    return c;
}

// C3: the first worked example end to end.
Checker criterion3() {
    Checker c;
    const auto e = testdata::eq2_matrix();
    c.expect(is_four_cycle_free(e), "matrix is 4-cycle free");

    const std::vector<BinaryMatrix> displayed = {
        BinaryMatrix::from_ones(3, 4, {{0, 1}, {1, 3}, {2, 1}}),          // value 0
        BinaryMatrix::from_ones(3, 4, {{0, 2}}),                          // value 1
        BinaryMatrix(3, 4),                                               // value 2
        BinaryMatrix::from_ones(3, 4, {{0, 0}, {0, 3}, {1, 1}, {1, 2}}),  // value 3
        BinaryMatrix::from_ones(3, 4, {{1, 0}, {2, 0}}),                  // value 4
        BinaryMatrix::from_ones(3, 4, {{2, 2}, {2, 3}}),                  // value 5
    };
    for (int value = 0; value <= 5; ++value) {
        c.expect(incidence_matrix(e, value) == displayed[value],
                 "incidence matrix of value " + std::to_string(value));
    }

    c.expect(qc_exponent_girth6(e, 7), "qc girth-6 condition at N = 7");
    const auto g = girth(cpm_lift(e, 7));
    c.expect(g.kind == GirthResult::Kind::Exact && g.value == 6, "lifted girth == 6");
    return c;
}

// C4: pattern criterion vs brute force on interval index sets.
Checker criterion4() {
    Checker c;
    std::mt19937 gen(40404);
    int disagreements = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto e = random_matrix(gen, 4, 8, 6);
        disagreements += !oracle_matches(e, interval_for(e));
    }
    c.expect(disagreements == 0,
             "zero disagreements, saw " + std::to_string(disagreements));
    return c;
}

// C5: pattern criterion vs brute force on non-interval index sets, plus the
// published counterexample instance.
Checker criterion5() {
    Checker c;
    std::mt19937 gen(50505);
    int disagreements = 0;
    int non_interval = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto e = random_matrix(gen, 4, 8, 6);
        auto indices = soe(e);
        for (int k = 0, extras = 1 + static_cast<int>(gen() % 3); k < extras; ++k) {
            indices.push_back(static_cast<int>(gen() % (e.max_entry() + 6)));
        }
        auto set = IndexSet::of(indices);
        if (is_interval(set)) {
            indices.push_back(set.at(set.width()) + 2);  // force a gap
            set = IndexSet::of(indices);
        }
        non_interval += !is_interval(set);
        disagreements += !oracle_matches(e, set);
    }
    c.expect(non_interval == 1000, "every trial used a non-interval set");
    c.expect(disagreements == 0,
             "zero disagreements, saw " + std::to_string(disagreements));

    const auto e = testdata::remark_matrix();
    const auto set = IndexSet::of(testdata::remark_index_set());
    c.expect(h_is_four_cycle_free(e, set), "counterexample: H(E) is 4-cycle free");
    c.expect(!is_four_cycle_free(e), "counterexample: E itself is not 4-cycle free");
    const auto h = terminated_pcm(build_coupled_code(e, set), 2 * (set.width() + 1));
    c.expect(!has_four_cycle(h), "counterexample: oracle finds no 4-cycle in the PCM");
    return c;
}

// C6: baseline construction reaches the published w2 column.
Checker criterion6() {
    Checker c;
    for (const auto& row : testdata::coupling_width_table()) {
        const std::string tag = "(" + std::to_string(row.p) + "," + std::to_string(row.q) + ")";
        const auto k = karimi_matrix(row.p, row.q);
        c.expect(is_four_cycle_free(k), tag + " baseline is 4-cycle free");
        c.expect(k.max_entry() == row.w2, tag + " max entry == w2");
    }
    return c;
}

// C7: the published construction scale.
Checker criterion7() {
    Checker c;
    c.expect(design_rate(3, 6, 100, 3) == Rational(97, 200), "rate == 97/200");
    c.expect(design_rate(3, 6, 100, 3).to_decimal(3) == "0.485", "rate prints 0.485");

    const auto seq = GoodSequence::make(testdata::eq4_sequence(), 3, 6);
    const auto code = build_coupled_code(matrix_from_sequence(seq), IndexSet::of({0, 1, 2, 3}));
    const auto base = terminated_pcm(code, 100);
    c.expect(base.rows() == 309 && base.cols() == 600, "base PCM is 309 x 600");

    const auto lifted_code = random_apm_assignment(base, 100, 20240501, 20);
    c.expect(lifted_code.has_value(), "random APM assignment succeeds");
    if (lifted_code) {
        const auto lifted = lift(*lifted_code);
        c.expect(lifted.cols() == 60000, "lifted length == 60000");
        c.expect(!has_four_cycle(lifted), "lifted code has no 4-cycle");
    }
    return c;
}

// C8: property acceptance for the decoder chain on a scaled-down instance.
Checker criterion8() {
    Checker c;
    const auto code = build_coupled_code(matrix_from_sequence(testdata::eq4_sequence(), 3, 6),
                                         IndexSet::of({0, 1, 2, 3}));
    const auto base = terminated_pcm(code, 30);
    const auto assignment = random_apm_assignment(base, 50, 808, 20);
    c.expect(assignment.has_value(), "scaled lifting succeeds");
    if (!assignment) {
        return c;
    }
    const auto h = lift(*assignment);
    const BlockStructure blocks{3, 6, 30, 3, 50};

    SimConfig config;
    config.code = h;
    config.blocks = blocks;
    config.decoder = DecoderKind::Flooding;
    config.max_iter = 100;
    config.seed = 424242;
    config.target_bit_errors = 120;
    config.max_frames = 40000;
    config.ebn0_grid = {1.0, 2.5};

    // (a) at least 100 bit-error events per point and strictly decreasing BER.
    const auto records = ber_sweep(config);
    c.expect(records.size() == 2, "two sweep points");
    if (records.size() == 2) {
        c.expect(records[0].bit_errors >= 100,
                 "1.0 dB point collected >= 100 bit errors (got " +
                     std::to_string(records[0].bit_errors) + ")");
        c.expect(records[1].bit_errors >= 100,
                 "2.5 dB point collected >= 100 bit errors (got " +
                     std::to_string(records[1].bit_errors) + ")");
        c.expect(records[1].ber < records[0].ber, "BER(2.5 dB) < BER(1.0 dB)");
    }

    // (b) sliding window and flooding agree on frames both decode cleanly.
    SimConfig sw_config = config;
    sw_config.decoder = DecoderKind::SlidingWindow;
    sw_config.window = 12;
    const double rate = design_rate(3, 6, 30, 3).to_double();
    int both_ok = 0;
    for (int frame = 0; frame < 40; ++frame) {
        const auto llr = awgn_llr(h.cols(), 3.0, rate, 99, frame);
        const auto fs = bp_flooding(h, llr, config.max_iter);
        const auto sw = sliding_window_decode(sw_config, llr);
        if (fs.syndrome_ok && sw.syndrome_ok) {
            ++both_ok;
            c.expect(fs.bits == sw.bits,
                     "decoders agree on frame " + std::to_string(frame));
        }
    }
    c.expect(both_ok > 0, "some frames were decoded cleanly by both");

    // (c) noise-free frames decode error-free in one iteration for both.
    const std::vector<double> clean(h.cols(), 50.0);
    const auto fs = bp_flooding(h, clean, config.max_iter);
    c.expect(fs.syndrome_ok && fs.iterations == 1, "flooding: clean frame, one iteration");
    c.expect(std::count(fs.bits.begin(), fs.bits.end(), 1) == 0, "flooding: clean frame exact");
    const auto sw = sliding_window_decode(sw_config, clean);
    bool all_one_iteration = true;
    for (int iterations : sw.window_iterations) {
        all_one_iteration = all_one_iteration && iterations == 1;
    }
    c.expect(sw.syndrome_ok && all_one_iteration, "sliding window: clean frame, one iteration");
    c.expect(std::count(sw.bits.begin(), sw.bits.end(), 1) == 0,
             "sliding window: clean frame exact");
    return c;
}

// C9: serialization round trips, bit exact.
Checker criterion9() {
    Checker c;
    std::mt19937 gen(90909);
    for (int trial = 0; trial < 500; ++trial) {
        const int rows = 1 + static_cast<int>(gen() % 12);
        const int cols = 1 + static_cast<int>(gen() % 12);
        BinaryMatrix m(rows, cols);
        for (int r = 0; r < rows; ++r) {
            for (int col = 0; col < cols; ++col) {
                if (gen() % 3 == 0) {
                    m.set(r, col);
                }
            }
        }
        const auto text = export_alist(m);
        if (!(import_alist(text) == m && export_alist(import_alist(text)) == text)) {
            c.expect(false, "alist round trip, trial " + std::to_string(trial));
            break;
        }
    }
    for (int trial = 0; trial < 500; ++trial) {
        const auto e = random_matrix(gen, 6, 9, 50);
        if (!(parse_matrix_text(to_text(e)) == e)) {
            c.expect(false, "matrix text round trip, trial " + std::to_string(trial));
            break;
        }
    }
    return c;
}

struct Criterion {
    int number;
    const char* name;
    Checker (*run)();
};

const Criterion kCriteria[] = {
    {1, "published sequence table regression", criterion1},
    {2, "minimum MOE for small cases", criterion2},
    {3, "worked example: matrix, incidence, QC lift", criterion3},
    {4, "interval oracle equivalence (1000 trials)", criterion4},
    {5, "non-interval oracle equivalence + counterexample", criterion5},
    {6, "baseline construction w2 column", criterion6},
    {7, "construction scale: rate 0.485, length 60000", criterion7},
    {8, "decoder properties on the scaled code", criterion8},
    {9, "alist and matrix text round trips", criterion9},
};

}  // namespace

int main(int argc, char** argv) {
    int selected = 0;
    if (argc > 1) {
        selected = std::atoi(argv[1]);
        if (selected < 1 || selected > 9) {
            std::fprintf(stderr, "usage: %s [1-9]\n", argv[0]);
            return 2;
        }
    }
    int total_failures = 0;
    for (const auto& criterion : kCriteria) {
        if (selected != 0 && criterion.number != selected) {
            continue;
        }
        const Checker result = criterion.run();
        std::printf("[%s] C%d: %s%s\n", result.failures == 0 ? "PASS" : "FAIL",
                    criterion.number, criterion.name, result.detail.c_str());
        std::fflush(stdout);
        total_failures += result.failures;
    }
    return total_failures == 0 ? 0 : 1;
}
