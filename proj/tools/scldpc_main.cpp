#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "scldpc/alist.hpp"
#include "scldpc/coupled_code.hpp"
#include "scldpc/cycle_check.hpp"
#include "scldpc/exponent_matrix.hpp"
#include "scldpc/good_sequence.hpp"
#include "scldpc/lifting.hpp"
#include "scldpc/simulator.hpp"

namespace {

using namespace scldpc;

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string field;
    while (std::getline(in, field, ',')) {
        if (field.empty()) {
            throw std::invalid_argument("empty field in integer list '" + text + "'");
        }
        std::size_t used = 0;
        const int v = std::stoi(field, &used);
        if (used != field.size()) {
            throw std::invalid_argument("bad integer '" + field + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw std::invalid_argument("empty integer list");
    }
    return out;
}

// "LO:STEP:HI" inclusive of both ends when STEP divides the span; a bare
// number is a single-point grid.
std::vector<double> parse_ebn0_grid(const std::string& text) {
    const auto first = text.find(':');
    if (first == std::string::npos) {
        return {std::stod(text)};
    }
    const auto second = text.find(':', first + 1);
    if (second == std::string::npos) {
        throw std::invalid_argument("Eb/N0 range must be LO:STEP:HI");
    }
    const double lo = std::stod(text.substr(0, first));
    const double step = std::stod(text.substr(first + 1, second - first - 1));
    const double hi = std::stod(text.substr(second + 1));
    if (step <= 0.0) {
        throw std::invalid_argument("Eb/N0 step must be positive");
    }
    std::vector<double> grid;
    for (double v = lo; v <= hi + 1e-9; v += step) {
        grid.push_back(v);
    }
    if (grid.empty()) {
        throw std::invalid_argument("empty Eb/N0 range");
    }
    return grid;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::invalid_argument("cannot write " + tmp);
        }
        out << content;
        if (!out.flush()) {
            throw std::runtime_error("short write to " + tmp);
        }
    }
    std::filesystem::rename(tmp, path);
}

std::string join(const std::vector<int>& values) {
    std::string out;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k) {
            out += ',';
        }
        out += std::to_string(values[k]);
    }
    return out;
}

std::string girth_to_string(const GirthResult& g) {
    switch (g.kind) {
        case GirthResult::Kind::Exact:
            return std::to_string(g.value);
        case GirthResult::Kind::AtLeast:
            return ">= " + std::to_string(g.value);
        default:
            return "inf";
    }
}

IndexSet default_index_set(const ExponentMatrix& e) {
    const auto values = soe(e);
    std::vector<int> interval;
    for (int v = values.front(); v <= values.back(); ++v) {
        interval.push_back(v);
    }
    return IndexSet::of(interval);
}

// ---- subcommands ----

struct GenSeqArgs {
    int p = 0;
    int q = 0;
    int w = -1;
    bool min_w = false;
    int w_cap = 16;
};

int run_gen_seq(const GenSeqArgs& args) {
    if (args.min_w == (args.w >= 0)) {
        std::cerr << "gen-seq: pass exactly one of --w or --min-w\n";
        return 2;
    }
    std::optional<std::vector<int>> sequence;
    if (args.min_w) {
        if (auto found = find_min_moe(args.p, args.q, args.w_cap)) {
            sequence = std::move(found->sequence);
        }
    } else {
        sequence = generate_good_sequence(args.p, args.q, args.w);
    }
    if (!sequence) {
        std::cerr << "gen-seq: no good sequence with MOE <= "
                  << (args.min_w ? args.w_cap : args.w) << " for p = " << args.p
                  << ", q = " << args.q << "\n";
        return 1;
    }
    std::cout << "p: " << args.p << " q: " << args.q << "\n";
    std::cout << "sequence: " << join(*sequence) << "\n";
    std::cout << "moe: " << moe(*sequence) << "\n";
    return 0;
}

struct BuildArgs {
    int p = 0;
    int q = 0;
    std::string seq;
    std::string index_set;
    int L = 0;
    std::string out;
    bool force = false;
};

int run_build(const BuildArgs& args) {
    const auto values = parse_int_list(args.seq);
    const auto e = matrix_from_sequence(values, args.p, args.q);
    const IndexSet set = args.index_set.empty() ? default_index_set(e)
                                                : IndexSet::of(parse_int_list(args.index_set));
    const bool ok = h_is_four_cycle_free(e, set);

    std::cout << "exponent matrix: " << e.p() << " x " << e.q() << "\n";
    std::cout << "index set: " << join(set.indices()) << " (w = " << set.width() << ")\n";
    std::cout << "H(E) 4-cycle free: " << (ok ? "yes" : "no") << "\n";
    if (!ok && !args.force) {
        std::cerr << "build: verification failed, refusing to write " << args.out
                  << " (pass --force to override)\n";
        return 1;
    }
    if (!ok) {
        std::cerr << "build: warning: writing a PCM with 4-cycles\n";
    }

    const auto code = build_coupled_code(e, set);
    const auto h = terminated_pcm(code, args.L);
    std::cout << "terminated PCM: " << h.rows() << " x " << h.cols() << " (L = " << args.L
              << ")\n";
    std::cout << "design rate: "
              << design_rate(args.p, args.q, args.L, set.width()).to_decimal(6) << "\n";
    write_file_atomic(args.out, export_alist(h));
    std::cout << "wrote " << args.out << "\n";
    return ok ? 0 : 1;
}

struct CheckArgs {
    std::string alist;
    int girth_bound = 12;
};

int run_check(const CheckArgs& args) {
    const auto m = import_alist(read_file(args.alist));
    std::cout << "matrix: " << m.rows() << " x " << m.cols() << ", " << m.ones_count()
              << " ones\n";
    std::cout << "girth: " << girth_to_string(girth(m, args.girth_bound)) << "\n";
    const bool four = has_four_cycle(m);
    std::cout << "4-cycle free: " << (four ? "no" : "yes") << "\n";
    return four ? 1 : 0;
}

struct CheckEArgs {
    std::string matrix;
    std::string index_set;
};

int run_check_e(const CheckEArgs& args) {
    const auto e = parse_matrix_text(read_file(args.matrix));
    const auto set = IndexSet::of(parse_int_list(args.index_set));
    const bool h_free = h_is_four_cycle_free(e, set);
    const bool e_free = is_four_cycle_free(e);

    const auto code = build_coupled_code(e, set);
    const int window = 2 * (set.width() + 1);
    const bool oracle_free = !has_four_cycle(terminated_pcm(code, window));

    std::cout << "E: " << e.p() << " x " << e.q() << "\n";
    std::cout << "index set: " << join(set.indices()) << " (w = " << set.width() << ")\n";
    std::cout << "H 4-cycle free: " << (h_free ? "yes" : "no")
              << "; E 4-cycle free: " << (e_free ? "yes" : "no") << "\n";
    std::cout << "brute-force oracle (L = " << window << "): "
              << (h_free == oracle_free ? "agrees" : "DISAGREES") << "\n";
    if (h_free != oracle_free) {
        return 1;
    }
    return h_free ? 0 : 1;
}

struct LiftArgs {
    std::string alist;
    int m = 0;
    std::uint64_t seed = 0;
    int max_tries = 100;
    std::string out;
};

int run_lift(const LiftArgs& args) {
    const auto base = import_alist(read_file(args.alist));
    std::cout << "base: " << base.rows() << " x " << base.cols() << ", " << base.ones_count()
              << " ones\n";
    const auto code = random_apm_assignment(base, args.m, args.seed, args.max_tries);
    if (!code) {
        std::cerr << "lift: no 4-cycle free assignment found in " << args.max_tries
                  << " tries\n";
        return 1;
    }
    const auto lifted = lift(*code);
    std::cout << "lifted: " << lifted.rows() << " x " << lifted.cols() << " (m = " << args.m
              << "), girth >= 6\n";
    write_file_atomic(args.out, export_alist(lifted));
    std::cout << "wrote " << args.out << "\n";
    return 0;
}

struct SimulateArgs {
    std::string code;
    std::string ebn0;
    std::string decoder = "fs";
    int window = 0;
    int max_iter = 100;
    std::uint64_t seed = 0;
    std::uint64_t max_frames = 1000;
    std::uint64_t target_errors = 100;
    int p = 0, q = 0, L = 0, w = -1, m = 1;
    std::string out;
};

int run_simulate(const SimulateArgs& args) {
    SimConfig config;
    config.code = import_alist(read_file(args.code));
    config.ebn0_grid = parse_ebn0_grid(args.ebn0);
    config.decoder = args.decoder == "sw" ? DecoderKind::SlidingWindow : DecoderKind::Flooding;
    config.window = args.window;
    config.max_iter = args.max_iter;
    config.seed = args.seed;
    config.max_frames = args.max_frames;
    config.target_bit_errors = args.target_errors;
    if (args.p > 0) {
        config.blocks = BlockStructure{args.p, args.q, args.L, args.w, args.m};
    } else if (config.decoder == DecoderKind::SlidingWindow) {
        std::cerr << "simulate: sliding window needs --p --q --L --w (and --m when lifted)\n";
        return 2;
    }
    if (config.decoder == DecoderKind::SlidingWindow && args.window <= 0) {
        std::cerr << "simulate: sliding window needs --window\n";
        return 2;
    }

    const auto records = ber_sweep(config);
    const auto csv = ber_csv(records);
    write_file_atomic(args.out, csv);
    std::cout << csv;
    std::cout << "wrote " << args.out << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"4-cycle free spatially coupled LDPC codes: construction, lifting, decoding"};
    app.require_subcommand(1);

    GenSeqArgs gen_seq;
    auto* cmd_gen = app.add_subcommand("gen-seq", "search for a good sequence");
    cmd_gen->add_option("--p", gen_seq.p, "rows of the target matrix")->required();
    cmd_gen->add_option("--q", gen_seq.q, "columns of the target matrix")->required();
    cmd_gen->add_option("--w", gen_seq.w, "maximum element value");
    cmd_gen->add_flag("--min-w", gen_seq.min_w, "search upward for the minimum MOE");
    cmd_gen->add_option("--w-cap", gen_seq.w_cap, "cap for --min-w");

    BuildArgs build;
    auto* cmd_build = app.add_subcommand("build", "build a terminated coupled PCM");
    cmd_build->add_option("--p", build.p)->required();
    cmd_build->add_option("--q", build.q)->required();
    cmd_build->add_option("--seq", build.seq, "comma-separated sequence values")->required();
    cmd_build->add_option("--index-set", build.index_set,
                          "comma-separated indices (default: least interval covering the SOE)");
    cmd_build->add_option("--L", build.L, "coupling length")->required();
    cmd_build->add_option("--out", build.out, "output alist path")->required();
    cmd_build->add_flag("--force", build.force, "write even when verification fails");

    CheckArgs check;
    auto* cmd_check = app.add_subcommand("check", "girth-check an alist PCM");
    cmd_check->add_option("--alist", check.alist)->required();
    cmd_check->add_option("--girth-bound", check.girth_bound, "cap for the girth search");

    CheckEArgs check_e;
    auto* cmd_check_e =
        app.add_subcommand("check-e", "pattern verdict for an exponent matrix and index set");
    cmd_check_e->add_option("--matrix", check_e.matrix, "matrix text file")->required();
    cmd_check_e->add_option("--index-set", check_e.index_set)->required();

    LiftArgs lift_args;
    auto* cmd_lift = app.add_subcommand("lift", "random 4-cycle free APM lifting");
    cmd_lift->add_option("--alist", lift_args.alist)->required();
    cmd_lift->add_option("--m", lift_args.m, "lifting size")->required();
    cmd_lift->add_option("--seed", lift_args.seed)->required();
    cmd_lift->add_option("--max-tries", lift_args.max_tries);
    cmd_lift->add_option("--out", lift_args.out)->required();

    SimulateArgs sim;
    auto* cmd_sim = app.add_subcommand("simulate", "AWGN/BPSK Monte-Carlo BER sweep");
    cmd_sim->add_option("--code", sim.code, "alist PCM path")->required();
    cmd_sim->add_option("--ebn0", sim.ebn0, "LO:STEP:HI in dB")->required();
    cmd_sim->add_option("--decoder", sim.decoder, "fs | sw")
        ->check(CLI::IsMember({"fs", "sw"}));
    cmd_sim->add_option("--window", sim.window, "window size in block columns");
    cmd_sim->add_option("--max-iter", sim.max_iter);
    cmd_sim->add_option("--seed", sim.seed)->required();
    cmd_sim->add_option("--max-frames", sim.max_frames);
    cmd_sim->add_option("--target-errors", sim.target_errors,
                        "stop a point after this many bit errors (0 = never)");
    cmd_sim->add_option("--p", sim.p);
    cmd_sim->add_option("--q", sim.q);
    cmd_sim->add_option("--L", sim.L);
    cmd_sim->add_option("--w", sim.w);
    cmd_sim->add_option("--m", sim.m);
    cmd_sim->add_option("--out", sim.out, "output csv path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_gen->parsed()) {
            return run_gen_seq(gen_seq);
        }
        if (cmd_build->parsed()) {
            return run_build(build);
        }
        if (cmd_check->parsed()) {
            return run_check(check);
        }
        if (cmd_check_e->parsed()) {
            return run_check_e(check_e);
        }
        if (cmd_lift->parsed()) {
            return run_lift(lift_args);
        }
        if (cmd_sim->parsed()) {
            return run_simulate(sim);
        }
    } catch (const std::exception& e) {
        std::cerr << app.get_name() << ": " << e.what() << "\n";
        return 2;
    }
    return 2;
}
