#include "scldpc/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "scldpc/rng.hpp"

namespace scldpc {
namespace {

constexpr double kLlrClamp = 30.0;

double clamp_llr(double x) { return std::clamp(x, -kLlrClamp, kLlrClamp); }

// phi(x) = -ln tanh(x/2) on x > 0; involution used by the check-node rule.
double phi(double x) {
    if (x > kLlrClamp) {
        return 2.0 * std::exp(-x);
    }
    if (x < 1e-12) {
        x = 1e-12;
    }
    return -std::log(std::tanh(0.5 * x));
}

// Tanner graph in edge-list form, edges grouped by check node.
struct Graph {
    int n_checks = 0;
    int n_vars = 0;
    std::vector<int> check_offset;  // n_checks + 1
    std::vector<int> edge_var;      // per edge
    std::vector<int> var_offset;    // n_vars + 1
    std::vector<int> var_edges;     // edge ids grouped by variable

    std::size_t edges() const { return edge_var.size(); }
};

// Rows [row_begin, row_end) x cols [col_begin, col_end) of h; every one of
// the selected rows must fall inside the column range.
Graph build_graph(const BinaryMatrix& h, int row_begin, int row_end, int col_begin,
                  int col_end) {
    Graph g;
    g.n_checks = row_end - row_begin;
    g.n_vars = col_end - col_begin;
    g.check_offset.reserve(g.n_checks + 1);
    g.check_offset.push_back(0);
    for (int r = row_begin; r < row_end; ++r) {
        for (std::int32_t c : h.row(r)) {
            g.edge_var.push_back(c - col_begin);
        }
        g.check_offset.push_back(static_cast<int>(g.edge_var.size()));
    }
    std::vector<int> degree(g.n_vars, 0);
    for (int v : g.edge_var) {
        if (v < 0 || v >= g.n_vars) {
            throw std::invalid_argument("graph window does not contain all edges");
        }
        ++degree[v];
    }
    g.var_offset.assign(g.n_vars + 1, 0);
    for (int v = 0; v < g.n_vars; ++v) {
        g.var_offset[v + 1] = g.var_offset[v] + degree[v];
    }
    g.var_edges.resize(g.edges());
    std::vector<int> cursor(g.var_offset.begin(), g.var_offset.end() - 1);
    for (std::size_t e = 0; e < g.edges(); ++e) {
        g.var_edges[cursor[g.edge_var[e]]++] = static_cast<int>(e);
    }
    return g;
}

Graph build_graph(const BinaryMatrix& h) { return build_graph(h, 0, h.rows(), 0, h.cols()); }

// Flooding sum-product on a prebuilt graph. Scratch buffers are supplied by
// the caller so sweeps do not reallocate per frame.
struct BpScratch {
    std::vector<double> q;        // variable-to-check messages
    std::vector<double> r;        // check-to-variable messages
    std::vector<double> phi_abs;  // phi(|q|) per edge within one iteration
    std::vector<double> posterior;
    std::vector<std::uint8_t> bits;
};

int bp_run(const Graph& g, std::span<const double> llr, int max_iter, BpScratch& s,
           bool& syndrome_ok) {
    const std::size_t n_edges = g.edges();
    s.q.resize(n_edges);
    s.r.resize(n_edges);
    s.phi_abs.resize(n_edges);
    s.posterior.assign(llr.begin(), llr.end());
    s.bits.assign(g.n_vars, 0);

    for (std::size_t e = 0; e < n_edges; ++e) {
        s.q[e] = clamp_llr(llr[g.edge_var[e]]);
    }

    int iter = 0;
    syndrome_ok = false;
    while (iter < max_iter) {
        ++iter;
        // Check-node pass.
        for (int c = 0; c < g.n_checks; ++c) {
            const int begin = g.check_offset[c];
            const int end = g.check_offset[c + 1];
            double sum = 0.0;
            unsigned parity = 0;
            for (int e = begin; e < end; ++e) {
                const double q = s.q[e];
                parity ^= q < 0.0;
                s.phi_abs[e] = phi(std::fabs(q));
                sum += s.phi_abs[e];
            }
            for (int e = begin; e < end; ++e) {
                const unsigned sign = parity ^ (s.q[e] < 0.0);
                const double mag = std::min(phi(sum - s.phi_abs[e]), kLlrClamp);
                s.r[e] = sign ? -mag : mag;
            }
        }
        // Variable-node pass.
        for (int v = 0; v < g.n_vars; ++v) {
            double total = llr[v];
            for (int k = g.var_offset[v]; k < g.var_offset[v + 1]; ++k) {
                total += s.r[g.var_edges[k]];
            }
            s.posterior[v] = total;
            s.bits[v] = total < 0.0;
            for (int k = g.var_offset[v]; k < g.var_offset[v + 1]; ++k) {
                const int e = g.var_edges[k];
                s.q[e] = clamp_llr(total - s.r[e]);
            }
        }
        // Syndrome of the current hard decision.
        bool ok = true;
        for (int c = 0; c < g.n_checks && ok; ++c) {
            unsigned parity = 0;
            for (int e = g.check_offset[c]; e < g.check_offset[c + 1]; ++e) {
                parity ^= s.bits[g.edge_var[e]];
            }
            ok = parity == 0;
        }
        if (ok) {
            syndrome_ok = true;
            break;
        }
    }
    return iter;
}

bool full_syndrome_ok(const BinaryMatrix& h, const std::vector<std::uint8_t>& bits) {
    for (int r = 0; r < h.rows(); ++r) {
        unsigned parity = 0;
        for (std::int32_t c : h.row(r)) {
            parity ^= bits[c];
        }
        if (parity) {
            return false;
        }
    }
    return true;
}

WindowDecodeResult sliding_window_run(const SimConfig& config, const BinaryMatrix& code,
                                      std::span<const double> llr, BpScratch& scratch) {
    const BlockStructure& b = *config.blocks;
    const int row_block = b.p * b.m;  // rows per block row
    const int col_block = b.q * b.m;  // cols per block column
    const int W = config.window;

    WindowDecodeResult out;
    out.bits.assign(static_cast<std::size_t>(b.L) * col_block, 0);
    out.window_iterations.reserve(b.L - W + 1);

    std::vector<double> window_llr;
    for (int t = 0; t <= b.L - W; ++t) {
        const bool last = t == b.L - W;
        const int row_begin = t * row_block;
        const int row_end = (last ? b.L + b.w : t + W) * row_block;
        const int col_lo_block = std::max(0, t - b.w);
        const int col_begin = col_lo_block * col_block;
        const int col_end = (t + W) * col_block;

        Graph g = build_graph(code, row_begin, row_end, col_begin, col_end);

        window_llr.assign(g.n_vars, 0.0);
        for (int c = col_begin; c < col_end; ++c) {
            if (c < t * col_block) {
                // Previously committed block columns enter as saturated priors.
                window_llr[c - col_begin] = out.bits[c] ? -kLlrClamp : kLlrClamp;
            } else {
                window_llr[c - col_begin] = llr[c];
            }
        }

        bool ok = false;
        out.window_iterations.push_back(bp_run(g, window_llr, config.max_iter, scratch, ok));

        const int commit_begin = t * col_block;
        const int commit_end = last ? b.L * col_block : (t + 1) * col_block;
        for (int c = commit_begin; c < commit_end; ++c) {
            out.bits[c] = scratch.bits[c - col_begin];
        }
    }
    out.syndrome_ok = full_syndrome_ok(code, out.bits);
    return out;
}

}  // namespace

void BlockStructure::validate_against(const BinaryMatrix& code) const {
    if (p < 1 || q <= p || L < 1 || w < 0 || m < 1) {
        throw std::invalid_argument("BlockStructure: requires 1 <= p < q, L >= 1, w >= 0, m >= 1");
    }
    if (code.rows() != (L + w) * p * m || code.cols() != L * q * m) {
        throw std::invalid_argument("BlockStructure: dimensions do not match the code");
    }
}

double SimConfig::rate() const {
    if (blocks) {
        const double lp = static_cast<double>(blocks->L + blocks->w) * blocks->p;
        return 1.0 - lp / (static_cast<double>(blocks->L) * blocks->q);
    }
    return 1.0 - static_cast<double>(code.rows()) / static_cast<double>(code.cols());
}

void SimConfig::validate() const {
    if (ebn0_grid.empty()) {
        throw std::invalid_argument("SimConfig: empty Eb/N0 grid");
    }
    if (max_iter < 1) {
        throw std::invalid_argument("SimConfig: max_iter must be at least 1");
    }
    if (max_frames < 1) {
        throw std::invalid_argument("SimConfig: max_frames must be at least 1");
    }
    if (blocks) {
        blocks->validate_against(code);
    }
    if (decoder == DecoderKind::SlidingWindow) {
        if (!blocks) {
            throw std::invalid_argument("SimConfig: sliding window needs a block structure");
        }
        if (window < blocks->w + 1) {
            throw std::invalid_argument("SimConfig: window smaller than one constraint span");
        }
        if (window > blocks->L) {
            throw std::invalid_argument("SimConfig: window exceeds the coupling length");
        }
    }
    const double r = rate();
    if (!(r > 0.0 && r < 1.0)) {
        throw std::invalid_argument("SimConfig: design rate outside (0, 1)");
    }
}

std::vector<double> awgn_llr(int n, double ebn0_db, double rate, std::uint64_t seed,
                             std::uint64_t frame_index) {
    if (n < 1) {
        throw std::invalid_argument("awgn_llr: n must be positive");
    }
    if (!(rate > 0.0 && rate < 1.0)) {
        throw std::invalid_argument("awgn_llr: rate outside (0, 1)");
    }
    const double sigma2 = 1.0 / (2.0 * rate * std::pow(10.0, ebn0_db / 10.0));
    const double sigma = std::sqrt(sigma2);
    const double scale = 2.0 / sigma2;

    std::mt19937_64 gen(rng::derive_seed(seed, frame_index));
    rng::Gaussian gauss(gen);
    std::vector<double> llr(n);
    for (int i = 0; i < n; ++i) {
        llr[i] = scale * (1.0 + sigma * gauss());
    }
    return llr;
}

DecodeResult bp_flooding(const BinaryMatrix& h, std::span<const double> llr, int max_iter) {
    if (static_cast<int>(llr.size()) != h.cols()) {
        throw std::invalid_argument("bp_flooding: LLR length does not match the code");
    }
    if (max_iter < 1) {
        throw std::invalid_argument("bp_flooding: max_iter must be at least 1");
    }
    Graph g = build_graph(h);
    BpScratch scratch;
    DecodeResult out;
    out.iterations = bp_run(g, llr, max_iter, scratch, out.syndrome_ok);
    out.bits = std::move(scratch.bits);
    return out;
}

WindowDecodeResult sliding_window_decode(const SimConfig& config, std::span<const double> llr) {
    if (!config.blocks) {
        throw std::invalid_argument("sliding_window_decode: block structure required");
    }
    config.blocks->validate_against(config.code);
    if (config.max_iter < 1) {
        throw std::invalid_argument("sliding_window_decode: max_iter must be at least 1");
    }
    if (config.window < config.blocks->w + 1) {
        throw std::invalid_argument("sliding_window_decode: window smaller than one constraint span");
    }
    if (config.window > config.blocks->L) {
        throw std::invalid_argument("sliding_window_decode: window exceeds the coupling length");
    }
    if (static_cast<int>(llr.size()) != config.code.cols()) {
        throw std::invalid_argument("sliding_window_decode: LLR length does not match the code");
    }
    BpScratch scratch;
    return sliding_window_run(config, config.code, llr, scratch);
}

std::vector<BerRecord> ber_sweep(const SimConfig& config) {
    config.validate();
    const int n = config.code.cols();
    const double rate = config.rate();

    Graph full;
    if (config.decoder == DecoderKind::Flooding) {
        full = build_graph(config.code);
    }
    BpScratch scratch;

    std::vector<BerRecord> records;
    records.reserve(config.ebn0_grid.size());
    for (std::size_t point = 0; point < config.ebn0_grid.size(); ++point) {
        const double ebn0 = config.ebn0_grid[point];
        const std::uint64_t point_seed = rng::derive_seed(config.seed, point);

        BerRecord rec;
        rec.ebn0_db = ebn0;
        double iteration_sum = 0.0;
        while (rec.frames < config.max_frames &&
               (config.target_bit_errors == 0 || rec.bit_errors < config.target_bit_errors)) {
            const auto llr = awgn_llr(n, ebn0, rate, point_seed, rec.frames);
            std::uint64_t frame_bit_errors = 0;
            if (config.decoder == DecoderKind::Flooding) {
                bool ok = false;
                iteration_sum += bp_run(full, llr, config.max_iter, scratch, ok);
                for (std::uint8_t bit : scratch.bits) {
                    frame_bit_errors += bit;
                }
            } else {
                const auto result = sliding_window_run(config, config.code, llr, scratch);
                double sum = 0.0;
                for (int it : result.window_iterations) {
                    sum += it;
                }
                iteration_sum += sum / static_cast<double>(result.window_iterations.size());
                for (std::uint8_t bit : result.bits) {
                    frame_bit_errors += bit;
                }
            }
            rec.bit_errors += frame_bit_errors;
            rec.frame_errors += frame_bit_errors != 0;
            ++rec.frames;
        }
        rec.ber = static_cast<double>(rec.bit_errors) /
                  (static_cast<double>(rec.frames) * static_cast<double>(n));
        rec.fer = static_cast<double>(rec.frame_errors) / static_cast<double>(rec.frames);
        rec.avg_iterations = iteration_sum / static_cast<double>(rec.frames);
        records.push_back(rec);
    }
    return records;
}

std::string ber_csv(const std::vector<BerRecord>& records) {
    std::string out = "ebn0_db,frames,bit_errors,frame_errors,ber,fer,avg_iterations\n";
    char buf[192];
    for (const auto& r : records) {
        std::snprintf(buf, sizeof(buf), "%.4f,%llu,%llu,%llu,%.10f,%.10f,%.4f\n", r.ebn0_db,
                      static_cast<unsigned long long>(r.frames),
                      static_cast<unsigned long long>(r.bit_errors),
                      static_cast<unsigned long long>(r.frame_errors), r.ber, r.fer,
                      r.avg_iterations);
        out += buf;
    }
    return out;
}

}  // namespace scldpc
