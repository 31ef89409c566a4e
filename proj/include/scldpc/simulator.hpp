#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scldpc/binary_matrix.hpp"

namespace scldpc {

/// Block layout of a terminated coupled PCM, lifted by m (m = 1 when
/// unlifted): (L+w)*p*m rows, L*q*m columns.
struct BlockStructure {
    int p = 0;
    int q = 0;
    int L = 0;
    int w = 0;
    int m = 1;

    void validate_against(const BinaryMatrix& code) const;
};

enum class DecoderKind { Flooding, SlidingWindow };

struct SimConfig {
    BinaryMatrix code;
    std::optional<BlockStructure> blocks;
    std::vector<double> ebn0_grid;
    DecoderKind decoder = DecoderKind::Flooding;
    int window = 0;  // W in block columns; sliding window only
    int max_iter = 100;
    std::uint64_t seed = 0;
    std::uint64_t max_frames = 1000;
    std::uint64_t target_bit_errors = 100;  // 0 disables early stopping

    /// Design rate from the block structure when present, else 1 - rows/cols.
    double rate() const;

    void validate() const;
};

struct BerRecord {
    double ebn0_db = 0.0;
    std::uint64_t frames = 0;
    std::uint64_t bit_errors = 0;
    std::uint64_t frame_errors = 0;
    double ber = 0.0;
    double fer = 0.0;
    double avg_iterations = 0.0;
};

/// Channel LLRs for the all-zero BPSK(+1) codeword over AWGN with noise
/// variance sigma^2 = 1 / (2 * rate * 10^(ebn0_db/10)); returns 2*y/sigma^2.
/// Deterministic in (seed, frame_index).
std::vector<double> awgn_llr(int n, double ebn0_db, double rate, std::uint64_t seed,
                             std::uint64_t frame_index);

struct DecodeResult {
    std::vector<std::uint8_t> bits;
    int iterations = 0;
    bool syndrome_ok = false;
};

/// Sum-product decoding with a flooding schedule; stops early once the hard
/// decision satisfies every check. Message magnitudes are clamped at 30.
DecodeResult bp_flooding(const BinaryMatrix& h, std::span<const double> llr, int max_iter);

struct WindowDecodeResult {
    std::vector<std::uint8_t> bits;
    std::vector<int> window_iterations;
    bool syndrome_ok = false;  // full-matrix syndrome of the assembled output
};

/// Sliding-window decoding of a terminated coupled code: each window spans W
/// block columns plus the check rows fully contained in them, runs flooding
/// BP, commits the hard decision of its oldest block column and slides by
/// one. Committed bits feed later windows as saturated LLRs; the final
/// window commits everything left, so W = L reduces to bp_flooding.
WindowDecodeResult sliding_window_decode(const SimConfig& config, std::span<const double> llr);

/// Monte-Carlo sweep over the Eb/N0 grid: frames run until max_frames, or
/// until target_bit_errors is reached when that is nonzero.
std::vector<BerRecord> ber_sweep(const SimConfig& config);

/// CSV with header ebn0_db,frames,bit_errors,frame_errors,ber,fer,avg_iterations.
std::string ber_csv(const std::vector<BerRecord>& records);

}  // namespace scldpc
