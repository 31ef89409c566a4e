#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "scldpc/binary_matrix.hpp"
#include "scldpc/exponent_matrix.hpp"

namespace scldpc {

/// Affine permutation matrix parameters: the m x m permutation with ones at
/// row (j*a + s) mod m of column j. Requires 0 <= s < m, 1 <= a < m and
/// gcd(a, m) = 1; a = 1 gives a circulant shift.
struct APMSpec {
    int s = 0;
    int a = 1;
    int m = 2;

    void validate() const;

    bool operator==(const APMSpec& other) const = default;
};

BinaryMatrix apm_matrix(const APMSpec& spec);

/// A base PCM with one APM spec per one-position, in row-major order of the
/// ones. Lifting replaces ones by their APM blocks and zeros by zero blocks.
struct LiftedCode {
    BinaryMatrix base;
    int m = 2;
    std::vector<APMSpec> specs;  // row-major order over the ones of base
};

/// pN x qN matrix replacing each entry e of E with the circulant shift by
/// e mod N.
BinaryMatrix cpm_lift(const ExponentMatrix& e, int n);

BinaryMatrix lift(const LiftedCode& code);

/// Draws (s, a) uniformly from Z_m x Z_m^* per one-position with a seeded
/// deterministic generator, accepting the first assignment whose lifted
/// matrix has no 4-cycle. Absent after max_tries full redraws.
std::optional<LiftedCode> random_apm_assignment(const BinaryMatrix& base, int m,
                                                std::uint64_t seed, int max_tries);

}  // namespace scldpc
