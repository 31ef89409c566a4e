#pragma once

#include <string>
#include <vector>

#include "scldpc/binary_matrix.hpp"
#include "scldpc/good_sequence.hpp"

namespace scldpc {

/// Dense p x q matrix of non-negative integers. Entry indices follow the
/// usual algebraic convention and are 1-based throughout the public API.
class ExponentMatrix {
public:
    ExponentMatrix(int p, int q, std::vector<int> entries);

    static ExponentMatrix from_rows(const std::vector<std::vector<int>>& rows);

    int p() const { return p_; }
    int q() const { return q_; }

    /// 1-based access, 1 <= i <= p, 1 <= j <= q.
    int entry(int i, int j) const { return entries_[(i - 1) * q_ + (j - 1)]; }

    const std::vector<int>& entries() const { return entries_; }
    int max_entry() const;

    bool operator==(const ExponentMatrix& other) const = default;

private:
    int p_ = 0;
    int q_ = 0;
    std::vector<int> entries_;  // row-major
};

/// E with e_{i,j} = a_{j-i+p}; constant along diagonals. Only the length
/// p+q-1 is required of the sequence; a good sequence yields a 4-cycle-free
/// matrix.
ExponentMatrix matrix_from_sequence(const std::vector<int>& values, int p, int q);
ExponentMatrix matrix_from_sequence(const GoodSequence& seq);

/// No 2x2 submatrix has equal diagonal sums:
/// e_{i1,j1} + e_{i2,j2} != e_{i1,j2} + e_{i2,j1} for all i1 < i2, j1 < j2.
bool is_four_cycle_free(const ExponentMatrix& e);

/// Sorted distinct values occurring in E.
std::vector<int> soe(const ExponentMatrix& e);

/// Binary p x q matrix with ones exactly where E equals `value`; the zero
/// matrix when the value does not occur.
BinaryMatrix incidence_matrix(const ExponentMatrix& e, int value);

/// Smallest prime strictly greater than q.
int prime_after(int q);

/// Baseline girth-6 construction: e_{i,j} = (i-1)(j-1) mod n with n the
/// smallest prime greater than q.
ExponentMatrix karimi_matrix(int p, int q);

// Plain-text format: one row per line, entries separated by single spaces.
std::string to_text(const ExponentMatrix& e);
ExponentMatrix parse_matrix_text(const std::string& text);

}  // namespace scldpc
