#pragma once

#include <optional>
#include <vector>

#include "scldpc/binary_matrix.hpp"
#include "scldpc/exponent_matrix.hpp"
#include "scldpc/rational.hpp"

namespace scldpc {

/// Strictly increasing non-negative integers i_0 < ... < i_w. When paired
/// with an exponent matrix it must contain the matrix's SOE; the coupling
/// width is the size minus one.
class IndexSet {
public:
    /// Sorts and deduplicates; rejects negative values or an empty set.
    static IndexSet of(std::vector<int> indices);

    const std::vector<int>& indices() const { return indices_; }
    int width() const { return static_cast<int>(indices_.size()) - 1; }
    int size() const { return static_cast<int>(indices_.size()); }
    int at(int position) const { return indices_[position]; }

    /// Position of a value within the set, if present.
    std::optional<int> position_of(int value) const;

    bool operator==(const IndexSet& other) const = default;

private:
    std::vector<int> indices_;
};

/// An exponent matrix broken into its w+1 component matrices, ordered by
/// ascending index value. Components for indices outside the SOE are zero;
/// the components sum to the all-ones p x q base matrix.
struct CoupledCode {
    ExponentMatrix exponents;
    IndexSet index_set;
    std::vector<BinaryMatrix> components;

    int p() const { return exponents.p(); }
    int q() const { return exponents.q(); }
    int w() const { return index_set.width(); }
};

/// Splits E into incidence-matrix components over I. Throws invalid_argument
/// naming the first SOE element missing from I.
CoupledCode build_coupled_code(const ExponentMatrix& e, const IndexSet& index_set);

/// The (L+w)p x Lq diagonal band: block (r, c) is components[r-c] for
/// 0 <= r-c <= w, zero elsewhere. Components sit at consecutive block-row
/// offsets by their position in the sorted index set.
BinaryMatrix terminated_pcm(const CoupledCode& code, int coupling_length);

/// The (w+1)p x (w+1)q block-upper-triangular window containing every
/// inter-component pattern of the unterminated code: block (r, c) is
/// M_{i_{w-(c-r)}} for c >= r, zero below the diagonal.
BinaryMatrix representative_block(const CoupledCode& code);

/// The (w+1) x (w+1) index layout of representative_block; zero blocks are
/// marked with -1.
std::vector<std::vector<int>> rep_index_matrix(const IndexSet& index_set);

/// Whether the unterminated coupled PCM H(E) is free of 4-cycles. A 4-cycle
/// exists exactly when the matrix of index-set positions of E's entries has
/// a 2x2 submatrix with equal diagonal sums; for an interval index set this
/// reduces to is_four_cycle_free(E).
bool h_is_four_cycle_free(const ExponentMatrix& e, const IndexSet& index_set);

/// Exact design rate 1 - (L+w)p / (Lq) of the terminated code.
Rational design_rate(int p, int q, int coupling_length, int w);

/// Limit rate 1 - p/q as the coupling length grows.
Rational design_rate_limit(int p, int q);

/// Constraint length p(w+1).
int constraint_length(int p, int w);

}  // namespace scldpc
