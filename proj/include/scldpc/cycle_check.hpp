#pragma once

#include "scldpc/binary_matrix.hpp"
#include "scldpc/exponent_matrix.hpp"

namespace scldpc {

/// True iff two distinct rows share at least two common one-columns,
/// i.e. the Tanner graph has a cycle of length 4.
bool has_four_cycle(const BinaryMatrix& m);

/// Result of a girth search. Cycle lengths in a bipartite Tanner graph are
/// even, so `value` is even whenever a cycle was found.
struct GirthResult {
    enum class Kind { Exact, AtLeast, Infinite };
    Kind kind = Kind::Infinite;
    int value = 0;  // girth when Exact, lower bound when AtLeast, unused when Infinite

    bool is_at_least(int g) const {
        return kind == Kind::Infinite || value >= g;
    }
};

/// Shortest cycle of the bipartite graph (rows = check nodes, cols = variable
/// nodes), by BFS from every vertex. The search is capped: girths above
/// `bound` are reported as AtLeast bound+2. Infinite is returned only when
/// the graph is a forest.
GirthResult girth(const BinaryMatrix& m, int bound = 12);

/// Girth-6 condition for the QC-LDPC code obtained by lifting E with
/// circulant permutation matrices of size N: no 2x2 submatrix of E may have
/// equal diagonal sums mod N.
bool qc_exponent_girth6(const ExponentMatrix& e, int n);

}  // namespace scldpc
