#pragma once

#include <optional>
#include <vector>

namespace scldpc {

/// A length p+q-1 non-negative integer sequence whose diagonal-constant
/// p x q matrix is 4-cycle free. Construct through `make` so the goodness
/// predicate is enforced.
struct GoodSequence {
    std::vector<int> values;
    int p = 0;
    int q = 0;

    int moe() const;  // maximum of elements

    static GoodSequence make(std::vector<int> values, int p, int q);
};

/// Goodness predicate: for every start t >= 1 and offsets d_i in [1, p-1],
/// d_j in [1, q-1] with t + d_i + d_j <= p+q-1,
///   a_t + a_{t+d_i+d_j} != a_{t+d_i} + a_{t+d_j}.
/// The degenerate d_i = d_j case reads a_t + a_{t+2d} != 2 a_{t+d}.
bool is_good_sequence(const std::vector<int>& values, int p, int q);

/// Maximum of elements of a non-empty sequence.
int moe(const std::vector<int>& values);

/// Exhaustive depth-first backtracking over values in [0, w]: at each
/// position the already-placed prefix rules out every value that would close
/// an equal-sum quadruple, remaining candidates are tried in ascending
/// order, and exhausted positions backtrack. Returns the first good sequence
/// in that order, or nothing once the search tree is exhausted.
std::optional<std::vector<int>> generate_good_sequence(int p, int q, int w);

struct MinMoeResult {
    int w = 0;
    std::vector<int> sequence;
};

/// Smallest w in [0, w_cap] for which generate_good_sequence succeeds,
/// together with that sequence. Exhaustiveness of the backtracking makes the
/// returned w the true minimum MOE.
std::optional<MinMoeResult> find_min_moe(int p, int q, int w_cap);

}  // namespace scldpc
