#include "scldpc/cycle_check.hpp"

#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace scldpc {
namespace {

// Two rows sharing >= 2 columns <=> some (col, col) pair repeats across rows.
// Scans whichever orientation generates fewer pairs.
bool pair_collision(const std::vector<std::vector<std::int32_t>>& adjacency) {
    std::unordered_set<std::uint64_t> seen;
    for (const auto& nodes : adjacency) {
        for (std::size_t a = 0; a < nodes.size(); ++a) {
            for (std::size_t b = a + 1; b < nodes.size(); ++b) {
                const std::uint64_t key =
                    (static_cast<std::uint64_t>(nodes[a]) << 32) | static_cast<std::uint32_t>(nodes[b]);
                if (!seen.insert(key).second) {
                    return true;
                }
            }
        }
    }
    return false;
}

}  // namespace

bool has_four_cycle(const BinaryMatrix& m) {
    std::size_t row_pairs = 0;
    std::size_t col_pairs = 0;
    for (int r = 0; r < m.rows(); ++r) {
        const std::size_t d = m.row(r).size();
        row_pairs += d * (d - 1) / 2;
    }
    for (int d : m.column_degrees()) {
        col_pairs += static_cast<std::size_t>(d) * (d - 1) / 2;
    }
    if (row_pairs <= col_pairs) {
        std::vector<std::vector<std::int32_t>> rows(m.rows());
        for (int r = 0; r < m.rows(); ++r) {
            rows[r] = m.row(r);
        }
        return pair_collision(rows);
    }
    return pair_collision(m.column_adjacency());
}

GirthResult girth(const BinaryMatrix& m, int bound) {
    if (bound < 4) {
        throw std::invalid_argument("girth: bound must be at least 4");
    }
    const int n_rows = m.rows();
    const int n_cols = m.cols();
    const int n = n_rows + n_cols;  // vertices: rows first, then columns

    std::vector<std::vector<std::int32_t>> adj(n);
    for (int r = 0; r < n_rows; ++r) {
        for (std::int32_t c : m.row(r)) {
            adj[r].push_back(n_rows + c);
            adj[n_rows + c].push_back(r);
        }
    }

    std::size_t edges = 0;
    for (const auto& a : adj) {
        edges += a.size();
    }
    edges /= 2;

    // Forest check: exact, independent of the BFS depth cap.
    std::vector<int> component(n, -1);
    int n_components = 0;
    for (int s = 0; s < n; ++s) {
        if (component[s] != -1) {
            continue;
        }
        std::queue<int> queue;
        queue.push(s);
        component[s] = n_components;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            for (int v : adj[u]) {
                if (component[v] == -1) {
                    component[v] = n_components;
                    queue.push(v);
                }
            }
        }
        ++n_components;
    }
    if (edges == static_cast<std::size_t>(n - n_components)) {
        return {GirthResult::Kind::Infinite, 0};
    }

    // BFS from every vertex; the minimum over roots of dist(u)+dist(v)+1 for a
    // non-tree edge (u, v) is the girth. Depth is capped at bound/2 so only
    // cycles of length <= bound are guaranteed to be seen; once a cycle of
    // length g is known the cap drops to g/2, since only shorter cycles can
    // still improve the answer.
    int best = std::numeric_limits<int>::max();
    const int max_depth = bound / 2;
    std::vector<int> dist(n, -1);
    std::vector<int> parent(n, -1);
    std::vector<int> touched;
    for (int s = 0; s < n && best > 4; ++s) {
        const int cap = best == std::numeric_limits<int>::max() ? max_depth
                                                                : std::min(max_depth, best / 2);
        std::queue<int> queue;
        queue.push(s);
        dist[s] = 0;
        touched.push_back(s);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            if (dist[u] >= cap) {
                continue;
            }
            for (int v : adj[u]) {
                if (v == parent[u]) {
                    continue;
                }
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    touched.push_back(v);
                    queue.push(v);
                } else {
                    const int cycle = dist[u] + dist[v] + 1;
                    if (cycle < best) {
                        best = cycle;
                    }
                }
            }
        }
        for (int v : touched) {
            dist[v] = -1;
            parent[v] = -1;
        }
        touched.clear();
    }

    if (best <= bound) {
        return {GirthResult::Kind::Exact, best};
    }
    return {GirthResult::Kind::AtLeast, bound + 2};
}

bool qc_exponent_girth6(const ExponentMatrix& e, int n) {
    if (n < 2) {
        throw std::invalid_argument("qc_exponent_girth6: N must be at least 2");
    }
    const int p = e.p();
    const int q = e.q();
    for (int i1 = 1; i1 < p; ++i1) {
        for (int i2 = i1 + 1; i2 <= p; ++i2) {
            for (int j1 = 1; j1 < q; ++j1) {
                for (int j2 = j1 + 1; j2 <= q; ++j2) {
                    const int s = e.entry(i1, j1) + e.entry(i2, j2) -
                                  e.entry(i1, j2) - e.entry(i2, j1);
                    if (s % n == 0) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

}  // namespace scldpc
