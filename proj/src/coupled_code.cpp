#include "scldpc/coupled_code.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace scldpc {

IndexSet IndexSet::of(std::vector<int> indices) {
    if (indices.empty()) {
        throw std::invalid_argument("IndexSet: empty");
    }
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    if (indices.front() < 0) {
        throw std::invalid_argument("IndexSet: negative index");
    }
    IndexSet set;
    set.indices_ = std::move(indices);
    return set;
}

std::optional<int> IndexSet::position_of(int value) const {
    auto it = std::lower_bound(indices_.begin(), indices_.end(), value);
    if (it == indices_.end() || *it != value) {
        return std::nullopt;
    }
    return static_cast<int>(it - indices_.begin());
}

CoupledCode build_coupled_code(const ExponentMatrix& e, const IndexSet& index_set) {
    for (int value : soe(e)) {
        if (!index_set.position_of(value)) {
            throw std::invalid_argument("index set does not contain element " +
                                        std::to_string(value) + " of the exponent matrix");
        }
    }
    std::vector<BinaryMatrix> components;
    components.reserve(index_set.size());
    for (int value : index_set.indices()) {
        components.push_back(incidence_matrix(e, value));
    }
    return CoupledCode{e, index_set, std::move(components)};
}

BinaryMatrix terminated_pcm(const CoupledCode& code, int coupling_length) {
    if (coupling_length < 1) {
        throw std::invalid_argument("terminated_pcm: coupling length must be positive");
    }
    const int p = code.p();
    const int q = code.q();
    const int w = code.w();
    const int L = coupling_length;
    BinaryMatrix h((L + w) * p, L * q);
    for (int block_row = 0; block_row < L + w; ++block_row) {
        for (int k = std::max(0, block_row - (L - 1)); k <= std::min(w, block_row); ++k) {
            const int block_col = block_row - k;
            const BinaryMatrix& comp = code.components[k];
            for (int i = 0; i < p; ++i) {
                for (std::int32_t j : comp.row(i)) {
                    h.set(block_row * p + i, block_col * q + j);
                }
            }
        }
    }
    return h;
}

BinaryMatrix representative_block(const CoupledCode& code) {
    const int p = code.p();
    const int q = code.q();
    const int w = code.w();
    BinaryMatrix b((w + 1) * p, (w + 1) * q);
    for (int r = 0; r <= w; ++r) {
        for (int c = r; c <= w; ++c) {
            const BinaryMatrix& comp = code.components[w - (c - r)];
            for (int i = 0; i < p; ++i) {
                for (std::int32_t j : comp.row(i)) {
                    b.set(r * p + i, c * q + j);
                }
            }
        }
    }
    return b;
}

std::vector<std::vector<int>> rep_index_matrix(const IndexSet& index_set) {
    const int w = index_set.width();
    std::vector<std::vector<int>> out(w + 1, std::vector<int>(w + 1, -1));
    for (int r = 0; r <= w; ++r) {
        for (int c = r; c <= w; ++c) {
            out[r][c] = index_set.at(w - (c - r));
        }
    }
    return out;
}

bool h_is_four_cycle_free(const ExponentMatrix& e, const IndexSet& index_set) {
    // A 4-cycle in H(E) joins two check rows at block offsets pos(e_{r,c})
    // apart; eliminating the offsets leaves the diagonal-sum condition on the
    // matrix of positions. Mirrored pattern orientations are covered: the
    // condition is symmetric under row and column swaps.
    std::vector<int> position_entries;
    position_entries.reserve(e.entries().size());
    for (int value : e.entries()) {
        auto pos = index_set.position_of(value);
        if (!pos) {
            throw std::invalid_argument("index set does not contain element " +
                                        std::to_string(value) + " of the exponent matrix");
        }
        position_entries.push_back(*pos);
    }
    return is_four_cycle_free(ExponentMatrix(e.p(), e.q(), std::move(position_entries)));
}

Rational design_rate(int p, int q, int coupling_length, int w) {
    if (coupling_length < 1) {
        throw std::invalid_argument("design_rate: coupling length must be positive");
    }
    if (p < 1 || q <= p) {
        throw std::invalid_argument("design_rate: requires 1 <= p < q");
    }
    if (w < 0) {
        throw std::invalid_argument("design_rate: negative w");
    }
    const std::int64_t L = coupling_length;
    return Rational(L * q - (L + w) * p, L * q);
}

Rational design_rate_limit(int p, int q) {
    if (p < 1 || q <= p) {
        throw std::invalid_argument("design_rate_limit: requires 1 <= p < q");
    }
    return Rational(q - p, q);
}

int constraint_length(int p, int w) {
    if (p < 1 || w < 0) {
        throw std::invalid_argument("constraint_length: requires p >= 1, w >= 0");
    }
    return p * (w + 1);
}

}  // namespace scldpc
