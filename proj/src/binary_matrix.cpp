#include "scldpc/binary_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace scldpc {

BinaryMatrix::BinaryMatrix(int rows, int cols) : rows_(rows), cols_(cols), row_cols_(rows) {
    if (rows < 0 || cols < 0) {
        throw std::invalid_argument("BinaryMatrix: negative dimensions");
    }
}

BinaryMatrix BinaryMatrix::from_ones(int rows, int cols,
                                     const std::vector<std::pair<int, int>>& ones) {
    BinaryMatrix m(rows, cols);
    for (const auto& [r, c] : ones) {
        m.set(r, c);
    }
    return m;
}

std::size_t BinaryMatrix::ones_count() const {
    std::size_t n = 0;
    for (const auto& row : row_cols_) {
        n += row.size();
    }
    return n;
}

bool BinaryMatrix::at(int r, int c) const {
    const auto& row = row_cols_.at(r);
    return std::binary_search(row.begin(), row.end(), static_cast<std::int32_t>(c));
}

void BinaryMatrix::set(int r, int c) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
        throw std::out_of_range("BinaryMatrix::set: position out of bounds");
    }
    auto& row = row_cols_[r];
    if (row.empty() || row.back() < c) {
        row.push_back(c);
        return;
    }
    auto it = std::lower_bound(row.begin(), row.end(), static_cast<std::int32_t>(c));
    if (it == row.end() || *it != c) {
        row.insert(it, c);
    }
}

std::vector<std::vector<std::int32_t>> BinaryMatrix::column_adjacency() const {
    std::vector<std::vector<std::int32_t>> cols(cols_);
    for (int r = 0; r < rows_; ++r) {
        for (std::int32_t c : row_cols_[r]) {
            cols[c].push_back(r);
        }
    }
    return cols;
}

std::vector<int> BinaryMatrix::row_degrees() const {
    std::vector<int> deg(rows_);
    for (int r = 0; r < rows_; ++r) {
        deg[r] = static_cast<int>(row_cols_[r].size());
    }
    return deg;
}

std::vector<int> BinaryMatrix::column_degrees() const {
    std::vector<int> deg(cols_, 0);
    for (const auto& row : row_cols_) {
        for (std::int32_t c : row) {
            ++deg[c];
        }
    }
    return deg;
}

}  // namespace scldpc
