#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace scldpc {

/// Sparse binary matrix stored as sorted column indices per row.
/// Rows are check nodes and columns are variable nodes when the matrix is
/// read as a Tanner graph.
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(int rows, int cols);

    // Builds from an arbitrary list of positions; duplicates are collapsed.
    static BinaryMatrix from_ones(int rows, int cols,
                                  const std::vector<std::pair<int, int>>& ones);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t ones_count() const;

    bool at(int r, int c) const;
    void set(int r, int c);

    const std::vector<std::int32_t>& row(int r) const { return row_cols_[r]; }

    // Row indices per column; built on demand.
    std::vector<std::vector<std::int32_t>> column_adjacency() const;

    std::vector<int> row_degrees() const;
    std::vector<int> column_degrees() const;

    bool operator==(const BinaryMatrix& other) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::vector<std::int32_t>> row_cols_;
};

}  // namespace scldpc
