#include "scldpc/alist.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace scldpc {
namespace {

void append_index_line(std::string& out, const std::vector<std::int32_t>& indices,
                       int pad_to) {
    for (int k = 0; k < pad_to; ++k) {
        if (k > 0) {
            out += ' ';
        }
        if (k < static_cast<int>(indices.size())) {
            out += std::to_string(indices[k] + 1);  // 1-based on disk
        } else {
            out += '0';
        }
    }
    out += '\n';
}

std::vector<int> parse_int_line(std::istream& in, const char* what) {
    std::string line;
    if (!std::getline(in, line)) {
        throw std::invalid_argument(std::string("alist: missing ") + what);
    }
    std::istringstream fields(line);
    std::vector<int> out;
    long long v = 0;
    while (fields >> v) {
        out.push_back(static_cast<int>(v));
    }
    if (!fields.eof()) {
        throw std::invalid_argument(std::string("alist: non-integer field in ") + what);
    }
    return out;
}

}  // namespace

std::string export_alist(const BinaryMatrix& m) {
    const auto col_deg = m.column_degrees();
    const auto row_deg = m.row_degrees();
    const int max_col = col_deg.empty() ? 0 : *std::max_element(col_deg.begin(), col_deg.end());
    const int max_row = row_deg.empty() ? 0 : *std::max_element(row_deg.begin(), row_deg.end());

    std::string out;
    out += std::to_string(m.cols()) + " " + std::to_string(m.rows()) + "\n";
    out += std::to_string(max_col) + " " + std::to_string(max_row) + "\n";
    for (int c = 0; c < m.cols(); ++c) {
        out += (c > 0 ? " " : "") + std::to_string(col_deg[c]);
    }
    out += '\n';
    for (int r = 0; r < m.rows(); ++r) {
        out += (r > 0 ? " " : "") + std::to_string(row_deg[r]);
    }
    out += '\n';

    const auto cols = m.column_adjacency();
    for (int c = 0; c < m.cols(); ++c) {
        append_index_line(out, cols[c], max_col);
    }
    for (int r = 0; r < m.rows(); ++r) {
        append_index_line(out, m.row(r), max_row);
    }
    return out;
}

BinaryMatrix import_alist(const std::string& text) {
    std::istringstream in(text);

    const auto dims = parse_int_line(in, "dimension line");
    if (dims.size() != 2 || dims[0] < 1 || dims[1] < 1) {
        throw std::invalid_argument("alist: bad dimension line");
    }
    const int n_cols = dims[0];
    const int n_rows = dims[1];

    const auto max_degrees = parse_int_line(in, "max-degree line");
    if (max_degrees.size() != 2) {
        throw std::invalid_argument("alist: bad max-degree line");
    }

    const auto col_deg = parse_int_line(in, "column degrees");
    const auto row_deg = parse_int_line(in, "row degrees");
    if (static_cast<int>(col_deg.size()) != n_cols ||
        static_cast<int>(row_deg.size()) != n_rows) {
        throw std::invalid_argument("alist: degree list length mismatch");
    }

    BinaryMatrix m(n_rows, n_cols);
    std::string line;
    for (int c = 0; c < n_cols; ++c) {
        if (!std::getline(in, line)) {
            throw std::invalid_argument("alist: missing column index line");
        }
        std::istringstream fields(line);
        int count = 0;
        long long v = 0;
        while (fields >> v) {
            if (v == 0) {
                continue;  // padding
            }
            if (v < 1 || v > n_rows) {
                throw std::invalid_argument("alist: row index out of range");
            }
            m.set(static_cast<int>(v) - 1, c);
            ++count;
        }
        if (count != col_deg[c]) {
            throw std::invalid_argument("alist: column degree mismatch");
        }
    }
    for (int r = 0; r < n_rows; ++r) {
        if (!std::getline(in, line)) {
            throw std::invalid_argument("alist: missing row index line");
        }
        std::istringstream fields(line);
        std::vector<std::int32_t> cols;
        long long v = 0;
        while (fields >> v) {
            if (v == 0) {
                continue;
            }
            if (v < 1 || v > n_cols) {
                throw std::invalid_argument("alist: column index out of range");
            }
            cols.push_back(static_cast<int>(v) - 1);
        }
        std::sort(cols.begin(), cols.end());
        if (cols != m.row(r)) {
            throw std::invalid_argument("alist: row section disagrees with column section");
        }
    }
    return m;
}

}  // namespace scldpc
