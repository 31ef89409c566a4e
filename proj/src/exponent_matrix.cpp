#include "scldpc/exponent_matrix.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace scldpc {

ExponentMatrix::ExponentMatrix(int p, int q, std::vector<int> entries)
    : p_(p), q_(q), entries_(std::move(entries)) {
    if (p < 1 || q < 1) {
        throw std::invalid_argument("ExponentMatrix: dimensions must be positive");
    }
    if (entries_.size() != static_cast<std::size_t>(p) * static_cast<std::size_t>(q)) {
        throw std::invalid_argument("ExponentMatrix: entry count does not match p*q");
    }
    for (int v : entries_) {
        if (v < 0) {
            throw std::invalid_argument("ExponentMatrix: negative entry");
        }
    }
}

ExponentMatrix ExponentMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    if (rows.empty() || rows.front().empty()) {
        throw std::invalid_argument("ExponentMatrix: empty rows");
    }
    std::vector<int> flat;
    flat.reserve(rows.size() * rows.front().size());
    for (const auto& row : rows) {
        if (row.size() != rows.front().size()) {
            throw std::invalid_argument("ExponentMatrix: ragged rows");
        }
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return ExponentMatrix(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()),
                          std::move(flat));
}

int ExponentMatrix::max_entry() const {
    return *std::max_element(entries_.begin(), entries_.end());
}

ExponentMatrix matrix_from_sequence(const std::vector<int>& values, int p, int q) {
    if (p < 1 || q < 1 || p >= q) {
        throw std::invalid_argument("matrix_from_sequence: requires 1 <= p < q");
    }
    if (values.size() != static_cast<std::size_t>(p + q - 1)) {
        throw std::invalid_argument("matrix_from_sequence: sequence length must be p+q-1");
    }
    std::vector<int> flat(static_cast<std::size_t>(p) * q);
    for (int i = 1; i <= p; ++i) {
        for (int j = 1; j <= q; ++j) {
            flat[(i - 1) * q + (j - 1)] = values[j - i + p - 1];  // a_{j-i+p}, 1-based
        }
    }
    return ExponentMatrix(p, q, std::move(flat));
}

ExponentMatrix matrix_from_sequence(const GoodSequence& seq) {
    return matrix_from_sequence(seq.values, seq.p, seq.q);
}

bool is_four_cycle_free(const ExponentMatrix& e) {
    const int p = e.p();
    const int q = e.q();
    // Equal diagonal sums on rows (i1, i2) <=> the column-difference vector
    // row i1 - row i2 has a repeated value.
    std::vector<int> diff(q);
    for (int i1 = 1; i1 < p; ++i1) {
        for (int i2 = i1 + 1; i2 <= p; ++i2) {
            for (int j = 1; j <= q; ++j) {
                diff[j - 1] = e.entry(i1, j) - e.entry(i2, j);
            }
            std::sort(diff.begin(), diff.end());
            if (std::adjacent_find(diff.begin(), diff.end()) != diff.end()) {
                return false;
            }
        }
    }
    return true;
}

std::vector<int> soe(const ExponentMatrix& e) {
    std::set<int> values(e.entries().begin(), e.entries().end());
    return {values.begin(), values.end()};
}

BinaryMatrix incidence_matrix(const ExponentMatrix& e, int value) {
    BinaryMatrix m(e.p(), e.q());
    for (int i = 1; i <= e.p(); ++i) {
        for (int j = 1; j <= e.q(); ++j) {
            if (e.entry(i, j) == value) {
                m.set(i - 1, j - 1);
            }
        }
    }
    return m;
}

int prime_after(int q) {
    if (q < 1) {
        throw std::invalid_argument("prime_after: q must be positive");
    }
    for (int n = q + 1;; ++n) {
        bool prime = n >= 2;
        for (int d = 2; d * d <= n; ++d) {
            if (n % d == 0) {
                prime = false;
                break;
            }
        }
        if (prime) {
            return n;
        }
    }
}

ExponentMatrix karimi_matrix(int p, int q) {
    if (p < 1 || p >= q) {
        throw std::invalid_argument("karimi_matrix: requires 1 <= p < q");
    }
    const int n = prime_after(q);
    std::vector<int> flat(static_cast<std::size_t>(p) * q);
    for (int i = 1; i <= p; ++i) {
        for (int j = 1; j <= q; ++j) {
            flat[(i - 1) * q + (j - 1)] = ((i - 1) * (j - 1)) % n;
        }
    }
    return ExponentMatrix(p, q, std::move(flat));
}

std::string to_text(const ExponentMatrix& e) {
    std::ostringstream out;
    for (int i = 1; i <= e.p(); ++i) {
        for (int j = 1; j <= e.q(); ++j) {
            if (j > 1) {
                out << ' ';
            }
            out << e.entry(i, j);
        }
        out << '\n';
    }
    return out.str();
}

ExponentMatrix parse_matrix_text(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::vector<int> row;
        long long v = 0;
        while (fields >> v) {
            if (v < 0) {
                throw std::invalid_argument("matrix text: negative entry");
            }
            row.push_back(static_cast<int>(v));
        }
        if (!fields.eof()) {
            throw std::invalid_argument("matrix text: non-integer field");
        }
        if (!row.empty()) {
            rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) {
        throw std::invalid_argument("matrix text: no rows");
    }
    return ExponentMatrix::from_rows(rows);
}

}  // namespace scldpc
