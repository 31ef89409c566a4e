#include "scldpc/good_sequence.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace scldpc {
namespace {

void check_dimensions(std::size_t len, int p, int q) {
    if (p < 1 || q < 1 || p >= q) {
        throw std::invalid_argument("good sequence: requires 1 <= p < q");
    }
    if (len != static_cast<std::size_t>(p + q - 1)) {
        throw std::invalid_argument("good sequence: length " + std::to_string(len) +
                                    " != p+q-1 = " + std::to_string(p + q - 1));
    }
}

}  // namespace

int GoodSequence::moe() const { return scldpc::moe(values); }

GoodSequence GoodSequence::make(std::vector<int> values, int p, int q) {
    if (!is_good_sequence(values, p, q)) {
        throw std::invalid_argument("good sequence: predicate does not hold");
    }
    return GoodSequence{std::move(values), p, q};
}

bool is_good_sequence(const std::vector<int>& values, int p, int q) {
    check_dimensions(values.size(), p, q);
    for (int v : values) {
        if (v < 0) {
            throw std::invalid_argument("good sequence: negative element");
        }
    }
    const int len = p + q - 1;
    for (int t = 0; t < len; ++t) {  // 0-based start index
        for (int di = 1; di < p; ++di) {
            for (int dj = 1; dj < q && t + di + dj < len; ++dj) {
                if (values[t] + values[t + di + dj] == values[t + di] + values[t + dj]) {
                    return false;
                }
            }
        }
    }
    return true;
}

int moe(const std::vector<int>& values) {
    if (values.empty()) {
        throw std::invalid_argument("moe: empty sequence");
    }
    return *std::max_element(values.begin(), values.end());
}

std::optional<std::vector<int>> generate_good_sequence(int p, int q, int w) {
    if (p < 1 || q < 1 || p >= q) {
        throw std::invalid_argument("generate_good_sequence: requires 1 <= p < q");
    }
    if (w < 0) {
        throw std::invalid_argument("generate_good_sequence: negative w");
    }
    const int len = p + q - 1;

    std::vector<int> seq;
    seq.reserve(len);

    // Ascending candidate lists per position; candidates(n) excludes every
    // value a_{n2} + a_{n3} - a_{n1} over quadruples n1 < {n2, n3} < n with
    // n2 + n3 = n1 + n, n - n2 < p, n - n3 < q (1-based positions).
    auto candidates = [&](int n) {
        std::vector<bool> forbidden(w + 1, false);
        for (int n1 = 1; n1 <= n - 2; ++n1) {
            for (int n3 = n1 + 1; n3 <= n - 1; ++n3) {
                const int n2 = n1 - n3 + n;
                if (n - n2 < p && n - n3 < q) {
                    const int v = seq[n2 - 1] + seq[n3 - 1] - seq[n1 - 1];
                    if (v >= 0 && v <= w) {
                        forbidden[v] = true;
                    }
                }
            }
        }
        std::vector<int> out;
        for (int v = 0; v <= w; ++v) {
            if (!forbidden[v]) {
                out.push_back(v);
            }
        }
        return out;
    };

    std::vector<std::vector<int>> stack;
    std::vector<std::size_t> next;  // cursor into each candidate list
    stack.push_back(candidates(1));
    next.push_back(0);

    while (!stack.empty()) {
        if (next.back() >= stack.back().size()) {
            stack.pop_back();
            next.pop_back();
            if (!seq.empty()) {
                seq.pop_back();
            }
            continue;
        }
        seq.push_back(stack.back()[next.back()++]);
        if (static_cast<int>(seq.size()) == len) {
            return seq;
        }
        stack.push_back(candidates(static_cast<int>(seq.size()) + 1));
        next.push_back(0);
    }
    return std::nullopt;
}

std::optional<MinMoeResult> find_min_moe(int p, int q, int w_cap) {
    if (w_cap < 0) {
        throw std::invalid_argument("find_min_moe: negative w_cap");
    }
    for (int w = 0; w <= w_cap; ++w) {
        if (auto seq = generate_good_sequence(p, q, w)) {
            return MinMoeResult{w, std::move(*seq)};
        }
    }
    return std::nullopt;
}

}  // namespace scldpc
