#include "scldpc/lifting.hpp"

#include <numeric>
#include <stdexcept>

#include "scldpc/cycle_check.hpp"
#include "scldpc/rng.hpp"

namespace scldpc {

void APMSpec::validate() const {
    if (m < 2) {
        throw std::invalid_argument("APMSpec: m must be at least 2");
    }
    if (s < 0 || s >= m) {
        throw std::invalid_argument("APMSpec: s out of Z_m");
    }
    if (a < 1 || a >= m || std::gcd(a, m) != 1) {
        throw std::invalid_argument("APMSpec: a not in Z_m^*");
    }
}

BinaryMatrix apm_matrix(const APMSpec& spec) {
    spec.validate();
    BinaryMatrix out(spec.m, spec.m);
    for (int j = 0; j < spec.m; ++j) {
        out.set((static_cast<long long>(j) * spec.a + spec.s) % spec.m, j);
    }
    return out;
}

BinaryMatrix cpm_lift(const ExponentMatrix& e, int n) {
    if (n < 1) {
        throw std::invalid_argument("cpm_lift: N must be positive");
    }
    BinaryMatrix out(e.p() * n, e.q() * n);
    for (int i = 0; i < e.p(); ++i) {
        for (int jcol = 0; jcol < e.q(); ++jcol) {
            const int shift = e.entry(i + 1, jcol + 1) % n;
            for (int j = 0; j < n; ++j) {
                out.set(i * n + (j + shift) % n, jcol * n + j);
            }
        }
    }
    return out;
}

BinaryMatrix lift(const LiftedCode& code) {
    if (code.specs.size() != code.base.ones_count()) {
        throw std::invalid_argument("lift: one spec per base one-position required");
    }
    BinaryMatrix out(code.base.rows() * code.m, code.base.cols() * code.m);
    std::size_t k = 0;
    for (int r = 0; r < code.base.rows(); ++r) {
        for (std::int32_t c : code.base.row(r)) {
            const APMSpec& spec = code.specs[k++];
            spec.validate();
            if (spec.m != code.m) {
                throw std::invalid_argument("lift: spec size differs from lift size");
            }
            for (int j = 0; j < code.m; ++j) {
                out.set(r * code.m + (static_cast<long long>(j) * spec.a + spec.s) % code.m,
                        c * code.m + j);
            }
        }
    }
    return out;
}

std::optional<LiftedCode> random_apm_assignment(const BinaryMatrix& base, int m,
                                                std::uint64_t seed, int max_tries) {
    if (m < 2) {
        throw std::invalid_argument("random_apm_assignment: m must be at least 2");
    }
    if (max_tries < 1) {
        throw std::invalid_argument("random_apm_assignment: max_tries must be positive");
    }
    const std::size_t n_ones = base.ones_count();
    std::mt19937_64 gen(rng::derive_seed(seed, 0));
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        LiftedCode code{base, m, {}};
        code.specs.reserve(n_ones);
        for (std::size_t k = 0; k < n_ones; ++k) {
            const int s = static_cast<int>(rng::bounded(gen, static_cast<std::uint64_t>(m)));
            int a;
            do {
                a = static_cast<int>(rng::bounded(gen, static_cast<std::uint64_t>(m)));
            } while (std::gcd(a, m) != 1);
            code.specs.push_back(APMSpec{s, a, m});
        }
        if (!has_four_cycle(lift(code))) {
            return code;
        }
    }
    return std::nullopt;
}

}  // namespace scldpc
