#pragma once

#include <string>

#include "scldpc/binary_matrix.hpp"

namespace scldpc {

/// Standard alist text: "n m" (columns rows), max degrees, column degrees,
/// row degrees, then 1-based row indices per column and column indices per
/// row, each index line zero-padded to the section's max degree.
std::string export_alist(const BinaryMatrix& m);

/// Accepts both zero-padded and unpadded index lines; cross-checks the
/// per-row section against the per-column one.
BinaryMatrix import_alist(const std::string& text);

}  // namespace scldpc
