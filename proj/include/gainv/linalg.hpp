#pragma once

#include <optional>
#include <vector>

#include "gainv/field.hpp"

namespace gainv {

// Exact dense linear algebra over F_q.  Pivoting is deterministic (first
// nonzero entry in column scan order), so kernels and echelon forms are
// canonical for a given row/column layout.
using FqRow = std::vector<Fq>;
using FqMatrix = std::vector<FqRow>;

// In-place reduced row echelon form; returns the pivot column of each pivot
// row in order.
std::vector<size_t> rref(FqMatrix& mat, const Field& k);

size_t rank(FqMatrix mat, const Field& k);

// Canonical kernel basis: one vector per free column, free coordinate set to
// one, pivot coordinates solved; ordered by free column index.
std::vector<FqRow> kernel_basis(FqMatrix mat, size_t ncols, const Field& k);

// Solve A x = b; empty optional when inconsistent.  Free variables are set to
// zero, so the solution is canonical.
std::optional<FqRow> solve(FqMatrix a, FqRow b, const Field& k);

}  // namespace gainv
