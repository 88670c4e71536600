#pragma once

#include <functional>

#include "plie/linalg.hpp"

namespace plie {
namespace scan {

/// Execution mode for the enumeration kernels. Parallel and Serial produce
/// bit-identical output; the serial path is the reference implementation the
/// tests compare against, Auto picks Parallel when OpenMP is compiled in.
enum class Mode { Serial, Parallel, Auto };

/// Number of subspaces of F^n (sum of Gaussian binomials).
u64 count_subspaces(const Field& F, u32 n);

/// All subspaces of F^n with keep(S) true, ordered by (dim, pivot set, fill),
/// which is a fixed total order. keep must be pure. Throws capacity_error
/// when the ambient subspace count exceeds budget.
std::vector<Subspace> subspaces(const Field& F, u32 n,
                                const std::function<bool(const Subspace&)>& keep,
                                u64 budget, Mode mode = Mode::Auto);

/// All nonzero vectors v of F^n with keep(v) true, in index order.
std::vector<Vec> vectors(const Field& F, u32 n,
                         const std::function<bool(const Vec&)>& keep,
                         u64 budget, Mode mode = Mode::Auto);

/// Exists a nonzero vector violating pred (returns the witness), scanning in
/// index order; deterministic: returns the least witness.
std::optional<Vec> first_violation(const Field& F, u32 n,
                                   const std::function<bool(const Vec&)>& pred,
                                   u64 budget, Mode mode = Mode::Auto);

bool parallel_available();

}  // namespace scan
}  // namespace plie
