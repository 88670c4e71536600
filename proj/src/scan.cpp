#include "plie/scan.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace plie {
namespace scan {

bool parallel_available() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

namespace {

bool use_parallel(Mode m) {
    if (m == Mode::Serial) return false;
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

u64 powq(u64 q, u32 e) {
    u64 r = 1;
    for (u32 i = 0; i < e; ++i) {
        if (r > (u64(1) << 62) / q) throw capacity_error("scan: count overflow");
        r *= q;
    }
    return r;
}

// Enumeration of RREF matrices with a fixed pivot column set. The free
// cells of row r are the columns right of pivots[r] that are not pivots.
struct PivotShape {
    std::vector<u32> pivots;
    std::vector<std::pair<u32, u32>> free_cells;  // (row, col)
    u64 fills = 1;
};

PivotShape shape_for(const Field& F, u32 n, const std::vector<u32>& pivots) {
    PivotShape s;
    s.pivots = pivots;
    std::vector<bool> is_pivot(n, false);
    for (u32 p : pivots) is_pivot[p] = true;
    for (u32 r = 0; r < pivots.size(); ++r)
        for (u32 c = pivots[r] + 1; c < n; ++c)
            if (!is_pivot[c]) s.free_cells.emplace_back(r, c);
    s.fills = powq(F.size(), static_cast<u32>(s.free_cells.size()));
    return s;
}

Subspace subspace_for_fill(const Field& F, u32 n, const PivotShape& s, u64 fill) {
    Subspace sp;
    sp.ambient = n;
    sp.pivots = s.pivots;
    sp.rows.assign(s.pivots.size(), Vec(n, 0));
    for (u32 r = 0; r < s.pivots.size(); ++r) sp.rows[r][s.pivots[r]] = F.one();
    // digits of fill, last free cell least significant
    for (size_t i = s.free_cells.size(); i-- > 0;) {
        auto [r, c] = s.free_cells[i];
        sp.rows[r][c] = static_cast<Fel>(fill % F.size());
        fill /= F.size();
    }
    return sp;
}

// next k-combination of {0..n-1} in lex order; false when done
bool next_combination(std::vector<u32>& comb, u32 n) {
    u32 k = static_cast<u32>(comb.size());
    if (k == 0) return false;
    u32 i = k;
    while (i-- > 0) {
        if (comb[i] < n - k + i) {
            ++comb[i];
            for (u32 j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

u64 count_subspaces(const Field& F, u32 n) {
    // sum over k of the Gaussian binomial [n choose k]_q
    u64 q = F.size(), total = 0;
    for (u32 k = 0; k <= n; ++k) {
        // [n k]_q = prod_{i=0}^{k-1} (q^(n-i) - 1) / (q^(i+1) - 1)
        // compute exactly with u64 via alternating multiply/divide
        unsigned __int128 num = 1;
        for (u32 i = 0; i < k; ++i) {
            num *= (powq(q, n - i) - 1);
            num /= (powq(q, i + 1) - 1);
            if (num > (static_cast<unsigned __int128>(1) << 63))
                throw capacity_error("subspace count overflow");
        }
        total += static_cast<u64>(num);
    }
    return total;
}

std::vector<Subspace> subspaces(const Field& F, u32 n,
                                const std::function<bool(const Subspace&)>& keep,
                                u64 budget, Mode mode) {
    u64 total = count_subspaces(F, n);
    if (total > budget)
        throw capacity_error("subspace scan: " + std::to_string(total) +
                             " subspaces exceeds budget " + std::to_string(budget));
    // collect pivot shapes grouped by dimension, in (dim, pivot set) order
    std::vector<PivotShape> shapes;
    shapes.push_back(shape_for(F, n, {}));  // zero subspace
    for (u32 k = 1; k <= n; ++k) {
        std::vector<u32> comb(k);
        for (u32 i = 0; i < k; ++i) comb[i] = i;
        do {
            shapes.push_back(shape_for(F, n, comb));
        } while (next_combination(comb, n));
    }
    std::vector<std::vector<Subspace>> blocks(shapes.size());
    auto run_block = [&](size_t b) {
        const PivotShape& s = shapes[b];
        std::vector<Subspace>& out = blocks[b];
        for (u64 fill = 0; fill < s.fills; ++fill) {
            Subspace sp = subspace_for_fill(F, n, s, fill);
            if (keep(sp)) out.push_back(std::move(sp));
        }
    };
    if (use_parallel(mode)) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
        for (long long b = 0; b < static_cast<long long>(shapes.size()); ++b)
            run_block(static_cast<size_t>(b));
#endif
    } else {
        for (size_t b = 0; b < shapes.size(); ++b) run_block(b);
    }
    std::vector<Subspace> out;
    out.reserve(total / 2);
    for (auto& blk : blocks)
        for (auto& s : blk) out.push_back(std::move(s));
    std::sort(out.begin(), out.end(),
              [](const Subspace& a, const Subspace& b) { return subspace_cmp(a, b) < 0; });
    return out;
}

std::vector<Vec> vectors(const Field& F, u32 n,
                         const std::function<bool(const Vec&)>& keep,
                         u64 budget, Mode mode) {
    u64 total = vec_count(F, n);
    if (total > budget)
        throw capacity_error("vector scan: " + std::to_string(total) +
                             " vectors exceeds budget " + std::to_string(budget));
    std::vector<std::vector<Vec>> chunks;
    u64 chunk_size = 4096;
    u64 nchunks = (total + chunk_size - 1) / chunk_size;
    chunks.resize(static_cast<size_t>(nchunks));
    auto run_chunk = [&](u64 c) {
        u64 lo = c * chunk_size, hi = std::min(total, lo + chunk_size);
        for (u64 idx = std::max<u64>(lo, 1); idx < hi; ++idx) {
            Vec v = vec_from_index(F, n, idx);
            if (keep(v)) chunks[static_cast<size_t>(c)].push_back(std::move(v));
        }
    };
    if (use_parallel(mode)) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
        for (long long c = 0; c < static_cast<long long>(nchunks); ++c)
            run_chunk(static_cast<u64>(c));
#endif
    } else {
        for (u64 c = 0; c < nchunks; ++c) run_chunk(c);
    }
    std::vector<Vec> out;
    for (auto& ch : chunks)
        for (auto& v : ch) out.push_back(std::move(v));
    return out;
}

std::optional<Vec> first_violation(const Field& F, u32 n,
                                   const std::function<bool(const Vec&)>& pred,
                                   u64 budget, Mode mode) {
    auto bad = vectors(F, n, [&](const Vec& v) { return !pred(v); }, budget, mode);
    if (bad.empty()) return std::nullopt;
    return bad.front();
}

}  // namespace scan
}  // namespace plie
