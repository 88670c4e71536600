// Benchmark of the enumeration kernels: OpenMP-parallel scan vs the serial
// reference, on subspace and vector scans large enough to matter.

#include <chrono>
#include <iostream>

#include "plie/enumerate.hpp"
#include "plie/restricted.hpp"

using namespace plie;

namespace {

double time_once(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// three commuting Heisenberg blocks: a 9-dim nilpotent algebra whose
// subalgebra scan is a realistic pruned predicate
LiePtr bench_algebra(FieldPtr F) {
    u32 n = 9;
    auto bracket_ij = [&](u32 i, u32 j) {
        Vec r(n, 0);
        if (j == i + 1 && i % 3 == 0) r[i + 2] = F->one();  // [e_i, e_{i+1}] = e_{i+2}
        return r;
    };
    return lie_from_bracket(F, n, bracket_ij);
}

}  // namespace

int main(int argc, char** argv) {
    u32 dim = argc > 1 ? static_cast<u32>(std::stoul(argv[1])) : 8;
    auto F2 = field_make(2, 1);
    auto F3 = field_make(3, 1);
    auto L = bench_algebra(F2);

    std::cout << "kernel benchmark (" << (scan::parallel_available() ? "OpenMP enabled" : "serial build")
              << ")\n\n";

    {
        u64 count = scan::count_subspaces(*F2, dim);
        std::cout << "subspace scan, GF(2)^" << dim << " (" << count << " subspaces), no filter\n";
        std::vector<Subspace> a, b;
        double ts = time_once([&] {
            a = scan::subspaces(*F2, dim, [](const Subspace&) { return true; }, 1u << 30,
                                scan::Mode::Serial);
        });
        double tp = time_once([&] {
            b = scan::subspaces(*F2, dim, [](const Subspace&) { return true; }, 1u << 30,
                                scan::Mode::Parallel);
        });
        std::cout << "  serial   " << ts << " s\n  parallel " << tp << " s  (speedup "
                  << ts / tp << "x, outputs " << (a == b ? "identical" : "DIFFER") << ")\n\n";
    }
    {
        std::cout << "subalgebra filter on a 9-dim nilpotent algebra over GF(2)\n";
        std::vector<Subspace> a, b;
        double ts = time_once([&] {
            a = enumerate_subalgebras(*L, SubalgFilter::All, 1u << 30, scan::Mode::Serial);
        });
        double tp = time_once([&] {
            b = enumerate_subalgebras(*L, SubalgFilter::All, 1u << 30, scan::Mode::Parallel);
        });
        std::cout << "  serial   " << ts << " s\n  parallel " << tp << " s  (speedup "
                  << ts / tp << "x, " << a.size() << " subalgebras, outputs "
                  << (a == b ? "identical" : "DIFFER") << ")\n\n";
    }
    {
        u32 n = 12;
        std::cout << "vector scan, GF(3)^" << n << " with a rank predicate\n";
        auto pred = [&](const Vec& v) {
            u32 nz = 0;
            for (Fel x : v) nz += (x != 0);
            return nz == 3;
        };
        std::vector<Vec> a, b;
        double ts =
            time_once([&] { a = scan::vectors(*F3, n, pred, 1u << 30, scan::Mode::Serial); });
        double tp =
            time_once([&] { b = scan::vectors(*F3, n, pred, 1u << 30, scan::Mode::Parallel); });
        std::cout << "  serial   " << ts << " s\n  parallel " << tp << " s  (speedup "
                  << ts / tp << "x, " << a.size() << " hits, outputs "
                  << (a == b ? "identical" : "DIFFER") << ")\n";
    }
    return 0;
}
