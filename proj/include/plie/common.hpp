#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace plie {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

/// Thrown when an enumeration would exceed the configured budget.
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when two independent computation routes disagree. Never caught
/// internally; a consistency failure means a bug, not bad input.
struct consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

struct Budget {
    u64 subspaces = 10'000'000;  // ambient subspace count for lattice scans
    u64 elements = 100'000;      // full element scans (eigenvalues, atoms, ...)
    u64 p_operations = 100'000;  // |Z|^dim enumeration cap
    int cohomology_nmax = 3;
    u64 iso_nodes = 5'000'000;   // backtracking isomorphism search nodes

    Budget scaled(double f) const {
        Budget b = *this;
        b.subspaces = static_cast<u64>(b.subspaces * f);
        b.elements = static_cast<u64>(b.elements * f);
        b.p_operations = static_cast<u64>(b.p_operations * f);
        b.iso_nodes = static_cast<u64>(b.iso_nodes * f);
        return b;
    }
};

}  // namespace plie
