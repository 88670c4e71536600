#pragma once

#include <functional>
#include <string>

#include "plie/linalg.hpp"

namespace plie {

struct LieAlgebra;
using LiePtr = std::shared_ptr<const LieAlgebra>;

/// Finite-dimensional Lie algebra given by structure constants over a Field.
/// Immutable description; every operation returns new values.
struct LieAlgebra {
    FieldPtr F;
    u32 dim = 0;
    /// sc[pair_index(i,j)] = [e_i, e_j] for i < j; antisymmetry by storage.
    std::vector<Vec> sc;
    std::vector<std::string> labels;

    static u32 pair_index(u32 i, u32 j, u32 n) {  // requires i < j
        return i * n - i * (i + 1) / 2 + (j - i - 1);
    }
    const Field& field() const { return *F; }
    Vec bracket_basis(u32 i, u32 j) const;  // [e_i, e_j], any i, j
    Vec bracket(const Vec& x, const Vec& y) const;
    Mat ad(const Vec& x) const;  // matrix of y -> [x, y]
    bool is_abelian() const;
};

/// Validates the Jacobi identity on all basis triples; throws with the
/// offending triple otherwise.
LiePtr lie_make(FieldPtr F, u32 dim, std::vector<Vec> sc,
                std::vector<std::string> labels = {});

/// Structure-constant table from a bracket oracle (used by constructions).
LiePtr lie_from_bracket(FieldPtr F, u32 dim,
                        const std::function<Vec(u32, u32)>& bracket_ij,
                        std::vector<std::string> labels = {});

struct SeriesReport {
    enum Kind { Derived, LowerCentral } kind;
    std::vector<Subspace> terms;  // term 0 = whole algebra, strictly descending
    bool stabilized_at_zero = false;
};

SeriesReport series(const LieAlgebra& L, SeriesReport::Kind kind);
bool is_soluble(const LieAlgebra& L);
bool is_nilpotent(const LieAlgebra& L);

enum class ClosureMode { Subalgebra, Ideal };
/// Smallest subalgebra (resp. ideal) containing S.
Subspace closure(const LieAlgebra& L, const Subspace& S, ClosureMode mode);
bool is_subalgebra(const LieAlgebra& L, const Subspace& S);
bool is_ideal(const LieAlgebra& L, const Subspace& S);

Subspace centralizer(const LieAlgebra& L, const Subspace& A);
Subspace normalizer(const LieAlgebra& L, const Subspace& U);
Subspace center(const LieAlgebra& L);

/// Engel subalgebra: kernel of ad(a)^dim.
Subspace engel(const LieAlgebra& L, const Vec& a);

/// Derived algebra [L, L] as a subspace.
Subspace derived_subalgebra(const LieAlgebra& L);

struct Quotient {
    LiePtr algebra;
    Mat proj;  // dim(Q) x dim(L)
    Mat sect;  // dim(L) x dim(Q), proj * sect = identity
    Subspace kernel;
};

/// Quotient by a verified ideal; the quotient basis is the complement of the
/// ideal's pivot columns in ascending index order.
Quotient quotient(const LieAlgebra& L, const Subspace& I);

LiePtr direct_sum(const LieAlgebra& A, const LieAlgebra& B);

/// Basis of Der(L) as matrices; contains ad(L).
std::vector<Mat> derivations(const LieAlgebra& L);

/// View of a subalgebra U as an algebra in its own right, with the change
/// of coordinates recorded (rows of U are the new basis).
struct SubalgebraView {
    LiePtr algebra;
    Subspace space;           // in the ambient algebra
    Vec to_ambient(const Field& F, const Vec& local) const;
    std::optional<Vec> to_local(const Field& F, const Vec& ambient) const;
};
SubalgebraView subalgebra_view(const LieAlgebra& L, const Subspace& U);

}  // namespace plie
