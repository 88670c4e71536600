#pragma once

#include "plie/enumerate.hpp"
#include "plie/rep.hpp"

namespace plie {

/// p-operation on a Lie algebra, stored as basis images e_i -> e_i^[p].
/// Values on arbitrary elements come from evaluate_p (Jacobson's formula).
struct POperation {
    std::vector<Vec> images;
};

struct RestrictedAlgebra {
    LiePtr L;
    POperation pop;

    const Field& field() const { return *L->F; }
    u32 dim() const { return L->dim; }
};

/// The unique p-operation with the given basis images; rejects (naming the
/// index) unless ad(e_i)^p = ad(images[i]) for every i.
RestrictedAlgebra jacobson_construct(LiePtr L, std::vector<Vec> images);

/// x^[p] for arbitrary x, via the additive law with Jacobson's correction
/// terms: i*s_i(x,y) = coefficient of t^(i-1) in ad(tx+y)^(p-1)(x).
/// Postcondition ad(result) = ad(x)^p is checked on every call.
Vec evaluate_p(const RestrictedAlgebra& R, const Vec& x);

/// S(x,y) = sum of the correction terms, so that
/// (x+y)^[p] = x^[p] + y^[p] + S(x,y).
Vec jacobson_correction(const LieAlgebra& L, const Vec& x, const Vec& y);

/// ad(e_i)^p inner for every basis element (sufficient: the additive defect
/// of x -> ad(x)^p is inner).
bool is_restrictable(const LieAlgebra& L);
/// Oracle-grade variant: full element scan; used by tests.
bool is_restrictable_by_scan(const LieAlgebra& L, u64 element_budget);

/// All p-operations on a restrictable algebra: one reference operation
/// shifted by arbitrary central images on the basis (|Z|^dim of them).
std::vector<RestrictedAlgebra> enumerate_p_operations(LiePtr L, u64 budget);

bool p_closed_check(const RestrictedAlgebra& R, const Subspace& U, ClosureMode kind);
Subspace p_closure(const RestrictedAlgebra& R, const Subspace& U, ClosureMode kind);

/// Subalgebra as restricted algebra in its own coordinates (U must be a
/// [p]-subalgebra).
struct RestrictedView {
    RestrictedAlgebra R;
    SubalgebraView view;
};
RestrictedView restricted_view(const RestrictedAlgebra& R, const Subspace& U);

std::vector<Subspace> p_subalgebra_lattice(const RestrictedAlgebra& R, u64 budget,
                                           scan::Mode mode = scan::Mode::Auto);
std::vector<Subspace> p_ideal_lattice(const RestrictedAlgebra& R, u64 element_budget);
std::vector<Subspace> maximal_p_subalgebras(const RestrictedAlgebra& R, u64 budget,
                                            scan::Mode mode = scan::Mode::Auto);

/// Intersection of the maximal [p]-subalgebras.
Subspace p_frattini(const RestrictedAlgebra& R, u64 budget, scan::Mode mode = scan::Mode::Auto);

std::vector<Subspace> minimal_p_ideals(const RestrictedAlgebra& R, u64 element_budget);

struct ChiefFactor {
    Subspace upper, lower;   // factor = upper/lower
    u32 dim = 0;
    bool null_factor = false;     // upper^[p] <= lower
    bool central = false;         // [L, upper] <= lower
    bool atom_factor = false;     // factor has no proper nonzero [p]-subalgebra
};

struct ChiefSeries {
    std::vector<Subspace> terms;      // descending, L ... 0
    std::vector<ChiefFactor> factors; // factor i = terms[i]/terms[i+1]
};

/// [p]-chief series built by repeatedly taking the lexicographically least
/// minimal [p]-ideal of the current quotient.
ChiefSeries p_chief_series(const RestrictedAlgebra& R, u64 element_budget);

/// Quotient by a [p]-ideal, with the induced p-operation.
struct RestrictedQuotient {
    RestrictedAlgebra R;
    Mat proj, sect;
    Subspace kernel;
};
RestrictedQuotient p_quotient(const RestrictedAlgebra& R, const Subspace& K);

/// Socle when primitive (minimal [p]-ideal equal to its own centralizer).
std::optional<Subspace> is_primitive(const RestrictedAlgebra& R, u64 element_budget);

/// A p-operation equal to the given one outside A and null on the abelian
/// ideal A.
RestrictedAlgebra null_on_ideal_pop(const RestrictedAlgebra& R, const Subspace& A);

/// Witness chain L = T_0 > T_1 > ... > S when S is [p]-subnormal.
std::optional<std::vector<Subspace>> is_p_subnormal(const RestrictedAlgebra& R,
                                                    const Subspace& S);

/// rho(x^[p]) = rho(x)^p on the basis (equivalent to the split extension
/// being restricted).
bool is_p_module(const RestrictedAlgebra& R, const Representation& rho);

/// Split extension V ⋊ L with the module first in the basis; p-operation
/// restricts to R on L and to module_images (default null) on V.
/// module_images require v^[p] in the invariants V^L.
RestrictedAlgebra restricted_split_extension(const RestrictedAlgebra& R,
                                             const Representation& rho,
                                             const std::vector<Vec>* module_images = nullptr);

/// Split extension at the ordinary level (module first).
LiePtr split_extension(const Representation& rho);

/// No proper nonzero [p]-subalgebra.
bool is_atom(const RestrictedAlgebra& R, u64 element_budget);

RestrictedAlgebra restricted_direct_sum(const RestrictedAlgebra& A, const RestrictedAlgebra& B);

/// The L-module structure on a chief factor upper/lower, as a representation
/// of the whole algebra.
Representation chief_factor_module(const RestrictedAlgebra& R, const Subspace& upper,
                                   const Subspace& lower);

/// The factor upper/lower as a restricted algebra (abelian, induced images).
RestrictedAlgebra chief_factor_algebra(const RestrictedAlgebra& R, const Subspace& upper,
                                       const Subspace& lower);

}  // namespace plie
