#pragma once

#include "plie/cohomology.hpp"
#include "plie/poly.hpp"

namespace plie {

/// F-subspace of an extension field GF(p^(m*d)), the parameter of the
/// eigenvalue-defined formations. Stored as a GF(p)-subspace of the
/// extension's coefficient space, closed under multiplication by F.
struct LambdaSpace {
    FieldPtr F;       // base field GF(p^m)
    u32 ext_degree;   // d
    FieldPtr E;       // GF(p^(m*d))
    std::shared_ptr<const Embedding> emb;  // F -> E
    Subspace coords;  // GF(p)-subspace of GF(p)^(m*d), F-stable
    FieldPtr Fp;      // prime field, the coordinate field

    bool contains(Fel lambda_in_E) const;
};

LambdaSpace lambda_space(FieldPtr F, u32 ext_degree, const std::vector<Fel>& generators_in_E);
/// Whole base field as a subspace of itself (ext_degree 1).
LambdaSpace lambda_prime_field(FieldPtr F);

struct PNormalReport {
    bool p_normal = false;         // closed under x -> x^p (implies conjugation-closed)
    bool conjugation_closed = false;  // closed under x -> x^(p^m)
};
PNormalReport is_p_normal(const LambdaSpace& lam);

/// Class of soluble restricted Lie algebras, represented by its skeleton:
/// a decidable predicate on primitive algebras. Membership is always the
/// prim-closure of the skeleton, so every descriptor denotes a p-Schunck
/// class. `direct`, when set, is the formation predicate used for residuals;
/// for every built-in except pA it agrees extensionally with membership
/// (pA: the abelian formation is not saturated, its prim-closure is pN).
struct RClass;
using RClassPtr = std::shared_ptr<const RClass>;
struct RClass {
    std::string name;
    bool homomorph = true;
    bool formation = false;   // residual_support
    bool saturated = false;
    bool schunck = true;
    std::function<bool(const RestrictedAlgebra&, const Subspace& socle, const Budget&)> skeleton;
    std::function<bool(const RestrictedAlgebra&, const Budget&)> direct;
};

struct MembershipResult {
    bool member = false;
    u32 primitive_quotients_checked = 0;
    std::optional<Subspace> failing_kernel;  // [p]-ideal with bad primitive quotient
};

MembershipResult membership(const RestrictedAlgebra& R, const RClass& C, const Budget& bud);
bool is_member(const RestrictedAlgebra& R, const RClass& C, const Budget& bud);

// built-in classes
RClassPtr class_pS();
RClassPtr class_pN();
RClassPtr class_pA();
RClassPtr class_pC();
RClassPtr class_pU();
RClassPtr class_pNk(u32 k);                // nilpotent length <= k
RClassPtr class_nilpotent_class_le(u32 k); // nilpotent of class <= k
RClassPtr class_pEv(const LambdaSpace& lam);
RClassPtr class_metabelian_nilpotent_abelian();  // "M"
RClassPtr residual_product(RClassPtr K, RClassPtr F2);  // K·F = {L : L_F in K}
RClassPtr class_ploc(RClassPtr F2);                     // pN·F via the nilradical
RClassPtr class_join(RClassPtr a, RClassPtr b);
RClassPtr class_meet(RClassPtr a, RClassPtr b);

/// Smallest [p]-ideal with quotient in the formation F (intersection of all
/// such [p]-ideals); certified: the quotient by the result is in F and the
/// result is minimal on the lattice.
Subspace residual(const RestrictedAlgebra& R, const RClass& F, const Budget& bud);

/// Nil radical: intersection of the centralizers of the chief factors of the
/// underlying algebra.
Subspace nilradical(const RestrictedAlgebra& R, const Budget& bud);
/// Same, over the [p]-chief factors (the two agree; tested).
Subspace nilradical_p(const RestrictedAlgebra& R, const Budget& bud);

/// Ordinary (non-restricted) chief series, for the nil radical and the
/// ordinary-class machinery.
std::vector<Subspace> ordinary_chief_series(const LieAlgebra& L, u64 element_budget);

u32 nilpotent_length(const RestrictedAlgebra& R);
/// [p]-nilpotent residual: p-closure (as ideal) of the stabilized lower
/// central term.
Subspace nilpotent_residual(const RestrictedAlgebra& R);

struct ClosureReport {
    bool quot_ok = true, sdir_ok = true, frat_ok = true;
    std::string counterexample;
};
ClosureReport closure_check(const RClass& C, const std::vector<RestrictedAlgebra>& sample,
                            const Budget& bud);

/// Centralizer of the factor upper/lower: {x : [x, upper] <= lower}.
Subspace factor_centralizer(const LieAlgebra& L, const Subspace& upper, const Subspace& lower);

struct ChiefFactorReport {
    bool f_central = false;
    Subspace centralizer;
};
/// F-centrality: split extension of the factor by L/C_L(factor) lies in F.
ChiefFactorReport classify_chief_factor(const RestrictedAlgebra& R, const Subspace& upper,
                                        const Subspace& lower, const RClass& F, const Budget& bud);

/// Sum of the S-submodules whose S-composition factors are all F-central
/// (V0) resp. all F-eccentric (V1); verified to be L-submodules with
/// V = V0 + V1 direct.
struct HypercentralDecomposition {
    Subspace central_part, eccentric_part;
};
HypercentralDecomposition hypercentral_decomposition(const RestrictedAlgebra& R,
                                                     const Subspace& S,
                                                     const Representation& rho, const RClass& F,
                                                     const Budget& bud);
/// Module-level F-hypercentrality over the acting restricted algebra itself.
bool is_hypercentral(const RestrictedAlgebra& R, const Representation& rho, const RClass& F,
                     const Budget& bud);

struct EigenvalueScan {
    bool exhaustive = true;          // all elements scanned
    bool all_split = true;           // every char poly splits in E
    std::vector<Fel> roots_in_E;     // distinct eigenvalues found in E
};
/// Eigenvalues of ad(x) over all x, as roots in the degree-d extension.
EigenvalueScan ad_eigenvalues_in_ext(const RestrictedAlgebra& R, const LambdaSpace& lam,
                                     const Budget& bud);
/// Every eigenvalue of every ad(x) lies in lam (exhaustive; throws past
/// budget).
bool all_ad_eigenvalues_in(const RestrictedAlgebra& R, const LambdaSpace& lam, const Budget& bud);

/// Primitive completely soluble algebra attached to an extension element:
/// split extension of the companion module of its minimal polynomial by the
/// p-closure of the companion matrix.
RestrictedAlgebra build_P_lambda(const LambdaSpace& lam, Fel lambda_in_E);

/// Smallest n (with the smallest qualifying prime q > p dividing p^n - 1).
std::pair<u32, u64> find_qn(u64 p, u32 n_bound = 64);

/// Classes of ordinary soluble Lie algebras (skeleton on ordinary
/// primitives).
struct OClass;
using OClassPtr = std::shared_ptr<const OClass>;
struct OClass {
    std::string name;
    bool formation = false;
    std::function<bool(const LieAlgebra&, const Subspace& socle, const Budget&)> skeleton;
};

std::optional<Subspace> ordinary_primitive(const LieAlgebra& L, u64 element_budget);
MembershipResult o_membership(const LieAlgebra& L, const OClass& C, const Budget& bud);

OClassPtr oclass_all();
OClassPtr oclass_nilpotent();
/// prim(Und(K)): ordinary primitives admitting a p-operation landing in K.
OClassPtr ord_class(RClassPtr K);
/// Res(H): restricted algebras whose underlying algebra is in H.
RClassPtr res_class(OClassPtr H);

/// Some p-operation on L puts (L,[p]) in K.
bool und_membership(const LieAlgebra& L, const RClass& K, const Budget& bud);

std::vector<RestrictedAlgebra> primitive_quotients(const RestrictedAlgebra& R, const Budget& bud);

}  // namespace plie
