#pragma once

#include "plie/linalg.hpp"

namespace plie {

/// Polynomial over a Field; coeffs low-to-high, trailing zeros trimmed,
/// zero polynomial = empty coeff list. degree = len-1.
struct Poly {
    std::vector<Fel> c;

    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    Fel lead() const { return c.back(); }
};

Poly poly_trim(Poly f);
Poly poly_from(std::vector<Fel> coeffs);
Poly poly_zero();
Poly poly_const(const Field& F, Fel a);
Poly poly_t(const Field& F);  // the monomial t
Poly poly_add(const Field& F, const Poly& f, const Poly& g);
Poly poly_sub(const Field& F, const Poly& f, const Poly& g);
Poly poly_scale(const Field& F, Fel a, const Poly& f);
Poly poly_mul(const Field& F, const Poly& f, const Poly& g);
/// (quotient, remainder); g nonzero.
std::pair<Poly, Poly> poly_divmod(const Field& F, const Poly& f, const Poly& g);
Poly poly_mod(const Field& F, const Poly& f, const Poly& g);
Poly poly_monic(const Field& F, const Poly& f);
Poly poly_gcd(const Field& F, Poly f, Poly g);  // monic gcd
Fel poly_eval(const Field& F, const Poly& f, Fel x);
/// t^e mod g, by repeated squaring.
Poly poly_t_powmod(const Field& F, u64 e, const Poly& g);
bool poly_irreducible(const Field& F, const Poly& f);

/// Monic characteristic polynomial of a square matrix (Hessenberg method,
/// field divisions only).
Poly char_poly(const Field& F, const Mat& M);

/// Roots of f (with multiplicity) found in fld, where f's coefficients live
/// in a subfield connected by emb. Scans every element of fld.
std::vector<Fel> roots_in(const Field& fld, const Poly& f, const Embedding& emb);
/// Same-field convenience.
std::vector<Fel> roots_in(const Field& F, const Poly& f);

/// True iff every root of f (in the algebraic closure) lies in the extension
/// of degree d over F, i.e. every irreducible factor degree divides d.
/// Decided by gcd splitting against t^(q^d) - t; no factorization.
bool poly_splits_in_ext(const Field& F, const Poly& f, u32 d);

/// Minimal polynomial over F of the element lambda of E (E given via emb:
/// F -> E): product of (t - lambda^(q^i)) over the distinct conjugates,
/// coefficients pulled back to F.
Poly min_poly_over_subfield(const Embedding& emb, Fel lambda);

/// Companion matrix of a monic polynomial.
Mat companion_matrix(const Field& F, const Poly& f);

}  // namespace plie
