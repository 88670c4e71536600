#pragma once

#include <memory>
#include <vector>

#include "plie/common.hpp"

namespace plie {

/// Index of a field element. Elements of GF(p^m) are residue-class
/// polynomials c_0 + c_1 t + ... + c_{m-1} t^{m-1}; the index encodes the
/// coefficient vector with c_0 as the most significant base-p digit, so
/// numeric order on indices equals lexicographic order on (c_0,...,c_{m-1}).
using Fel = u32;

/// GF(p^m) with a deterministic modulus: the lexicographically smallest
/// monic irreducible of degree m over GF(p) (degree-1 convention: t).
/// Immutable after construction; all operations are pure.
class Field {
public:
    static Field make(u64 p, u32 m);

    u64 p() const { return p_; }
    u32 m() const { return m_; }
    u64 size() const { return q_; }
    const std::vector<u32>& modulus() const { return modulus_; }  // low-to-high, length m+1

    Fel zero() const { return 0; }
    Fel one() const;

    Fel add(Fel a, Fel b) const;
    Fel sub(Fel a, Fel b) const;
    Fel neg(Fel a) const;
    Fel mul(Fel a, Fel b) const;
    Fel inv(Fel a) const;
    Fel pow(Fel a, u64 e) const;
    Fel frobenius(Fel a) const { return pow(a, p_); }

    /// Image of the integer k (element of the prime subfield).
    Fel from_int(u64 k) const;

    /// Coefficients (c_0,...,c_{m-1}) of the element, low degree first.
    std::vector<u32> coeffs(Fel a) const;
    Fel from_coeffs(const std::vector<u32>& c) const;

    bool operator==(const Field& o) const {
        return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_;
    }

private:
    Field() = default;
    void build_tables();
    Fel mul_generic(Fel a, Fel b) const;

    u64 p_ = 0;
    u32 m_ = 0;
    u64 q_ = 0;
    std::vector<u32> modulus_;
    // dense tables for small fields; empty otherwise
    std::vector<Fel> mul_table_;
    std::vector<Fel> inv_table_;
    std::vector<Fel> add_table_;
};

using FieldPtr = std::shared_ptr<const Field>;

FieldPtr field_make(u64 p, u32 m);

/// Embedding of a subfield F into E (requires same p and F.m | E.m).
/// The embedding sends the residue class of t to the lexicographically
/// least root of F's modulus in E, so it is deterministic.
class Embedding {
public:
    Embedding(FieldPtr small, FieldPtr big);
    Fel operator()(Fel a) const;
    const Field& small() const { return *small_; }
    const Field& big() const { return *big_; }

private:
    FieldPtr small_, big_;
    std::vector<Fel> root_powers_;  // images of t^0..t^{m-1}
};

bool is_prime(u64 n);

}  // namespace plie
