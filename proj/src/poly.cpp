#include "plie/poly.hpp"

#include <algorithm>
#include <map>

namespace plie {

Poly poly_trim(Poly f) {
    while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
    return f;
}

Poly poly_from(std::vector<Fel> coeffs) { return poly_trim(Poly{std::move(coeffs)}); }

Poly poly_zero() { return Poly{}; }

Poly poly_const(const Field& F, Fel a) {
    (void)F;
    return a == 0 ? Poly{} : Poly{{a}};
}

Poly poly_t(const Field& F) { return Poly{{0, F.one()}}; }

Poly poly_add(const Field& F, const Poly& f, const Poly& g) {
    Poly r;
    r.c.resize(std::max(f.c.size(), g.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) {
        Fel a = i < f.c.size() ? f.c[i] : 0;
        Fel b = i < g.c.size() ? g.c[i] : 0;
        r.c[i] = F.add(a, b);
    }
    return poly_trim(r);
}

Poly poly_sub(const Field& F, const Poly& f, const Poly& g) {
    return poly_add(F, f, poly_scale(F, F.neg(F.one()), g));
}

Poly poly_scale(const Field& F, Fel a, const Poly& f) {
    if (a == 0) return Poly{};
    Poly r = f;
    for (Fel& x : r.c) x = F.mul(a, x);
    return r;
}

Poly poly_mul(const Field& F, const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return Poly{};
    Poly r;
    r.c.assign(f.c.size() + g.c.size() - 1, 0);
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i] == 0) continue;
        for (size_t j = 0; j < g.c.size(); ++j)
            r.c[i + j] = F.add(r.c[i + j], F.mul(f.c[i], g.c[j]));
    }
    return r;
}

std::pair<Poly, Poly> poly_divmod(const Field& F, const Poly& f, const Poly& g) {
    if (g.is_zero()) throw std::domain_error("poly_divmod by zero");
    Poly r = f;
    Poly q;
    int dg = g.deg();
    Fel glead_inv = F.inv(g.lead());
    if (r.deg() >= dg) q.c.assign(r.deg() - dg + 1, 0);
    while (!r.is_zero() && r.deg() >= dg) {
        int shift = r.deg() - dg;
        Fel c = F.mul(r.lead(), glead_inv);
        q.c[shift] = c;
        for (int i = 0; i <= dg; ++i)
            r.c[shift + i] = F.sub(r.c[shift + i], F.mul(c, g.c[i]));
        r = poly_trim(r);
    }
    return {poly_trim(q), r};
}

Poly poly_mod(const Field& F, const Poly& f, const Poly& g) {
    return poly_divmod(F, f, g).second;
}

Poly poly_monic(const Field& F, const Poly& f) {
    if (f.is_zero()) return f;
    return poly_scale(F, F.inv(f.lead()), f);
}

Poly poly_gcd(const Field& F, Poly f, Poly g) {
    while (!g.is_zero()) {
        Poly r = poly_mod(F, f, g);
        f = g;
        g = r;
    }
    return poly_monic(F, f);
}

Fel poly_eval(const Field& F, const Poly& f, Fel x) {
    Fel r = 0;
    for (size_t i = f.c.size(); i-- > 0;) r = F.add(F.mul(r, x), f.c[i]);
    return r;
}

Poly poly_t_powmod(const Field& F, u64 e, const Poly& g) {
    Poly r = poly_const(F, F.one());
    Poly base = poly_mod(F, poly_t(F), g);
    while (e) {
        if (e & 1) r = poly_mod(F, poly_mul(F, r, base), g);
        base = poly_mod(F, poly_mul(F, base, base), g);
        e >>= 1;
    }
    return r;
}

bool poly_irreducible(const Field& F, const Poly& f) {
    int d = f.deg();
    if (d <= 0) return false;
    if (d == 1) return true;
    // Rabin: t^(q^d) == t mod f, and gcd(t^(q^(d/r)) - t, f) = 1 for prime r | d
    auto qpow = [&](u32 k) {
        u64 e = 1;
        for (u32 i = 0; i < k; ++i) {
            if (e > (u64(1) << 62) / F.size()) throw capacity_error("poly_irreducible: q^d too large");
            e *= F.size();
        }
        return e;
    };
    Poly tq = poly_t_powmod(F, qpow(static_cast<u32>(d)), f);
    if (!poly_sub(F, tq, poly_mod(F, poly_t(F), f)).is_zero()) return false;
    for (u32 r = 2; r <= static_cast<u32>(d); ++r) {
        if (d % r != 0) continue;
        bool rprime = true;
        for (u32 s = 2; s * s <= r; ++s)
            if (r % s == 0) rprime = false;
        if (!rprime) continue;
        Poly td = poly_sub(F, poly_t_powmod(F, qpow(static_cast<u32>(d / r)), f), poly_t(F));
        Poly g = poly_gcd(F, f, td);
        if (g.deg() != 0) return false;
    }
    return true;
}

Poly char_poly(const Field& F, const Mat& M) {
    u32 n = M.rows;
    if (n != M.cols) throw std::invalid_argument("char_poly: not square");
    if (n == 0) return poly_const(F, F.one());
    // Reduce to upper Hessenberg by similarity.
    Mat H = M;
    for (u32 col = 0; col + 2 <= n; ++col) {
        u32 piv = col + 1;
        while (piv < n && H(piv, col) == 0) ++piv;
        if (piv == n) continue;
        if (piv != col + 1) {
            for (u32 j = 0; j < n; ++j) std::swap(H.a[static_cast<size_t>(piv) * n + j],
                                                  H.a[static_cast<size_t>(col + 1) * n + j]);
            for (u32 i = 0; i < n; ++i) std::swap(H(i, piv), H(i, col + 1));
        }
        Fel inv = F.inv(H(col + 1, col));
        for (u32 row = col + 2; row < n; ++row) {
            Fel c = F.mul(H(row, col), inv);
            if (c == 0) continue;
            // row op: row -= c * (col+1 row); col op: col(col+1) += c * col(row)
            for (u32 j = 0; j < n; ++j) H(row, j) = F.sub(H(row, j), F.mul(c, H(col + 1, j)));
            for (u32 i = 0; i < n; ++i) H(i, col + 1) = F.add(H(i, col + 1), F.mul(c, H(i, row)));
        }
    }
    // char polys of leading principal Hessenberg minors.
    std::vector<Poly> p(n + 1);
    p[0] = poly_const(F, F.one());
    for (u32 k = 1; k <= n; ++k) {
        // p_k = (t - H[k-1][k-1]) p_{k-1} - sum_{i=1}^{k-1}
        //        H[k-1-i][k-1] * (prod_{j=1}^{i} H[k-j][k-j-1]) * p_{k-1-i}
        Poly term = poly_mul(F, poly_from({F.neg(H(k - 1, k - 1)), F.one()}), p[k - 1]);
        Fel prod = F.one();
        for (u32 i = 1; i < k; ++i) {
            prod = F.mul(prod, H(k - i, k - i - 1));
            if (prod == 0) break;
            Fel coef = F.mul(H(k - 1 - i, k - 1), prod);
            if (coef != 0)
                term = poly_sub(F, term, poly_scale(F, coef, p[k - 1 - i]));
        }
        p[k] = term;
    }
    return p[n];
}

std::vector<Fel> roots_in(const Field& fld, const Poly& f, const Embedding& emb) {
    Poly g;
    g.c.reserve(f.c.size());
    for (Fel c : f.c) g.c.push_back(emb(c));
    g = poly_trim(g);
    return roots_in(fld, g);
}

std::vector<Fel> roots_in(const Field& F, const Poly& f) {
    std::vector<Fel> roots;
    if (f.is_zero()) return roots;
    Poly g = f;
    for (u64 x = 0; x < F.size(); ++x) {
        Fel xe = static_cast<Fel>(x);
        while (!g.is_zero() && g.deg() >= 1 && poly_eval(F, g, xe) == 0) {
            roots.push_back(xe);
            // synthetic division by (t - x)
            g = poly_divmod(F, g, poly_from({F.neg(xe), F.one()})).first;
        }
        if (g.deg() < 1) break;
    }
    return roots;
}

bool poly_splits_in_ext(const Field& F, const Poly& f, u32 d) {
    if (f.is_zero()) throw std::invalid_argument("poly_splits_in_ext: zero polynomial");
    Poly h = poly_monic(F, f);
    u64 qd = 1;
    for (u32 i = 0; i < d; ++i) {
        if (qd > (u64(1) << 62) / F.size()) throw capacity_error("extension too large");
        qd *= F.size();
    }
    while (h.deg() > 0) {
        Poly T = poly_sub(F, poly_t_powmod(F, qd, h), poly_mod(F, poly_t(F), h));
        Poly g = poly_gcd(F, h, T);
        if (g.deg() == 0) return false;  // no root of h lies in the extension
        h = poly_monic(F, poly_divmod(F, h, g).first);
    }
    return true;
}

Poly min_poly_over_subfield(const Embedding& emb, Fel lambda) {
    const Field& E = emb.big();
    const Field& F = emb.small();
    u64 q = F.size();
    // distinct conjugates lambda^(q^i)
    std::vector<Fel> conj;
    Fel x = lambda;
    do {
        conj.push_back(x);
        x = E.pow(x, q);
    } while (x != lambda);
    Poly m = poly_const(E, E.one());
    for (Fel r : conj) m = poly_mul(E, m, poly_from({E.neg(r), E.one()}));
    // pull coefficients back to F
    Poly out;
    out.c.reserve(m.c.size());
    for (Fel c : m.c) {
        bool found = false;
        for (u64 a = 0; a < F.size(); ++a) {
            if (emb(static_cast<Fel>(a)) == c) {
                out.c.push_back(static_cast<Fel>(a));
                found = true;
                break;
            }
        }
        if (!found) throw consistency_error("min_poly_over_subfield: coefficient outside subfield");
    }
    return poly_trim(out);
}

Mat companion_matrix(const Field& F, const Poly& f) {
    int d = f.deg();
    if (d < 1 || f.lead() != F.one())
        throw std::invalid_argument("companion_matrix: need monic of degree >= 1");
    Mat C(static_cast<u32>(d), static_cast<u32>(d));
    for (int i = 1; i < d; ++i) C(static_cast<u32>(i), static_cast<u32>(i - 1)) = F.one();
    for (int i = 0; i < d; ++i) C(static_cast<u32>(i), static_cast<u32>(d - 1)) = F.neg(f.c[i]);
    return C;
}

}  // namespace plie
