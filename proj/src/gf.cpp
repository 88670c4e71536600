#include "plie/gf.hpp"

#include <algorithm>

namespace plie {

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Polynomial helpers over the prime field, used only for modulus search and
// the generic multiplication path. Coefficients low-to-high, not trimmed.

using PPoly = std::vector<u32>;

u32 pdeg(const PPoly& f) {
    for (u32 i = static_cast<u32>(f.size()); i-- > 0;)
        if (f[i] != 0) return i;
    return 0;  // deg(0) treated as 0; callers guard
}

bool pis_zero(const PPoly& f) {
    return std::all_of(f.begin(), f.end(), [](u32 c) { return c == 0; });
}

PPoly pmul(const PPoly& a, const PPoly& b, u64 p) {
    PPoly r(a.size() + b.size() - 1, 0);
    for (u32 i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (u32 j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<u32>((r[i + j] + static_cast<u64>(a[i]) * b[j]) % p);
    }
    return r;
}

u64 int_inv_mod(u64 a, u64 p) {
    // Fermat; p prime, a != 0
    u64 r = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

// a mod b, b nonzero
PPoly pmod(PPoly a, const PPoly& b, u64 p) {
    u32 db = pdeg(b);
    u64 lead_inv = int_inv_mod(b[db], p);
    while (!pis_zero(a)) {
        u32 da = pdeg(a);
        if (da < db) break;
        u64 c = a[da] % p * lead_inv % p;
        for (u32 i = 0; i <= db; ++i) {
            u64 sub = c * b[i] % p;
            a[da - db + i] = static_cast<u32>((a[da - db + i] + p - sub) % p);
        }
    }
    a.resize(std::max<u32>(db, 1));
    return a;
}

bool pirreducible(const PPoly& f, u64 p) {
    // Trial division by all monic polynomials of degree 1..deg/2.
    u32 d = pdeg(f);
    if (d == 0) return false;
    if (d == 1) return true;
    for (u32 dd = 1; dd <= d / 2; ++dd) {
        // enumerate monic degree-dd polys
        u64 count = 1;
        for (u32 i = 0; i < dd; ++i) count *= p;
        for (u64 idx = 0; idx < count; ++idx) {
            PPoly g(dd + 1, 0);
            u64 t = idx;
            for (u32 i = 0; i < dd; ++i) {
                g[i] = static_cast<u32>(t % p);
                t /= p;
            }
            g[dd] = 1;
            PPoly r = pmod(f, g, p);
            if (pis_zero(r)) return false;
        }
    }
    return true;
}

constexpr u64 kTableLimit = 1024;

}  // namespace

Field Field::make(u64 p, u32 m) {
    if (!is_prime(p)) throw std::invalid_argument("Field::make: p is not prime");
    if (m < 1) throw std::invalid_argument("Field::make: m must be >= 1");
    Field F;
    F.p_ = p;
    F.m_ = m;
    F.q_ = 1;
    for (u32 i = 0; i < m; ++i) {
        if (F.q_ > (u64(1) << 31) / p)
            throw std::invalid_argument("Field::make: p^m too large");
        F.q_ *= p;
    }
    if (m == 1) {
        F.modulus_ = {0, 1};  // t
    } else {
        // lexicographically smallest monic irreducible of degree m:
        // scan coefficient vectors (c_0,...,c_{m-1}) in lex order.
        bool found = false;
        std::vector<u32> c(m, 0);
        while (!found) {
            PPoly f(m + 1, 0);
            for (u32 i = 0; i < m; ++i) f[i] = c[i];
            f[m] = 1;
            if (pirreducible(f, p)) {
                F.modulus_.assign(f.begin(), f.end());
                found = true;
                break;
            }
            // increment c lexicographically: last coordinate fastest would be
            // colex; lex-smallest scan must advance the last coordinate first
            // only when interpreted as least significant. We want the lex
            // order on (c_0,...,c_{m-1}), so treat c_{m-1} as least
            // significant digit.
            u32 i = m;
            while (i-- > 0) {
                if (++c[i] < p) break;
                c[i] = 0;
                if (i == 0) throw std::logic_error("no irreducible found");
            }
        }
    }
    F.build_tables();
    return F;
}

void Field::build_tables() {
    if (q_ > kTableLimit) return;
    u32 q = static_cast<u32>(q_);
    add_table_.assign(static_cast<size_t>(q) * q, 0);
    mul_table_.assign(static_cast<size_t>(q) * q, 0);
    inv_table_.assign(q, 0);
    // temporarily clear so mul_generic/add compute directly
    auto add_direct = [&](Fel a, Fel b) {
        // digitwise add; digit i of x = (x / p^{m-1-i}) % p
        Fel r = 0;
        u64 place = 1;
        for (u32 i = 0; i < m_; ++i) {
            u64 da = (a / place) % p_, db = (b / place) % p_;
            r += static_cast<Fel>((da + db) % p_ * place);
            place *= p_;
        }
        return r;
    };
    for (u32 a = 0; a < q; ++a)
        for (u32 b = 0; b < q; ++b) add_table_[static_cast<size_t>(a) * q + b] = add_direct(a, b);
    for (u32 a = 0; a < q; ++a)
        for (u32 b = 0; b < q; ++b) mul_table_[static_cast<size_t>(a) * q + b] = mul_generic(a, b);
    for (u32 a = 1; a < q; ++a) {
        for (u32 b = 1; b < q; ++b)
            if (mul_table_[static_cast<size_t>(a) * q + b] == one()) {
                inv_table_[a] = b;
                break;
            }
    }
}

Fel Field::one() const { return from_int(1); }

Fel Field::from_int(u64 k) const {
    u64 c0 = k % p_;
    u64 place = 1;
    for (u32 i = 1; i < m_; ++i) place *= p_;
    return static_cast<Fel>(c0 * place);
}

std::vector<u32> Field::coeffs(Fel a) const {
    std::vector<u32> c(m_);
    u64 x = a;
    for (u32 i = m_; i-- > 0;) {  // least significant digit is c_{m-1}
        c[i] = static_cast<u32>(x % p_);
        x /= p_;
    }
    return c;
}

Fel Field::from_coeffs(const std::vector<u32>& c) const {
    if (c.size() != m_) throw std::invalid_argument("from_coeffs: wrong length");
    u64 x = 0;
    for (u32 i = 0; i < m_; ++i) {
        if (c[i] >= p_) throw std::invalid_argument("from_coeffs: coefficient not reduced");
        x = x * p_ + c[i];
    }
    return static_cast<Fel>(x);
}

Fel Field::add(Fel a, Fel b) const {
    if (!add_table_.empty()) return add_table_[static_cast<size_t>(a) * q_ + b];
    if (m_ == 1) return static_cast<Fel>((static_cast<u64>(a) + b) % p_);
    Fel r = 0;
    u64 place = 1;
    for (u32 i = 0; i < m_; ++i) {
        u64 da = (a / place) % p_, db = (b / place) % p_;
        r += static_cast<Fel>((da + db) % p_ * place);
        place *= p_;
    }
    return r;
}

Fel Field::neg(Fel a) const {
    if (m_ == 1) return static_cast<Fel>((p_ - a) % p_);
    Fel r = 0;
    u64 place = 1;
    for (u32 i = 0; i < m_; ++i) {
        u64 da = (a / place) % p_;
        r += static_cast<Fel>((p_ - da) % p_ * place);
        place *= p_;
    }
    return r;
}

Fel Field::sub(Fel a, Fel b) const { return add(a, neg(b)); }

Fel Field::mul_generic(Fel a, Fel b) const {
    auto ca = coeffs(a), cb = coeffs(b);
    PPoly prod = pmul(PPoly(ca.begin(), ca.end()), PPoly(cb.begin(), cb.end()), p_);
    PPoly red = pmod(prod, PPoly(modulus_.begin(), modulus_.end()), p_);
    red.resize(m_, 0);
    std::vector<u32> c(red.begin(), red.begin() + m_);
    return from_coeffs(c);
}

Fel Field::mul(Fel a, Fel b) const {
    if (!mul_table_.empty()) return mul_table_[static_cast<size_t>(a) * q_ + b];
    if (m_ == 1) return static_cast<Fel>(static_cast<u64>(a) * b % p_);
    return mul_generic(a, b);
}

Fel Field::pow(Fel a, u64 e) const {
    Fel r = one(), base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

Fel Field::inv(Fel a) const {
    if (a == 0) throw std::domain_error("Field::inv of zero");
    if (!inv_table_.empty()) return inv_table_[a];
    return pow(a, q_ - 2);
}

FieldPtr field_make(u64 p, u32 m) {
    return std::make_shared<const Field>(Field::make(p, m));
}

Embedding::Embedding(FieldPtr small, FieldPtr big) : small_(small), big_(big) {
    if (small_->p() != big_->p() || big_->m() % small_->m() != 0)
        throw std::invalid_argument("Embedding: not a subfield situation");
    // find the least root of small's modulus in big
    const auto& mod = small_->modulus();
    Fel root = 0;
    bool found = false;
    for (u64 x = 0; x < big_->size(); ++x) {
        Fel acc = 0, xp = big_->one();
        for (u32 i = 0; i < mod.size(); ++i) {
            acc = big_->add(acc, big_->mul(big_->from_int(mod[i]), xp));
            xp = big_->mul(xp, static_cast<Fel>(x));
        }
        if (acc == 0) {
            root = static_cast<Fel>(x);
            found = true;
            break;
        }
    }
    if (!found) throw std::logic_error("Embedding: modulus has no root in extension");
    root_powers_.resize(small_->m());
    Fel rp = big_->one();
    for (u32 i = 0; i < small_->m(); ++i) {
        root_powers_[i] = rp;
        rp = big_->mul(rp, root);
    }
}

Fel Embedding::operator()(Fel a) const {
    auto c = small_->coeffs(a);
    Fel r = 0;
    for (u32 i = 0; i < c.size(); ++i)
        r = big_->add(r, big_->mul(big_->from_int(c[i]), root_powers_[i]));
    return r;
}

}  // namespace plie
