// Exact arithmetic in the extension tower F_p <= F_q = F_{p^s} <= F_{q^m},
// realized as a single degree-(s*m) extension of F_p in polynomial-basis
// coordinates. Elements are handles carrying a packed coordinate index:
// the element with coordinates (c_0, ..., c_{sm-1}) has index
// sum c_k * p^k, so index order is the canonical enumeration order.
// Multiplicative structure is table-driven (exp/log over a generator),
// addition is coordinate-wise (XOR when p = 2).

#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace goppa {

class Field;
class FieldElement;

namespace detail {

// dense F_p[x] helpers used only during field construction; coefficient
// vectors are low-degree-first and not necessarily normalized
inline uint32_t fp_poly_deg(const std::vector<uint32_t>& a) {
    size_t d = a.size();
    while (d > 0 && a[d - 1] == 0) --d;
    return d == 0 ? 0 : static_cast<uint32_t>(d - 1);
}

inline bool fp_poly_is_zero(const std::vector<uint32_t>& a) {
    for (uint32_t c : a)
        if (c) return false;
    return true;
}

inline std::vector<uint32_t> fp_poly_mulmod(const std::vector<uint32_t>& a,
                                            const std::vector<uint32_t>& b,
                                            const std::vector<uint32_t>& mod, uint32_t p) {
    const size_t d = mod.size() - 1;
    std::vector<uint64_t> acc(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) acc[i + j] += uint64_t(a[i]) * b[j];
    }
    for (auto& x : acc) x %= p;
    for (size_t i = acc.size(); i-- > d;) {
        uint64_t c = acc[i] % p;
        if (!c) continue;
        acc[i] = 0;
        // mod is monic: subtract c * x^(i-d) * mod
        for (size_t k = 0; k < d; ++k)
            acc[i - d + k] = (acc[i - d + k] + c * (p - mod[k] % p)) % p;
    }
    std::vector<uint32_t> out(d, 0);
    for (size_t k = 0; k < d && k < acc.size(); ++k) out[k] = static_cast<uint32_t>(acc[k] % p);
    return out;
}

inline std::vector<uint32_t> fp_poly_gcd(std::vector<uint32_t> a, std::vector<uint32_t> b,
                                         uint32_t p) {
    auto inv_mod_p = [p](uint32_t x) {
        // Fermat
        uint64_t r = 1, base = x % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return static_cast<uint32_t>(r);
    };
    while (!fp_poly_is_zero(b)) {
        uint32_t db = fp_poly_deg(b);
        uint32_t inv_lead = inv_mod_p(b[db]);
        while (!fp_poly_is_zero(a) && fp_poly_deg(a) >= db) {
            uint32_t da = fp_poly_deg(a);
            uint64_t c = uint64_t(a[da]) * inv_lead % p;
            if (c)
                for (size_t k = 0; k <= db; ++k)
                    a[da - db + k] =
                        static_cast<uint32_t>((a[da - db + k] + c * (p - b[k])) % p);
            else
                a[da] = 0;
        }
        std::swap(a, b);
    }
    return a;
}

// x^(p^k) mod f, by k successive p-th powers
inline std::vector<uint32_t> fp_poly_x_pth_power(const std::vector<uint32_t>& mod, uint32_t p,
                                                 uint32_t k) {
    const size_t d = mod.size() - 1;
    std::vector<uint32_t> cur(d, 0);
    if (d == 1) {
        // x == -mod[0]
        cur[0] = (p - mod[0] % p) % p;
    } else {
        cur[1] = 1;
    }
    for (uint32_t rep = 0; rep < k; ++rep) {
        std::vector<uint32_t> r(d, 0);
        r[0] = 1;
        std::vector<uint32_t> base = cur;
        uint64_t e = p;
        while (e) {
            if (e & 1) r = fp_poly_mulmod(r, base, mod, p);
            base = fp_poly_mulmod(base, base, mod, p);
            e >>= 1;
        }
        cur = std::move(r);
    }
    return cur;
}

inline bool fp_poly_irreducible(const std::vector<uint32_t>& mod, uint32_t p) {
    const uint32_t d = static_cast<uint32_t>(mod.size() - 1);
    if (d == 0) return false;
    // x^(p^d) == x mod f
    auto xq = fp_poly_x_pth_power(mod, p, d);
    auto minus_x = [&](std::vector<uint32_t> v) {
        if (v.size() < 2) v.resize(2, 0);
        v[1] = (v[1] + p - 1) % p;
        return v;
    };
    if (!fp_poly_is_zero(minus_x(xq))) return false;
    // gcd(x^(p^(d/r)) - x, f) == const for every prime r | d
    uint32_t dd = d;
    std::vector<uint32_t> rs;
    for (uint32_t f = 2; f * f <= dd; ++f)
        if (dd % f == 0) {
            rs.push_back(f);
            while (dd % f == 0) dd /= f;
        }
    if (dd > 1) rs.push_back(dd);
    for (uint32_t r : rs) {
        auto xe = minus_x(fp_poly_x_pth_power(mod, p, d / r));
        auto g = fp_poly_gcd(mod, xe, p);
        if (fp_poly_is_zero(g) || fp_poly_deg(g) != 0) return false;
    }
    return true;
}

inline bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t f = 2; uint64_t(f) * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

}  // namespace detail

// Immutable description of the tower plus the multiplication tables.
// Construct through Field::make and share via shared_ptr; all operations
// are pure and safe to call concurrently.
class Field {
  public:
    // largest supported field size; exp/log tables are materialized
    static constexpr uint64_t kMaxOrder = uint64_t(1) << 22;

    static std::shared_ptr<const Field> make(uint32_t p, uint32_t s, uint32_t m,
                                             std::vector<uint32_t> modulus = {}) {
        return std::shared_ptr<const Field>(new Field(p, s, m, std::move(modulus)));
    }

    uint32_t p() const { return p_; }
    uint32_t s() const { return s_; }
    uint32_t m() const { return m_; }
    uint32_t sm() const { return sm_; }
    uint64_t q() const { return q_; }
    uint64_t order() const { return order_; }
    const std::vector<uint32_t>& modulus() const { return modulus_; }
    uint32_t generator() const { return gen_; }

    bool same_as(const Field& o) const {
        return this == &o ||
               (p_ == o.p_ && s_ == o.s_ && m_ == o.m_ && modulus_ == o.modulus_);
    }

    // ---- index-level arithmetic (0 <= a, b < order) ----

    uint32_t add(uint32_t a, uint32_t b) const {
        if (p_ == 2) return a ^ b;
        uint32_t out = 0, mul = 1;
        for (uint32_t k = 0; k < sm_; ++k) {
            uint32_t da = a % p_, db = b % p_;
            out += (da + db) % p_ * mul;
            a /= p_;
            b /= p_;
            mul *= p_;
        }
        return out;
    }

    uint32_t neg(uint32_t a) const {
        if (p_ == 2) return a;
        uint32_t out = 0, mul = 1;
        for (uint32_t k = 0; k < sm_; ++k) {
            uint32_t da = a % p_;
            out += (p_ - da) % p_ * mul;
            a /= p_;
            mul *= p_;
        }
        return out;
    }

    uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }

    uint32_t inv(uint32_t a) const {
        if (a == 0) throw std::domain_error("field: inverse of zero");
        uint64_t n = order_ - 1;
        return exp_[(n - log_[a]) % n];
    }

    uint32_t div(uint32_t a, uint32_t b) const {
        if (b == 0) throw std::domain_error("field: division by zero");
        if (a == 0) return 0;
        uint64_t n = order_ - 1;
        return exp_[(log_[a] + n - log_[b]) % n];
    }

    uint32_t pow(uint32_t a, int64_t e) const {
        if (a == 0) {
            if (e < 0) throw std::domain_error("field: negative power of zero");
            return e == 0 ? 1u : 0u;
        }
        const int64_t n = static_cast<int64_t>(order_ - 1);
        int64_t em = e % n;
        if (em < 0) em += n;
        return exp_[uint64_t(log_[a]) * uint64_t(em) % uint64_t(n)];
    }

    // a^(q^k)
    uint32_t frobenius_q(uint32_t a, uint32_t k = 1) const {
        if (a == 0) return 0;
        const uint64_t n = order_ - 1;
        uint64_t e = 1;
        for (uint32_t i = 0; i < k; ++i) e = e * (q_ % n) % n;
        return exp_[uint64_t(log_[a]) * e % n];
    }

    // relative trace onto F_q: a + a^q + ... + a^(q^(m-1))
    uint32_t trace_rel(uint32_t a) const {
        uint32_t acc = 0, x = a;
        for (uint32_t i = 0; i < m_; ++i) {
            acc = add(acc, x);
            x = frobenius_q(x, 1);
        }
        return acc;
    }

    bool in_subfield_q(uint32_t a) const { return frobenius_q(a, 1) == a; }

    // embed an F_p residue (coordinates (c, 0, ..., 0))
    uint32_t scalar(uint32_t c) const {
        if (c >= p_) throw std::invalid_argument("field: scalar residue out of range");
        return c;
    }

    std::vector<uint32_t> coeffs(uint32_t a) const {
        std::vector<uint32_t> c(sm_);
        for (uint32_t k = 0; k < sm_; ++k) {
            c[k] = a % p_;
            a /= p_;
        }
        return c;
    }

    uint32_t coeff(uint32_t a, uint32_t k) const {
        for (uint32_t i = 0; i < k; ++i) a /= p_;
        return a % p_;
    }

    uint32_t from_coeffs(std::span<const uint32_t> c) const {
        if (c.size() != sm_) throw std::invalid_argument("field: coordinate count mismatch");
        uint64_t idx = 0;
        for (size_t k = c.size(); k-- > 0;) {
            if (c[k] >= p_) throw std::invalid_argument("field: coordinate not reduced mod p");
            idx = idx * p_ + c[k];
        }
        return static_cast<uint32_t>(idx);
    }

    FieldElement element(uint32_t idx) const;
    FieldElement zero() const;
    FieldElement one() const;
    // class of x in F_p[x]/(modulus)
    FieldElement gen_x() const;

  private:
    Field(uint32_t p, uint32_t s, uint32_t m, std::vector<uint32_t> modulus)
        : p_(p), s_(s), m_(m) {
        if (!detail::is_prime_u32(p)) throw std::invalid_argument("field: p must be prime");
        if (s < 1) throw std::invalid_argument("field: s must be >= 1");
        if (m < 2) throw std::invalid_argument("field: m must be >= 2");
        sm_ = s * m;
        uint64_t ord = 1;
        for (uint32_t i = 0; i < sm_; ++i) {
            ord *= p;
            if (ord > kMaxOrder) throw std::invalid_argument("field: p^(s*m) exceeds order bound");
        }
        order_ = ord;
        q_ = 1;
        for (uint32_t i = 0; i < s; ++i) q_ *= p;

        if (modulus.empty()) {
            modulus_ = default_modulus(p, sm_);
        } else {
            if (modulus.size() != sm_ + 1)
                throw std::invalid_argument("field: modulus degree must equal s*m");
            for (uint32_t c : modulus)
                if (c >= p) throw std::invalid_argument("field: modulus coefficient not reduced");
            if (modulus.back() != 1) throw std::invalid_argument("field: modulus must be monic");
            if (!detail::fp_poly_irreducible(modulus, p))
                throw std::invalid_argument("field: modulus is reducible");
            modulus_ = std::move(modulus);
        }
        build_tables();
    }

    static std::vector<uint32_t> default_modulus(uint32_t p, uint32_t d) {
        // the monic irreducible of degree d whose lower-coefficient digit
        // string (read high index to low) has minimal integer value
        uint64_t count = 1;
        for (uint32_t i = 0; i < d; ++i) count *= p;
        for (uint64_t n = 0; n < count; ++n) {
            std::vector<uint32_t> mod(d + 1, 0);
            uint64_t nn = n;
            for (uint32_t k = 0; k < d; ++k) {
                mod[k] = static_cast<uint32_t>(nn % p);
                nn /= p;
            }
            mod[d] = 1;
            if (detail::fp_poly_irreducible(mod, p)) return mod;
        }
        throw std::logic_error("field: no irreducible polynomial found");
    }

    // structural product used before tables exist
    uint32_t mul_poly(uint32_t a, uint32_t b) const {
        auto ca = coeffs(a), cb = coeffs(b);
        auto r = detail::fp_poly_mulmod(ca, cb, modulus_, p_);
        uint64_t idx = 0;
        for (size_t k = r.size(); k-- > 0;) idx = idx * p_ + r[k];
        return static_cast<uint32_t>(idx);
    }

    void build_tables() {
        const uint64_t n = order_ - 1;
        // prime factors of the multiplicative group order
        std::vector<uint64_t> primes;
        uint64_t nn = n;
        for (uint64_t f = 2; f * f <= nn; ++f)
            if (nn % f == 0) {
                primes.push_back(f);
                while (nn % f == 0) nn /= f;
            }
        if (nn > 1) primes.push_back(nn);

        auto pow_poly = [&](uint32_t base, uint64_t e) {
            uint32_t r = 1;
            while (e) {
                if (e & 1) r = mul_poly(r, base);
                base = mul_poly(base, base);
                e >>= 1;
            }
            return r;
        };

        gen_ = 0;
        for (uint32_t cand = 2; cand < order_; ++cand) {
            bool primitive = true;
            for (uint64_t r : primes)
                if (pow_poly(cand, n / r) == 1) {
                    primitive = false;
                    break;
                }
            if (primitive) {
                gen_ = cand;
                break;
            }
        }
        if (gen_ == 0) throw std::logic_error("field: no primitive element found");

        exp_.assign(2 * n, 0);
        log_.assign(order_, 0);
        uint32_t cur = 1;
        for (uint64_t i = 0; i < n; ++i) {
            exp_[i] = cur;
            exp_[i + n] = cur;
            log_[cur] = i;
            cur = mul_poly(cur, gen_);
        }
        if (cur != 1) throw std::logic_error("field: generator order mismatch");
    }

    uint32_t p_, s_, m_, sm_;
    uint64_t q_ = 0, order_ = 0;
    std::vector<uint32_t> modulus_;
    uint32_t gen_ = 0;
    std::vector<uint32_t> exp_;
    std::vector<uint64_t> log_;
};

// Value handle for one field element. Mixing elements of structurally
// different fields raises; the FieldSpec must outlive its elements.
class FieldElement {
  public:
    FieldElement() : f_(nullptr), v_(0) {}
    FieldElement(const Field* f, uint32_t v) : f_(f), v_(v) {}

    uint32_t idx() const { return v_; }
    const Field& field() const { return *f_; }
    bool is_zero() const { return v_ == 0; }
    std::vector<uint32_t> coeffs() const { return f_->coeffs(v_); }

    friend FieldElement operator+(FieldElement a, FieldElement b) {
        return {a.common(b), a.f_->add(a.v_, b.v_)};
    }
    friend FieldElement operator-(FieldElement a, FieldElement b) {
        return {a.common(b), a.f_->sub(a.v_, b.v_)};
    }
    friend FieldElement operator*(FieldElement a, FieldElement b) {
        return {a.common(b), a.f_->mul(a.v_, b.v_)};
    }
    friend FieldElement operator/(FieldElement a, FieldElement b) {
        return {a.common(b), a.f_->div(a.v_, b.v_)};
    }
    FieldElement operator-() const { return {f_, f_->neg(v_)}; }
    FieldElement inv() const { return {f_, f_->inv(v_)}; }
    FieldElement pow(int64_t e) const { return {f_, f_->pow(v_, e)}; }
    FieldElement frobenius_q(uint32_t k = 1) const { return {f_, f_->frobenius_q(v_, k)}; }
    FieldElement trace_rel() const { return {f_, f_->trace_rel(v_)}; }

    friend bool operator==(FieldElement a, FieldElement b) {
        if (a.f_ && b.f_ && !a.f_->same_as(*b.f_)) return false;
        return a.v_ == b.v_;
    }
    friend bool operator!=(FieldElement a, FieldElement b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, FieldElement e) {
        if (!e.f_) return os << "<null>";
        auto c = e.coeffs();
        os << '(';
        for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
        return os << ')';
    }

  private:
    const Field* common(const FieldElement& o) const {
        if (!f_ || !o.f_ || !f_->same_as(*o.f_))
            throw std::invalid_argument("field: operands from different field specs");
        return f_;
    }
    const Field* f_;
    uint32_t v_;
};

inline FieldElement Field::element(uint32_t idx) const {
    if (idx >= order_) throw std::invalid_argument("field: element index out of range");
    return {this, idx};
}
inline FieldElement Field::zero() const { return {this, 0}; }
inline FieldElement Field::one() const { return {this, 1}; }
inline FieldElement Field::gen_x() const { return {this, p_}; }

// all p^(s*m) elements in canonical index order (0 first, then 1)
inline std::vector<FieldElement> enumerate_elements(const Field& f) {
    std::vector<FieldElement> out;
    out.reserve(f.order());
    for (uint64_t i = 0; i < f.order(); ++i) out.push_back({&f, static_cast<uint32_t>(i)});
    return out;
}

// Length-n vector over F_{q^m}, stored as packed indices.
struct VectorQm {
    const Field* field = nullptr;
    std::vector<uint32_t> vals;

    size_t size() const { return vals.size(); }
    friend bool operator==(const VectorQm& a, const VectorQm& b) {
        return a.vals == b.vals &&
               (a.field == b.field || (a.field && b.field && a.field->same_as(*b.field)));
    }
};

// componentwise p^k power
inline VectorQm pth_power_vector(const VectorQm& v, uint32_t k) {
    const Field& f = *v.field;
    uint64_t pk = 1;
    const uint64_t n = f.order() - 1;
    for (uint32_t i = 0; i < k; ++i) pk = pk * (f.p() % n) % n;
    VectorQm out{v.field, {}};
    out.vals.reserve(v.vals.size());
    for (uint32_t x : v.vals)
        out.vals.push_back(x == 0 ? 0 : f.pow(x, static_cast<int64_t>(pk)));
    return out;
}

// <v, w> over F_{q^m} with w an F_p word
inline uint32_t dot_with_word(const VectorQm& v, std::span<const uint8_t> w) {
    if (v.size() != w.size()) throw std::invalid_argument("dot: length mismatch");
    const Field& f = *v.field;
    uint32_t acc = 0;
    if (f.p() == 2) {
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i]) acc ^= v.vals[i];
    } else {
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i]) acc = f.add(acc, f.mul(f.scalar(w[i]), v.vals[i]));
    }
    return acc;
}

}  // namespace goppa
