// Univariate polynomial algebra over F_{q^m}: arithmetic, extended gcd,
// Horner evaluation, squarefree testing, and the two defining polynomials
// of the trace construction (g = Tr(x) and h = Tr(y^a) mod y^{q^m} - y).

#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "field.hpp"

namespace goppa {

class Polynomial {
  public:
    explicit Polynomial(const Field* f) : f_(f) {}
    Polynomial(const Field* f, std::vector<uint32_t> coeff_indices)
        : f_(f), c_(std::move(coeff_indices)) {
        normalize();
    }

    static Polynomial zero(const Field& f) { return Polynomial(&f); }
    static Polynomial constant(const Field& f, uint32_t idx) { return {&f, {idx}}; }
    static Polynomial x(const Field& f) { return {&f, {0, 1}}; }

    // sum of x^e over an exponent set, all coefficients one
    static Polynomial from_exponents(const Field& f, const std::vector<uint64_t>& exps) {
        uint64_t top = 0;
        for (uint64_t e : exps) top = std::max(top, e);
        std::vector<uint32_t> c(top + 1, 0);
        for (uint64_t e : exps) c[e] = f.add(c[e], 1);
        return {&f, std::move(c)};
    }

    const Field& field() const { return *f_; }
    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is the sentinel -1
    int64_t degree() const { return static_cast<int64_t>(c_.size()) - 1; }
    uint32_t coeff_idx(size_t i) const { return i < c_.size() ? c_[i] : 0; }
    FieldElement coeff(size_t i) const { return {f_, coeff_idx(i)}; }
    uint32_t leading_idx() const {
        if (c_.empty()) throw std::domain_error("polynomial: leading coefficient of zero");
        return c_.back();
    }
    const std::vector<uint32_t>& coeff_indices() const { return c_; }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        const Field* f = a.common(b);
        std::vector<uint32_t> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (size_t i = 0; i < c.size(); ++i) c[i] = f->add(a.coeff_idx(i), b.coeff_idx(i));
        return {f, std::move(c)};
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        const Field* f = a.common(b);
        std::vector<uint32_t> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (size_t i = 0; i < c.size(); ++i) c[i] = f->sub(a.coeff_idx(i), b.coeff_idx(i));
        return {f, std::move(c)};
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        const Field* f = a.common(b);
        if (a.is_zero() || b.is_zero()) return Polynomial(f);
        std::vector<uint32_t> c(a.c_.size() + b.c_.size() - 1, 0);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (!a.c_[i]) continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                if (b.c_[j]) c[i + j] = f->add(c[i + j], f->mul(a.c_[i], b.c_[j]));
        }
        return {f, std::move(c)};
    }

    Polynomial scaled(uint32_t k) const {
        std::vector<uint32_t> c(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) c[i] = f_->mul(c_[i], k);
        return {f_, std::move(c)};
    }

    // (quotient, remainder) with deg rem < deg divisor
    friend std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b) {
        const Field* f = a.common(b);
        if (b.is_zero()) throw std::domain_error("polynomial: division by zero polynomial");
        if (a.degree() < b.degree()) return {Polynomial(f), a};
        std::vector<uint32_t> rem = a.c_;
        std::vector<uint32_t> quot(a.c_.size() - b.c_.size() + 1, 0);
        const uint32_t inv_lead = f->inv(b.c_.back());
        const int64_t db = b.degree();
        for (int64_t i = static_cast<int64_t>(rem.size()) - 1; i >= db; --i) {
            uint32_t c = f->mul(rem[i], inv_lead);
            if (!c) continue;
            quot[i - db] = c;
            for (int64_t k = 0; k <= db; ++k)
                rem[i - db + k] = f->sub(rem[i - db + k], f->mul(c, b.c_[k]));
        }
        return {Polynomial(f, std::move(quot)), Polynomial(f, std::move(rem))};
    }

    friend Polynomial operator%(const Polynomial& a, const Polynomial& b) {
        return divrem(a, b).second;
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return scaled(f_->inv(c_.back()));
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial(f_);
        std::vector<uint32_t> c(c_.size() - 1, 0);
        for (size_t i = 1; i < c_.size(); ++i) {
            uint32_t k = static_cast<uint32_t>(i % f_->p());
            c[i - 1] = f_->mul(c_[i], f_->scalar(k));
        }
        return {f_, std::move(c)};
    }

    Polynomial pow(uint32_t e) const {
        Polynomial r = constant(*f_, 1);
        Polynomial base = *this;
        while (e) {
            if (e & 1) r = r * base;
            if (e >>= 1) base = base * base;
        }
        return r;
    }

    uint32_t eval_idx(uint32_t a) const {
        uint32_t r = 0;
        for (size_t i = c_.size(); i-- > 0;) r = f_->add(f_->mul(r, a), c_[i]);
        return r;
    }
    FieldElement eval(FieldElement a) const { return {f_, eval_idx(a.idx())}; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        if (p.is_zero()) return os << "0";
        bool first = true;
        for (size_t i = p.c_.size(); i-- > 0;) {
            if (!p.c_[i]) continue;
            if (!first) os << " + ";
            first = false;
            if (i == 0 || p.c_[i] != 1) os << p.c_[i];
            if (i > 0) os << "x^" << i;
        }
        return os;
    }

  private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    const Field* common(const Polynomial& o) const {
        if (!f_->same_as(*o.f_))
            throw std::invalid_argument("polynomial: operands over different field specs");
        return f_;
    }

    const Field* f_;
    std::vector<uint32_t> c_;
};

// extended gcd: returns (d, u, v) with u*a + v*b = d and d monic
inline std::tuple<Polynomial, Polynomial, Polynomial> ext_gcd(const Polynomial& a,
                                                              const Polynomial& b) {
    const Field& f = a.field();
    Polynomial r0 = a, r1 = b;
    Polynomial u0 = Polynomial::constant(f, 1), u1 = Polynomial::zero(f);
    Polynomial v0 = Polynomial::zero(f), v1 = Polynomial::constant(f, 1);
    while (!r1.is_zero()) {
        auto [q, r2] = divrem(r0, r1);
        Polynomial u2 = u0 - q * u1;
        Polynomial v2 = v0 - q * v1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (r0.is_zero()) return {r0, u0, v0};
    uint32_t c = f.inv(r0.leading_idx());
    return {r0.scaled(c), u0.scaled(c), v0.scaled(c)};
}

// the relative trace as a polynomial: x + x^q + ... + x^(q^(m-1))
inline Polynomial trace_polynomial(const Field& f) {
    std::vector<uint64_t> exps;
    uint64_t e = 1;
    for (uint32_t i = 0; i < f.m(); ++i) {
        exps.push_back(e);
        e *= f.q();
    }
    return Polynomial::from_exponents(f, exps);
}

// a = 1 + q + ... + q^(m-2)
inline uint64_t trace_exponent_a(const Field& f) {
    uint64_t a = 0, e = 1;
    for (uint32_t i = 0; i + 1 < f.m(); ++i) {
        a += e;
        e *= f.q();
    }
    return a;
}

// b = 1 + q + ... + q^(m-1)
inline uint64_t trace_exponent_b(const Field& f) {
    uint64_t b = 0, e = 1;
    for (uint32_t i = 0; i < f.m(); ++i) {
        b += e;
        e *= f.q();
    }
    return b;
}

// exponent reduction matching the function x -> x^e on all of F_{q^m}
// (0 maps to 0; e >= 1 maps to ((e-1) mod (q^m - 1)) + 1)
inline uint64_t reduce_functional_exponent(const Field& f, uint64_t e) {
    if (e == 0) return 0;
    return (e - 1) % (f.order() - 1) + 1;
}

// h(y) = Tr(y^a) mod y^{q^m} - y; monomials sit exactly at {b - q^i}
inline Polynomial h_polynomial(const Field& f) {
    const uint64_t b = trace_exponent_b(f);
    std::vector<uint64_t> exps;
    uint64_t e = 1;
    for (uint32_t i = 0; i < f.m(); ++i) {
        exps.push_back(b - e);
        e *= f.q();
    }
    return Polynomial::from_exponents(f, exps);
}

// gcd(f, f') is constant; a vanishing derivative means a p-th power
// (never squarefree unless constant)
inline bool is_squarefree(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("is_squarefree: zero polynomial");
    if (f.degree() == 0) return true;
    Polynomial d = f.derivative();
    if (d.is_zero()) return false;
    auto [g, u, v] = ext_gcd(f, d);
    return g.degree() == 0;
}

}  // namespace goppa
