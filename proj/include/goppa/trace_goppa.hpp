// The paired trace construction and its verifiers. An instance bundles
// g = Tr(x), h = Tr(y^a) reduced, the supports L (non-roots of Tr) and
// M = L^{-1} (elementwise, same order), and the four codes C(L,g),
// C(L,g^2), C(M,h), C(M,h^2). Each statement of the source construction
// is an executable finite check returning a CheckReport; dual memberships
// are memoized per code since the checks overlap heavily.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "goppa.hpp"

namespace goppa {

enum class CodeKind { Lg = 0, Lg2 = 1, Mh = 2, Mh2 = 3 };

inline const char* code_kind_name(CodeKind k) {
    switch (k) {
        case CodeKind::Lg: return "Lg";
        case CodeKind::Lg2: return "Lg2";
        case CodeKind::Mh: return "Mh";
        case CodeKind::Mh2: return "Mh2";
    }
    return "?";
}

inline std::optional<CodeKind> code_kind_from_name(const std::string& s) {
    if (s == "Lg") return CodeKind::Lg;
    if (s == "Lg2") return CodeKind::Lg2;
    if (s == "Mh") return CodeKind::Mh;
    if (s == "Mh2") return CodeKind::Mh2;
    return std::nullopt;
}

struct CheckDetail {
    std::string key;
    bool ok = false;
};

struct CheckReport {
    std::string name;
    bool applicable = true;
    bool vacuous = false;
    bool pass = false;
    std::vector<CheckDetail> details;
    std::string note;
    std::string counterexample;

    void record(std::string key, bool ok) {
        if (!ok && counterexample.empty()) counterexample = key;
        details.push_back({std::move(key), ok});
    }
};

class TraceGoppaInstance {
  public:
    static TraceGoppaInstance build(uint32_t p, uint32_t s, uint32_t m,
                                    std::vector<uint32_t> modulus = {}) {
        return TraceGoppaInstance(Field::make(p, s, m, std::move(modulus)));
    }

    const Field& field() const { return *f_; }
    std::shared_ptr<const Field> field_ptr() const { return f_; }
    uint64_t a() const { return a_; }
    uint64_t b() const { return b_; }
    size_t n() const { return L_.size(); }
    const Polynomial& g() const { return g_; }
    const Polynomial& h() const { return h_; }
    const Polynomial& g2() const { return g2_; }
    const Polynomial& h2() const { return h2_; }
    const Support& L() const { return L_; }
    const Support& M() const { return M_; }

    const GoppaCode& code(CodeKind k) const { return *codes_[size_t(k)]; }

    // dual membership of ev(X^j / G) where G is the code's own polynomial
    bool member(CodeKind k, int64_t j) {
        auto& memo = memo_[size_t(k)];
        auto it = memo.find(j);
        if (it != memo.end()) return it->second;
        const GoppaCode& c = code(k);
        bool ok = c.dual_contains(c.eval_values(j, 1));
        memo.emplace(j, ok);
        return ok;
    }

    // dual membership of the plain power vector ev(X^j)
    bool member_plain(CodeKind k, int64_t j) {
        auto& memo = memo_plain_[size_t(k)];
        auto it = memo.find(j);
        if (it != memo.end()) return it->second;
        const GoppaCode& c = code(k);
        bool ok = c.dual_contains(c.eval_values(j, 0));
        memo.emplace(j, ok);
        return ok;
    }

  private:
    explicit TraceGoppaInstance(std::shared_ptr<const Field> f) : f_(std::move(f)),
          g_(trace_polynomial(*f_)),
          h_(h_polynomial(*f_)),
          g2_(g_ * g_),
          h2_(h_ * h_) {
        a_ = trace_exponent_a(*f_);
        b_ = trace_exponent_b(*f_);
        std::vector<uint32_t> lidx;
        for (uint64_t i = 0; i < f_->order(); ++i)
            if (f_->trace_rel(static_cast<uint32_t>(i)) != 0)
                lidx.push_back(static_cast<uint32_t>(i));
        L_ = Support(f_.get(), std::move(lidx));
        M_ = L_.inverted();
        const uint64_t expected_n = f_->order() - f_->order() / f_->q();
        if (L_.size() != expected_n) throw std::logic_error("instance: |L| != q^m - q^(m-1)");
        if (static_cast<uint64_t>(h_.degree()) != a_ * f_->q())
            throw std::logic_error("instance: deg h != a*q");
        codes_[0] = std::make_unique<GoppaCode>(f_, L_, g_);
        codes_[1] = std::make_unique<GoppaCode>(f_, L_, g2_);
        codes_[2] = std::make_unique<GoppaCode>(f_, M_, h_);
        codes_[3] = std::make_unique<GoppaCode>(f_, M_, h2_);
    }

    std::shared_ptr<const Field> f_;
    Polynomial g_, h_, g2_, h2_;
    uint64_t a_ = 0, b_ = 0;
    Support L_, M_;
    std::array<std::unique_ptr<GoppaCode>, 4> codes_;
    std::array<std::map<int64_t, bool>, 4> memo_;
    std::array<std::map<int64_t, bool>, 4> memo_plain_;
};

// ---------------------------------------------------------------------------
// window-certified distance bounds

struct WindowResult {
    int64_t lo = 0;
    int64_t hi = -1;  // empty window when hi < lo
    uint64_t certified = 1;
    bool vacuous = false;
};

// maximal interval [lo, hi] within [jmin, jmax] containing 0 on which
// ev(X^j / gpoly^e) stays in the dual; the certified distance lower bound
// is the interval length plus one (alternant bound with the multipliers
// absorbing the window offset)
inline WindowResult max_consecutive_window(const GoppaCode& code, const Polynomial& gpoly,
                                           uint32_t e, int64_t jmin, int64_t jmax) {
    if (jmin > 0 || jmax < 0)
        throw std::invalid_argument("window: range must contain 0");
    if (jmin < 0 && code.support().contains_zero())
        throw std::invalid_argument("window: negative exponents with zero in support");
    WindowResult out;
    out.vacuous = code.dim() == 0;
    const Field& f = code.field();
    auto member = [&](int64_t j) {
        return code.dual_contains(eval_vector_values(f, code.support(), j, gpoly, e));
    };
    int64_t hi = -1;
    for (int64_t j = 0; j <= jmax; ++j) {
        if (!member(j)) break;
        hi = j;
    }
    if (hi < 0) return out;  // no interval containing 0
    int64_t lo = 0;
    for (int64_t j = -1; j >= jmin; --j) {
        if (!member(j)) break;
        lo = j;
    }
    out.lo = lo;
    out.hi = hi;
    out.certified = static_cast<uint64_t>(hi - lo + 1) + 1;
    return out;
}

// ---------------------------------------------------------------------------
// closed-form bound formulas

struct BoundEntry {
    std::string name;
    bool applicable = false;
    uint64_t value = 0;
    std::string precondition;
};

struct BoundSummary {
    uint32_t p = 0, s = 0, m = 0;
    uint64_t q = 0, a = 0, b = 0, t = 0;
    bool k_defined = false;
    uint64_t strict_count_k = 0;  // #{ i >= 1 : i*(q/2-1) < a }
    std::vector<BoundEntry> entries;

    const BoundEntry* find(const std::string& name) const {
        for (const auto& e : entries)
            if (e.name == name) return &e;
        return nullptr;
    }
};

inline BoundSummary bound_calculators(uint32_t p, uint32_t s, uint32_t m) {
    if (!detail::is_prime_u32(p)) throw std::invalid_argument("bounds: p must be prime");
    if (s < 1 || m < 2) throw std::invalid_argument("bounds: need s >= 1, m >= 2");
    BoundSummary out;
    out.p = p;
    out.s = s;
    out.m = m;
    uint64_t q = 1;
    for (uint32_t i = 0; i < s; ++i) q *= p;
    out.q = q;
    uint64_t a = 0, e = 1;
    for (uint32_t i = 0; i + 1 < m; ++i) {
        a += e;
        e *= q;
    }
    out.a = a;
    out.t = e;          // q^(m-1)
    out.b = a + e;      // 1 + q + ... + q^(m-1)
    const bool binary = p == 2;
    const uint64_t half = q / 2;

    out.entries.push_back({"classical_pary", true, out.t + 1, "none"});
    out.entries.push_back({"classical_binary", binary, binary ? 2 * out.t + 1 : 0, "p = 2"});
    out.entries.push_back({"equivalence_pary", true, out.b, "none"});

    if (binary && q >= 4) {
        out.k_defined = true;
        uint64_t k = 0;
        while ((k + 1) * (half - 1) < a) ++k;
        out.strict_count_k = k;
        out.entries.push_back(
            {"equivalence_binary", true, 2 * out.b + a / (half - 1), "p = 2, q >= 4"});
        out.entries.push_back({"window_formula", true, 2 * a * q + 4 + k, "p = 2, q >= 4"});
    } else {
        out.entries.push_back({"equivalence_binary", false, 0, "p = 2, q >= 4"});
        out.entries.push_back({"window_formula", false, 0, "p = 2, q >= 4"});
    }
    bool m3 = binary && m == 3 && q >= 8;
    out.entries.push_back(
        {"m3_refined", m3, m3 ? 2 * q * q + 2 * q + 8 : 0, "p = 2, m = 3, q >= 8"});
    return out;
}

// ---------------------------------------------------------------------------
// per-statement verifiers

// Tr(alpha) != 0  <=>  h(alpha^{-1}) != 0, exhaustively over nonzero alpha
inline CheckReport check_support_inversion(TraceGoppaInstance& inst) {
    CheckReport rep;
    rep.name = "support_inversion";
    const Field& f = inst.field();
    // sparse evaluation of h via its exponent set {b - q^i}
    std::vector<uint64_t> hexp;
    uint64_t e = 1;
    for (uint32_t i = 0; i < f.m(); ++i) {
        hexp.push_back(inst.b() - e);
        e *= f.q();
    }
    size_t bad = 0;
    for (uint64_t x = 1; x < f.order(); ++x) {
        uint32_t xi = static_cast<uint32_t>(x);
        bool in_l = f.trace_rel(xi) != 0;
        uint32_t invx = f.inv(xi);
        uint32_t hv = 0;
        for (uint64_t ex : hexp) hv = f.add(hv, f.pow(invx, static_cast<int64_t>(ex)));
        bool in_m = hv != 0;
        if (in_l != in_m) {
            ++bad;
            if (rep.counterexample.empty()) {
                std::ostringstream ss;
                ss << "alpha index " << x << ": Tr nonzero = " << in_l
                   << ", h(alpha^-1) nonzero = " << in_m;
                rep.counterexample = ss.str();
            }
        }
    }
    std::ostringstream note;
    note << "checked " << (f.order() - 1) << " nonzero elements, |L| = " << inst.n();
    rep.note = note.str();
    rep.pass = bad == 0;
    return rep;
}

// multiplying an exponent by q cyclically shifts its q-ary digits
inline CheckReport check_digit_rotation(const Field& f) {
    CheckReport rep;
    rep.name = "digit_rotation";
    const uint64_t q = f.q(), n = f.order() - 1;
    const uint32_t m = f.m();
    size_t bad = 0;
    for (uint64_t i = 0; i < n; ++i) {
        uint64_t rot = i * q % n;
        uint64_t x = i;
        std::vector<uint64_t> d(m);
        for (uint32_t r = 0; r < m; ++r) {
            d[r] = x % q;
            x /= q;
        }
        uint64_t expect = 0;
        for (uint32_t r = m; r-- > 0;) expect = expect * q + d[(r + m - 1) % m];
        if (expect != rot) {
            ++bad;
            if (rep.counterexample.empty()) {
                std::ostringstream ss;
                ss << "i = " << i << ": q*i mod (q^m-1) = " << rot << ", shifted digits give "
                   << expect;
                rep.counterexample = ss.str();
            }
        }
    }
    std::ostringstream note;
    note << "checked all " << n << " exponents";
    rep.note = note.str();
    rep.pass = bad == 0;
    return rep;
}

// ev_L(X^i / g) and its q-power stay dual for q^(m-1) <= i <= aq
inline CheckReport check_high_power_lemma(TraceGoppaInstance& inst) {
    CheckReport rep;
    rep.name = "high_power_lemma";
    const Field& f = inst.field();
    const GoppaCode& c = inst.code(CodeKind::Lg);
    rep.vacuous = c.dim() == 0;
    const int64_t lo = static_cast<int64_t>(c.t());  // q^(m-1)
    const int64_t hi = static_cast<int64_t>(inst.a() * f.q());
    bool all = true;
    for (int64_t i = lo; i <= hi; ++i) {
        bool plain = inst.member(CodeKind::Lg, i);
        bool qpow = c.dual_contains(pth_power_vector(c.eval_values(i, 1), f.s()));
        std::ostringstream k1, k2;
        k1 << "i=" << i;
        k2 << "i=" << i << " q-power";
        rep.record(k1.str(), plain);
        rep.record(k2.str(), qpow);
        all = all && plain && qpow;
    }
    rep.pass = all;
    return rep;
}

// ev_M(X^{aq} / h) is dual; the proof step ev_M(X^a / h) checked alongside
inline CheckReport check_aq_lemma(TraceGoppaInstance& inst) {
    CheckReport rep;
    rep.name = "aq_lemma";
    const GoppaCode& c = inst.code(CodeKind::Mh);
    rep.vacuous = c.dim() == 0;
    const int64_t a = static_cast<int64_t>(inst.a());
    const int64_t aq = a * static_cast<int64_t>(inst.field().q());
    bool at_a = inst.member(CodeKind::Mh, a);
    bool at_aq = inst.member(CodeKind::Mh, aq);
    rep.record("j=a", at_a);
    rep.record("j=aq", at_aq);
    rep.pass = at_a && at_aq;
    return rep;
}

// C(L, g) == C(M, h) as F_p vector sets under the identification
// M_i = L_i^{-1}
inline CheckReport check_code_equality(TraceGoppaInstance& inst) {
    CheckReport rep;
    rep.name = "code_equality";
    const GoppaCode& cl = inst.code(CodeKind::Lg);
    const GoppaCode& cm = inst.code(CodeKind::Mh);
    rep.vacuous = cl.dim() == 0 && cm.dim() == 0;
    rep.pass = same_kernel(cl.parity(), cm.parity());
    std::ostringstream note;
    note << "dim C(L,g) = " << cl.dim() << ", dim C(M,h) = " << cm.dim();
    rep.note = note.str();
    if (!rep.pass) rep.counterexample = "kernel bases are not mutually contained";
    return rep;
}

// C(L, g^2) == C(M, h^2)
inline CheckReport check_squared_equality(TraceGoppaInstance& inst) {
    CheckReport rep;
    rep.name = "squared_equality";
    const GoppaCode& cl = inst.code(CodeKind::Lg2);
    const GoppaCode& cm = inst.code(CodeKind::Mh2);
    rep.vacuous = cl.dim() == 0 && cm.dim() == 0;
    rep.pass = same_kernel(cl.parity(), cm.parity());
    std::ostringstream note;
    note << "dim C(L,g2) = " << cl.dim() << ", dim C(M,h2) = " << cm.dim();
    rep.note = note.str();
    if (!rep.pass) rep.counterexample = "kernel bases are not mutually contained";
    return rep;
}

// C(L, g) == C(L, g^2) on the instance (g = Tr is squarefree)
inline CheckReport check_square_identity(TraceGoppaInstance& inst) {
    CheckReport rep;
    rep.name = "square_identity";
    if (inst.field().p() != 2) {
        rep.applicable = false;
        rep.note = "requires p = 2";
        return rep;
    }
    const GoppaCode& c1 = inst.code(CodeKind::Lg);
    const GoppaCode& c2 = inst.code(CodeKind::Lg2);
    rep.vacuous = c1.dim() == 0 && c2.dim() == 0;
    rep.pass = same_kernel(c1.parity(), c2.parity());
    return rep;
}

// C(L, g^(p-1)) == C(L, g^p) with q0 = p
inline CheckReport check_skhn_identity(TraceGoppaInstance& inst) {
    CheckReport rep;
    rep.name = "skhn_identity";
    const Field& f = inst.field();
    if (f.p() == 2) {
        const GoppaCode& c1 = inst.code(CodeKind::Lg);
        const GoppaCode& c2 = inst.code(CodeKind::Lg2);
        rep.vacuous = c1.dim() == 0 && c2.dim() == 0;
        rep.pass = same_kernel(c1.parity(), c2.parity());
        rep.note = "p = 2 reduces to the square identity";
        return rep;
    }
    GoppaCode c1(inst.field_ptr(), inst.L(), inst.g().pow(f.p() - 1));
    GoppaCode c2(inst.field_ptr(), inst.L(), inst.g().pow(f.p()));
    rep.vacuous = c1.dim() == 0 && c2.dim() == 0;
    rep.pass = same_kernel(c1.parity(), c2.parity());
    std::ostringstream note;
    note << "dim C(L,g^" << (f.p() - 1) << ") = " << c1.dim() << ", dim C(L,g^" << f.p()
         << ") = " << c2.dim();
    rep.note = note.str();
    return rep;
}

// with all ev(X^{i'}/G) for i' < i+t verified dual, ev(X^{i+t}/G) is dual
// iff the plain power ev(X^i) is; both sides evaluated independently
inline CheckReport check_xpow_lemma(TraceGoppaInstance& inst, int64_t i,
                                    std::optional<CodeKind> kind_opt = std::nullopt) {
    CheckReport rep;
    const CodeKind kind =
        kind_opt ? *kind_opt : (inst.field().p() == 2 ? CodeKind::Lg2 : CodeKind::Mh);
    const GoppaCode& c = inst.code(kind);
    std::ostringstream nm;
    nm << "xpow_lemma[" << code_kind_name(kind) << ",i=" << i << "]";
    rep.name = nm.str();
    if (i < 0) {
        rep.applicable = false;
        rep.note = "requires i >= 0";
        return rep;
    }
    rep.vacuous = c.dim() == 0;
    const int64_t t = static_cast<int64_t>(c.t());
    for (int64_t ip = 0; ip < i + t; ++ip)
        if (!inst.member(kind, ip)) {
            rep.applicable = false;
            std::ostringstream note;
            note << "hypothesis fails: ev(X^" << ip << "/G) not in the dual";
            rep.note = note.str();
            return rep;
        }
    bool lhs = inst.member(kind, i + t);
    bool rhs = inst.member_plain(kind, i);
    std::ostringstream k1, k2;
    k1 << "lhs ev(X^" << (i + t) << "/G)";
    k2 << "rhs ev(X^" << i << ")";
    rep.record(k1.str(), lhs);
    rep.record(k2.str(), rhs);
    rep.pass = lhs == rhs;
    if (!rep.pass) {
        std::ostringstream ss;
        ss << "biconditional broken at i = " << i;
        rep.counterexample = ss.str();
    }
    return rep;
}

// ev_M(Y^j / h^2) dual for every 0 <= j <= 2aq + 2
inline CheckReport check_more_high_powers(TraceGoppaInstance& inst) {
    CheckReport rep;
    rep.name = "more_high_powers";
    if (inst.field().p() != 2) {
        rep.applicable = false;
        rep.note = "requires p = 2";
        return rep;
    }
    const GoppaCode& c = inst.code(CodeKind::Mh2);
    rep.vacuous = c.dim() == 0;
    const int64_t top = 2 * static_cast<int64_t>(inst.a() * inst.field().q()) + 2;
    bool all = true;
    for (int64_t j = 0; j <= top; ++j) {
        bool ok = inst.member(CodeKind::Mh2, j);
        std::ostringstream k;
        k << "j=" << j;
        rep.record(k.str(), ok);
        all = all && ok;
    }
    std::ostringstream note;
    note << "checked j = 0 .. " << top;
    rep.note = note.str();
    rep.pass = all;
    return rep;
}

// ev_M(Y^{-i} / h^2) dual for 0 < i < a / (q/2 - 1); the report records the
// empirical edge (largest consecutive i that actually holds)
inline CheckReport check_negative_powers(TraceGoppaInstance& inst) {
    CheckReport rep;
    rep.name = "negative_powers";
    const Field& f = inst.field();
    if (f.p() != 2 || f.q() < 4) {
        rep.applicable = false;
        rep.note = "requires p = 2 and q >= 4 (q/2 - 1 must be positive)";
        return rep;
    }
    const GoppaCode& c = inst.code(CodeKind::Mh2);
    rep.vacuous = c.dim() == 0;
    const uint64_t a = inst.a(), half = f.q() / 2;
    bool all = true;
    int64_t i = 1;
    for (; static_cast<uint64_t>(i) * (half - 1) < a; ++i) {
        bool ok = inst.member(CodeKind::Mh2, -i);
        std::ostringstream k;
        k << "i=" << i;
        rep.record(k.str(), ok);
        all = all && ok;
    }
    // empirical window edge beyond the lemma's guarantee
    int64_t edge = i - 1;
    const int64_t cap = static_cast<int64_t>(4 * a + 8);
    if (all) {
        for (int64_t j = i; j <= cap; ++j) {
            if (!inst.member(CodeKind::Mh2, -j)) break;
            edge = j;
        }
    }
    std::ostringstream note;
    note << "lemma range i = 1 .. " << (i - 1) << "; empirical edge i' = " << edge;
    rep.note = note.str();
    rep.pass = all;
    return rep;
}

// ev_L(X^{2q^2+2q+3} / g^2) dual (the (q/2)-power claim is equivalent by
// p-power closure)
inline CheckReport check_m3_high_power(TraceGoppaInstance& inst) {
    CheckReport rep;
    rep.name = "m3_high_power";
    const Field& f = inst.field();
    if (f.p() != 2 || f.m() != 3 || f.q() < 8) {
        rep.applicable = false;
        rep.note = "requires p = 2, m = 3, q >= 8";
        return rep;
    }
    const GoppaCode& c = inst.code(CodeKind::Lg2);
    rep.vacuous = c.dim() == 0;
    const int64_t q = static_cast<int64_t>(f.q());
    const int64_t e = 2 * q * q + 2 * q + 3;
    bool ok = inst.member(CodeKind::Lg2, e);
    std::ostringstream k;
    k << "ev(X^" << e << "/g^2)";
    rep.record(k.str(), ok);
    rep.pass = ok;
    return rep;
}

// ev_L(X^{2q+5}) dual as a plain power; the 2-power consequence X^{2q+6}
// recorded alongside
inline CheckReport check_m3_plain_power(TraceGoppaInstance& inst) {
    CheckReport rep;
    rep.name = "m3_plain_power";
    const Field& f = inst.field();
    if (f.p() != 2 || f.m() != 3 || f.q() < 8) {
        rep.applicable = false;
        rep.note = "requires p = 2, m = 3, q >= 8";
        return rep;
    }
    const GoppaCode& c = inst.code(CodeKind::Lg2);
    rep.vacuous = c.dim() == 0;
    const int64_t q = static_cast<int64_t>(f.q());
    bool ok = inst.member_plain(CodeKind::Lg2, 2 * q + 5);
    bool closure = inst.member_plain(CodeKind::Lg2, 2 * q + 6);
    {
        std::ostringstream k;
        k << "ev(X^" << (2 * q + 5) << ")";
        rep.record(k.str(), ok);
    }
    {
        std::ostringstream k;
        k << "ev(X^" << (2 * q + 6) << ") closure";
        rep.record(k.str(), closure);
    }
    rep.pass = ok && closure;
    return rep;
}

// binary distance corollary: C(L,g) equals C(M,h^2) and the defining
// window of C(M,h^2) certifies d >= 2aq + 1
inline CheckReport check_binary_corollary(TraceGoppaInstance& inst) {
    CheckReport rep;
    rep.name = "binary_corollary";
    const Field& f = inst.field();
    if (f.p() != 2) {
        rep.applicable = false;
        rep.note = "requires p = 2";
        return rep;
    }
    const GoppaCode& cl = inst.code(CodeKind::Lg);
    const GoppaCode& cm2 = inst.code(CodeKind::Mh2);
    rep.vacuous = cl.dim() == 0;
    const int64_t aq = static_cast<int64_t>(inst.a() * f.q());
    bool window = true;
    for (int64_t j = 0; j < 2 * aq && window; ++j) window = inst.member(CodeKind::Mh2, j);
    rep.record("defining window [0, 2aq-1]", window);
    bool equal = same_kernel(cl.parity(), cm2.parity());
    rep.record("C(L,g) == C(M,h^2)", equal);
    std::ostringstream note;
    note << "certified d >= " << (2 * aq + 1) << " for C(L,g) when both hold";
    rep.note = note.str();
    rep.pass = window && equal;
    return rep;
}

// distance theorem over F_p (and its binary refinement when q >= 4):
// certified windows from verified memberships must reach the closed-form
// values
inline CheckReport check_distance_theorem(TraceGoppaInstance& inst) {
    CheckReport rep;
    rep.name = "distance_theorem";
    const Field& f = inst.field();
    const uint64_t a = inst.a(), q = f.q(), b = inst.b();
    const int64_t aq = static_cast<int64_t>(a * q);
    rep.vacuous = inst.code(CodeKind::Mh).dim() == 0;

    bool pary_window = true;
    for (int64_t j = 0; j <= aq && pary_window; ++j) pary_window = inst.member(CodeKind::Mh, j);
    rep.record("p-ary window [0, aq]", pary_window);
    bool equal = same_kernel(inst.code(CodeKind::Lg).parity(), inst.code(CodeKind::Mh).parity());
    rep.record("C(L,g) == C(M,h)", equal);
    uint64_t pary_certified = pary_window ? static_cast<uint64_t>(aq) + 2 : 1;
    bool pary_ok = pary_window && equal && pary_certified >= b;

    std::ostringstream note;
    note << "p-ary certified " << pary_certified << " vs formula value " << b;
    bool binary_ok = true;
    if (f.p() == 2 && q >= 4) {
        const uint64_t half = q / 2;
        uint64_t k = 0;
        while ((k + 1) * (half - 1) < a) ++k;
        bool bwin = true;
        for (int64_t j = -static_cast<int64_t>(k); j <= 2 * aq + 2 && bwin; ++j)
            bwin = inst.member(CodeKind::Mh2, j);
        std::ostringstream wk;
        wk << "binary window [" << -static_cast<int64_t>(k) << ", " << (2 * aq + 2) << "]";
        rep.record(wk.str(), bwin);
        bool equal2 =
            same_kernel(inst.code(CodeKind::Lg).parity(), inst.code(CodeKind::Mh2).parity());
        rep.record("C(L,g) == C(M,h^2)", equal2);
        uint64_t certified = bwin ? 2 * a * q + 4 + k : 1;
        uint64_t formula = 2 * b + a / (half - 1);
        note << "; binary certified " << certified << " vs formula value " << formula
             << " (strict count k = " << k << ")";
        binary_ok = bwin && equal2 && certified >= formula;
    } else if (f.p() == 2) {
        note << "; binary clause skipped (q < 4)";
    }
    rep.note = note.str();
    rep.pass = pary_ok && binary_ok;
    return rep;
}

// m = 3 refinement: the full consecutive window [0, 2q^2+2q+6] on
// C(L, g^2) certifies d >= 2q^2 + 2q + 8
inline CheckReport check_m3_window_theorem(TraceGoppaInstance& inst) {
    CheckReport rep;
    rep.name = "m3_window_theorem";
    const Field& f = inst.field();
    if (f.p() != 2 || f.m() != 3 || f.q() < 8) {
        rep.applicable = false;
        rep.note = "requires p = 2, m = 3, q >= 8";
        return rep;
    }
    rep.vacuous = inst.code(CodeKind::Lg2).dim() == 0;
    const int64_t q = static_cast<int64_t>(f.q());
    const int64_t top = 2 * q * q + 2 * q + 6;
    bool all = true;
    int64_t first_fail = -1;
    for (int64_t j = 0; j <= top; ++j) {
        if (!inst.member(CodeKind::Lg2, j)) {
            all = false;
            first_fail = j;
            break;
        }
    }
    std::ostringstream k;
    k << "window [0, " << top << "]";
    rep.record(k.str(), all);
    std::ostringstream note;
    if (all)
        note << "certified d >= " << (top + 2) << " vs formula value " << (2 * q * q + 2 * q + 8);
    else
        note << "membership fails first at j = " << first_fail;
    rep.note = note.str();
    rep.pass = all && top + 2 >= 2 * q * q + 2 * q + 8;
    return rep;
}

// suite wrapper for the xpow biconditional at representative exponents
inline CheckReport check_xpow_suite(TraceGoppaInstance& inst) {
    CheckReport rep;
    rep.name = "xpow_lemma";
    const Field& f = inst.field();
    const int64_t q = static_cast<int64_t>(f.q());
    std::vector<int64_t> is;
    if (f.p() == 2)
        is = {0, 1, q + 1, 2 * q + 1};
    else
        is = {0, 1};
    rep.vacuous = inst.code(f.p() == 2 ? CodeKind::Lg2 : CodeKind::Mh).dim() == 0;
    bool all = true;
    bool any_applicable = false;
    for (int64_t i : is) {
        CheckReport sub = check_xpow_lemma(inst, i);
        std::ostringstream k;
        k << "i=" << i;
        if (!sub.applicable) {
            rep.record(k.str() + " (hypothesis unmet)", true);
            continue;
        }
        any_applicable = true;
        rep.record(k.str(), sub.pass);
        all = all && sub.pass;
    }
    rep.pass = all;
    if (!any_applicable) rep.note = "no exponent met the hypothesis";
    return rep;
}

// ---------------------------------------------------------------------------
// registry

inline const std::vector<std::string>& all_check_names() {
    static const std::vector<std::string> names = {
        "support_inversion", "digit_rotation",   "high_power_lemma", "aq_lemma",
        "code_equality",     "squared_equality", "square_identity",  "skhn_identity",
        "xpow_lemma",        "more_high_powers", "negative_powers",  "m3_high_power",
        "m3_plain_power",    "binary_corollary", "distance_theorem", "m3_window_theorem",
    };
    return names;
}

inline CheckReport run_check(TraceGoppaInstance& inst, const std::string& name) {
    if (name == "support_inversion") return check_support_inversion(inst);
    if (name == "digit_rotation") return check_digit_rotation(inst.field());
    if (name == "high_power_lemma") return check_high_power_lemma(inst);
    if (name == "aq_lemma") return check_aq_lemma(inst);
    if (name == "code_equality") return check_code_equality(inst);
    if (name == "squared_equality") return check_squared_equality(inst);
    if (name == "square_identity") return check_square_identity(inst);
    if (name == "skhn_identity") return check_skhn_identity(inst);
    if (name == "xpow_lemma") return check_xpow_suite(inst);
    if (name == "more_high_powers") return check_more_high_powers(inst);
    if (name == "negative_powers") return check_negative_powers(inst);
    if (name == "m3_high_power") return check_m3_high_power(inst);
    if (name == "m3_plain_power") return check_m3_plain_power(inst);
    if (name == "binary_corollary") return check_binary_corollary(inst);
    if (name == "distance_theorem") return check_distance_theorem(inst);
    if (name == "m3_window_theorem") return check_m3_window_theorem(inst);
    throw std::invalid_argument("unknown check: " + name);
}

inline std::vector<CheckReport> run_checks(TraceGoppaInstance& inst,
                                           const std::vector<std::string>& names) {
    std::vector<CheckReport> out;
    out.reserve(names.size());
    for (const auto& n : names) out.push_back(run_check(inst, n));
    return out;
}

}  // namespace goppa
