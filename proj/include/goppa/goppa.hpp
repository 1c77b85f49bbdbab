// Goppa codes per the classical congruence definition, constructed two
// independent ways: an expanded parity-check matrix over F_p (kernel =
// code) and a syndrome oracle working in F_{q^m}[x] via extended-gcd
// inverses. Dual membership of evaluation vectors ev(X^j / g^e) — with
// negative j allowed on zero-free supports — drives every verifier.

#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <span>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "field.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"

namespace goppa {

// ordered list of distinct evaluation points
class Support {
  public:
    Support() = default;
    Support(const Field* f, std::vector<uint32_t> elems) : f_(f), elems_(std::move(elems)) {
        std::vector<uint32_t> sorted = elems_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("support: elements must be distinct");
        for (uint32_t e : elems_)
            if (e >= f->order()) throw std::invalid_argument("support: element out of range");
    }

    const Field& field() const { return *f_; }
    size_t size() const { return elems_.size(); }
    uint32_t idx(size_t i) const { return elems_[i]; }
    const std::vector<uint32_t>& indices() const { return elems_; }
    bool contains_zero() const {
        for (uint32_t e : elems_)
            if (e == 0) return true;
        return false;
    }

    // elementwise inverses, same order (requires a zero-free support)
    Support inverted() const {
        std::vector<uint32_t> out;
        out.reserve(elems_.size());
        for (uint32_t e : elems_) out.push_back(f_->inv(e));
        return {f_, std::move(out)};
    }

  private:
    const Field* f_ = nullptr;
    std::vector<uint32_t> elems_;
};

// ev_S(X^j / g(X)^e), entry i = alpha_i^j / g(alpha_i)^e
struct EvalVector {
    int64_t j = 0;
    uint32_t e = 1;
    VectorQm values;
};

inline VectorQm eval_vector_values(const Field& f, const Support& s, int64_t j,
                                   const Polynomial& g, uint32_t e) {
    if (j < 0 && s.contains_zero())
        throw std::invalid_argument("eval_vector: negative exponent with zero in support");
    VectorQm out{&f, {}};
    out.vals.reserve(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
        uint32_t num = f.pow(s.idx(i), j);
        uint32_t den = 1;
        if (e) {
            uint32_t gv = g.eval_idx(s.idx(i));
            if (gv == 0) throw std::invalid_argument("eval_vector: g vanishes on support");
            den = f.pow(gv, static_cast<int64_t>(e));
        }
        out.vals.push_back(f.div(num, den));
    }
    return out;
}

inline EvalVector eval_vector(const Field& f, const Support& s, int64_t j, const Polynomial& g,
                              uint32_t e) {
    return {j, e, eval_vector_values(f, s, j, g, e)};
}

class GoppaCode {
  public:
    GoppaCode(std::shared_ptr<const Field> field, Support support, Polynomial gpoly)
        : field_(std::move(field)), support_(std::move(support)), g_(std::move(gpoly)) {
        if (g_.degree() < 1) throw std::invalid_argument("goppa: Goppa polynomial must have degree >= 1");
        const Field& f = *field_;
        const size_t n = support_.size();
        t_ = static_cast<uint64_t>(g_.degree());
        denom_.reserve(n);
        for (size_t i = 0; i < n; ++i) {
            uint32_t gv = g_.eval_idx(support_.idx(i));
            if (gv == 0) {
                std::ostringstream msg;
                msg << "goppa: support element " << f.element(support_.idx(i))
                    << " (index " << support_.idx(i) << ") is a root of g";
                throw std::invalid_argument(msg.str());
            }
            denom_.push_back(gv);
        }
        std::vector<VectorQm> rows;
        rows.reserve(t_);
        for (uint64_t j = 0; j < t_; ++j) rows.push_back(eval_values(static_cast<int64_t>(j), 1));
        parity_ = expand_to_fp(rows);
        parity_rref_ = parity_.rref();
        kernel_ = kernel_basis(parity_);
        dim_ = n - parity_rref_.rank;
        if (kernel_.rows() != dim_) throw std::logic_error("goppa: kernel dimension mismatch");
        // Goppa dimension bound n - smt, automatic from the row count
        int64_t lower = static_cast<int64_t>(n) - static_cast<int64_t>(f.sm() * t_);
        if (static_cast<int64_t>(dim_) < lower)
            throw std::logic_error("goppa: dimension bound violated");
    }

    const Field& field() const { return *field_; }
    std::shared_ptr<const Field> field_ptr() const { return field_; }
    const Support& support() const { return support_; }
    const Polynomial& gpoly() const { return g_; }
    uint64_t t() const { return t_; }
    size_t length() const { return support_.size(); }
    size_t dim() const { return dim_; }
    const MatrixFp& parity() const { return parity_; }
    const MatrixFp& kernel() const { return kernel_; }
    uint32_t denom_idx(size_t i) const { return denom_[i]; }

    // ev(X^j / g^e) over this code's support, reusing cached g(alpha_i)
    VectorQm eval_values(int64_t j, uint32_t e = 1) const {
        const Field& f = *field_;
        if (j < 0 && support_.contains_zero())
            throw std::invalid_argument("eval: negative exponent with zero in support");
        VectorQm out{&f, {}};
        out.vals.reserve(support_.size());
        for (size_t i = 0; i < support_.size(); ++i) {
            uint32_t num = f.pow(support_.idx(i), j);
            uint32_t den = e ? f.pow(denom_[i], static_cast<int64_t>(e)) : 1u;
            out.vals.push_back(f.div(num, den));
        }
        return out;
    }

    EvalVector eval(int64_t j, uint32_t e = 1) const { return {j, e, eval_values(j, e)}; }

    // v is orthogonal (over F_{q^m}) to every codeword; kernel-basis route
    bool dual_contains(const VectorQm& v) const {
        if (v.size() != length()) throw std::invalid_argument("dual_contains: length mismatch");
        for (size_t r = 0; r < kernel_.rows(); ++r)
            if (dot_with_word(v, kernel_.row(r)) != 0) return false;
        return true;
    }
    bool dual_contains(const EvalVector& v) const { return dual_contains(v.values); }

    // same predicate via row-space membership of the expanded parity matrix
    bool dual_contains_parity(const VectorQm& v) const {
        if (v.size() != length()) throw std::invalid_argument("dual_contains: length mismatch");
        MatrixFp ex = expand_to_fp(std::span<const VectorQm>(&v, 1));
        for (size_t r = 0; r < ex.rows(); ++r)
            if (!rowspace_contains(parity_rref_, ex.row(r))) return false;
        return true;
    }

    bool in_code(std::span<const uint8_t> word) const { return parity_.annihilates(word); }

  private:
    std::shared_ptr<const Field> field_;
    Support support_;
    Polynomial g_;
    uint64_t t_ = 0;
    std::vector<uint32_t> denom_;
    MatrixFp parity_;
    MatrixFp::Rref parity_rref_;
    MatrixFp kernel_;
    size_t dim_ = 0;
};

// The independent membership oracle: sum_i c_i * (x - alpha_i)^{-1} mod g
// computed with extended-gcd inverses, then tested against zero. Shares no
// code path with the matrix construction.
class SyndromeOracle {
  public:
    SyndromeOracle(const Field& f, const Support& s, const Polynomial& g)
        : f_(&f), g_(g), n_(s.size()) {
        inv_.reserve(n_);
        for (size_t i = 0; i < n_; ++i) {
            // x - alpha_i
            Polynomial lin(&f, {f.neg(s.idx(i)), 1});
            auto [d, u, v] = ext_gcd(lin, g);
            if (d.degree() != 0)
                throw std::invalid_argument("syndrome: support element is a root of g");
            inv_.push_back((u.scaled(f.inv(d.coeff_idx(0)))) % g);
        }
    }

    Polynomial syndrome(std::span<const uint8_t> word) const {
        if (word.size() != n_) throw std::invalid_argument("syndrome: word length mismatch");
        Polynomial acc = Polynomial::zero(*f_);
        for (size_t i = 0; i < n_; ++i)
            if (word[i]) acc = acc + inv_[i].scaled(f_->scalar(word[i]));
        return acc % g_;
    }

    bool is_codeword(std::span<const uint8_t> word) const { return syndrome(word).is_zero(); }

  private:
    const Field* f_;
    Polynomial g_;
    size_t n_;
    std::vector<Polynomial> inv_;
};

inline bool syndrome_is_zero(const GoppaCode& code, std::span<const uint8_t> word) {
    return SyndromeOracle(code.field(), code.support(), code.gpoly()).is_codeword(word);
}

// C(L, g) == C(L, g^2) for squarefree g over binary fields
inline bool verify_square_identity(std::shared_ptr<const Field> f, const Support& s,
                                   const Polynomial& g) {
    if (f->p() != 2) throw std::invalid_argument("square identity: requires p = 2");
    if (!is_squarefree(g)) throw std::invalid_argument("square identity: g must be squarefree");
    GoppaCode c1(f, s, g);
    GoppaCode c2(f, s, g * g);
    return same_kernel(c1.parity(), c2.parity());
}

// C(L, g^(p-1)) == C(L, g^p) for squarefree g (Sugiyama et al., q0 = p)
inline bool verify_skhn_identity(std::shared_ptr<const Field> f, const Support& s,
                                 const Polynomial& g) {
    if (!is_squarefree(g)) throw std::invalid_argument("skhn identity: g must be squarefree");
    GoppaCode c1(f, s, g.pow(f->p() - 1));
    GoppaCode c2(f, s, g.pow(f->p()));
    return same_kernel(c1.parity(), c2.parity());
}

}  // namespace goppa
