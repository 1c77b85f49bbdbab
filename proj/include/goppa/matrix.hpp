// Dense exact linear algebra over F_p. Rows are bit-packed machine words
// when p = 2 and byte residues otherwise. Elimination picks pivots as the
// first nonzero entry scanning top-to-bottom, left-to-right, so echelon
// forms and kernel bases are deterministic.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "field.hpp"

namespace goppa {

class MatrixFp {
  public:
    MatrixFp() = default;
    MatrixFp(uint32_t p, size_t rows, size_t cols) : p_(p), rows_(rows), cols_(cols) {
        if (p < 2) throw std::invalid_argument("matrix: modulus must be >= 2");
        if (p_ == 2) {
            words_ = (cols + 63) / 64;
            bits_.assign(rows * words_, 0);
        } else {
            if (p > 255) throw std::invalid_argument("matrix: odd modulus limited to < 256");
            vals_.assign(rows * cols, 0);
        }
    }

    uint32_t p() const { return p_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    uint8_t get(size_t r, size_t c) const {
        if (p_ == 2) return (bits_[r * words_ + c / 64] >> (c % 64)) & 1;
        return vals_[r * cols_ + c];
    }

    void set(size_t r, size_t c, uint32_t v) {
        v %= p_;
        if (p_ == 2) {
            uint64_t mask = uint64_t(1) << (c % 64);
            if (v)
                bits_[r * words_ + c / 64] |= mask;
            else
                bits_[r * words_ + c / 64] &= ~mask;
        } else {
            vals_[r * cols_ + c] = static_cast<uint8_t>(v);
        }
    }

    std::vector<uint8_t> row(size_t r) const {
        std::vector<uint8_t> out(cols_);
        for (size_t c = 0; c < cols_; ++c) out[c] = get(r, c);
        return out;
    }

    void set_row(size_t r, std::span<const uint8_t> v) {
        if (v.size() != cols_) throw std::invalid_argument("matrix: row length mismatch");
        for (size_t c = 0; c < cols_; ++c) set(r, c, v[c]);
    }

    MatrixFp stacked(std::span<const uint8_t> extra_row) const {
        if (extra_row.size() != cols_) throw std::invalid_argument("matrix: row length mismatch");
        MatrixFp out(p_, rows_ + 1, cols_);
        if (p_ == 2) {
            std::copy(bits_.begin(), bits_.end(), out.bits_.begin());
        } else {
            std::copy(vals_.begin(), vals_.end(), out.vals_.begin());
        }
        out.set_row(rows_, extra_row);
        return out;
    }

    bool row_is_zero(size_t r) const {
        if (p_ == 2) {
            for (size_t w = 0; w < words_; ++w)
                if (bits_[r * words_ + w]) return false;
            return true;
        }
        for (size_t c = 0; c < cols_; ++c)
            if (vals_[r * cols_ + c]) return false;
        return true;
    }

    // M * v^T == 0
    bool annihilates(std::span<const uint8_t> v) const {
        if (v.size() != cols_) throw std::invalid_argument("matrix: length mismatch");
        if (p_ == 2) {
            std::vector<uint64_t> pv = pack(v);
            for (size_t r = 0; r < rows_; ++r) {
                uint64_t parity = 0;
                for (size_t w = 0; w < words_; ++w) parity ^= bits_[r * words_ + w] & pv[w];
                if (std::popcount(parity) & 1) return false;
            }
            return true;
        }
        for (size_t r = 0; r < rows_; ++r) {
            uint32_t acc = 0;
            const uint8_t* row = &vals_[r * cols_];
            for (size_t c = 0; c < cols_; ++c) acc = (acc + uint32_t(row[c]) * v[c]) % p_;
            if (acc) return false;
        }
        return true;
    }

    friend bool operator==(const MatrixFp& a, const MatrixFp& b) {
        return a.p_ == b.p_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.bits_ == b.bits_ &&
               a.vals_ == b.vals_;
    }

    struct Rref;
    Rref rref() const;
    size_t rank() const;

  private:
    void swap_rows(size_t a, size_t b) {
        if (a == b) return;
        if (p_ == 2) {
            for (size_t w = 0; w < words_; ++w)
                std::swap(bits_[a * words_ + w], bits_[b * words_ + w]);
        } else {
            for (size_t c = 0; c < cols_; ++c)
                std::swap(vals_[a * cols_ + c], vals_[b * cols_ + c]);
        }
    }

    // normalize pivot at (r, c) to one
    void scale_row(size_t r, size_t c) {
        if (p_ == 2) return;
        uint32_t inv = inv_mod_p(get(r, c));
        if (inv == 1) return;
        uint8_t* row = &vals_[r * cols_];
        for (size_t j = 0; j < cols_; ++j) row[j] = static_cast<uint8_t>(row[j] * inv % p_);
    }

    // row_i -= f * row_r
    void eliminate(size_t i, size_t r, uint8_t f) {
        if (p_ == 2) {
            uint64_t* dst = &bits_[i * words_];
            const uint64_t* src = &bits_[r * words_];
            for (size_t w = 0; w < words_; ++w) dst[w] ^= src[w];
        } else {
            uint8_t* dst = &vals_[i * cols_];
            const uint8_t* src = &vals_[r * cols_];
            for (size_t c = 0; c < cols_; ++c)
                dst[c] = static_cast<uint8_t>((dst[c] + uint32_t(p_ - f) * src[c]) % p_);
        }
    }

    uint32_t inv_mod_p(uint32_t x) const {
        uint64_t r = 1, base = x % p_, e = p_ - 2;
        while (e) {
            if (e & 1) r = r * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return static_cast<uint32_t>(r);
    }

    std::vector<uint64_t> pack(std::span<const uint8_t> v) const {
        std::vector<uint64_t> out(words_, 0);
        for (size_t c = 0; c < v.size(); ++c)
            if (v[c]) out[c / 64] |= uint64_t(1) << (c % 64);
        return out;
    }

    uint32_t p_ = 2;
    size_t rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<uint64_t> bits_;
    std::vector<uint8_t> vals_;
};

struct MatrixFp::Rref {
    MatrixFp mat;
    size_t rank = 0;
    std::vector<size_t> pivot_cols;
};

inline MatrixFp::Rref MatrixFp::rref() const {
    MatrixFp w = *this;
    Rref out;
    out.pivot_cols.reserve(std::min(rows_, cols_));
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
        size_t piv = r;
        while (piv < rows_ && w.get(piv, c) == 0) ++piv;
        if (piv == rows_) continue;
        w.swap_rows(r, piv);
        w.scale_row(r, c);
        for (size_t i = 0; i < rows_; ++i) {
            if (i == r) continue;
            uint8_t f = w.get(i, c);
            if (f) w.eliminate(i, r, f);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = r;
    out.mat = std::move(w);
    return out;
}

inline size_t MatrixFp::rank() const { return rref().rank; }

// basis of {v : M v^T = 0}, one row per free column in ascending order
inline MatrixFp kernel_basis(const MatrixFp& m) {
    auto rr = m.rref();
    const size_t n = m.cols();
    std::vector<uint8_t> is_pivot(n, 0);
    for (size_t c : rr.pivot_cols) is_pivot[c] = 1;
    MatrixFp out(m.p(), n - rr.rank, n);
    size_t k = 0;
    for (size_t fc = 0; fc < n; ++fc) {
        if (is_pivot[fc]) continue;
        out.set(k, fc, 1);
        for (size_t r = 0; r < rr.pivot_cols.size(); ++r) {
            uint8_t v = rr.mat.get(r, fc);
            if (v) out.set(k, rr.pivot_cols[r], m.p() - v);
        }
        ++k;
    }
    if (k != n - rr.rank) throw std::logic_error("kernel_basis: rank-nullity mismatch");
    return out;
}

// reduce v against an echelon form; v is in the row space iff the residual
// vanishes
inline bool rowspace_contains(const MatrixFp::Rref& rr, std::span<const uint8_t> v) {
    if (v.size() != rr.mat.cols()) throw std::invalid_argument("rowspace: length mismatch");
    const uint32_t p = rr.mat.p();
    std::vector<uint8_t> w(v.begin(), v.end());
    for (size_t r = 0; r < rr.pivot_cols.size(); ++r) {
        uint8_t f = w[rr.pivot_cols[r]];
        if (!f) continue;
        for (size_t c = 0; c < w.size(); ++c)
            w[c] = static_cast<uint8_t>((w[c] + uint32_t(p - f) * rr.mat.get(r, c)) % p);
    }
    for (uint8_t x : w)
        if (x) return false;
    return true;
}

inline bool rowspace_contains(const MatrixFp& m, std::span<const uint8_t> v) {
    return rowspace_contains(m.rref(), v);
}

// kernels coincide, tested by mutual containment of kernel bases
inline bool same_kernel(const MatrixFp& m1, const MatrixFp& m2) {
    if (m1.cols() != m2.cols()) throw std::invalid_argument("same_kernel: column count mismatch");
    if (m1.p() != m2.p()) throw std::invalid_argument("same_kernel: modulus mismatch");
    MatrixFp k1 = kernel_basis(m1);
    MatrixFp k2 = kernel_basis(m2);
    if (k1.rows() != k2.rows()) return false;
    for (size_t r = 0; r < k1.rows(); ++r)
        if (!m2.annihilates(k1.row(r))) return false;
    for (size_t r = 0; r < k2.rows(); ++r)
        if (!m1.annihilates(k2.row(r))) return false;
    return true;
}

// replace every F_{q^m} entry by its s*m polynomial-basis coordinates,
// producing s*m F_p rows per input row; kernels over F_p agree with the
// joint F_{q^m} orthogonality condition
inline MatrixFp expand_to_fp(std::span<const VectorQm> rows) {
    if (rows.empty()) throw std::invalid_argument("expand_to_fp: no rows");
    const Field& f = *rows[0].field;
    const size_t n = rows[0].size();
    for (const auto& r : rows) {
        if (!r.field->same_as(f)) throw std::invalid_argument("expand_to_fp: mixed field specs");
        if (r.size() != n) throw std::invalid_argument("expand_to_fp: ragged rows");
    }
    MatrixFp out(f.p(), rows.size() * f.sm(), n);
    size_t out_r = 0;
    for (const auto& row : rows) {
        for (uint32_t k = 0; k < f.sm(); ++k, ++out_r)
            for (size_t i = 0; i < n; ++i) {
                uint32_t d = f.coeff(row.vals[i], k);
                if (d) out.set(out_r, i, d);
            }
    }
    return out;
}

}  // namespace goppa
