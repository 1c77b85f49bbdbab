// Text serialization of parity-check matrices and the optional
// best-known-codes CSV snapshot.
//
// Matrix format: a header line "n rows p" (column count, row count,
// modulus), then one digit row per line with the most significant column
// (index n-1) first. Digits use 0-9a-z, so p <= 31 round-trips.

#pragma once

#include <cctype>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace goppa {

inline char digit_char(uint8_t v) { return v < 10 ? char('0' + v) : char('a' + v - 10); }

inline int digit_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    return -1;
}

inline void write_matrix_text(std::ostream& os, const MatrixFp& m) {
    if (m.p() > 31) throw std::invalid_argument("matrix export: p too large for digit rows");
    os << m.cols() << ' ' << m.rows() << ' ' << m.p() << '\n';
    for (size_t r = 0; r < m.rows(); ++r) {
        std::string line(m.cols(), '0');
        for (size_t c = 0; c < m.cols(); ++c)
            line[m.cols() - 1 - c] = digit_char(m.get(r, c));
        os << line << '\n';
    }
}

inline MatrixFp read_matrix_text(std::istream& is) {
    size_t cols = 0, rows = 0;
    uint32_t p = 0;
    if (!(is >> cols >> rows >> p)) throw std::invalid_argument("matrix import: bad header");
    MatrixFp m(p, rows, cols);
    std::string line;
    std::getline(is, line);  // rest of header line
    for (size_t r = 0; r < rows; ++r) {
        if (!std::getline(is, line)) throw std::invalid_argument("matrix import: truncated");
        if (line.size() != cols) throw std::invalid_argument("matrix import: bad row length");
        for (size_t c = 0; c < cols; ++c) {
            int v = digit_value(line[cols - 1 - c]);
            if (v < 0 || static_cast<uint32_t>(v) >= p)
                throw std::invalid_argument("matrix import: bad digit");
            if (v) m.set(r, c, static_cast<uint32_t>(v));
        }
    }
    return m;
}

// best-known-codes snapshot: CSV lines "n,k,d"; lines not starting with a
// digit are skipped as headers or comments
struct BkcRecord {
    uint64_t n = 0, k = 0, d = 0;
};

class BkcTable {
  public:
    BkcTable() = default;

    static BkcTable parse(std::istream& is) {
        BkcTable t;
        std::string line;
        while (std::getline(is, line)) {
            if (line.empty() || !isdigit(static_cast<unsigned char>(line[0]))) continue;
            std::istringstream ss(line);
            BkcRecord rec;
            char comma;
            if (ss >> rec.n >> comma >> rec.k >> comma >> rec.d) t.records_.push_back(rec);
        }
        return t;
    }

    std::optional<BkcRecord> lookup(uint64_t n, uint64_t k) const {
        for (const auto& r : records_)
            if (r.n == n && r.k == k) return r;
        return std::nullopt;
    }

    size_t size() const { return records_.size(); }

  private:
    std::vector<BkcRecord> records_;
};

}  // namespace goppa
