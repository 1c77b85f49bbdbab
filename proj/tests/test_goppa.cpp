#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <goppa/goppa.hpp>

using namespace goppa;

namespace {

Support trace_support(const Field& f) {
    std::vector<uint32_t> idx;
    for (uint32_t i = 0; i < f.order(); ++i)
        if (f.trace_rel(i)) idx.push_back(i);
    return {&f, std::move(idx)};
}

// random support avoiding roots of g
Support random_support(const Field& f, const Polynomial& g, size_t n, std::mt19937_64& rng) {
    std::vector<uint32_t> pool;
    for (uint32_t i = 0; i < f.order(); ++i)
        if (g.eval_idx(i) != 0) pool.push_back(i);
    REQUIRE(pool.size() >= n);
    for (size_t i = pool.size(); i-- > 1;) std::swap(pool[i], pool[rng() % (i + 1)]);
    pool.resize(n);
    return {&f, std::move(pool)};
}

Polynomial random_squarefree(const Field& f, int64_t deg, std::mt19937_64& rng) {
    for (;;) {
        std::vector<uint32_t> c(deg + 1);
        for (auto& x : c) x = rng() % f.order();
        c[deg] = 1 + rng() % (f.order() - 1);
        Polynomial g(&f, std::move(c));
        if (is_squarefree(g)) return g;
    }
}

}  // namespace

TEST_CASE("trace code dimensions at the degenerate instances") {
    auto f8 = Field::make(2, 1, 3);
    GoppaCode c8(f8, trace_support(*f8), trace_polynomial(*f8));
    CHECK(c8.length() == 4);
    CHECK(c8.dim() == 0);

    auto f64 = Field::make(2, 2, 3);
    GoppaCode c64(f64, trace_support(*f64), trace_polynomial(*f64));
    CHECK(c64.length() == 48);
    CHECK(c64.dim() == 1);
}

TEST_CASE("full-column-rank supports force dimension zero") {
    auto f = Field::make(2, 1, 3);
    Polynomial g(&(*f), {0, 0, 0, 1});  // x^3, only root is zero
    Support s(f.get(), {1, 2, 3});      // n = t = 3
    GoppaCode c(f, s, g);
    CHECK(c.dim() == 0);
}

TEST_CASE("construction rejects supports meeting roots of g") {
    auto f = Field::make(2, 1, 3);
    Polynomial g = trace_polynomial(*f);  // vanishes on the trace kernel
    uint32_t root = 0;
    for (uint32_t i = 1; i < f->order(); ++i)
        if (f->trace_rel(i) == 0) {
            root = i;
            break;
        }
    REQUIRE(root != 0);
    CHECK_THROWS_AS(GoppaCode(f, Support(f.get(), {1, root}), g), std::invalid_argument);
    CHECK_THROWS_AS(GoppaCode(f, Support(f.get(), {1, 1}), g), std::invalid_argument);
}

TEST_CASE("syndrome oracle cross-validates the matrix construction") {
    auto f = Field::make(2, 2, 3);
    GoppaCode code(f, trace_support(*f), trace_polynomial(*f));
    SyndromeOracle oracle(*f, code.support(), code.gpoly());

    std::vector<uint8_t> zero(code.length(), 0);
    CHECK(oracle.is_codeword(zero));

    for (size_t r = 0; r < code.dim(); ++r) CHECK(oracle.is_codeword(code.kernel().row(r)));

    // a weight-one word cannot satisfy the congruence
    std::vector<uint8_t> w1(code.length(), 0);
    w1[3] = 1;
    CHECK_FALSE(oracle.is_codeword(w1));
    CHECK_FALSE(syndrome_is_zero(code, w1));

    // random words agree between the two membership routes
    std::mt19937_64 rng(41);
    for (int t = 0; t < 50; ++t) {
        std::vector<uint8_t> w(code.length());
        for (auto& x : w) x = rng() % 2;
        CHECK(code.in_code(w) == oracle.is_codeword(w));
    }
}

TEST_CASE("oracle equivalence on a ternary instance") {
    auto f = Field::make(3, 1, 3);
    GoppaCode code(f, trace_support(*f), trace_polynomial(*f));
    SyndromeOracle oracle(*f, code.support(), code.gpoly());
    for (size_t r = 0; r < code.dim(); ++r) CHECK(oracle.is_codeword(code.kernel().row(r)));
    std::mt19937_64 rng(43);
    for (int t = 0; t < 50; ++t) {
        std::vector<uint8_t> w(code.length());
        for (auto& x : w) x = rng() % 3;
        CHECK(code.in_code(w) == oracle.is_codeword(w));
    }
}

TEST_CASE("evaluation vectors") {
    auto f = Field::make(2, 1, 3);
    Support L = trace_support(*f);
    Polynomial g = trace_polynomial(*f);

    auto ones = eval_vector(*f, L, 0, g, 0);
    for (uint32_t v : ones.values.vals) CHECK(v == 1);

    // Tr is {1}-valued on L over F_2, so ev(1/g) is all ones too
    auto inv_g = eval_vector(*f, L, 0, g, 1);
    for (uint32_t v : inv_g.values.vals) CHECK(v == 1);

    auto id = eval_vector(*f, L, 1, g, 0);
    CHECK(id.values.vals == L.indices());

    // negative exponents need a zero-free support
    Support with_zero(f.get(), {0, 1, 2});
    CHECK_THROWS_AS(eval_vector_values(*f, with_zero, -1, g, 0), std::invalid_argument);
    // g vanishing on the support point is rejected
    uint32_t root = 0;
    for (uint32_t i = 1; i < f->order(); ++i)
        if (f->trace_rel(i) == 0) root = i;
    CHECK_THROWS_AS(eval_vector_values(*f, Support(f.get(), {root}), 0, g, 1),
                    std::invalid_argument);
}

TEST_CASE("defining parity rows live in the dual") {
    auto f = Field::make(2, 2, 3);
    GoppaCode code(f, trace_support(*f), trace_polynomial(*f));
    VectorQm zero{f.get(), std::vector<uint32_t>(code.length(), 0)};
    CHECK(code.dual_contains(zero));
    for (uint64_t j = 0; j < code.t(); ++j) {
        CHECK(code.dual_contains(code.eval_values(static_cast<int64_t>(j), 1)));
        CHECK(code.dual_contains_parity(code.eval_values(static_cast<int64_t>(j), 1)));
    }
}

TEST_CASE("kernel and parity dual-membership routes agree") {
    auto f = Field::make(2, 2, 3);
    GoppaCode code(f, trace_support(*f), trace_polynomial(*f));
    std::mt19937_64 rng(47);
    for (int t = 0; t < 30; ++t) {
        VectorQm v{f.get(), {}};
        for (size_t i = 0; i < code.length(); ++i) v.vals.push_back(rng() % f->order());
        CHECK(code.dual_contains(v) == code.dual_contains_parity(v));
    }
    for (int64_t j = 0; j < 30; ++j)
        CHECK(code.dual_contains(code.eval_values(j, 1)) ==
              code.dual_contains_parity(code.eval_values(j, 1)));
}

TEST_CASE("first beyond-degree power is dual at q = 8") {
    auto f = Field::make(2, 3, 3);
    GoppaCode code(f, trace_support(*f), trace_polynomial(*f));
    CHECK(code.dual_contains(code.eval_values(static_cast<int64_t>(code.t()), 1)));
}

TEST_CASE("componentwise p-powers") {
    auto f = Field::make(2, 2, 3);
    GoppaCode code(f, trace_support(*f), trace_polynomial(*f));
    VectorQm v = code.eval_values(3, 1);
    CHECK(pth_power_vector(v, 0) == v);

    VectorQm ones{f.get(), std::vector<uint32_t>(5, 1)};
    CHECK(pth_power_vector(ones, 1) == ones);

    // q-power of ev(X^j/g) is ev(X^(q j)/g) since g is F_q-valued on L
    for (int64_t j = 0; j < 8; ++j) {
        VectorQm lhs = pth_power_vector(code.eval_values(j, 1), f->s());
        VectorQm rhs = code.eval_values(j * static_cast<int64_t>(f->q()), 1);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("dual membership is closed under p-powers") {
    for (auto f : {Field::make(2, 2, 3), Field::make(3, 1, 3)}) {
        GoppaCode code(f, trace_support(*f), trace_polynomial(*f));
        std::mt19937_64 rng(53);
        for (int t = 0; t < 20; ++t) {
            // random F_p combination of defining parity rows, always dual
            VectorQm v{f.get(), std::vector<uint32_t>(code.length(), 0)};
            for (uint64_t j = 0; j < code.t(); ++j) {
                uint32_t c = rng() % f->p();
                if (!c) continue;
                VectorQm row = code.eval_values(static_cast<int64_t>(j), 1);
                for (size_t i = 0; i < v.vals.size(); ++i)
                    v.vals[i] = f->add(v.vals[i], f->mul(f->scalar(c), row.vals[i]));
            }
            REQUIRE(code.dual_contains(v));
            for (uint32_t k = 1; k <= 3; ++k) CHECK(code.dual_contains(pth_power_vector(v, k)));
        }
        // random vectors keep membership equivalent across p-powers
        std::mt19937_64 rng2(59);
        for (int t = 0; t < 20; ++t) {
            VectorQm v{f.get(), {}};
            for (size_t i = 0; i < code.length(); ++i) v.vals.push_back(rng2() % f->order());
            CHECK(code.dual_contains(v) == code.dual_contains(pth_power_vector(v, 1)));
        }
    }
}

TEST_CASE("square identity on trace polynomials and random squarefree g") {
    auto f8 = Field::make(2, 1, 3);
    CHECK(verify_square_identity(f8, trace_support(*f8), trace_polynomial(*f8)));
    auto f64 = Field::make(2, 2, 3);
    CHECK(verify_square_identity(f64, trace_support(*f64), trace_polynomial(*f64)));

    std::mt19937_64 rng(61);
    auto f = Field::make(2, 1, 6);
    for (int t = 0; t < 5; ++t) {
        // degree one is always squarefree
        Polynomial g(&(*f), {static_cast<uint32_t>(rng() % f->order()), 1});
        Support s = random_support(*f, g, 12, rng);
        CHECK(verify_square_identity(f, s, g));
    }
    Polynomial x2(&(*f), {0, 0, 1});
    CHECK_THROWS_AS(verify_square_identity(f, random_support(*f, x2, 8, rng), x2),
                    std::invalid_argument);
}

TEST_CASE("skhn identity") {
    // p = 2 reduces to the square identity
    auto f8 = Field::make(2, 1, 3);
    CHECK(verify_skhn_identity(f8, trace_support(*f8), trace_polynomial(*f8)));

    auto f27 = Field::make(3, 1, 3);
    CHECK(verify_skhn_identity(f27, trace_support(*f27), trace_polynomial(*f27)));

    std::mt19937_64 rng(67);
    auto f81 = Field::make(3, 1, 4);
    for (int t = 0; t < 3; ++t) {
        Polynomial g(&(*f81), {static_cast<uint32_t>(rng() % f81->order()), 1});
        Support s = random_support(*f81, g, 10, rng);
        CHECK(verify_skhn_identity(f81, s, g));
    }
}

TEST_CASE("construction equivalence on random instances") {
    std::mt19937_64 rng(71);
    auto f = Field::make(2, 1, 6);
    for (int t = 0; t < 5; ++t) {
        Polynomial g = random_squarefree(*f, 2 + rng() % 3, rng);
        Support s = random_support(*f, g, 14 + rng() % 8, rng);
        GoppaCode code(f, s, g);
        SyndromeOracle oracle(*f, s, g);
        for (size_t r = 0; r < code.dim(); ++r) CHECK(oracle.is_codeword(code.kernel().row(r)));
        for (int w = 0; w < 30; ++w) {
            std::vector<uint8_t> word(code.length());
            for (auto& x : word) x = rng() % 2;
            CHECK(code.in_code(word) == oracle.is_codeword(word));
        }
    }
}
