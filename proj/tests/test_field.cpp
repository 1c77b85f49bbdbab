#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <goppa/field.hpp>

using namespace goppa;

TEST_CASE("default moduli are the canonical minimal irreducibles") {
    // low-degree-first coefficient vectors
    CHECK(Field::make(2, 1, 3)->modulus() == std::vector<uint32_t>{1, 1, 0, 1});   // x^3+x+1
    CHECK(Field::make(2, 1, 4)->modulus() == std::vector<uint32_t>{1, 1, 0, 0, 1});
    CHECK(Field::make(2, 3, 3)->modulus() ==
          std::vector<uint32_t>{1, 1, 0, 0, 0, 0, 0, 0, 0, 1});  // x^9+x+1
    CHECK(Field::make(3, 1, 3)->modulus() == std::vector<uint32_t>{1, 2, 0, 1});
}

TEST_CASE("construction rejects invalid parameters") {
    CHECK_THROWS_AS(Field::make(4, 1, 3), std::invalid_argument);   // p not prime
    CHECK_THROWS_AS(Field::make(2, 0, 3), std::invalid_argument);   // s < 1
    CHECK_THROWS_AS(Field::make(2, 1, 1), std::invalid_argument);   // m < 2
    // x^3 + x^2 + x + 1 = (x+1)(x^2+1) is reducible
    CHECK_THROWS_AS(Field::make(2, 1, 3, {1, 1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(2, 1, 3, {1, 1, 1}), std::invalid_argument);  // wrong degree
    CHECK_THROWS_AS(Field::make(2, 1, 3, {1, 1, 0, 0}), std::invalid_argument);  // not monic
}

TEST_CASE("F8 arithmetic matches the hand-reduced table") {
    auto f = Field::make(2, 1, 3);
    FieldElement gamma = f->gen_x();
    // gamma^3 = gamma + 1 under x^3 + x + 1
    CHECK(gamma.pow(3) == f->element(3));
    CHECK(gamma.pow(3) == gamma + f->one());
    // additive identity and multiplicative inverse
    for (uint32_t i = 0; i < f->order(); ++i) {
        FieldElement a = f->element(i);
        CHECK(a + f->zero() == a);
        if (!a.is_zero()) CHECK(a * a.inv() == f->one());
    }
}

TEST_CASE("an explicit modulus changes the coordinates") {
    auto f = Field::make(2, 1, 3, {1, 0, 1, 1});  // x^3 + x^2 + 1
    FieldElement gamma = f->gen_x();
    CHECK(gamma.pow(3) == f->element(0b101));  // gamma^3 = gamma^2 + 1
    CHECK_THROWS_AS(f->element(2) + Field::make(2, 1, 3)->element(2), std::invalid_argument);
}

TEST_CASE("division and inversion of zero raise") {
    auto f = Field::make(2, 1, 3);
    CHECK_THROWS_AS(f->inv(0), std::domain_error);
    CHECK_THROWS_AS(f->div(3, 0), std::domain_error);
    CHECK_THROWS_AS(f->pow(0, -1), std::domain_error);
    CHECK(f->pow(0, 0) == 1);
    CHECK(f->pow(0, 5) == 0);
}

TEST_CASE("frobenius fixes the orbit and squares in characteristic two") {
    auto f = Field::make(2, 1, 3);
    CHECK(f->frobenius_q(0, 3) == 0);
    FieldElement gamma = f->gen_x();
    CHECK(gamma.frobenius_q(1) == gamma * gamma);
    for (uint32_t i = 0; i < f->order(); ++i)
        CHECK(f->frobenius_q(i, f->m()) == i);
    auto f64 = Field::make(2, 2, 3);
    for (uint32_t i = 0; i < f64->order(); ++i)
        CHECK(f64->frobenius_q(i, f64->m()) == i);
}

TEST_CASE("frobenius is a field automorphism") {
    auto f = Field::make(2, 3, 3);
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        uint32_t a = rng() % f->order(), b = rng() % f->order();
        CHECK(f->frobenius_q(f->mul(a, b)) == f->mul(f->frobenius_q(a), f->frobenius_q(b)));
        CHECK(f->frobenius_q(f->add(a, b)) == f->add(f->frobenius_q(a), f->frobenius_q(b)));
    }
}

TEST_CASE("trace values and kernel size") {
    auto f = Field::make(2, 1, 3);
    CHECK(f->trace_rel(0) == 0);
    CHECK(f->trace_rel(1) == 1);  // m = 3 ones over F_2
    CHECK(f->trace_rel(f->gen_x().idx()) == 0);  // gamma + gamma^2 + gamma^4 = 0

    for (auto spec : {std::pair{2u, 1u}, {2u, 2u}, {2u, 3u}, {3u, 1u}}) {
        auto fld = Field::make(spec.first, spec.second, 3);
        uint64_t kernel = 0;
        for (uint64_t i = 0; i < fld->order(); ++i) {
            uint32_t t = fld->trace_rel(static_cast<uint32_t>(i));
            CHECK(fld->frobenius_q(t) == t);  // trace lands in F_q
            if (t == 0) ++kernel;
        }
        CHECK(kernel == fld->order() / fld->q());  // q^(m-1)
    }
}

TEST_CASE("trace is additive") {
    for (auto fld : {Field::make(2, 1, 3), Field::make(2, 2, 3), Field::make(2, 3, 3)}) {
        if (fld->order() <= 64) {
            for (uint32_t a = 0; a < fld->order(); ++a)
                for (uint32_t b = 0; b < fld->order(); ++b)
                    CHECK(fld->trace_rel(fld->add(a, b)) ==
                          fld->add(fld->trace_rel(a), fld->trace_rel(b)));
        } else {
            std::mt19937_64 rng(11);
            for (int t = 0; t < 500; ++t) {
                uint32_t a = rng() % fld->order(), b = rng() % fld->order();
                CHECK(fld->trace_rel(fld->add(a, b)) ==
                      fld->add(fld->trace_rel(a), fld->trace_rel(b)));
            }
        }
    }
}

TEST_CASE("pow agrees with repeated multiplication") {
    auto f = Field::make(3, 1, 3);
    std::mt19937_64 rng(13);
    for (int t = 0; t < 20; ++t) {
        uint32_t a = rng() % f->order();
        uint32_t acc = 1;
        for (int64_t e = 0; e <= 50; ++e) {
            CHECK(f->pow(a, e) == acc);
            acc = f->mul(acc, a);
        }
    }
    // negative exponents invert
    for (int t = 0; t < 20; ++t) {
        uint32_t a = 1 + rng() % (f->order() - 1);
        for (int64_t e = 1; e <= 10; ++e) CHECK(f->pow(a, -e) == f->inv(f->pow(a, e)));
    }
}

TEST_CASE("enumeration follows the canonical coordinate order") {
    auto f4 = Field::make(2, 1, 2);
    auto all = enumerate_elements(*f4);
    REQUIRE(all.size() == 4);
    CHECK(all[0] == f4->zero());
    CHECK(all[1] == f4->one());
    CHECK(enumerate_elements(*Field::make(2, 1, 3)).size() == 8);
    CHECK(enumerate_elements(*Field::make(2, 3, 3)).size() == 512);
    // coordinates round-trip through the packed index
    auto f = Field::make(3, 1, 3);
    for (uint32_t i = 0; i < f->order(); ++i) {
        auto c = f->coeffs(i);
        CHECK(f->from_coeffs(c) == i);
        for (uint32_t d : c) CHECK(d < 3);
    }
    CHECK(f->coeffs(1) == std::vector<uint32_t>{1, 0, 0});
}

TEST_CASE("subfield membership via the q-power fixed points") {
    auto f = Field::make(2, 2, 3);  // F_64 over F_4
    uint64_t fixed = 0;
    for (uint32_t i = 0; i < f->order(); ++i)
        if (f->in_subfield_q(i)) ++fixed;
    CHECK(fixed == f->q());
}
