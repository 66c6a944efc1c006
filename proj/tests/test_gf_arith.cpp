#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "errors.hpp"
#include "gf2k.hpp"
#include "intpoly.hpp"
#include "poly.hpp"
#include "support.hpp"

using namespace g4;
using namespace g4::gf;

TEST_CASE("square roots of the small constants") {
    for (unsigned k = 1; k <= kMaxDegree; ++k) {
        const auto& f = FieldSpec::standard(k);
        CHECK(f.sqrt(0) == 0);
        CHECK(f.sqrt(1) == 1);
    }
}

TEST_CASE("square root of t in F4 is t + 1") {
    const auto& f4 = FieldSpec::standard(2);
    REQUIRE(f4.modulus() == 0b111);
    CHECK(field_sqrt(FieldElement(f4, 0b10)) == FieldElement(f4, 0b11));
}

TEST_CASE("multiplication agrees with shift-and-add reference") {
    for (unsigned k = 1; k <= 6; ++k) {
        const auto& f = FieldSpec::standard(k);
        const auto ref = support::field_of(f);
        for (uint32_t a = 0; a < f.size(); ++a)
            for (uint32_t b = 0; b < f.size(); ++b) REQUIRE(f.mul(a, b) == ref.mul(a, b));
    }
    support::Gen gen(11);
    for (unsigned k = 7; k <= kMaxDegree; ++k) {
        const auto& f = FieldSpec::standard(k);
        const auto ref = support::field_of(f);
        for (int i = 0; i < 2000; ++i) {
            const uint32_t a = gen.element(f), b = gen.element(f);
            REQUIRE(f.mul(a, b) == ref.mul(a, b));
            REQUIRE(f.mul(a, b) == slow_mul(a, b, f.modulus(), k));
        }
    }
}

TEST_CASE("square root and Frobenius exhaustively up to F256") {
    for (unsigned k = 1; k <= 8; ++k) {
        const auto& f = FieldSpec::standard(k);
        for (uint32_t x = 0; x < f.size(); ++x) {
            REQUIRE(f.sqr(f.sqrt(x)) == x);
            REQUIRE(f.sqrt(f.sqr(x)) == x);
        }
        for (uint32_t a = 0; a < f.size(); ++a)
            for (uint32_t b = 0; b < f.size(); ++b) REQUIRE(f.sqr(a ^ b) == (f.sqr(a) ^ f.sqr(b)));
    }
}

TEST_CASE("every nonzero element is invertible") {
    for (unsigned k = 1; k <= 10; ++k) {
        const auto& f = FieldSpec::standard(k);
        const auto ref = support::field_of(f);
        for (uint32_t a = 1; a < f.size(); ++a) {
            REQUIRE(f.mul(a, f.inv(a)) == 1);
            REQUIRE(f.inv(a) == ref.inv(a));
        }
    }
    CHECK_THROWS_AS(FieldSpec::standard(3).inv(0), DomainError);
}

TEST_CASE("trace is F2-linear and balanced") {
    for (unsigned k = 1; k <= 8; ++k) {
        const auto& f = FieldSpec::standard(k);
        const auto ref = support::field_of(f);
        uint32_t ones = 0;
        for (uint32_t a = 0; a < f.size(); ++a) {
            uint32_t t = 0, x = a;
            for (unsigned i = 0; i < k; ++i, x = ref.mul(x, x)) t ^= x;
            REQUIRE(t == f.trace(a));
            ones += f.trace(a);
        }
        CHECK(ones == f.size() / 2);
    }
}

TEST_CASE("embeddings are ring homomorphisms") {
    support::Gen gen(12);
    for (unsigned a = 1; a <= 8; ++a)
        for (unsigned b = a; b <= kMaxDegree; b += a) {
            const auto& e = standard_embedding(a, b);
            const auto& src = e.from();
            const auto& dst = e.to();
            CHECK(e.apply(1) == 1);
            for (int i = 0; i < 300; ++i) {
                const uint32_t x = gen.element(src), y = gen.element(src);
                REQUIRE(e.apply(src.mul(x, y)) == dst.mul(e.apply(x), e.apply(y)));
                REQUIRE(e.apply(x ^ y) == (e.apply(x) ^ e.apply(y)));
            }
        }
    CHECK_THROWS(standard_embedding(3, 8));
}

TEST_CASE("field elements serialize with a size tag") {
    const auto& f16 = FieldSpec::standard(4);
    const FieldElement x(f16, 9);
    CHECK(gf::to_string(x) == "F16:0x9");
    CHECK(parse_field_element("F16:0x9") == x);
    for (unsigned k = 1; k <= kMaxDegree; ++k) {
        const auto& f = FieldSpec::standard(k);
        const FieldElement y(f, f.size() - 1);
        CHECK(parse_field_element(gf::to_string(y)) == y);
    }
    CHECK_THROWS_AS(parse_field_element("F6:0x1"), ParseError);
    CHECK_THROWS_AS(parse_field_element("G16:0x1"), ParseError);
    CHECK_THROWS(FieldElement(f16, 16));
}

TEST_CASE("mixing fields is a checked error") {
    const FieldElement a(FieldSpec::standard(2), 1), b(FieldSpec::standard(4), 1);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("resultant small cases") {
    const auto& f2 = FieldSpec::standard(1);
    const PolyF2k x(f2, {0, 1}), x1(f2, {1, 1}), x2x(f2, {0, 1, 1});
    CHECK(poly_resultant(x, x1).bits() == 1);
    CHECK(poly_resultant(x2x, x).bits() == 0);
    const PolyF2k a(f2, {1, 1, 1}), b(f2, {1, 1, 0, 1});
    CHECK(poly_resultant(a, b).bits() == 1);
    CHECK(oracle::sylvester_resultant(support::std_field(1), a.raw(), b.raw()) == 1);
    // no common root in F64, which contains both splitting fields
    const auto f64 = support::std_field(6);
    for (uint32_t r = 0; r < 64; ++r) CHECK((oracle::eval(f64, a.raw(), r) != 0 || oracle::eval(f64, b.raw(), r) != 0));
    CHECK_THROWS_AS(poly_resultant(PolyF2k(f2), PolyF2k(f2)), DomainError);
}

TEST_CASE("resultant vanishes exactly when the gcd is nonconstant") {
    support::Gen gen(13);
    for (unsigned k : {1u, 2u, 4u, 8u}) {
        const auto& f = FieldSpec::standard(k);
        const auto ref = support::field_of(f);
        for (int i = 0; i < 400; ++i) {
            PolyF2k a(f, gen.poly(f, 10)), b(f, gen.poly(f, 10));
            if (i % 3 == 0) {  // force a shared factor now and then
                PolyF2k c(f, gen.poly(f, 3));
                if (c.degree() >= 1) {
                    a = a * c;
                    b = b * c;
                }
            }
            if (a.is_zero() || b.is_zero()) continue;
            const auto r = poly_resultant(a, b);
            CHECK((r.bits() == 0) == (gcd(a, b).degree() > 0));
            CHECK(r.bits() == oracle::sylvester_resultant(ref, a.raw(), b.raw()));
        }
    }
}

TEST_CASE("gcd, division and factorization") {
    support::Gen gen(14);
    for (unsigned k : {1u, 2u, 3u, 4u}) {
        const auto& f = FieldSpec::standard(k);
        for (int i = 0; i < 200; ++i) {
            PolyF2k a(f, gen.poly(f, 9)), b(f, gen.poly(f, 9));
            if (a.is_zero() || b.is_zero()) continue;
            const auto [quo, rem] = divmod(a, b);
            CHECK(quo * b + rem == a);
            CHECK(rem.degree() < b.degree());
            const auto g = gcd(a, b);
            CHECK(g.leading() == 1);
            CHECK((a % g).is_zero());
            CHECK((b % g).is_zero());

            PolyF2k prod(f, {a.leading()});
            for (const auto& [p, e] : factor(a)) {
                CHECK(p.leading() == 1);
                for (int j = 0; j < e; ++j) prod = prod * p;
            }
            CHECK(prod == a);

            std::vector<uint32_t> brute;
            for (uint32_t x = 0; x < f.size(); ++x)
                if (a.eval(x) == 0) brute.push_back(x);
            CHECK(roots_in_field(a) == brute);
        }
    }
}

TEST_CASE("polynomial derivative and square root") {
    const auto& f4 = FieldSpec::standard(2);
    const PolyF2k p(f4, {1, 2, 3, 1, 2});  // 1 + t x + (t+1) x^2 + x^3 + t x^4
    CHECK(p.derivative() == PolyF2k(f4, {2, 0, 1}));
    const PolyF2k sq = p * p;
    CHECK(sq.sqrt() == p);
    CHECK(PolyF2k::from_mask(f4, 0b1011) == PolyF2k(f4, {1, 1, 0, 1}));
}

TEST_CASE("integer polynomial products") {
    CHECK(intpoly_mul(IntPoly({1, 1}), IntPoly({-1, 1})) == IntPoly({-1, 0, 1}));
    const IntPoly p({16, 16, 8, 0, -4, 0, 2, 2, 1});
    CHECK(intpoly_mul(p, IntPoly::constant(1)) == p);
    const IntPoly h16({256, -64, 16, -4, 1});
    CHECK(intpoly_mul(h16, h16) == IntPoly({65536, -32768, 12288, -4096, 1280, -256, 48, -8, 1}));
    CHECK(h16.to_string() == "256,-64,16,-4,1");
    CHECK(IntPoly::parse("256,-64,16,-4,1") == h16);
    CHECK(IntPoly({-1, 0, 1}).pretty() == "t^2 - 1");
    CHECK_THROWS(IntPoly::parse("1,,2"));
}

TEST_CASE("integer overflow fails loudly") {
    const Int big = Int(1) << 100;
    CHECK_THROWS_AS(checked_mul(big, big), std::overflow_error);
    CHECK_THROWS_AS(checked_add(~(Int(1) << 127), 1), std::overflow_error);
    CHECK_THROWS_AS(checked_pow(2, 127), std::overflow_error);
    CHECK_THROWS_AS((IntPoly({big}) * IntPoly({big})), std::overflow_error);
    CHECK(checked_pow(2, 126) == Int(1) << 126);
    CHECK(int_to_string(-(Int(1) << 100)) == "-1267650600228229401496703205376");
    CHECK(parse_int("-1267650600228229401496703205376") == -(Int(1) << 100));
    CHECK_THROWS_AS(exact_div(7, 2), std::domain_error);
}
