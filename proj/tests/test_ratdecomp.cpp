#include "doctest.h"

#include "polylog/ratdecomp.hpp"

using namespace pla;

namespace {

// deterministic non-pole rational test points
Rat test_point(long i) {
    return make_rat(Int(2 * i + 3), Int(2 * i + 5)) + Rat(i % 7);
}

} // namespace

TEST_CASE("eval_R basics") {
    CHECK(eval_R(ConstructionId::LogDilog, 0, Rat(2)) == make_rat(Int(1), Int(2)));
    CHECK(eval_R(ConstructionId::LogDilog, 1, Rat(3)) == make_rat(Int(1), Int(3)));
    CHECK_THROWS_AS(eval_R(ConstructionId::LogDilog, 2, Rat(-1)), PoleEvaluationError);
}

TEST_CASE("well-poised symmetry R_n(t) = (-1)^n R_n(-t-n)") {
    for (long n = 0; n <= 6; ++n) {
        Rat t = make_rat(Int(7), Int(3));
        Rat lhs = eval_R(ConstructionId::WellPoised, n, t);
        Rat rhs = eval_R(ConstructionId::WellPoised, n, -t - n);
        if (n % 2 != 0) rhs = -rhs;
        CHECK(lhs == rhs);
    }
    // and the n=1 pointwise case R_1(3) = -R_1(-4)
    CHECK(eval_R(ConstructionId::WellPoised, 1, Rat(3)) ==
          -eval_R(ConstructionId::WellPoised, 1, Rat(-4)));
}

TEST_CASE("log-dilog decomposition, n=1 by hand") {
    auto pf = decompose(ConstructionId::LogDilog, 1);
    REQUIRE(pf.pole_order == 1);
    CHECK(pf.pole_coeffs[0][0] == 1);
    CHECK(pf.pole_coeffs[1][0] == -4);
    REQUIRE(pf.poly_part.size() == 1);
    CHECK(pf.poly_part[0] == 1);
}

TEST_CASE("residues match the closed form A_k = (-1)^k C(n,k) C(n+k,k)^2") {
    for (long n = 0; n <= 30; ++n) {
        auto pf = decompose(ConstructionId::LogDilog, n);
        for (long k = 0; k <= n; ++k) {
            Int expect = binom(n, k) * binom(n + k, k) * binom(n + k, k);
            if (k % 2 != 0) expect = -expect;
            CHECK(pf.pole_coeffs[static_cast<size_t>(k)][0] == Rat(expect));
        }
    }
}

TEST_CASE("reconstruction: decomposition equals direct evaluation") {
    for (auto c : {ConstructionId::LogDilog, ConstructionId::Trilog, ConstructionId::WellPoised}) {
        for (long n = 0; n <= 15; n += (n < 4 ? 1 : 3)) {
            auto pf = decompose(c, n);
            for (long i = 0; i < 10; ++i) {
                Rat t = test_point(i);
                CHECK(pf.eval(t) == eval_R(c, n, t));
            }
        }
    }
}

TEST_CASE("log-dilog decomposition: A_k integers, Dn*B_j integers, degree n-1") {
    for (long n = 0; n <= 30; ++n) {
        auto pf = decompose(ConstructionId::LogDilog, n);
        Rat Dn{lcm_upto(n)};
        for (auto& row : pf.pole_coeffs) CHECK(is_integer(row[0]));
        for (auto& bj : pf.poly_part) CHECK(is_integer(Dn * bj));
        CHECK(pf.poly_degree() == n - 1);
    }
}

TEST_CASE("derivative decomposition, n=1 by hand") {
    auto pf = decompose(ConstructionId::LogDilog, 1);
    auto d = derivative_decomposition(pf, 1);
    CHECK(d.pole_order == 2);
    CHECK(d.pole_coeffs[0][1] == 1);  // 1/t^2
    CHECK(d.pole_coeffs[1][1] == -4); // -4/(t+1)^2
    CHECK(d.pole_coeffs[0][0] == 0);
    CHECK(d.poly_part.empty());
}

TEST_CASE("trilog decomposition: Dn^2 * B~(t) integer-valued of degree n-2") {
    for (long n = 0; n <= 20; ++n) {
        auto d = derivative_decomposition(decompose(ConstructionId::LogDilog, n), 1);
        Rat Dn2{lcm_upto(n) * lcm_upto(n)};
        CHECK(d.poly_degree() == (n >= 2 ? n - 2 : -1));
        CHECK(is_integer_valued(d.poly_dense() * Dn2));
    }
}

TEST_CASE("derivative decompositions reconstruct -R' and R''/2") {
    for (auto c : {ConstructionId::LogDilog, ConstructionId::Trilog, ConstructionId::WellPoised}) {
        for (long n : {0L, 1L, 2L, 5L}) {
            auto pf = decompose(c, n);
            auto d1 = derivative_decomposition(pf, 1);
            auto d2 = derivative_decomposition(pf, 2);
            for (long i = 0; i < 5; ++i) {
                Rat t = test_point(i);
                auto jet = eval_R_jet(c, n, t);
                CHECK(pf.eval(t) == jet[0]);
                CHECK(d1.eval(t) == jet[1]);
                CHECK(d2.eval(t) == jet[2]);
            }
        }
    }
}

TEST_CASE("trilog scalings: Dn*D2n and Dn*D2n^2 derivative polynomial parts") {
    for (long n = 0; n <= 10; ++n) {
        auto pf = decompose(ConstructionId::Trilog, n);
        CHECK(pf.poly_degree() == 2 * n - 1);
        for (auto& row : pf.pole_coeffs) CHECK(is_integer(row[0]));
        Rat Dn{lcm_upto(n)}, D2n{lcm_upto(2 * n)};
        auto d1 = derivative_decomposition(pf, 1);
        CHECK(is_integer_valued(d1.poly_dense() * (Dn * D2n)));
        auto d2 = derivative_decomposition(pf, 2);
        CHECK(is_integer_valued(d2.poly_dense() * (Dn * D2n * D2n)));
    }
}

TEST_CASE("well-poised Laurent data: symmetry and scaled integrality") {
    for (long n = 0; n <= 15; ++n) {
        auto pf = decompose(ConstructionId::WellPoised, n);
        REQUIRE(pf.pole_order == 3);
        Rat Dn{lcm_upto(n)};
        for (long k = 0; k <= n; ++k) {
            const auto& row = pf.pole_coeffs[static_cast<size_t>(k)];
            const auto& mirror = pf.pole_coeffs[static_cast<size_t>(n - k)];
            int sign = ((k % 2) == ((n - k) % 2)) ? 1 : -1;
            // (-1)^k A_k = -(-1)^{n-k} A_{n-k}, same for A_k''
            CHECK(row[2] == -Rat(sign) * mirror[2]);
            CHECK(row[0] == -Rat(sign) * mirror[0]);
            CHECK(is_integer(2 * row[2]));
            CHECK(is_integer(2 * Dn * row[1]));
            CHECK(is_integer(2 * Dn * Dn * row[0]));
        }
        CHECK(is_integer_valued(pf.poly_dense() * (2 * Dn * Dn * Dn)));
        // degree n-2 (numerator degree 4n+1 vs denominator 3n+3)
        CHECK(pf.poly_degree() == (n >= 2 ? n - 2 : -1));
    }
}

TEST_CASE("well-poised n=1 sample coefficients") {
    auto pf = decompose(ConstructionId::WellPoised, 1);
    CHECK(pf.pole_coeffs[0][2] == 2);
    CHECK(pf.pole_coeffs[1][2] == 2);
    CHECK(pf.pole_coeffs[0][1] == -4);
    CHECK(pf.pole_coeffs[1][1] == 4);
    CHECK(pf.pole_coeffs[0][0] == make_rat(Int(1), Int(2)));
    CHECK(pf.pole_coeffs[1][0] == make_rat(Int(1), Int(2)));
}
