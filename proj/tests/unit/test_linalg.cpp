#include <doctest.h>

#include <random>

#include "pba/idempotents.hpp"
#include "pba/poly.hpp"

using namespace pba;

namespace {

Matrix<Gfp> gfp_matrix(std::uint32_t p, std::vector<std::vector<int>> rows) {
    Matrix<Gfp> m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()), p);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = Gfp(rows[i][j], p);
    return m;
}

Poly<Gfp> gfp_poly(std::uint32_t p, std::vector<int> coeffs) {
    std::vector<Gfp> c;
    for (int x : coeffs) c.emplace_back(x, p);
    return Poly<Gfp>(p, std::move(c));
}

} // namespace

TEST_CASE("rref basics") {
    auto id3 = Matrix<Gfp>::identity(3, 5);
    auto r = id3.rref();
    CHECK(r.rank == 3);
    CHECK(r.pivots == std::vector<int>{0, 1, 2});

    Matrix<Gfp> zero(2, 5, 7);
    CHECK(zero.rref().rank == 0);

    // second row is 3 times the first over GF(5)
    auto m = gfp_matrix(5, {{1, 2}, {3, 6}});
    auto rr = m.rref();
    CHECK(rr.rank == 1);

    // idempotence
    CHECK(rr.reduced.rref().reduced == rr.reduced);
}

TEST_CASE("rref idempotence on random matrices") {
    std::mt19937_64 rng(0);
    for (int trial = 0; trial < 25; ++trial) {
        Matrix<Gfp> m(4, 6, 7);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 6; ++j) m.at(i, j) = Gfp(static_cast<std::int64_t>(rng() % 7), 7);
        auto r1 = m.rref();
        CHECK(r1.reduced.rref().reduced == r1.reduced);
    }
}

TEST_CASE("kernel") {
    auto id3 = Matrix<Gfp>::identity(3, 5);
    CHECK(id3.kernel().empty());

    Matrix<Gfp> zero(2, 3, 5);
    CHECK(zero.kernel().size() == 3);

    auto m = gfp_matrix(5, {{1, 2}, {3, 6}});
    auto ker = m.kernel();
    REQUIRE(ker.size() == 1);
    // m * v = 0 and rank-nullity
    for (const auto& v : ker) {
        auto mv = m.apply(v);
        for (const auto& x : mv) CHECK(x.is_zero());
    }
    CHECK(static_cast<int>(ker.size()) + m.rank() == m.cols());
}

TEST_CASE("minimal polynomial") {
    auto id4 = Matrix<Gfp>::identity(4, 7);
    auto mu = minimal_polynomial(id4);
    CHECK(mu == gfp_poly(7, {-1, 1})); // x - 1

    auto nil = gfp_matrix(7, {{0, 1}, {0, 0}});
    CHECK(minimal_polynomial(nil) == gfp_poly(7, {0, 0, 1})); // x^2

    auto diag = gfp_matrix(7, {{1, 0}, {0, 2}});
    CHECK(minimal_polynomial(diag) == gfp_poly(7, {2, -3, 1})); // (x-1)(x-2)
}

TEST_CASE("polynomial factorization over GF(p)") {
    // x^2 - 1 = (x - 1)(x + 1) over GF(5)
    auto f = gfp_poly(5, {-1, 0, 1});
    auto fac = factor_squarefree_gfp(f);
    REQUIRE(fac.size() == 2);
    Poly<Gfp> prod = Poly<Gfp>::one(5);
    for (auto& [q, m] : fac) {
        CHECK(q.degree() == 1);
        CHECK(m == 1);
        for (int e = 0; e < m; ++e) prod = prod * q;
    }
    CHECK(prod == f);

    // x stays x
    auto x = gfp_poly(3, {0, 1});
    auto fx = factor_squarefree_gfp(x);
    REQUIRE(fx.size() == 1);
    CHECK(fx[0].first == x);

    // x^2 + 1 irreducible over GF(3)
    auto g = gfp_poly(3, {1, 0, 1});
    auto fg = factor_squarefree_gfp(g);
    REQUIRE(fg.size() == 1);
    CHECK(fg[0].first.degree() == 2);
}

TEST_CASE("factorization with multiplicities reassembles") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        std::uint32_t p = (trial % 2) ? 3 : 5;
        int deg = 1 + static_cast<int>(rng() % 6);
        std::vector<Gfp> c;
        for (int i = 0; i < deg; ++i) c.emplace_back(static_cast<std::int64_t>(rng() % p), p);
        c.emplace_back(1, p);
        Poly<Gfp> f(p, c);
        auto fac = factor_squarefree_gfp(f);
        Poly<Gfp> prod = Poly<Gfp>::one(p);
        for (auto& [q, m] : fac)
            for (int e = 0; e < m; ++e) prod = prod * q;
        CHECK(prod == f.monic());
    }
}

namespace {

CommutativeAlgebra product_field_algebra(std::uint32_t p, int k) {
    // GF(p) x ... x GF(p), coordinatewise product
    CommutativeAlgebra alg;
    alg.p = p;
    alg.dim = k;
    for (int i = 0; i < k; ++i) {
        Matrix<Gfp> m(k, k, p);
        m.at(i, i) = Gfp(1, p);
        alg.mult.push_back(m);
    }
    alg.one.assign(k, Gfp(1, p));
    return alg;
}

} // namespace

TEST_CASE("split_idempotents on product fields") {
    auto alg = product_field_algebra(5, 1);
    auto idems = split_idempotents(alg);
    REQUIRE(idems.size() == 1);
    CHECK(idems[0] == alg.one);

    auto alg2 = product_field_algebra(5, 2);
    auto idems2 = split_idempotents(alg2);
    REQUIRE(idems2.size() == 2);
}

TEST_CASE("split_idempotents on GF(3)[x]/(x^2 - x)") {
    // basis 1, x with x^2 = x
    CommutativeAlgebra alg;
    alg.p = 3;
    alg.dim = 2;
    Matrix<Gfp> m0 = Matrix<Gfp>::identity(2, 3); // multiplication by 1
    Matrix<Gfp> m1(2, 2, 3);                      // multiplication by x: 1 -> x, x -> x
    m1.at(1, 0) = Gfp(1, 3);
    m1.at(1, 1) = Gfp(1, 3);
    alg.mult = {m0, m1};
    alg.one = {Gfp(1, 3), Gfp(0, 3)};
    auto idems = split_idempotents(alg);
    REQUIRE(idems.size() == 2);
    // the two idempotents are x and 1 - x
    std::vector<Gfp> x{Gfp(0, 3), Gfp(1, 3)}, onemx{Gfp(1, 3), Gfp(2, 3)};
    bool seen_x = false, seen_omx = false;
    for (auto& e : idems) {
        if (e == x) seen_x = true;
        if (e == onemx) seen_omx = true;
    }
    CHECK(seen_x);
    CHECK(seen_omx);
}

TEST_CASE("split_idempotents with a radical") {
    // GF(3)[x]/(x^2): basis 1, x; x^2 = 0; only idempotent is 1
    CommutativeAlgebra alg;
    alg.p = 3;
    alg.dim = 2;
    Matrix<Gfp> m0 = Matrix<Gfp>::identity(2, 3);
    Matrix<Gfp> m1(2, 2, 3);
    m1.at(1, 0) = Gfp(1, 3);
    alg.mult = {m0, m1};
    alg.one = {Gfp(1, 3), Gfp(0, 3)};
    auto idems = split_idempotents(alg);
    REQUIRE(idems.size() == 1);
    CHECK(idems[0] == alg.one);
}

namespace {

/// the ideal cut out by an idempotent, as an algebra with identity e
CommutativeAlgebra corner_algebra(const CommutativeAlgebra& alg, const std::vector<Gfp>& e) {
    const std::uint32_t p = alg.p;
    const int n = alg.dim;
    Matrix<Gfp> mult_e(n, n, p);
    for (int j = 0; j < n; ++j) {
        std::vector<Gfp> ej(n, Gfp(0, p));
        ej[j] = Gfp(1, p);
        auto w = alg.multiply(e, ej);
        for (int i = 0; i < n; ++i) mult_e.at(i, j) = w[i];
    }
    auto rr = mult_e.rref();
    std::vector<std::vector<Gfp>> basis;
    for (int pc : rr.pivots) {
        std::vector<Gfp> col(n, Gfp(0, p));
        for (int i = 0; i < n; ++i) col[i] = mult_e.at(i, pc);
        basis.push_back(col);
    }
    const int k = static_cast<int>(basis.size());
    Matrix<Gfp> bmat(n, k, p);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i) bmat.at(i, j) = basis[j][i];
    LinSolver<Gfp> solver(bmat);
    CommutativeAlgebra sub;
    sub.p = p;
    sub.dim = k;
    for (int i = 0; i < k; ++i) {
        Matrix<Gfp> mi(k, k, p);
        for (int j = 0; j < k; ++j) {
            auto coords = solver.solve(alg.multiply(basis[i], basis[j]));
            REQUIRE(coords.has_value());
            for (int r = 0; r < k; ++r) mi.at(r, j) = (*coords)[r];
        }
        sub.mult.push_back(mi);
    }
    auto ecoords = solver.solve(e);
    REQUIRE(ecoords.has_value());
    sub.one = *ecoords;
    return sub;
}

} // namespace

TEST_CASE("split idempotents are primitive: recursing finds a single output") {
    // product of three fields, possibly with radical mixed in elsewhere
    auto alg = product_field_algebra(3, 3);
    auto idems = split_idempotents(alg);
    REQUIRE(idems.size() == 3);
    for (const auto& e : idems) {
        auto sub = corner_algebra(alg, e);
        auto inner = split_idempotents(sub);
        CHECK(inner.size() == 1);
    }
}

TEST_CASE("split_idempotents rejects non-commutative input") {
    // 2x2 upper triangular matrices are not commutative: basis E11, E12, E22
    CommutativeAlgebra alg;
    alg.p = 3;
    alg.dim = 3;
    auto make = [&](std::vector<std::vector<int>> rows) { return gfp_matrix(3, rows); };
    // left multiplication matrices in the basis (E11, E12, E22)
    alg.mult = {make({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}),
                make({{0, 0, 0}, {0, 0, 1}, {0, 0, 0}}),
                make({{0, 0, 0}, {0, 0, 0}, {0, 0, 1}})};
    alg.one = {Gfp(1, 3), Gfp(0, 3), Gfp(1, 3)};
    CHECK_THROWS_AS(split_idempotents(alg), std::invalid_argument);
}

TEST_CASE("rationals behave") {
    Matrix<Rat> m(2, 2, RatTag{});
    m.at(0, 0) = Rat(1, 2);
    m.at(0, 1) = Rat(1, 3);
    m.at(1, 0) = Rat(1);
    m.at(1, 1) = Rat(2, 3);
    CHECK(m.rank() == 1); // second row = 2 * first
    auto ker = m.kernel();
    REQUIRE(ker.size() == 1);
}

TEST_CASE("gfp usage errors") {
    CHECK_THROWS_AS(Gfp(1, 3) + Gfp(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(Gfp(0, 5).inv(), std::domain_error);
    CHECK(is_odd_prime(3));
    CHECK(is_odd_prime(2147483647)); // 2^31 - 1
    CHECK(!is_odd_prime(2));
    CHECK(!is_odd_prime(9));
}
