#include <doctest.h>

#include <random>
#include <set>

#include "pba/diagram.hpp"
#include "pba/super_oracle.hpp"

using namespace pba;

namespace {

Diagram D(int r, int s, std::vector<std::pair<int, int>> pairs) { return Diagram(r, s, std::move(pairs)); }

Diagram random_diagram(int r, int s, std::mt19937_64& rng) {
    auto all = enumerate_diagrams(r, s);
    return all[rng() % all.size()];
}

} // namespace

TEST_CASE("diagram basics") {
    auto id3 = Diagram::identity(3);
    CHECK(id3.prop_count() == 3);
    CHECK(id3.is_permutation());
    CHECK(id3.cups().empty());
    CHECK(id3.caps().empty());

    auto e = e_generator(2, 1);
    CHECK(e.cups() == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(e.caps() == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(e.prop_count() == 0);

    CHECK(enumerate_diagrams(3, 3).size() == 15);
    CHECK(enumerate_diagrams(2, 2).size() == 3);
    CHECK(enumerate_noncrossing(3, 1).size() == 3);
    CHECK(enumerate_noncrossing(2, 0).size() == 1);
    CHECK(enumerate_noncrossing(4, 2).size() == 6);
}

TEST_CASE("standard marking") {
    // permutation diagrams carry no markings
    CHECK(standard_marking(s_generator(3, 1)).empty());

    // a single cup gets one diamond
    auto cup = cup_diagram();
    auto mk = standard_marking(cup);
    REQUIRE(mk.size() == 1);
    CHECK(mk[0].marker == Marker::Diamond);

    // the (6,8) example: one cup, two caps; the right cap is the larger one
    auto d = D(6, 8,
               {{0, 8}, {1, 9}, {6, 7}, {2, 3}, {4, 11}, {5, 10}, {12, 13}});
    auto marks = standard_marking(d);
    REQUIRE(marks.size() == 3);
    CHECK(marks[0].marker == Marker::Diamond);
    CHECK(marks[0].edge == std::pair<int, int>{2, 3});
    CHECK(marks[1].marker == Marker::RightArrow);
    CHECK(marks[1].edge == std::pair<int, int>{12, 13}); // rightmost cap first
    CHECK(marks[2].marker == Marker::RightArrow);
    CHECK(marks[2].edge == std::pair<int, int>{6, 7});
}

TEST_CASE("composition: crossings multiply like permutations") {
    auto x = crossing_diagram();
    auto xx = compose_signed(x, x);
    REQUIRE(!xx.zero);
    CHECK(xx.sign == 1);
    CHECK(xx.d == Diagram::identity(2));
}

TEST_CASE("composition: loops vanish") {
    auto e = e_generator(2, 1);
    CHECK(compose_signed(e, e).zero);
    // size mismatch is the distinguished zero as well
    CHECK(compose_signed(cup_diagram(), cup_diagram()).zero);
}

TEST_CASE("corner idempotent squares to itself with a plus sign") {
    for (int n = 3; n <= 8; ++n) {
        auto eps = eps_diagram(n);
        auto sq = compose_signed(eps, eps);
        REQUIRE(!sq.zero);
        CHECK(sq.d == eps);
        CHECK(sq.sign == 1);
    }
}

TEST_CASE("connecting diagrams") {
    for (int n = 3; n <= 8; ++n) {
        auto f = f_diagram(n);
        auto g = g_diagram(n);
        auto fg = compose_signed(f, g);
        REQUIRE(!fg.zero);
        CHECK(fg.d == Diagram::identity(n - 2));
        CHECK(fg.sign == 1);
        auto gf = compose_signed(g, f);
        REQUIRE(!gf.zero);
        CHECK(gf.d == eps_diagram(n));
        CHECK(gf.sign == 1);
    }
}

TEST_CASE("associativity, exhaustive at three strands") {
    auto all = enumerate_diagrams(3, 3);
    for (const auto& a : all)
        for (const auto& b : all)
            for (const auto& c : all) {
                auto ab = compose_signed(a, b);
                auto bc = compose_signed(b, c);
                SignedDiagram left = ab.zero ? SignedDiagram::make_zero() : compose_signed(ab.d, c);
                if (!left.zero && ab.sign < 0) left.sign = -left.sign;
                SignedDiagram right = bc.zero ? SignedDiagram::make_zero() : compose_signed(a, bc.d);
                if (!right.zero && bc.sign < 0) right.sign = -right.sign;
                CHECK(left.zero == right.zero);
                if (!left.zero) {
                    CHECK(left.sign == right.sign);
                    CHECK(left.d == right.d);
                }
            }
}

TEST_CASE("associativity, sampled at four and five strands") {
    std::mt19937_64 rng(0);
    for (int n : {4, 5}) {
        for (int trial = 0; trial < 10000; ++trial) {
            auto a = random_diagram(n, n, rng);
            auto b = random_diagram(n, n, rng);
            auto c = random_diagram(n, n, rng);
            auto ab = compose_signed(a, b);
            auto bc = compose_signed(b, c);
            SignedDiagram left = ab.zero ? SignedDiagram::make_zero() : compose_signed(ab.d, c);
            if (!left.zero && ab.sign < 0) left.sign = -left.sign;
            SignedDiagram right = bc.zero ? SignedDiagram::make_zero() : compose_signed(a, bc.d);
            if (!right.zero && bc.sign < 0) right.sign = -right.sign;
            REQUIRE(left.zero == right.zero);
            if (!left.zero) {
                REQUIRE(left.sign == right.sign);
                REQUIRE(left.d == right.d);
            }
        }
    }
}

TEST_CASE("the graded tensor semantics agrees with the marking rule") {
    // exhaustive over all square pairs on up to three strands
    for (int n = 1; n <= 3; ++n) {
        auto all = enumerate_diagrams(n, n);
        for (const auto& a : all)
            for (const auto& b : all) {
                auto lhs = compose_signed(a, b);
                auto rhs = compose_via_layers(a, b);
                REQUIRE(lhs.zero == rhs.zero);
                if (!lhs.zero) {
                    REQUIRE(lhs.d == rhs.d);
                    REQUIRE(lhs.sign == rhs.sign);
                }
            }
    }
    // exhaustive over small rectangular shapes
    for (int r = 0; r <= 3; ++r)
        for (int s = 0; s <= 3; ++s)
            for (int t = 0; t <= 3; ++t) {
                if ((r + s) % 2 || (s + t) % 2) continue;
                for (const auto& a : enumerate_diagrams(r, s))
                    for (const auto& b : enumerate_diagrams(s, t)) {
                        auto lhs = compose_signed(a, b);
                        auto rhs = compose_via_layers(a, b);
                        REQUIRE(lhs.zero == rhs.zero);
                        if (!lhs.zero) {
                            REQUIRE(lhs.d == rhs.d);
                            REQUIRE(lhs.sign == rhs.sign);
                        }
                    }
            }
}

TEST_CASE("the graded tensor semantics agrees on random four-strand pairs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10000; ++trial) {
        auto a = random_diagram(4, 4, rng);
        auto b = random_diagram(4, 4, rng);
        auto lhs = compose_signed(a, b);
        auto rhs = compose_via_layers(a, b);
        REQUIRE(lhs.zero == rhs.zero);
        if (!lhs.zero) {
            REQUIRE(lhs.d == rhs.d);
            REQUIRE(lhs.sign == rhs.sign);
        }
    }
}

TEST_CASE("tensor product") {
    auto i1 = Diagram::identity(1);
    auto ii = tensor_signed(i1, i1);
    REQUIRE(!ii.zero);
    CHECK(ii.d == Diagram::identity(2));
    CHECK(ii.sign == 1);

    auto icup = tensor_signed(i1, cup_diagram());
    REQUIRE(!icup.zero);
    CHECK(icup.d == D(3, 1, {{1, 2}, {0, 3}}));

    auto capcap = tensor_signed(cap_diagram(), cap_diagram());
    REQUIRE(!capcap.zero);
    CHECK(capcap.d == D(0, 4, {{0, 1}, {2, 3}}));
}

TEST_CASE("anti-automorphism on generators") {
    auto idp = phi(Diagram::identity(2));
    CHECK(idp.sign == 1);
    CHECK(idp.d == Diagram::identity(2));

    auto xp = phi(crossing_diagram());
    CHECK(xp.sign == -1);
    CHECK(xp.d == crossing_diagram());

    auto capp = phi(cap_diagram());
    CHECK(capp.sign == 1);
    CHECK(capp.d == cup_diagram());

    auto cupp = phi(cup_diagram());
    CHECK(cupp.sign == -1);
    CHECK(cupp.d == cap_diagram());
}

TEST_CASE("anti-automorphism on permutations is the signed inverse") {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& w : all_perms(n)) {
            auto d = Diagram::from_perm(w);
            auto pd = phi(d);
            REQUIRE(!pd.zero);
            CHECK(pd.d == Diagram::from_perm(w.inverse()));
            CHECK(pd.sign == (w.length() % 2 ? -1 : 1));
        }
    }
}

TEST_CASE("anti-automorphism is anti-multiplicative") {
    std::mt19937_64 rng(1);
    for (int n = 2; n <= 4; ++n) {
        for (int trial = 0; trial < 1000; ++trial) {
            auto a = random_diagram(n, n, rng);
            auto b = random_diagram(n, n, rng);
            auto ab = compose_signed(a, b);
            auto pa = phi(a), pb = phi(b);
            auto rhs = compose_signed(pb.d, pa.d);
            if (ab.zero) {
                REQUIRE(rhs.zero);
                continue;
            }
            auto lhs = phi(ab.d);
            REQUIRE(!rhs.zero);
            REQUIRE(lhs.d == rhs.d);
            int lhs_sign = lhs.sign * ab.sign;
            int rhs_sign = rhs.sign * pa.sign * pb.sign;
            REQUIRE(lhs_sign == rhs_sign);
        }
    }
}

TEST_CASE("factorization into half diagrams") {
    // permutation diagrams factor trivially
    for (const auto& w : all_perms(3)) {
        auto d = Diagram::from_perm(w);
        auto f = factorize(d);
        CHECK(f.s1 == Diagram::identity(3));
        CHECK(f.s2 == Diagram::identity(3));
        CHECK(f.w == w);
    }

    auto fe = factorize(eps_diagram(4));
    CHECK(fe.s1 == D(4, 2, {{2, 3}, {0, 4}, {1, 5}}));
    CHECK(fe.s2 == D(4, 2, {{1, 2}, {0, 4}, {3, 5}}));
    CHECK(fe.w.is_identity());

    auto f0 = factorize(e_generator(2, 1));
    CHECK(f0.s1 == cup_diagram());
    CHECK(f0.s2 == cup_diagram());

    // unsigned reassembly reproduces the diagram, on every four-strand diagram
    for (const auto& d : enumerate_diagrams(4, 4)) {
        auto f = factorize(d);
        auto part = concatenate(f.s1, Diagram::from_perm(f.w));
        REQUIRE(part.ok);
        auto whole = concatenate(part.d, f.s2.flipped());
        REQUIRE(whole.ok);
        CHECK(whole.d == d);
        // non-crossing half diagrams
        CHECK(f.s1.prop_count() == d.prop_count());
        CHECK(f.s2.prop_count() == d.prop_count());
    }
}

TEST_CASE("factorization is a bijection onto diagrams") {
    // assembling (S1, w, S2) over all choices hits every diagram with the
    // matching number of propagating lines exactly once
    for (int n = 2; n <= 4; ++n) {
        std::set<Diagram> seen;
        std::uint64_t total = 0;
        for (int t = n % 2; t <= n; t += 2) {
            auto halves = enumerate_noncrossing(n, t);
            for (const auto& s1 : halves)
                for (const auto& w : all_perms(t))
                    for (const auto& s2 : halves) {
                        auto part = concatenate(s1, Diagram::from_perm(w));
                        REQUIRE(part.ok);
                        auto whole = concatenate(part.d, s2.flipped());
                        REQUIRE(whole.ok);
                        CHECK(!seen.count(whole.d));
                        seen.insert(whole.d);
                        ++total;
                    }
        }
        CHECK(total == enumerate_diagrams(n, n).size());
    }
}

TEST_CASE("layer decomposition reassembles") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        int r = 1 + static_cast<int>(rng() % 4);
        int par = static_cast<int>(rng() % 3) * 2 - 2;
        int s = std::max(0, std::min(5, r + par));
        if ((r + s) % 2) ++s;
        auto all = enumerate_diagrams(r, s);
        if (all.empty()) continue;
        auto d = all[rng() % all.size()];
        auto layers = decompose_layers(d);
        if (layers.empty()) {
            CHECK(d == Diagram::identity(d.r));
            continue;
        }
        Diagram acc = layers[0];
        for (size_t i = 1; i < layers.size(); ++i) {
            auto cc = concatenate(acc, layers[i]);
            REQUIRE(cc.ok);
            acc = cc.d;
        }
        CHECK(acc == d);
    }
}

TEST_CASE("products of diagram pairs stay monomial") {
    // structural: the product of two diagrams is zero or a signed diagram,
    // never a longer combination; compose_signed returns exactly that
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        auto a = random_diagram(4, 4, rng);
        auto b = random_diagram(4, 4, rng);
        auto ab = compose_signed(a, b);
        if (!ab.zero) CHECK((ab.sign == 1 || ab.sign == -1));
    }
}
