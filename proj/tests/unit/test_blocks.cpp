#include <doctest.h>

#include <set>

#include "pba/blocks.hpp"
#include "pba/json_io.hpp"
#include "pba/localise.hpp"

using namespace pba;

namespace {
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

std::set<std::set<Partition>> as_sets(const BlockDecomposition& d) {
    std::set<std::set<Partition>> out;
    for (const auto& b : d.blocks) out.insert(std::set<Partition>(b.begin(), b.end()));
    return out;
}
} // namespace

TEST_CASE("classifier examples") {
    auto d35 = classify(3, 5);
    CHECK(as_sets(d35) ==
          std::set<std::set<Partition>>{{P({2, 1})}, {P({3}), P({1, 1, 1}), P({1})}});

    auto d33 = classify(3, 3);
    CHECK(d33.blocks.size() == 1);

    auto d30 = classify(3, 0);
    CHECK(as_sets(d30) ==
          std::set<std::set<Partition>>{{P({2, 1})}, {P({3}), P({1, 1, 1}), P({1})}});

    auto d57 = classify(5, 7);
    std::set<Partition> fiber{P({2, 1}), P({4, 1}), P({2, 1, 1, 1})};
    std::set<Partition> rest;
    for (const auto& lam : enumerate_lambda(5).members)
        if (!fiber.count(lam)) rest.insert(lam);
    CHECK(as_sets(d57) == std::set<std::set<Partition>>{fiber, rest});

    CHECK_THROWS_AS(classify(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(classify(3, 9), std::invalid_argument);
}

TEST_CASE("staircase eligibility") {
    // r = 2 at n = 3, p = 5: all three conditions hold
    CHECK(staircase_eligibility(3, 5, 2).eligible());
    // r = 2 at n = 3, p = 3: the rim condition fails
    CHECK(!staircase_eligibility(3, 3, 2).eligible());
    // r = 3 at n = 5, p = 7: the staircase does not fit
    CHECK(!staircase_eligibility(5, 7, 3).eligible());
}

TEST_CASE("single block bound") {
    CHECK(single_block_bound(3) == 2);
    CHECK(single_block_bound(5) == 4);
    CHECK(single_block_bound(7) == 7);
    for (int p : {3, 5, 7})
        for (int n = single_block_bound(p); n <= 12; ++n) CHECK(classify(n, p).blocks.size() == 1);
}

TEST_CASE("characteristic zero is the two-core fibration") {
    for (int n = 0; n <= 12; ++n) {
        auto dec = classify(n, 0);
        std::set<std::set<Partition>> expected;
        std::map<Partition, std::set<Partition>> fibers;
        for (const auto& lam : enumerate_lambda(n).members) fibers[two_core(lam)].insert(lam);
        for (auto& [c, f] : fibers) expected.insert(f);
        CHECK(as_sets(dec) == expected);
    }
    // large characteristic agrees with characteristic zero
    for (int p : {7, 11, 13})
        for (int n = 0; n < p; ++n) CHECK(classify(n, p).same_blocks(classify(n, 0)));
}

TEST_CASE("oracle matches the classifier on small sizes") {
    for (int p : {3, 5}) {
        for (int n = 2; n <= 3; ++n) {
            auto cls = classify(n, p);
            auto orc = block_oracle(n, p);
            CHECK(cls.same_blocks(orc));
            CHECK(orc.provenance == "oracle");
        }
    }
    // the two-strand case over GF(5): a single block
    auto o25 = block_oracle(2, 5);
    REQUIRE(o25.blocks.size() == 1);
    CHECK(o25.blocks[0].size() == 3);
}

TEST_CASE("linkage checks on small oracles") {
    for (int p : {3, 5}) {
        auto orc = block_oracle(3, p);
        CHECK(check_two_hook_linkage(3, p, orc).ok());
        CHECK(check_transpose_symmetry(3, p, orc).ok());
        CHECK(check_p_core_linkage(3, p, orc).ok());
    }
}

TEST_CASE("staircase blocks are exactly two-core fibers") {
    for (int n = 2; n <= 8; ++n)
        for (int p : {3, 5, 7, 11}) {
            auto dec = classify(n, p);
            for (const auto& blk : dec.blocks) {
                // a block is either a single two-core fiber of an eligible
                // staircase or the residual block
                Partition core = two_core(blk[0]);
                bool is_fiber = true;
                for (const auto& lam : blk)
                    if (!(two_core(lam) == core)) is_fiber = false;
                int r = staircase_index(core);
                if (is_fiber && r >= 2 && staircase_eligibility(n, p, r).eligible()) {
                    // the fiber must be complete
                    for (const auto& lam : enumerate_lambda(n).members)
                        if (two_core(lam) == core)
                            CHECK(std::find(blk.begin(), blk.end(), lam) != blk.end());
                } else {
                    // residual block: no member's two-core is an eligible staircase
                    for (const auto& lam : blk) {
                        int rr = staircase_index(two_core(lam));
                        CHECK(!(rr >= 2 && staircase_eligibility(n, p, rr).eligible()));
                    }
                }
            }
        }
}

TEST_CASE("central idempotent count matches the classifier") {
    auto idems = central_primitive_idempotents(3, 5);
    CHECK(idems.size() == 2);
    CHECK(idems.size() == classify(3, 5).blocks.size());
}

TEST_CASE("dual modules land in the transposed block") {
    // for shapes that are cores the twisted label is the transpose, so the
    // dual of a standard module must live in the block of the transpose
    for (int p : {3, 5}) {
        const int n = 4;
        auto idems = central_primitive_idempotents(n, p);
        auto orc = block_oracle(n, p);
        auto block_index_of = [&](const Partition& lam) {
            for (size_t i = 0; i < orc.blocks.size(); ++i)
                for (const auto& mu : orc.blocks[i])
                    if (mu == lam) return static_cast<int>(i);
            return -1;
        };
        // idempotent -> block index through any member module
        std::map<int, int> idem_to_block;
        std::map<int, std::shared_ptr<MurphyContext<Gfp>>> ctxs;
        for (const auto& lam : enumerate_lambda(n).members) {
            int t = lam.size();
            if (!ctxs.count(t)) ctxs[t] = std::make_shared<MurphyContext<Gfp>>(t, static_cast<std::uint32_t>(p));
            StandardModule<Gfp> w(n, lam, static_cast<std::uint32_t>(p), ctxs[t]);
            for (size_t ei = 0; ei < idems.size(); ++ei)
                if (!w.action_matrix(idems[ei]).is_zero()) idem_to_block[static_cast<int>(ei)] = block_index_of(lam);
        }
        for (const auto& lam : enumerate_lambda(n).members) {
            if (!removable_rim_hooks(lam, p).empty()) continue; // only cores here
            int t = lam.size();
            StandardModule<Gfp> w(n, lam, static_cast<std::uint32_t>(p), ctxs[t]);
            int hit = -1;
            for (size_t ei = 0; ei < idems.size(); ++ei) {
                Matrix<Gfp> act = dual_action(w, idems[ei]);
                if (act.is_zero()) continue;
                CHECK(hit == -1);
                hit = static_cast<int>(ei);
            }
            REQUIRE(hit >= 0);
            CHECK(idem_to_block.at(hit) == block_index_of(lam.transpose()));
        }
    }
}

TEST_CASE("block json shape") {
    auto dec = classify(3, 5);
    auto j = to_json(dec);
    CHECK(j["n"] == 3);
    CHECK(j["p"] == 5);
    CHECK(j["provenance"] == "classifier");
    CHECK(j["blocks"].is_array());
    // deterministic order: blocks sorted by least member
    auto again = to_json(classify(3, 5));
    CHECK(j.dump() == again.dump());
}

TEST_CASE("diagram json round trip") {
    auto d = eps_diagram(4);
    auto j = to_json(d);
    CHECK(diagram_from_json(j) == d);
    auto sd = compose_signed(d, d);
    auto js = to_json(sd);
    CHECK(js["sign"] == 1);
}
