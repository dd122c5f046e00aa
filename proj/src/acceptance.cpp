#include "pba/acceptance.hpp"

#include <chrono>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "pba/blocks.hpp"
#include "pba/localise.hpp"
#include "pba/mullineux.hpp"
#include "pba/specht_twist.hpp"
#include "pba/standard_basis.hpp"
#include "pba/super_oracle.hpp"

namespace pba {

namespace {

using Clock = std::chrono::steady_clock;

struct Ctx {
    AcceptanceOptions opt;
    std::map<std::pair<int, int>, BlockDecomposition> oracles;

    const BlockDecomposition& oracle(int n, int p) {
        auto key = std::make_pair(n, p);
        auto it = oracles.find(key);
        if (it == oracles.end()) {
            OracleOptions oo;
            oo.max_n = opt.oracle_max_n;
            it = oracles.emplace(key, block_oracle(n, p, oo)).first;
        }
        return it->second;
    }
};

Diagram pick(const std::vector<Diagram>& all, std::mt19937_64& rng) { return all[rng() % all.size()]; }

std::uint64_t double_factorial(int n) {
    std::uint64_t r = 1;
    for (int k = 2 * n - 1; k > 0; k -= 2) r *= k;
    return r;
}

bool same_signed(const SignedDiagram& a, const SignedDiagram& b) {
    if (a.zero != b.zero) return false;
    if (a.zero) return true;
    return a.sign == b.sign && a.d == b.d;
}

// ----- criterion 1: classifier equals oracle on the full grid -----
CriterionResult criterion_theorem_check(Ctx& ctx) {
    CriterionResult r{1, "block theorem: classifier = oracle, n in 2..5, p in {3,5,7,11}", true, "", 0};
    std::ostringstream detail;
    for (int n = 2; n <= 5; ++n)
        for (int p : {3, 5, 7, 11}) {
            auto cls = classify(n, p);
            const auto& orc = ctx.oracle(n, p);
            bool ok = cls.same_blocks(orc);
            if (!ok) {
                r.pass = false;
                detail << " mismatch at (n=" << n << ", p=" << p << ")";
            }
        }
    std::ostringstream name;
    if (r.pass) detail << "16/16 grid cells agree";
    r.detail = detail.str();
    return r;
}

// ----- criterion 2: single block bound -----
CriterionResult criterion_single_block(Ctx&) {
    CriterionResult r{2, "single block for n >= (p^2+7)/8 up to 12, p in {3,5,7}", true, "", 0};
    int cells = 0;
    for (int p : {3, 5, 7})
        for (int n = single_block_bound(p); n <= 12; ++n) {
            ++cells;
            if (classify(n, p).blocks.size() != 1) {
                r.pass = false;
                r.detail = "more than one block at n=" + std::to_string(n) + ", p=" + std::to_string(p);
                return r;
            }
        }
    r.detail = std::to_string(cells) + " cases single-block";
    return r;
}

// ----- criterion 3: characteristic zero baseline -----
CriterionResult criterion_char_zero(Ctx&) {
    CriterionResult r{3, "char 0 = two-core fibers (n <= 12); p > n agrees with char 0", true, "", 0};
    for (int n = 0; n <= 12 && r.pass; ++n) {
        auto dec = classify(n, 0);
        std::map<Partition, std::vector<Partition>> fibers;
        for (const auto& lam : enumerate_lambda(n).members) fibers[two_core(lam)].push_back(lam);
        BlockDecomposition expect;
        expect.n = n;
        expect.p = 0;
        for (auto& [c, f] : fibers) expect.blocks.push_back(f);
        if (!dec.same_blocks(expect)) {
            r.pass = false;
            r.detail = "two-core fibration failed at n=" + std::to_string(n);
        }
    }
    for (int p : {7, 11, 13})
        for (int n = 0; n < p && r.pass; ++n)
            if (!classify(n, p).same_blocks(classify(n, 0))) {
                r.pass = false;
                r.detail = "large-p disagreement at n=" + std::to_string(n) + ", p=" + std::to_string(p);
            }
    if (r.pass) r.detail = "all sizes agree";
    return r;
}

// ----- criterion 4: sign rule soundness -----
CriterionResult criterion_sign_rule(Ctx& ctx) {
    CriterionResult r{4, "associativity + graded-tensor agreement of the sign rule", true, "", 0};
    long checked = 0;
    // exhaustive associativity on three strands
    auto all3 = enumerate_diagrams(3, 3);
    for (const auto& a : all3)
        for (const auto& b : all3)
            for (const auto& c : all3) {
                auto ab = compose_signed(a, b);
                auto bc = compose_signed(b, c);
                SignedDiagram l = ab.zero ? SignedDiagram::make_zero() : compose_signed(ab.d, c);
                if (!l.zero && ab.sign < 0) l.sign = -l.sign;
                SignedDiagram rr = bc.zero ? SignedDiagram::make_zero() : compose_signed(a, bc.d);
                if (!rr.zero && bc.sign < 0) rr.sign = -rr.sign;
                ++checked;
                if (!same_signed(l, rr)) {
                    r.pass = false;
                    r.detail = "associativity failed at n=3";
                    return r;
                }
            }
    // sampled associativity on four and five strands
    std::mt19937_64 rng(ctx.opt.seed);
    for (int n : {4, 5}) {
        auto all = enumerate_diagrams(n, n);
        for (int trial = 0; trial < 10000; ++trial) {
            auto a = pick(all, rng), b = pick(all, rng), c = pick(all, rng);
            auto ab = compose_signed(a, b);
            auto bc = compose_signed(b, c);
            SignedDiagram l = ab.zero ? SignedDiagram::make_zero() : compose_signed(ab.d, c);
            if (!l.zero && ab.sign < 0) l.sign = -l.sign;
            SignedDiagram rr = bc.zero ? SignedDiagram::make_zero() : compose_signed(a, bc.d);
            if (!rr.zero && bc.sign < 0) rr.sign = -rr.sign;
            ++checked;
            if (!same_signed(l, rr)) {
                r.pass = false;
                r.detail = "associativity failed at n=" + std::to_string(n);
                return r;
            }
        }
    }
    // marking rule against the graded tensor semantics
    for (int n = 1; n <= 3; ++n) {
        auto all = enumerate_diagrams(n, n);
        for (const auto& a : all)
            for (const auto& b : all) {
                ++checked;
                if (!same_signed(compose_signed(a, b), compose_via_layers(a, b))) {
                    r.pass = false;
                    r.detail = "tensor semantics disagreed at n=" + std::to_string(n);
                    return r;
                }
            }
    }
    {
        auto all4 = enumerate_diagrams(4, 4);
        for (int trial = 0; trial < 10000; ++trial) {
            auto a = pick(all4, rng), b = pick(all4, rng);
            ++checked;
            if (!same_signed(compose_signed(a, b), compose_via_layers(a, b))) {
                r.pass = false;
                r.detail = "tensor semantics disagreed at n=4";
                return r;
            }
        }
    }
    r.detail = std::to_string(checked) + " compositions checked";
    return r;
}

// ----- criterion 5: the anti-automorphism contract -----
CriterionResult criterion_phi(Ctx& ctx) {
    CriterionResult r{5, "anti-automorphism: generators, signed inverse, anti-multiplicativity", true, "", 0};
    auto xp = phi(crossing_diagram());
    auto capp = phi(cap_diagram());
    auto cupp = phi(cup_diagram());
    if (!(xp.sign == -1 && xp.d == crossing_diagram()) || !(capp.sign == 1 && capp.d == cup_diagram()) ||
        !(cupp.sign == -1 && cupp.d == cap_diagram())) {
        r.pass = false;
        r.detail = "generator images wrong";
        return r;
    }
    for (int n = 1; n <= 4; ++n)
        for (const auto& w : all_perms(n)) {
            auto pd = phi(Diagram::from_perm(w));
            if (pd.zero || !(pd.d == Diagram::from_perm(w.inverse())) ||
                pd.sign != (w.length() % 2 ? -1 : 1)) {
                r.pass = false;
                r.detail = "signed inverse failed on a permutation diagram";
                return r;
            }
        }
    std::mt19937_64 rng(ctx.opt.seed + 5);
    long checked = 0;
    for (int n = 2; n <= 4; ++n) {
        auto all = enumerate_diagrams(n, n);
        for (int trial = 0; trial < 1000; ++trial) {
            auto a = pick(all, rng), b = pick(all, rng);
            auto ab = compose_signed(a, b);
            auto pa = phi(a), pb = phi(b);
            auto rhs = compose_signed(pb.d, pa.d);
            ++checked;
            if (ab.zero != rhs.zero) {
                r.pass = false;
                r.detail = "anti-multiplicativity zero mismatch";
                return r;
            }
            if (ab.zero) continue;
            auto lhs = phi(ab.d);
            if (!(lhs.d == rhs.d) || lhs.sign * ab.sign != rhs.sign * pa.sign * pb.sign) {
                r.pass = false;
                r.detail = "anti-multiplicativity sign mismatch";
                return r;
            }
        }
    }
    r.detail = std::to_string(checked) + " random pairs + all permutation diagrams";
    return r;
}

// ----- criterion 6: corner idempotent identities and truncation dims -----
CriterionResult criterion_corner(Ctx&) {
    CriterionResult r{6, "corner idempotent identities and truncation dimensions", true, "", 0};
    for (int n = 3; n <= 8; ++n) {
        auto eps = eps_diagram(n);
        auto sq = compose_signed(eps, eps);
        auto fg = compose_signed(f_diagram(n), g_diagram(n));
        auto gf = compose_signed(g_diagram(n), f_diagram(n));
        if (sq.zero || sq.sign != 1 || !(sq.d == eps) || fg.zero || fg.sign != 1 ||
            !(fg.d == Diagram::identity(n - 2)) || gf.zero || gf.sign != 1 || !(gf.d == eps)) {
            r.pass = false;
            r.detail = "identity failed at n=" + std::to_string(n);
            return r;
        }
    }
    // truncation dimensions against the branch rule
    std::map<int, std::shared_ptr<MurphyContext<Gfp>>> ctxs;
    for (int n = 3; n <= 5; ++n)
        for (const auto& lam : enumerate_lambda(n).members) {
            int t = lam.size();
            if (!ctxs.count(t)) ctxs[t] = std::make_shared<MurphyContext<Gfp>>(t, 5u);
            StandardModule<Gfp> w(n, lam, 5, ctxs[t]);
            int expected = 0;
            if (t <= n - 2)
                expected = static_cast<int>(enumerate_noncrossing(n - 2, t).size() * tableau_count(lam));
            if (localise_dim(w) != expected) {
                r.pass = false;
                r.detail = "truncation dimension failed at n=" + std::to_string(n) + ", shape " + lam.str();
                return r;
            }
        }
    r.detail = "identities for n in 3..8; truncation dims for n <= 5";
    return r;
}

// ----- criterion 7: dimension identities -----
CriterionResult criterion_dimensions(Ctx&) {
    CriterionResult r{7, "dim A_n = (2n-1)!! = sum of squared module dimensions, n <= 6", true, "", 0};
    for (int n = 0; n <= 6; ++n) {
        std::uint64_t diagrams = (n <= 5) ? enumerate_diagrams(n, n).size() : double_factorial(n);
        std::uint64_t total = 0;
        for (const auto& lam : enumerate_lambda(n).members) {
            std::uint64_t half = enumerate_noncrossing(n, lam.size()).size();
            std::uint64_t dim = half * tableau_count(lam);
            total += dim * dim;
        }
        if (diagrams != double_factorial(n) || total != double_factorial(n)) {
            r.pass = false;
            r.detail = "dimension identity failed at n=" + std::to_string(n);
            return r;
        }
    }
    r.detail = "n = 0..6";
    return r;
}

// ----- criterion 8: standardly based structure -----
template <class K>
bool triangularity_for(int n, typename FieldOps<K>::Tag tag, std::string& err) {
    StandardBasis<K> sb(n, tag);
    if (sb.size() != static_cast<int>(double_factorial(n))) {
        err = "family size wrong at n=" + std::to_string(n);
        return false;
    }
    for (int gi = 1; gi < n; ++gi)
        for (const Diagram& gen : {s_generator(n, gi), e_generator(n, gi)})
            for (int col = 0; col < sb.size(); ++col) {
                auto prod = Element<K>::from_diagram(gen, tag) * sb.element(col);
                auto coords = sb.coordinates(prod);
                const Partition& lam = sb.lambdas()[sb.label(col).shape];
                for (int c2 = 0; c2 < sb.size(); ++c2) {
                    if (FieldOps<K>::is_zero(coords[c2])) continue;
                    if (!dominance_leq(lam, sb.lambdas()[sb.label(c2).shape])) {
                        err = "triangularity violated at n=" + std::to_string(n);
                        return false;
                    }
                }
            }
    return true;
}

CriterionResult criterion_standard_basis(Ctx&) {
    CriterionResult r{8, "standard family is a triangular basis, n <= 4, p in {0,3,5}", true, "", 0};
    std::string err;
    for (int n = 1; n <= 4 && r.pass; ++n) {
        if (!triangularity_for<Rat>(n, RatTag{}, err)) {
            r.pass = false;
            r.detail = err + " (char 0)";
        }
        for (std::uint32_t p : {3u, 5u})
            if (r.pass && !triangularity_for<Gfp>(n, p, err)) {
                r.pass = false;
                r.detail = err + " (p=" + std::to_string(p) + ")";
            }
    }
    if (r.pass) r.detail = "basis + triangular multiplication on all generators";
    return r;
}

// ----- criterion 9: simplicity criterion -----
CriterionResult criterion_gram(Ctx&) {
    CriterionResult r{9, "form rank positive exactly on the simple labels, n <= 4, p in {3,5}", true, "", 0};
    for (std::uint32_t p : {3u, 5u})
        for (int n = 1; n <= 4; ++n) {
            StandardBasis<Gfp> sb(n, p);
            auto prime = enumerate_lambda_prime(n, static_cast<int>(p)).members;
            for (const auto& lam : enumerate_lambda(n).members) {
                bool in_prime = false;
                for (const auto& mu : prime)
                    if (mu == lam) in_prime = true;
                if ((sb.gram_rank(lam) > 0) != in_prime) {
                    r.pass = false;
                    r.detail = "rank criterion failed at n=" + std::to_string(n) + ", p=" + std::to_string(p) +
                               ", shape " + lam.str();
                    return r;
                }
            }
        }
    r.detail = "all labels classified correctly";
    return r;
}

// ----- criterion 10: combinatorics suite -----
CriterionResult criterion_combinatorics(Ctx& ctx) {
    CriterionResult r{10, "core stripping, conjugation involution, modular sign-twist referee", true, "", 0};
    std::mt19937_64 rng(ctx.opt.seed + 10);
    // cores: random removal orders agree with the abacus
    for (int trial = 0; trial < 200; ++trial) {
        int sz = 1 + static_cast<int>(rng() % 20);
        auto parts = all_partitions(sz);
        const Partition& lam = parts[rng() % parts.size()];
        for (int p : {2, 3, 5, 7}) {
            Partition expected = p_core(lam, p);
            for (int order = 0; order < 100; ++order) {
                auto pickk = [&](int k) { return static_cast<int>(rng() % k); };
                if (!(p_core_by_removal(lam, p, pickk) == expected)) {
                    r.pass = false;
                    r.detail = "core stripping depended on the order for " + lam.str();
                    return r;
                }
            }
        }
    }
    // conjugation involution, size and restriction preserved, transpose on cores
    for (int p : {3, 5, 7})
        for (int sz = 0; sz <= 8; ++sz)
            for (const auto& lam : all_partitions(sz)) {
                if (!is_p_restricted(lam, p)) continue;
                Partition m = mullineux(lam, p);
                if (!is_p_restricted(m, p) || m.size() != lam.size() || !(mullineux(m, p) == lam)) {
                    r.pass = false;
                    r.detail = "conjugation involution failed for " + lam.str();
                    return r;
                }
                if (removable_rim_hooks(lam, p).empty() && !(m == lam.transpose())) {
                    r.pass = false;
                    r.detail = "core case not the transpose for " + lam.str();
                    return r;
                }
            }
    // the modular referee at p = 3 up to six boxes
    for (int sz = 0; sz <= 6; ++sz)
        for (const auto& lam : all_partitions(sz)) {
            if (!is_p_restricted(lam, 3)) continue;
            if (!(sign_twist_label(lam, 3) == mullineux(lam, 3))) {
                r.pass = false;
                r.detail = "modular referee disagreed for " + lam.str();
                return r;
            }
        }
    r.detail = "cores, involution (|shape| <= 8), modular referee (|shape| <= 6, p = 3)";
    return r;
}

// ----- criterion 11: linkage propositions -----
CriterionResult criterion_linkage(Ctx& ctx) {
    CriterionResult r{11, "domino, transpose and core linkage hold in every oracle", true, "", 0};
    for (int n = 2; n <= 5; ++n)
        for (int p : {3, 5, 7}) {
            const auto& orc = ctx.oracle(n, p);
            auto a = check_two_hook_linkage(n, p, orc);
            auto b = check_transpose_symmetry(n, p, orc);
            auto c = check_p_core_linkage(n, p, orc);
            if (!a.ok() || !b.ok() || !c.ok()) {
                r.pass = false;
                std::string first = !a.ok() ? a.violations[0] : (!b.ok() ? b.violations[0] : c.violations[0]);
                r.detail = "violation at (n=" + std::to_string(n) + ", p=" + std::to_string(p) + "): " + first;
                return r;
            }
        }
    r.detail = "no violations, n <= 5, p in {3,5,7}";
    return r;
}

} // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt) {
    Ctx ctx{opt, {}};
    std::vector<CriterionResult (*)(Ctx&)> steps = {
        criterion_theorem_check, criterion_single_block, criterion_char_zero, criterion_sign_rule,
        criterion_phi,           criterion_corner,       criterion_dimensions, criterion_standard_basis,
        criterion_gram,          criterion_combinatorics, criterion_linkage};
    std::vector<CriterionResult> out;
    for (auto step : steps) {
        auto start = Clock::now();
        CriterionResult r = step(ctx);
        r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        out.push_back(std::move(r));
    }
    return out;
}

bool report_acceptance(const std::vector<CriterionResult>& results, std::ostream& out) {
    bool all = true;
    for (const auto& r : results) {
        out << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << " - " << r.name;
        if (!r.detail.empty()) out << " [" << r.detail << "]";
        char buf[32];
        std::snprintf(buf, sizeof buf, " (%.2fs)", r.seconds);
        out << buf << "\n";
        all = all && r.pass;
    }
    out << (all ? "acceptance: ALL CRITERIA PASSED" : "acceptance: FAILURES PRESENT") << "\n";
    return all;
}

} // namespace pba
