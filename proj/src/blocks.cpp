#include "pba/blocks.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "pba/center.hpp"
#include "pba/gfp.hpp"
#include "pba/standard_module.hpp"

namespace pba {

void BlockDecomposition::normalize() {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const std::vector<Partition>& a, const std::vector<Partition>& b) { return a[0] < b[0]; });
}

bool BlockDecomposition::same_blocks(const BlockDecomposition& other) const {
    BlockDecomposition a = *this, b = other;
    a.normalize();
    b.normalize();
    return a.blocks == b.blocks;
}

StaircaseEligibility staircase_eligibility(int n, int p, int r) {
    StaircaseEligibility e;
    e.r = r;
    const int boxes = r * (r + 1) / 2;
    e.rim_short = 2 * r - 1 < p;
    e.boxes_far = boxes + p - 2 * r > n;
    e.parity_fits = boxes <= n && (n - boxes) % 2 == 0;
    return e;
}

BlockDecomposition classify(int n, int p) {
    if (n < 0) throw std::invalid_argument("classify: n must be >= 0");
    if (p == 2) throw std::invalid_argument("classify: characteristic 2 is unsupported");
    if (p != 0 && !is_odd_prime(p)) throw std::invalid_argument("classify: p must be 0 or an odd prime");
    BlockDecomposition out;
    out.n = n;
    out.p = p;
    out.provenance = "classifier";
    auto lambda = enumerate_lambda(n).members;
    if (p == 0) {
        std::map<Partition, std::vector<Partition>> fibers;
        for (const auto& lam : lambda) fibers[two_core(lam)].push_back(lam);
        for (auto& [core, fiber] : fibers) out.blocks.push_back(fiber);
        out.normalize();
        return out;
    }
    std::vector<int> eligible;
    for (int r = 2; r * (r + 1) / 2 <= n; ++r)
        if (staircase_eligibility(n, p, r).eligible()) eligible.push_back(r);
    std::vector<Partition> residual;
    std::map<int, std::vector<Partition>> staircase_blocks;
    for (const auto& lam : lambda) {
        Partition core = two_core(lam);
        int r = staircase_index(core);
        if (r >= 2 && std::find(eligible.begin(), eligible.end(), r) != eligible.end())
            staircase_blocks[r].push_back(lam);
        else
            residual.push_back(lam);
    }
    for (auto& [r, blk] : staircase_blocks) out.blocks.push_back(blk);
    if (!residual.empty()) out.blocks.push_back(residual);
    out.normalize();
    return out;
}

int single_block_bound(int p) {
    if (!is_odd_prime(p)) throw std::invalid_argument("single_block_bound: p must be an odd prime");
    return (p * p + 7) / 8; // exact: p odd makes p^2 + 7 divisible by 8
}

std::vector<Element<Gfp>> central_primitive_idempotents(int n, int p, const OracleOptions& opt) {
    if (!is_odd_prime(p)) throw std::invalid_argument("central idempotents: p must be an odd prime");
    if (n > opt.max_n) throw std::length_error("central idempotents: n exceeds the configured bound");
    auto zbasis = center_basis(n, p, opt.max_n);
    CommutativeAlgebra alg = center_structure(n, p, zbasis);
    auto idems = split_idempotents(alg);
    std::vector<Element<Gfp>> idem_elems;
    for (const auto& coords : idems) {
        Element<Gfp> e(n, n, static_cast<std::uint32_t>(p));
        for (size_t j = 0; j < coords.size(); ++j) {
            if (coords[j].is_zero()) continue;
            for (const auto& [d, c] : zbasis[j].terms) e.add_term(d, c * coords[j]);
        }
        idem_elems.push_back(std::move(e));
    }
    return idem_elems;
}

BlockDecomposition block_oracle(int n, int p, const OracleOptions& opt) {
    if (!is_odd_prime(p)) throw std::invalid_argument("block_oracle: p must be an odd prime");
    if (n > opt.max_n) throw std::length_error("block_oracle: n exceeds the configured bound");
    BlockDecomposition out;
    out.n = n;
    out.p = p;
    out.provenance = "oracle";
    auto lambda = enumerate_lambda(n).members;
    if (n <= 1) {
        out.blocks.push_back(lambda);
        out.normalize();
        return out;
    }

    auto idem_elems = central_primitive_idempotents(n, p, opt);

    // group the labels by the unique idempotent acting as the identity on
    // their standard module; each diagram in the union of the idempotent
    // supports acts once, with the result accumulated into every idempotent
    std::map<int, std::vector<Partition>> groups;
    std::map<int, std::shared_ptr<MurphyContext<Gfp>>> ctxs;
    std::map<Diagram, std::vector<std::pair<int, Gfp>>> support; // diagram -> (idempotent, coeff)
    for (size_t ei = 0; ei < idem_elems.size(); ++ei)
        for (const auto& [d, c] : idem_elems[ei].terms) support[d].emplace_back(static_cast<int>(ei), c);
    for (const auto& lam : lambda) {
        const int t = lam.size();
        if (!ctxs.count(t)) ctxs[t] = std::make_shared<MurphyContext<Gfp>>(t, p, opt.murphy_limit);
        StandardModule<Gfp> w(n, lam, p, ctxs[t]);
        std::vector<Matrix<Gfp>> mats(idem_elems.size(), Matrix<Gfp>(w.dim(), w.dim(), p));
        for (const auto& [d, users] : support)
            for (int j = 0; j < w.dim(); ++j) {
                auto col = w.act_diagram(d, j);
                if (col.empty()) continue;
                for (const auto& [ei, c] : users)
                    for (const auto& [i, v] : col) mats[ei].at(i, j) += c * v;
            }
        int hit = -1;
        for (size_t ei = 0; ei < idem_elems.size(); ++ei) {
            if (mats[ei].is_zero()) continue;
            if (!(mats[ei] == Matrix<Gfp>::identity(w.dim(), p)))
                throw std::logic_error("block_oracle: central idempotent acted non-identically on " + lam.str());
            if (hit >= 0)
                throw std::logic_error("block_oracle: two idempotents hit the module of " + lam.str());
            hit = static_cast<int>(ei);
        }
        if (hit < 0) throw std::logic_error("block_oracle: no idempotent hit the module of " + lam.str());
        groups[hit].push_back(lam);
    }
    for (auto& [ei, blk] : groups) out.blocks.push_back(blk);
    if (groups.size() != idem_elems.size())
        throw std::logic_error("block_oracle: some central idempotent annihilated every standard module");
    out.normalize();
    return out;
}

namespace {

int block_of(const BlockDecomposition& dec, const Partition& lam) {
    for (size_t i = 0; i < dec.blocks.size(); ++i)
        for (const auto& mu : dec.blocks[i])
            if (mu == lam) return static_cast<int>(i);
    return -1;
}

} // namespace

LinkageReport check_two_hook_linkage(int n, int p, const BlockDecomposition& oracle) {
    (void)p;
    LinkageReport rep;
    auto lambda = enumerate_lambda(n).members;
    for (const auto& mu : lambda) {
        // horizontal dominoes: remove two boxes from the end of one row
        for (int i = 0; i < mu.rows(); ++i) {
            if (mu.part(i) - 2 < mu.part(i + 1)) continue;
            std::vector<int> parts = mu.parts();
            parts[i] -= 2;
            Partition lam(parts);
            if (block_of(oracle, lam) != block_of(oracle, mu)) {
                std::ostringstream os;
                os << "row domino: " << mu.str() << " vs " << lam.str();
                rep.violations.push_back(os.str());
            }
        }
        // vertical dominoes: two boxes from the end of one column
        Partition mt = mu.transpose();
        for (int i = 0; i < mt.rows(); ++i) {
            if (mt.part(i) - 2 < mt.part(i + 1)) continue;
            std::vector<int> parts = mt.parts();
            parts[i] -= 2;
            Partition lam = Partition(parts).transpose();
            if (block_of(oracle, lam) != block_of(oracle, mu)) {
                std::ostringstream os;
                os << "column domino: " << mu.str() << " vs " << lam.str();
                rep.violations.push_back(os.str());
            }
        }
    }
    return rep;
}

LinkageReport check_transpose_symmetry(int n, int p, const BlockDecomposition& oracle) {
    (void)n;
    (void)p;
    LinkageReport rep;
    for (const auto& blk : oracle.blocks) {
        std::vector<Partition> transposed;
        for (const auto& lam : blk) transposed.push_back(lam.transpose());
        std::sort(transposed.begin(), transposed.end());
        bool found = false;
        for (const auto& other : oracle.blocks) {
            std::vector<Partition> sorted = other;
            std::sort(sorted.begin(), sorted.end());
            if (sorted == transposed) { found = true; break; }
        }
        if (!found) {
            std::ostringstream os;
            os << "transpose image of the block of " << blk[0].str() << " is not a block";
            rep.violations.push_back(os.str());
        }
    }
    return rep;
}

LinkageReport check_p_core_linkage(int n, int p, const BlockDecomposition& oracle) {
    LinkageReport rep;
    auto lambda = enumerate_lambda(n).members;
    for (size_t a = 0; a < lambda.size(); ++a)
        for (size_t b = a + 1; b < lambda.size(); ++b) {
            if (lambda[a].size() != lambda[b].size()) continue;
            if (!(p_core(lambda[a], p) == p_core(lambda[b], p))) continue;
            if (block_of(oracle, lambda[a]) != block_of(oracle, lambda[b])) {
                std::ostringstream os;
                os << "equal core, split blocks: " << lambda[a].str() << " vs " << lambda[b].str();
                rep.violations.push_back(os.str());
            }
        }
    return rep;
}

} // namespace pba
