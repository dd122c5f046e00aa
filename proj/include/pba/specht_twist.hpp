#pragma once

#include "pba/murphy.hpp"

namespace pba {

/// Simple-head machinery over GF(p) for the group algebra: quotient of a
/// shape's module by the radical of its bilinear form, as explicit generator
/// matrices. Only defined when the form is nonzero (restricted shapes).
template <class K>
struct SimpleHead {
    Partition shape;
    int dim = 0;
    std::vector<Matrix<K>> gens; // adjacent transpositions 0 .. t-2
};

template <class K>
SimpleHead<K> simple_head(std::shared_ptr<MurphyContext<K>> ctx, const Partition& lam) {
    using Ops = FieldOps<K>;
    auto tag = ctx->tag();
    const int t = ctx->t();
    SpechtModule<K> s(ctx, lam);
    const int f = s.dim();
    Matrix<K> g = s.gram();
    auto rad = g.kernel();
    const int radim = static_cast<int>(rad.size());
    const int hdim = f - radim;
    SimpleHead<K> out;
    out.shape = lam;
    out.dim = hdim;
    if (hdim == 0) return out;
    // basis: radical first, then greedily completed standard vectors
    std::vector<std::vector<K>> chosen = rad;
    auto rank_with = [&](const std::vector<K>& v) {
        Matrix<K> test(f, static_cast<int>(chosen.size()) + 1, tag);
        for (size_t c = 0; c < chosen.size(); ++c)
            for (int i = 0; i < f; ++i) test.at(i, static_cast<int>(c)) = chosen[c][i];
        for (int i = 0; i < f; ++i) test.at(i, static_cast<int>(chosen.size())) = v[i];
        return test.rank();
    };
    std::vector<int> head_cols;
    for (int j = 0; j < f && static_cast<int>(chosen.size()) < f; ++j) {
        std::vector<K> v(f, Ops::zero(tag));
        v[j] = Ops::one(tag);
        if (rank_with(v) == static_cast<int>(chosen.size()) + 1) {
            chosen.push_back(v);
            head_cols.push_back(j);
        }
    }
    Matrix<K> full(f, f, tag);
    for (int c = 0; c < f; ++c)
        for (int i = 0; i < f; ++i) full.at(i, c) = chosen[c][i];
    LinSolver<K> solver(full);
    for (int gi = 0; gi + 1 < t; ++gi) {
        Matrix<K> big = s.generator_matrix(gi);
        Matrix<K> small(hdim, hdim, tag);
        for (int j = 0; j < hdim; ++j) {
            std::vector<K> v(f, Ops::zero(tag));
            for (int i = 0; i < f; ++i) v[i] = big.at(i, head_cols[j]);
            auto coords = solver.solve(v);
            if (!coords) throw std::logic_error("simple_head: projection failed");
            for (int i = 0; i < hdim; ++i) small.at(i, j) = (*coords)[radim + i];
        }
        out.gens.push_back(std::move(small));
    }
    return out;
}

/// Does a nonzero intertwiner exist between two explicit simple modules?
/// For simple modules of equal dimension that is exactly an isomorphism.
template <class K>
bool modules_isomorphic(const std::vector<Matrix<K>>& a, const std::vector<Matrix<K>>& b, int dim,
                        typename FieldOps<K>::Tag tag) {
    if (a.size() != b.size()) return false;
    const int unknowns = dim * dim;
    const int rows = static_cast<int>(a.size()) * dim * dim;
    Matrix<K> sys(rows, unknowns, tag);
    int row = 0;
    for (size_t g = 0; g < a.size(); ++g) {
        // X a_g - b_g X = 0, entrywise in X
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                for (int k = 0; k < dim; ++k) {
                    // (X a_g)(i, j) collects X(i, k) a_g(k, j)
                    sys.at(row, i * dim + k) = sys.at(row, i * dim + k) + a[g].at(k, j);
                    // (b_g X)(i, j) collects b_g(i, k) X(k, j)
                    sys.at(row, k * dim + j) = sys.at(row, k * dim + j) - b[g].at(i, k);
                }
                ++row;
            }
    }
    return static_cast<int>(sys.kernel().size()) > 0;
}

/// The label with head isomorphic to the sign-twisted head of the input,
/// computed entirely inside the modular group-algebra machinery. This is the
/// independent referee for the symbol-based conjugation map.
inline Partition sign_twist_label(const Partition& lam, std::uint32_t p, int limit = 7) {
    if (!is_p_restricted(lam, static_cast<int>(p)))
        throw std::domain_error("sign_twist_label: shape not restricted");
    const int t = lam.size();
    auto ctx = std::make_shared<MurphyContext<Gfp>>(t, p, limit);
    SimpleHead<Gfp> head = simple_head(ctx, lam);
    if (head.dim == 0) throw std::logic_error("sign_twist_label: restricted shape with zero head");
    std::vector<Matrix<Gfp>> twisted;
    for (const auto& m : head.gens) twisted.push_back(m * Gfp(-1, p));
    Partition found;
    bool any = false;
    for (const auto& mu : all_partitions(t)) {
        if (!is_p_restricted(mu, static_cast<int>(p))) continue;
        SimpleHead<Gfp> cand = simple_head(ctx, mu);
        if (cand.dim != head.dim) continue;
        if (modules_isomorphic(twisted, cand.gens, head.dim, p)) {
            if (any) throw std::logic_error("sign_twist_label: two isomorphic candidates");
            found = mu;
            any = true;
        }
    }
    if (!any) throw std::logic_error("sign_twist_label: no candidate matched");
    return found;
}

} // namespace pba
