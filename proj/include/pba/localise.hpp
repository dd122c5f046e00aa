#pragma once

#include "pba/standard_module.hpp"

namespace pba {

/// A module over the diagram algebra on n strands given by explicit
/// generator action matrices.
template <class K>
struct ExplicitModule {
    int n = 0;
    typename FieldOps<K>::Tag tag{};
    std::vector<Matrix<K>> s_mats; // s_1 .. s_{n-1}
    std::vector<Matrix<K>> e_mats; // e_1 .. e_{n-1}
    int dim = 0;
};

/// Corner truncation: the image of the corner idempotent, carried to a module
/// over the algebra two strands down through conjugation with the connecting
/// diagrams.
template <class K>
ExplicitModule<K> localise(const StandardModule<K>& w) {
    using Ops = FieldOps<K>;
    const int n = w.n();
    if (n < 3) throw std::domain_error("localise: needs n >= 3");
    auto tag = w.tag();
    Matrix<K> eps = w.action_matrix(eps_diagram(n));
    // image basis of the idempotent
    auto rr = eps.rref();
    std::vector<std::vector<K>> image;
    for (int pc : rr.pivots) {
        std::vector<K> col(w.dim(), Ops::zero(tag));
        for (int i = 0; i < w.dim(); ++i) col[i] = eps.at(i, pc);
        image.push_back(std::move(col));
    }
    const int dim = static_cast<int>(image.size());
    ExplicitModule<K> out;
    out.n = n - 2;
    out.tag = tag;
    out.dim = dim;
    if (dim == 0) return out;
    Matrix<K> basis(w.dim(), dim, tag);
    for (int j = 0; j < dim; ++j)
        for (int i = 0; i < w.dim(); ++i) basis.at(i, j) = image[j][i];
    LinSolver<K> solver(basis);
    auto restrict_action = [&](const Diagram& a) {
        // action of g * a * f on the truncation
        Element<K> ga = Element<K>::from_diagram(g_diagram(n), tag) * Element<K>::from_diagram(a, tag);
        Element<K> gaf = ga * Element<K>::from_diagram(f_diagram(n), tag);
        Matrix<K> big = w.action_matrix(gaf);
        Matrix<K> small(dim, dim, tag);
        for (int j = 0; j < dim; ++j) {
            auto v = big.apply(image[j]);
            auto coords = solver.solve(v);
            if (!coords) throw std::logic_error("localise: action left the truncation");
            for (int i = 0; i < dim; ++i) small.at(i, j) = (*coords)[i];
        }
        return small;
    };
    for (int i = 1; i < n - 2; ++i) {
        out.s_mats.push_back(restrict_action(s_generator(n - 2, i)));
        out.e_mats.push_back(restrict_action(e_generator(n - 2, i)));
    }
    return out;
}

/// Dimension of the truncation without building the action matrices.
template <class K>
int localise_dim(const StandardModule<K>& w) {
    return w.action_matrix(eps_diagram(w.n())).rank();
}

/// Linear dual with the action pulled back through the anti-automorphism:
/// each generator acts by the transpose of the image of its flip.
template <class K>
ExplicitModule<K> dual_module(const StandardModule<K>& w) {
    ExplicitModule<K> out;
    out.n = w.n();
    out.tag = w.tag();
    out.dim = w.dim();
    for (int i = 1; i < w.n(); ++i) {
        auto phis = Element<K>::from_diagram(s_generator(w.n(), i), w.tag()).apply_phi();
        auto phie = Element<K>::from_diagram(e_generator(w.n(), i), w.tag()).apply_phi();
        out.s_mats.push_back(w.action_matrix(phis).transpose());
        out.e_mats.push_back(w.action_matrix(phie).transpose());
    }
    return out;
}

/// Dual action of an arbitrary element, for block assignment of the dual.
template <class K>
Matrix<K> dual_action(const StandardModule<K>& w, const Element<K>& a) {
    return w.action_matrix(a.apply_phi()).transpose();
}

} // namespace pba
