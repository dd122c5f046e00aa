#pragma once

#include <numeric>

#include "pba/algebra_element.hpp"
#include "pba/idempotents.hpp"

namespace pba {

/// Basis of the center of the diagram algebra on n strands over GF(p).
///
/// Invariance under the crossing generators is conjugation-invariance under
/// the signed symmetric-group action, solved orbitwise; the cup-cap
/// generators add honest linear conditions on the orbit coordinates.
inline std::vector<Element<Gfp>> center_basis(int n, std::uint32_t p, int bound = 5) {
    using E = Element<Gfp>;
    if (n > bound) throw std::length_error("center_basis: n exceeds the configured bound");
    const Gfp one(1, p);
    if (n == 0) return {E::identity(0, p)}; // the scalar algebra
    auto diagrams = enumerate_diagrams(n, n);
    const int D = static_cast<int>(diagrams.size());
    std::map<Diagram, int> idx;
    for (int i = 0; i < D; ++i) idx.emplace(diagrams[i], i);

    if (n == 1) return {E::identity(1, p)};

    // signed conjugation orbits: z s = s z for all crossings means the
    // coefficient function is constant along conjugation up to the signs
    std::vector<int> comp(D, -1);
    std::vector<int> rel_sign(D, 0); // sign relative to the orbit root
    std::vector<char> dead(D, 0);    // orbit forced to zero by a sign clash
    std::vector<std::vector<int>> orbits;
    for (int start = 0; start < D; ++start) {
        if (comp[start] >= 0) continue;
        std::vector<int> orbit{start};
        comp[start] = static_cast<int>(orbits.size());
        rel_sign[start] = 1;
        bool clash = false;
        for (size_t head = 0; head < orbit.size(); ++head) {
            int cur = orbit[head];
            for (int i = 1; i < n; ++i) {
                Diagram s = s_generator(n, i);
                auto left = compose_signed(s, diagrams[cur]);
                if (left.zero) throw std::logic_error("center_basis: crossing product vanished");
                auto both = compose_signed(left.d, s);
                if (both.zero) throw std::logic_error("center_basis: crossing product vanished");
                int to = idx.at(both.d);
                int sign = left.sign * both.sign * rel_sign[cur];
                if (comp[to] < 0) {
                    comp[to] = comp[start];
                    rel_sign[to] = sign;
                    orbit.push_back(to);
                } else if (rel_sign[to] != sign) {
                    clash = true;
                }
            }
        }
        if (clash)
            for (int d : orbit) dead[d] = 1;
        orbits.push_back(std::move(orbit));
    }
    std::vector<std::vector<std::pair<int, int>>> invariants; // (diagram, sign)
    for (const auto& orbit : orbits) {
        if (dead[orbit[0]]) continue;
        std::vector<std::pair<int, int>> v;
        for (int d : orbit) v.emplace_back(d, rel_sign[d]);
        invariants.push_back(std::move(v));
    }
    const int k = static_cast<int>(invariants.size());

    // impose commutation with the cup-cap generators on the invariant span
    std::vector<std::vector<Gfp>> cols;
    for (int j = 0; j < k; ++j) {
        E z(n, n, p);
        for (auto [d, sg] : invariants[j]) z.add_term(diagrams[d], sg > 0 ? one : -one);
        std::vector<Gfp> col;
        for (int i = 1; i < n; ++i) {
            E e = E::from_diagram(e_generator(n, i), p);
            E comm = z * e - e * z;
            std::vector<Gfp> block(D, Gfp(0, p));
            for (const auto& [d, c] : comm.terms) block[idx.at(d)] = c;
            col.insert(col.end(), block.begin(), block.end());
        }
        cols.push_back(std::move(col));
    }
    Matrix<Gfp> sys(static_cast<int>(cols.empty() ? 0 : cols[0].size()), k, p);
    for (int j = 0; j < k; ++j)
        for (size_t i = 0; i < cols[j].size(); ++i) sys.at(static_cast<int>(i), j) = cols[j][i];
    auto ker = sys.kernel();

    std::vector<E> out;
    for (const auto& coeffs : ker) {
        E z(n, n, p);
        for (int j = 0; j < k; ++j) {
            if (coeffs[j].is_zero()) continue;
            for (auto [d, sg] : invariants[j]) z.add_term(diagrams[d], sg > 0 ? coeffs[j] : -coeffs[j]);
        }
        out.push_back(std::move(z));
    }
    return out;
}

/// Structure constants of the (commutative) center in a given basis.
inline CommutativeAlgebra center_structure(int n, std::uint32_t p, const std::vector<Element<Gfp>>& zbasis) {
    CommutativeAlgebra alg;
    alg.p = p;
    alg.dim = static_cast<int>(zbasis.size());
    auto diagrams = enumerate_diagrams(n, n);
    std::map<Diagram, int> idx;
    for (size_t i = 0; i < diagrams.size(); ++i) idx.emplace(diagrams[i], static_cast<int>(i));
    const int D = static_cast<int>(diagrams.size());
    Matrix<Gfp> basis_mat(D, alg.dim, p);
    for (int j = 0; j < alg.dim; ++j)
        for (const auto& [d, c] : zbasis[j].terms) basis_mat.at(idx.at(d), j) = c;
    LinSolver<Gfp> solver(basis_mat);
    auto to_coords = [&](const Element<Gfp>& x) {
        std::vector<Gfp> v(D, Gfp(0, p));
        for (const auto& [d, c] : x.terms) v[idx.at(d)] = c;
        auto sol = solver.solve(v);
        if (!sol) throw std::logic_error("center_structure: element outside the center span");
        return *sol;
    };
    for (int i = 0; i < alg.dim; ++i) {
        Matrix<Gfp> mi(alg.dim, alg.dim, p);
        for (int j = 0; j < alg.dim; ++j) {
            auto coords = to_coords(zbasis[i] * zbasis[j]);
            for (int r = 0; r < alg.dim; ++r) mi.at(r, j) = coords[r];
        }
        alg.mult.push_back(std::move(mi));
    }
    alg.one = to_coords(Element<Gfp>::identity(n, p));
    return alg;
}

} // namespace pba
