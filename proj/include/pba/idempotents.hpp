#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pba/poly.hpp"

namespace pba {

/// A finite-dimensional commutative algebra over GF(p), given by structure
/// constants: mult[i] is the matrix of left multiplication by basis vector i.
struct CommutativeAlgebra {
    std::uint32_t p = 0;
    int dim = 0;
    std::vector<Matrix<Gfp>> mult; // mult[i] * y = e_i * y in coordinates
    std::vector<Gfp> one;          // coordinates of the identity

    std::vector<Gfp> multiply(const std::vector<Gfp>& x, const std::vector<Gfp>& y) const {
        std::vector<Gfp> out(dim, Gfp(0, p));
        for (int i = 0; i < dim; ++i) {
            if (x[i].is_zero()) continue;
            auto col = mult[i].apply(y);
            for (int k = 0; k < dim; ++k) out[k] += x[i] * col[k];
        }
        return out;
    }

    std::vector<Gfp> power(std::vector<Gfp> x, std::uint64_t e) const {
        std::vector<Gfp> acc = one;
        while (e) {
            if (e & 1) acc = multiply(acc, x);
            x = multiply(x, x);
            e >>= 1;
        }
        return acc;
    }
};

namespace detail {

inline bool vec_is_zero(const std::vector<Gfp>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

} // namespace detail

/// Primitive idempotent decomposition of a commutative GF(p)-algebra.
///
/// Works in three stages: the nilradical is the kernel of the iterated
/// Frobenius map x -> x^(p^m) with p^m >= dim, the semisimple quotient is
/// split through minimal polynomials of Frobenius-fixed elements (which
/// factor into distinct linear factors), and the idempotents are lifted back
/// along the radical with the Newton step e <- 3e^2 - 2e^3.
///
/// Returned idempotents are pairwise orthogonal, sum to the identity and are
/// primitive. Non-commutative input is rejected.
inline std::vector<std::vector<Gfp>> split_idempotents(const CommutativeAlgebra& alg) {
    const std::uint32_t p = alg.p;
    const int n = alg.dim;
    if (n == 0) return {};
    const Gfp zero(0, p), unit(1, p);

    // commutativity check on all basis pairs
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<Gfp> ei(n, zero), ej(n, zero);
            ei[i] = unit;
            ej[j] = unit;
            if (alg.multiply(ei, ej) != alg.multiply(ej, ei))
                throw std::invalid_argument("split_idempotents: algebra is not commutative");
        }
    {
        // identity sanity
        std::vector<Gfp> e0(n, zero);
        e0[0] = unit;
        if (alg.multiply(alg.one, e0) != e0)
            throw std::invalid_argument("split_idempotents: bad identity element");
    }

    // Frobenius exponent m with p^m >= dim
    int m = 0;
    {
        std::uint64_t q = 1;
        while (q < static_cast<std::uint64_t>(n)) {
            q *= p;
            ++m;
        }
        if (m == 0) m = 1;
    }

    // matrix of x -> x^p (GF(p)-linear on a commutative algebra)
    Matrix<Gfp> frob(n, n, p);
    for (int j = 0; j < n; ++j) {
        std::vector<Gfp> ej(n, zero);
        ej[j] = unit;
        auto fj = alg.power(ej, p);
        for (int i = 0; i < n; ++i) frob.at(i, j) = fj[i];
    }
    Matrix<Gfp> frob_m = Matrix<Gfp>::identity(n, p);
    for (int k = 0; k < m; ++k) frob_m = frob * frob_m;

    // nilradical and a section of the quotient
    auto rad_basis = frob_m.kernel();
    const int radim = static_cast<int>(rad_basis.size());
    // full basis = radical basis + greedily selected standard vectors
    Matrix<Gfp> full(n, n, p);
    {
        std::vector<std::vector<Gfp>> chosen;
        auto try_add = [&](const std::vector<Gfp>& v) {
            Matrix<Gfp> test(n, static_cast<int>(chosen.size()) + 1, p);
            for (size_t c = 0; c < chosen.size(); ++c)
                for (int i = 0; i < n; ++i) test.at(i, static_cast<int>(c)) = chosen[c][i];
            for (int i = 0; i < n; ++i) test.at(i, static_cast<int>(chosen.size())) = v[i];
            if (test.rank() == static_cast<int>(chosen.size()) + 1) {
                chosen.push_back(v);
                return true;
            }
            return false;
        };
        for (const auto& v : rad_basis) try_add(v);
        for (int j = 0; j < n && static_cast<int>(chosen.size()) < n; ++j) {
            std::vector<Gfp> v(n, zero);
            v[j] = unit;
            try_add(v);
        }
        for (int c = 0; c < n; ++c)
            for (int i = 0; i < n; ++i) full.at(i, c) = chosen[c][i];
    }
    LinSolver<Gfp> full_solver(full);
    const int qdim = n - radim;

    // quotient coordinates: coefficients on the complement part of `full`
    auto project = [&](const std::vector<Gfp>& v) {
        auto sol = full_solver.solve(v);
        if (!sol) throw std::logic_error("split_idempotents: projection failed");
        return std::vector<Gfp>(sol->begin() + radim, sol->end());
    };
    auto lift_q = [&](const std::vector<Gfp>& q) {
        std::vector<Gfp> v(n, zero);
        for (int j = 0; j < qdim; ++j)
            if (!q[j].is_zero())
                for (int i = 0; i < n; ++i) v[i] += q[j] * full.at(i, radim + j);
        return v;
    };
    // multiplication in the quotient
    auto qmult = [&](const std::vector<Gfp>& a, const std::vector<Gfp>& b) {
        return project(alg.multiply(lift_q(a), lift_q(b)));
    };
    std::vector<Gfp> qone = project(alg.one);

    // Frobenius-fixed subalgebra of the quotient: kernel of (F - id)
    Matrix<Gfp> qfrob(qdim, qdim, p);
    for (int j = 0; j < qdim; ++j) {
        std::vector<Gfp> ej(qdim, zero);
        ej[j] = unit;
        auto fj = project(alg.power(lift_q(ej), p));
        for (int i = 0; i < qdim; ++i) qfrob.at(i, j) = fj[i];
    }
    Matrix<Gfp> qfrob_minus = qfrob - Matrix<Gfp>::identity(qdim, p);
    auto fixed_basis = qfrob_minus.kernel();
    const int expected_components = static_cast<int>(fixed_basis.size());

    // split the quotient by the fixed elements, deterministically
    std::vector<std::vector<Gfp>> comps{qone};
    for (const auto& bq : fixed_basis) {
        if (static_cast<int>(comps.size()) == expected_components) break;
        std::vector<std::vector<Gfp>> next;
        for (const auto& e : comps) {
            std::vector<Gfp> z = qmult(e, bq);
            // minimal polynomial of multiplication by z on the ideal e*C
            // (z^p = z there, so it splits into distinct linear factors)
            std::vector<std::vector<Gfp>> ideal;
            {
                Matrix<Gfp> gen(qdim, qdim, p);
                for (int j = 0; j < qdim; ++j) {
                    std::vector<Gfp> ej(qdim, zero);
                    ej[j] = unit;
                    auto w = qmult(e, ej);
                    for (int i = 0; i < qdim; ++i) gen.at(i, j) = w[i];
                }
                auto rr = gen.rref();
                // column space basis via pivot columns of original matrix
                for (int pc : rr.pivots) {
                    std::vector<Gfp> col(qdim, zero);
                    for (int i = 0; i < qdim; ++i) col[i] = gen.at(i, pc);
                    ideal.push_back(col);
                }
            }
            const int idim = static_cast<int>(ideal.size());
            if (idim == 0) continue;
            Matrix<Gfp> ibasis(qdim, idim, p);
            for (int j = 0; j < idim; ++j)
                for (int i = 0; i < qdim; ++i) ibasis.at(i, j) = ideal[j][i];
            LinSolver<Gfp> isolver(ibasis);
            Matrix<Gfp> zmat(idim, idim, p);
            for (int j = 0; j < idim; ++j) {
                auto w = qmult(z, ideal[j]);
                auto coords = isolver.solve(w);
                if (!coords) throw std::logic_error("split_idempotents: ideal not closed");
                for (int i = 0; i < idim; ++i) zmat.at(i, j) = (*coords)[i];
            }
            Poly<Gfp> mu = minimal_polynomial(zmat);
            auto factors = factor_squarefree_gfp(mu);
            if (factors.size() <= 1) {
                next.push_back(e);
                continue;
            }
            for (const auto& [fac, mult] : factors) {
                if (fac.degree() != 1 || mult != 1)
                    throw std::logic_error("split_idempotents: fixed element with non-linear factor");
                // e_c = f_c(z)*e with f_c = prod_{c'!=c} (z-c')/(c-c')
                Gfp root = -fac.coeff(0);
                std::vector<Gfp> ec = e;
                for (const auto& [fac2, mult2] : factors) {
                    (void)mult2;
                    Gfp other = -fac2.coeff(0);
                    if (other == root) continue;
                    // ec *= (z - other)/(root - other)
                    std::vector<Gfp> zs = qmult(ec, z);
                    Gfp scale = (root - other).inv();
                    for (int i = 0; i < qdim; ++i) ec[i] = (zs[i] - other * ec[i]) * scale;
                }
                next.push_back(ec);
            }
        }
        comps = std::move(next);
    }
    if (static_cast<int>(comps.size()) != expected_components)
        throw std::logic_error("split_idempotents: splitting did not reach the component count");

    // lift along the radical: Newton iteration e <- 3e^2 - 2e^3
    std::vector<std::vector<Gfp>> out;
    for (const auto& eq : comps) {
        std::vector<Gfp> e = lift_q(eq);
        for (int it = 0; it < 2 * m + 8; ++it) {
            auto e2 = alg.multiply(e, e);
            if (e2 == e) break;
            auto e3 = alg.multiply(e2, e);
            std::vector<Gfp> ne(n, zero);
            Gfp three(3, p), two(2, p);
            for (int i = 0; i < n; ++i) ne[i] = three * e2[i] - two * e3[i];
            e = std::move(ne);
        }
        if (alg.multiply(e, e) != e) throw std::logic_error("split_idempotents: Newton lift did not converge");
        out.push_back(std::move(e));
    }

    // final contracts: orthogonal family summing to 1
    std::vector<Gfp> sum(n, zero);
    for (const auto& e : out)
        for (int i = 0; i < n; ++i) sum[i] += e[i];
    if (sum != alg.one) throw std::logic_error("split_idempotents: idempotents do not sum to 1");
    for (size_t a = 0; a < out.size(); ++a)
        for (size_t b = a + 1; b < out.size(); ++b)
            if (!detail::vec_is_zero(alg.multiply(out[a], out[b])))
                throw std::logic_error("split_idempotents: idempotents not orthogonal");
    return out;
}

} // namespace pba
