#pragma once

#include <utility>
#include <vector>

#include "pba/matrix.hpp"

namespace pba {

/// Univariate polynomial with exact coefficients, no trailing zeros stored.
template <class K>
class Poly {
public:
    using Ops = FieldOps<K>;
    using Tag = typename Ops::Tag;

    explicit Poly(Tag tag) : tag_(tag) {}
    Poly(Tag tag, std::vector<K> coeffs) : tag_(tag), c_(std::move(coeffs)) { trim(); }

    static Poly zero(Tag tag) { return Poly(tag); }
    static Poly one(Tag tag) { return Poly(tag, {Ops::one(tag)}); }
    static Poly x(Tag tag) { return Poly(tag, {Ops::zero(tag), Ops::one(tag)}); }
    /// x - a
    static Poly x_minus(Tag tag, const K& a) { return Poly(tag, {-K(a), Ops::one(tag)}); }

    Tag tag() const { return tag_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Ops::zero(tag_);
    }
    const K& lead() const { return c_.back(); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), Ops::zero(a.tag_));
        for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return Poly(a.tag_, std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), Ops::zero(a.tag_));
        for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
        return Poly(a.tag_, std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly(a.tag_);
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, Ops::zero(a.tag_));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (Ops::is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(a.tag_, std::move(r));
    }
    Poly operator*(const K& s) const {
        Poly r = *this;
        for (auto& x : r.c_) x = x * s;
        r.trim();
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * Ops::inv(lead());
    }

    /// (quotient, remainder) with remainder of smaller degree.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
        Poly rem = *this;
        Poly quo(tag_);
        quo.c_.assign(std::max<int>(0, degree() - d.degree() + 1), Ops::zero(tag_));
        K dlead_inv = Ops::inv(d.lead());
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            int shift = rem.degree() - d.degree();
            K f = rem.lead() * dlead_inv;
            quo.c_[shift] = quo.c_[shift] + f;
            for (int i = 0; i <= d.degree(); ++i)
                rem.c_[i + shift] = rem.c_[i + shift] - f * d.c_[i];
            rem.trim();
        }
        quo.trim();
        return {quo, rem};
    }
    Poly operator%(const Poly& d) const { return divmod(d).second; }
    Poly operator/(const Poly& d) const { return divmod(d).first; }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly(tag_);
        std::vector<K> r(c_.size() - 1, Ops::zero(tag_));
        for (size_t i = 1; i < c_.size(); ++i)
            r[i - 1] = c_[i] * Ops::from_int(tag_, static_cast<std::int64_t>(i));
        return Poly(tag_, std::move(r));
    }

    K eval(const K& x) const {
        K acc = Ops::zero(tag_);
        for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
        return acc;
    }

    friend Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    Poly pow_mod(std::uint64_t e, const Poly& mod) const {
        Poly acc = one(tag_), base = *this % mod;
        while (e) {
            if (e & 1) acc = (acc * base) % mod;
            base = (base * base) % mod;
            e >>= 1;
        }
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && Ops::is_zero(c_.back())) c_.pop_back();
    }
    Tag tag_;
    std::vector<K> c_;
};

/// Monic least-degree annihilator of a square matrix, by Krylov iteration on
/// the standard basis vectors with lcm accumulation.
template <class K>
Poly<K> minimal_polynomial(const Matrix<K>& m) {
    using Ops = FieldOps<K>;
    if (m.rows() != m.cols()) throw std::invalid_argument("minimal_polynomial: matrix must be square");
    const int n = m.rows();
    auto tag = m.tag();
    if (n == 0) return Poly<K>::one(tag);
    Poly<K> result = Poly<K>::one(tag);
    for (int start = 0; start < n; ++start) {
        // Krylov sequence v, Mv, M^2 v, ... until linear dependence
        std::vector<std::vector<K>> seq;
        std::vector<K> v(n, Ops::zero(tag));
        v[start] = Ops::one(tag);
        seq.push_back(v);
        for (int k = 1; k <= n; ++k) seq.push_back(m.apply(seq.back()));
        // find the least k with seq[k] in span(seq[0..k-1]) and the relation
        Matrix<K> sys(n, static_cast<int>(seq.size()), tag);
        for (size_t j = 0; j < seq.size(); ++j)
            for (int i = 0; i < n; ++i) sys.at(i, static_cast<int>(j)) = seq[j][i];
        auto rr = sys.rref();
        int k = rr.rank; // first dependent column index equals the rank here
        Matrix<K> head(n, k, tag);
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < n; ++i) head.at(i, j) = seq[j][i];
        LinSolver<K> solver(head);
        auto rel = solver.solve(seq[k]);
        if (!rel) throw std::logic_error("minimal_polynomial: inconsistent Krylov relation");
        std::vector<K> coeffs(k + 1, Ops::zero(tag));
        for (int j = 0; j < k; ++j) coeffs[j] = -K((*rel)[j]);
        coeffs[k] = Ops::one(tag);
        Poly<K> local(tag, std::move(coeffs));
        // lcm(result, local) = result * local / gcd
        Poly<K> g = gcd(result, local);
        result = (result * local / g).monic();
        if (result.degree() == n) break;
    }
    return result;
}

/// Squarefree decomposition over GF(p) (handles the x^p collapse of the
/// derivative). Returns pairwise coprime squarefree parts with multiplicity.
inline std::vector<std::pair<Poly<Gfp>, int>> squarefree_decomposition(const Poly<Gfp>& f);

/// Berlekamp splitting of a squarefree monic polynomial over GF(p).
inline std::vector<Poly<Gfp>> berlekamp_squarefree(const Poly<Gfp>& f) {
    using P = Poly<Gfp>;
    const std::uint32_t p = f.tag();
    std::vector<P> todo{f.monic()}, done;
    while (!todo.empty()) {
        P g = todo.back();
        todo.pop_back();
        if (g.degree() <= 1) {
            done.push_back(g);
            continue;
        }
        const int n = g.degree();
        // Berlekamp subalgebra: kernel of (Frobenius - id) on GF(p)[x]/(g)
        Matrix<Gfp> q(n, n, p);
        for (int j = 0; j < n; ++j) {
            P xj = P::x(p).pow_mod(static_cast<std::uint64_t>(j) * p, g);
            for (int i = 0; i < n; ++i) q.at(i, j) = xj.coeff(i);
            q.at(j, j) = q.at(j, j) - Gfp(1, p);
        }
        auto ker = q.kernel();
        if (ker.size() <= 1) {
            done.push_back(g);
            continue;
        }
        // pick the first non-constant kernel element (deterministic)
        P v(p);
        for (const auto& kv : ker) {
            P cand(p, kv);
            if (cand.degree() >= 1) { v = cand; break; }
        }
        bool split = false;
        for (std::uint32_t c = 0; c < p && !split; ++c) {
            P h = gcd(g, v - P(p, {Gfp(c, p)}));
            if (h.degree() >= 1 && h.degree() < g.degree()) {
                todo.push_back(h);
                todo.push_back((g / h).monic());
                split = true;
            }
        }
        if (!split) done.push_back(g); // should not happen for squarefree g
    }
    return done;
}

inline std::vector<std::pair<Poly<Gfp>, int>> squarefree_decomposition(const Poly<Gfp>& f) {
    using P = Poly<Gfp>;
    const std::uint32_t p = f.tag();
    std::vector<std::pair<P, int>> out;
    if (f.degree() <= 0) return out;
    P g = f.monic();
    P d = g.derivative();
    if (d.is_zero()) {
        // g = h(x^p); over GF(p) the coefficients are fixed by Frobenius
        std::vector<Gfp> hc;
        for (int i = 0; i <= g.degree(); i += static_cast<int>(p)) hc.push_back(g.coeff(i));
        auto inner = squarefree_decomposition(P(p, hc));
        for (auto& [q, m] : inner) out.emplace_back(q, m * static_cast<int>(p));
        return out;
    }
    P c = gcd(g, d);
    P w = (g / c).monic(); // product of squarefree factors with p∤multiplicity
    int i = 1;
    while (w.degree() > 0) {
        P y = gcd(w, c);
        P piece = (w / y).monic(); // factors of multiplicity exactly i
        if (piece.degree() > 0) out.emplace_back(piece, i);
        w = y;
        c = (c / y).monic();
        ++i;
    }
    if (c.degree() > 0) {
        // remaining part is a p-th power; the recursion extracts the root and
        // scales the multiplicities by p
        for (auto& [q, m] : squarefree_decomposition(c)) out.emplace_back(q, m);
    }
    return out;
}

/// Full factorization into monic irreducibles with multiplicities over GF(p).
/// The product of factor^multiplicity reproduces the input up to its leading
/// unit.
inline std::vector<std::pair<Poly<Gfp>, int>> factor_squarefree_gfp(const Poly<Gfp>& f) {
    std::vector<std::pair<Poly<Gfp>, int>> out;
    if (f.degree() <= 0) return out;
    for (const auto& [part, mult] : squarefree_decomposition(f))
        for (const auto& irr : berlekamp_squarefree(part)) out.emplace_back(irr, mult);
    return out;
}

} // namespace pba
