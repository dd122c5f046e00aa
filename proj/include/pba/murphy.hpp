#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "pba/field.hpp"
#include "pba/matrix.hpp"
#include "pba/partition.hpp"
#include "pba/perm.hpp"

namespace pba {

/// Element of the symmetric group algebra on t letters.
template <class K>
struct GroupAlg {
    using Ops = FieldOps<K>;
    using Tag = typename Ops::Tag;

    int t = 0;
    Tag tag{};
    std::map<Perm, K> terms;

    GroupAlg() = default;
    GroupAlg(int t_, Tag tag_) : t(t_), tag(tag_) {}

    static GroupAlg from_perm(const Perm& w, Tag tag) {
        GroupAlg g(w.n(), tag);
        g.terms.emplace(w, Ops::one(tag));
        return g;
    }

    void add_term(const Perm& w, const K& c) {
        if (Ops::is_zero(c)) return;
        auto it = terms.find(w);
        if (it == terms.end()) {
            terms.emplace(w, c);
        } else {
            it->second = it->second + c;
            if (Ops::is_zero(it->second)) terms.erase(it);
        }
    }

    friend GroupAlg operator*(const GroupAlg& a, const GroupAlg& b) {
        GroupAlg out(a.t, a.tag);
        for (const auto& [w1, c1] : a.terms)
            for (const auto& [w2, c2] : b.terms) out.add_term(w1 * w2, c1 * c2);
        return out;
    }
    friend GroupAlg operator+(const GroupAlg& a, const GroupAlg& b) {
        GroupAlg out = a;
        for (const auto& [w, c] : b.terms) out.add_term(w, c);
        return out;
    }

    /// inverse anti-automorphism, extended linearly
    GroupAlg iota() const {
        GroupAlg out(t, tag);
        for (const auto& [w, c] : terms) out.add_term(w.inverse(), c);
        return out;
    }
    /// sign twist w -> (-1)^len(w) w
    GroupAlg alpha() const {
        GroupAlg out(t, tag);
        for (const auto& [w, c] : terms) out.add_term(w, w.length() % 2 ? -K(c) : c);
        return out;
    }
};

/// Index of one basis element of the two-sided standard family for the group
/// algebra: shape plus a pair of standard tableaux.
struct MurphyIndex {
    int shape;    // index into shapes()
    int t1, t2;   // indices into tableaux(shape)
};

/// The full standard basis of the group algebra of S_t built from the row
/// symmetrizer elements, with a one-time factorization for expressing
/// arbitrary group algebra elements in it.
template <class K>
class MurphyContext {
public:
    using Ops = FieldOps<K>;
    using Tag = typename Ops::Tag;

    MurphyContext(int t, Tag tag, int limit = 7);

    int t() const { return t_; }
    Tag tag() const { return tag_; }
    const std::vector<Partition>& shapes() const { return shapes_; }
    const std::vector<StandardTableau>& tableaux(int shape) const { return tabs_[shape]; }
    int shape_index(const Partition& lam) const;

    /// d(T): the permutation carrying the row-reading filling to T.
    static Perm tableau_perm(const StandardTableau& tab);

    const GroupAlg<K>& murphy_element(int shape, int t1, int t2) const {
        return elems_[offset_[shape] + static_cast<size_t>(t1) * tabs_[shape].size() + t2];
    }

    int dim() const { return dim_; } // t!
    int basis_size() const { return static_cast<int>(index_.size()); }
    const MurphyIndex& basis_index(int column) const { return index_[column]; }
    int column_of(int shape, int t1, int t2) const {
        return col_start_[shape] + t1 * static_cast<int>(tabs_[shape].size()) + t2;
    }

    /// Coordinates of an arbitrary element in the standard family.
    std::vector<K> coordinates(const GroupAlg<K>& x) const;

    const std::vector<Perm>& perms() const { return perms_; }
    int perm_index(const Perm& w) const { return perm_index_.at(w); }

private:
    int t_;
    Tag tag_;
    int dim_;
    std::vector<Perm> perms_;
    std::map<Perm, int> perm_index_;
    std::vector<Partition> shapes_;
    std::vector<std::vector<StandardTableau>> tabs_;
    std::vector<GroupAlg<K>> elems_;
    std::vector<size_t> offset_;
    std::vector<int> col_start_;
    std::vector<MurphyIndex> index_;
    std::unique_ptr<LinSolver<K>> solver_;
};

/// Explicit left module over the group algebra cut out by one shape: basis
/// indexed by the standard tableaux, action through the standard family.
template <class K>
class SpechtModule {
public:
    using Ops = FieldOps<K>;
    using Tag = typename Ops::Tag;

    SpechtModule(std::shared_ptr<MurphyContext<K>> ctx, const Partition& shape);

    int dim() const { return static_cast<int>(ctx_->tableaux(shape_idx_).size()); }
    const Partition& shape() const { return shape_; }
    const MurphyContext<K>& context() const { return *ctx_; }

    /// Column of the action of w on basis vector index.
    std::vector<K> act_perm(const Perm& w, int index) const;
    const Matrix<K>& action_matrix(const Perm& w) const; // cached
    Matrix<K> generator_matrix(int i) const; // adjacent transposition (i, i+1), 0-based i

    /// Action of the adjacent transposition on the sign-twisted family,
    /// computed through the twist automorphism.
    Matrix<K> twisted_generator_matrix(int i) const;

    /// Gram matrix of the standard bilinear pairing on the module.
    Matrix<K> gram() const;

private:
    std::vector<K> act_perm_uncached(const Perm& w, int index) const;

    std::shared_ptr<MurphyContext<K>> ctx_;
    Partition shape_;
    int shape_idx_;
    mutable std::mutex cache_mutex_;
    mutable std::map<Perm, Matrix<K>> cache_;
};

extern template class MurphyContext<Gfp>;
extern template class MurphyContext<Rat>;
extern template class SpechtModule<Gfp>;
extern template class SpechtModule<Rat>;

} // namespace pba
