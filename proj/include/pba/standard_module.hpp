#pragma once

#include <memory>

#include "pba/algebra_element.hpp"
#include "pba/murphy.hpp"

namespace pba {

/// The explicit one-sided module attached to a shape: basis indexed by
/// non-crossing half-diagrams times standard tableaux, with the action
/// "compose, drop anything that loses propagating lines, push the residual
/// permutation into the tableau factor".
template <class K>
class StandardModule {
public:
    using Ops = FieldOps<K>;
    using Tag = typename Ops::Tag;

    StandardModule(int n, const Partition& lam, Tag tag, std::shared_ptr<MurphyContext<K>> ctx);

    int n() const { return n_; }
    const Partition& shape() const { return lam_; }
    Tag tag() const { return tag_; }
    int dim() const { return static_cast<int>(half_.size()) * specht_->dim(); }
    const std::vector<Diagram>& half_diagrams() const { return half_; }
    const SpechtModule<K>& specht() const { return *specht_; }

    int index_of(int half, int tab) const { return half * specht_->dim() + tab; }

    /// Action of a single diagram on one basis vector, as a sparse column.
    std::vector<std::pair<int, K>> act_diagram(const Diagram& d, int index) const;
    Matrix<K> action_matrix(const Diagram& d) const;
    Matrix<K> action_matrix(const Element<K>& a) const;
    Matrix<K> s_matrix(int i) const { return action_matrix(s_generator(n_, i)); }
    Matrix<K> e_matrix(int i) const { return action_matrix(e_generator(n_, i)); }

private:
    int n_;
    Partition lam_;
    Tag tag_;
    std::vector<Diagram> half_;
    std::shared_ptr<MurphyContext<K>> ctx_;
    std::unique_ptr<SpechtModule<K>> specht_;
};

template <class K>
StandardModule<K>::StandardModule(int n, const Partition& lam, Tag tag,
                                  std::shared_ptr<MurphyContext<K>> ctx)
    : n_(n), lam_(lam), tag_(tag), ctx_(std::move(ctx)) {
    const int t = lam.size();
    if (t > n || (n - t) % 2 != 0)
        throw std::domain_error("StandardModule: shape not in the label set");
    half_ = enumerate_noncrossing(n, t);
    specht_ = std::make_unique<SpechtModule<K>>(ctx_, lam);
}

template <class K>
std::vector<std::pair<int, K>> StandardModule<K>::act_diagram(const Diagram& d, int index) const {
    const int t = lam_.size();
    const int f = specht_->dim();
    const int half = index / f, tab = index % f;
    std::vector<std::pair<int, K>> out;
    SignedDiagram sd = compose_signed(d, half_[half]);
    if (sd.zero) return out;
    if (sd.d.prop_count() < t) return out;
    RectFactorization rf = factorize_rect(sd.d);
    int target = -1;
    for (size_t i = 0; i < half_.size(); ++i)
        if (half_[i] == rf.s) { target = static_cast<int>(i); break; }
    if (target < 0) throw std::logic_error("StandardModule: factorization left the basis");
    auto col = specht_->act_perm(rf.w, tab);
    for (int i = 0; i < f; ++i) {
        if (Ops::is_zero(col[i])) continue;
        K c = col[i];
        if (sd.sign < 0) c = -c;
        out.emplace_back(index_of(target, i), c);
    }
    return out;
}

template <class K>
Matrix<K> StandardModule<K>::action_matrix(const Diagram& d) const {
    Matrix<K> m(dim(), dim(), tag_);
    for (int j = 0; j < dim(); ++j)
        for (auto& [i, c] : act_diagram(d, j)) m.at(i, j) = m.at(i, j) + c;
    return m;
}

template <class K>
Matrix<K> StandardModule<K>::action_matrix(const Element<K>& a) const {
    if (a.r != n_ || a.s != n_) throw std::invalid_argument("StandardModule: element size mismatch");
    Matrix<K> m(dim(), dim(), tag_);
    for (const auto& [d, coeff] : a.terms)
        for (int j = 0; j < dim(); ++j)
            for (auto& [i, c] : act_diagram(d, j)) m.at(i, j) = m.at(i, j) + coeff * c;
    return m;
}

} // namespace pba
