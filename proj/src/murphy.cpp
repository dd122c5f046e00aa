#include "pba/murphy.hpp"

#include <stdexcept>

namespace pba {

namespace {

/// all permutations of the row stabilizer of the row-reading filling
template <class K>
GroupAlg<K> row_symmetrizer(const Partition& lam, int t, typename FieldOps<K>::Tag tag) {
    GroupAlg<K> x(t, tag);
    // block-wise permutations of the consecutive segments given by the parts
    std::vector<std::vector<int>> blocks;
    int start = 0;
    for (int i = 0; i < lam.rows(); ++i) {
        std::vector<int> blk(lam.part(i));
        std::iota(blk.begin(), blk.end(), start);
        start += lam.part(i);
        blocks.push_back(std::move(blk));
    }
    std::vector<int> img(t);
    std::iota(img.begin(), img.end(), 0);
    std::function<void(size_t)> rec = [&](size_t bi) {
        if (bi == blocks.size()) {
            x.add_term(Perm(img), FieldOps<K>::one(tag));
            return;
        }
        std::vector<int> perm = blocks[bi];
        std::sort(perm.begin(), perm.end());
        do {
            for (size_t k = 0; k < perm.size(); ++k) img[blocks[bi][k]] = perm[k];
            rec(bi + 1);
        } while (std::next_permutation(perm.begin(), perm.end()));
        for (size_t k = 0; k < blocks[bi].size(); ++k) img[blocks[bi][k]] = blocks[bi][k];
    };
    rec(0);
    return x;
}

} // namespace

template <class K>
Perm MurphyContext<K>::tableau_perm(const StandardTableau& tab) {
    // row-reading filling maps box -> k; the permutation sends k-1 (0-based)
    // to the tableau entry at that box minus one
    std::vector<int> img;
    for (const auto& row : tab.rows)
        for (int entry : row) img.push_back(entry - 1);
    return Perm(std::move(img));
}

template <class K>
MurphyContext<K>::MurphyContext(int t, Tag tag, int limit) : t_(t), tag_(tag) {
    if (t < 0) throw std::invalid_argument("MurphyContext: negative size");
    if (t > limit) throw std::length_error("MurphyContext: size exceeds the configured bound");
    perms_ = all_perms(t);
    dim_ = static_cast<int>(perms_.size());
    for (int i = 0; i < dim_; ++i) perm_index_.emplace(perms_[i], i);
    shapes_ = all_partitions(t);
    int col = 0;
    for (size_t si = 0; si < shapes_.size(); ++si) {
        tabs_.push_back(standard_tableaux(shapes_[si]));
        col_start_.push_back(col);
        offset_.push_back(elems_.size());
        const auto& tl = tabs_.back();
        GroupAlg<K> x = row_symmetrizer<K>(shapes_[si], t, tag);
        std::vector<Perm> d(tl.size());
        for (size_t a = 0; a < tl.size(); ++a) d[a] = tableau_perm(tl[a]);
        for (size_t a = 0; a < tl.size(); ++a) {
            // the row symmetrizer conjugated into place: left multiplication
            // moves the first tableau, right multiplication the second
            GroupAlg<K> left = GroupAlg<K>::from_perm(d[a], tag) * x;
            for (size_t b = 0; b < tl.size(); ++b) {
                elems_.push_back(left * GroupAlg<K>::from_perm(d[b].inverse(), tag));
                index_.push_back(MurphyIndex{static_cast<int>(si), static_cast<int>(a), static_cast<int>(b)});
                ++col;
            }
        }
    }
    if (static_cast<int>(index_.size()) != dim_)
        throw std::logic_error("MurphyContext: family size differs from the group order");
    Matrix<K> mat(dim_, dim_, tag);
    for (size_t c = 0; c < elems_.size(); ++c)
        for (const auto& [w, coeff] : elems_[c].terms) mat.at(perm_index_.at(w), static_cast<int>(c)) = coeff;
    solver_ = std::make_unique<LinSolver<K>>(mat);
    if (solver_->rank() != dim_) throw std::logic_error("MurphyContext: standard family is not a basis");
}

template <class K>
int MurphyContext<K>::shape_index(const Partition& lam) const {
    for (size_t i = 0; i < shapes_.size(); ++i)
        if (shapes_[i] == lam) return static_cast<int>(i);
    throw std::invalid_argument("MurphyContext: unknown shape");
}

template <class K>
std::vector<K> MurphyContext<K>::coordinates(const GroupAlg<K>& x) const {
    std::vector<K> vec(dim_, Ops::zero(tag_));
    for (const auto& [w, c] : x.terms) vec[perm_index_.at(w)] = c;
    auto sol = solver_->solve(vec);
    if (!sol) throw std::logic_error("MurphyContext: coordinate solve failed");
    return *sol;
}

template <class K>
SpechtModule<K>::SpechtModule(std::shared_ptr<MurphyContext<K>> ctx, const Partition& shape)
    : ctx_(std::move(ctx)), shape_(shape), shape_idx_(ctx_->shape_index(shape)) {}

template <class K>
std::vector<K> SpechtModule<K>::act_perm(const Perm& w, int index) const {
    const Matrix<K>& m = action_matrix(w);
    std::vector<K> col(dim(), Ops::zero(ctx_->tag()));
    for (int i = 0; i < dim(); ++i) col[i] = m.at(i, index);
    return col;
}

template <class K>
std::vector<K> SpechtModule<K>::act_perm_uncached(const Perm& w, int index) const {
    const auto& ctx = *ctx_;
    // w * m_{T, T0} expanded in the standard family; only the current shape
    // with second tableau T0 survives modulo the higher ideal
    GroupAlg<K> x = GroupAlg<K>::from_perm(w, ctx.tag()) * ctx.murphy_element(shape_idx_, index, 0);
    auto coords = ctx.coordinates(x);
    const int f = dim();
    std::vector<K> out(f, Ops::zero(ctx.tag()));
    for (int col = 0; col < ctx.basis_size(); ++col) {
        const K& c = coords[col];
        if (Ops::is_zero(c)) continue;
        const MurphyIndex& mi = ctx.basis_index(col);
        if (mi.shape == shape_idx_) {
            if (mi.t2 != 0)
                throw std::logic_error("SpechtModule: action left the chosen column");
            out[mi.t1] = c;
            continue;
        }
        // anything else must lie strictly higher in the dominance order
        if (!dominance_leq(shape_, ctx.shapes()[mi.shape]) || ctx.shapes()[mi.shape] == shape_)
            throw std::logic_error("SpechtModule: action escaped the ideal");
    }
    return out;
}

template <class K>
const Matrix<K>& SpechtModule<K>::action_matrix(const Perm& w) const {
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = cache_.find(w);
        if (it != cache_.end()) return it->second;
    }
    const int f = dim();
    Matrix<K> m(f, f, ctx_->tag());
    for (int j = 0; j < f; ++j) {
        auto col = act_perm_uncached(w, j);
        for (int i = 0; i < f; ++i) m.at(i, j) = col[i];
    }
    std::lock_guard<std::mutex> lock(cache_mutex_);
    return cache_.emplace(w, std::move(m)).first->second;
}

template <class K>
Matrix<K> SpechtModule<K>::generator_matrix(int i) const {
    return action_matrix(Perm::transposition(ctx_->t(), i));
}

template <class K>
Matrix<K> SpechtModule<K>::twisted_generator_matrix(int i) const {
    const auto& ctx = *ctx_;
    const int f = dim();
    const Perm s = Perm::transposition(ctx.t(), i);
    Matrix<K> m(f, f, ctx.tag());
    for (int j = 0; j < f; ++j) {
        // s * alpha(m_{T, T0}): coordinates in the twisted family equal the
        // plain coordinates of the element pulled back through the twist
        GroupAlg<K> x = GroupAlg<K>::from_perm(s, ctx.tag()) *
                        ctx.murphy_element(shape_idx_, j, 0).alpha();
        auto coords = ctx.coordinates(x.alpha());
        for (int col = 0; col < ctx.basis_size(); ++col) {
            const K& c = coords[col];
            if (Ops::is_zero(c)) continue;
            const MurphyIndex& mi = ctx.basis_index(col);
            if (mi.shape == shape_idx_ && mi.t2 == 0) m.at(mi.t1, j) = c;
        }
    }
    return m;
}

template <class K>
Matrix<K> SpechtModule<K>::gram() const {
    const auto& ctx = *ctx_;
    const int f = dim();
    Matrix<K> g(f, f, ctx.tag());
    for (int a = 0; a < f; ++a) {
        // m_{T0, Ta} * m_{Tb, T0} = G(a, b) m_{T0, T0} modulo higher shapes
        GroupAlg<K> left = ctx.murphy_element(shape_idx_, 0, a);
        for (int b = 0; b < f; ++b) {
            GroupAlg<K> prod = left * ctx.murphy_element(shape_idx_, b, 0);
            auto coords = ctx.coordinates(prod);
            for (int col = 0; col < ctx.basis_size(); ++col) {
                const K& c = coords[col];
                if (Ops::is_zero(c)) continue;
                const MurphyIndex& mi = ctx.basis_index(col);
                if (mi.shape == shape_idx_) {
                    if (mi.t1 != 0 || mi.t2 != 0)
                        throw std::logic_error("SpechtModule: pairing landed off the corner");
                    g.at(a, b) = c;
                }
            }
        }
    }
    return g;
}

template class MurphyContext<Gfp>;
template class MurphyContext<Rat>;
template class SpechtModule<Gfp>;
template class SpechtModule<Rat>;

} // namespace pba
