#pragma once

#include <memory>

#include "pba/standard_module.hpp"

namespace pba {

/// The stratified basis of the whole diagram algebra on n strands: for every
/// shape in the label set, half-diagram pairs wrapped around a standard
/// group-algebra element. Provides coordinates of arbitrary elements, the
/// triangularity data and the standard bilinear forms.
template <class K>
class StandardBasis {
public:
    using Ops = FieldOps<K>;
    using Tag = typename Ops::Tag;

    struct Label {
        int shape;        // index into lambdas()
        int s1, t1;       // row label: half diagram and tableau
        int s2, t2;       // column label
    };

    StandardBasis(int n, Tag tag, int limit = 7);

    int n() const { return n_; }
    const std::vector<Partition>& lambdas() const { return lambdas_; }
    int lambda_index(const Partition& lam) const;
    const std::vector<Diagram>& half_diagrams(int shape) const { return half_[shape]; }
    int tableau_dim(int shape) const { return fdim_[shape]; }

    const std::vector<Diagram>& diagram_basis() const { return diagrams_; }
    int size() const { return static_cast<int>(elements_.size()); }
    const Element<K>& element(int column) const { return elements_[column]; }
    const Label& label(int column) const { return labels_[column]; }
    int column_of(int shape, int s1, int t1, int s2, int t2) const;

    /// Coordinates of an element of the algebra in this basis.
    std::vector<K> coordinates(const Element<K>& x) const;

    /// Gram matrix of the standard pairing on the module of one shape:
    /// G[(s1,t1)][(s2,t2)] from corner products modulo the higher ideal.
    Matrix<K> gram(const Partition& lam) const;
    int gram_rank(const Partition& lam) const { return gram(lam).rank(); }

private:
    int n_;
    Tag tag_;
    std::vector<Partition> lambdas_;
    std::vector<std::vector<Diagram>> half_;
    std::vector<int> fdim_;
    std::vector<std::vector<StandardTableau>> tabs_;
    std::shared_ptr<MurphyContext<K>> ctx_for_size_[16]; // contexts per |shape|
    std::vector<Diagram> diagrams_;
    std::map<Diagram, int> diagram_index_;
    std::vector<Element<K>> elements_;
    std::vector<Label> labels_;
    std::vector<int> col_start_;
    std::unique_ptr<LinSolver<K>> solver_;
};

template <class K>
StandardBasis<K>::StandardBasis(int n, Tag tag, int limit) : n_(n), tag_(tag) {
    if (n < 0 || n > 15) throw std::length_error("StandardBasis: size out of the supported range");
    lambdas_ = enumerate_lambda(n).members;
    diagrams_ = enumerate_diagrams(n, n);
    for (size_t i = 0; i < diagrams_.size(); ++i) diagram_index_.emplace(diagrams_[i], static_cast<int>(i));

    for (size_t si = 0; si < lambdas_.size(); ++si) {
        const Partition& lam = lambdas_[si];
        const int t = lam.size();
        if (!ctx_for_size_[t]) ctx_for_size_[t] = std::make_shared<MurphyContext<K>>(t, tag, limit);
        auto& ctx = *ctx_for_size_[t];
        half_.push_back(enumerate_noncrossing(n, t));
        tabs_.push_back(standard_tableaux(lam));
        fdim_.push_back(static_cast<int>(tabs_.back().size()));
        col_start_.push_back(static_cast<int>(elements_.size()));
        const auto& half = half_.back();
        const int f = fdim_.back();
        const int shape_in_ctx = ctx.shape_index(lam);
        for (size_t a = 0; a < half.size(); ++a)
            for (int ta = 0; ta < f; ++ta)
                for (size_t b = 0; b < half.size(); ++b)
                    for (int tb = 0; tb < f; ++tb) {
                        // S1 * m * S2^op, with the group element as signed
                        // permutation diagrams in the middle
                        const GroupAlg<K>& m = ctx.murphy_element(shape_in_ctx, ta, tb);
                        Element<K> mid(t, t, tag);
                        for (const auto& [w, c] : m.terms) mid.add_term(Diagram::from_perm(w), c);
                        Element<K> s1 = Element<K>::from_diagram(half[a], tag);
                        Element<K> s2 = Element<K>::from_diagram(half[b].flipped(), tag);
                        elements_.push_back(s1 * mid * s2);
                        labels_.push_back(Label{static_cast<int>(si), static_cast<int>(a), ta,
                                                static_cast<int>(b), tb});
                    }
    }
    if (elements_.size() != diagrams_.size())
        throw std::logic_error("StandardBasis: family size differs from the diagram count");
    Matrix<K> mat(static_cast<int>(diagrams_.size()), static_cast<int>(elements_.size()), tag);
    for (size_t c = 0; c < elements_.size(); ++c)
        for (const auto& [d, coeff] : elements_[c].terms)
            mat.at(diagram_index_.at(d), static_cast<int>(c)) = coeff;
    solver_ = std::make_unique<LinSolver<K>>(mat);
    if (solver_->rank() != static_cast<int>(diagrams_.size()))
        throw std::logic_error("StandardBasis: family is not a basis");
}

template <class K>
int StandardBasis<K>::lambda_index(const Partition& lam) const {
    for (size_t i = 0; i < lambdas_.size(); ++i)
        if (lambdas_[i] == lam) return static_cast<int>(i);
    throw std::invalid_argument("StandardBasis: shape not in the label set");
}

template <class K>
int StandardBasis<K>::column_of(int shape, int s1, int t1, int s2, int t2) const {
    const int h = static_cast<int>(half_[shape].size());
    const int f = fdim_[shape];
    return col_start_[shape] + ((s1 * f + t1) * h + s2) * f + t2;
}

template <class K>
std::vector<K> StandardBasis<K>::coordinates(const Element<K>& x) const {
    std::vector<K> vec(diagrams_.size(), Ops::zero(tag_));
    for (const auto& [d, c] : x.terms) vec[diagram_index_.at(d)] = c;
    auto sol = solver_->solve(vec);
    if (!sol) throw std::logic_error("StandardBasis: coordinate solve failed");
    return *sol;
}

template <class K>
Matrix<K> StandardBasis<K>::gram(const Partition& lam) const {
    const int shape = lambda_index(lam);
    const int h = static_cast<int>(half_[shape].size());
    const int f = fdim_[shape];
    const int dim = h * f;
    const int corner = column_of(shape, 0, 0, 0, 0);
    Matrix<K> g(dim, dim, tag_);
    for (int a = 0; a < dim; ++a) {
        // row label runs over the right index of the first factor
        const Element<K>& left = element(column_of(shape, 0, 0, a / f, a % f));
        for (int b = 0; b < dim; ++b) {
            const Element<K>& right = element(column_of(shape, b / f, b % f, 0, 0));
            auto coords = coordinates(left * right);
            for (int col = 0; col < size(); ++col) {
                if (Ops::is_zero(coords[col])) continue;
                const Label& lb = labels_[col];
                if (lb.shape == shape) {
                    if (col != corner)
                        throw std::logic_error("StandardBasis: corner product not concentrated");
                    g.at(a, b) = coords[col];
                } else if (!dominance_leq(lam, lambdas_[lb.shape])) {
                    throw std::logic_error("StandardBasis: product escaped the ideal");
                }
            }
        }
    }
    return g;
}

} // namespace pba
