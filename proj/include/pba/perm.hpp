#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace pba {

/// Permutation of {0..n-1} as an image table, composed as functions:
/// (a * b)(i) = a(b(i)).
class Perm {
public:
    Perm() = default;
    explicit Perm(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 0); }
    explicit Perm(std::vector<int> img) : img_(std::move(img)) {}

    int n() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }

    friend Perm operator*(const Perm& a, const Perm& b) {
        std::vector<int> r(a.img_.size());
        for (size_t i = 0; i < r.size(); ++i) r[i] = a.img_[b.img_[i]];
        return Perm(std::move(r));
    }

    Perm inverse() const {
        std::vector<int> r(img_.size());
        for (size_t i = 0; i < img_.size(); ++i) r[img_[i]] = static_cast<int>(i);
        return Perm(std::move(r));
    }

    /// Coxeter length = inversion count.
    int length() const {
        int inv = 0;
        for (size_t i = 0; i < img_.size(); ++i)
            for (size_t j = i + 1; j < img_.size(); ++j)
                if (img_[i] > img_[j]) ++inv;
        return inv;
    }

    bool is_identity() const {
        for (size_t i = 0; i < img_.size(); ++i)
            if (img_[i] != static_cast<int>(i)) return false;
        return true;
    }

    static Perm transposition(int n, int i) { // swaps i, i+1 (0-based)
        Perm p(n);
        std::swap(p.img_[i], p.img_[i + 1]);
        return p;
    }

    friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
    friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

private:
    std::vector<int> img_;
};

inline std::vector<Perm> all_perms(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Perm> out;
    do {
        out.push_back(Perm(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

} // namespace pba
