#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace pba {

/// Integer partition: weakly decreasing positive parts, empty = the zero
/// partition. Immutable after construction.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }           // number of boxes
    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int i) const {                      // 0-based row, 0 past the end
        return (i >= 0 && i < rows()) ? parts_[i] : 0;
    }
    bool empty() const { return parts_.empty(); }

    Partition transpose() const;

    /// true iff the box (row, col) (0-based) lies in the diagram
    bool contains(int row, int col) const { return col < part(row); }

    std::string str() const; // "(4,4,2,1)" or "()" for the empty partition

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    /// canonical total order: larger size first, then lexicographically
    /// ascending parts, a linear extension of the standard partial order.
    friend bool operator<(const Partition& a, const Partition& b) {
        if (a.size_ != b.size_) return a.size_ > b.size_;
        return a.parts_ < b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Partial order used to stratify the standard basis: a <= b iff |a| > |b|,
/// or the sizes agree and every partial sum of a is bounded by that of b
/// (the dominance order on equal sizes).
bool dominance_leq(const Partition& a, const Partition& b);

/// Contents j - i per box, reduced mod p when p > 0. Row-major grid.
std::vector<std::vector<std::int64_t>> residue_grid(const Partition& lam, std::int64_t p);

/// p-core via beta-numbers on a p-runner abacus (p >= 2).
Partition p_core(const Partition& lam, int p);
inline Partition two_core(const Partition& lam) { return p_core(lam, 2); }

/// Literal rim-hook stripping with a caller-chosen removal order; the test
/// oracle for p_core. `pick(k)` selects among k removable rim p-hooks.
Partition p_core_by_removal(const Partition& lam, int p, const std::function<int(int)>& pick);

/// All partitions obtained by removing one rim p-hook.
std::vector<Partition> removable_rim_hooks(const Partition& lam, int p);

bool is_p_restricted(const Partition& lam, int p); // p = 0: always true
bool is_p_regular(const Partition& lam, int p);    // p = 0: always true

/// r for (r, r-1, ..., 1); 0 for the empty partition; -1 when not a staircase.
int staircase_index(const Partition& lam);
Partition staircase(int r);

std::vector<Partition> all_partitions(int n);
std::vector<Partition> partitions_with_parts_below(int n, int maxpart); // helper

/// Boxes that can be added/removed keeping a partition; (row, col) 0-based.
std::vector<std::pair<int, int>> addable_boxes(const Partition& lam);
std::vector<std::pair<int, int>> removable_boxes(const Partition& lam);
Partition add_box(const Partition& lam, int row);
Partition remove_box(const Partition& lam, int row);

/// The label set for size n: partitions of t for 0 <= t <= n with n - t even.
struct LambdaSet {
    int n = 0;
    std::vector<Partition> members; // canonical order
};
LambdaSet enumerate_lambda(int n);
/// The subset labelling the simple modules: p-restricted, and the empty
/// partition is excluded when n is even.
LambdaSet enumerate_lambda_prime(int n, int p);

/// Number of standard tableaux (hook length formula, exact).
std::uint64_t tableau_count(const Partition& lam);

/// Standard tableau: rows/columns strictly increasing, entries 1..n.
struct StandardTableau {
    Partition shape;
    std::vector<std::vector<int>> rows; // entries

    int entry(int r, int c) const { return rows[r][c]; }
};
std::vector<StandardTableau> standard_tableaux(const Partition& lam);

/// Parse "(4,4,2,1)", "[4,4,2,1]" or "4,4,2,1"; "()" and "" give the empty
/// partition. Throws std::invalid_argument on malformed input.
Partition parse_partition(const std::string& text);

} // namespace pba
