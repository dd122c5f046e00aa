#include "pba/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pba {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::transpose() const {
    if (parts_.empty()) return Partition();
    std::vector<int> t(parts_[0], 0);
    for (int col = 0; col < parts_[0]; ++col)
        for (int row = 0; row < rows(); ++row)
            if (parts_[row] > col) ++t[col];
    return Partition(std::move(t));
}

std::string Partition::str() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

bool dominance_leq(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    int pa = 0, pb = 0;
    int rows = std::max(a.rows(), b.rows());
    for (int i = 0; i < rows; ++i) {
        pa += a.part(i);
        pb += b.part(i);
        if (pa > pb) return false;
    }
    return true;
}

std::vector<std::vector<std::int64_t>> residue_grid(const Partition& lam, std::int64_t p) {
    std::vector<std::vector<std::int64_t>> grid;
    for (int i = 0; i < lam.rows(); ++i) {
        std::vector<std::int64_t> row;
        for (int j = 0; j < lam.part(i); ++j) {
            std::int64_t c = j - i;
            if (p > 0) {
                c %= p;
                if (c < 0) c += p;
            }
            row.push_back(c);
        }
        grid.push_back(std::move(row));
    }
    return grid;
}

Partition p_core(const Partition& lam, int p) {
    if (p < 2) throw std::invalid_argument("p_core: p must be >= 2");
    const int k = lam.rows();
    if (k == 0) return Partition();
    // beta numbers lam_i + (k - 1 - i) for 0-based i, then slide each runner
    std::vector<long long> beta(k);
    for (int i = 0; i < k; ++i) beta[i] = lam.part(i) + (k - 1 - i);
    std::vector<int> runner_count(p, 0);
    for (long long b : beta) ++runner_count[b % p];
    std::vector<long long> packed;
    for (int r = 0; r < p; ++r)
        for (int j = 0; j < runner_count[r]; ++j) packed.push_back(r + static_cast<long long>(p) * j);
    std::sort(packed.begin(), packed.end(), std::greater<>());
    std::vector<int> parts(k);
    for (int i = 0; i < k; ++i) parts[i] = static_cast<int>(packed[i] - (k - 1 - i));
    return Partition(std::move(parts));
}

std::vector<Partition> removable_rim_hooks(const Partition& lam, int p) {
    std::vector<Partition> out;
    // a rim p-hook removal corresponds to a beta number b with b - p >= 0 not
    // already a beta number; enumerate via hook lengths instead (clearer)
    const Partition t = lam.transpose();
    for (int i = 0; i < lam.rows(); ++i) {
        for (int j = 0; j < lam.part(i); ++j) {
            int arm = lam.part(i) - (j + 1);
            int leg = t.part(j) - (i + 1);
            if (arm + leg + 1 != p) continue;
            // strip the rim hook between diagonals j - i and (arm side);
            // effect on rows: rows i..i+leg get shortened along the rim
            std::vector<int> parts = lam.parts();
            // standard rim-hook removal: row r in [i, i+leg] becomes
            // lam_{r+1} - 1 for r < i+leg, and the last row gets j
            for (int r = i; r < i + leg; ++r) parts[r] = lam.part(r + 1) - 1;
            parts[i + leg] = j;
            // re-normalize (strip zeros, still weakly decreasing by theory)
            std::vector<int> norm;
            for (int v : parts)
                if (v > 0) norm.push_back(v);
            out.emplace_back(std::move(norm));
        }
    }
    return out;
}

Partition p_core_by_removal(const Partition& lam, int p, const std::function<int(int)>& pick) {
    Partition cur = lam;
    for (;;) {
        auto hooks = removable_rim_hooks(cur, p);
        if (hooks.empty()) return cur;
        int idx = pick(static_cast<int>(hooks.size()));
        cur = hooks[idx];
    }
}

bool is_p_restricted(const Partition& lam, int p) {
    if (p == 0) return true;
    for (int i = 0; i < lam.rows(); ++i)
        if (lam.part(i) - lam.part(i + 1) >= p) return false;
    return true;
}

bool is_p_regular(const Partition& lam, int p) {
    if (p == 0) return true;
    return is_p_restricted(lam.transpose(), p);
}

int staircase_index(const Partition& lam) {
    int r = lam.rows();
    for (int i = 0; i < r; ++i)
        if (lam.part(i) != r - i) return -1;
    return r;
}

Partition staircase(int r) {
    std::vector<int> parts;
    for (int i = r; i >= 1; --i) parts.push_back(i);
    return Partition(std::move(parts));
}

static void gen_partitions(int n, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int next = std::min(n, maxpart); next >= 1; --next) {
        cur.push_back(next);
        gen_partitions(n - next, next, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, n, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> partitions_with_parts_below(int n, int maxpart) {
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, maxpart, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<int, int>> addable_boxes(const Partition& lam) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i <= lam.rows(); ++i)
        if (i == 0 || lam.part(i) < lam.part(i - 1)) out.emplace_back(i, lam.part(i));
    return out;
}

std::vector<std::pair<int, int>> removable_boxes(const Partition& lam) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < lam.rows(); ++i)
        if (lam.part(i) > lam.part(i + 1)) out.emplace_back(i, lam.part(i) - 1);
    return out;
}

Partition add_box(const Partition& lam, int row) {
    std::vector<int> parts = lam.parts();
    if (row == lam.rows())
        parts.push_back(1);
    else
        ++parts[row];
    return Partition(std::move(parts));
}

Partition remove_box(const Partition& lam, int row) {
    std::vector<int> parts = lam.parts();
    --parts[row];
    return Partition(std::move(parts));
}

LambdaSet enumerate_lambda(int n) {
    LambdaSet out;
    out.n = n;
    for (int t = n; t >= 0; t -= 2)
        for (auto& lam : all_partitions(t)) out.members.push_back(lam);
    std::sort(out.members.begin(), out.members.end());
    return out;
}

LambdaSet enumerate_lambda_prime(int n, int p) {
    LambdaSet out;
    out.n = n;
    for (const auto& lam : enumerate_lambda(n).members) {
        if (!is_p_restricted(lam, p)) continue;
        if (n % 2 == 0 && lam.empty()) continue;
        out.members.push_back(lam);
    }
    return out;
}

std::uint64_t tableau_count(const Partition& lam) {
    if (lam.empty()) return 1;
    if (lam.size() > 30) throw std::invalid_argument("tableau_count: partition too large");
    const Partition t = lam.transpose();
    __int128 fact = 1, hooks = 1;
    for (int k = 1; k <= lam.size(); ++k) fact *= k;
    for (int i = 0; i < lam.rows(); ++i)
        for (int j = 0; j < lam.part(i); ++j)
            hooks *= (lam.part(i) - j) + (t.part(j) - i) - 1;
    return static_cast<std::uint64_t>(fact / hooks);
}

static void gen_tableaux(const Partition& shape, std::vector<std::vector<int>>& grid,
                         std::vector<int>& fill, int next, std::vector<StandardTableau>& out) {
    if (next > shape.size()) {
        out.push_back(StandardTableau{shape, grid});
        return;
    }
    for (int r = 0; r < shape.rows(); ++r) {
        int c = fill[r];
        if (c >= shape.part(r)) continue;
        if (r > 0 && fill[r - 1] <= c) continue; // column condition
        grid[r][c] = next;
        ++fill[r];
        gen_tableaux(shape, grid, fill, next + 1, out);
        --fill[r];
    }
}

std::vector<StandardTableau> standard_tableaux(const Partition& lam) {
    std::vector<StandardTableau> out;
    std::vector<std::vector<int>> grid;
    for (int i = 0; i < lam.rows(); ++i) grid.emplace_back(lam.part(i), 0);
    std::vector<int> fill(lam.rows(), 0);
    if (lam.empty()) {
        out.push_back(StandardTableau{lam, {}});
        return out;
    }
    gen_tableaux(lam, grid, fill, 1, out);
    return out;
}

Partition parse_partition(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (!s.empty() && (s.front() == '(' || s.front() == '[')) {
        if (s.size() < 2 || (s.back() != ')' && s.back() != ']'))
            throw std::invalid_argument("parse_partition: unbalanced brackets");
        s = s.substr(1, s.size() - 2);
    }
    std::vector<int> parts;
    if (!s.empty()) {
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) throw std::invalid_argument("parse_partition: empty component");
            size_t pos = 0;
            int v = std::stoi(item, &pos);
            if (pos != item.size()) throw std::invalid_argument("parse_partition: malformed part");
            parts.push_back(v);
        }
    }
    return Partition(std::move(parts));
}

} // namespace pba
