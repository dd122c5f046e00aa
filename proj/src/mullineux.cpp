#include "pba/mullineux.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "pba/gfp.hpp"

namespace pba {

RimStep strip_p_rim(const Partition& lam, int p) {
    if (lam.empty()) return RimStep{lam, 0, 0};
    const int k = lam.rows();
    // rim = one box per content, from content lam_1 - 1 down to -(k - 1);
    // list (row, col) 0-based in that order (rows weakly increase)
    std::vector<std::pair<int, int>> rim;
    for (int c = lam.part(0) - 1; c >= -(k - 1); --c) {
        // deepest row whose box on diagonal c exists: row i with col = c + i
        int row = -1;
        for (int i = std::max(0, -c); i < k; ++i) {
            int col = c + i;
            if (col >= 0 && col < lam.part(i)) row = i;
        }
        rim.emplace_back(row, c + row);
    }
    const int L = static_cast<int>(rim.size());
    std::vector<char> selected(L, 0);
    int idx = 0, removed = 0;
    while (idx < L) {
        int take = std::min(p, L - idx);
        for (int j = 0; j < take; ++j) selected[idx + j] = 1;
        removed += take;
        int last_row = rim[idx + take - 1].first;
        // next segment starts at the first rim box strictly below last_row
        idx += take;
        while (idx < L && rim[idx].first <= last_row) ++idx;
    }
    std::vector<int> parts = lam.parts();
    for (int i = 0; i < L; ++i)
        if (selected[i]) --parts[rim[i].first];
    std::vector<int> norm;
    for (int v : parts)
        if (v > 0) norm.push_back(v);
    // stripping the p-rim always leaves a partition
    for (size_t i = 1; i < norm.size(); ++i)
        if (norm[i] > norm[i - 1]) throw std::logic_error("strip_p_rim: stripped shape is not a partition");
    return RimStep{Partition(std::move(norm)), removed, k};
}

std::vector<std::pair<int, int>> mullineux_symbol(const Partition& lam, int p) {
    std::vector<std::pair<int, int>> sym;
    Partition cur = lam;
    while (!cur.empty()) {
        RimStep st = strip_p_rim(cur, p);
        sym.emplace_back(st.removed, st.rows);
        cur = st.rest;
    }
    return sym;
}

Partition mullineux_regular(const Partition& lam, int p) {
    if (p < 2) throw std::invalid_argument("mullineux_regular: requires p >= 2");
    if (!is_p_regular(lam, p)) throw std::domain_error("mullineux_regular: partition is not p-regular");
    if (lam.empty()) return lam;
    auto sym = mullineux_symbol(lam, p);
    for (auto& [a, r] : sym) {
        int eps = (a % p == 0) ? 0 : 1;
        r = a - r + eps;
    }
    // reconstruct: the transformed symbol determines a unique p-regular
    // partition of the same size; match against the candidate table
    static std::map<std::pair<int, int>, std::map<std::vector<std::pair<int, int>>, Partition>> cache;
    auto key = std::make_pair(lam.size(), p);
    auto it = cache.find(key);
    if (it == cache.end()) {
        std::map<std::vector<std::pair<int, int>>, Partition> table;
        for (const auto& mu : all_partitions(lam.size()))
            if (is_p_regular(mu, p)) table[mullineux_symbol(mu, p)] = mu;
        it = cache.emplace(key, std::move(table)).first;
    }
    auto hit = it->second.find(sym);
    if (hit == it->second.end())
        throw std::logic_error("mullineux_regular: transformed symbol matches no p-regular partition");
    return hit->second;
}

Partition mullineux(const Partition& lam, int p) {
    if (p == 0) return lam.transpose();
    if (!is_odd_prime(p)) throw std::invalid_argument("mullineux: p must be 0 or an odd prime");
    if (!is_p_restricted(lam, p)) throw std::domain_error("mullineux: partition is not p-restricted");
    return mullineux_regular(lam.transpose(), p).transpose();
}

std::vector<PartitionPath> enumerate_paths(int n, const Partition& lam) {
    if (n < 1) throw std::domain_error("enumerate_paths: n must be >= 1");
    int t = lam.size();
    if (t > n || (n - t) % 2 != 0) throw std::domain_error("enumerate_paths: target not in the label set");
    std::vector<PartitionPath> out;
    PartitionPath cur{Partition({1})};
    std::function<void()> rec = [&]() {
        int step = static_cast<int>(cur.size());
        if (step == n) {
            if (cur.back() == lam) out.push_back(cur);
            return;
        }
        const Partition now = cur.back(); // copy: the walk reallocates `cur`
        // prune on box-count distance and parity of the remaining steps
        int rest = n - step;
        int diff = std::abs(now.size() - lam.size());
        if (diff > rest || (rest - diff) % 2 != 0) return;
        for (auto [row, col] : addable_boxes(now)) {
            (void)col;
            cur.push_back(add_box(now, row));
            rec();
            cur.pop_back();
        }
        for (auto [row, col] : removable_boxes(now)) {
            (void)col;
            cur.push_back(remove_box(now, row));
            rec();
            cur.pop_back();
        }
    };
    rec();
    return out;
}

std::vector<std::int64_t> path_vector(const PartitionPath& path, std::int64_t p) {
    std::vector<std::int64_t> c;
    for (size_t i = 1; i < path.size(); ++i) {
        const Partition &prev = path[i - 1], &next = path[i];
        // locate the changed box
        int row = -1;
        bool added = next.size() > prev.size();
        const Partition &big = added ? next : prev, &small = added ? prev : next;
        for (int r = 0; r < big.rows(); ++r)
            if (big.part(r) != small.part(r)) { row = r; break; }
        int col = big.part(row) - 1;
        std::int64_t res = col - row + (added ? 0 : 1);
        if (p > 0) {
            res %= p;
            if (res < 0) res += p;
        }
        c.push_back(res);
    }
    return c;
}

} // namespace pba
