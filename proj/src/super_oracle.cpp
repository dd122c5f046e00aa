#include "pba/super_oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace pba {
namespace super {

namespace {

inline int parity(int idx, int m) { return idx >= m ? 1 : 0; }

// odd antisymmetric pairing: beta(a_i, b_i) = 1 = -beta(b_i, a_i), zero
// elsewhere; its copairing below is symmetric, so a twisted cup is free and
// a twisted cap costs the sign, matching the symmetric diamond marking
inline int pairing(int x, int y, int m) {
    if (x % m != y % m || parity(x, m) == parity(y, m)) return 0;
    return parity(x, m) == 0 ? 1 : -1;
}

struct PartialWord {
    std::vector<std::int8_t> slot; // -1 empty, else basis index
    std::int64_t coeff = 1;
};

} // namespace

SparseVec apply_diagram(const Diagram& d, const Word& w, int m) {
    const int r = d.r, s = d.s;
    if (static_cast<int>(w.size()) != s) throw std::invalid_argument("apply_diagram: word length mismatch");

    std::int64_t coeff = 1;
    std::vector<char> alive(s, 1);
    std::vector<std::int8_t> val(w);

    // caps, smallest marking first (leftmost node ascending); the pairing is
    // applied next to the left leg, the right leg travels left across the
    // strands in between
    auto caps = d.caps();
    std::sort(caps.begin(), caps.end());
    for (auto [i, j] : caps) {
        int prefix = 0, between = 0;
        for (int l = 0; l < i; ++l)
            if (alive[l]) prefix += parity(val[l], m);
        for (int l = i + 1; l < j; ++l)
            if (alive[l]) between += parity(val[l], m);
        int beta = pairing(val[i], val[j], m);
        if (beta == 0) return {};
        coeff *= beta;
        if (prefix & 1) coeff = -coeff;                          // odd pairing passes the prefix
        if ((parity(val[j], m) & 1) && (between & 1)) coeff = -coeff; // right leg moves left
        alive[i] = alive[j] = 0;
    }

    // propagating strands: route the surviving letters to their northern
    // slots, graded sign for every odd-odd inversion
    std::vector<int> bsrc, btgt;
    for (int j = 0; j < s; ++j)
        if (alive[j]) {
            bsrc.push_back(j);
            btgt.push_back(d.mate[d.r + j]);
        }
    for (size_t x = 0; x < bsrc.size(); ++x)
        for (size_t y = x + 1; y < bsrc.size(); ++y)
            if (btgt[x] > btgt[y] && parity(val[bsrc[x]], m) && parity(val[bsrc[y]], m))
                coeff = -coeff;

    std::vector<std::int8_t> base(r, -1);
    for (size_t x = 0; x < bsrc.size(); ++x) base[btgt[x]] = val[bsrc[x]];

    // cups, smallest marking first (leftmost node descending); the copairing
    // enters next to the left leg, the right leg travels right into place
    auto cups = d.cups();
    std::sort(cups.begin(), cups.end(), [](auto& a, auto& b) { return a.first > b.first; });

    std::vector<PartialWord> states{PartialWord{base, coeff}};
    for (auto [u, v] : cups) {
        std::vector<PartialWord> next;
        for (const auto& st : states) {
            int prefix = 0, between = 0;
            for (int l = 0; l < u; ++l)
                if (st.slot[l] >= 0) prefix += parity(st.slot[l], m);
            for (int l = u + 1; l < v; ++l)
                if (st.slot[l] >= 0) between += parity(st.slot[l], m);
            for (int i = 0; i < m; ++i) {
                // symmetric copairing: (odd ⊗ even) + (even ⊗ odd)
                for (int odd_first : {1, 0}) {
                    int y = odd_first ? m + i : i;
                    int z = odd_first ? i : m + i;
                    std::int64_t c = st.coeff;
                    if (prefix & 1) c = -c;
                    if ((parity(z, m) & 1) && (between & 1)) c = -c;
                    PartialWord nw = st;
                    nw.slot[u] = static_cast<std::int8_t>(y);
                    nw.slot[v] = static_cast<std::int8_t>(z);
                    nw.coeff = c;
                    next.push_back(std::move(nw));
                }
            }
        }
        states = std::move(next);
    }

    SparseVec out;
    for (const auto& st : states) {
        Word word(st.slot.begin(), st.slot.end());
        out[word] += st.coeff;
        if (out[word] == 0) out.erase(word);
    }
    return out;
}

} // namespace super

SignedDiagram compose_via_layers(const Diagram& d1, const Diagram& d2) {
    using namespace super;
    if (d1.s != d2.r) return SignedDiagram::make_zero();
    const int m = std::max({d1.r, d1.s, d2.s, 1});
    if (m > 60) throw std::length_error("compose_via_layers: diagram too large for the letter encoding");

    auto cc = concatenate(d1, d2);
    if (!cc.ok) {
        // size matched, so the concatenation closed a loop; the operator
        // product must vanish identically; spot check it
        std::mt19937_64 rng(12345);
        const int t = d2.s;
        for (int trial = 0; trial < 32; ++trial) {
            Word w(t);
            for (int i = 0; i < t; ++i) w[i] = static_cast<std::int8_t>(rng() % (2 * m));
            SparseVec mid = apply_diagram(d2, w, m);
            SparseVec res;
            for (const auto& [word, c] : mid)
                for (const auto& [word2, c2] : apply_diagram(d1, word, m)) {
                    res[word2] += c * c2;
                    if (res[word2] == 0) res.erase(word2);
                }
            if (!res.empty())
                throw std::logic_error("compose_via_layers: loop composition acted non-trivially");
        }
        return SignedDiagram::make_zero();
    }

    const Diagram& comp = cc.d;
    const int t = comp.s;
    // witness word: fresh pairing index per cap, fresh even letters on the
    // propagating strands
    Word w(t, 0);
    int fresh = 0;
    for (auto [i, j] : comp.caps()) {
        w[i] = static_cast<std::int8_t>(fresh);
        w[j] = static_cast<std::int8_t>(m + fresh);
        ++fresh;
    }
    for (auto [u, j] : comp.props()) {
        (void)u;
        w[j] = static_cast<std::int8_t>(fresh++);
    }
    if (fresh > m) throw std::logic_error("compose_via_layers: witness ran out of letters");

    SparseVec direct = apply_diagram(comp, w, m);
    if (direct.empty()) throw std::logic_error("compose_via_layers: direct image vanished");

    SparseVec mid = apply_diagram(d2, w, m);
    SparseVec prod;
    for (const auto& [word, c] : mid)
        for (const auto& [word2, c2] : apply_diagram(d1, word, m)) {
            prod[word2] += c * c2;
            if (prod[word2] == 0) prod.erase(word2);
        }
    if (prod.size() != direct.size())
        throw std::logic_error("compose_via_layers: operator supports differ");
    int sign = 0;
    for (const auto& [word, c] : direct) {
        auto it = prod.find(word);
        if (it == prod.end()) throw std::logic_error("compose_via_layers: operator supports differ");
        if (it->second != c && it->second != -c)
            throw std::logic_error("compose_via_layers: coefficient ratio is not a sign");
        int local = (it->second == c) ? 1 : -1;
        if (sign == 0)
            sign = local;
        else if (sign != local)
            throw std::logic_error("compose_via_layers: inconsistent sign across the image");
    }
    return SignedDiagram::make(sign, comp);
}

} // namespace pba
