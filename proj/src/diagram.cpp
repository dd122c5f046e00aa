#include "pba/diagram.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace pba {

Diagram::Diagram(int r_, int s_, std::vector<std::pair<int, int>> pairs) : r(r_), s(s_) {
    if ((r + s) % 2 != 0) throw std::invalid_argument("Diagram: r + s must be even");
    mate.assign(r + s, -1);
    if (static_cast<int>(pairs.size()) * 2 != r + s)
        throw std::invalid_argument("Diagram: wrong number of pairs");
    for (auto [a, b] : pairs) {
        if (a < 0 || b < 0 || a >= r + s || b >= r + s || a == b)
            throw std::invalid_argument("Diagram: bad node index");
        if (mate[a] != -1 || mate[b] != -1) throw std::invalid_argument("Diagram: node paired twice");
        mate[a] = static_cast<std::int16_t>(b);
        mate[b] = static_cast<std::int16_t>(a);
    }
}

Diagram Diagram::identity(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) pairs.emplace_back(i, n + i);
    return Diagram(n, n, std::move(pairs));
}

Diagram Diagram::from_perm(const Perm& sigma) {
    const int n = sigma.n();
    Perm inv = sigma.inverse();
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) pairs.emplace_back(i, n + inv(i));
    return Diagram(n, n, std::move(pairs));
}

std::vector<std::pair<int, int>> Diagram::cups() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < r; ++i)
        if (mate[i] < r && i < mate[i]) out.emplace_back(i, mate[i]);
    return out;
}

std::vector<std::pair<int, int>> Diagram::caps() const {
    std::vector<std::pair<int, int>> out;
    for (int i = r; i < r + s; ++i)
        if (mate[i] >= r && i < mate[i]) out.emplace_back(i - r, mate[i] - r);
    return out;
}

std::vector<std::pair<int, int>> Diagram::props() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < r; ++i)
        if (mate[i] >= r) out.emplace_back(i, mate[i] - r);
    return out;
}

int Diagram::prop_count() const {
    int c = 0;
    for (int i = 0; i < r; ++i)
        if (mate[i] >= r) ++c;
    return c;
}

Perm Diagram::to_perm() const {
    if (!is_permutation()) throw std::domain_error("Diagram: not a permutation diagram");
    std::vector<int> inv(r);
    for (int i = 0; i < r; ++i) inv[i] = mate[i] - r;
    return Perm(std::move(inv)).inverse();
}

Diagram Diagram::flipped() const {
    std::vector<std::pair<int, int>> pairs;
    auto relabel = [&](int node) { return node < r ? s + node : node - r; };
    for (int i = 0; i < r + s; ++i)
        if (i < mate[i]) pairs.emplace_back(relabel(i), relabel(mate[i]));
    return Diagram(s, r, std::move(pairs));
}

std::string Diagram::str() const {
    std::ostringstream os;
    os << '(' << r << ',' << s << "){";
    bool first = true;
    for (int i = 0; i < r + s; ++i) {
        if (i < mate[i]) {
            if (!first) os << ' ';
            os << i + 1 << '-' << mate[i] + 1;
            first = false;
        }
    }
    os << '}';
    return os.str();
}

std::vector<Marking> standard_marking(const Diagram& d) {
    auto cups = d.cups();
    auto caps = d.caps();
    std::sort(cups.begin(), cups.end());
    std::sort(caps.begin(), caps.end(), [](auto& a, auto& b) { return a.first > b.first; });
    std::vector<Marking> out;
    for (auto& c : cups) out.push_back(Marking{{c.first, c.second}, Marker::Diamond});
    for (auto& c : caps) out.push_back(Marking{{d.r + c.first, d.r + c.second}, Marker::RightArrow});
    return out;
}

Concatenation concatenate(const Diagram& d1, const Diagram& d2) {
    Concatenation out;
    if (d1.s != d2.r) return out;
    const int r = d1.r, s = d1.s, t = d2.s;
    std::vector<char> wall_seen(s, 0);
    std::vector<std::pair<int, int>> pairs;
    auto walk_from_top = [&](int a) {
        int m1 = d1.mate[a];
        if (m1 < r) return std::pair<int, int>(a, m1); // pure cup
        int w = m1 - r;
        bool via_d1 = true;
        for (;;) {
            wall_seen[w] = 1;
            if (via_d1) {
                int u = d2.mate[w];
                if (u >= s) return std::pair<int, int>(a, r + (u - s));
                wall_seen[u] = 1;
                w = u;
                via_d1 = false;
            } else {
                int u = d1.mate[r + w];
                if (u < r) return std::pair<int, int>(a, u);
                wall_seen[u - r] = 1;
                w = u - r;
                via_d1 = true;
            }
        }
    };
    std::vector<char> top_done(r, 0), bot_done(t, 0);
    for (int a = 0; a < r; ++a) {
        if (top_done[a]) continue;
        auto pr = walk_from_top(a);
        top_done[a] = 1;
        if (pr.second < r) top_done[pr.second] = 1;
        else bot_done[pr.second - r] = 1;
        pairs.push_back(pr);
    }
    for (int b = 0; b < t; ++b) {
        if (bot_done[b]) continue;
        int m2 = d2.mate[s + b];
        if (m2 >= s) {
            int b2 = m2 - s;
            pairs.emplace_back(r + b, r + b2);
            bot_done[b] = bot_done[b2] = 1;
            continue;
        }
        // walk up through the wall
        int w = m2;
        bool via_d2 = true;
        int endpoint = -1;
        for (;;) {
            wall_seen[w] = 1;
            if (via_d2) {
                int u = d1.mate[r + w];
                if (u < r) { endpoint = u; break; } // should have been found from the top
                wall_seen[u - r] = 1;
                w = u - r;
                via_d2 = false;
            } else {
                int u = d2.mate[w];
                if (u >= s) { endpoint = r + (u - s); break; }
                wall_seen[u] = 1;
                w = u;
                via_d2 = true;
            }
        }
        pairs.emplace_back(r + b, endpoint);
        bot_done[b] = 1;
        if (endpoint >= r) bot_done[endpoint - r] = 1;
    }
    for (int w = 0; w < s; ++w)
        if (!wall_seen[w]) {
            out.ok = false;
            out.loops = true;
            return out;
        }
    out.ok = true;
    out.d = Diagram(r, t, std::move(pairs));
    return out;
}

namespace {

struct WallSegment {
    int layer;    // 1: upper diagram cap, 2: lower diagram cup
    int from, to; // wall positions in traversal order
};

struct CompositeEdge {
    int a = -1, b = -1; // composite nodes, a < b not guaranteed
    int kind = 0;       // 0 prop, 1 cup, 2 cap
    std::vector<WallSegment> segs;
};

struct MarkingRef {
    int uid;
    int edge;
    int seg;    // index into segs, or -1 for a marking on a bare cup/cap
    Marker marker;
};

} // namespace

SignedDiagram compose_signed(const Diagram& d1, const Diagram& d2) {
    if (d1.s != d2.r) return SignedDiagram::make_zero();
    const int r = d1.r, s = d1.s, t = d2.s;

    // trace all composite edges, recording the wall segments on each path
    std::vector<CompositeEdge> edges;
    std::vector<char> wall_seen(s, 0), top_done(r, 0), bot_done(t, 0);
    // cap/cup of the middle layers -> (edge, seg) for the marking bookkeeping
    std::map<std::pair<int, int>, std::pair<int, int>> d1cap_loc, d2cup_loc;

    auto record_segment = [&](CompositeEdge& e, int layer, int from, int to) {
        e.segs.push_back(WallSegment{layer, from, to});
        auto key = std::minmax(from, to);
        std::pair<int, int> loc{static_cast<int>(edges.size()), static_cast<int>(e.segs.size()) - 1};
        if (layer == 1)
            d1cap_loc[{key.first, key.second}] = loc;
        else
            d2cup_loc[{key.first, key.second}] = loc;
    };

    for (int a = 0; a < r; ++a) {
        if (top_done[a]) continue;
        CompositeEdge e;
        e.a = a;
        int m1 = d1.mate[a];
        if (m1 < r) {
            e.b = m1;
            e.kind = 1;
            top_done[a] = top_done[m1] = 1;
            edges.push_back(std::move(e));
            continue;
        }
        int w = m1 - r;
        bool via_d1 = true;
        for (;;) {
            wall_seen[w] = 1;
            if (via_d1) {
                int u = d2.mate[w];
                if (u >= s) {
                    e.b = r + (u - s);
                    e.kind = 0;
                    bot_done[u - s] = 1;
                    break;
                }
                wall_seen[u] = 1;
                record_segment(e, 2, w, u);
                w = u;
                via_d1 = false;
            } else {
                int u = d1.mate[r + w];
                if (u < r) {
                    e.b = u;
                    e.kind = 1;
                    top_done[u] = 1;
                    break;
                }
                wall_seen[u - r] = 1;
                record_segment(e, 1, w, u - r);
                w = u - r;
                via_d1 = true;
            }
        }
        top_done[a] = 1;
        edges.push_back(std::move(e));
    }
    for (int b = 0; b < t; ++b) {
        if (bot_done[b]) continue;
        CompositeEdge e;
        e.a = r + b;
        e.kind = 2;
        int m2 = d2.mate[s + b];
        if (m2 >= s) {
            e.b = r + (m2 - s);
            bot_done[b] = bot_done[m2 - s] = 1;
            edges.push_back(std::move(e));
            continue;
        }
        int w = m2;
        bool via_d2 = true;
        for (;;) {
            wall_seen[w] = 1;
            if (via_d2) {
                int u = d1.mate[r + w];
                if (u < r) throw std::logic_error("compose_signed: cap path reached the northern line");
                wall_seen[u - r] = 1;
                record_segment(e, 1, w, u - r);
                w = u - r;
                via_d2 = false;
            } else {
                int u = d2.mate[w];
                if (u >= s) {
                    e.b = r + (u - s);
                    bot_done[u - s] = 1;
                    break;
                }
                wall_seen[u] = 1;
                record_segment(e, 2, w, u);
                w = u;
                via_d2 = true;
            }
        }
        bot_done[b] = 1;
        edges.push_back(std::move(e));
    }
    for (int w = 0; w < s; ++w)
        if (!wall_seen[w]) return SignedDiagram::make_zero(); // closed loop

    // composite diagram
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : edges) pairs.emplace_back(e.a, e.b);
    Diagram comp(r, t, std::move(pairs));

    // initial latitude order of the stacked standard markings, largest first:
    // upper cups, upper caps, lower cups, lower caps
    long gamma = 0;
    std::vector<MarkingRef> lat;
    int uid = 0;
    {
        auto cups1 = d1.cups();
        std::sort(cups1.begin(), cups1.end());
        for (auto& c : cups1) {
            // a bare cup of the upper diagram is its own composite edge
            int eidx = -1;
            for (size_t i = 0; i < edges.size(); ++i)
                if (edges[i].kind == 1 && edges[i].segs.empty() &&
                    std::minmax(edges[i].a, edges[i].b) == std::minmax(c.first, c.second))
                    eidx = static_cast<int>(i);
            lat.push_back(MarkingRef{uid++, eidx, -1, Marker::Diamond});
        }
        auto caps1 = d1.caps();
        std::sort(caps1.begin(), caps1.end(), [](auto& x, auto& y) { return x.first > y.first; });
        for (auto& c : caps1) {
            auto loc = d1cap_loc.at({c.first, c.second});
            lat.push_back(MarkingRef{uid++, loc.first, loc.second, Marker::RightArrow});
        }
        auto cups2 = d2.cups();
        std::sort(cups2.begin(), cups2.end());
        for (auto& c : cups2) {
            auto loc = d2cup_loc.at({c.first, c.second});
            lat.push_back(MarkingRef{uid++, loc.first, loc.second, Marker::Diamond});
        }
        auto caps2 = d2.caps();
        std::sort(caps2.begin(), caps2.end(), [](auto& x, auto& y) { return x.first > y.first; });
        for (auto& c : caps2) {
            int eidx = -1;
            for (size_t i = 0; i < edges.size(); ++i)
                if (edges[i].kind == 2 && edges[i].segs.empty() &&
                    std::minmax(edges[i].a, edges[i].b) ==
                        std::minmax(r + c.first, r + c.second))
                    eidx = static_cast<int>(i);
            lat.push_back(MarkingRef{uid++, eidx, -1, Marker::RightArrow});
        }
    }

    auto lat_pos = [&](int id) {
        for (size_t i = 0; i < lat.size(); ++i)
            if (lat[i].uid == id) return static_cast<int>(i);
        throw std::logic_error("compose_signed: marking lost");
    };

    // cancel arrow-diamond pairs edge by edge; within an edge the marked wall
    // segments alternate, so consecutive marked segments always form a pair
    for (size_t ei = 0; ei < edges.size(); ++ei) {
        for (;;) {
            // collect the live markings on this edge in path order
            std::vector<MarkingRef> on_edge;
            for (const auto& m : lat)
                if (m.edge == static_cast<int>(ei) && m.seg >= 0) on_edge.push_back(m);
            std::sort(on_edge.begin(), on_edge.end(),
                      [](const MarkingRef& x, const MarkingRef& y) { return x.seg < y.seg; });
            if (on_edge.size() < 2) break;
            const MarkingRef& m1 = on_edge[0];
            const MarkingRef& m2 = on_edge[1];
            if (m1.marker == m2.marker) throw std::logic_error("compose_signed: marking alternation broken");
            int la = lat_pos(m1.uid), lb = lat_pos(m2.uid);
            gamma += std::abs(la - lb) - 1;
            const MarkingRef& arrow = (m1.marker == Marker::RightArrow) ? m1 : m2;
            const MarkingRef& diamond = (m1.marker == Marker::RightArrow) ? m2 : m1;
            const WallSegment& aseg = edges[ei].segs[arrow.seg];
            // the arrow's plane direction reads as a direction along the
            // curve; it points away from the diamond when that direction
            // disagrees with where the diamond lies on the path
            bool arrow_with_path = aseg.to > aseg.from;
            bool diamond_ahead = diamond.seg > arrow.seg;
            if (arrow_with_path != diamond_ahead) ++gamma;
            lat.erase(lat.begin() + std::max(la, lb));
            lat.erase(lat.begin() + std::min(la, lb));
        }
    }

    // a surviving arrow whose arc is traversed leftwards has been carried
    // around a bend: restoring the rightward standard arrow costs a sign
    for (const auto& m : lat) {
        if (m.seg < 0 || m.marker != Marker::RightArrow) continue;
        const WallSegment& seg = edges[m.edge].segs[m.seg];
        if (seg.to < seg.from) ++gamma;
    }

    // what survives is one diamond per composite cup and one arrow per cap;
    // sort into the standard order of the composite and count the swaps
    {
        std::vector<std::pair<int, int>> cup_edges, cap_edges; // (leftmost, edge idx)
        for (size_t i = 0; i < edges.size(); ++i) {
            int lm = std::min(edges[i].a, edges[i].b);
            if (edges[i].kind == 1) cup_edges.emplace_back(lm, static_cast<int>(i));
            if (edges[i].kind == 2) cap_edges.emplace_back(lm, static_cast<int>(i));
        }
        if (lat.size() != cup_edges.size() + cap_edges.size())
            throw std::logic_error("compose_signed: leftover markings inconsistent");
        std::sort(cup_edges.begin(), cup_edges.end());
        std::sort(cap_edges.begin(), cap_edges.end(), [](auto& x, auto& y) { return x.first > y.first; });
        std::map<int, int> target; // edge -> rank in the standard order
        int rank = 0;
        for (auto& [lm, e] : cup_edges) target[e] = rank++;
        for (auto& [lm, e] : cap_edges) target[e] = rank++;
        std::vector<int> seq;
        for (const auto& m : lat) {
            bool is_cup_edge = edges[m.edge].kind == 1;
            if ((m.marker == Marker::Diamond) != is_cup_edge)
                throw std::logic_error("compose_signed: marker ended on the wrong edge kind");
            seq.push_back(target.at(m.edge));
        }
        for (size_t i = 0; i < seq.size(); ++i)
            for (size_t j = i + 1; j < seq.size(); ++j)
                if (seq[i] > seq[j]) ++gamma;
    }

    return SignedDiagram::make(gamma % 2 == 0 ? 1 : -1, std::move(comp));
}

SignedDiagram tensor_signed(const Diagram& d1, const Diagram& d2) {
    const int r1 = d1.r, s1 = d1.s, r2 = d2.r, s2 = d2.s;
    // d1 padded with r2 straight strands on the right: (r1 + r2, s1 + r2)
    std::vector<std::pair<int, int>> pa;
    for (int i = 0; i < r1 + s1; ++i) {
        int m = d1.mate[i];
        if (i < m) {
            auto shift = [&](int x) { return x < r1 ? x : x + r2; };
            pa.emplace_back(shift(i), shift(m));
        }
    }
    for (int i = 0; i < r2; ++i) pa.emplace_back(r1 + i, (r1 + r2) + s1 + i);
    Diagram a(r1 + r2, s1 + r2, std::move(pa));
    // d2 padded with s1 straight strands on the left: (s1 + r2, s1 + s2)
    std::vector<std::pair<int, int>> pb;
    for (int i = 0; i < s1; ++i) pb.emplace_back(i, (s1 + r2) + i);
    for (int i = 0; i < r2 + s2; ++i) {
        int m = d2.mate[i];
        if (i < m) {
            auto shift = [&](int x) { return x < r2 ? s1 + x : (s1 + r2) + s1 + (x - r2); };
            pb.emplace_back(shift(i), shift(m));
        }
    }
    Diagram b(s1 + r2, s1 + s2, std::move(pb));
    return compose_signed(a, b);
}

Diagram cup_diagram() { return Diagram(2, 0, {{0, 1}}); }
Diagram cap_diagram() { return Diagram(0, 2, {{0, 1}}); }
Diagram crossing_diagram() { return Diagram(2, 2, {{0, 3}, {1, 2}}); }

Diagram s_generator(int n, int i) {
    if (i < 1 || i >= n) throw std::invalid_argument("s_generator: index out of range");
    std::vector<std::pair<int, int>> pairs;
    for (int k = 0; k < n; ++k) {
        if (k == i - 1)
            pairs.emplace_back(k, n + k + 1);
        else if (k == i)
            pairs.emplace_back(k, n + k - 1);
        else
            pairs.emplace_back(k, n + k);
    }
    return Diagram(n, n, std::move(pairs));
}

Diagram e_generator(int n, int i) {
    if (i < 1 || i >= n) throw std::invalid_argument("e_generator: index out of range");
    std::vector<std::pair<int, int>> pairs;
    for (int k = 0; k < n; ++k) {
        if (k == i - 1)
            pairs.emplace_back(k, k + 1); // cup
        else if (k != i)
            pairs.emplace_back(k, n + k);
    }
    pairs.emplace_back(n + i - 1, n + i); // cap
    return Diagram(n, n, std::move(pairs));
}

Diagram eps_diagram(int n) {
    if (n < 3) throw std::invalid_argument("eps_diagram: needs n >= 3");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i <= n - 4; ++i) pairs.emplace_back(i, n + i);
    pairs.emplace_back(n - 3, n + (n - 1));     // long propagating line
    pairs.emplace_back(n - 2, n - 1);           // cup on the two rightmost northern nodes
    pairs.emplace_back(n + (n - 3), n + (n - 2)); // cap left of the rightmost southern node
    return Diagram(n, n, std::move(pairs));
}

Diagram g_diagram(int n) {
    if (n < 3) throw std::invalid_argument("g_diagram: needs n >= 3");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n - 2; ++i) pairs.emplace_back(i, n + i);
    pairs.emplace_back(n - 2, n - 1); // cup
    return Diagram(n, n - 2, std::move(pairs));
}

Diagram f_diagram(int n) {
    if (n < 3) throw std::invalid_argument("f_diagram: needs n >= 3");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n - 3; ++i) pairs.emplace_back(i, (n - 2) + i);
    pairs.emplace_back(n - 3, (n - 2) + (n - 1));           // rightmost nodes joined
    pairs.emplace_back((n - 2) + (n - 3), (n - 2) + (n - 2)); // cap
    return Diagram(n - 2, n, std::move(pairs));
}

static void gen_matchings(std::vector<int>& mate, int total, std::vector<Diagram>& out, int r, int s) {
    int first = -1;
    for (int i = 0; i < total; ++i)
        if (mate[i] < 0) { first = i; break; }
    if (first < 0) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < total; ++i)
            if (i < mate[i]) pairs.emplace_back(i, mate[i]);
        out.emplace_back(r, s, std::move(pairs));
        return;
    }
    for (int j = first + 1; j < total; ++j) {
        if (mate[j] >= 0) continue;
        mate[first] = j;
        mate[j] = first;
        gen_matchings(mate, total, out, r, s);
        mate[first] = mate[j] = -1;
    }
}

std::vector<Diagram> enumerate_diagrams(int r, int s) {
    std::vector<Diagram> out;
    if ((r + s) % 2 != 0) return out;
    std::vector<int> mate(r + s, -1);
    gen_matchings(mate, r + s, out, r, s);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Diagram> enumerate_noncrossing(int n, int t) {
    std::vector<Diagram> out;
    if (t < 0 || t > n || (n - t) % 2 != 0) return out;
    // choose the t propagating northern nodes, pair the rest into cups
    std::vector<std::vector<int>> subsets;
    {
        std::vector<int> mask(n, 0);
        std::fill(mask.end() - t, mask.end(), 1);
        std::sort(mask.begin(), mask.end());
        do {
            std::vector<int> chosen;
            for (int i = 0; i < n; ++i)
                if (mask[i]) chosen.push_back(i);
            subsets.push_back(chosen);
        } while (std::next_permutation(mask.begin(), mask.end()));
    }
    for (const auto& chosen : subsets) {
        std::vector<char> is_prop(n, 0);
        for (int c : chosen) is_prop[c] = 1;
        std::vector<int> rest;
        for (int i = 0; i < n; ++i)
            if (!is_prop[i]) rest.push_back(i);
        // all matchings on `rest`
        std::vector<std::vector<std::pair<int, int>>> cupsets;
        std::function<void(std::vector<int>&, std::vector<std::pair<int, int>>&)> rec =
            [&](std::vector<int>& avail, std::vector<std::pair<int, int>>& acc) {
                if (avail.empty()) {
                    cupsets.push_back(acc);
                    return;
                }
                int a = avail[0];
                for (size_t j = 1; j < avail.size(); ++j) {
                    int b = avail[j];
                    std::vector<int> next;
                    for (size_t k = 1; k < avail.size(); ++k)
                        if (k != j) next.push_back(avail[k]);
                    acc.emplace_back(a, b);
                    rec(next, acc);
                    acc.pop_back();
                }
            };
        std::vector<int> avail = rest;
        std::vector<std::pair<int, int>> acc;
        rec(avail, acc);
        for (const auto& cupset : cupsets) {
            std::vector<std::pair<int, int>> pairs = cupset;
            for (int k = 0; k < t; ++k) pairs.emplace_back(chosen[k], n + k);
            out.emplace_back(n, t, std::move(pairs));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

RectFactorization factorize_rect(const Diagram& d) {
    const int n = d.r, t = d.s;
    if (d.prop_count() != t) throw std::domain_error("factorize_rect: needs exactly t propagating lines");
    std::vector<int> free_top;
    for (int i = 0; i < n; ++i)
        if (d.mate[i] >= n) free_top.push_back(i);
    std::vector<std::pair<int, int>> pairs = d.cups();
    std::vector<int> b(t);
    for (int k = 0; k < t; ++k) {
        pairs.emplace_back(free_top[k], n + k);
        b[k] = d.mate[free_top[k]] - n;
    }
    return RectFactorization{Diagram(n, t, std::move(pairs)), Perm(std::move(b)).inverse()};
}

Factorization factorize(const Diagram& d) {
    if (d.r != d.s) throw std::domain_error("factorize: needs a square diagram");
    const int n = d.r;
    const int t = d.prop_count();
    std::vector<int> free_top, free_bot;
    for (int i = 0; i < n; ++i)
        if (d.mate[i] >= n) free_top.push_back(i);
    for (int j = 0; j < n; ++j)
        if (d.mate[n + j] < n) free_bot.push_back(j);
    std::vector<std::pair<int, int>> p1 = d.cups();
    for (int k = 0; k < t; ++k) p1.emplace_back(free_top[k], n + k);
    std::vector<std::pair<int, int>> p2;
    for (auto [a, b] : d.caps()) p2.emplace_back(a, b); // caps become northern cups of s2
    for (int k = 0; k < t; ++k) p2.emplace_back(free_bot[k], n + k);
    std::vector<int> c(t);
    for (int k = 0; k < t; ++k) {
        int sb = d.mate[free_top[k]] - n;
        int idx = static_cast<int>(std::lower_bound(free_bot.begin(), free_bot.end(), sb) - free_bot.begin());
        c[k] = idx;
    }
    return Factorization{Diagram(n, t, std::move(p1)), Perm(std::move(c)).inverse(),
                         Diagram(n, t, std::move(p2))};
}

namespace {

Diagram cup_layer(int m, int a) { // (m, m-2), cup at northern a, a+1
    std::vector<std::pair<int, int>> pairs{{a, a + 1}};
    int south = 0;
    for (int i = 0; i < m; ++i) {
        if (i == a || i == a + 1) continue;
        pairs.emplace_back(i, m + south++);
    }
    return Diagram(m, m - 2, std::move(pairs));
}

Diagram cap_layer(int m, int c) { // (m-2, m), cap at southern c, c+1
    std::vector<std::pair<int, int>> pairs{{(m - 2) + c, (m - 2) + c + 1}};
    int north = 0;
    for (int j = 0; j < m; ++j) {
        if (j == c || j == c + 1) continue;
        pairs.emplace_back(north++, (m - 2) + j);
    }
    return Diagram(m - 2, m, std::move(pairs));
}

Diagram x_layer(int m, int i) { return Diagram::from_perm(Perm::transposition(m, i)); }

} // namespace

std::vector<Diagram> decompose_layers(const Diagram& d) {
    std::vector<Diagram> top_layers, bottom_layers;
    Diagram cur = d;
    // peel cups from the northern line
    for (;;) {
        auto cups = cur.cups();
        if (cups.empty()) break;
        std::sort(cups.begin(), cups.end(), [](auto& x, auto& y) {
            return std::make_pair(x.second - x.first, x.first) < std::make_pair(y.second - y.first, y.first);
        });
        auto [a, b] = cups[0];
        if (b == a + 1) {
            top_layers.push_back(cup_layer(cur.r, a));
            // remove the cup, renumber northern nodes
            std::vector<std::pair<int, int>> pairs;
            auto renum = [&](int x) {
                if (x < cur.r) return x - (x > b ? 2 : 0);
                return x - 2;
            };
            for (int i = 0; i < cur.r + cur.s; ++i) {
                int m = cur.mate[i];
                if (i < m && i != a) pairs.emplace_back(renum(i), renum(m));
            }
            cur = Diagram(cur.r - 2, cur.s, std::move(pairs));
        } else {
            Diagram x = x_layer(cur.r, b - 1);
            top_layers.push_back(x);
            auto cc = concatenate(x, cur);
            if (!cc.ok) throw std::logic_error("decompose_layers: crossing step failed");
            cur = cc.d;
        }
    }
    // peel caps from the southern line
    for (;;) {
        auto caps = cur.caps();
        if (caps.empty()) break;
        std::sort(caps.begin(), caps.end(), [](auto& x, auto& y) {
            return std::make_pair(x.second - x.first, x.first) < std::make_pair(y.second - y.first, y.first);
        });
        auto [a, b] = caps[0];
        if (b == a + 1) {
            bottom_layers.push_back(cap_layer(cur.s, a));
            std::vector<std::pair<int, int>> pairs;
            auto renum = [&](int x) {
                if (x < cur.r) return x;
                int j = x - cur.r;
                return cur.r + j - (j > b ? 2 : 0);
            };
            for (int i = 0; i < cur.r + cur.s; ++i) {
                int m = cur.mate[i];
                if (i < m && i != cur.r + a) pairs.emplace_back(renum(i), renum(m));
            }
            cur = Diagram(cur.r, cur.s - 2, std::move(pairs));
        } else {
            Diagram x = x_layer(cur.s, b - 1);
            bottom_layers.push_back(x);
            auto cc = concatenate(cur, x);
            if (!cc.ok) throw std::logic_error("decompose_layers: crossing step failed");
            cur = cc.d;
        }
    }
    // what remains is a permutation diagram; expand as adjacent crossings
    std::vector<Diagram> mid;
    {
        Perm sigma = cur.to_perm();
        while (!sigma.is_identity()) {
            bool moved = false;
            for (int i = 0; i + 1 < sigma.n(); ++i) {
                Perm tau = Perm::transposition(sigma.n(), i);
                Perm nxt = tau * sigma;
                if (nxt.length() < sigma.length()) {
                    mid.push_back(Diagram::from_perm(tau));
                    sigma = nxt;
                    moved = true;
                    break;
                }
            }
            if (!moved) throw std::logic_error("decompose_layers: no length-reducing crossing");
        }
    }
    std::vector<Diagram> out = top_layers;
    out.insert(out.end(), mid.begin(), mid.end());
    out.insert(out.end(), bottom_layers.rbegin(), bottom_layers.rend());
    return out;
}

SignedDiagram phi(const Diagram& d) {
    auto layers = decompose_layers(d);
    if (layers.empty()) {
        // identity diagram (possibly empty)
        return SignedDiagram::make(1, d.flipped());
    }
    // sign of the layer product relative to d
    int sigma_d = 1;
    {
        Diagram acc = layers[0];
        for (size_t i = 1; i < layers.size(); ++i) {
            auto sd = compose_signed(acc, layers[i]);
            if (sd.zero) throw std::logic_error("phi: layer product collapsed");
            sigma_d *= sd.sign;
            acc = sd.d;
        }
        if (!(acc == d)) throw std::logic_error("phi: layer product mismatch");
    }
    // generator images: crossings and cups pick up a sign, caps map to cups
    int tau = 1;
    std::vector<Diagram> flipped;
    for (const auto& l : layers) {
        if (l.r == l.s || l.r > l.s) tau = -tau; // crossing or cup layer
        flipped.push_back(l.flipped());
    }
    int sigma_f = 1;
    Diagram acc = flipped.back();
    for (size_t i = flipped.size() - 1; i-- > 0;) {
        auto sd = compose_signed(acc, flipped[i]);
        if (sd.zero) throw std::logic_error("phi: flipped layer product collapsed");
        sigma_f *= sd.sign;
        acc = sd.d;
    }
    if (!(acc == d.flipped())) throw std::logic_error("phi: flipped product mismatch");
    return SignedDiagram::make(sigma_d * tau * sigma_f, std::move(acc));
}

} // namespace pba
