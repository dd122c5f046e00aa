#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pba/perm.hpp"

namespace pba {

/// An (r, s)-pairing diagram: a perfect matching on r northern nodes
/// (0..r-1, left to right) and s southern nodes (r..r+s-1, left to right).
/// North-north pairs are cups, south-south pairs caps, mixed pairs
/// propagating lines. Immutable by convention.
struct Diagram {
    int r = 0, s = 0;
    std::vector<std::int16_t> mate; // mate[mate[i]] == i

    Diagram() = default;
    Diagram(int r_, int s_, std::vector<std::pair<int, int>> pairs);

    static Diagram identity(int n);
    /// Permutation diagram: north i joined to south sigma^{-1}(i), so that
    /// diagram composition matches function composition.
    static Diagram from_perm(const Perm& sigma);

    bool is_north(int node) const { return node < r; }
    int partner(int node) const { return mate[node]; }
    int total_nodes() const { return r + s; }

    std::vector<std::pair<int, int>> cups() const; // (a, b), a < b, north
    std::vector<std::pair<int, int>> caps() const; // south indices 0-based within south
    std::vector<std::pair<int, int>> props() const; // (north, south-within-south)
    int prop_count() const;
    bool is_permutation() const { return r == s && prop_count() == r; }
    Perm to_perm() const; // requires is_permutation()

    /// vertical flip: northern and southern lines exchanged (no sign)
    Diagram flipped() const;

    std::string str() const;

    friend bool operator==(const Diagram& a, const Diagram& b) {
        return a.r == b.r && a.s == b.s && a.mate == b.mate;
    }
    friend bool operator<(const Diagram& a, const Diagram& b) {
        if (a.r != b.r) return a.r < b.r;
        if (a.s != b.s) return a.s < b.s;
        return a.mate < b.mate;
    }
};

/// A diagram with a sign, or the distinguished zero.
struct SignedDiagram {
    bool zero = true;
    int sign = 0; // +1 or -1 when nonzero
    Diagram d;

    static SignedDiagram make_zero() { return SignedDiagram{}; }
    static SignedDiagram make(int sign, Diagram d) { return SignedDiagram{false, sign, std::move(d)}; }
};

/// Marker decorating one cup or cap, in the latitude order of a marking.
enum class Marker : std::uint8_t { Diamond, RightArrow, LeftArrow };

struct Marking {
    std::pair<int, int> edge; // node pair of the decorated edge
    Marker marker;
};

/// The canonical marking: every cap carries a right arrow, cups sit above
/// caps, cups are ordered by leftmost node (leftmost first), caps by leftmost
/// node reversed. Returned largest (most northern) first.
std::vector<Marking> standard_marking(const Diagram& d);

/// Signed composition: stack d1 over d2, zero on size mismatch or closed
/// loops, otherwise the concatenated diagram with the parity of the marking
/// normalization as sign.
SignedDiagram compose_signed(const Diagram& d1, const Diagram& d2);

/// Horizontal product: pad d1 on the right and d2 on the left with identity
/// strands, then compose.
SignedDiagram tensor_signed(const Diagram& d1, const Diagram& d2);

/// Unsigned concatenation, for callers that handle signs themselves.
/// Returns zero diagram flag when sizes mismatch or loops close.
struct Concatenation {
    bool ok = false;       // false: size mismatch or loops
    bool loops = false;
    Diagram d;
};
Concatenation concatenate(const Diagram& d1, const Diagram& d2);

/// The anti-automorphism: vertical flip with the sign accumulated from the
/// images of the generating diagrams (identity strand fixed, crossing and
/// cup negated, cup and cap exchanged) under anti-multiplicativity.
SignedDiagram phi(const Diagram& d);

/// Unique factorization d = S1 * w * S2^op of an (n, n)-diagram with t
/// propagating lines, where S1, S2 have non-crossing propagating lines.
struct Factorization {
    Diagram s1;   // (n, t), cups of d, non-crossing props
    Perm w;       // permutation on t strands
    Diagram s2;   // (n, t), caps of d flipped, non-crossing props
};
Factorization factorize(const Diagram& d);

/// Rectangular variant: an (n, t)-diagram with t propagating lines splits as
/// S * w with S non-crossing.
struct RectFactorization {
    Diagram s; // (n, t) with non-crossing props
    Perm w;
};
RectFactorization factorize_rect(const Diagram& d);

/// Generators as diagrams.
Diagram cup_diagram();            // (2, 0)
Diagram cap_diagram();            // (0, 2)
Diagram crossing_diagram();       // (2, 2)
Diagram s_generator(int n, int i); // crossing at strands i, i+1 (1-based i)
Diagram e_generator(int n, int i); // cup/cap at strands i, i+1 (1-based i)

/// The corner idempotent diagram and the connecting diagrams between sizes
/// n and n-2: eps has a cup on the two rightmost northern nodes, a cap just
/// left of the rightmost southern node, and a long propagating line.
Diagram eps_diagram(int n);        // (n, n), n >= 3
Diagram g_diagram(int n);          // (n, n-2)
Diagram f_diagram(int n);          // (n-2, n)

std::vector<Diagram> enumerate_diagrams(int r, int s);
/// (n, t)-diagrams with exactly t propagating lines, all non-crossing.
std::vector<Diagram> enumerate_noncrossing(int n, int t);

/// Elementary layer decomposition: each layer is an identity tensor with one
/// generator (crossing, cup or cap) inserted. Concatenating the layers top to
/// bottom reproduces the diagram (unsigned).
std::vector<Diagram> decompose_layers(const Diagram& d);

} // namespace pba
