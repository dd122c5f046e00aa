#pragma once

#include <map>
#include <sstream>
#include <stdexcept>

#include "pba/diagram.hpp"
#include "pba/field.hpp"

namespace pba {

/// Finite formal sum of same-shape diagrams over an exact field. Morphism
/// shapes (r, s) are tracked so rectangular products compose; the algebra of
/// interest is the square case r == s == n.
template <class K>
struct Element {
    using Ops = FieldOps<K>;
    using Tag = typename Ops::Tag;

    int r = 0, s = 0;
    Tag tag{};
    std::map<Diagram, K> terms;

    Element() = default;
    Element(int r_, int s_, Tag tag_) : r(r_), s(s_), tag(tag_) {}

    static Element from_diagram(const Diagram& d, Tag tag) {
        Element e(d.r, d.s, tag);
        e.terms.emplace(d, Ops::one(tag));
        return e;
    }
    static Element identity(int n, Tag tag) { return from_diagram(Diagram::identity(n), tag); }
    static Element zero(int r, int s, Tag tag) { return Element(r, s, tag); }

    bool is_zero() const { return terms.empty(); }

    void add_term(const Diagram& d, const K& c) {
        if (Ops::is_zero(c)) return;
        if (d.r != r || d.s != s) throw std::invalid_argument("Element: shape mismatch");
        auto it = terms.find(d);
        if (it == terms.end()) {
            terms.emplace(d, c);
        } else {
            it->second = it->second + c;
            if (Ops::is_zero(it->second)) terms.erase(it);
        }
    }

    friend Element operator+(const Element& a, const Element& b) {
        a.check_add(b);
        Element out = a;
        for (const auto& [d, c] : b.terms) out.add_term(d, c);
        return out;
    }
    friend Element operator-(const Element& a, const Element& b) {
        a.check_add(b);
        Element out = a;
        for (const auto& [d, c] : b.terms) out.add_term(d, -K(c));
        return out;
    }
    Element operator*(const K& c) const {
        Element out(r, s, tag);
        for (const auto& [d, x] : terms) out.add_term(d, x * c);
        return out;
    }
    Element operator-() const { return *this * (-K(Ops::one(tag))); }

    /// Bilinear extension of the signed diagram composition. Shapes and field
    /// tags must match; that is a usage error, not a zero.
    friend Element operator*(const Element& a, const Element& b) {
        if (a.s != b.r) throw std::invalid_argument("Element: inner sizes do not match");
        if (!(a.tag == b.tag)) throw std::invalid_argument("Element: mixed field tags");
        Element out(a.r, b.s, a.tag);
        for (const auto& [d1, c1] : a.terms)
            for (const auto& [d2, c2] : b.terms) {
                SignedDiagram sd = compose_signed(d1, d2);
                if (sd.zero) continue;
                K c = c1 * c2;
                if (sd.sign < 0) c = -c;
                out.add_term(sd.d, c);
            }
        return out;
    }

    friend bool operator==(const Element& a, const Element& b) {
        return a.r == b.r && a.s == b.s && a.terms == b.terms;
    }

    /// Linear extension of the diagram anti-automorphism.
    Element apply_phi() const {
        Element out(s, r, tag);
        for (const auto& [d, c] : terms) {
            SignedDiagram sd = phi(d);
            K x = c;
            if (sd.sign < 0) x = -x;
            out.add_term(sd.d, x);
        }
        return out;
    }

    std::string str() const {
        if (terms.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [d, c] : terms) {
            if (!first) os << " + ";
            os << Ops::str(c) << "*" << d.str();
            first = false;
        }
        return os.str();
    }

private:
    void check_add(const Element& o) const {
        if (r != o.r || s != o.s) throw std::invalid_argument("Element: shape mismatch");
        if (!(tag == o.tag)) throw std::invalid_argument("Element: mixed field tags");
    }
};

} // namespace pba
