#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "pba/gfp.hpp"

namespace pba {

/// Exact rational scalar (arbitrary precision, always stored canonically).
using Rat = mpq_class;

struct RatTag {
    friend bool operator==(RatTag, RatTag) { return true; }
};

/// Uniform interface over the two scalar types used throughout:
/// GF(p) for an odd prime p, and the rationals (the characteristic-0 mode).
template <class K>
struct FieldOps;

template <>
struct FieldOps<Gfp> {
    using Tag = std::uint32_t; // the modulus p
    static Gfp zero(Tag p) { return Gfp(0, p); }
    static Gfp one(Tag p) { return Gfp(1, p); }
    static Gfp from_int(Tag p, std::int64_t v) { return Gfp(v, p); }
    static Tag tag(const Gfp& x) { return x.modulus(); }
    static bool is_zero(const Gfp& x) { return x.is_zero(); }
    static Gfp inv(const Gfp& x) { return x.inv(); }
    static std::string str(const Gfp& x) { return x.str(); }
    static std::uint64_t characteristic(Tag p) { return p; }
};

template <>
struct FieldOps<Rat> {
    using Tag = RatTag;
    static Rat zero(Tag) { return Rat(0); }
    static Rat one(Tag) { return Rat(1); }
    static Rat from_int(Tag, std::int64_t v) { return Rat(static_cast<long>(v)); }
    static Tag tag(const Rat&) { return {}; }
    static bool is_zero(const Rat& x) { return sgn(x) == 0; }
    static Rat inv(const Rat& x) { return Rat(1) / x; }
    static std::string str(const Rat& x) { return x.get_str(); }
    static std::uint64_t characteristic(Tag) { return 0; }
};

} // namespace pba
