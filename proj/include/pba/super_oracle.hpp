#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "pba/diagram.hpp"

namespace pba {

/// Independent semantics for the diagram composition sign: diagrams act on a
/// tensor power of a Z/2-graded space with equal even and odd parts, caps as
/// the odd symmetric pairing, cups as its copairing and crossings as the
/// graded swap. Layers are applied in the order of the standard marking and
/// every strand move carries its graded interchange sign.
namespace super {

using Word = std::vector<std::int8_t>;          // basis indices, parity = idx >= m
using SparseVec = std::map<Word, std::int64_t>; // exact integer coefficients

/// Matrix-free application of a diagram to a basis word of its southern line.
SparseVec apply_diagram(const Diagram& d, const Word& w, int m);

} // namespace super

/// Composes two diagrams through the graded tensor semantics and returns the
/// resulting signed diagram. Agreement with compose_signed is the cross-check
/// for the marking normalization.
SignedDiagram compose_via_layers(const Diagram& d1, const Diagram& d2);

} // namespace pba
