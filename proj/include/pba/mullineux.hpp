#pragma once

#include <cstdint>
#include <vector>

#include "pba/partition.hpp"

namespace pba {

/// One stripping step: the p-rim is the union of rim segments of length p,
/// each new segment starting in the row directly below the end of the
/// previous one. Returns the partition with the p-rim removed plus the pair
/// (boxes removed, rows of the input) recorded by the symbol.
struct RimStep {
    Partition rest;
    int removed = 0;
    int rows = 0;
};
RimStep strip_p_rim(const Partition& lam, int p);

/// The stripping symbol: columns (a_i, r_i) from repeated p-rim removal.
std::vector<std::pair<int, int>> mullineux_symbol(const Partition& lam, int p);

/// The classical involution on p-regular partitions given by transforming the
/// stripping symbol (a_i, r_i) -> (a_i, a_i - r_i + eps_i), eps_i = 1 unless
/// p divides a_i. Reconstruction matches the transformed symbol against the
/// symbols of the p-regular candidates of the same size.
Partition mullineux_regular(const Partition& lam, int p);

/// The conjugate on p-restricted partitions used for the sign twist of
/// simple modules: transpose-conjugated form of the regular involution.
/// p = 0 is the characteristic-zero mode and returns the transpose.
Partition mullineux(const Partition& lam, int p);

/// Alternating add/remove walks from (1): step i adds or removes one box.
using PartitionPath = std::vector<Partition>;

/// All paths of length n ending at lam; lam must lie in the label set for n.
std::vector<PartitionPath> enumerate_paths(int n, const Partition& lam);

/// The residue vector (c(2), ..., c(n)): res(b) on an added box b,
/// res(b) + 1 on a removed one; reduced mod p when p > 0.
std::vector<std::int64_t> path_vector(const PartitionPath& path, std::int64_t p);

} // namespace pba
