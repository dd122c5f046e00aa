#pragma once

#include <string>
#include <vector>

#include "pba/algebra_element.hpp"
#include "pba/partition.hpp"

namespace pba {

/// A partition of the label set into blocks, from either source.
struct BlockDecomposition {
    int n = 0;
    int p = 0;
    std::string provenance; // "classifier" or "oracle"
    std::vector<std::vector<Partition>> blocks;

    /// canonical form: members sorted, blocks sorted by their least member
    void normalize();
    bool same_blocks(const BlockDecomposition& other) const;
};

/// Eligibility data for one staircase in the closed-form description.
struct StaircaseEligibility {
    int r = 0;
    bool rim_short = false;     // 2r - 1 < p
    bool boxes_far = false;     // r(r+1)/2 + p - 2r > n
    bool parity_fits = false;   // r(r+1)/2 <= n with matching parity
    bool eligible() const { return r >= 2 && rim_short && boxes_far && parity_fits; }
};
StaircaseEligibility staircase_eligibility(int n, int p, int r);

/// Closed-form block decomposition: one block per eligible staircase, given
/// by its two-core fiber, and a single residual block; characteristic 0
/// (p = 0) gives exactly the two-core fibers.
BlockDecomposition classify(int n, int p);

/// Least n from which the decomposition is a single block: ceil((p^2+7)/8).
int single_block_bound(int p);

/// Brute-force block decomposition over GF(p): primitive central idempotents
/// acting on the explicit standard modules.
struct OracleOptions {
    int max_n = 5;
    int murphy_limit = 7;
};
BlockDecomposition block_oracle(int n, int p, const OracleOptions& opt = {});

/// The primitive central idempotents the oracle splits against, as algebra
/// elements (GF(p) coefficients on diagrams).
std::vector<Element<Gfp>> central_primitive_idempotents(int n, int p, const OracleOptions& opt = {});

/// Reports from the structural cross-checks of the oracle decomposition;
/// empty vectors mean no violations.
struct LinkageReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};
LinkageReport check_two_hook_linkage(int n, int p, const BlockDecomposition& oracle);
LinkageReport check_transpose_symmetry(int n, int p, const BlockDecomposition& oracle);
LinkageReport check_p_core_linkage(int n, int p, const BlockDecomposition& oracle);

} // namespace pba
