#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diffposet/poset.hpp"

namespace diffposet {

struct VerifyOptions {
    std::vector<int> ks{1, 2, 3};
    int n_min = 0;
    int n_max = -1; // -1: everything below the truncation boundary
    std::optional<int> r_override;
};

struct VerifyRecord {
    std::string check;
    int n = -1; // -1 when the check is not rank-specific
    int k = -1;
    bool pass = false;
    std::string detail;
};

struct VerifyResult {
    bool all_pass = false;
    std::vector<VerifyRecord> records;

    int exit_status() const { return all_pass ? 0 : 1; }
};

// The full verification pipeline, in order: axiom certification, chain
// pair, fundamental identity over the (n, k) grid, first-column check,
// Smith divisibility, spectrum factorization, growth certificates.
// Independent (n, k) jobs run in parallel; the record order is
// deterministic. Failures are records, never exceptions.
VerifyResult verify_all(const GradedPoset& poset, const VerifyOptions& opts = {});

} // namespace diffposet
