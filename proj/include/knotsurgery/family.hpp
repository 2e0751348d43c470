#pragma once

#include <cstdint>
#include <vector>

#include "knotsurgery/laurent.hpp"

namespace knotsurgery {

inline constexpr std::int64_t kDefaultPCap = 1000;

struct FamilyRow {
    std::int64_t p;
    LaurentPoly delta_gamma;
    std::size_t lower_bound;
    bool lemma63_ok;
    std::int64_t genus;
    std::int64_t span;

    friend bool operator==(const FamilyRow&, const FamilyRow&) = default;
};

/// Per-p invariants of X_p for a range of p, sorted by p.
struct FamilyReport {
    std::int64_t n;
    std::vector<FamilyRow> rows;

    friend bool operator==(const FamilyReport&, const FamilyReport&) = default;
};

/// Rows are computed on `threads` workers (0 picks the hardware
/// concurrency); the result does not depend on the schedule.
FamilyReport analyze_family(std::int64_t n, std::int64_t p_min, std::int64_t p_max,
                            std::int64_t p_cap = kDefaultPCap, unsigned threads = 0);

struct Witness {
    std::int64_t p;
    std::size_t lower_bound;

    friend bool operator==(const Witness&, const Witness&) = default;
};

/// Witnesses with strictly increasing p and strictly increasing basic-class
/// lower bounds, the last of which exceeds `target`.
///
/// Unbounded lower bounds imply that infinitely many X_p are pairwise
/// non-diffeomorphic; a certificate never claims that two particular
/// members differ.
struct UnboundednessCertificate {
    static constexpr int kSchemaVersion = 1;

    std::int64_t target;
    std::vector<Witness> witnesses;

    friend bool operator==(const UnboundednessCertificate&, const UnboundednessCertificate&) = default;
};

/// Greedy scan p = 1, 2, ... keeping each p whose bound beats the running
/// maximum. Throws CapExhausted if p_cap is passed before the target.
UnboundednessCertificate certify_unbounded(std::int64_t target, std::int64_t p_cap = kDefaultPCap);

/// Recomputes every witness from scratch for E(n); false on any mismatch.
bool verify_certificate(const UnboundednessCertificate& c, std::int64_t n);

} // namespace knotsurgery
