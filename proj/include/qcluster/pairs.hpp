// Dominant pairs (lambda, mu) indexing simple objects for GL_n: S_n-orbit
// representatives of the diagonal action on Z^n x Z^n.
#pragma once

#include "qcluster/relations.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qcluster {

struct DominantPair {
    std::vector<int> lambda;  // weakly decreasing
    std::vector<int> mu;      // weakly decreasing where lambda is constant

    int n() const { return static_cast<int>(lambda.size()); }
    friend auto operator<=>(const DominantPair&, const DominantPair&) = default;
};

/// Sorts positions by (lambda desc, mu desc).  Throws std::invalid_argument on
/// a length mismatch.
DominantPair canonicalize(std::vector<int> lambda, std::vector<int> mu);

bool is_dominant(const DominantPair& p);

/// All dominant pairs with entries in [lo, hi], sorted, without duplicates.
std::vector<DominantPair> enumerate_box(int n, int lo, int hi);

class GuardExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Orbit count by explicit partition of the box.  Throws GuardExceeded unless
/// n <= 4 and side^(2n) * n! <= 1e8.
std::int64_t orbit_count_bruteforce(int n, int lo, int hi);

/// Weight dictionary: P_{k,l} -> ((1^k,0^{n-k}), (l^k,0^{n-k})),
/// P_{-k,l} -> ((0^{n-k},(-1)^k), (0^{n-k},l^k)), P_{0,det} -> (0, (1^n)).
DominantPair label_to_pair(const SimpleLabel& label, int n);

}  // namespace qcluster
