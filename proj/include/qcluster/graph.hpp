// Exchange graphs: breadth-first mutation closure, acyclicity, twists.
#pragma once

#include "qcluster/seed.hpp"

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace qcluster {

class AcyclicityError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct ExchangeGraph {
    std::string root;
    /// Seeds stored with mutable indices in canonical order.
    std::map<std::string, QuantumSeed> nodes;
    std::map<std::string, int> depth;
    /// (from, k, to) with k an index of the canonically ordered `from` seed.
    std::set<std::tuple<std::string, int, std::string>> edges;
    /// True when expanding the last layer produced no unseen seed.
    bool closed = false;
};

/// All seeds within `depth` mutations of root.  Expansion of each layer may
/// run on `threads` workers; the result does not depend on the count.
ExchangeGraph explore(const QuantumSeed& root, int depth, int threads = 1);

struct AcyclicityResult {
    bool acyclic = false;
    std::vector<int> order;  // source-first, lowest index among ties
};

/// Edge i -> j iff b_ij > 0 on the mutable block.
AcyclicityResult is_acyclic(const QuantumSeed& seed);

/// Mutable vertex with no incoming arrow.
bool is_source(const QuantumSeed& seed, int i);

struct TwistResult {
    QuantumSeed seed;
    std::vector<int> sequence;
};

/// Mutates once at every mutable vertex, each time at the lowest-index
/// current source not yet used.  Throws AcyclicityError on a cyclic seed.
TwistResult twist(const QuantumSeed& seed);

/// Distinct cluster variables of the graph sorted by serialization.
std::vector<TorusElement> variable_inventory(const ExchangeGraph& graph, bool mutable_only = true);

}  // namespace qcluster
