#include "qcluster/graph.hpp"

#include <algorithm>
#include <thread>

namespace qcluster {

namespace {

struct Canonical {
    std::string key;
    QuantumSeed seed;
    std::vector<int> order;  // canonical position i holds original index order[i]
};

Canonical canonicalize(const QuantumSeed& s) {
    std::vector<int> order = canonical_order(s);
    QuantumSeed c = permute_mutable(s, order);
    return {canonical_form(c), std::move(c), std::move(order)};
}

struct Expansion {
    Canonical target;
    int back_index = 0;  // position of the exchanged variable in target
};

Expansion expand(const QuantumSeed& s, int k) {
    Expansion e{canonicalize(mutate(s, k)), 0};
    const auto& ord = e.target.order;
    e.back_index = static_cast<int>(std::find(ord.begin(), ord.end(), k) - ord.begin());
    return e;
}

}  // namespace

ExchangeGraph explore(const QuantumSeed& root, int depth, int threads) {
    if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
    const CompatibilityReport rep = check_compatibility(root);
    if (!rep.ok) throw SeedError("root seed is not compatible");
    threads = std::max(1, threads);

    ExchangeGraph g;
    Canonical c = canonicalize(root);
    g.root = c.key;
    g.nodes.emplace(c.key, std::move(c.seed));
    g.depth[g.root] = 0;

    const int m = root.mutable_count();
    std::vector<std::string> frontier{g.root};
    for (int level = 0; level <= depth && !frontier.empty(); ++level) {
        // The layer at `depth` is expanded only to record edges between known seeds.
        std::vector<std::pair<std::string, int>> jobs;
        for (const auto& key : frontier)
            for (int k = 0; k < m; ++k) jobs.emplace_back(key, k);
        std::vector<Expansion> results(jobs.size());
        auto work = [&](std::size_t begin, std::size_t stride) {
            for (std::size_t j = begin; j < jobs.size(); j += stride)
                results[j] = expand(g.nodes.at(jobs[j].first), jobs[j].second);
        };
        if (threads == 1 || jobs.size() < 2) {
            work(0, 1);
        } else {
            std::vector<std::thread> pool;
            const std::size_t n = std::min<std::size_t>(threads, jobs.size());
            for (std::size_t t = 0; t < n; ++t) pool.emplace_back(work, t, n);
            for (auto& t : pool) t.join();
        }

        std::set<std::string> next;
        bool grew = false;
        for (std::size_t j = 0; j < jobs.size(); ++j) {
            auto& r = results[j];
            const std::string& from = jobs[j].first;
            if (!g.nodes.count(r.target.key)) {
                grew = true;
                if (level == depth) continue;
                g.depth[r.target.key] = level + 1;
                g.nodes.emplace(r.target.key, std::move(r.target.seed));
                next.insert(r.target.key);
            }
            g.edges.emplace(from, jobs[j].second, r.target.key);
            g.edges.emplace(r.target.key, r.back_index, from);
        }
        if (level == depth) g.closed = !grew;
        if (next.empty() && level < depth) g.closed = true;
        frontier.assign(next.begin(), next.end());
    }
    return g;
}

bool is_source(const QuantumSeed& seed, int i) {
    const int m = seed.mutable_count();
    for (int j = 0; j < m; ++j)
        if (seed.exchange(j, i) > 0) return false;
    return true;
}

AcyclicityResult is_acyclic(const QuantumSeed& seed) {
    const int m = seed.mutable_count();
    std::vector<int> indeg(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (seed.exchange(i, j) > 0) ++indeg[j];
    AcyclicityResult r;
    std::vector<bool> done(m, false);
    for (int step = 0; step < m; ++step) {
        int pick = -1;
        for (int i = 0; i < m; ++i)
            if (!done[i] && indeg[i] == 0) {
                pick = i;
                break;
            }
        if (pick < 0) return r;
        done[pick] = true;
        r.order.push_back(pick);
        for (int j = 0; j < m; ++j)
            if (seed.exchange(pick, j) > 0) --indeg[j];
    }
    r.acyclic = true;
    return r;
}

TwistResult twist(const QuantumSeed& seed) {
    if (!is_acyclic(seed).acyclic) throw AcyclicityError("twist requires an acyclic mutable quiver");
    const int m = seed.mutable_count();
    TwistResult r{seed, {}};
    std::vector<bool> used(m, false);
    for (int step = 0; step < m; ++step) {
        int pick = -1;
        for (int i = 0; i < m; ++i)
            if (!used[i] && is_source(r.seed, i)) {
                pick = i;
                break;
            }
        if (pick < 0) throw AcyclicityError("no unused source available during twist");
        used[pick] = true;
        r.seed = mutate(r.seed, pick);
        r.sequence.push_back(pick);
    }
    return r;
}

std::vector<TorusElement> variable_inventory(const ExchangeGraph& graph, bool mutable_only) {
    std::map<std::string, TorusElement> seen;
    for (const auto& [key, s] : graph.nodes) {
        const int upto = mutable_only ? s.mutable_count() : s.rank();
        for (int i = 0; i < upto; ++i) seen.emplace(s.variables[i].to_string(), s.variables[i]);
    }
    std::vector<TorusElement> out;
    out.reserve(seen.size());
    for (auto& [k, v] : seen) out.push_back(v);
    return out;
}

}  // namespace qcluster
