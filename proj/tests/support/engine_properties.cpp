#include "engine_properties.hpp"

#include <gmpxx.h>

namespace qcluster::testing {

namespace {

int pick(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

QuantumSeed principal(std::mt19937& rng, int m) {
    std::vector<std::vector<int>> b(2 * m, std::vector<int>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            b[i][j] = pick(rng, -2, 2);
            b[j][i] = -b[i][j];
        }
    for (int i = 0; i < m; ++i) b[m + i][i] = 1;
    ExchangeMatrix bt(b);
    for (int d : {1, -1, 2, -2}) {
        auto lam = complete_lambda(bt, d);
        if (lam) return QuantumSeed::initial(*lam, bt);
    }
    throw std::logic_error("principal coefficients admit no compatible form");
}

}  // namespace

QuantumSeed random_principal_seed(std::mt19937& rng, int m, int walk) {
    QuantumSeed s = principal(rng, m);
    for (int t = 0; t < walk; ++t) s = mutate(s, pick(rng, 0, m - 1));
    return s;
}

bool seeds_equal(const QuantumSeed& a, const QuantumSeed& b) {
    return a.lambda == b.lambda && a.exchange == b.exchange && a.labels == b.labels && a.variables == b.variables;
}

PropertyTally check_involution(int count, std::uint32_t seed) {
    std::mt19937 rng(seed);
    PropertyTally t;
    for (int i = 0; i < count; ++i) {
        QuantumSeed s = random_principal_seed(rng, pick(rng, 1, 3), pick(rng, 0, 4));
        int k = pick(rng, 0, s.mutable_count() - 1);
        t.check(seeds_equal(mutate(mutate(s, k), k), s), "involution at instance " + std::to_string(i));
    }
    return t;
}

PropertyTally check_d_conservation(int count, std::uint32_t seed) {
    std::mt19937 rng(seed);
    PropertyTally t;
    for (int i = 0; i < count; ++i) {
        QuantumSeed s = random_principal_seed(rng, pick(rng, 1, 4), pick(rng, 0, 3));
        const int d = check_compatibility(s).d;
        QuantumSeed r = mutate(s, pick(rng, 0, s.mutable_count() - 1));
        auto c = check_compatibility(r);
        t.check(c.ok && c.d == d, "d changed at instance " + std::to_string(i));
    }
    return t;
}

PropertyTally check_eps_independence(int count, std::uint32_t seed) {
    std::mt19937 rng(seed);
    PropertyTally t;
    for (int i = 0; i < count; ++i) {
        QuantumSeed s = random_principal_seed(rng, pick(rng, 1, 4), pick(rng, 0, 3));
        int k = pick(rng, 0, s.mutable_count() - 1);
        t.check(mutate_lambda(s.lambda, s.exchange, k, 1) == mutate_lambda(s.lambda, s.exchange, k, -1),
                "sign dependence at instance " + std::to_string(i));
    }
    return t;
}

namespace {

mpq_class evaluate(const LaurentPolynomial& p, const std::vector<mpq_class>& x) {
    mpq_class total = 0;
    for (const auto& [e, c] : p) {
        mpq_class term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            mpq_class base = e[i] >= 0 ? x[i] : mpq_class(1) / x[i];
            for (int r = 0; r < std::abs(e[i]); ++r) term *= base;
        }
        total += term;
    }
    return total;
}

}  // namespace

PropertyTally check_classical_oracle(int count, std::uint32_t seed) {
    std::mt19937 rng(seed);
    PropertyTally t;
    for (int i = 0; i < count; ++i) {
        QuantumSeed s = principal(rng, pick(rng, 1, 3));
        const int n = s.rank(), m = s.mutable_count();
        std::vector<mpq_class> point(n);
        for (auto& p : point) {
            p = mpq_class(pick(rng, 1, 9), pick(rng, 1, 5));
            p.canonicalize();
        }
        // Values of the current cluster at `point`, updated by x_k x_k' = prod + prod.
        std::vector<mpq_class> value = point;
        std::vector<std::vector<int>> b = s.exchange.rows();
        bool ok = true;
        const int steps = pick(rng, 1, 6);
        for (int step = 0; step < steps && ok; ++step) {
            const int k = pick(rng, 0, m - 1);
            mpq_class plus = 1, minus = 1;
            for (int r = 0; r < n; ++r) {
                for (int e = 0; e < std::max(b[r][k], 0); ++e) plus *= value[r];
                for (int e = 0; e < std::max(-b[r][k], 0); ++e) minus *= value[r];
            }
            value[k] = (plus + minus) / value[k];
            // Matrix mutation written out again for the oracle.
            auto nb = b;
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < m; ++c) {
                    if (r == k || c == k)
                        nb[r][c] = -b[r][c];
                    else if (b[r][k] > 0 && b[k][c] > 0)
                        nb[r][c] = b[r][c] + b[r][k] * b[k][c];
                    else if (b[r][k] < 0 && b[k][c] < 0)
                        nb[r][c] = b[r][c] - b[r][k] * b[k][c];
                }
            b = nb;
            s = mutate(s, k);
            for (int r = 0; r < n; ++r)
                if (evaluate(s.variables[r].specialize_classical(), point) != value[r]) ok = false;
            if (s.exchange.rows() != b) ok = false;
        }
        t.check(ok, "classical disagreement at instance " + std::to_string(i));
    }
    return t;
}

}  // namespace qcluster::testing
