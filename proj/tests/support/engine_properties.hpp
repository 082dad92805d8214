// Randomized property checks of the mutation engine, shared by the unit and
// acceptance tests.  The classical oracle evaluates commutative exchange
// relations at rational points and never touches the quantum torus code.
#pragma once

#include "qcluster/seed.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace qcluster::testing {

struct PropertyTally {
    int instances = 0;
    int failures = 0;
    std::string first_failure;

    void check(bool ok, const std::string& what) {
        ++instances;
        if (!ok && failures++ == 0) first_failure = what;
    }
};

/// Seed with principal coefficients over a random skew-symmetric m x m
/// block (entries in [-2, 2]), followed by `walk` random mutations.
QuantumSeed random_principal_seed(std::mt19937& rng, int m, int walk);

bool seeds_equal(const QuantumSeed& a, const QuantumSeed& b);

PropertyTally check_involution(int count, std::uint32_t seed);
PropertyTally check_d_conservation(int count, std::uint32_t seed);
PropertyTally check_eps_independence(int count, std::uint32_t seed);
PropertyTally check_classical_oracle(int count, std::uint32_t seed);

}  // namespace qcluster::testing
