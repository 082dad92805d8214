// Quantum seeds: compatible pairs (Lambda, B~), mutation, and canonical keys.
//
// Indices are 0-based in the library.  Mutable variables occupy the prefix
// 0..m-1 and frozen ones m..n-1.  The exchange matrix follows the quiver
// convention b_ij = #arrows(i -> j) - #arrows(j -> i).
#pragma once

#include "qcluster/qtorus.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qcluster {

class SeedError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class RankError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// n x m integer matrix; rows = all variables, columns = mutable directions.
class ExchangeMatrix {
public:
    ExchangeMatrix() = default;
    ExchangeMatrix(int rank, int mutable_count);
    /// Throws SeedError unless rows are rectangular with m <= n.
    explicit ExchangeMatrix(std::vector<std::vector<int>> rows);

    int rank() const { return static_cast<int>(rows_.size()); }
    int mutable_count() const { return rows_.empty() ? 0 : static_cast<int>(rows_[0].size()); }
    int operator()(int i, int j) const { return rows_[i][j]; }
    int& operator()(int i, int j) { return rows_[i][j]; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    bool principal_part_skew_symmetric() const;

    friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) = default;

private:
    std::vector<std::vector<int>> rows_;
};

struct CompatibilityReport {
    bool ok = false;
    int d = 0;
    std::vector<std::vector<long>> product;  // B~^T Lambda, m x n
};

struct QuantumSeed {
    SkewForm lambda;
    ExchangeMatrix exchange;
    std::vector<std::string> labels;
    /// Cluster variables over the ambient (initial) torus.
    std::vector<TorusElement> variables;

    int rank() const { return lambda.rank(); }
    int mutable_count() const { return exchange.mutable_count(); }
    const FormPtr& ambient() const { return variables.front().form(); }

    /// Seed whose variables are X^(e_i) over the torus of lambda itself.
    static QuantumSeed initial(SkewForm lambda, ExchangeMatrix exchange, std::vector<std::string> labels = {});
};

/// Throws SeedError on inconsistent dimensions.
void validate_shape(const QuantumSeed& seed);

CompatibilityReport check_compatibility(const SkewForm& lambda, const ExchangeMatrix& b);
CompatibilityReport check_compatibility(const QuantumSeed& seed);

ExchangeMatrix mutate_exchange(const ExchangeMatrix& b, int k);
/// Lambda' = E^T Lambda E with E the elementary matrix for sign eps.
SkewForm mutate_lambda(const SkewForm& lambda, const ExchangeMatrix& b, int k, int eps);

/// Exchange binomial X^(-e_k + [b_k]_+) + X^(-e_k + [-b_k]_+) written in the
/// seed's own quantum torus (the torus of seed.lambda).
TorusElement exchange_binomial(const QuantumSeed& seed, int k);

/// The variable replacing variables[k] under mutation, over the ambient torus.
TorusElement mutated_variable(const QuantumSeed& seed, int k);

/// Throws SeedError for a bad or frozen index, or an incompatible seed.
QuantumSeed mutate(const QuantumSeed& seed, int k);

/// Bar-normalized monomial in the seed's variables: mutable exponents must be >= 0.
TorusElement seed_monomial(const QuantumSeed& seed, const ExponentVector& c);

/// Adjacency matrix of the GL_n quiver; ordering P_{1,1}, P_{1,0}, P_{2,1},
/// P_{2,0}, ..., P_{n-1,1}, P_{n-1,0}, P_{n,0} (mutable) then P_{0,det}.
ExchangeMatrix build_quiver_gln(int n);
std::vector<std::string> quiver_gln_labels(int n);

/// Integer skew-symmetric Lambda with B~^T Lambda = (d I | 0), or nullopt.
/// Throws RankError if B~ lacks full column rank.
std::optional<SkewForm> complete_lambda(const ExchangeMatrix& b, int d);

/// Key invariant under simultaneous permutation of mutable indices.
std::string canonical_form(const QuantumSeed& seed);
/// Mutable index order realizing the canonical key.
std::vector<int> canonical_order(const QuantumSeed& seed);
/// Seed with mutable indices permuted: new index i holds old index order[i].
QuantumSeed permute_mutable(const QuantumSeed& seed, const std::vector<int>& order);

}  // namespace qcluster
