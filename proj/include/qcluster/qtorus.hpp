// Exact arithmetic in quantum tori over Z[v, v^-1], v = q^(1/2).
//
// A quantum torus of rank n is generated by X_1..X_n subject to
// X_i X_j = q^(L_ij) X_j X_i for a skew-symmetric integer form L.  Elements are
// stored in the bar-normalized monomial basis
//
//   X^(a) := v^(-sum_{i<j} a_i a_j L_ij) X_1^a_1 ... X_n^a_n,
//
// in which the product is X^(a) X^(b) = v^(L(a,b)) X^(a+b).
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcluster {

using Integer = mpz_class;
using ExponentVector = std::vector<int>;

inline constexpr int kMaxRank = 64;

class FormMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InexactDivision : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Laurent polynomial in v with arbitrary-precision integer coefficients.
/// Sparse; no stored coefficient is zero.
class QuantumScalar {
public:
    QuantumScalar() = default;
    QuantumScalar(long c);  // NOLINT: integers embed as constants
    QuantumScalar(const Integer& c);  // NOLINT

    static QuantumScalar v_power(int e, const Integer& c = 1);

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<int, Integer>& coefficients() const { return coeffs_; }
    Integer coefficient(int e) const;

    /// Single term c * v^e with c = +-1.
    bool is_unit() const;
    int min_exponent() const;
    int max_exponent() const;
    /// All coefficients >= 0.
    bool is_nonnegative() const;

    QuantumScalar shifted(int e) const;  // multiply by v^e
    QuantumScalar bar() const;           // v -> v^-1
    Integer at_one() const;              // v = 1

    /// Exact quotient this / d; nullopt when d does not divide.
    std::optional<QuantumScalar> divide_exact(const QuantumScalar& d) const;

    QuantumScalar& operator+=(const QuantumScalar& o);
    QuantumScalar& operator-=(const QuantumScalar& o);
    QuantumScalar& operator*=(const QuantumScalar& o);
    friend QuantumScalar operator+(QuantumScalar a, const QuantumScalar& b) { return a += b; }
    friend QuantumScalar operator-(QuantumScalar a, const QuantumScalar& b) { return a -= b; }
    friend QuantumScalar operator*(QuantumScalar a, const QuantumScalar& b) { return a *= b; }
    QuantumScalar operator-() const;
    friend bool operator==(const QuantumScalar&, const QuantumScalar&) = default;

    /// Deterministic text form, e.g. "v^-2+3+v".
    std::string to_string() const;

private:
    void add_term(int e, const Integer& c);
    std::map<int, Integer> coeffs_;
};

/// Skew-symmetric integer form on Z^n.
class SkewForm {
public:
    SkewForm() = default;
    /// Throws std::invalid_argument unless entries is n x n skew-symmetric, 1 <= n <= 64.
    explicit SkewForm(std::vector<std::vector<int>> entries);

    static SkewForm zero(int rank);

    int rank() const { return static_cast<int>(entries_.size()); }
    int operator()(int i, int j) const { return entries_[i][j]; }
    const std::vector<std::vector<int>>& entries() const { return entries_; }

    /// L(a,b) = sum_ij a_i b_j L_ij
    long pairing(const ExponentVector& a, const ExponentVector& b) const;
    /// sum_{i<j} a_i a_j L_ij
    long normalization_exponent(const ExponentVector& a) const;

    SkewForm negated() const;

    friend bool operator==(const SkewForm&, const SkewForm&) = default;

private:
    std::vector<std::vector<int>> entries_;
};

using FormPtr = std::shared_ptr<const SkewForm>;

inline FormPtr make_form(SkewForm f) { return std::make_shared<const SkewForm>(std::move(f)); }

/// Commutative Laurent polynomial with integer coefficients (image of v = 1).
using LaurentPolynomial = std::map<ExponentVector, Integer>;

/// Finite Z[v^+-1]-combination of bar-normalized monomials.
class TorusElement {
public:
    using Terms = std::map<ExponentVector, QuantumScalar>;

    TorusElement() = default;
    explicit TorusElement(FormPtr form);

    static TorusElement zero(FormPtr form);
    static TorusElement one(FormPtr form);
    static TorusElement monomial(FormPtr form, ExponentVector a, QuantumScalar c = 1);
    /// X^(e_i)
    static TorusElement generator(FormPtr form, int i);

    const FormPtr& form() const { return form_; }
    int rank() const { return form_ ? form_->rank() : 0; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Single term whose coefficient is +-v^k.
    bool is_invertible_monomial() const;
    /// Largest term in lexicographic exponent order.  Throws on zero.
    const std::pair<const ExponentVector, QuantumScalar>& leading_term() const;

    TorusElement& operator+=(const TorusElement& o);
    TorusElement& operator-=(const TorusElement& o);
    friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
    friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
    friend TorusElement operator*(const TorusElement& a, const TorusElement& b);
    TorusElement operator-() const;

    TorusElement scaled(const QuantumScalar& c) const;
    TorusElement shifted(int e) const;  // multiply by v^e
    TorusElement bar() const;
    TorusElement power(unsigned k) const;
    /// Inverse of an invertible monomial.  Throws InexactDivision otherwise.
    TorusElement monomial_inverse() const;

    /// z with (*this) * z == r.  Throws InexactDivision if no Laurent quotient exists.
    TorusElement left_divide(const TorusElement& r) const;
    /// z with z * (*this) == r.
    TorusElement right_divide(const TorusElement& r) const;

    LaurentPolynomial specialize_classical() const;

    /// All scalars have nonnegative coefficients.
    bool has_nonnegative_coefficients() const;

    /// Canonical serialization: "[scalar]X^(a) + ..." in exponent order.
    std::string to_string() const;

    friend bool operator==(const TorusElement& a, const TorusElement& b);

private:
    void check_same_form(const TorusElement& o) const;
    FormPtr form_;
    Terms terms_;
};

bool same_form(const FormPtr& a, const FormPtr& b);

/// Returns m with x == v^m * y, or nullopt.
std::optional<int> detect_q_proportional(const TorusElement& x, const TorusElement& y);

/// v-exponent c with a*b == v^c * b*a, or nullopt when a and b do not q-commute.
std::optional<int> q_commutation_exponent(const TorusElement& a, const TorusElement& b);

std::string exponent_to_string(const ExponentVector& a);

}  // namespace qcluster
