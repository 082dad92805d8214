// Symbolic simple-object labels, relation templates and their evaluation
// against a registry of K-classes.
//
// An exact sequence 0 -> A -> B -> C -> 0 becomes the identity [B] = [A] + [C];
// a loop shift {m} multiplies a class by v^(2s m) with 2s the registry's fitted
// loop-shift exponent.
#pragma once

#include "qcluster/qtorus.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qcluster {

struct SimpleLabel {
    enum class Kind { P, Pdet, Unit, KoszulUnit };
    Kind kind = Kind::Unit;
    int k = 0;
    int ell = 0;

    /// P_{k,l}; k = 0 gives the unit.
    static SimpleLabel p(int k, int ell);
    static SimpleLabel det() { return {Kind::Pdet, 0, 0}; }
    static SimpleLabel unit() { return {Kind::Unit, 0, 0}; }
    static SimpleLabel koszul() { return {Kind::KoszulUnit, 0, 0}; }

    bool is_frozen() const { return kind == Kind::Pdet || kind == Kind::KoszulUnit; }
    std::string to_string() const;
    /// Inverse of to_string.  Throws std::invalid_argument.
    static SimpleLabel parse(const std::string& text);

    friend auto operator<=>(const SimpleLabel&, const SimpleLabel&) = default;
};

struct Factor {
    SimpleLabel label;
    int power = 1;  // -1 allowed for frozen labels only
};

struct Word {
    std::vector<Factor> factors;
    int shift = 0;  // loop shift {shift}
};

struct RelationInstance {
    std::string family;
    std::map<std::string, int> params;
    std::vector<Word> lhs;  // sum of lhs classes equals sum of rhs classes
    std::vector<Word> rhs;

    std::string name() const;
    std::vector<SimpleLabel> labels() const;
};

enum class Suite { MutN, Old, Commute, Glue, Abelian };

std::string suite_name(Suite s);
/// Throws std::invalid_argument for unknown names.
Suite parse_suite(const std::string& name);

/// Instances of a suite for GL_n over ell in [lo, hi].  Commute and Glue are
/// defined for n = 2, Abelian for n = 1.
std::vector<RelationInstance> instantiate(Suite suite, int n, int lo, int hi);

struct Normalization {
    int frozen_exponent = 0;  // class = v^v_power * F^frozen_exponent * x
    int v_power = 0;
    std::string designated;  // relation instance that fixed it
};

struct SimpleClassRegistry {
    FormPtr ambient;
    int frozen_index = 0;
    SimpleLabel frozen_label = SimpleLabel::det();
    int loop_shift2 = 0;  // 2s: [F{m}] = v^(2 s m) [F]
    std::map<SimpleLabel, TorusElement> classes;
    std::map<SimpleLabel, Normalization> normalizations;

    bool has(const SimpleLabel& l) const;
    /// Unit and the frozen label are always available.  Throws std::out_of_range.
    TorusElement class_of(const SimpleLabel& l) const;
};

/// Value of a word; nullopt when some label is missing.
std::optional<TorusElement> evaluate_word(const Word& w, const SimpleClassRegistry& reg);
std::optional<TorusElement> evaluate_side(const std::vector<Word>& side, const SimpleClassRegistry& reg);

struct InstanceResult {
    std::string status;  // pass, fail or skip
    TorusElement lhs;
    TorusElement rhs;
    std::vector<SimpleLabel> missing;
};

InstanceResult evaluate(const RelationInstance& inst, const SimpleClassRegistry& reg);

/// Number of occurrences of `unknown` in the instance.
int occurrences(const RelationInstance& inst, const SimpleLabel& unknown);

/// Solves an instance in which `unknown` occurs once, with every other label
/// registered.  Returns the class forced on `unknown`, or nullopt when the
/// instance does not have that shape or the division is inexact.
std::optional<TorusElement> solve_linear(const RelationInstance& inst, const SimpleLabel& unknown,
                                         const SimpleClassRegistry& reg);

}  // namespace qcluster
