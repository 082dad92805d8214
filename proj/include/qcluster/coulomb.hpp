// GL_1 and GL_2 Coulomb-branch data: initial seeds, the loop-shift fit, the
// simple-class registry built along the exchange graph, and the relation,
// twist and positivity checks run against it.
#pragma once

#include "qcluster/graph.hpp"
#include "qcluster/relations.hpp"
#include "qcluster/report.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcluster {

class FitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RegistryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Coefficient form L and exchange matrix of the GL_2 seed; labels
/// P_{1,1}, P_{1,0}, P_{2,0}, P_{0,det}.
QuantumSeed initial_seed_gl2();

/// One mutable vertex P_{1,0} and the frozen Koszul unit, with the single
/// arrow frozen -> mutable and Lambda_12 = lambda12.
QuantumSeed initial_seed_gl1(int lambda12 = 2);

/// Registry holding the seed's own variables under their labels.
SimpleClassRegistry initial_registry(const QuantumSeed& seed, int loop_shift2);

/// Commutation relations whose labels all belong to the seed.
std::vector<RelationInstance> initial_commutation_relations(const QuantumSeed& seed);

/// Unique 2s in {+-4, +-2, +-1} for which every relation holds on the seed's
/// own classes.  Throws FitError when none or several survive.
int fit_loop_shift(const QuantumSeed& seed, const std::vector<RelationInstance>& relations);

struct LabeledGraph {
    ExchangeGraph graph;
    /// Per node, labels aligned with the canonical variable positions.
    std::map<std::string, std::vector<SimpleLabel>> labels;
};

/// Explores the GL_2 seed and labels every cluster variable by the flip rule
/// of the strip-and-fans triangulation.  Throws RegistryError on conflicts.
LabeledGraph label_gl2_graph(int depth, int threads = 1);

/// Key of the node whose mutable labels are exactly `cluster`; empty if none.
std::string find_cluster(const LabeledGraph& g, std::vector<SimpleLabel> cluster);

struct Gl2Model {
    QuantumSeed root;
    LabeledGraph graph;
    SimpleClassRegistry registry;
    int ell_window = 0;
    int depth = 0;
    /// Graph labels in the window that no available relation pins down.
    std::vector<SimpleLabel> unresolved;
};

/// Registry over ell in [-ell_window, ell_window].  Each new class is fixed
/// by one relation instance; all others remain checks.  Throws RegistryError
/// when a relation forces a class that is not a frozen multiple of the
/// cluster variable carrying the same label.
Gl2Model build_gl2_model(int depth, int ell_window, int threads = 1);
SimpleClassRegistry build_registry(int depth, int ell_window);

/// Frozen exponent f and v-power a with target = v^a * F^f * x, if any.
std::optional<Normalization> match_up_to_frozen(const TorusElement& target, const TorusElement& x, int frozen_index);

/// Registry label whose class matches x up to frozen monomial and v-power.
std::optional<std::pair<SimpleLabel, Normalization>> identify(const SimpleClassRegistry& reg, const TorusElement& x);

Report verify_relations(const SimpleClassRegistry& reg, Suite suite, int lo, int hi);

/// Left dual label for GL_2: P_{1,l} -> P_{-1,2-l}, P_{-1,l} -> P_{1,-l-1}.
SimpleLabel left_dual_label(const SimpleLabel& l);

Report verify_twist_duality(const Gl2Model& model);

/// q-commutation exponents of every commute instance equal v^(2 s m).
Report verify_commutation_closure(const SimpleClassRegistry& reg, int lo, int hi);

/// Pairs of registry classes that q-commute versus pairs sharing a cluster.
Report verify_common_clusters(const Gl2Model& model);

/// Nonnegative coefficients for all cluster variables within `depth` and
/// for every registry class; bar invariance of registry classes.
Report verify_positivity(const Gl2Model& model, int depth, int threads = 1);

/// Depth-limited inventory against the labels assigned by the flip rule.
Report verify_inventory(const Gl2Model& model, int depth);

struct Gl1Model {
    QuantumSeed root;
    SimpleClassRegistry registry;
    int lambda12 = 0;
};

/// Searches Lambda_12 in {+-1, +-2} for a seed on which both top exchange
/// relations at ell = 0 hold.  Throws FitError unless exactly one survives.
Gl1Model build_gl1_model(int loop_shift2);

/// Both orders of P_{1,0} * P_{-1,0} equal the unit plus a v-power times one
/// frozen monomial, with opposite v-powers and equal classical images.
Report verify_abelian(const Gl1Model& model);

}  // namespace qcluster
