// JSON forms of seeds, elements, reports, graphs, characters and pairs.
// Objects use sorted keys so output is byte-stable.
#pragma once

#include "qcluster/charcalc.hpp"
#include "qcluster/graph.hpp"
#include "qcluster/pairs.hpp"
#include "qcluster/report.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace qcluster {

using Json = nlohmann::json;

class FormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Json scalar_to_json(const QuantumScalar& c);
QuantumScalar scalar_from_json(const Json& j);

/// [{"x": [exponents], "c": [[v-exponent, "coefficient"], ...]}, ...]
Json element_to_json(const TorusElement& x);
TorusElement element_from_json(const Json& j, const FormPtr& form);

/// {rank, mutable, lambda, b, labels, vars, ambient}.  `vars` and `ambient`
/// are optional on input; variables default to the generators and the
/// ambient form to lambda.
Json seed_to_json(const QuantumSeed& seed);
/// Throws FormatError on malformed input and SeedError on invalid seeds.
QuantumSeed seed_from_json(const Json& j);

Json report_to_json(const Report& r);
Json graph_to_json(const ExchangeGraph& g);
Json character_to_json(const TruncatedCharacter& c);
Json pair_to_json(const DominantPair& p);

/// Throws FormatError when the file cannot be read or parsed.
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace qcluster
