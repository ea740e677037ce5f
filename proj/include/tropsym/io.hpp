#pragma once

#include <string>

#include <json.hpp>

#include "tropsym/chain_of_loops.hpp"
#include "tropsym/chipfiring.hpp"
#include "tropsym/divisor.hpp"
#include "tropsym/model.hpp"
#include "tropsym/sympow.hpp"

// JSON encodings. Rationals are always "num/den" strings in lowest terms;
// integers are bare. Decoders throw SchemaError (with the offending field's
// path) for malformed input and DomainError for well-formed but invalid
// values.
namespace tropsym::io {

using json = nlohmann::json;

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j, const std::string& path);

/// {"vertices":[{"id","weight"}],"edges":[{"id","tail","head","length"}]}
json model_to_json(const Model& m);
Model model_from_json(const json& j);

/// {"vertex": id} or {"edge": id, "pos": "num/den"}
json point_to_json(const Model& m, const PointOnModel& p);
PointOnModel point_from_json(const json& j, const Model& m,
                             const std::string& path);

/// {"terms":[{"at": point, "coeff": int}]}
json divisor_to_json(const Divisor& d);
Divisor divisor_from_json(const json& j, const ModelPtr& host);

/// {"base": point, "representative": divisor}
json class_to_json(const DivisorClass& c);

/// {"l":[...],"m":[...],"bridges":[...]}
json chain_spec_to_json(const ChainOfLoopsSpec& spec);
ChainOfLoopsSpec chain_spec_from_json(const json& j);

json complex_to_json(const SymPowComplex& c);
SymPowComplex complex_from_json(const json& j, const ModelPtr& host);
/// Hasse diagram of the cell poset in Graphviz dot syntax.
std::string complex_to_dot(const SymPowComplex& c);

/// Reads and parses a JSON file; SchemaError on I/O or syntax errors.
json read_json_file(const std::string& path);

}  // namespace tropsym::io
