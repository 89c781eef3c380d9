#pragma once
// Document formats. Model documents are JSON objects with the shape
//   {"agents": [..], "vertices": [{"id","colour"}..], "facets": [[..]..],
//    "valuation": {facet-key: [atom..]}, "neighborhoods": {vertex: [[facet-key..]..]}}
// where a facet key is the facet's sorted vertex ids joined by '+'. The
// canonical rendering sorts every object key and list; save then load is the
// identity on canonical documents.

#include <string>
#include <vector>

#include <json.hpp>

#include "simpsec/model.hpp"
#include "simpsec/proof.hpp"

namespace simpsec {

using Json = nlohmann::json;

std::string canonical_dump(const Json& j);

RawModel raw_model_from_json(const Json& j);
Json model_to_json(const SecrecyModel& m);

RawModel load_raw_model_file(const std::string& path);
SecrecyModel load_model_file(const std::string& path);
SecrecyModel load_model_string(const std::string& text);
void save_model_file(const SecrecyModel& m, const std::string& path);

Json violation_to_json(const SNViolation& v);
Json witness_to_json(const SNWitness& w);

Derivation derivation_from_json(const Json& j);
Json derivation_to_json(const Derivation& d);
Derivation load_derivation_file(const std::string& path);
Derivation load_derivation_string(const std::string& text);

// one formula per line; blank lines and '#' comments are skipped
std::vector<Formula> load_pool_file(const std::string& path);
std::vector<Formula> parse_pool(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace simpsec
