// JSON encodings of the library types. Dyadic numbers travel as strings
// ("1/4") so that values stay exact.

#ifndef RBT_SERIALIZE_HPP_
#define RBT_SERIALIZE_HPP_

#include <string>

#include <json.hpp>

#include "rbt/classify.hpp"
#include "rbt/extension.hpp"

namespace rbt {

using Json = nlohmann::ordered_json;

Json to_json(const Dyadic& x);
Dyadic dyadic_from_json(const Json& j);

Json to_json(const AffineMap& f);  // {"b": [...], "B": [[...]]}
AffineMap affine_map_from_json(const Json& j);

Json to_json(const BottMatrix& a);  // {"n": .., "rows": [[..]]}
BottMatrix bott_matrix_from_json(const Json& j);

Json to_json(const GroupElement& x, int n);  // {"v": [..], "s": "0101"}
GroupElement group_element_from_json(const Json& j);

Json to_json(const CocycleTable& f);  // nonzero entries only
CocycleTable cocycle_table_from_json(const Json& j, int n);

Json to_json(const AbelianInvariants& a);
Json to_json(const Multiset& m);
Json to_json(const Fingerprint& fp);
Json to_json(const InvariantVector& v);

// Matrices are named through `labels` (label if known, compact form otherwise).
Json to_json(const Witness& w, const LabelTable& labels);
// Accepts labels, compact strings or row objects for source and target.
Witness witness_from_json(const Json& j, const LabelTable& labels);

Json to_json(const SearchSpace& s);
Json to_json(const Partition& p, const LabelTable& labels);

Reference reference_from_json(const Json& j);
Reference load_reference(const std::string& path);

// Reads a whole file; throws std::runtime_error if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace rbt

#endif
