#ifndef AXKATZ_JSON_IO_HPP
#define AXKATZ_JSON_IO_HPP

#include <map>
#include <string>

#include <json.hpp>

#include "axkatz/bounds.hpp"
#include "axkatz/calculus.hpp"
#include "axkatz/oracle.hpp"
#include "axkatz/poly.hpp"

// JSON encodings. Exact integers that do not fit in 64 bits are written as
// decimal strings; extended degrees are numbers or "inf" / "-inf".

namespace axkatz {

using Json = nlohmann::ordered_json;

Json to_json(const BigInt& x);
Json to_json(const ExtendedDegree& d);
Json to_json(const AbelianShape& shape);
Json to_json(const FiniteMap& f);
Json to_json(const BoundReport& r);
Json to_json(const VpWitness& w);
Json to_json(const ZeroCount& z);
Json to_json(const PrimeBound& b);
Json to_json(const VerifyReport& r);
Json to_json(const ProofTrace& t);
Json to_json(const PolyZeroCount& c);

/// {"domain":[4,2],"codomain":[2],"values":[[0],[1],...]}.
FiniteMap finite_map_from_json(const Json& j);
/// {"modulus":m,"vars":n,"polys":[{"degree":d,"terms":[[coeff,[exps...]],...]}]}.
PolySystem poly_system_from_json(const Json& j);

/// Reads and parses a JSON file; ValidationError on I/O or syntax errors.
Json read_json_file(const std::string& path);

const char* to_string(BoundCase c);
const char* to_string(VerifyMode m);

}  // namespace axkatz

#endif  // AXKATZ_JSON_IO_HPP
