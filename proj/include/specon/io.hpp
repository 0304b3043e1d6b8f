#ifndef SPECON_IO_HPP
#define SPECON_IO_HPP

#include <json.hpp>

#include "specon/catalog.hpp"

namespace specon {

using json = nlohmann::json;

// Record formats. Rationals serialize as canonical "p/q" (or "p") strings,
// matrices as row-major arrays of strings. Serialization emits sorted keys
// and canonical entry order, so parse . serialize is the identity on
// canonical records and machine output is byte-stable.

json algebra_to_json(const LieAlgebra& l);
LieAlgebra algebra_from_json(const json& j, const std::string& path = "$");

/// Pair record: the algebra record plus an "involution" matrix. Parsing
/// runs decompose(), so the result carries verified m and h.
json pair_to_json(const SymmetricPair& p);
SymmetricPair pair_from_json(const json& j, const std::string& path = "$");

json product_to_json(const ProductTensor& t);
ProductTensor product_from_json(const json& j, const std::string& path = "$");

json nonassoc_to_json(const NonassocAlgebra& a);
NonassocAlgebra nonassoc_from_json(const json& j, const std::string& path = "$");

json involution_to_json(const Involution& s);
Involution involution_from_json(const json& j, const std::string& path = "$");

json entry_to_json(const CatalogEntry& e);

enum class RecordKind { algebra, pair, product, nonassoc, involution };

/// Decides what a record is by its keys.
RecordKind sniff(const json& j);

json subspace_to_json(const Subspace& s);

/// Whole-file helpers.
json load_json_file(const std::string& path);
void write_file(const std::string& path, const std::string& bytes);

/// Canonical rendering: two-space indent, sorted keys, trailing newline.
std::string canonical_dump(const json& j);

/// FNV-1a 64-bit content digest, hex.
std::string digest(const std::string& bytes);

struct Report {
    std::string command;
    std::vector<std::string> inputs;  // content digests
    json findings = json::object();
    uint64_t seed = kDefaultSeed;
    std::string status = "ok";  // ok | rejected | violation
};

json report_to_json(const Report& r);

}  // namespace specon

#endif
