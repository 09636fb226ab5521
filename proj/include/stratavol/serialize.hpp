#pragma once

#include "stratavol/pi_scaled.hpp"
#include "stratavol/pnum.hpp"
#include "stratavol/rational.hpp"
#include "stratavol/ribbon.hpp"

#include <cstdint>
#include <string>

#include "json.hpp"

namespace stratavol::serialize {

using Json = nlohmann::ordered_json;

/// "p/q", or "p" when q = 1.
Json to_json(const exact::Rational& r);
/// {"coeff": "p/q", "pi_exp": m}
Json to_json(const exact::PiScaled& v);
/// Darts 2e (black end) and 2e+1 (white end) of edge e.
Json to_json(const ribbon::GraphClass& cls);

/// Inverse of to_json for rationals. Throws std::invalid_argument.
exact::Rational rational_from_json(const Json& j);

/// Array of {"parts": [...], "value": "integer"}, ordered by index.
Json pnumber_dump(const std::map<pnum::PartitionIndex, exact::Integer>& entries);
/// Throws std::invalid_argument on any malformed entry.
std::map<pnum::PartitionIndex, exact::Integer> pnumber_parse(const Json& j);

struct CacheLoad {
    bool accepted = false;
    std::size_t entries = 0;
    /// Empty when accepted.
    std::string problem;
};

/// Loads a p-number dump into `table`. A missing file is accepted with no
/// entries. Otherwise one entry chosen by `seed` is recomputed from scratch;
/// on a parse error or mismatch nothing is inserted.
CacheLoad load_pnumber_cache(const std::string& path, pnum::PNumberTable& table, std::uint64_t seed);

/// Writes the table through a temporary file and a rename.
void save_pnumber_cache(const std::string& path, const pnum::PNumberTable& table);

}  // namespace stratavol::serialize
