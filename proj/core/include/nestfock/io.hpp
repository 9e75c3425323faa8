#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "nestfock/basis_change.hpp"
#include "nestfock/curve_classes.hpp"
#include "nestfock/fock.hpp"
#include "nestfock/incidence.hpp"
#include "nestfock/partition.hpp"
#include "nestfock/symfunc.hpp"

namespace nestfock {

// Keys keep insertion order so documents read naturally; output is still
// deterministic.
using Json = nlohmann::ordered_json;

// Readers throw DomainError on malformed input.

Json to_json(const Partition& p);  // [5,4,4,4,2,2]
Partition partition_from_json(const Json& j);
Json to_json(const Cell& c);  // [row, col]
Json to_json(const IncidencePair& p);  // {"lambda": [...], "mu": [...]}
IncidencePair pair_from_json(const Json& j);
Json to_json(const B2Key& k);  // {"i": 1, "nu": [...]}
B2Key b2key_from_json(const Json& j);
Json to_json(const B3Key& k);
Json to_json(const HilbPKey& k);
Json to_json(const HilbFixedKey& k);
Json to_json(const HilbLKey& k);
Json to_json(const BasisKey& k);
Json to_json(const EulerClass& e);

// [{"key": ..., "coeff": "p/q"}, ...] in key order.
template <class K>
Json to_json(const FockVector<K>& v) {
  Json out = Json::array();
  for (const auto& [k, c] : v) out.push_back(Json{{"key", to_json(k)}, {"coeff", to_fraction_string(c)}});
  return out;
}

Json symfunc_to_json(const SymFunc& f);  // {"p": [{"partition", "coeff"}]}
Json to_json(const PolyV& f);  // {"p": [{"partition", "v", "coeff"}]}

// {"source", "target", "degree", "triangularity", "source_keys",
//  "target_keys", "rows"}.
Json to_json(const TransitionMatrix& m);
Json rows_to_json(const RatMatrix& m);
RatMatrix rows_from_json(const Json& rows, std::size_t n_rows, std::size_t n_cols);

// Compact single-line rendering of a key, used as a CSV header cell.
std::string key_label(const BasisKey& k);

// Header row of target keys, then one row per source key (first cell the
// source key label). Cells holding commas or quotes are quoted.
std::string to_csv(const TransitionMatrix& m);

}  // namespace nestfock
