#pragma once

#include "hurwitz/numeric.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/structure.hpp"
#include "hurwitz/verify.hpp"
#include "hurwitz/young_trees.hpp"

#include <json.hpp>

namespace hurwitz {

/// Insertion-ordered so serialized reports are byte-stable.
using Json = nlohmann::ordered_json;

/// Big numbers and partitions serialize as strings: "12", "-3/4", "3,1,1".
Json to_json(const Integer& x);
Json to_json(const Rational& q);
Json to_json(const Partition& p);
Json to_json(const std::vector<Partition>& ps);

Json to_json(const Box& b);
Json to_json(const YoungTree& tree);
Json to_json(const Spectrum& s);
Json to_json(const BTable& table);
Json to_json(const Counterexample& c);

/// {"<key>": statement, "params": ..., "clauses": [{"id", "pass"}], "counterexample": ...,
///  "integral": ..., "vacuous": ..., "pass": ..., "parity_classes": [...]}
/// A clause passes when it holds in every admissible parity class.
Json to_json(const StatementReport& report, const char* key = "theorem");

Json to_json(const BoundEntry& e);
Json to_json(const BoundGroup& g);
/// Runtime is included only when `with_runtime` is set.
Json to_json(const BoundReport& report, bool with_runtime = true);

}  // namespace hurwitz
