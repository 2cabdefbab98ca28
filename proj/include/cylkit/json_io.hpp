#pragma once

#include "cylkit/fitkit.hpp"
#include "cylkit/identities.hpp"
#include "cylkit/recur.hpp"

#include <json.hpp>

namespace cylkit {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Conventions every document records.
Json conventions_json();
// {"schema_version", "type", "conventions", ...body}
Json envelope(std::string_view type, Json body);

// Integers as numbers, other rationals as "p/q".
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json bigint_json(const BigInt& v);

Json to_json(const Window& w);
// {"window": ..., "terms": [[z, q_numerator, q_scale, coeff], ...]}
Json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const Json& j);

Json to_json(const Profile& p);
Profile profile_from_json(const Json& j);
Json to_json(const WeightVector& w);
WeightVector weights_from_json(const Json& j);

Json to_json(const WMultiset& m);
WMultiset multiset_from_json(const Json& j);
// {"num": [[exp, mod], ...], "den": [...]}; a factor carrying z or a + sign is [exp, mod, sign, z]
Json to_json(const ProductSpec& p);
ProductSpec product_from_json(const Json& j);

// {"kind", "delta", "weights", "diagonals"}
Json to_json(const GridPartition& g);
GridPartition object_from_json(const Json& j);

Json to_json(const FunctionalSystem& sys);

Json to_json(const Comparison& c);
Json to_json(const CaseReport& r);

// {"kind", "delta", "target": {"entries", "modulus"} or a list (DSPP: W1, W2), "integral", "max_free"}
FitProblem fit_problem_from_json(const Json& j);
Json to_json(const FitProblem& p);
Json to_json(const FitResult& r);

Json to_json(const BalanceReport& r);
Json to_json(const EquivalenceGroup& g);

} // namespace cylkit
