#pragma once

#include <string>

#include <json.hpp>

#include "ksg/cartan.hpp"
#include "ksg/isolation.hpp"
#include "ksg/ktab.hpp"
#include "ksg/orbit.hpp"

namespace ksg {

using json = nlohmann::json;

inline constexpr const char* kReportSchema = "ksg-report/1";

// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
json big_json(const BigInt& v);
json to_json(const FgAbelianGroup& a);
json to_json(const IntMatrix& m);
json to_json(const KTable& t);
json to_json(const ReductionReport& r);
json to_json(const PrimeGraph& g);
json cartan_json(const CartanData& cd);
json diagram_json(const OrbitCategoryP& cat, const AbDiagram& d, const FgAbelianGroup& colim);

// LF line endings, no locale formatting: n,invariant_factors,provenance.
std::string ktable_csv(const KTable& t);
std::string ktable_text(const KTable& t);
std::string reduction_text(const ReductionReport& r);

// Two-space indented, key-sorted serialisation used for byte-identical outputs.
std::string dump(const json& j);

}  // namespace ksg
