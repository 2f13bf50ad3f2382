#pragma once

#include <json.hpp>

#include "ratknot/census.hpp"
#include "ratknot/invariants.hpp"
#include "ratknot/lens.hpp"
#include "ratknot/monoid.hpp"
#include "ratknot/series.hpp"

namespace ratknot::cli {

using nlohmann::ordered_json;

// Integers that fit in 64 bits become JSON numbers, larger ones strings.
ordered_json number(const Integer& v);
// Integral rationals as numbers, others as "a/b".
ordered_json number(const Rational& v);

ordered_json to_json(const KnotClass& knot, const InvariantSet& inv);
ordered_json to_json(const CensusReport& report);
ordered_json to_json(const LensCount& row);
ordered_json to_json(const PropositionReport& report);
// Coefficients at y = z = 1 from the first non-zero degree, plus the full
// term list when any y or z power occurs.
ordered_json series_json(const TruncatedSeries& s);

std::string census_csv(const CensusReport& report);
std::string lens_csv(const std::vector<LensCount>& rows);

}  // namespace ratknot::cli
