#pragma once

// Text formats: one JSON object per skew morphism and one CSV row per
// enumerated group.

#include <string>
#include <string_view>

#include "skewmorph/enumerate.hpp"

namespace skewmorph {

/// Compact JSON with keys group, perm, order, power, smooth, skew_type,
/// kernel, proper (in that order). No trailing newline.
std::string to_json(const SkewMorphism& phi);

struct CheckOutcome {
    enum Status { kMatch = 0, kMismatch = 1, kMalformed = 2 };
    Status status = kMatch;
    std::string field;  // first disagreeing or malformed field
    std::string message;
};

/// Re-derives every field of a JSON record from its group and perm.
CheckOutcome check_record(std::string_view text);

struct CensusRecord {
    std::string group;
    std::size_t order = 0;
    Counts counts;
    double ms = 0;
};

CensusRecord census_record(const EnumerationReport& report);

inline constexpr std::string_view kCsvHeader = "group,order,total,autos,proper,smooth,nonsmooth,ms";
/// ms is printed with three decimals, or as 0 when `timing` is false.
std::string csv_row(const CensusRecord& r, bool timing = true);

}  // namespace skewmorph
