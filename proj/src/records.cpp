#include "skewmorph/records.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>

#include "skewmorph/number_theory.hpp"

namespace skewmorph {

using nlohmann::ordered_json;

std::string to_json(const SkewMorphism& phi) {
    ordered_json j;
    j["group"] = phi.group().factors();
    j["perm"] = phi.perm().table();
    j["order"] = phi.order();
    j["power"] = phi.power();
    j["smooth"] = is_smooth(phi);
    j["skew_type"] = skew_type(phi);
    j["kernel"] = kernel(phi).members;
    j["proper"] = is_proper(phi);
    return j.dump();
}

namespace {

CheckOutcome mismatch(std::string field, std::string message) {
    return {CheckOutcome::kMismatch, std::move(field), std::move(message)};
}

CheckOutcome malformed(std::string field, std::string message) {
    return {CheckOutcome::kMalformed, std::move(field), std::move(message)};
}

}  // namespace

CheckOutcome check_record(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        return malformed("", e.what());
    }
    if (!j.is_object()) return malformed("", "record is not a JSON object");

    const auto int_array = [&](const char* key) {
        return j.contains(key) && j[key].is_array() &&
               std::all_of(j[key].begin(), j[key].end(), [](const auto& v) { return v.is_number_integer(); });
    };
    for (const char* key : {"group", "perm", "power", "kernel"})
        if (!int_array(key)) return malformed(key, std::string("missing or not an integer array: ") + key);
    for (const char* key : {"order", "skew_type"})
        if (!j.contains(key) || !j[key].is_number_integer())
            return malformed(key, std::string("missing or not an integer: ") + key);
    for (const char* key : {"smooth", "proper"})
        if (!j.contains(key) || !j[key].is_boolean())
            return malformed(key, std::string("missing or not a boolean: ") + key);

    AbelianGroup G;
    try {
        G = AbelianGroup(j["group"].get<std::vector<int>>());
    } catch (const GroupError& e) {
        return malformed("group", e.what());
    }

    const auto raw = j["perm"].get<std::vector<std::int64_t>>();
    const auto n = static_cast<std::int64_t>(G.order());
    if (static_cast<std::int64_t>(raw.size()) != n)
        return mismatch("perm", "perm has " + std::to_string(raw.size()) + " entries, group has " + std::to_string(n));
    std::vector<Element> table;
    std::vector<bool> hit(raw.size(), false);
    for (auto v : raw) {
        if (v < 0 || v >= n || hit[static_cast<std::size_t>(v)]) return mismatch("perm", "perm is not a bijection");
        hit[static_cast<std::size_t>(v)] = true;
        table.push_back(static_cast<Element>(v));
    }
    auto r = validate(G, Permutation(std::move(table)));
    if (!r) return mismatch("perm", "not a skew morphism: " + r.rejection().reason);
    const SkewMorphism& phi = *r;

    if (j["order"].get<std::int64_t>() != phi.order())
        return mismatch("order", "order is " + std::to_string(phi.order()));
    const auto power = j["power"].get<std::vector<std::int64_t>>();
    if (power.size() != phi.power().size()) return mismatch("power", "power has the wrong length");
    for (std::size_t a = 0; a < power.size(); ++a)
        if (nt::mod(power[a], phi.order()) != phi.power()[a])
            return mismatch("power", "power[" + std::to_string(a) + "] is " + std::to_string(phi.power()[a]));
    if (j["smooth"].get<bool>() != is_smooth(phi)) return mismatch("smooth", "smooth is " + std::string(is_smooth(phi) ? "true" : "false"));
    if (j["skew_type"].get<std::int64_t>() != skew_type(phi))
        return mismatch("skew_type", "skew_type is " + std::to_string(skew_type(phi)));
    const auto K = kernel(phi).members;
    if (j["kernel"].get<std::vector<std::int64_t>>() != std::vector<std::int64_t>(K.begin(), K.end()))
        return mismatch("kernel", "kernel differs");
    if (j["proper"].get<bool>() != is_proper(phi)) return mismatch("proper", "proper is " + std::string(is_proper(phi) ? "true" : "false"));
    return {};
}

CensusRecord census_record(const EnumerationReport& report) {
    return {report.group.label(), report.group.order(), report.counts, report.elapsed_ms};
}

std::string csv_row(const CensusRecord& r, bool timing) {
    char ms[32] = "0";
    if (timing) std::snprintf(ms, sizeof ms, "%.3f", r.ms);
    const auto& c = r.counts;
    return r.group + ',' + std::to_string(r.order) + ',' + std::to_string(c.total) + ',' +
           std::to_string(c.automorphisms) + ',' + std::to_string(c.proper) + ',' + std::to_string(c.smooth) + ',' +
           std::to_string(c.nonsmooth) + ',' + ms;
}

}  // namespace skewmorph
