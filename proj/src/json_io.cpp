#include "springer/json_io.hpp"

#include <cstdint>
#include <limits>

namespace springer {

Json big_to_json(const BigInt& v)
{
    if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max())
        return v.convert_to<std::uint64_t>();
    if (v < 0 && v >= std::numeric_limits<std::int64_t>::min())
        return v.convert_to<std::int64_t>();
    return v.str();
}

Json partition_to_json(const Partition& p)
{
    return Json(p.parts());
}

Partition partition_from_json(const Json& j)
{
    if (!j.is_array())
        throw ParseError("partition must be a JSON array");
    std::vector<int> parts;
    for (const auto& x : j) {
        if (!x.is_number_integer())
            throw ParseError("partition entries must be integers");
        const auto v = x.get<long long>();
        if (v <= 0 || v > std::numeric_limits<int>::max())
            throw ParseError("partition entries must be positive");
        if (!parts.empty() && v > parts.back())
            throw ParseError("partition entries must be descending");
        parts.push_back(static_cast<int>(v));
    }
    return Partition(std::move(parts));
}

Json form_to_json(OptionalForm f)
{
    if (!f)
        return nullptr;
    return std::string(to_string(*f));
}

OptionalForm form_from_json(const Json& j)
{
    if (j.is_null())
        return std::nullopt;
    if (!j.is_string())
        throw ParseError("form must be \"I\", \"II\" or null");
    return parse_form(j.get<std::string>());
}

Json orbit_record_to_json(const OrbitRecord& r)
{
    Json j;
    j["lambda"] = partition_to_json(r.label.lambda());
    j["form"] = form_to_json(r.label.form());
    j["k"] = r.distinct_sizes;
    j["local_systems"] = big_to_json(r.local_system_count);
    return j;
}

Json triple_to_json(const Triple& t, const SupportLevel& s)
{
    Json j;
    j["nu"] = partition_to_json(t.nu());
    j["mu1"] = partition_to_json(t.mu1());
    j["mu2"] = partition_to_json(t.mu2());
    j["omega"] = form_to_json(t.omega());
    j["support_m"] = s.m;
    j["support_omega"] = form_to_json(s.omega);
    return j;
}

Triple triple_from_json(const Json& j, int N)
{
    if (!j.is_object())
        throw ParseError("triple must be a JSON object");
    for (const char* key : {"nu", "mu1", "mu2", "omega"}) {
        if (!j.contains(key))
            throw ParseError(std::string("triple is missing '") + key + "'");
    }
    Triple t(partition_from_json(j["nu"]), partition_from_json(j["mu1"]),
             partition_from_json(j["mu2"]), form_from_json(j["omega"]));
    if (t.mu1() != partition_from_json(j["mu1"]))
        throw ParseError("triple " + t.to_string() + " is not in canonical order");
    if (j.contains("support_m")) {
        const auto s = support_level(t, N);
        if (j["support_m"] != s.m || form_from_json(j.value("support_omega", Json())) != s.omega)
            throw ParseError("triple " + t.to_string() + " has inconsistent support fields");
    }
    return t;
}

Json factor_to_json(const FactorLabel& f)
{
    Json j;
    j["mu1"] = partition_to_json(f.mu1);
    j["mu2"] = partition_to_json(f.mu2);
    j["split"] = form_to_json(f.split);
    return j;
}

}  // namespace springer
