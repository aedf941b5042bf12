#ifndef SPRINGER_JSON_IO_HPP
#define SPRINGER_JSON_IO_HPP

#include "json.hpp"

#include "springer/braid.hpp"
#include "springer/match.hpp"
#include "springer/orbits.hpp"
#include "springer/partition.hpp"
#include "springer/sigma.hpp"

namespace springer {

using Json = nlohmann::ordered_json;

/// Exact integers go out as JSON numbers when they fit 64 bits, otherwise as
/// decimal strings.
[[nodiscard]] Json big_to_json(const BigInt& v);

/// [3,1]; the empty partition is [].
[[nodiscard]] Json partition_to_json(const Partition& p);
/// Accepts a descending array of positive integers; throws ParseError.
[[nodiscard]] Partition partition_from_json(const Json& j);

/// "I", "II" or null
[[nodiscard]] Json form_to_json(OptionalForm f);
[[nodiscard]] OptionalForm form_from_json(const Json& j);

/// {lambda, form, k, local_systems}
[[nodiscard]] Json orbit_record_to_json(const OrbitRecord& r);

/// {nu, mu1, mu2, omega, support_m, support_omega}
[[nodiscard]] Json triple_to_json(const Triple& t, const SupportLevel& s);
/// Inverse of triple_to_json; the support fields are checked against N.
[[nodiscard]] Triple triple_from_json(const Json& j, int N);

/// {mu1, mu2, split}
[[nodiscard]] Json factor_to_json(const FactorLabel& f);

}  // namespace springer

#endif  // SPRINGER_JSON_IO_HPP
