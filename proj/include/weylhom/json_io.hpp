#pragma once

#include "weylhom/homcalc.hpp"

#include "json.hpp"

namespace weylhom {

// {"shape": [...], "type": [...], "terms": [{"tableau": "...", "coeff": "..."}]}
// with terms listed in the element's (tableau-ordered) term order.
nlohmann::json homelement_to_json(const HomElement& h);
HomElement homelement_from_json(const nlohmann::json& j, const FieldPtr& field);

// {"dimension": n, "index": ["..."], "basis": [["coeff", ...], ...]}
nlohmann::json kernel_to_json(const KernelResult& k);

// {"member": bool, "checks": [{"d":, "t":, "vanishes":, "residual_terms":}]}
nlohmann::json membership_to_json(const MembershipReport& r);

}  // namespace weylhom
