#pragma once

#include "nilrep/structure.hpp"

#include "json.hpp"

namespace nilrep {

// Insertion-ordered JSON keeps report field order schema-stable.
using Json = nlohmann::ordered_json;

Json int_to_json(const Int& x);  // number when it fits, decimal string otherwise
Int int_from_json(const Json& j);

std::string rat_to_string(const Rat& r);  // "p/q" in lowest terms
Rat rat_from_string(const std::string& s);

Json angle_to_json(const Angle& a);  // {"q": "p/q", "sym": {"theta1": "a/b"}}
Angle angle_from_json(const Json& j);

Json group_to_json(const GroupSpec& g);  // {"s": [s1, ..., sn]}
GroupSpec group_from_json(const Json& j);

Json element_to_json(const Element& e);  // {"u": [...], "v": [...], "z": int}
Element element_from_json(const Json& j, std::size_t rank);

// {"generators": [...], "index": int | "infinite"} — canonical echo
Json subgroup_to_json(const TriSeq& h);
// {"generators": [...]} — canonicalized on input
TriSeq subgroup_from_json(const GroupSpec& g, const Json& j);

// {"subgroup": {...}, "values": [...]} with values aligned to the canonical
// TriSeq generator order.
Json character_to_json(const Character& c);
Character character_from_json(const GroupSpec& g, const Json& j);

// {"dim", "cosets", "generators": [{"element", "perm", "phase"}...]}
Json rep_to_json(const MonomialRep& r);

Json rank_one_report_to_json(const RankOneReport& r);
Json general_case_report_to_json(const GeneralCaseReport& r);
Json corollary_report_to_json(const CorollaryReport& r);

} // namespace nilrep
