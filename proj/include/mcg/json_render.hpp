#pragma once

#include <set>
#include <vector>

#include <json.hpp>

#include "mcg/classification.hpp"
#include "mcg/group_name.hpp"
#include "mcg/hyperelliptic.hpp"
#include "mcg/sphere_actions.hpp"

namespace mcg {

// Field names and ordering are fixed wire formats; ordered_json keeps
// insertion order so dumps are byte-stable.
using json = nlohmann::ordered_json;

/// {"r":26,"type":"octahedral","marked":["faces","edges","vertices"],
///  "free_orbits":0,"group_order":24,"maximal":true}
json descriptor_json(const ActionDescriptor& d);

json descriptor_list_json(const std::vector<ActionDescriptor>& ds);

/// {"r":4,"maximal":["D4","A4"]}
json classify_json(int r, const std::set<GroupName>& types);

/// Array of descriptor objects extended with "class_id" and "conjugate_to"
/// (index of the class representative within the array).
json class_table_json(int r);

/// {"r":12,"iso":"D3","enumerative":2,"closed_form":2}
json conjugacy_count_json(int r, const GroupName& iso);

/// {"g":5,"lifts":[{"name":"W2","base":"S4","order":48,
///  "presentation":"<...>","verified":true}, ...]}
json lift_catalog_json(long g, const std::vector<LiftRecord>& records);

}  // namespace mcg
