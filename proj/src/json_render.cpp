#include "mcg/json_render.hpp"

namespace mcg {

json descriptor_json(const ActionDescriptor& d) {
  json out;
  out["r"] = d.r;
  out["type"] = d.rot.name();
  json marked = json::array();
  for (const OrbitSlot& s : d.slots)
    if (s.marked) marked.push_back(slot_kind_name(s.kind));
  out["marked"] = std::move(marked);
  out["free_orbits"] = d.free_orbits;
  out["group_order"] = d.rot.order();
  out["maximal"] = is_maximal(d);
  return out;
}

json descriptor_list_json(const std::vector<ActionDescriptor>& ds) {
  json out = json::array();
  for (const ActionDescriptor& d : ds) out.push_back(descriptor_json(d));
  return out;
}

json classify_json(int r, const std::set<GroupName>& types) {
  json names = json::array();
  for (const GroupName& t : types) names.push_back(t.to_string());
  json out;
  out["r"] = r;
  out["maximal"] = std::move(names);
  return out;
}

json class_table_json(int r) {
  std::vector<ActionDescriptor> ds = enumerate_descriptors(r);
  std::vector<ClassRow> rows = class_table(r);
  std::vector<int> class_of(ds.size(), -1);
  std::vector<int> rep_of(ds.size(), -1);
  for (std::size_t c = 0; c < rows.size(); ++c) {
    for (std::size_t idx : rows[c].member_indices) {
      class_of[idx] = static_cast<int>(c);
      rep_of[idx] = static_cast<int>(rows[c].member_indices.front());
    }
  }
  json out = json::array();
  for (std::size_t i = 0; i < ds.size(); ++i) {
    json obj = descriptor_json(ds[i]);
    obj["class_id"] = class_of[i];
    obj["conjugate_to"] = rep_of[i];
    out.push_back(std::move(obj));
  }
  return out;
}

json conjugacy_count_json(int r, const GroupName& iso) {
  json out;
  out["r"] = r;
  out["iso"] = iso.to_string();
  out["enumerative"] = count_classes(r, iso, CountMode::Enumerative);
  out["closed_form"] = count_classes(r, iso, CountMode::ClosedForm);
  return out;
}

json lift_catalog_json(long g, const std::vector<LiftRecord>& records) {
  json lifts = json::array();
  for (const LiftRecord& rec : records) {
    json obj;
    obj["name"] = lift_display_name(rec.name, rec.g);
    obj["base"] = rec.base.to_string();
    obj["order"] = rec.expected_order;
    obj["presentation"] = rec.presentation_text;
    obj["verified"] = rec.verification.has_value() && rec.verification->quotient_isomorphic_to_base;
    if (rec.verification) {
      json ev;
      ev["enumerated_order"] = rec.verification->enumerated_order;
      ev["center_order"] = rec.verification->center_order;
      ev["central_involution_order"] = rec.verification->central_involution_order;
      ev["quotient_isomorphic_to_base"] = rec.verification->quotient_isomorphic_to_base;
      obj["evidence"] = std::move(ev);
    }
    lifts.push_back(std::move(obj));
  }
  json out;
  out["g"] = g;
  out["lifts"] = std::move(lifts);
  return out;
}

}  // namespace mcg
