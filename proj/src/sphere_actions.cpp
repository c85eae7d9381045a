#include "mcg/sphere_actions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "mcg/errors.hpp"

namespace mcg {

RotationType RotationType::cyclic(int n) {
  if (n < 2) throw InvalidName("RotationType: cyclic requires n >= 2");
  return {Kind::Cyclic, n};
}

RotationType RotationType::dihedral(int n) {
  if (n < 2) throw InvalidName("RotationType: dihedral requires n >= 2");
  return {Kind::Dihedral, n};
}

int RotationType::order() const {
  switch (kind) {
    case Kind::Cyclic:
      return n;
    case Kind::Dihedral:
      return 2 * n;
    case Kind::Tetrahedral:
      return 12;
    case Kind::Octahedral:
      return 24;
    case Kind::Icosahedral:
      return 60;
  }
  return 0;
}

std::string RotationType::name() const {
  switch (kind) {
    case Kind::Cyclic:
      return "cyclic";
    case Kind::Dihedral:
      return "dihedral";
    case Kind::Tetrahedral:
      return "tetrahedral";
    case Kind::Octahedral:
      return "octahedral";
    case Kind::Icosahedral:
      return "icosahedral";
  }
  return "?";
}

GroupName RotationType::group_name() const {
  switch (kind) {
    case Kind::Cyclic:
      return GroupName::cyclic(n);
    case Kind::Dihedral:
      return GroupName::dihedral(n);
    case Kind::Tetrahedral:
      return GroupName::tetrahedral();
    case Kind::Octahedral:
      return GroupName::octahedral();
    case Kind::Icosahedral:
      return GroupName::icosahedral();
  }
  throw InvalidName("RotationType: bad kind");
}

std::optional<RotationType> rotation_type_of(const GroupName& name) {
  GroupName n = name.normalized();
  switch (n.tag()) {
    case GroupName::Tag::Cyclic:
      return RotationType::cyclic(n.n());
    case GroupName::Tag::Dihedral:
      return RotationType::dihedral(n.n());
    case GroupName::Tag::Alternating4:
      return RotationType::tetrahedral();
    case GroupName::Tag::Symmetric4:
      return RotationType::octahedral();
    case GroupName::Tag::Alternating5:
      return RotationType::icosahedral();
    default:
      return std::nullopt;
  }
}

std::string slot_kind_name(SlotKind kind) {
  switch (kind) {
    case SlotKind::Poles:
      return "poles";
    case SlotKind::Vertices:
      return "vertices";
    case SlotKind::Edges:
      return "edges";
    case SlotKind::Faces:
      return "faces";
    case SlotKind::AxisPair:
      return "axis";
  }
  return "?";
}

std::vector<OrbitSlot> exceptional_orbit_profile(const RotationType& rot) {
  using K = RotationType::Kind;
  switch (rot.kind) {
    case K::Cyclic:
      return {{SlotKind::Poles, 1, rot.n}, {SlotKind::Poles, 1, rot.n}};
    case K::Dihedral:
      if (rot.n == 2)
        return {{SlotKind::AxisPair, 2, 2}, {SlotKind::AxisPair, 2, 2}, {SlotKind::AxisPair, 2, 2}};
      return {{SlotKind::Poles, 2, rot.n},
              {SlotKind::Vertices, rot.n, 2},
              {SlotKind::Edges, rot.n, 2}};
    case K::Tetrahedral:
      return {{SlotKind::Faces, 4, 3}, {SlotKind::Edges, 6, 2}, {SlotKind::Vertices, 4, 3}};
    case K::Octahedral:
      return {{SlotKind::Faces, 6, 4}, {SlotKind::Edges, 12, 2}, {SlotKind::Vertices, 8, 3}};
    case K::Icosahedral:
      return {{SlotKind::Faces, 12, 5}, {SlotKind::Edges, 30, 2}, {SlotKind::Vertices, 20, 3}};
  }
  throw InvalidName("exceptional_orbit_profile: bad rotation type");
}

int ActionDescriptor::marked_point_sum() const {
  int sum = 0;
  for (const OrbitSlot& s : slots)
    if (s.marked) sum += s.length;
  return sum;
}

unsigned ActionDescriptor::marked_mask() const {
  unsigned mask = 0;
  for (std::size_t i = 0; i < slots.size(); ++i)
    if (slots[i].marked) mask |= 1u << i;
  return mask;
}

void ActionDescriptor::validate() const {
  if (r < 3) throw InfeasibleDescriptor("descriptor: r must be at least 3");
  if (free_orbits < 0) throw InfeasibleDescriptor("descriptor: negative free orbit count");
  std::vector<OrbitSlot> tmpl = exceptional_orbit_profile(rot);
  if (tmpl.size() != slots.size())
    throw InfeasibleDescriptor("descriptor: wrong number of orbit slots");
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i].kind != tmpl[i].kind || slots[i].length != tmpl[i].length ||
        slots[i].stabilizer_order != tmpl[i].stabilizer_order)
      throw InfeasibleDescriptor("descriptor: slot profile mismatch");
  }
  if (r != rot.order() * free_orbits + marked_point_sum())
    throw InfeasibleDescriptor("descriptor: point count equation fails");
}

namespace {

ActionDescriptor make_descriptor(int r, const RotationType& rot, unsigned mask, int k) {
  ActionDescriptor d{r, rot, exceptional_orbit_profile(rot), k};
  for (std::size_t i = 0; i < d.slots.size(); ++i)
    if (mask & (1u << i)) d.slots[i].marked = true;
  return d;
}

}  // namespace

std::vector<ActionDescriptor> enumerate_descriptors(int r, const RotationType& rot) {
  if (r < 3) throw std::invalid_argument("enumerate_descriptors: r must be at least 3");
  using K = RotationType::Kind;
  const int order = rot.order();
  std::vector<ActionDescriptor> out;
  auto try_mask = [&](unsigned mask, int sum) {
    int rem = r - sum;
    if (rem < 0 || rem % order != 0) return;
    out.push_back(make_descriptor(r, rot, mask, rem / order));
  };
  // Interchangeable slots (cyclic poles, Klein axis pairs) are enumerated as
  // counts, lowest slots marked first, so each marking pattern appears once.
  switch (rot.kind) {
    case K::Cyclic:
      try_mask(0u, 0);
      try_mask(1u, 1);
      try_mask(3u, 2);
      break;
    case K::Dihedral:
      if (rot.n == 2) {
        try_mask(0u, 0);
        try_mask(1u, 2);
        try_mask(3u, 4);
        try_mask(7u, 6);
      } else {
        const int lengths[3] = {2, rot.n, rot.n};
        for (unsigned mask = 0; mask < 8; ++mask) {
          int sum = 0;
          for (int i = 0; i < 3; ++i)
            if (mask & (1u << i)) sum += lengths[i];
          try_mask(mask, sum);
        }
      }
      break;
    default: {
      int lengths[3];
      if (rot.kind == K::Tetrahedral) {
        lengths[0] = 4, lengths[1] = 6, lengths[2] = 4;
      } else if (rot.kind == K::Octahedral) {
        lengths[0] = 6, lengths[1] = 12, lengths[2] = 8;
      } else {
        lengths[0] = 12, lengths[1] = 30, lengths[2] = 20;
      }
      for (unsigned mask = 0; mask < 8; ++mask) {
        int sum = 0;
        for (int i = 0; i < 3; ++i)
          if (mask & (1u << i)) sum += lengths[i];
        try_mask(mask, sum);
      }
      break;
    }
  }
  return out;
}

std::vector<ActionDescriptor> enumerate_descriptors(int r) {
  if (r < 3) throw std::invalid_argument("enumerate_descriptors: r must be at least 3");
  std::vector<ActionDescriptor> out;
  auto append = [&](const RotationType& rot) {
    std::vector<ActionDescriptor> ds = enumerate_descriptors(r, rot);
    out.insert(out.end(), ds.begin(), ds.end());
  };
  for (int n = 2; n <= r; ++n) append(RotationType::cyclic(n));
  for (int n = 2; n <= r; ++n) append(RotationType::dihedral(n));
  append(RotationType::tetrahedral());
  append(RotationType::octahedral());
  append(RotationType::icosahedral());
  std::sort(out.begin(), out.end(), [](const ActionDescriptor& a, const ActionDescriptor& b) {
    return std::make_tuple(a.rot.order(), a.rot.name(), a.marked_mask()) <
           std::make_tuple(b.rot.order(), b.rot.name(), b.marked_mask());
  });
  return out;
}

// ---------------------------------------------------------------------------
// Realization

namespace {

// Per-slot permutation blocks aligned with the generators of the abstract
// rotation group. For the polyhedral types the blocks are coset actions on
// the standard models; the subgroup classes matter (the octahedral edge slot
// takes a transposition-type subgroup, not a double transposition, which
// would produce the wrong orbit structure under subgroup restriction).
struct BlockSet {
  std::size_t generator_count;
  std::vector<std::vector<Permutation>> slot_blocks;  // per slot, per generator
  std::vector<Permutation> free_block;                // per generator, degree = group order
};

std::vector<Permutation> dihedral_regular_block(int n) {
  // points (i, s) = rho^i tau^s at index i + n*s; left multiplication
  const int d = 2 * n;
  std::vector<int> rho(d), tau(d);
  for (int i = 0; i < n; ++i) {
    for (int s = 0; s < 2; ++s) {
      rho[i + n * s] = (i + 1) % n + n * s;
      tau[i + n * s] = (n - i) % n + n * (1 - s);
    }
  }
  return {Permutation(std::move(rho)), Permutation(std::move(tau))};
}

BlockSet block_set(const RotationType& rot) {
  using K = RotationType::Kind;
  BlockSet bs;
  switch (rot.kind) {
    case K::Cyclic: {
      const int n = rot.n;
      bs.generator_count = 1;
      bs.slot_blocks = {{Permutation::identity(1)}, {Permutation::identity(1)}};
      std::vector<int> cyc(n);
      for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
      bs.free_block = {Permutation(std::move(cyc))};
      return bs;
    }
    case K::Dihedral: {
      const int n = rot.n;
      bs.generator_count = 2;
      if (n == 2) {
        // generators: half turns about axis 0 and axis 1
        auto axis_block = [](bool fix) {
          return fix ? Permutation::identity(2) : Permutation::from_cycles(2, {{0, 1}});
        };
        bs.slot_blocks = {{axis_block(true), axis_block(false)},
                          {axis_block(false), axis_block(true)},
                          {axis_block(false), axis_block(false)}};
        bs.free_block = {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                         Permutation::from_cycles(4, {{0, 2}, {1, 3}})};
        return bs;
      }
      std::vector<int> vr(n), vt(n), er(n), et(n);
      for (int i = 0; i < n; ++i) {
        vr[i] = (i + 1) % n;
        vt[i] = (n - i) % n;
        er[i] = (i + 1) % n;
        et[i] = (2 * n - 1 - i) % n;
      }
      bs.slot_blocks = {{Permutation::identity(2), Permutation::from_cycles(2, {{0, 1}})},
                        {Permutation(std::move(vr)), Permutation(std::move(vt))},
                        {Permutation(std::move(er)), Permutation(std::move(et))}};
      bs.free_block = dihedral_regular_block(n);
      return bs;
    }
    case K::Tetrahedral:
    case K::Octahedral:
    case K::Icosahedral: {
      PermGroup model = construct(rot.group_name());
      bs.generator_count = model.generators().size();
      const int deg = model.degree();
      std::vector<PermGroup> subgroups;
      if (rot.kind == K::Tetrahedral) {
        subgroups = {PermGroup::generate(deg, {Permutation::from_cycles(deg, {{0, 1, 2}})}),
                     PermGroup::generate(deg, {Permutation::from_cycles(deg, {{0, 1}, {2, 3}})}),
                     PermGroup::generate(deg, {Permutation::from_cycles(deg, {{1, 2, 3}})})};
      } else if (rot.kind == K::Octahedral) {
        subgroups = {PermGroup::generate(deg, {Permutation::from_cycles(deg, {{0, 1, 2, 3}})}),
                     PermGroup::generate(deg, {Permutation::from_cycles(deg, {{0, 1}})}),
                     PermGroup::generate(deg, {Permutation::from_cycles(deg, {{0, 1, 2}})})};
      } else {
        subgroups = {PermGroup::generate(deg, {Permutation::from_cycles(deg, {{0, 1, 2, 3, 4}})}),
                     PermGroup::generate(deg, {Permutation::from_cycles(deg, {{0, 1}, {2, 3}})}),
                     PermGroup::generate(deg, {Permutation::from_cycles(deg, {{0, 1, 2}})})};
      }
      for (const PermGroup& h : subgroups)
        bs.slot_blocks.push_back(coset_action(model, h).generators());
      bs.free_block = coset_action(model, PermGroup::trivial(deg)).generators();
      return bs;
    }
  }
  throw InvalidName("block_set: bad rotation type");
}

}  // namespace

RealizedAction realize(const ActionDescriptor& d) {
  d.validate();
  BlockSet bs = block_set(d.rot);
  const int order = d.rot.order();

  std::vector<std::vector<int>> gen_images(bs.generator_count);
  std::vector<PointLabel> labels;
  labels.reserve(d.r);

  auto append_block = [&](const std::vector<Permutation>& block, int slot, int orbit) {
    const int offset = static_cast<int>(labels.size());
    const int len = block.front().degree();
    for (std::size_t j = 0; j < bs.generator_count; ++j) {
      gen_images[j].resize(offset + len);
      for (int p = 0; p < len; ++p) gen_images[j][offset + p] = offset + block[j].apply(p);
    }
    for (int p = 0; p < len; ++p) labels.push_back(PointLabel{slot, orbit, p});
  };

  for (std::size_t i = 0; i < d.slots.size(); ++i)
    if (d.slots[i].marked) append_block(bs.slot_blocks[i], static_cast<int>(i), -1);
  for (int k = 0; k < d.free_orbits; ++k) append_block(bs.free_block, -1, k);

  if (static_cast<int>(labels.size()) != d.r)
    throw InfeasibleDescriptor("realize: assembled degree does not match r");

  std::vector<Permutation> gens;
  gens.reserve(bs.generator_count);
  for (auto& img : gen_images) gens.emplace_back(std::move(img));
  PermGroup g = PermGroup::generate(d.r, std::move(gens), static_cast<std::size_t>(order));
  if (g.order() != static_cast<std::size_t>(order))
    throw InfeasibleDescriptor("realize: action is not faithful");
  return RealizedAction{std::move(g), std::move(labels)};
}

bool realization_matches_profile(const ActionDescriptor& d, const RealizedAction& ra,
                                 std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (ra.group.degree() != d.r) return fail("degree != r");
  if (ra.group.order() != static_cast<std::size_t>(d.rot.order()))
    return fail("group order does not match rotation type (not faithful)");

  std::vector<OrbitInfo> orbits = ra.group.orbits_and_stabilizers();
  // group points by label block
  std::map<std::pair<int, int>, std::vector<int>> blocks;
  for (int p = 0; p < d.r; ++p) {
    const PointLabel& l = ra.labels[p];
    blocks[{l.slot, l.free_orbit}].push_back(p);
  }
  if (orbits.size() != blocks.size()) return fail("orbit count mismatch");
  for (const OrbitInfo& orb : orbits) {
    auto it = blocks.end();
    for (auto b = blocks.begin(); b != blocks.end(); ++b) {
      if (b->second == orb.points) {
        it = b;
        break;
      }
    }
    if (it == blocks.end()) return fail("orbit does not coincide with a labeled block");
    auto [slot, free_orbit] = it->first;
    if (slot >= 0) {
      const OrbitSlot& s = d.slots[slot];
      if (static_cast<int>(orb.points.size()) != s.length)
        return fail("marked orbit length mismatch");
      if (static_cast<int>(orb.stabilizer_order) != s.stabilizer_order)
        return fail("marked orbit stabilizer mismatch");
    } else {
      if (orb.points.size() != ra.group.order()) return fail("free orbit is not regular");
      if (orb.stabilizer_order != 1) return fail("free orbit has nontrivial stabilizer");
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Maximality and extensions

namespace {

int marked_slot_count(const ActionDescriptor& d) {
  int m = 0;
  for (const OrbitSlot& s : d.slots)
    if (s.marked) ++m;
  return m;
}

}  // namespace

bool is_maximal(const ActionDescriptor& d) {
  d.validate();
  using K = RotationType::Kind;
  switch (d.rot.kind) {
    case K::Cyclic: {
      const int a = marked_slot_count(d);
      return a == 1 && d.free_orbits == 1 && d.r != 3 && d.r != 4;
    }
    case K::Dihedral: {
      if (d.rot.n == 2) return false;
      if (d.free_orbits != 0) return false;
      const bool p = d.slots[0].marked;
      const bool v = d.slots[1].marked;
      const bool e = d.slots[2].marked;
      if (!p && (v != e)) return d.rot.n == d.r;  // D_r
      if (p && (v != e))                          // D_{r-2}
        return d.rot.n == d.r - 2 && (d.r == 5 || d.r >= 7);
      return false;
    }
    case K::Tetrahedral:
      return d.slots[0].marked != d.slots[2].marked;  // faces vs vertices
    case K::Octahedral:
    case K::Icosahedral:
      return true;
  }
  return false;
}

namespace {

ActionDescriptor dihedral_descriptor(int r, int n, bool poles, bool vertices, int k) {
  RotationType rot = RotationType::dihedral(n);
  unsigned mask = (poles ? 1u : 0u) | (vertices ? 2u : 0u);
  return make_descriptor(r, rot, mask, k);
}

ActionDescriptor unique_octahedral(int r) {
  std::vector<ActionDescriptor> ds = enumerate_descriptors(r, RotationType::octahedral());
  if (ds.size() != 1)
    throw std::logic_error("extension: expected a unique octahedral descriptor at r=" +
                           std::to_string(r));
  return ds.front();
}

std::optional<ActionDescriptor> cyclic_extension_step(const ActionDescriptor& d) {
  const int n = d.rot.n;
  const int k = d.free_orbits;
  const int a = marked_slot_count(d);
  if (a == 1) {
    if (k > 1)  // all free marked points fuse into one orbit of the regular cyclic group
      return make_descriptor(d.r, RotationType::cyclic(n * k), 1u, 1);
    // k == 1, so n = r - 1; only the small exceptional values reach here
    if (d.r == 4) return make_descriptor(4, RotationType::tetrahedral(), 4u, 0);  // vertices
    if (d.r == 3) return make_descriptor(3, RotationType::dihedral(3), 2u, 0);    // vertices
    return std::nullopt;
  }
  const int s = n * k;  // marked points away from the poles
  if (a == 0) {
    if (k == 1) return dihedral_descriptor(d.r, d.r, false, true, 0);  // D_r, vertices
    return make_descriptor(d.r, RotationType::cyclic(s), 0u, 1);
  }
  // a == 2
  if (k == 1) {
    if (n == 2)  // r = 4: the two marked poles and the free pair span two Klein axes
      return make_descriptor(4, RotationType::dihedral(2), 3u, 0);
    return dihedral_descriptor(d.r, n, true, true, 0);  // D_{r-2}, poles + vertices
  }
  return make_descriptor(d.r, RotationType::cyclic(s), 3u, 1);
}

std::optional<ActionDescriptor> dihedral_extension_step(const ActionDescriptor& d) {
  const int n = d.rot.n;
  if (n == 2) {
    int m = 0;
    for (const OrbitSlot& s : d.slots)
      if (s.marked) ++m;
    if (m % 2 == 1)  // the odd axis acts as a marked polar axis
      return dihedral_descriptor(d.r, d.r - 2, true, true, 0);
    return dihedral_descriptor(d.r, d.r, false, true, 0);
  }
  const bool p = d.slots[0].marked;
  const bool v = d.slots[1].marked;
  const bool e = d.slots[2].marked;
  if (p) {
    if (n == d.r - 2 && (v != e) && d.free_orbits == 0) {
      // the canonical D_{r-2} descriptor, non-maximal only at r = 6
      return unique_octahedral(d.r);
    }
    return dihedral_descriptor(d.r, d.r - 2, true, true, 0);
  }
  return dihedral_descriptor(d.r, d.r, false, true, 0);
}

}  // namespace

std::optional<ActionDescriptor> extension_step(const ActionDescriptor& d) {
  if (is_maximal(d)) return std::nullopt;
  using K = RotationType::Kind;
  switch (d.rot.kind) {
    case K::Cyclic:
      return cyclic_extension_step(d);
    case K::Dihedral:
      return dihedral_extension_step(d);
    case K::Tetrahedral:
      return unique_octahedral(d.r);
    case K::Octahedral:
    case K::Icosahedral:
      return std::nullopt;  // always maximal; unreachable
  }
  return std::nullopt;
}

std::vector<ActionDescriptor> extension_chain(const ActionDescriptor& d) {
  std::vector<ActionDescriptor> chain;
  ActionDescriptor cur = d;
  for (int i = 0; i < 8; ++i) {
    std::optional<ActionDescriptor> next = extension_step(cur);
    if (!next) return chain;
    chain.push_back(*next);
    cur = *next;
  }
  throw std::logic_error("extension_chain: chain did not terminate");
}

std::optional<ActionDescriptor> maximal_extension(const ActionDescriptor& d) {
  if (is_maximal(d)) return std::nullopt;
  std::vector<ActionDescriptor> chain = extension_chain(d);
  return chain.back();
}

std::set<GroupName> maximal_types(int r, TypesMode mode) {
  if (r < 3) throw std::invalid_argument("maximal_types: r must be at least 3");
  std::set<GroupName> out;
  if (mode == TypesMode::Derived) {
    for (const ActionDescriptor& d : enumerate_descriptors(r))
      if (is_maximal(d)) out.insert(d.rot.group_name());
    return out;
  }
  if (r != 4) out.insert(GroupName::cyclic(r - 1));
  out.insert(GroupName::dihedral(r));
  if (r == 5 || r >= 7) out.insert(GroupName::dihedral(r - 2));
  const int m12 = r % 12;
  if (m12 == 4 || m12 == 10) out.insert(GroupName::alternating4());
  const int m24 = r % 24;
  for (int v : {0, 2, 6, 8, 12, 14, 18, 20})
    if (m24 == v) out.insert(GroupName::symmetric4());
  const int m60 = r % 60;
  for (int v : {0, 2, 12, 20, 30, 32, 42, 50})
    if (m60 == v) out.insert(GroupName::alternating5());
  return out;
}

bool order_n_element_exists(int r, int n) {
  if (r < 3 || n < 2) throw std::invalid_argument("order_n_element_exists: need r >= 3, n >= 2");
  // feasibility of a Cyclic(n) descriptor at r
  for (int marked_poles = 0; marked_poles <= 2; ++marked_poles) {
    int rem = r - marked_poles;
    if (rem >= n && rem % n == 0) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Embedding certificate

namespace {

struct OrbitData {
  std::vector<std::vector<int>> orbits;
  std::vector<std::vector<int>> stabilizers;  // sorted element indices of the source group
};

// Orbit decomposition of the r points under "element i of the source group
// acts by action(i)".
OrbitData orbit_data(int r, std::size_t group_order,
                     const std::function<const Permutation&(std::size_t)>& action) {
  OrbitData od;
  std::vector<char> visited(r, 0);
  for (int p = 0; p < r; ++p) {
    if (visited[p]) continue;
    std::vector<int> orbit;
    std::vector<int> stab;
    for (std::size_t i = 0; i < group_order; ++i) {
      int q = action(i).apply(p);
      if (!visited[q]) {
        visited[q] = 1;
        orbit.push_back(q);
      }
      if (q == p) stab.push_back(static_cast<int>(i));
    }
    std::sort(orbit.begin(), orbit.end());
    od.orbits.push_back(std::move(orbit));
    od.stabilizers.push_back(std::move(stab));
  }
  return od;
}

// Matches source orbits against image orbits with identical pulled-back
// stabilizers and writes the intertwining relabeling into sigma.
bool match_orbits(std::size_t idx, const std::vector<std::vector<int>>& src_orbits,
                  const std::vector<std::vector<int>>& src_stabs, const PermGroup& g1,
                  const std::vector<const Permutation*>& psi_action,
                  std::vector<std::vector<int>>& img_orbits, std::vector<char>& used,
                  std::vector<int>& sigma) {
  if (idx == src_orbits.size()) return true;
  const std::vector<int>& orbit = src_orbits[idx];
  const std::vector<int>& stab = src_stabs[idx];
  const int base = orbit.front();
  for (std::size_t j = 0; j < img_orbits.size(); ++j) {
    if (used[j] || img_orbits[j].size() != orbit.size()) continue;
    for (int q : img_orbits[j]) {
      // pulled-back stabilizer of q must equal the stabilizer of the base point
      bool equal = true;
      std::size_t count = 0;
      for (std::size_t i = 0; i < g1.order() && equal; ++i) {
        bool fixes = psi_action[i]->apply(q) == q;
        bool expected = std::binary_search(stab.begin(), stab.end(), static_cast<int>(i));
        if (fixes != expected) equal = false;
        if (fixes) ++count;
      }
      if (!equal || count != stab.size()) continue;
      // fill sigma on this orbit
      std::vector<std::pair<int, int>> writes;
      bool ok = true;
      for (std::size_t i = 0; i < g1.order() && ok; ++i) {
        int from = g1.elements()[i].apply(base);
        int to = psi_action[i]->apply(q);
        if (sigma[from] == -1)
          writes.emplace_back(from, to);
        else if (sigma[from] != to)
          ok = false;
      }
      if (ok) {
        for (auto [from, to] : writes) sigma[from] = to;
        used[j] = 1;
        if (match_orbits(idx + 1, src_orbits, src_stabs, g1, psi_action, img_orbits, used, sigma))
          return true;
        used[j] = 0;
      }
      for (auto [from, to] : writes) sigma[from] = -1;
    }
  }
  return false;
}

}  // namespace

std::optional<Permutation> embedding_relabeling(const ActionDescriptor& d,
                                                const ActionDescriptor& target) {
  if (d.r != target.r) throw MismatchedR("embedding_relabeling: point counts differ");
  RealizedAction a = realize(d);
  RealizedAction b = realize(target);
  const PermGroup& g1 = a.group;
  const PermGroup& g2 = b.group;

  OrbitData src = orbit_data(d.r, g1.order(),
                             [&](std::size_t i) -> const Permutation& { return g1.elements()[i]; });

  std::optional<Permutation> result;
  for_each_monomorphism(g1, g2, [&](const std::vector<int>& f) {
    std::vector<const Permutation*> psi_action(g1.order());
    for (std::size_t i = 0; i < g1.order(); ++i) psi_action[i] = &g2.elements()[f[i]];
    OrbitData img = orbit_data(
        d.r, g1.order(), [&](std::size_t i) -> const Permutation& { return *psi_action[i]; });
    if (img.orbits.size() != src.orbits.size()) return false;

    std::vector<char> used(img.orbits.size(), 0);
    std::vector<int> sigma(d.r, -1);
    if (!match_orbits(0, src.orbits, src.stabilizers, g1, psi_action, img.orbits, used, sigma))
      return false;
    Permutation s{std::vector<int>(sigma.begin(), sigma.end())};
    // certificate check: s g s^-1 lies in the target group for every generator
    Permutation sinv = s.inverse();
    for (const Permutation& gen : g1.generators())
      if (!g2.contains(s * gen * sinv)) return false;
    result = s;
    return true;
  });
  return result;
}

}  // namespace mcg
