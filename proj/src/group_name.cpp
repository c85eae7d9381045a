#include "mcg/group_name.hpp"

#include <cctype>
#include <tuple>

#include "mcg/errors.hpp"
#include "mcg/perm_group.hpp"

namespace mcg {

GroupName GroupName::cyclic(int n) {
  if (n < 2) throw InvalidName("Cyclic(n) requires n >= 2");
  return GroupName(Tag::Cyclic, n);
}

GroupName GroupName::dihedral(int n) {
  if (n < 2) throw InvalidName("Dihedral(n) requires n >= 2; D1 is Cyclic(2)");
  return GroupName(Tag::Dihedral, n);
}

GroupName GroupName::direct_product_z2(GroupName inner) {
  GroupName g(Tag::DirectProductZ2);
  g.inner_ = std::make_shared<const GroupName>(std::move(inner));
  return g;
}

GroupName GroupName::sl2(int p) {
  if (p != 3 && p != 5) throw InvalidName("SL2(p) supported only for p in {3, 5}");
  return GroupName(Tag::SL2, p);
}

const GroupName& GroupName::inner() const {
  if (!inner_) throw InvalidName("GroupName: no inner component");
  return *inner_;
}

GroupName GroupName::normalized() const {
  switch (tag_) {
    case Tag::Tetrahedral:
      return alternating4();
    case Tag::Octahedral:
      return symmetric4();
    case Tag::Icosahedral:
      return alternating5();
    case Tag::DirectProductZ2:
      return direct_product_z2(inner().normalized());
    default:
      return *this;
  }
}

std::size_t GroupName::order() const {
  switch (tag_) {
    case Tag::Cyclic:
      return static_cast<std::size_t>(n_);
    case Tag::Dihedral:
      return 2u * static_cast<std::size_t>(n_);
    case Tag::Tetrahedral:
    case Tag::Alternating4:
      return 12;
    case Tag::Octahedral:
    case Tag::Symmetric4:
      return 24;
    case Tag::Icosahedral:
    case Tag::Alternating5:
      return 60;
    case Tag::DirectProductZ2:
      return 2 * inner().order();
    case Tag::SL2:
      return n_ == 3 ? 24 : 120;
  }
  return 0;
}

std::string GroupName::to_string() const {
  switch (tag_) {
    case Tag::Cyclic:
      return "Z" + std::to_string(n_);
    case Tag::Dihedral:
      return "D" + std::to_string(n_);
    case Tag::Tetrahedral:
    case Tag::Alternating4:
      return "A4";
    case Tag::Octahedral:
    case Tag::Symmetric4:
      return "S4";
    case Tag::Icosahedral:
    case Tag::Alternating5:
      return "A5";
    case Tag::DirectProductZ2:
      return "Z2x" + inner().to_string();
    case Tag::SL2:
      return "SL(2," + std::to_string(n_) + ")";
  }
  return "?";
}

namespace {

std::tuple<int, std::string> sort_key(const GroupName& g) {
  return {static_cast<int>(g.order()), g.to_string()};
}

}  // namespace

bool operator==(const GroupName& a, const GroupName& b) {
  GroupName na = a.normalized();
  GroupName nb = b.normalized();
  if (na.tag() != nb.tag() || na.n() != nb.n()) return false;
  if (na.tag() == GroupName::Tag::DirectProductZ2) return na.inner() == nb.inner();
  return true;
}

bool operator<(const GroupName& a, const GroupName& b) { return sort_key(a) < sort_key(b); }

namespace {

PermGroup construct_sl2(int p) {
  // Action on the p*p - 1 nonzero vectors of the plane over the p-element field.
  const int degree = p * p - 1;
  auto index = [p](int a, int b) { return a * p + b - 1; };  // skips (0,0)
  std::vector<int> s_img(degree), t_img(degree);
  for (int a = 0; a < p; ++a) {
    for (int b = 0; b < p; ++b) {
      if (a == 0 && b == 0) continue;
      // S = [[0,-1],[1,0]], T = [[1,1],[0,1]]
      s_img[index(a, b)] = index((p - b) % p, a);
      t_img[index(a, b)] = index((a + b) % p, b);
    }
  }
  return PermGroup::generate(degree, {Permutation(std::move(s_img)), Permutation(std::move(t_img))},
                             200);
}

}  // namespace

PermGroup construct(const GroupName& name) {
  using Tag = GroupName::Tag;
  switch (name.tag()) {
    case Tag::Cyclic: {
      const int n = name.n();
      std::vector<int> cyc(n);
      for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
      return PermGroup::generate(n, {Permutation(std::move(cyc))});
    }
    case Tag::Dihedral: {
      const int n = name.n();
      if (n == 2) {
        return PermGroup::generate(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                                       Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
      }
      std::vector<int> rot(n), refl(n);
      for (int i = 0; i < n; ++i) {
        rot[i] = (i + 1) % n;
        refl[i] = (n - i) % n;
      }
      return PermGroup::generate(
          n, {Permutation(std::move(rot)), Permutation(std::move(refl))});
    }
    case Tag::Tetrahedral:
    case Tag::Alternating4:
      return PermGroup::generate(4, {Permutation::from_cycles(4, {{0, 1, 2}}),
                                     Permutation::from_cycles(4, {{0, 1}, {2, 3}})});
    case Tag::Octahedral:
    case Tag::Symmetric4:
      return PermGroup::generate(4, {Permutation::from_cycles(4, {{0, 1, 2, 3}}),
                                     Permutation::from_cycles(4, {{0, 1}})});
    case Tag::Icosahedral:
    case Tag::Alternating5:
      return PermGroup::generate(5, {Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}),
                                     Permutation::from_cycles(5, {{0, 1, 2}})});
    case Tag::DirectProductZ2: {
      PermGroup inner = construct(name.inner());
      const int d = 2 + inner.degree();
      std::vector<Permutation> gens;
      gens.push_back(Permutation::from_cycles(d, {{0, 1}}));
      for (const Permutation& g : inner.generators()) {
        std::vector<int> img(d);
        img[0] = 0;
        img[1] = 1;
        for (int p = 0; p < inner.degree(); ++p) img[2 + p] = 2 + g.apply(p);
        gens.emplace_back(std::move(img));
      }
      return PermGroup::generate(d, std::move(gens), 2 * inner.order());
    }
    case Tag::SL2:
      return construct_sl2(name.n());
  }
  throw InvalidName("construct: unknown group name");
}

std::optional<GroupName> parse_group_name(std::string_view text) {
  std::string s;
  for (char c : text) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  auto numeric_suffix = [](std::string_view v) -> std::optional<int> {
    if (v.empty()) return std::nullopt;
    int value = 0;
    for (char c : v) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
      value = value * 10 + (c - '0');
    }
    return value;
  };
  if (s == "a4" || s == "tetrahedral") return GroupName::alternating4();
  if (s == "s4" || s == "octahedral") return GroupName::symmetric4();
  if (s == "a5" || s == "icosahedral") return GroupName::alternating5();
  if (s == "sl(2,3)" || s == "sl23") return GroupName::sl2(3);
  if (s == "sl(2,5)" || s == "sl25") return GroupName::sl2(5);
  if (s.rfind("z2x", 0) == 0) {
    auto in = parse_group_name(s.substr(3));
    if (!in) return std::nullopt;
    return GroupName::direct_product_z2(*in);
  }
  if (s.size() >= 2 && (s[0] == 'z' || s[0] == 'c')) {
    auto n = numeric_suffix(std::string_view(s).substr(1));
    if (n && *n >= 2) return GroupName::cyclic(*n);
  }
  if (s.size() >= 2 && s[0] == 'd') {
    auto n = numeric_suffix(std::string_view(s).substr(1));
    if (n && *n >= 2) return GroupName::dihedral(*n);
  }
  return std::nullopt;
}

}  // namespace mcg
