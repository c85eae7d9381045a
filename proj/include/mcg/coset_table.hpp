#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mcg/perm_group.hpp"
#include "mcg/presentation.hpp"

namespace mcg {

inline constexpr std::size_t kDefaultMaxCosets = 1'000'000;

/// A completed coset table: every entry defined, generator columns are
/// permutations of the cosets, and every relator traces to the identity from
/// every coset. Column layout: 2*k for generator k+1, 2*k+1 for its inverse.
class CosetTable {
 public:
  CosetTable() = default;
  CosetTable(int generator_count, std::size_t coset_count, std::vector<std::int32_t> entries);

  int generator_count() const { return generator_count_; }
  std::size_t coset_count() const { return coset_count_; }
  bool complete() const;

  /// Image of a coset under a signed generator (+i / -i, 1-based).
  int apply(std::size_t coset, int signed_gen) const;

  /// One permutation of the cosets per generator. Throws IncompleteTable.
  std::vector<Permutation> generator_actions() const;

  friend bool operator==(const CosetTable&, const CosetTable&) = default;

 private:
  int generator_count_ = 0;
  std::size_t coset_count_ = 0;
  std::vector<std::int32_t> entries_;  // row-major, width 2*generator_count
};

struct EnumerationResult {
  std::size_t order = 0;
  CosetTable table;
};

/// Coset enumeration over the trivial subgroup: HLT relator scanning with
/// immediate coincidence processing through a union-find, breadth-first coset
/// numbering, no lookahead. Deterministic for fixed input and max_cosets.
/// Throws CosetLimitExceeded if the enumeration does not close.
EnumerationResult todd_coxeter(const Presentation& p,
                               std::size_t max_cosets = kDefaultMaxCosets);

/// Regular representation read off a completed table; the group order equals
/// the coset count. Throws IncompleteTable.
PermGroup table_to_permgroup(const CosetTable& t);

}  // namespace mcg
