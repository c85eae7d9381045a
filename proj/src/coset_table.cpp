#include "mcg/coset_table.hpp"

#include <deque>
#include <stdexcept>
#include <string>

#include "mcg/errors.hpp"

namespace mcg {

CosetTable::CosetTable(int generator_count, std::size_t coset_count,
                       std::vector<std::int32_t> entries)
    : generator_count_(generator_count), coset_count_(coset_count), entries_(std::move(entries)) {
  if (entries_.size() != coset_count_ * 2 * static_cast<std::size_t>(generator_count_))
    throw std::invalid_argument("CosetTable: entry buffer size mismatch");
}

bool CosetTable::complete() const {
  if (generator_count_ == 0 || coset_count_ == 0) return false;
  for (std::int32_t e : entries_)
    if (e < 0 || e >= static_cast<std::int32_t>(coset_count_)) return false;
  return true;
}

int CosetTable::apply(std::size_t coset, int signed_gen) const {
  int col = signed_gen > 0 ? 2 * (signed_gen - 1) : 2 * (-signed_gen - 1) + 1;
  return entries_[coset * 2 * generator_count_ + col];
}

std::vector<Permutation> CosetTable::generator_actions() const {
  if (!complete()) throw IncompleteTable("CosetTable: table is not complete");
  std::vector<Permutation> out;
  out.reserve(generator_count_);
  for (int g = 1; g <= generator_count_; ++g) {
    std::vector<int> img(coset_count_);
    for (std::size_t c = 0; c < coset_count_; ++c) img[c] = apply(c, g);
    out.emplace_back(std::move(img));
  }
  return out;
}

namespace {

constexpr std::int32_t kUndef = -1;

// HLT working state. Cosets are identified by creation index; the union-find
// keeps the smallest index of each coincidence class as representative, so the
// surviving numbering stays in breadth-first definition order.
struct Enumerator {
  int ngens;
  int width;
  std::size_t max_cosets;
  std::vector<std::vector<int>> rel_cols;  // relators as column sequences
  std::vector<std::int32_t> tbl;
  std::vector<std::int32_t> parent;
  std::deque<std::int32_t> dead_queue;
  std::size_t live = 0;

  Enumerator(const Presentation& p, std::size_t cap)
      : ngens(p.generator_count), width(2 * p.generator_count), max_cosets(cap) {
    rel_cols.reserve(p.relators.size());
    for (const auto& w : p.relators) {
      std::vector<int> cols;
      cols.reserve(w.size());
      for (int s : w) cols.push_back(col_of(s));
      rel_cols.push_back(std::move(cols));
    }
  }

  static int inv_col(int col) { return col ^ 1; }
  static int col_of(int signed_gen) {
    return signed_gen > 0 ? 2 * (signed_gen - 1) : 2 * (-signed_gen - 1) + 1;
  }

  std::int32_t get(std::int32_t c, int col) const { return tbl[static_cast<std::size_t>(c) * width + col]; }
  void put(std::int32_t c, int col, std::int32_t v) { tbl[static_cast<std::size_t>(c) * width + col] = v; }

  std::int32_t new_coset() {
    if (parent.size() >= max_cosets)
      throw CosetLimitExceeded("coset enumeration exceeded " + std::to_string(max_cosets) +
                               " cosets");
    std::int32_t c = static_cast<std::int32_t>(parent.size());
    parent.push_back(c);
    tbl.resize(tbl.size() + width, kUndef);
    ++live;
    return c;
  }

  std::int32_t find(std::int32_t c) {
    while (parent[c] != c) {
      parent[c] = parent[parent[c]];
      c = parent[c];
    }
    return c;
  }

  void merge(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    --live;
    dead_queue.push_back(b);
  }

  void process_coincidences() {
    while (!dead_queue.empty()) {
      std::int32_t e = dead_queue.front();
      dead_queue.pop_front();
      for (int col = 0; col < width; ++col) {
        std::int32_t f = get(e, col);
        if (f < 0) continue;
        put(e, col, kUndef);
        if (get(f, inv_col(col)) == e) put(f, inv_col(col), kUndef);
        std::int32_t e1 = find(e);
        std::int32_t f1 = find(f);
        std::int32_t t = get(e1, col);
        if (t >= 0) {
          merge(f1, t);
        } else {
          std::int32_t s = get(f1, inv_col(col));
          if (s >= 0) {
            merge(e1, s);
          } else {
            put(e1, col, f1);
            put(f1, inv_col(col), e1);
          }
        }
      }
    }
  }

  // Traces a relator from `a`, filling gaps with fresh cosets and closing the
  // final slot with a deduction or a coincidence.
  void scan_and_fill(std::int32_t a, const std::vector<int>& w) {
    const int n = static_cast<int>(w.size());
    std::int32_t f = a;
    int i = 0;
    std::int32_t b = a;
    int j = n - 1;
    while (true) {
      while (i <= j) {
        std::int32_t t = get(f, w[i]);
        if (t < 0) break;
        f = t;
        ++i;
      }
      if (i > j) {
        if (find(f) != find(b)) {
          merge(f, b);
          process_coincidences();
        }
        return;
      }
      while (j > i) {
        std::int32_t t = get(b, inv_col(w[j]));
        if (t < 0) break;
        b = t;
        --j;
      }
      if (j == i) {
        std::int32_t t = get(f, w[i]);
        if (t >= 0) {
          if (find(t) != find(b)) {
            merge(t, b);
            process_coincidences();
          }
          return;
        }
        std::int32_t s = get(b, inv_col(w[i]));
        if (s >= 0) {
          if (find(s) != find(f)) {
            merge(s, f);
            process_coincidences();
          }
          return;
        }
        put(f, w[i], b);
        put(b, inv_col(w[i]), f);
        return;
      }
      std::int32_t d = new_coset();
      put(f, w[i], d);
      put(d, inv_col(w[i]), f);
      f = d;
      ++i;
    }
  }

  void sweep() {
    for (std::size_t c = 0; c < parent.size(); ++c) {
      std::int32_t ci = static_cast<std::int32_t>(c);
      if (find(ci) != ci) continue;
      for (const auto& rel : rel_cols) {
        scan_and_fill(ci, rel);
        if (find(ci) != ci) break;
      }
      if (find(ci) != ci) continue;
      for (int col = 0; col < width; ++col) {
        if (get(ci, col) != kUndef) continue;
        std::int32_t d = new_coset();
        put(ci, col, d);
        put(d, inv_col(col), ci);
      }
    }
  }

  // Replaces live entries by their representatives; returns false if any live
  // row is still open or any relator fails to trace back to its start.
  bool normalized_and_closed() {
    bool ok = true;
    for (std::size_t c = 0; c < parent.size(); ++c) {
      std::int32_t ci = static_cast<std::int32_t>(c);
      if (find(ci) != ci) continue;
      for (int col = 0; col < width; ++col) {
        std::int32_t t = get(ci, col);
        if (t < 0) {
          ok = false;
          continue;
        }
        std::int32_t tr = find(t);
        if (tr != t) put(ci, col, tr);
      }
    }
    if (!ok) return false;
    for (std::size_t c = 0; c < parent.size(); ++c) {
      std::int32_t ci = static_cast<std::int32_t>(c);
      if (find(ci) != ci) continue;
      for (const auto& rel : rel_cols) {
        std::int32_t cur = ci;
        for (int col : rel) cur = get(cur, col);
        if (cur != ci) return false;
      }
    }
    return true;
  }

  EnumerationResult run() {
    new_coset();
    // One sweep suffices for the groups in scope; the loop re-verifies the
    // closure invariant and rescans if anything remains open.
    for (int pass = 0; pass < 64; ++pass) {
      sweep();
      if (normalized_and_closed()) {
        return EnumerationResult{live, compact()};
      }
    }
    throw std::logic_error("todd_coxeter: enumeration failed to stabilize");
  }

  CosetTable compact() {
    std::vector<std::int32_t> remap(parent.size(), -1);
    std::int32_t next = 0;
    for (std::size_t c = 0; c < parent.size(); ++c)
      if (find(static_cast<std::int32_t>(c)) == static_cast<std::int32_t>(c))
        remap[c] = next++;
    std::vector<std::int32_t> entries(static_cast<std::size_t>(next) * width);
    for (std::size_t c = 0; c < parent.size(); ++c) {
      if (remap[c] < 0) continue;
      for (int col = 0; col < width; ++col)
        entries[static_cast<std::size_t>(remap[c]) * width + col] =
            remap[get(static_cast<std::int32_t>(c), col)];
    }
    return CosetTable(ngens, static_cast<std::size_t>(next), std::move(entries));
  }
};

}  // namespace

EnumerationResult todd_coxeter(const Presentation& p, std::size_t max_cosets) {
  p.validate();
  Enumerator en(p, max_cosets);
  return en.run();
}

PermGroup table_to_permgroup(const CosetTable& t) {
  std::vector<Permutation> gens = t.generator_actions();
  return PermGroup::generate(static_cast<int>(t.coset_count()), std::move(gens),
                             t.coset_count());
}

}  // namespace mcg
