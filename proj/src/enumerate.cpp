#include "quandlekit/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "quandlekit/composition.hpp"

namespace quandlekit {

namespace {

// Compares the relabeling of t by sigma against `ref`, lexicographically on
// flattened entries, without materializing it.
int compare_relabeled(const OpTable& t, const std::vector<int>& sigma,
                      const std::vector<int>& sigma_inv,
                      const std::vector<int>& ref) {
  const int n = t.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int v = sigma[t.at(sigma_inv[i], sigma_inv[j])];
      int w = ref[i * n + j];
      if (v != w) return v < w ? -1 : 1;
    }
  return 0;
}

template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
  std::vector<int> sigma(n), sigma_inv(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    for (int i = 0; i < n; ++i) sigma_inv[sigma[i]] = i;
    fn(sigma, sigma_inv);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

}  // namespace

bool is_canonical(const OpTable& t) {
  bool minimal = true;
  for_each_permutation(t.size(), [&](const std::vector<int>& sigma,
                                     const std::vector<int>& sigma_inv) {
    if (minimal &&
        compare_relabeled(t, sigma, sigma_inv, t.entries()) < 0)
      minimal = false;
  });
  return minimal;
}

CanonicalTable canonical_form(const OpTable& t) {
  const int n = t.size();
  std::vector<int> best = t.entries();
  for_each_permutation(n, [&](const std::vector<int>& sigma,
                              const std::vector<int>& sigma_inv) {
    if (compare_relabeled(t, sigma, sigma_inv, best) < 0) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          best[i * n + j] = sigma[t.at(sigma_inv[i], sigma_inv[j])];
    }
  });
  return CanonicalTable{OpTable(n, std::move(best))};
}

namespace {

// Column-permutation search. A table satisfies Q2 and Q3 exactly when its
// columns S_b are permutations with S_{S_z(y)} = S_z S_y S_z^-1 for all y, z;
// assigning one column therefore forces others, which both prunes and speeds
// up the search.
class ColumnSearch {
 public:
  ColumnSearch(int n, bool idempotent, bool up_to_iso)
      : n_(n),
        up_to_iso_(up_to_iso),
        candidates_(n),
        cols_(n),
        assigned_(n, 0) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      for (int b = 0; b < n; ++b)
        if (!idempotent || p[b] == b) candidates_[b].push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }

  std::vector<OpTable> run() {
    out_.clear();
    dfs();
    std::sort(out_.begin(), out_.end());
    return out_;
  }

 private:
  void dfs() {
    int b = 0;
    while (b < n_ && assigned_[b]) ++b;
    if (b == n_) {
      emit();
      return;
    }
    for (const std::vector<int>& cand : candidates_[b]) {
      std::vector<int> trail;
      cols_[b] = cand;
      assigned_[b] = 1;
      trail.push_back(b);
      if (propagate(b, trail)) dfs();
      for (int j : trail) assigned_[j] = 0;
    }
  }

  // Enforces the conjugation constraint between `start` and every assigned
  // column, assigning forced columns as it goes; false on contradiction.
  bool propagate(int start, std::vector<int>& trail) {
    std::vector<int> queue{start};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int k = queue[qi];
      for (int z = 0; z < n_; ++z) {
        if (!assigned_[z]) continue;
        if (!derive(z, k, queue, trail)) return false;
        if (z != k && !derive(k, z, queue, trail)) return false;
      }
    }
    return true;
  }

  // The column at S_z(y) must be S_z S_y S_z^-1.
  bool derive(int z, int y, std::vector<int>& queue,
              std::vector<int>& trail) {
    const std::vector<int>& sz = cols_[z];
    const std::vector<int>& sy = cols_[y];
    std::vector<int> forced(n_);
    for (int w = 0; w < n_; ++w) forced[sz[w]] = sz[sy[w]];
    int j = sz[y];
    if (assigned_[j]) return cols_[j] == forced;
    cols_[j] = std::move(forced);
    assigned_[j] = 1;
    trail.push_back(j);
    queue.push_back(j);
    return true;
  }

  void emit() {
    std::vector<int> entries(static_cast<size_t>(n_) * n_);
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) entries[a * n_ + b] = cols_[b][a];
    OpTable t(n_, std::move(entries));
    if (!up_to_iso_ || is_canonical(t)) out_.push_back(std::move(t));
  }

  int n_;
  bool up_to_iso_;
  std::vector<std::vector<std::vector<int>>> candidates_;
  std::vector<std::vector<int>> cols_;
  std::vector<char> assigned_;
  std::vector<OpTable> out_;
};

std::vector<OpTable> enumerate_impl(int n, bool idempotent, bool up_to_iso,
                                    int cap) {
  if (n <= 0) throw ValidationError("carrier must be non-empty");
  if (n > cap)
    throw CapacityError("enumeration is capped at order " +
                        std::to_string(cap) + " (requested " +
                        std::to_string(n) + ")");
  return ColumnSearch(n, idempotent, up_to_iso).run();
}

}  // namespace

std::vector<OpTable> enumerate_quandles(int n, bool up_to_iso, int cap) {
  return enumerate_impl(n, true, up_to_iso, cap);
}

std::vector<OpTable> enumerate_racks(int n, bool up_to_iso, int cap) {
  return enumerate_impl(n, false, up_to_iso, cap);
}

SurveyReport composition_survey(const std::vector<CatalogEntry>& tables) {
  if (tables.empty()) throw PreconditionError("survey needs tables");
  const int n = tables.front().table.size();
  for (const auto& e : tables)
    if (e.table.size() != n)
      throw PreconditionError("survey tables must share one carrier size");
  SurveyReport r;
  r.generators = tables;
  r.grid.resize(tables.size());
  for (size_t i = 0; i < tables.size(); ++i) {
    r.grid[i].resize(tables.size());
    for (size_t j = 0; j < tables.size(); ++j) {
      SurveyCell& cell = r.grid[i][j];
      cell.report =
          axioms_report(compose(tables[i].table, tables[j].table));
      cell.distributes = distributes_over(tables[j].table, tables[i].table);
    }
  }
  return r;
}

SurveyReport composition_survey(const std::vector<OpTable>& tables) {
  std::vector<CatalogEntry> named;
  named.reserve(tables.size());
  for (size_t i = 0; i < tables.size(); ++i)
    named.push_back({"t" + std::to_string(i), tables[i]});
  return composition_survey(named);
}

}  // namespace quandlekit
