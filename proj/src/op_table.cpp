#include "quandlekit/op_table.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace quandlekit {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<char> seen(n, 0);
  for (int v : images_) {
    if (v < 0 || v >= n)
      throw ValidationError("permutation image out of range: " +
                            std::to_string(v));
    if (seen[v]) throw ValidationError("permutation image repeated");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw ValidationError("permutation size must be nonnegative");
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.size() != size())
    throw PreconditionError("composing permutations of different sizes");
  std::vector<int> im(images_.size());
  for (int i = 0; i < size(); ++i) im[i] = next.images_[images_[i]];
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int i = 0; i < size(); ++i) im[images_[i]] = i;
  return Permutation(std::move(im));
}

Permutation Permutation::pow(long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long e = k < 0 ? -static_cast<unsigned long>(k) : k;
  Permutation acc = identity(size());
  while (e > 0) {
    if (e & 1) acc = acc.then(base);
    base = base.then(base);
    e >>= 1;
  }
  return acc;
}

long Permutation::order() const {
  long ord = 1;
  for (int len : cycle_type()) ord = std::lcm(ord, static_cast<long>(len));
  return ord;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<char> seen(images_.size(), 0);
  std::vector<int> lens;
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::quandle: return "quandle";
    case Classification::rack: return "rack";
    case Classification::idempotent_right_quasigroup:
      return "idempotent right quasigroup";
    case Classification::right_quasigroup: return "right quasigroup";
    case Classification::idempotent_groupoid: return "idempotent groupoid";
    case Classification::groupoid: return "groupoid";
  }
  return "groupoid";
}

OpTable::OpTable(int n, std::vector<int> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ <= 0) throw ValidationError("table must be on a non-empty set");
  if (entries_.size() != static_cast<size_t>(n_) * n_)
    throw ValidationError("table needs " + std::to_string(n_) + "*" +
                          std::to_string(n_) + " entries, got " +
                          std::to_string(entries_.size()));
  for (int v : entries_)
    if (v < 0 || v >= n_)
      throw ValidationError("table entry out of range: " + std::to_string(v));
}

OpTable OpTable::from_rows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<int> entries;
  entries.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n)
      throw ValidationError("table rows must all have length " +
                            std::to_string(n));
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return OpTable(n, std::move(entries));
}

std::vector<int> OpTable::column_images(int b) const {
  std::vector<int> im(n_);
  for (int a = 0; a < n_; ++a) im[a] = at(a, b);
  return im;
}

std::vector<std::vector<int>> OpTable::rows() const {
  std::vector<std::vector<int>> out(n_);
  for (int a = 0; a < n_; ++a) {
    out[a].assign(entries_.begin() + static_cast<size_t>(a) * n_,
                  entries_.begin() + static_cast<size_t>(a + 1) * n_);
  }
  return out;
}

namespace {

bool column_is_bijective(const OpTable& t, int b) {
  std::vector<char> seen(t.size(), 0);
  for (int a = 0; a < t.size(); ++a) {
    int v = t.at(a, b);
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace

AxiomReport axioms_report(const OpTable& t) {
  const int n = t.size();
  AxiomReport r;
  r.idempotent = true;
  for (int x = 0; x < n; ++x)
    if (t.at(x, x) != x) {
      r.idempotent = false;
      break;
    }
  r.right_quasigroup = true;
  for (int b = 0; b < n && r.right_quasigroup; ++b)
    r.right_quasigroup = column_is_bijective(t, b);
  r.self_distributive = true;
  for (int x = 0; x < n && r.self_distributive; ++x)
    for (int y = 0; y < n && r.self_distributive; ++y)
      for (int z = 0; z < n; ++z)
        if (t.at(t.at(x, y), z) != t.at(t.at(x, z), t.at(y, z))) {
          r.self_distributive = false;
          break;
        }
  if (r.right_quasigroup)
    r.classification = r.self_distributive
                           ? (r.idempotent ? Classification::quandle
                                           : Classification::rack)
                           : (r.idempotent
                                  ? Classification::idempotent_right_quasigroup
                                  : Classification::right_quasigroup);
  else
    r.classification = r.idempotent ? Classification::idempotent_groupoid
                                    : Classification::groupoid;
  return r;
}

bool is_quandle(const OpTable& t) {
  return axioms_report(t).classification == Classification::quandle;
}

bool is_rack(const OpTable& t) {
  auto r = axioms_report(t);
  return r.right_quasigroup && r.self_distributive;
}

OpTable right_inverse(const OpTable& t) {
  const int n = t.size();
  std::vector<int> entries(static_cast<size_t>(n) * n, -1);
  for (int b = 0; b < n; ++b) {
    if (!column_is_bijective(t, b))
      throw PreconditionError("column " + std::to_string(b) +
                              " is not a bijection; no right inverse");
    for (int a = 0; a < n; ++a) entries[t.at(a, b) * n + b] = a;
  }
  return OpTable(n, std::move(entries));
}

Permutation inner_map(const OpTable& t, int x) {
  if (x < 0 || x >= t.size())
    throw ValidationError("inner map index out of range");
  if (!column_is_bijective(t, x))
    throw PreconditionError("column " + std::to_string(x) +
                            " is not a bijection");
  return Permutation(t.column_images(x));
}

InnerGroup inner_group(const OpTable& t) {
  const int n = t.size();
  InnerGroup g;
  std::map<Permutation, int> seen;
  std::vector<Permutation> queue;
  auto add = [&](const Permutation& p) {
    if (seen.emplace(p, 1).second) queue.push_back(p);
  };
  add(Permutation::identity(n));
  for (int x = 0; x < n; ++x) {
    Permutation s = inner_map(t, x);
    g.generators.push_back(s);
    add(s);
  }
  for (size_t i = 0; i < queue.size(); ++i) {
    Permutation p = queue[i];
    for (int x = 0; x < n; ++x) {
      add(p.then(g.generators[x]));
      add(p.then(g.generators[x].inverse()));
    }
  }
  std::sort(queue.begin(), queue.end());
  g.elements = std::move(queue);
  return g;
}

bool is_involutory(const OpTable& t) {
  for (int a = 0; a < t.size(); ++a)
    for (int b = 0; b < t.size(); ++b)
      if (t.at(t.at(a, b), b) != a) return false;
  return true;
}

int evaluate_left_normed(const OpTable& t, int base,
                         const std::vector<SignedIndex>& factors) {
  const int n = t.size();
  if (base < 0 || base >= n)
    throw ValidationError("base element out of range");
  int acc = base;
  for (const auto& f : factors) {
    if (f.index < 0 || f.index >= n)
      throw ValidationError("factor index out of range");
    if (f.sign == 1) {
      acc = t.at(acc, f.index);
    } else if (f.sign == -1) {
      if (!column_is_bijective(t, f.index))
        throw PreconditionError(
            "right inverse used on a non-invertible column");
      int pre = -1;
      for (int c = 0; c < n; ++c)
        if (t.at(c, f.index) == acc) {
          pre = c;
          break;
        }
      acc = pre;
    } else {
      throw ValidationError("factor sign must be +1 or -1");
    }
  }
  return acc;
}

std::vector<int> subquandle_closure(const OpTable& t,
                                    const std::vector<int>& seed) {
  if (!is_rack(t))
    throw PreconditionError("subquandle closure requires a rack");
  const int n = t.size();
  OpTable inv = right_inverse(t);
  std::vector<char> in(n, 0);
  std::vector<int> members;
  auto add = [&](int v) {
    if (!in[v]) {
      in[v] = 1;
      members.push_back(v);
    }
  };
  for (int v : seed) {
    if (v < 0 || v >= n) throw ValidationError("seed element out of range");
    add(v);
  }
  for (size_t i = 0; i < members.size(); ++i) {
    int x = members[i];
    for (size_t j = 0; j <= i; ++j) {
      int y = members[j];
      add(t.at(x, y));
      add(t.at(y, x));
      add(inv.at(x, y));
      add(inv.at(y, x));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

namespace {

// Visits k-subsets of {0,...,n-1} until the callback returns true.
bool any_combination(int n, int k,
                     const std::function<bool(const std::vector<int>&)>& fn) {
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k == 0) return fn(idx);
  while (true) {
    if (fn(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

int rank(const OpTable& t) {
  if (!is_quandle(t)) throw PreconditionError("rank requires a quandle");
  const int n = t.size();
  if (n == 0) return 0;
  for (int k = 1; k < n; ++k) {
    bool found = any_combination(n, k, [&](const std::vector<int>& subset) {
      return static_cast<int>(subquandle_closure(t, subset).size()) == n;
    });
    if (found) return k;
  }
  return n;
}

namespace {

// Relabeling-invariant fingerprint of one element of a table.
struct ElementSignature {
  int diag_fixed = 0;
  int row_fixed = 0;
  int col_fixed = 0;
  int occurrences = 0;
  std::vector<int> column_shape;  // cycle type, or image multiplicities

  friend bool operator==(const ElementSignature&,
                         const ElementSignature&) = default;
  friend auto operator<=>(const ElementSignature&,
                          const ElementSignature&) = default;
};

ElementSignature element_signature(const OpTable& t, int x) {
  const int n = t.size();
  ElementSignature s;
  s.diag_fixed = t.at(x, x) == x ? 1 : 0;
  for (int b = 0; b < n; ++b)
    if (t.at(x, b) == x) ++s.row_fixed;
  for (int a = 0; a < n; ++a)
    if (t.at(a, x) == a) ++s.col_fixed;
  for (int v : t.entries())
    if (v == x) ++s.occurrences;
  if (column_is_bijective(t, x)) {
    s.column_shape = Permutation(t.column_images(x)).cycle_type();
  } else {
    std::vector<int> counts(n, 0);
    for (int a = 0; a < n; ++a) ++counts[t.at(a, x)];
    std::sort(counts.rbegin(), counts.rend());
    s.column_shape = std::move(counts);
    s.column_shape.push_back(-1);  // never collides with a cycle type
  }
  return s;
}

bool extend_isomorphism(const OpTable& a, const OpTable& b,
                        const std::vector<std::vector<int>>& candidates,
                        const std::vector<int>& order, size_t pos,
                        std::vector<int>& f, std::vector<int>& used) {
  const int n = a.size();
  if (pos == order.size()) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (f[a.at(x, y)] != b.at(f[x], f[y])) return false;
    return true;
  }
  int k = order[pos];
  for (int v : candidates[k]) {
    if (used[v] >= 0) continue;
    f[k] = v;
    used[v] = k;
    bool ok = true;
    for (size_t q = 0; q <= pos && ok; ++q) {
      int x = order[q];
      // Both orientations of the new pair must stay consistent.
      int c1 = a.at(x, k), c2 = a.at(k, x);
      int d1 = b.at(f[x], v), d2 = b.at(v, f[x]);
      if (f[c1] >= 0) {
        if (f[c1] != d1) ok = false;
      } else if (used[d1] >= 0) {
        ok = false;
      }
      if (ok) {
        if (f[c2] >= 0) {
          if (f[c2] != d2) ok = false;
        } else if (used[d2] >= 0) {
          ok = false;
        }
      }
    }
    if (ok && extend_isomorphism(a, b, candidates, order, pos + 1, f, used))
      return true;
    f[k] = -1;
    used[v] = -1;
  }
  return false;
}

}  // namespace

std::optional<Permutation> is_isomorphic(const OpTable& a, const OpTable& b) {
  if (a.size() != b.size()) return std::nullopt;
  const int n = a.size();
  if (n == 0) return Permutation();

  std::vector<ElementSignature> sig_a(n), sig_b(n);
  for (int x = 0; x < n; ++x) {
    sig_a[x] = element_signature(a, x);
    sig_b[x] = element_signature(b, x);
  }
  auto sorted_a = sig_a, sorted_b = sig_b;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  if (sorted_a != sorted_b) return std::nullopt;

  std::vector<std::vector<int>> candidates(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (sig_a[x] == sig_b[y]) candidates[x].push_back(y);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int u, int v) {
    return candidates[u].size() < candidates[v].size();
  });

  std::vector<int> f(n, -1), used(n, -1);
  if (extend_isomorphism(a, b, candidates, order, 0, f, used))
    return Permutation(f);
  return std::nullopt;
}

}  // namespace quandlekit
