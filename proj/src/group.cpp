#include "quandlekit/group.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>

namespace quandlekit {

FiniteGroup FiniteGroup::from_entries(int n, std::vector<int> entries) {
  if (n <= 0) throw ValidationError("group order must be positive");
  if (entries.size() != static_cast<size_t>(n) * n)
    throw ValidationError("group table needs " + std::to_string(n) + "*" +
                          std::to_string(n) + " entries");
  for (int v : entries)
    if (v < 0 || v >= n)
      throw ValidationError("group table entry out of range: " +
                            std::to_string(v));

  FiniteGroup g;
  g.n_ = n;
  g.table_ = std::move(entries);

  for (int e = 0; e < n && g.identity_ < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = g.mul(e, x) == x && g.mul(x, e) == x;
    if (ok) g.identity_ = e;
  }
  if (g.identity_ < 0) throw ValidationError("table has no identity element");

  g.inverses_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == g.identity_ && g.mul(b, a) == g.identity_) {
        g.inverses_[a] = b;
        break;
      }
    if (g.inverses_[a] < 0)
      throw ValidationError("element " + std::to_string(a) +
                            " has no inverse");
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw ValidationError("operation is not associative");
  return g;
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<int> entries;
  entries.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n)
      throw ValidationError("group table rows must all have length " +
                            std::to_string(n));
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return from_entries(n, std::move(entries));
}

FiniteGroup group_from_table(const std::vector<std::vector<int>>& rows) {
  return FiniteGroup::from_table(rows);
}

int FiniteGroup::pow(int a, long k) const {
  int base = k < 0 ? inverse(a) : a;
  unsigned long e = k < 0 ? -static_cast<unsigned long>(k) : k;
  int acc = identity_;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

int FiniteGroup::element_order(int a) const {
  int ord = 1;
  for (int x = a; x != identity_; x = mul(x, a)) ++ord;
  return ord;
}

std::vector<std::vector<int>> FiniteGroup::rows() const {
  std::vector<std::vector<int>> out(n_);
  for (int a = 0; a < n_; ++a) {
    out[a].assign(table_.begin() + static_cast<size_t>(a) * n_,
                  table_.begin() + static_cast<size_t>(a + 1) * n_);
  }
  return out;
}

FiniteGroup cyclic(int n) {
  if (n <= 0) throw ValidationError("cyclic group order must be positive");
  std::vector<int> entries(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) entries[a * n + b] = (a + b) % n;
  return FiniteGroup::from_entries(n, std::move(entries));
}

// Elements are s^e r^k with e in {0,1}, k in [0,n), index e*n + k, subject to
// r^n = s^2 = 1 and r s = s r^-1.
FiniteGroup dihedral_group(int n) {
  if (n <= 0) throw ValidationError("dihedral parameter must be positive");
  const int m = 2 * n;
  std::vector<int> entries(static_cast<size_t>(m) * m);
  for (int e1 = 0; e1 < 2; ++e1)
    for (int k1 = 0; k1 < n; ++k1)
      for (int e2 = 0; e2 < 2; ++e2)
        for (int k2 = 0; k2 < n; ++k2) {
          int e = (e1 + e2) % 2;
          int k = e2 == 0 ? (k1 + k2) % n : ((k2 - k1) % n + n) % n;
          entries[(e1 * n + k1) * m + (e2 * n + k2)] = e * n + k;
        }
  return FiniteGroup::from_entries(m, std::move(entries));
}

// Elements 0..7 stand for 1, -1, i, -i, j, -j, k, -k (index = 2*axis + sign).
FiniteGroup quaternion8() {
  // axis_mul[a][b] gives the axis of the product and whether it flips sign.
  struct P { int axis; int neg; };
  static constexpr P axis_mul[4][4] = {
      {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
      {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
      {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
      {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
  };
  std::vector<int> entries(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      P p = axis_mul[a / 2][b / 2];
      int neg = (a % 2) ^ (b % 2) ^ p.neg;
      entries[a * 8 + b] = p.axis * 2 + neg;
    }
  return FiniteGroup::from_entries(8, std::move(entries));
}

// Elements are the n! permutations in lexicographic order of their image
// vectors; the product of a and b applies a first, then b.
FiniteGroup symmetric(int n) {
  if (n <= 0 || n > 4)
    throw ValidationError("symmetric(n) is supported for 1 <= n <= 4");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int m = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < m; ++i) index[perms[i]] = i;
  std::vector<int> entries(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      std::vector<int> q(n);
      for (int x = 0; x < n; ++x) q[x] = perms[b][perms[a][x]];
      entries[a * m + b] = index[q];
    }
  return FiniteGroup::from_entries(m, std::move(entries));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order(), m = na * nb;
  std::vector<int> entries(static_cast<size_t>(m) * m);
  for (int a1 = 0; a1 < na; ++a1)
    for (int b1 = 0; b1 < nb; ++b1)
      for (int a2 = 0; a2 < na; ++a2)
        for (int b2 = 0; b2 < nb; ++b2)
          entries[(a1 * nb + b1) * m + (a2 * nb + b2)] =
              a.mul(a1, a2) * nb + b.mul(b1, b2);
  return FiniteGroup::from_entries(m, std::move(entries));
}

GroupAutomorphism::GroupAutomorphism(const FiniteGroup& g, Permutation map)
    : map_(std::move(map)) {
  if (map_.size() != g.order())
    throw ValidationError("automorphism size does not match the group");
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (map_(g.mul(a, b)) != g.mul(map_(a), map_(b)))
        throw ValidationError("map does not preserve the group product");
}

GroupAutomorphism GroupAutomorphism::inverse(const FiniteGroup& g) const {
  return GroupAutomorphism(g, map_.inverse());
}

namespace {

std::vector<char> subgroup_closure_mask(const FiniteGroup& g,
                                        const std::vector<int>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> members{g.identity()};
  in[g.identity()] = 1;
  for (size_t i = 0; i < members.size(); ++i)
    for (int x : gens) {
      int y = g.mul(members[i], x);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  return in;
}

// Smallest-first greedy generating set; deterministic for a fixed table.
std::vector<int> greedy_generators(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<char> span = subgroup_closure_mask(g, gens);
  for (int x = 0; x < g.order(); ++x)
    if (!span[x]) {
      gens.push_back(x);
      span = subgroup_closure_mask(g, gens);
    }
  return gens;
}

// Extends gen images to a full homomorphism by walking the Cayley graph;
// returns the image vector, or empty on inconsistency.
std::vector<int> extend_homomorphism(const FiniteGroup& a,
                                     const FiniteGroup& b,
                                     const std::vector<int>& gens,
                                     const std::vector<int>& images) {
  std::vector<int> map(a.order(), -1);
  map[a.identity()] = b.identity();
  std::vector<int> queue{a.identity()};
  for (size_t i = 0; i < queue.size(); ++i) {
    int x = queue[i];
    for (size_t k = 0; k < gens.size(); ++k) {
      int y = a.mul(x, gens[k]);
      int img = b.mul(map[x], images[k]);
      if (map[y] < 0) {
        map[y] = img;
        queue.push_back(y);
      } else if (map[y] != img) {
        return {};
      }
    }
  }
  if (queue.size() != static_cast<size_t>(a.order())) return {};
  return map;
}

bool is_full_isomorphism(const FiniteGroup& a, const FiniteGroup& b,
                         const std::vector<int>& map) {
  std::vector<char> hit(b.order(), 0);
  for (int v : map) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y)
      if (map[a.mul(x, y)] != b.mul(map[x], map[y])) return false;
  return true;
}

// Enumerates isomorphisms a -> b; stops early once the callback returns true.
bool for_each_isomorphism(const FiniteGroup& a, const FiniteGroup& b,
                          const std::function<bool(Permutation)>& cb) {
  if (a.order() != b.order()) return false;
  std::vector<int> gens = greedy_generators(a);
  std::vector<std::vector<int>> candidates(gens.size());
  for (size_t k = 0; k < gens.size(); ++k) {
    int ord = a.element_order(gens[k]);
    for (int y = 0; y < b.order(); ++y)
      if (b.element_order(y) == ord) candidates[k].push_back(y);
    if (candidates[k].empty()) return false;
  }
  std::vector<int> images(gens.size(), 0);
  std::function<bool(size_t)> rec = [&](size_t k) -> bool {
    if (k == gens.size()) {
      std::vector<int> map = extend_homomorphism(a, b, gens, images);
      if (map.empty() || !is_full_isomorphism(a, b, map)) return false;
      return cb(Permutation(map));
    }
    for (int y : candidates[k]) {
      images[k] = y;
      if (rec(k + 1)) return true;
    }
    return false;
  };
  if (gens.empty()) {
    // Trivial group; the empty map extends to identity -> identity.
    std::vector<int> map(a.order());
    map[a.identity()] = b.identity();
    return cb(Permutation(map));
  }
  return rec(0);
}

}  // namespace

std::vector<GroupAutomorphism> automorphisms(const FiniteGroup& g) {
  std::vector<Permutation> found;
  for_each_isomorphism(g, g, [&](Permutation p) {
    found.push_back(std::move(p));
    return false;
  });
  std::sort(found.begin(), found.end());
  std::vector<GroupAutomorphism> out;
  out.reserve(found.size());
  for (auto& p : found) out.emplace_back(g, std::move(p));
  return out;
}

FiniteGroup automorphism_group(const FiniteGroup& g,
                               std::vector<GroupAutomorphism>* elements) {
  std::vector<GroupAutomorphism> autos = automorphisms(g);
  const int m = static_cast<int>(autos.size());
  std::map<Permutation, int> index;
  for (int i = 0; i < m; ++i) index[autos[i].perm()] = i;
  std::vector<int> entries(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      entries[i * m + j] = index.at(autos[i].perm().then(autos[j].perm()));
  if (elements) *elements = autos;
  return FiniteGroup::from_entries(m, std::move(entries));
}

std::vector<int> center(const FiniteGroup& g) {
  std::vector<int> out;
  for (int z = 0; z < g.order(); ++z) {
    bool central = true;
    for (int x = 0; x < g.order() && central; ++x)
      central = g.mul(z, x) == g.mul(x, z);
    if (central) out.push_back(z);
  }
  return out;
}

std::vector<int> commutator_subgroup(const FiniteGroup& g) {
  std::vector<int> comms;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      comms.push_back(
          g.mul(g.mul(g.inverse(a), g.inverse(b)), g.mul(a, b)));
  std::vector<char> in = subgroup_closure_mask(g, comms);
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

bool is_abelian(const FiniteGroup& g) {
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < a; ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

FiniteGroup quotient(const FiniteGroup& g, const std::vector<int>& normal) {
  std::vector<char> in(g.order(), 0);
  for (int x : normal) {
    if (x < 0 || x >= g.order())
      throw ValidationError("subgroup element out of range");
    in[x] = 1;
  }
  if (!in[g.identity()])
    throw PreconditionError("subgroup must contain the identity");
  for (int x : normal)
    for (int y : normal)
      if (!in[g.mul(x, y)])
        throw PreconditionError("subset is not closed under the product");
  for (int x : normal)
    for (int a = 0; a < g.order(); ++a)
      if (!in[g.mul(g.mul(a, x), g.inverse(a))])
        throw PreconditionError("subgroup is not normal");

  // Label cosets by their minimal member, in increasing order.
  std::vector<int> coset_of(g.order(), -1);
  std::vector<int> reps;
  for (int x = 0; x < g.order(); ++x) {
    if (coset_of[x] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int h : normal) coset_of[g.mul(x, h)] = id;
  }
  const int m = static_cast<int>(reps.size());
  std::vector<int> entries(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      entries[i * m + j] = coset_of[g.mul(reps[i], reps[j])];
  return FiniteGroup::from_entries(m, std::move(entries));
}

FiniteGroup abelianization(const FiniteGroup& g) {
  return quotient(g, commutator_subgroup(g));
}

bool central_squares_two_step(const FiniteGroup& g) {
  std::vector<char> in_center(g.order(), 0);
  for (int z : center(g)) in_center[z] = 1;
  for (int x = 0; x < g.order(); ++x)
    if (!in_center[g.mul(x, x)]) return false;
  for (int c : commutator_subgroup(g))
    if (!in_center[c]) return false;
  return true;
}

std::optional<Permutation> find_group_isomorphism(const FiniteGroup& a,
                                                  const FiniteGroup& b) {
  std::optional<Permutation> out;
  for_each_isomorphism(a, b, [&](Permutation p) {
    out = std::move(p);
    return true;
  });
  return out;
}

bool group_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  return find_group_isomorphism(a, b).has_value();
}

namespace {

// Divisor chains d1 | d2 | ... with product m, all factors >= 2 and
// divisible by `base`; deterministic order.
void divisor_chains(int m, int base, std::vector<int>& chain,
                    std::vector<std::vector<int>>& out) {
  if (m == 1) {
    out.push_back(chain);
    return;
  }
  for (int d = base; d <= m; ++d)
    if (d % base == 0 && m % d == 0 && d >= 2) {
      chain.push_back(d);
      divisor_chains(m / d, d, chain, out);
      chain.pop_back();
    }
}

}  // namespace

std::vector<int> abelian_invariants(const FiniteGroup& g) {
  if (!is_abelian(g))
    throw PreconditionError("invariant factors need an abelian group");
  if (g.order() == 1) return {};
  std::vector<std::vector<int>> chains;
  std::vector<int> chain;
  divisor_chains(g.order(), 1, chain, chains);
  for (const auto& c : chains) {
    FiniteGroup candidate = cyclic(c[0]);
    for (size_t i = 1; i < c.size(); ++i)
      candidate = direct_product(candidate, cyclic(c[i]));
    if (group_isomorphic(g, candidate)) return c;
  }
  throw Error("internal: no invariant factor decomposition found");
}

std::string abelian_type_name(const FiniteGroup& g) {
  std::vector<int> inv = abelian_invariants(g);
  if (inv.empty()) return "Z1";
  std::string out;
  for (size_t i = 0; i < inv.size(); ++i) {
    if (i) out += "x";
    out += "Z" + std::to_string(inv[i]);
  }
  return out;
}

}  // namespace quandlekit
