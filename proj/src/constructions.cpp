#include "quandlekit/constructions.hpp"

#include <algorithm>

namespace quandlekit {

OpTable trivial_quandle(int n) {
  if (n <= 0) throw ValidationError("carrier must be non-empty");
  std::vector<int> entries(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) entries[a * n + b] = a;
  return OpTable(n, std::move(entries));
}

OpTable dihedral_quandle(int n) {
  if (n <= 0) throw ValidationError("carrier must be non-empty");
  std::vector<int> entries(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) entries[a * n + b] = ((2 * b - a) % n + n) % n;
  return OpTable(n, std::move(entries));
}

OpTable conj_quandle(const FiniteGroup& g, int n) {
  const int m = g.order();
  std::vector<int> entries(static_cast<size_t>(m) * m);
  for (int b = 0; b < m; ++b) {
    int bn = g.pow(b, n);
    int bninv = g.inverse(bn);
    for (int a = 0; a < m; ++a)
      entries[a * m + b] = g.mul(g.mul(bninv, a), bn);
  }
  return OpTable(m, std::move(entries));
}

OpTable core_quandle(const FiniteGroup& g) {
  const int m = g.order();
  std::vector<int> entries(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      entries[a * m + b] = g.mul(g.mul(b, g.inverse(a)), b);
  return OpTable(m, std::move(entries));
}

OpTable alexander_quandle(const FiniteGroup& g, const GroupAutomorphism& phi) {
  const int m = g.order();
  if (phi.perm().size() != m)
    throw ValidationError("automorphism does not match the group");
  std::vector<int> entries(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      entries[a * m + b] = g.mul(phi(g.mul(a, g.inverse(b))), b);
  return OpTable(m, std::move(entries));
}

OpTable holomorph_quandle(const FiniteGroup& h) {
  std::vector<GroupAutomorphism> autos;
  FiniteGroup aut = automorphism_group(h, &autos);
  const int na = aut.order(), nh = h.order(), m = nh * na;
  std::vector<int> entries(static_cast<size_t>(m) * m);
  for (int x = 0; x < nh; ++x)
    for (int s = 0; s < na; ++s)
      for (int y = 0; y < nh; ++y)
        for (int t = 0; t < na; ++t) {
          int xp = h.mul(autos[t](h.mul(x, h.inverse(y))), y);
          int sp = aut.mul(aut.mul(aut.inverse(t), s), t);
          entries[(x * na + s) * m + (y * na + t)] = xp * na + sp;
        }
  return OpTable(m, std::move(entries));
}

namespace {

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  out.push_back({"T3", trivial_quandle(3)});
  out.push_back({"R3", dihedral_quandle(3)});
  out.push_back({"J3", OpTable::from_rows({{0, 0, 0}, {2, 1, 1}, {1, 2, 2}})});
  out.push_back({"Q0", trivial_quandle(4)});
  out.push_back({"Q1", OpTable::from_rows(
                           {{0, 0, 0, 0}, {1, 1, 1, 2}, {2, 2, 2, 1}, {3, 3, 3, 3}})});
  out.push_back({"Q2", OpTable::from_rows(
                           {{0, 0, 0, 1}, {1, 1, 1, 2}, {2, 2, 2, 0}, {3, 3, 3, 3}})});
  out.push_back({"Q3", OpTable::from_rows(
                           {{0, 0, 1, 1}, {1, 1, 0, 0}, {2, 2, 2, 2}, {3, 3, 3, 3}})});
  out.push_back({"Q4", OpTable::from_rows(
                           {{0, 0, 0, 0}, {1, 1, 3, 2}, {2, 3, 2, 1}, {3, 2, 1, 3}})});
  out.push_back({"Q5", OpTable::from_rows(
                           {{0, 0, 1, 1}, {1, 1, 0, 0}, {3, 3, 2, 2}, {2, 2, 3, 3}})});
  out.push_back({"Q6", OpTable::from_rows(
                           {{0, 3, 1, 2}, {2, 1, 3, 0}, {3, 0, 2, 1}, {1, 2, 0, 3}})});
  out.push_back({"Z5-Alex2", OpTable::from_rows({{0, 4, 3, 2, 1},
                                                 {2, 1, 0, 4, 3},
                                                 {4, 3, 2, 1, 0},
                                                 {1, 0, 4, 3, 2},
                                                 {3, 2, 1, 0, 4}})});
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw ValidationError("unknown catalog name: " + name);
}

}  // namespace quandlekit
