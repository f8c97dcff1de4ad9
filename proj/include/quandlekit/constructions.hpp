#pragma once

#include <string>
#include <vector>

#include "quandlekit/group.hpp"
#include "quandlekit/op_table.hpp"

namespace quandlekit {

// x*y = x.
OpTable trivial_quandle(int n);

// a*b = 2b - a mod n.
OpTable dihedral_quandle(int n);

// a*b = b^-n a b^n on the carrier of g.
OpTable conj_quandle(const FiniteGroup& g, int n = 1);

// a*b = b a^-1 b.
OpTable core_quandle(const FiniteGroup& g);

// a*b = phi(a b^-1) b.
OpTable alexander_quandle(const FiniteGroup& g, const GroupAutomorphism& phi);

// Quandle on H x Aut(H), flattened as index(x, s) = x*|Aut(H)| + s with the
// automorphisms in their enumeration order. The pair product is
// (x, s)(y, t) = (t(x y^-1) y, t^-1 s t).
OpTable holomorph_quandle(const FiniteGroup& h);

struct CatalogEntry {
  std::string name;
  OpTable table;
};

// All built-in tables: T3, R3, J3, the order-4 classes Q0..Q6, and Z5-Alex2.
const std::vector<CatalogEntry>& catalog();

// Lookup by name; throws ValidationError for unknown names.
const CatalogEntry& catalog(const std::string& name);

}  // namespace quandlekit
