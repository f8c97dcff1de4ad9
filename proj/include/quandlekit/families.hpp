#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quandlekit/group.hpp"
#include "quandlekit/op_table.hpp"

namespace quandlekit {

enum class IndexKind { quandle_indexed, group_indexed };

// A family of operations *_a on a carrier X, indexed by a quandle or by a
// group, with an optional index-valued twisting map f. Which validator
// applies is determined by index_kind and the presence of f:
//   quandle-indexed, no f   plain Q-family
//   quandle-indexed, f      (Q,f)-family
//   group-indexed, no f     plain G-family
//   group-indexed, f        (G,f)-family; group_quandle supplies the quandle
//                           operation on G used by its third axiom
struct FamilySpec {
  int x_size = 0;
  IndexKind index_kind = IndexKind::quandle_indexed;
  std::optional<OpTable> index_quandle;
  std::optional<FiniteGroup> group;
  std::optional<OpTable> group_quandle;
  std::vector<OpTable> ops;   // one table on X per index element
  std::optional<OpTable> f;   // table of indices, shape s x s

  int index_size() const;
};

struct FamilyVerdict {
  bool valid = true;
  int axiom = 0;             // 1..3 when invalid
  std::string clause;        // distinguishes the two parts of axiom 2
  std::vector<int> witness;  // first violating tuple, quantifier order
  std::string detail;

  explicit operator bool() const { return valid; }
};

FamilyVerdict validate_q_family(const FamilySpec& spec);
FamilyVerdict validate_g_family(const FamilySpec& spec);
FamilyVerdict validate_qf_family(const FamilySpec& spec);
FamilyVerdict validate_gf_family(const FamilySpec& spec);

// Dispatches on the spec shape per the table above.
FamilyVerdict validate_family(const FamilySpec& spec);

// The 2-cocycle identity for a (G,f)-shaped spec:
//   x *_{f(g,h) f(g*h,q)} y == x *_{f(g,q) f(g*q,h*q)} y
// where a product of indices acts by composing the two operations. Holds for
// every valid (G,f)-family; may fail for invalid ones.
bool cocycle_check(const FamilySpec& spec);

// Quandle on X x S, flattened as index(x, s) = x*|S| + s. Requires the
// family to validate.
OpTable associated_quandle(const FamilySpec& spec);

// Fully general product data on X x S: operation tables f[s][t] on X and
// g[x][y] on S, flattened row-major.
struct GeneralProductSpec {
  int x_size = 0;
  int s_size = 0;
  std::vector<OpTable> f;  // s_size^2 tables on X, index s*s_size + t
  std::vector<OpTable> g;  // x_size^2 tables on S, index x*x_size + y

  const OpTable& fmap(int s, int t) const { return f[s * s_size + t]; }
  const OpTable& gmap(int x, int y) const { return g[x * x_size + y]; }
};

struct GeneralProductReport {
  bool idempotent_pair = false;  // f(s,s)(x,x) = x and g(x,x)(s,s) = s
  bool bijective = false;        // right translation by each (y,t) bijective
  bool distributive = false;     // the two four-variable identities
  bool conditions_verdict = false;
  AxiomReport direct_report;     // axioms of the assembled product table
  bool direct_verdict = false;
  std::vector<int> witness;      // first violating tuple of first failure
  std::string detail;
  OpTable product;
};

// Evaluates the three product conditions and, independently, the quandle
// axioms of the assembled table; the two verdicts agree on every input.
GeneralProductReport general_product_check(const GeneralProductSpec& spec);

}  // namespace quandlekit
