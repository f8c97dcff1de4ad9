#include "quandlekit/families.hpp"

#include <sstream>

namespace quandlekit {

int FamilySpec::index_size() const {
  if (index_kind == IndexKind::quandle_indexed)
    return index_quandle ? index_quandle->size() : 0;
  return group ? group->order() : 0;
}

namespace {

std::string tuple_str(const std::vector<int>& t) {
  std::string out = "(";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(t[i]);
  }
  return out + ")";
}

FamilyVerdict fail(int axiom, std::string clause, std::vector<int> witness,
                   const std::string& what) {
  FamilyVerdict v;
  v.valid = false;
  v.axiom = axiom;
  v.clause = std::move(clause);
  v.detail = "axiom " + std::to_string(axiom) +
             (v.clause.empty() ? "" : " (" + v.clause + ")") + " fails at " +
             tuple_str(witness) + ": " + what;
  v.witness = std::move(witness);
  return v;
}

void check_shape(const FamilySpec& spec, IndexKind kind, bool want_f,
                 bool want_group_quandle) {
  if (spec.index_kind != kind)
    throw ValidationError("family spec has the wrong index kind");
  if (want_f != spec.f.has_value())
    throw ValidationError(want_f ? "family spec needs the index map f"
                                 : "family spec must not carry an f map");
  if (spec.x_size <= 0) throw ValidationError("carrier must be non-empty");
  if (kind == IndexKind::quandle_indexed) {
    if (!spec.index_quandle)
      throw ValidationError("family spec needs an index quandle");
    if (!is_quandle(*spec.index_quandle))
      throw ValidationError("index table is not a quandle");
  } else {
    if (!spec.group) throw ValidationError("family spec needs an index group");
  }
  if (want_group_quandle) {
    if (!spec.group_quandle)
      throw ValidationError(
          "a (G,f)-family needs a quandle operation on the group");
    if (spec.group_quandle->size() != spec.group->order())
      throw ValidationError("group quandle size does not match the group");
    if (!is_quandle(*spec.group_quandle))
      throw ValidationError("group quandle table is not a quandle");
  }
  const int s = spec.index_size();
  if (static_cast<int>(spec.ops.size()) != s)
    throw ValidationError("family needs one operation per index element");
  for (const OpTable& t : spec.ops)
    if (t.size() != spec.x_size)
      throw ValidationError("operation table size does not match the carrier");
  if (spec.f && spec.f->size() != s)
    throw ValidationError("index map f must be s x s over the index carrier");
}

// Axioms 1 and 2 are shared by all four family kinds: each *_a fixes the
// diagonal and has bijective columns.
std::optional<FamilyVerdict> check_pointwise(const FamilySpec& spec) {
  const int nx = spec.x_size, s = spec.index_size();
  for (int x = 0; x < nx; ++x)
    for (int a = 0; a < s; ++a)
      if (spec.ops[a].at(x, x) != x)
        return fail(1, "", {x, a}, "x *_a x != x");
  for (int x = 0; x < nx; ++x)
    for (int a = 0; a < s; ++a) {
      std::vector<char> seen(nx, 0);
      bool ok = true;
      for (int y = 0; y < nx && ok; ++y) {
        int v = spec.ops[a].at(y, x);
        ok = !seen[v];
        seen[v] = 1;
      }
      if (!ok)
        return fail(2, "", {x, a}, "y -> y *_a x is not a bijection");
    }
  return std::nullopt;
}

std::optional<FamilyVerdict> check_group_axiom2(const FamilySpec& spec) {
  const int nx = spec.x_size;
  const FiniteGroup& g = *spec.group;
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < nx; ++y)
      for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
          if (spec.ops[g.mul(a, b)].at(x, y) !=
              spec.ops[b].at(spec.ops[a].at(x, y), y))
            return fail(2, "product", {x, y, a, b},
                        "x *_{gh} y != (x *_g y) *_h y");
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < nx; ++y)
      if (spec.ops[g.identity()].at(x, y) != x)
        return fail(2, "unit", {x, y}, "x *_e y != x");
  return std::nullopt;
}

}  // namespace

FamilyVerdict validate_q_family(const FamilySpec& spec) {
  check_shape(spec, IndexKind::quandle_indexed, false, false);
  if (auto v = check_pointwise(spec)) return *v;
  const int nx = spec.x_size;
  const OpTable& q = *spec.index_quandle;
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < nx; ++y)
      for (int z = 0; z < nx; ++z)
        for (int a = 0; a < q.size(); ++a)
          for (int b = 0; b < q.size(); ++b)
            if (spec.ops[b].at(spec.ops[a].at(x, y), z) !=
                spec.ops[q.at(a, b)].at(spec.ops[b].at(x, z),
                                        spec.ops[b].at(y, z)))
              return fail(3, "", {x, y, z, a, b},
                          "(x *_a y) *_b z != (x *_b z) *_{a o b} (y *_b z)");
  return FamilyVerdict{};
}

FamilyVerdict validate_g_family(const FamilySpec& spec) {
  check_shape(spec, IndexKind::group_indexed, false, false);
  if (auto v = check_pointwise(spec)) return *v;
  if (auto v = check_group_axiom2(spec)) return *v;
  const int nx = spec.x_size;
  const FiniteGroup& g = *spec.group;
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < nx; ++y)
      for (int z = 0; z < nx; ++z)
        for (int a = 0; a < g.order(); ++a)
          for (int b = 0; b < g.order(); ++b) {
            int conj = g.mul(g.mul(g.inverse(b), a), b);
            if (spec.ops[b].at(spec.ops[a].at(x, y), z) !=
                spec.ops[conj].at(spec.ops[b].at(x, z), spec.ops[b].at(y, z)))
              return fail(3, "", {x, y, z, a, b},
                          "(x *_g y) *_h z != (x *_h z) *_{h^-1gh} (y *_h z)");
          }
  return FamilyVerdict{};
}

namespace {

// The twisted third axiom shared by the (Q,f) and (G,f) definitions; `star`
// is the quandle operation on the index carrier.
std::optional<FamilyVerdict> check_twisted_axiom3(const FamilySpec& spec,
                                                  const OpTable& star) {
  const int nx = spec.x_size, s = spec.index_size();
  const OpTable& f = *spec.f;
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < nx; ++y)
      for (int z = 0; z < nx; ++z)
        for (int g = 0; g < s; ++g)
          for (int h = 0; h < s; ++h)
            for (int q = 0; q < s; ++q) {
              int lhs = spec.ops[f.at(star.at(g, h), q)].at(
                  spec.ops[f.at(g, h)].at(x, y), z);
              int rhs = spec.ops[f.at(star.at(g, q), star.at(h, q))].at(
                  spec.ops[f.at(g, q)].at(x, z), spec.ops[f.at(h, q)].at(y, z));
              if (lhs != rhs)
                return fail(3, "", {x, y, z, g, h, q},
                            "(x *_f(g,h) y) *_f(g*h,q) z != "
                            "(x *_f(g,q) z) *_f(g*q,h*q) (y *_f(h,q) z)");
            }
  return std::nullopt;
}

}  // namespace

FamilyVerdict validate_qf_family(const FamilySpec& spec) {
  check_shape(spec, IndexKind::quandle_indexed, true, false);
  if (auto v = check_pointwise(spec)) return *v;
  if (auto v = check_twisted_axiom3(spec, *spec.index_quandle)) return *v;
  return FamilyVerdict{};
}

FamilyVerdict validate_gf_family(const FamilySpec& spec) {
  check_shape(spec, IndexKind::group_indexed, true, true);
  if (auto v = check_pointwise(spec)) return *v;
  if (auto v = check_group_axiom2(spec)) return *v;
  if (auto v = check_twisted_axiom3(spec, *spec.group_quandle)) return *v;
  return FamilyVerdict{};
}

FamilyVerdict validate_family(const FamilySpec& spec) {
  if (spec.index_kind == IndexKind::quandle_indexed)
    return spec.f ? validate_qf_family(spec) : validate_q_family(spec);
  return spec.f ? validate_gf_family(spec) : validate_g_family(spec);
}

bool cocycle_check(const FamilySpec& spec) {
  check_shape(spec, IndexKind::group_indexed, true, true);
  const int nx = spec.x_size, s = spec.index_size();
  const OpTable& f = *spec.f;
  const OpTable& star = *spec.group_quandle;
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < nx; ++y)
      for (int g = 0; g < s; ++g)
        for (int h = 0; h < s; ++h)
          for (int q = 0; q < s; ++q) {
            int lhs = spec.ops[f.at(star.at(g, h), q)].at(
                spec.ops[f.at(g, h)].at(x, y), y);
            int rhs = spec.ops[f.at(star.at(g, q), star.at(h, q))].at(
                spec.ops[f.at(g, q)].at(x, y), y);
            if (lhs != rhs) return false;
          }
  return true;
}

OpTable associated_quandle(const FamilySpec& spec) {
  FamilyVerdict verdict = validate_family(spec);
  if (!verdict)
    throw PreconditionError("family fails validation: " + verdict.detail);
  const int nx = spec.x_size, s = spec.index_size(), m = nx * s;

  // Index part of the product: g-families conjugate, everything else uses
  // the index quandle (trivially a o b for plain Q-families).
  auto index_part = [&](int a, int b) {
    if (spec.index_kind == IndexKind::quandle_indexed)
      return spec.index_quandle->at(a, b);
    if (spec.f) return spec.group_quandle->at(a, b);
    const FiniteGroup& g = *spec.group;
    return g.mul(g.mul(g.inverse(b), a), b);
  };
  auto op_index = [&](int a, int b) {
    return spec.f ? spec.f->at(a, b) : b;
  };

  std::vector<int> entries(static_cast<size_t>(m) * m);
  for (int x = 0; x < nx; ++x)
    for (int a = 0; a < s; ++a)
      for (int y = 0; y < nx; ++y)
        for (int b = 0; b < s; ++b) {
          int xp = spec.ops[op_index(a, b)].at(x, y);
          int ap = index_part(a, b);
          entries[(x * s + a) * m + (y * s + b)] = xp * s + ap;
        }
  return OpTable(m, std::move(entries));
}

GeneralProductReport general_product_check(const GeneralProductSpec& spec) {
  const int nx = spec.x_size, ns = spec.s_size;
  if (nx <= 0 || ns <= 0) throw ValidationError("carriers must be non-empty");
  if (static_cast<int>(spec.f.size()) != ns * ns)
    throw ValidationError("need s*s operation tables on X");
  if (static_cast<int>(spec.g.size()) != nx * nx)
    throw ValidationError("need x*x operation tables on S");
  for (const OpTable& t : spec.f)
    if (t.size() != nx) throw ValidationError("f table size mismatch");
  for (const OpTable& t : spec.g)
    if (t.size() != ns) throw ValidationError("g table size mismatch");

  GeneralProductReport r;

  r.idempotent_pair = true;
  for (int x = 0; x < nx && r.idempotent_pair; ++x)
    for (int s = 0; s < ns; ++s)
      if (spec.fmap(s, s).at(x, x) != x || spec.gmap(x, x).at(s, s) != s) {
        r.idempotent_pair = false;
        r.witness = {x, s};
        r.detail = "condition 1 fails at (x, s) = " + std::to_string(x) +
                   ", " + std::to_string(s);
        break;
      }

  r.bijective = true;
  for (int y = 0; y < nx && r.bijective; ++y)
    for (int t = 0; t < ns; ++t) {
      std::vector<char> seen(static_cast<size_t>(nx) * ns, 0);
      bool ok = true;
      for (int x = 0; x < nx && ok; ++x)
        for (int s = 0; s < ns && ok; ++s) {
          int img = spec.fmap(s, t).at(x, y) * ns + spec.gmap(x, y).at(s, t);
          ok = !seen[img];
          seen[img] = 1;
        }
      if (!ok) {
        r.bijective = false;
        if (r.witness.empty()) {
          r.witness = {y, t};
          r.detail = "condition 2 fails: translation by (y, t) = " +
                     std::to_string(y) + ", " + std::to_string(t) +
                     " is not a bijection";
        }
        break;
      }
    }

  r.distributive = true;
  for (int x = 0; x < nx && r.distributive; ++x)
    for (int y = 0; y < nx && r.distributive; ++y)
      for (int z = 0; z < nx && r.distributive; ++z)
        for (int s = 0; s < ns && r.distributive; ++s)
          for (int t = 0; t < ns && r.distributive; ++t)
            for (int u = 0; u < ns; ++u) {
              int fxy = spec.fmap(s, t).at(x, y);
              int gst = spec.gmap(x, y).at(s, t);
              int fxz = spec.fmap(s, u).at(x, z);
              int fyz = spec.fmap(t, u).at(y, z);
              int gsu = spec.gmap(x, z).at(s, u);
              int gtu = spec.gmap(y, z).at(t, u);
              bool first =
                  spec.fmap(gst, u).at(fxy, z) == spec.fmap(gsu, gtu).at(fxz, fyz);
              bool second =
                  spec.gmap(fxy, z).at(gst, u) == spec.gmap(fxz, fyz).at(gsu, gtu);
              if (!first || !second) {
                r.distributive = false;
                if (r.witness.empty()) {
                  r.witness = {x, y, z, s, t, u};
                  r.detail = std::string("condition 3 fails (") +
                             (first ? "second" : "first") +
                             " identity) at (x,y,z,s,t,u) = " +
                             tuple_str(r.witness);
                }
                break;
              }
            }

  r.conditions_verdict = r.idempotent_pair && r.bijective && r.distributive;

  const int m = nx * ns;
  std::vector<int> entries(static_cast<size_t>(m) * m);
  for (int x = 0; x < nx; ++x)
    for (int s = 0; s < ns; ++s)
      for (int y = 0; y < nx; ++y)
        for (int t = 0; t < ns; ++t)
          entries[(x * ns + s) * m + (y * ns + t)] =
              spec.fmap(s, t).at(x, y) * ns + spec.gmap(x, y).at(s, t);
  r.product = OpTable(m, std::move(entries));
  r.direct_report = axioms_report(r.product);
  r.direct_verdict = r.direct_report.classification == Classification::quandle;
  return r;
}

}  // namespace quandlekit
