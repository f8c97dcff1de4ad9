#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quandlekit/error.hpp"
#include "quandlekit/op_table.hpp"

namespace quandlekit {

// A finite group given by its Cayley table on {0, ..., n-1}. Construction
// checks closure, associativity, identity and inverses, so every instance is
// a genuine group.
class FiniteGroup {
 public:
  FiniteGroup() = default;  // trivial placeholder of order 0

  static FiniteGroup from_table(const std::vector<std::vector<int>>& rows);
  static FiniteGroup from_entries(int n, std::vector<int> entries);

  int order() const { return n_; }
  int mul(int a, int b) const { return table_[a * n_ + b]; }
  int identity() const { return identity_; }
  int inverse(int a) const { return inverses_[a]; }
  int pow(int a, long k) const;
  int element_order(int a) const;

  const std::vector<int>& entries() const { return table_; }
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;

 private:
  int n_ = 0;
  std::vector<int> table_;
  int identity_ = -1;
  std::vector<int> inverses_;
};

FiniteGroup group_from_table(const std::vector<std::vector<int>>& rows);

FiniteGroup cyclic(int n);
FiniteGroup dihedral_group(int n);  // symmetries of the n-gon, order 2n
FiniteGroup quaternion8();
FiniteGroup symmetric(int n);  // n <= 4
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// A bijection of the carrier with f(ab) == f(a)f(b). Validated on
// construction against the given group.
class GroupAutomorphism {
 public:
  GroupAutomorphism(const FiniteGroup& g, Permutation map);

  int operator()(int x) const { return map_(x); }
  const Permutation& perm() const { return map_; }
  GroupAutomorphism inverse(const FiniteGroup& g) const;

  friend bool operator==(const GroupAutomorphism&,
                         const GroupAutomorphism&) = default;

 private:
  Permutation map_;
};

// All automorphisms, sorted by their image vectors.
std::vector<GroupAutomorphism> automorphisms(const FiniteGroup& g);

// Cayley table of the automorphism group under left-to-right composition:
// the product of indices i, j is the map "apply element i, then element j".
// Index order matches automorphisms(g). Out parameter gives the elements.
FiniteGroup automorphism_group(const FiniteGroup& g,
                               std::vector<GroupAutomorphism>* elements = nullptr);

std::vector<int> center(const FiniteGroup& g);
std::vector<int> commutator_subgroup(const FiniteGroup& g);
bool is_abelian(const FiniteGroup& g);

// Quotient by a normal subgroup, elements relabeled by smallest coset
// representative.
FiniteGroup quotient(const FiniteGroup& g, const std::vector<int>& normal);

FiniteGroup abelianization(const FiniteGroup& g);

// True when g is nilpotent of class at most two with every square central:
// [G,G] subset of Z(G) and x^2 in Z(G) for all x.
bool central_squares_two_step(const FiniteGroup& g);

bool group_isomorphic(const FiniteGroup& a, const FiniteGroup& b);
std::optional<Permutation> find_group_isomorphism(const FiniteGroup& a,
                                                  const FiniteGroup& b);

// Invariant factors d1 | d2 | ... | dk with product |g|, for abelian g.
std::vector<int> abelian_invariants(const FiniteGroup& g);

// "Z1", "Z6", "Z2xZ4", ... from the invariant factor decomposition.
std::string abelian_type_name(const FiniteGroup& g);

}  // namespace quandlekit
