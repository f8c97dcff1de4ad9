#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quandlekit/error.hpp"

namespace quandlekit {

// A permutation of {0, ..., n-1}, stored as its image vector.
class Permutation {
 public:
  Permutation() = default;  // empty permutation on zero points

  // Throws ValidationError unless `images` is a bijection of {0,...,n-1}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;

  // Left-to-right composition: (*this).then(next) maps x to next(this(x)).
  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  Permutation pow(long k) const;  // k may be negative

  long order() const;
  std::vector<int> cycle_type() const;  // cycle lengths, descending

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation&,
                                          const Permutation&) = default;

 private:
  std::vector<int> images_;
};

enum class Classification {
  quandle,
  rack,
  idempotent_right_quasigroup,
  right_quasigroup,
  idempotent_groupoid,
  groupoid,
};

const char* to_string(Classification c);

struct AxiomReport {
  bool idempotent = false;        // x*x == x for all x
  bool right_quasigroup = false;  // every column y -> y*b is a bijection
  bool self_distributive = false; // (x*y)*z == (x*z)*(y*z) for all x,y,z
  Classification classification = Classification::groupoid;
};

// Cayley table of a binary operation on {0, ..., n-1}. Entry (a, b), with a
// the row and b the column, holds a*b. Immutable once constructed.
class OpTable {
 public:
  OpTable() = default;  // empty table, size() == 0

  // Row-major entries; throws ValidationError if the shape is not n*n or an
  // entry falls outside {0,...,n-1}.
  OpTable(int n, std::vector<int> entries);

  static OpTable from_rows(const std::vector<std::vector<int>>& rows);

  int size() const { return n_; }
  int at(int a, int b) const { return entries_[a * n_ + b]; }
  const std::vector<int>& entries() const { return entries_; }

  // Images of the column map y -> y*b (not necessarily a bijection).
  std::vector<int> column_images(int b) const;

  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const OpTable&, const OpTable&) = default;
  friend std::strong_ordering operator<=>(const OpTable&,
                                          const OpTable&) = default;

 private:
  int n_ = 0;
  std::vector<int> entries_;
};

AxiomReport axioms_report(const OpTable& t);

bool is_quandle(const OpTable& t);
bool is_rack(const OpTable& t);

// Table of the right inverse operation: a /* b is the unique c with c*b == a.
// Requires a right quasigroup.
OpTable right_inverse(const OpTable& t);

// The column permutation S_x : y -> y*x. Requires column x to be a bijection.
Permutation inner_map(const OpTable& t, int x);

struct InnerGroup {
  std::vector<Permutation> generators;  // S_0, ..., S_{n-1}, duplicates kept
  std::vector<Permutation> elements;    // closure under composition, sorted
};

// Group generated by all column permutations. Requires a right quasigroup.
InnerGroup inner_group(const OpTable& t);

// True when (a*b)*b == a for all a, b.
bool is_involutory(const OpTable& t);

struct SignedIndex {
  int index = 0;
  int sign = 1;  // +1 for *, -1 for the right inverse
};

// Evaluates the left-normed expression
//   ((base s1 a1) s2 a2) ... sk ak
// where si is * or /* according to factors[i].sign. Requires a right
// quasigroup when any sign is negative; indices must lie in range.
int evaluate_left_normed(const OpTable& t, int base,
                         const std::vector<SignedIndex>& factors);

// Smallest subset containing `seed` that is closed under * and /*.
// Requires a rack; the result is sorted.
std::vector<int> subquandle_closure(const OpTable& t,
                                    const std::vector<int>& seed);

// Minimum size of a generating subset (under subquandle_closure). Requires a
// quandle.
int rank(const OpTable& t);

// A relabeling f with f(a*b) == f(a)*f(b), if one exists.
std::optional<Permutation> is_isomorphic(const OpTable& a, const OpTable& b);

}  // namespace quandlekit
