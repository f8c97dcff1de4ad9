#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "quandlekit/group.hpp"
#include "quandlekit/op_table.hpp"

namespace quandlekit {

struct Syllable {
  int generator = 0;
  int exponent = 0;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// A freely reduced word over numbered generators: adjacent syllables have
// distinct generators and no syllable has exponent zero. The empty word is
// the identity.
class OpWord {
 public:
  OpWord() = default;
  explicit OpWord(const std::vector<Syllable>& syllables);

  OpWord& append(int generator, int exponent);
  OpWord inverse() const;

  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }

  // "e" for the empty word, else e.g. "a^2 b^-1 a" with the given names.
  std::string str(const std::vector<std::string>& names) const;
  static OpWord parse(const std::string& text,
                      const std::vector<std::string>& names);

  friend bool operator==(const OpWord&, const OpWord&) = default;

 private:
  std::vector<Syllable> syllables_;
};

// entry(a,b) = t2(t1(a,b), b); the column maps compose left to right. The
// result carries no axiom guarantee.
OpTable compose(const OpTable& t1, const OpTable& t2);

// k-fold composition of t with itself; power(t, 0) is the trivial quandle
// and negative k uses the right inverse operation.
OpTable power(const OpTable& t, int k);

// (a t1 b) t2 c == (a t2 c) t1 (b t2 c) for all a, b, c.
bool distributes_over(const OpTable& t2, const OpTable& t1);

// First (a, b, c) violating the identity above, if any.
std::optional<std::array<int, 3>> distributivity_counterexample(
    const OpTable& t2, const OpTable& t1);

// Fold of generator powers per w, starting from the trivial quandle.
OpTable word_operation(const std::vector<OpTable>& generators,
                       const OpWord& w);

// The group generated by quandle tables under composition. Element identity
// is exact table equality; index 0 is the trivial quandle.
class QuandleGroup {
 public:
  QuandleGroup(std::vector<OpTable> generators, std::vector<OpTable> elements,
               std::vector<OpWord> words, std::vector<int> product);

  int order() const { return static_cast<int>(elements_.size()); }
  const std::vector<OpTable>& generators() const { return generators_; }
  const std::vector<OpTable>& elements() const { return elements_; }
  const OpTable& element(int i) const { return elements_[i]; }
  const OpWord& word(int i) const { return words_[i]; }

  int identity_index() const { return 0; }
  int product(int i, int j) const { return product_[i * order() + j]; }
  int inverse(int i) const;
  int index_of(const OpTable& t) const;  // -1 when absent

  FiniteGroup to_group() const;

 private:
  std::vector<OpTable> generators_;
  std::vector<OpTable> elements_;
  std::vector<OpWord> words_;
  std::vector<int> product_;
};

// Breadth-first closure of {trivial} and the generators under composition.
// Generators must be quandles of one size and pairwise mutually distributive
// (the hypothesis that keeps every word operation a quandle).
QuandleGroup closure_group(const std::vector<OpTable>& generators);

bool closure_is_abelian(const QuandleGroup& g);

// Isomorphism type as a product of cyclic factors, when the closure is
// abelian; absent otherwise (callers still have order and the abelian flag).
std::optional<std::string> closure_iso_type(const QuandleGroup& g);

// Least k >= 1 with power(t, k) trivial, searched up to the lcm of the
// column permutation orders; absent when no power is trivial.
std::optional<int> n_quandle_order(const OpTable& t);

}  // namespace quandlekit
