#include "quandlekit/composition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "quandlekit/constructions.hpp"

namespace quandlekit {

OpWord::OpWord(const std::vector<Syllable>& syllables) {
  for (const Syllable& s : syllables) append(s.generator, s.exponent);
}

OpWord& OpWord::append(int generator, int exponent) {
  if (generator < 0) throw ValidationError("negative generator id");
  if (exponent == 0) return *this;
  if (!syllables_.empty() && syllables_.back().generator == generator) {
    syllables_.back().exponent += exponent;
    if (syllables_.back().exponent == 0) syllables_.pop_back();
  } else {
    syllables_.push_back({generator, exponent});
  }
  return *this;
}

OpWord OpWord::inverse() const {
  OpWord out;
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
    out.append(it->generator, -it->exponent);
  return out;
}

std::string OpWord::str(const std::vector<std::string>& names) const {
  if (syllables_.empty()) return "e";
  std::string out;
  for (const Syllable& s : syllables_) {
    if (!out.empty()) out += ' ';
    if (s.generator >= static_cast<int>(names.size()))
      throw ValidationError("word references generator " +
                            std::to_string(s.generator) +
                            " but only " + std::to_string(names.size()) +
                            " names given");
    out += names[s.generator];
    if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
  }
  return out;
}

OpWord OpWord::parse(const std::string& text,
                     const std::vector<std::string>& names) {
  OpWord out;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    if (token == "e") continue;
    std::string name = token;
    int exponent = 1;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      name = token.substr(0, caret);
      std::string tail = token.substr(caret + 1);
      size_t used = 0;
      try {
        exponent = std::stoi(tail, &used);
      } catch (const std::exception&) {
        throw ValidationError("bad exponent in word token: " + token);
      }
      if (used != tail.size())
        throw ValidationError("bad exponent in word token: " + token);
    }
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end())
      throw ValidationError("unknown generator name in word: " + name);
    out.append(static_cast<int>(it - names.begin()), exponent);
  }
  return out;
}

OpTable compose(const OpTable& t1, const OpTable& t2) {
  if (t1.size() != t2.size())
    throw PreconditionError("composing tables of different sizes");
  const int n = t1.size();
  std::vector<int> entries(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) entries[a * n + b] = t2.at(t1.at(a, b), b);
  return OpTable(n, std::move(entries));
}

OpTable power(const OpTable& t, int k) {
  const OpTable base = k < 0 ? right_inverse(t) : t;
  OpTable acc = trivial_quandle(t.size());
  for (int i = std::abs(k); i > 0; --i) acc = compose(acc, base);
  return acc;
}

std::optional<std::array<int, 3>> distributivity_counterexample(
    const OpTable& t2, const OpTable& t1) {
  if (t1.size() != t2.size())
    throw PreconditionError("tables of different sizes");
  const int n = t1.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t2.at(t1.at(a, b), c) !=
            t1.at(t2.at(a, c), t2.at(b, c)))
          return std::array<int, 3>{a, b, c};
  return std::nullopt;
}

bool distributes_over(const OpTable& t2, const OpTable& t1) {
  return !distributivity_counterexample(t2, t1).has_value();
}

OpTable word_operation(const std::vector<OpTable>& generators,
                       const OpWord& w) {
  if (generators.empty())
    throw PreconditionError("word operation needs at least one generator");
  const int n = generators.front().size();
  for (const OpTable& g : generators)
    if (g.size() != n)
      throw PreconditionError("generators must share one carrier size");
  OpTable acc = trivial_quandle(n);
  for (const Syllable& s : w.syllables()) {
    if (s.generator >= static_cast<int>(generators.size()))
      throw ValidationError("word references generator " +
                            std::to_string(s.generator) +
                            " but only " + std::to_string(generators.size()) +
                            " given");
    acc = compose(acc, power(generators[s.generator], s.exponent));
  }
  return acc;
}

QuandleGroup::QuandleGroup(std::vector<OpTable> generators,
                           std::vector<OpTable> elements,
                           std::vector<OpWord> words, std::vector<int> product)
    : generators_(std::move(generators)),
      elements_(std::move(elements)),
      words_(std::move(words)),
      product_(std::move(product)) {}

int QuandleGroup::inverse(int i) const {
  for (int j = 0; j < order(); ++j)
    if (product(i, j) == 0) return j;
  throw Error("internal: closure element without inverse");
}

int QuandleGroup::index_of(const OpTable& t) const {
  for (int i = 0; i < order(); ++i)
    if (elements_[i] == t) return i;
  return -1;
}

FiniteGroup QuandleGroup::to_group() const {
  return FiniteGroup::from_entries(order(), product_);
}

QuandleGroup closure_group(const std::vector<OpTable>& generators) {
  if (generators.empty())
    throw PreconditionError("closure needs at least one generator");
  const int n = generators.front().size();
  for (size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].size() != n)
      throw PreconditionError("generators must share one carrier size");
    if (!is_quandle(generators[i]))
      throw PreconditionError("generator " + std::to_string(i) +
                              " is not a quandle");
  }
  for (size_t i = 0; i < generators.size(); ++i)
    for (size_t j = i + 1; j < generators.size(); ++j)
      if (!distributes_over(generators[j], generators[i]) ||
          !distributes_over(generators[i], generators[j]))
        throw PreconditionError(
            "generators " + std::to_string(i) + " and " + std::to_string(j) +
            " are not mutually distributive");

  // Letters: each generator and its right inverse.
  std::vector<OpTable> letters;
  std::vector<std::pair<int, int>> letter_words;  // (generator, exponent)
  for (size_t i = 0; i < generators.size(); ++i) {
    letters.push_back(generators[i]);
    letter_words.push_back({static_cast<int>(i), 1});
    letters.push_back(right_inverse(generators[i]));
    letter_words.push_back({static_cast<int>(i), -1});
  }

  std::vector<OpTable> elements{trivial_quandle(n)};
  std::vector<OpWord> words{OpWord()};
  std::map<std::vector<int>, int> index;
  index[elements[0].entries()] = 0;
  for (size_t i = 0; i < elements.size(); ++i)
    for (size_t l = 0; l < letters.size(); ++l) {
      OpTable next = compose(elements[i], letters[l]);
      if (index.emplace(next.entries(), elements.size()).second) {
        OpWord w = words[i];
        w.append(letter_words[l].first, letter_words[l].second);
        elements.push_back(std::move(next));
        words.push_back(std::move(w));
      }
    }

  const int m = static_cast<int>(elements.size());
  std::vector<int> product(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto it = index.find(compose(elements[i], elements[j]).entries());
      if (it == index.end())
        throw Error("internal: closure not closed under composition");
      product[i * m + j] = it->second;
    }
  return QuandleGroup(generators, std::move(elements), std::move(words),
                      std::move(product));
}

bool closure_is_abelian(const QuandleGroup& g) {
  for (int i = 0; i < g.order(); ++i)
    for (int j = 0; j < i; ++j)
      if (g.product(i, j) != g.product(j, i)) return false;
  return true;
}

std::optional<std::string> closure_iso_type(const QuandleGroup& g) {
  if (!closure_is_abelian(g)) return std::nullopt;
  return abelian_type_name(g.to_group());
}

std::optional<int> n_quandle_order(const OpTable& t) {
  if (!is_quandle(t)) throw PreconditionError("not a quandle");
  long bound = 1;
  for (int b = 0; b < t.size(); ++b)
    bound = std::lcm(bound, inner_map(t, b).order());
  const OpTable id = trivial_quandle(t.size());
  OpTable acc = id;
  for (long k = 1; k <= bound; ++k) {
    acc = compose(acc, t);
    if (acc == id) return static_cast<int>(k);
  }
  return std::nullopt;
}

}  // namespace quandlekit
