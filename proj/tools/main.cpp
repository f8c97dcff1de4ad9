// quandlekit command line: construct, check, compose and enumerate finite
// racks and quandles stored as Cayley-table documents.
//
// Exit codes: 0 success or true verdict, 1 false verdict, 2 malformed input
// or usage error, 3 precondition or capacity violation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <quandlekit/composition.hpp>
#include <quandlekit/constructions.hpp>
#include <quandlekit/enumerate.hpp>
#include <quandlekit/families.hpp>
#include <quandlekit/group.hpp>
#include <quandlekit/op_table.hpp>
#include <quandlekit/table_io.hpp>

using namespace quandlekit;
using nlohmann::json;

namespace {

struct Output {
  bool structured = false;
  bool one_indexed = false;
};

const char* yn(bool b) { return b ? "yes" : "no"; }

int parse_int(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw ValidationError(what + " must be an integer, got: " + s);
  }
  if (pos != s.size())
    throw ValidationError(what + " must be an integer, got: " + s);
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t end = s.find(sep, start);
    parts.push_back(s.substr(start, end - start));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return parts;
}

// --- table printing -------------------------------------------------------

void print_doc(std::ostream& os, TableDocument doc, const Output& out) {
  if (out.one_indexed)
    for (auto& row : doc.rows)
      for (int& v : row) ++v;
  if (out.structured) {
    json j;
    j["kind"] = doc.kind;
    j["n"] = doc.n;
    if (!doc.name.empty()) j["name"] = doc.name;
    if (!doc.note.empty()) j["note"] = doc.note;
    if (out.one_indexed) j["indexing"] = "one-based";
    j["rows"] = doc.rows;
    os << j.dump(2) << "\n";
    return;
  }
  if (!out.one_indexed) {
    write_table_document(os, doc, false);
    return;
  }
  os << "# entries are 1-indexed; entry (row a, column b) is a*b\n";
  os << "kind: " << doc.kind << "\n";
  if (!doc.name.empty()) os << "name: " << doc.name << "\n";
  if (!doc.note.empty()) os << "note: " << doc.note << "\n";
  os << "n: " << doc.n << "\n";
  os << "rows:\n";
  for (const auto& row : doc.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      os << (i ? " " : "") << row[i];
    os << "\n";
  }
}

void emit_doc(const TableDocument& doc, const std::string& path,
              const Output& out) {
  if (path.empty()) {
    print_doc(std::cout, doc, out);
    return;
  }
  std::ofstream f(path);
  if (!f) throw ValidationError("cannot open output file: " + path);
  print_doc(f, doc, out);
}

std::string doc_label(const TableDocument& doc, const std::string& fallback) {
  return doc.name.empty() ? fallback : doc.name;
}

std::vector<std::string> letter_names(std::size_t count) {
  if (count > 26)
    throw ValidationError("at most 26 generator tables are supported");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i)
    names.push_back(std::string(1, static_cast<char>('a' + i)));
  return names;
}

// --- build specs ----------------------------------------------------------

FiniteGroup parse_group_token(const std::string& tok) {
  if (tok == "Q8") return quaternion8();
  if (tok.size() >= 2 && (tok[0] == 'Z' || tok[0] == 'D' || tok[0] == 'S')) {
    int n = parse_int(tok.substr(1), "group size in " + tok);
    if (tok[0] == 'Z') return cyclic(n);
    if (tok[0] == 'D') return dihedral_group(n);
    return symmetric(n);
  }
  throw ValidationError("unknown group: " + tok +
                        " (expected Z<n>, D<n>, S<n>, or Q8)");
}

FiniteGroup parse_group(const std::string& spec) {
  std::vector<std::string> parts = split(spec, 'x');
  FiniteGroup g = parse_group_token(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i)
    g = direct_product(g, parse_group_token(parts[i]));
  return g;
}

// The power map x -> x^k, validated as an automorphism of g.
GroupAutomorphism power_automorphism(const FiniteGroup& g, int k) {
  std::vector<int> images(g.order());
  for (int i = 0; i < g.order(); ++i) images[i] = g.pow(i, k);
  return GroupAutomorphism(g, Permutation(std::move(images)));
}

const char* const kBuildGrammar =
    "a catalog name (T3, R3, J3, Q0..Q6, Z5-Alex2), trivial:<n>, "
    "dihedral:<n>, conj:<group>[:<k>], core:<group>, alex:<group>:<k>, "
    "holomorph:<group>, or a bare group such as Z6, D4, S3, Q8, Z2xZ2";

TableDocument build_from_spec(const std::string& spec) {
  for (const CatalogEntry& e : catalog())
    if (e.name == spec) return from_op_table(e.table, e.name);

  std::vector<std::string> parts = split(spec, ':');
  const std::string& head = parts[0];
  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (parts.size() < lo || parts.size() > hi)
      throw ValidationError("malformed " + head + " spec: " + spec);
  };
  if (head == "trivial") {
    arity(2, 2);
    return from_op_table(trivial_quandle(parse_int(parts[1], "order")), spec);
  }
  if (head == "dihedral") {
    arity(2, 2);
    return from_op_table(dihedral_quandle(parse_int(parts[1], "order")), spec);
  }
  if (head == "conj") {
    arity(2, 3);
    int k = parts.size() == 3 ? parse_int(parts[2], "conjugation power") : 1;
    return from_op_table(conj_quandle(parse_group(parts[1]), k), spec);
  }
  if (head == "core") {
    arity(2, 2);
    return from_op_table(core_quandle(parse_group(parts[1])), spec);
  }
  if (head == "alex") {
    arity(3, 3);
    FiniteGroup g = parse_group(parts[1]);
    int k = parse_int(parts[2], "automorphism power");
    return from_op_table(alexander_quandle(g, power_automorphism(g, k)), spec);
  }
  if (head == "holomorph") {
    arity(2, 2);
    return from_op_table(holomorph_quandle(parse_group(parts[1])), spec);
  }
  if (parts.size() == 1) {
    try {
      return from_group(parse_group(spec), spec);
    } catch (const ValidationError&) {
      // fall through to the combined message
    }
  }
  throw ValidationError("unknown build spec: " + spec + "; expected " +
                        kBuildGrammar);
}

// --- subcommands ----------------------------------------------------------

int run_build(const std::string& spec, const std::string& out_path,
              const Output& out) {
  emit_doc(build_from_spec(spec), out_path, out);
  return 0;
}

int run_check(const std::string& path, const Output& out) {
  TableDocument doc = read_table_file(path);
  OpTable t = to_op_table(doc);
  AxiomReport rep = axioms_report(t);
  bool quandle = rep.classification == Classification::quandle;
  if (out.structured) {
    json j;
    if (!doc.name.empty()) j["name"] = doc.name;
    j["n"] = t.size();
    j["classification"] = to_string(rep.classification);
    j["idempotent"] = rep.idempotent;
    j["right_quasigroup"] = rep.right_quasigroup;
    j["self_distributive"] = rep.self_distributive;
    j["quandle"] = quandle;
    std::cout << j.dump(2) << "\n";
  } else {
    if (!doc.name.empty()) std::cout << "name: " << doc.name << "\n";
    std::cout << "classification: " << to_string(rep.classification) << "\n";
    std::cout << "idempotent: " << yn(rep.idempotent) << "\n";
    std::cout << "right quasigroup: " << yn(rep.right_quasigroup) << "\n";
    std::cout << "self distributive: " << yn(rep.self_distributive) << "\n";
  }
  return quandle ? 0 : 1;
}

int run_compose(const std::string& path1, const std::string& path2,
                const std::string& out_path, const Output& out) {
  TableDocument d1 = read_table_file(path1);
  TableDocument d2 = read_table_file(path2);
  OpTable c = compose(to_op_table(d1), to_op_table(d2));
  TableDocument doc =
      from_op_table(c, doc_label(d1, "t1") + doc_label(d2, "t2"),
                    std::string("classification: ") +
                        to_string(axioms_report(c).classification));
  emit_doc(doc, out_path, out);
  return 0;
}

int run_power(const std::string& path, int k, const std::string& out_path,
              const Output& out) {
  TableDocument d = read_table_file(path);
  OpTable p = power(to_op_table(d), k);
  TableDocument doc =
      from_op_table(p, doc_label(d, "t") + "^" + std::to_string(k),
                    std::string("classification: ") +
                        to_string(axioms_report(p).classification));
  emit_doc(doc, out_path, out);
  return 0;
}

int run_distrib(const std::string& path1, const std::string& path2,
                const Output& out) {
  TableDocument d1 = read_table_file(path1);
  TableDocument d2 = read_table_file(path2);
  OpTable t1 = to_op_table(d1);
  OpTable t2 = to_op_table(d2);
  std::string n1 = doc_label(d1, "t1");
  std::string n2 = doc_label(d2, "t2");
  auto c21 = distributivity_counterexample(t2, t1);  // t2 over t1
  auto c12 = distributivity_counterexample(t1, t2);  // t1 over t2
  bool mutual = !c21 && !c12;
  auto cx_json = [](const std::optional<std::array<int, 3>>& c) {
    return c ? json(std::vector<int>(c->begin(), c->end())) : json(nullptr);
  };
  if (out.structured) {
    json j;
    j["first"] = n1;
    j["second"] = n2;
    j["second_over_first"] = !c21;
    j["second_over_first_counterexample"] = cx_json(c21);
    j["first_over_second"] = !c12;
    j["first_over_second_counterexample"] = cx_json(c12);
    j["mutual"] = mutual;
    std::cout << j.dump(2) << "\n";
  } else {
    auto report = [&](const std::string& outer, const std::string& inner,
                      const std::optional<std::array<int, 3>>& c) {
      std::cout << outer << " distributes over " << inner << ": " << yn(!c);
      if (c)
        std::cout << "  (counterexample a=" << (*c)[0] << " b=" << (*c)[1]
                  << " c=" << (*c)[2] << ")";
      std::cout << "\n";
    };
    report(n2, n1, c21);
    report(n1, n2, c12);
    std::cout << "mutually distributive: " << yn(mutual) << "\n";
  }
  return mutual ? 0 : 1;
}

int run_word(const std::vector<std::string>& args, const std::string& out_path,
             const Output& out) {
  if (args.size() < 2)
    throw ValidationError(
        "word needs one or more generator files followed by a word string");
  std::vector<std::string> files(args.begin(), args.end() - 1);
  const std::string& text = args.back();
  std::vector<std::string> names = letter_names(files.size());
  std::vector<OpTable> tables;
  tables.reserve(files.size());
  for (const std::string& f : files) tables.push_back(to_op_table(read_table_file(f)));
  OpWord w = OpWord::parse(text, names);
  OpTable t = word_operation(tables, w);
  TableDocument doc =
      from_op_table(t, w.str(names),
                    std::string("classification: ") +
                        to_string(axioms_report(t).classification));
  emit_doc(doc, out_path, out);
  return 0;
}

int run_closure(const std::vector<std::string>& files, const Output& out) {
  std::vector<std::string> names = letter_names(files.size());
  std::vector<OpTable> tables;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < files.size(); ++i) {
    TableDocument d = read_table_file(files[i]);
    tables.push_back(to_op_table(d));
    labels.push_back(doc_label(d, names[i]));
  }
  QuandleGroup g = closure_group(tables);
  bool abelian = closure_is_abelian(g);
  std::optional<std::string> type = closure_iso_type(g);
  if (out.structured) {
    json j;
    json gens = json::array();
    for (std::size_t i = 0; i < files.size(); ++i)
      gens.push_back({{"letter", names[i]}, {"table", labels[i]}});
    j["generators"] = gens;
    j["order"] = g.order();
    j["abelian"] = abelian;
    j["type"] = type ? json(*type) : json(nullptr);
    json words = json::array();
    for (int i = 0; i < g.order(); ++i) words.push_back(g.word(i).str(names));
    j["elements"] = words;
    std::cout << j.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < files.size(); ++i)
      std::cout << "generator " << names[i] << ": " << labels[i] << "\n";
    std::cout << "order: " << g.order() << "\n";
    std::cout << "abelian: " << yn(abelian) << "\n";
    std::cout << "type: " << (type ? *type : std::string("not determined"))
              << "\n";
    std::cout << "elements:\n";
    for (int i = 0; i < g.order(); ++i)
      std::cout << "  " << i << ": " << g.word(i).str(names) << "\n";
  }
  return 0;
}

int run_family_validate(const std::string& path, const Output& out) {
  FamilyVerdict v = validate_family(read_family_file(path));
  if (out.structured) {
    json j;
    j["valid"] = v.valid;
    if (!v.valid) {
      j["axiom"] = v.axiom;
      if (!v.clause.empty()) j["clause"] = v.clause;
      j["witness"] = v.witness;
      j["detail"] = v.detail;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "valid: " << yn(v.valid) << "\n";
    if (!v.valid) std::cout << "detail: " << v.detail << "\n";
  }
  return v.valid ? 0 : 1;
}

int run_family_assoc(const std::string& path, const std::string& out_path,
                     const Output& out) {
  FamilySpec spec = read_family_file(path);
  OpTable q = associated_quandle(spec);
  TableDocument doc = from_op_table(
      q, "associated",
      "on X x S flattened as x*|S| + s; |S| = " +
          std::to_string(spec.index_size()));
  emit_doc(doc, out_path, out);
  return 0;
}

int enumeration_cap() {
  const char* env = std::getenv("QF_MAX_N");
  if (env == nullptr || *env == '\0') return default_enumeration_cap;
  return parse_int(env, "QF_MAX_N");
}

int run_enumerate(int n, bool labeled, const Output& out) {
  std::vector<OpTable> tables = enumerate_quandles(n, !labeled, enumeration_cap());
  int shift = out.one_indexed ? 1 : 0;
  if (out.structured) {
    json j;
    j["n"] = n;
    j["up_to_iso"] = !labeled;
    j["count"] = tables.size();
    json list = json::array();
    for (const OpTable& t : tables) {
      auto rows = t.rows();
      for (auto& row : rows)
        for (int& v : row) v += shift;
      list.push_back(rows);
    }
    j["tables"] = list;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "count: " << tables.size() << "\n";
    for (std::size_t i = 0; i < tables.size(); ++i) {
      std::cout << i << ": ";
      const OpTable& t = tables[i];
      for (int a = 0; a < t.size(); ++a) {
        if (a) std::cout << " / ";
        for (int b = 0; b < t.size(); ++b)
          std::cout << (b ? " " : "") << t.at(a, b) + shift;
      }
      std::cout << "\n";
    }
  }
  return 0;
}

const char* classification_code(Classification c) {
  switch (c) {
    case Classification::quandle: return "Q";
    case Classification::rack: return "R";
    case Classification::idempotent_right_quasigroup: return "IRQ";
    case Classification::right_quasigroup: return "RQ";
    case Classification::idempotent_groupoid: return "IG";
    case Classification::groupoid: return "G";
  }
  return "G";
}

int run_survey(const std::vector<std::string>& files, const Output& out) {
  std::vector<CatalogEntry> entries;
  for (std::size_t i = 0; i < files.size(); ++i) {
    TableDocument d = read_table_file(files[i]);
    entries.push_back(
        CatalogEntry{doc_label(d, "t" + std::to_string(i)), to_op_table(d)});
  }
  SurveyReport r = composition_survey(entries);
  const std::size_t m = entries.size();
  if (out.structured) {
    json j;
    json names = json::array();
    for (const auto& e : r.generators) names.push_back(e.name);
    j["names"] = names;
    json grid = json::array();
    for (std::size_t i = 0; i < m; ++i) {
      json row = json::array();
      for (std::size_t k = 0; k < m; ++k) {
        const SurveyCell& cell = r.grid[i][k];
        row.push_back(
            {{"classification", to_string(cell.report.classification)},
             {"distributes", cell.distributes}});
      }
      grid.push_back(row);
    }
    j["grid"] = grid;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "# cell (i, j): composite applying row table i then column "
               "table j\n";
  std::cout << "# codes: Q quandle, R rack, IRQ idempotent right quasigroup, "
               "RQ right quasigroup, IG idempotent groupoid, G groupoid\n";
  std::cout << "# +/-: column table does/does not distribute over row table\n";
  std::size_t width = 5;
  for (const auto& e : r.generators) width = std::max(width, e.name.size() + 2);
  auto pad = [&](const std::string& s) {
    std::cout << s << std::string(width > s.size() ? width - s.size() : 1, ' ');
  };
  pad("");
  for (const auto& e : r.generators) pad(e.name);
  std::cout << "\n";
  for (std::size_t i = 0; i < m; ++i) {
    pad(r.generators[i].name);
    for (std::size_t k = 0; k < m; ++k) {
      const SurveyCell& cell = r.grid[i][k];
      pad(std::string(classification_code(cell.report.classification)) +
          (cell.distributes ? "+" : "-"));
    }
    std::cout << "\n";
  }
  return 0;
}

int run_iso(const std::string& path1, const std::string& path2,
            const Output& out) {
  OpTable t1 = to_op_table(read_table_file(path1));
  OpTable t2 = to_op_table(read_table_file(path2));
  std::optional<Permutation> map = is_isomorphic(t1, t2);
  int shift = out.one_indexed ? 1 : 0;
  if (out.structured) {
    json j;
    j["isomorphic"] = map.has_value();
    if (map) {
      std::vector<int> images = map->images();
      for (int& v : images) v += shift;
      j["map"] = images;
    } else {
      j["map"] = nullptr;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "isomorphic: " << yn(map.has_value()) << "\n";
    if (map) {
      std::cout << "map:";
      for (int i = 0; i < map->size(); ++i)
        std::cout << " " << i + shift << "->" << (*map)(i) + shift;
      std::cout << "\n";
    }
  }
  return map ? 0 : 1;
}

int run_rank(const std::string& path, const Output& out) {
  int r = rank(to_op_table(read_table_file(path)));
  if (out.structured)
    std::cout << json{{"rank", r}}.dump(2) << "\n";
  else
    std::cout << "rank: " << r << "\n";
  return 0;
}

// --- reproduce ------------------------------------------------------------

class Repro {
 public:
  Repro(std::string id, const Output& out) : out_(out) {
    if (out_.structured) {
      j_["id"] = std::move(id);
      j_["tables"] = json::array();
      j_["checks"] = json::array();
    }
  }

  void table(const OpTable& t, const std::string& name,
             const std::string& note = "") {
    if (out_.structured) {
      auto rows = t.rows();
      if (out_.one_indexed)
        for (auto& row : rows)
          for (int& v : row) ++v;
      json entry{{"name", name}, {"rows", rows}};
      if (!note.empty()) entry["note"] = note;
      j_["tables"].push_back(entry);
    } else {
      print_doc(std::cout, from_op_table(t, name, note), out_);
      std::cout << "\n";
    }
  }

  void check(bool cond, const std::string& what) {
    ok_ = ok_ && cond;
    if (out_.structured)
      j_["checks"].push_back({{"what", what}, {"ok", cond}});
    else
      std::cout << (cond ? "ok: " : "FAILED: ") << what << "\n";
  }

  int finish() {
    if (out_.structured) {
      j_["ok"] = ok_;
      std::cout << j_.dump(2) << "\n";
    }
    return ok_ ? 0 : 1;
  }

 private:
  Output out_;
  json j_;
  bool ok_ = true;
};

void repro_order3(Repro& r) {
  for (const char* name : {"T3", "R3", "J3"}) {
    const OpTable& t = catalog(name).table;
    r.table(t, name);
    r.check(is_quandle(t), std::string(name) + " is a quandle");
  }
  r.check(catalog("T3").table == trivial_quandle(3),
          "T3 matches the trivial construction");
  r.check(catalog("R3").table == dihedral_quandle(3),
          "R3 matches the dihedral construction");
}

void repro_r3j3(Repro& r) {
  OpTable r3 = catalog("R3").table;
  OpTable j3 = catalog("J3").table;
  OpTable rj = compose(r3, j3);
  r.table(rj, "R3J3");
  r.check(rj == compose(j3, r3), "R3J3 equals J3R3");
  AxiomReport rep = axioms_report(rj);
  r.check(rep.classification == Classification::idempotent_right_quasigroup,
          std::string("classification: ") + to_string(rep.classification));
  r.check(!rep.self_distributive, "self-distributivity fails");
}

void repro_z5_alexander(Repro& r) {
  OpTable a = catalog("Z5-Alex2").table;
  r.table(a, "Z5-Alex2");
  r.table(power(a, 2), "Z5-Alex2^2");
  r.table(power(a, 3), "Z5-Alex2^3");
  r.check(power(a, 2) == dihedral_quandle(5), "square equals R5");
  r.check(power(a, 4) == trivial_quandle(5), "fourth power is trivial");
  for (int k = 1; k <= 3; ++k)
    r.check(is_quandle(power(a, k)),
            "power " + std::to_string(k) + " is a quandle");
  r.check(n_quandle_order(a) == std::optional<int>(4), "n-quandle order is 4");
}

void repro_order4(Repro& r) {
  std::vector<OpTable> q;
  for (const char* name : {"Q0", "Q1", "Q2", "Q3", "Q4", "Q5", "Q6"}) {
    q.push_back(catalog(name).table);
    r.table(q.back(), name);
  }
  for (int i : {1, 3, 4, 5})
    r.check(compose(q[i], q[i]) == q[0],
            "Q" + std::to_string(i) + "^2 equals Q0");
  for (int i : {2, 6})
    r.check(power(q[i], 3) == q[0], "Q" + std::to_string(i) + "^3 equals Q0");
  for (int i : {2, 6})
    r.check(is_isomorphic(compose(q[i], q[i]), q[i]).has_value(),
            "Q" + std::to_string(i) + "^2 is isomorphic to Q" +
                std::to_string(i));
}

void repro_core_conj(Repro& r, const FiniteGroup& g, const std::string& label,
                     bool second_identity_holds) {
  OpTable cj = conj_quandle(g);
  OpTable co = core_quandle(g);
  auto c1 = distributivity_counterexample(cj, co);
  r.check(!c1, "(a core b) conj c == (a conj c) core (b conj c) on " + label);
  auto c2 = distributivity_counterexample(co, cj);
  if (second_identity_holds) {
    r.check(!c2, "(a conj b) core c == (a core c) conj (b core c) on " + label);
    r.check(is_quandle(compose(cj, co)), "conj-then-core composite is a quandle");
    r.check(compose(cj, co) == compose(co, cj), "the two composites coincide");
  } else {
    r.check(c2.has_value(),
            "(a conj b) core c == (a core c) conj (b core c) fails on " + label);
    if (c2)
      r.check(co.at(cj.at((*c2)[0], (*c2)[1]), (*c2)[2]) !=
                  cj.at(co.at((*c2)[0], (*c2)[2]), co.at((*c2)[1], (*c2)[2])),
              "counterexample a=" + std::to_string((*c2)[0]) +
                  " b=" + std::to_string((*c2)[1]) +
                  " c=" + std::to_string((*c2)[2]) + " verified");
  }
}

void repro_abelianization(Repro& r, const FiniteGroup& g,
                          const std::string& label) {
  QuandleGroup qg = closure_group({conj_quandle(g), core_quandle(g)});
  r.check(qg.order() == 4, "closure of {Conj(" + label + "), Core(" + label +
                               ")} has order 4");
  r.check(closure_is_abelian(qg), "closure is abelian");
  FiniteGroup ab = abelianization(g);
  std::optional<std::string> type = closure_iso_type(qg);
  r.check(type.has_value() && *type == abelian_type_name(ab),
          "closure type is " + abelian_type_name(ab));
  r.check(group_isomorphic(qg.to_group(), ab),
          "closure is isomorphic to the abelianization of " + label);
}

void repro_alex_z7(Repro& r) {
  FiniteGroup z7 = cyclic(7);
  OpTable s = alexander_quandle(z7, power_automorphism(z7, 2));
  OpTable o = alexander_quandle(z7, power_automorphism(z7, 3));
  r.check(distributes_over(s, o) && distributes_over(o, s),
          "the two Alexander operations are mutually distributive");
  bool all = true;
  for (int k = -2; k <= 2; ++k)
    for (int l = -2; l <= 2; ++l) {
      OpWord w;
      w.append(0, k);
      w.append(1, l);
      all = all && is_quandle(word_operation({s, o}, w));
    }
  r.check(all, "all word operations a^k b^l, k, l in [-2, 2], are quandles");

  // Non-commuting automorphisms break the distributive law between the two
  // operations (the composite tables themselves stay Alexander quandles).
  FiniteGroup s3 = symmetric(3);
  std::vector<GroupAutomorphism> autos = automorphisms(s3);
  std::optional<std::array<int, 3>> cx;
  for (std::size_t i = 0; i < autos.size() && !cx; ++i)
    for (std::size_t k = i + 1; k < autos.size() && !cx; ++k)
      cx = distributivity_counterexample(alexander_quandle(s3, autos[i]),
                                         alexander_quandle(s3, autos[k]));
  r.check(cx.has_value(),
          cx ? "non-commuting automorphisms of S3 break distributivity at a=" +
                   std::to_string((*cx)[0]) + " b=" + std::to_string((*cx)[1]) +
                   " c=" + std::to_string((*cx)[2])
             : "non-commuting automorphisms of S3 break distributivity");
}

void repro_counts(Repro& r) {
  const int expected[] = {3, 7, 22, 73};
  for (int n = 3; n <= 6; ++n) {
    std::size_t count = enumerate_quandles(n, true).size();
    r.check(count == static_cast<std::size_t>(expected[n - 3]),
            "order " + std::to_string(n) + ": " + std::to_string(count) +
                " isomorphism classes");
  }
}

const char* const kReproIds =
    "order3, r3j3, z5-alexander, order4, core-conj-s3, core-conj-d4, "
    "core-conj-q8, abelianization-d4, abelianization-q8, alex-z7, counts";

int run_reproduce(const std::string& id, const Output& out) {
  if (id == "list") {
    std::cout << kReproIds << "\n";
    return 0;
  }
  Repro r(id, out);
  if (id == "order3") repro_order3(r);
  else if (id == "r3j3") repro_r3j3(r);
  else if (id == "z5-alexander") repro_z5_alexander(r);
  else if (id == "order4") repro_order4(r);
  else if (id == "core-conj-s3") repro_core_conj(r, symmetric(3), "S3", false);
  else if (id == "core-conj-d4") repro_core_conj(r, dihedral_group(4), "D4", true);
  else if (id == "core-conj-q8") repro_core_conj(r, quaternion8(), "Q8", true);
  else if (id == "abelianization-d4") repro_abelianization(r, dihedral_group(4), "D4");
  else if (id == "abelianization-q8") repro_abelianization(r, quaternion8(), "Q8");
  else if (id == "alex-z7") repro_alex_z7(r);
  else if (id == "counts") repro_counts(r);
  else
    throw ValidationError("unknown reproduction id: " + id + "; one of " +
                          kReproIds + ", or list");
  return r.finish();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quandlekit: finite racks and quandles from Cayley tables"};
  app.require_subcommand(1);

  std::string format = "text";
  bool one_indexed = false;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_flag("--one-indexed", one_indexed,
               "display table entries 1-indexed (display only; such output "
               "does not re-parse)");
  auto output = [&] { return Output{format == "structured", one_indexed}; };

  int rc = 0;

  std::string build_spec, build_out;
  auto* build = app.add_subcommand("build", std::string("write the table of ") +
                                                kBuildGrammar);
  build->fallthrough();
  build->add_option("spec", build_spec, "what to build")->required();
  build->add_option("-o,--output", build_out, "write to a file");
  build->callback([&] { rc = run_build(build_spec, build_out, output()); });

  std::string check_file;
  auto* check = app.add_subcommand(
      "check", "classify a table document (exit 0 iff it is a quandle)");
  check->fallthrough();
  check->add_option("file", check_file, "table document")->required();
  check->callback([&] { rc = run_check(check_file, output()); });

  std::string compose_a, compose_b, compose_out;
  auto* comp = app.add_subcommand(
      "compose", "compose two operations: entry (a,b) of the result is "
                 "t2(t1(a,b), b)");
  comp->fallthrough();
  comp->add_option("first", compose_a, "table applied first")->required();
  comp->add_option("second", compose_b, "table applied second")->required();
  comp->add_option("-o,--output", compose_out, "write to a file");
  comp->callback(
      [&] { rc = run_compose(compose_a, compose_b, compose_out, output()); });

  std::string power_file, power_out;
  int power_k = 1;
  auto* pow = app.add_subcommand(
      "power", "k-fold self-composition; negative k uses the right inverse");
  pow->fallthrough();
  pow->add_option("file", power_file, "table document")->required();
  pow->add_option("k", power_k, "exponent")->required();
  pow->add_option("-o,--output", power_out, "write to a file");
  pow->callback([&] { rc = run_power(power_file, power_k, power_out, output()); });

  std::string distrib_a, distrib_b;
  auto* dis = app.add_subcommand(
      "distrib",
      "check mutual distributivity of two operations (exit 0 iff mutual)");
  dis->fallthrough();
  dis->add_option("first", distrib_a, "table document")->required();
  dis->add_option("second", distrib_b, "table document")->required();
  dis->callback([&] { rc = run_distrib(distrib_a, distrib_b, output()); });

  std::vector<std::string> word_args;
  auto* word = app.add_subcommand(
      "word", "evaluate a word such as \"a^2 b^-1\" over generator tables "
              "named a, b, ... in file order");
  word->fallthrough();
  word->add_option("args", word_args, "generator files..., then the word")
      ->required();
  word->callback([&] {
    std::string out_path;  // words print to stdout
    rc = run_word(word_args, out_path, output());
  });

  std::vector<std::string> closure_files;
  auto* clo = app.add_subcommand(
      "closure", "group generated by quandle tables under composition");
  clo->fallthrough();
  clo->add_option("files", closure_files, "generator table documents")
      ->required();
  clo->callback([&] { rc = run_closure(closure_files, output()); });

  auto* family = app.add_subcommand("family", "operation families on a set");
  family->require_subcommand(1);
  family->fallthrough();
  std::string family_validate_file;
  auto* fval = family->add_subcommand(
      "validate", "check the family axioms (exit 0 iff valid)");
  fval->fallthrough();
  fval->add_option("file", family_validate_file, "family spec (JSON)")
      ->required();
  fval->callback([&] { rc = run_family_validate(family_validate_file, output()); });
  std::string family_assoc_file, family_assoc_out;
  auto* fassoc = family->add_subcommand(
      "assoc", "associated quandle on X x S of a valid family");
  fassoc->fallthrough();
  fassoc->add_option("file", family_assoc_file, "family spec (JSON)")
      ->required();
  fassoc->add_option("-o,--output", family_assoc_out, "write to a file");
  fassoc->callback(
      [&] { rc = run_family_assoc(family_assoc_file, family_assoc_out, output()); });

  int enum_n = 0;
  bool enum_labeled = false;
  auto* enu = app.add_subcommand(
      "enumerate", "all quandles of order n up to isomorphism (cap via "
                   "QF_MAX_N, default 7)");
  enu->fallthrough();
  enu->add_option("n", enum_n, "order")->required();
  enu->add_flag("--labeled", enum_labeled,
                "list all labeled tables instead of canonical representatives");
  enu->callback([&] { rc = run_enumerate(enum_n, enum_labeled, output()); });

  std::vector<std::string> survey_files;
  auto* sur = app.add_subcommand(
      "survey", "pairwise composition census of a list of tables");
  sur->fallthrough();
  sur->add_option("files", survey_files, "table documents")->required();
  sur->callback([&] { rc = run_survey(survey_files, output()); });

  std::string iso_a, iso_b;
  auto* iso = app.add_subcommand(
      "iso", "find an isomorphism between two tables (exit 0 iff isomorphic)");
  iso->fallthrough();
  iso->add_option("first", iso_a, "table document")->required();
  iso->add_option("second", iso_b, "table document")->required();
  iso->callback([&] { rc = run_iso(iso_a, iso_b, output()); });

  std::string rank_file;
  auto* rnk = app.add_subcommand(
      "rank", "minimum size of a generating subset of a quandle");
  rnk->fallthrough();
  rnk->add_option("file", rank_file, "table document")->required();
  rnk->callback([&] { rc = run_rank(rank_file, output()); });

  std::string repro_id;
  auto* rep = app.add_subcommand(
      "reproduce", std::string("run a named worked example end to end: ") +
                       kReproIds);
  rep->fallthrough();
  rep->add_option("id", repro_id, "example id, or 'list'")->required();
  rep->callback([&] { rc = run_reproduce(repro_id, output()); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
