#include "quandlekit/table_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace quandlekit {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::vector<int>> rows_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("rows must be an array of arrays");
  std::vector<std::vector<int>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw ValidationError("rows must be arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer())
        throw ValidationError("table entries must be integers");
      r.push_back(v.get<int>());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

TableDocument document_from_json(const json& j) {
  TableDocument doc;
  if (!j.is_object()) throw ValidationError("expected a JSON object");
  doc.kind = j.value("kind", std::string("groupoid"));
  if (doc.kind != "groupoid" && doc.kind != "group")
    throw ValidationError("kind must be groupoid or group");
  doc.name = j.value("name", std::string());
  doc.note = j.value("note", std::string());
  if (!j.contains("rows")) throw ValidationError("document has no rows");
  doc.rows = rows_from_json(j.at("rows"));
  doc.n = j.value("n", static_cast<int>(doc.rows.size()));
  return doc;
}

TableDocument document_from_text(std::istream& in) {
  TableDocument doc;
  bool have_n = false;
  std::string line;
  bool in_rows = false;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (in_rows) {
      std::istringstream row_in(t);
      std::vector<int> row;
      int v;
      while (row_in >> v) row.push_back(v);
      if (!row_in.eof())
        throw ValidationError("row contains a non-integer token: " + t);
      doc.rows.push_back(std::move(row));
      continue;
    }
    if (t == "rows:") {
      in_rows = true;
      continue;
    }
    auto colon = t.find(':');
    if (colon == std::string::npos)
      throw ValidationError("expected 'key: value' before rows, got: " + t);
    std::string key = trim(t.substr(0, colon));
    std::string value = trim(t.substr(colon + 1));
    if (key == "kind") {
      if (value != "groupoid" && value != "group")
        throw ValidationError("kind must be groupoid or group");
      doc.kind = value;
    } else if (key == "n") {
      try {
        doc.n = std::stoi(value);
      } catch (const std::exception&) {
        throw ValidationError("n must be an integer");
      }
      have_n = true;
    } else if (key == "name") {
      doc.name = value;
    } else if (key == "note") {
      doc.note = value;
    } else {
      throw ValidationError("unknown header key: " + key);
    }
  }
  if (!in_rows) throw ValidationError("document has no rows");
  if (!have_n) doc.n = static_cast<int>(doc.rows.size());
  return doc;
}

void validate_shape(const TableDocument& doc) {
  if (doc.n <= 0) throw ValidationError("table must be non-empty");
  if (static_cast<int>(doc.rows.size()) != doc.n)
    throw ValidationError("expected " + std::to_string(doc.n) + " rows, got " +
                          std::to_string(doc.rows.size()));
  for (const auto& row : doc.rows)
    if (static_cast<int>(row.size()) != doc.n)
      throw ValidationError("every row must have " + std::to_string(doc.n) +
                            " entries");
}

}  // namespace

TableDocument read_table_document(std::istream& in) {
  // Peek past whitespace: '{' selects the JSON encoding.
  int c;
  while ((c = in.peek()) != EOF && std::isspace(c)) in.get();
  TableDocument doc;
  if (c == '{') {
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw ValidationError(std::string("bad JSON document: ") + e.what());
    }
    doc = document_from_json(j);
  } else {
    doc = document_from_text(in);
  }
  validate_shape(doc);
  return doc;
}

TableDocument read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path);
  return read_table_document(in);
}

void write_table_document(std::ostream& out, const TableDocument& doc,
                          bool structured) {
  if (structured) {
    json j;
    j["kind"] = doc.kind;
    j["n"] = doc.n;
    if (!doc.name.empty()) j["name"] = doc.name;
    if (!doc.note.empty()) j["note"] = doc.note;
    j["rows"] = doc.rows;
    out << j.dump(2) << "\n";
    return;
  }
  out << "# entries are 0-indexed; entry (row a, column b) is a*b\n";
  out << "kind: " << doc.kind << "\n";
  if (!doc.name.empty()) out << "name: " << doc.name << "\n";
  if (!doc.note.empty()) out << "note: " << doc.note << "\n";
  out << "n: " << doc.n << "\n";
  out << "rows:\n";
  for (const auto& row : doc.rows) {
    for (size_t i = 0; i < row.size(); ++i)
      out << (i ? " " : "") << row[i];
    out << "\n";
  }
}

OpTable to_op_table(const TableDocument& doc) {
  return OpTable::from_rows(doc.rows);
}

FiniteGroup to_group(const TableDocument& doc) {
  if (doc.kind != "group")
    throw ValidationError("document does not describe a group");
  return FiniteGroup::from_table(doc.rows);
}

TableDocument from_op_table(const OpTable& t, std::string name,
                            std::string note) {
  TableDocument doc;
  doc.kind = "groupoid";
  doc.n = t.size();
  doc.rows = t.rows();
  doc.name = std::move(name);
  doc.note = std::move(note);
  return doc;
}

TableDocument from_group(const FiniteGroup& g, std::string name,
                         std::string note) {
  TableDocument doc;
  doc.kind = "group";
  doc.n = g.order();
  doc.rows = g.rows();
  doc.name = std::move(name);
  doc.note = std::move(note);
  return doc;
}

FamilySpec read_family_document(std::istream& in) {
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("bad JSON family spec: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("family spec must be an object");
  FamilySpec spec;
  if (!j.contains("x_size") || !j.at("x_size").is_number_integer())
    throw ValidationError("family spec needs an integer x_size");
  spec.x_size = j.at("x_size").get<int>();
  if (!j.contains("index") || !j.at("index").is_object())
    throw ValidationError("family spec needs an index object");
  const json& idx = j.at("index");
  std::string kind = idx.value("kind", std::string());
  if (!idx.contains("table"))
    throw ValidationError("family index needs a table");
  if (kind == "quandle") {
    spec.index_kind = IndexKind::quandle_indexed;
    spec.index_quandle = OpTable::from_rows(rows_from_json(idx.at("table")));
  } else if (kind == "group") {
    spec.index_kind = IndexKind::group_indexed;
    spec.group = FiniteGroup::from_table(rows_from_json(idx.at("table")));
    if (idx.contains("quandle"))
      spec.group_quandle =
          OpTable::from_rows(rows_from_json(idx.at("quandle")));
  } else {
    throw ValidationError("index kind must be quandle or group");
  }
  if (!j.contains("ops") || !j.at("ops").is_array())
    throw ValidationError("family spec needs an ops array");
  for (const auto& op : j.at("ops"))
    spec.ops.push_back(OpTable::from_rows(rows_from_json(op)));
  if (j.contains("f"))
    spec.f = OpTable::from_rows(rows_from_json(j.at("f")));
  return spec;
}

FamilySpec read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path);
  return read_family_document(in);
}

void write_family_document(std::ostream& out, const FamilySpec& spec) {
  json j;
  j["x_size"] = spec.x_size;
  json idx;
  if (spec.index_kind == IndexKind::quandle_indexed) {
    idx["kind"] = "quandle";
    idx["table"] = spec.index_quandle ? spec.index_quandle->rows()
                                      : std::vector<std::vector<int>>{};
  } else {
    idx["kind"] = "group";
    idx["table"] =
        spec.group ? spec.group->rows() : std::vector<std::vector<int>>{};
    if (spec.group_quandle) idx["quandle"] = spec.group_quandle->rows();
  }
  j["index"] = idx;
  json ops = json::array();
  for (const OpTable& t : spec.ops) ops.push_back(t.rows());
  j["ops"] = ops;
  if (spec.f) j["f"] = spec.f->rows();
  out << j.dump(2) << "\n";
}

}  // namespace quandlekit
