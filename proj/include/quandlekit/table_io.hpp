#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "quandlekit/families.hpp"
#include "quandlekit/group.hpp"
#include "quandlekit/op_table.hpp"

namespace quandlekit {

// On-disk form of a Cayley table. Two encodings are accepted and produced:
// a key/value text header followed by a "rows:" block, and a JSON object
// with the same fields (detected by a leading '{').
struct TableDocument {
  std::string kind = "groupoid";  // "groupoid" or "group"
  int n = 0;
  std::vector<std::vector<int>> rows;
  std::string name;  // optional
  std::string note;  // optional
};

TableDocument read_table_document(std::istream& in);
TableDocument read_table_file(const std::string& path);

void write_table_document(std::ostream& out, const TableDocument& doc,
                          bool structured);

OpTable to_op_table(const TableDocument& doc);
FiniteGroup to_group(const TableDocument& doc);

TableDocument from_op_table(const OpTable& t, std::string name,
                            std::string note = "");
TableDocument from_group(const FiniteGroup& g, std::string name,
                         std::string note = "");

// Family specs are JSON only:
// {
//   "x_size": 5,
//   "index": {"kind": "quandle"|"group", "table": [[...]],
//             "quandle": [[...]]        // only for (G,f) families
//   },
//   "ops": [[[...]], ...],              // one table on X per index element
//   "f": [[...]]                        // optional index map
// }
FamilySpec read_family_document(std::istream& in);
FamilySpec read_family_file(const std::string& path);

void write_family_document(std::ostream& out, const FamilySpec& spec);

}  // namespace quandlekit
