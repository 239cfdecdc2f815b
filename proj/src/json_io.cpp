#include "srw/json_io.hpp"

#include <fstream>
#include <sstream>

namespace srw {

using nlohmann::json;

namespace {

int as_int(const json& v, const std::string& what) {
  if (!v.is_number_integer()) throw ParseError(what + " must be an integer");
  return v.get<int>();
}

std::vector<std::vector<int>> as_table(const json& doc, const char* key, std::size_t n) {
  if (!doc.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  const json& rows = doc.at(key);
  if (!rows.is_array()) throw ParseError(std::string(key) + " must be an array of rows");
  if (rows.size() != n)
    throw ParseError(std::string(key) + " has " + std::to_string(rows.size()) + " rows, expected " +
                     std::to_string(n));
  std::vector<std::vector<int>> out;
  for (const json& row : rows) {
    if (!row.is_array() || row.size() != n)
      throw ParseError(std::string(key) + " is ragged: every row needs " + std::to_string(n) +
                       " entries");
    std::vector<int> r;
    for (const json& v : row) r.push_back(as_int(v, std::string(key) + " entry"));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

SemiringFile parse_semiring_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("semiring file must be a JSON object");
  for (const char* key : {"n", "zero", "one"})
    if (!doc.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  SemiringFile f;
  const int n = as_int(doc.at("n"), "n");
  if (n < 2 || n > static_cast<int>(kMaxOrder)) throw ParseError("n must be in [2, 255]");
  f.tables.n = static_cast<std::size_t>(n);
  f.tables.zero = as_int(doc.at("zero"), "zero");
  f.tables.one = as_int(doc.at("one"), "one");
  f.tables.add = as_table(doc, "add", f.tables.n);
  f.tables.mul = as_table(doc, "mul", f.tables.n);
  if (doc.contains("labels")) {
    const json& labels = doc.at("labels");
    if (!labels.is_array() || labels.size() != f.tables.n)
      throw ParseError("labels must be an array of n strings");
    for (const json& l : labels) {
      if (!l.is_string()) throw ParseError("labels must be strings");
      f.tables.labels.push_back(l.get<std::string>());
    }
  }
  if (doc.contains("order")) {
    const auto m = as_table(doc, "order", f.tables.n);
    std::vector<std::vector<bool>> leq(f.tables.n, std::vector<bool>(f.tables.n));
    for (std::size_t i = 0; i < f.tables.n; ++i)
      for (std::size_t j = 0; j < f.tables.n; ++j) {
        if (m[i][j] != 0 && m[i][j] != 1) throw ParseError("order entries must be 0 or 1");
        leq[i][j] = m[i][j] == 1;
      }
    f.order = std::move(leq);
  }
  return f;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SemiringFile read_semiring_file(const std::filesystem::path& path) {
  try {
    return parse_semiring_json(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

OrderedView load_view(const SemiringFile& file) {
  FiniteSemiring S = validate_semiring(file.tables);
  if (file.order) return check_ordered_axioms(S, OrderRelation::from_matrix(*file.order));
  return default_view(S);
}

json semiring_to_json(const FiniteSemiring& S, const OrderRelation* order) {
  const SemiringTables t = S.tables();
  json doc = json::object();
  doc["n"] = t.n;
  doc["zero"] = t.zero;
  doc["one"] = t.one;
  doc["add"] = t.add;
  doc["mul"] = t.mul;
  doc["labels"] = t.labels;
  if (order) {
    json m = json::array();
    for (const auto& row : order->matrix()) {
      json r = json::array();
      for (bool b : row) r.push_back(b ? 1 : 0);
      m.push_back(r);
    }
    doc["order"] = m;
  }
  return doc;
}

std::vector<int> parse_pc_function_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("star") || !doc.at("star").is_array())
    throw ParseError("pc-function file must be {\"star\": [int]}");
  std::vector<int> out;
  for (const json& v : doc.at("star")) out.push_back(as_int(v, "star entry"));
  return out;
}

json to_json(const ElementSet& set) {
  json arr = json::array();
  set.for_each([&](Element e) { arr.push_back(int(e)); });
  return arr;
}

json to_json(const std::vector<IdealSet>& ideals) {
  json arr = json::array();
  for (const auto& I : ideals) arr.push_back(to_json(I));
  return arr;
}

}  // namespace srw
