#include "verl/group_file.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "verl/error.hpp"

namespace verl {

namespace {

using json = nlohmann::json;

std::string position(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::ValidationError, what); }

std::size_t positive(const json& v, const char* key) {
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    invalid(std::string("'") + key + "' must be a positive integer");
  }
  return v.get<std::size_t>();
}

std::vector<std::string> read_labels(const json& v) {
  if (!v.is_array()) invalid("'labels' must be an array of strings");
  std::vector<std::string> out;
  for (const auto& l : v) {
    if (!l.is_string()) invalid("'labels' must be an array of strings");
    out.push_back(l.get<std::string>());
  }
  return out;
}

FiniteGroup build_group(const json& def) {
  if (!def.is_object()) invalid("group definition must be an object");
  FiniteGroup g = [&] {
    if (def.contains("table")) {
      const auto& t = def["table"];
      if (!t.is_array()) invalid("'table' must be an array of rows");
      FiniteGroup::Table table;
      for (const auto& row : t) {
        if (!row.is_array()) invalid("'table' rows must be arrays");
        std::vector<Elem> r;
        for (const auto& x : row) {
          if (!x.is_number_integer() || x.get<long long>() < 0) invalid("table entries must be indices");
          r.push_back(x.get<Elem>());
        }
        table.push_back(std::move(r));
      }
      return build_from_table(table);
    }
    if (def.contains("cyclic")) return construct_named(NamedFamily::cyclic, positive(def["cyclic"], "cyclic"));
    if (def.contains("dihedral")) return construct_named(NamedFamily::dihedral, positive(def["dihedral"], "dihedral"));
    if (def.contains("symmetric")) {
      return construct_named(NamedFamily::symmetric, positive(def["symmetric"], "symmetric"));
    }
    if (def.contains("product")) {
      const auto& parts = def["product"];
      if (!parts.is_array() || parts.empty()) invalid("'product' must be a non-empty array");
      FiniteGroup acc = build_group(parts[0]);
      for (std::size_t i = 1; i < parts.size(); ++i) acc = direct_product(acc, build_group(parts[i]));
      return acc;
    }
    invalid("group definition needs one of table, cyclic, dihedral, symmetric, product");
  }();
  if (def.contains("labels")) g = g.relabeled(read_labels(def["labels"]));
  return g;
}

Elem resolve(const FiniteGroup& g, const json& label, const std::string& where) {
  if (!label.is_string()) invalid(where + ": element references must be label strings");
  auto e = g.find_label(label.get<std::string>());
  if (!e) invalid(where + ": unknown label '" + label.get<std::string>() + "'");
  return *e;
}

Subgroup build_subgroup(const FiniteGroup& g, const std::string& name, const json& def) {
  if (!def.is_object()) invalid("subgroup '" + name + "' must be an object");
  if (def.contains("members") == def.contains("generators")) {
    invalid("subgroup '" + name + "' needs exactly one of members, generators");
  }
  const bool by_members = def.contains("members");
  const auto& list = by_members ? def["members"] : def["generators"];
  if (!list.is_array()) invalid("subgroup '" + name + "': expected an array of labels");
  std::vector<Elem> elems;
  for (const auto& l : list) elems.push_back(resolve(g, l, "subgroup '" + name + "'"));
  if (by_members) return Subgroup(g, elems);
  return subgroup_closure(g, elems);
}

}  // namespace

GroupDefinition parse_group_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, position(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  try {
    if (!doc.is_object()) invalid("document must be an object");
    const json& def = doc.contains("group") ? doc["group"] : doc;
    FiniteGroup g = build_group(def);
    if (doc.contains("group") && doc.contains("labels")) g = g.relabeled(read_labels(doc["labels"]));

    GroupDefinition out{g, {}};
    if (doc.contains("subgroups")) {
      const auto& subs = doc["subgroups"];
      if (!subs.is_object()) invalid("'subgroups' must be an object");
      for (const auto& [name, sdef] : subs.items()) out.subgroups.emplace(name, build_subgroup(g, name, sdef));
    }
    return out;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ValidationError) throw;
    throw Error(ErrorCode::ValidationError, e.what());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ValidationError, e.what());
  }
}

GroupDefinition parse_group_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group_text(buf.str());
}

}  // namespace verl
