#include "tribrace/io.hpp"

#include <cstdio>
#include <fstream>

namespace tribrace::io {

namespace {

using Table = std::vector<std::vector<Elem>>;

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw IoError(std::string("expected an object with \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw IoError(std::string("missing field \"") + key + "\"");
  return *it;
}

template <typename T>
T typed(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw IoError(std::string("field \"") + what + "\" has the wrong shape");
  }
}

template <typename Violation>
std::string describe(const Violation& v) {
  std::string out = to_string(v.kind);
  std::string args;
  for (Elem x : v.witness) {
    if (x < 0) break;
    if (!args.empty()) args += ", ";
    args += std::to_string(x);
  }
  if (!args.empty()) out += " at (" + args + ")";
  if (!v.detail.empty()) out += ": " + v.detail;
  return out;
}

json table_json(const FiniteGroup& G) {
  const std::vector<Elem> flat = G.table_copy();
  const int n = G.order();
  json rows = json::array();
  for (int i = 0; i < n; ++i) {
    json row = json::array();
    for (int k = 0; k < n; ++k) row.push_back(flat[static_cast<size_t>(i) * n + k]);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

json group_to_json(const FiniteGroup& G) {
  if (!G.valid()) throw DomainError("group_to_json: missing group");
  if (G.is_semidirect()) {
    const SemidirectData& sd = G.semidirect_data();
    return json{{"semidirect", json{{"base", group_to_json(sd.base)},
                                    {"actor", group_to_json(sd.actor)},
                                    {"action", sd.action}}}};
  }
  return json{{"order", G.order()}, {"table", table_json(G)}};
}

json brace_to_json(const SkewBrace& B) {
  if (!B.valid()) throw DomainError("brace_to_json: missing brace");
  return json{{"order", B.order()},
              {"add", table_json(B.add())},
              {"mul", table_json(B.mul())}};
}

json trifact_to_json(const TrifactorisedGroup& T) {
  if (!T.valid()) throw DomainError("trifact_to_json: missing tuple");
  json out{{"group", group_to_json(T.group())},
           {"K", T.k_set().members()},
           {"H", T.h_set().members()},
           {"E", T.e_set().members()}};
  if (T.provenance().has_value())
    out["provenance"] = json{{"brace", brace_to_json(T.provenance()->brace)},
                             {"N", T.provenance()->kernel}};
  return out;
}

FiniteGroup group_from_json(const json& j, const Bounds& bounds) {
  if (j.is_object() && j.contains("semidirect")) {
    const json& sd = field(j, "semidirect");
    FiniteGroup base = group_from_json(field(sd, "base"), bounds);
    FiniteGroup actor = group_from_json(field(sd, "actor"), bounds);
    Table action = typed<Table>(field(sd, "action"), "action");
    GroupCheck ck = validate_semidirect(base, actor, action, bounds);
    if (!ck.ok()) throw DomainError("semidirect rejected: " + describe(ck.violations[0]));
    return *ck.group;
  }
  const int order = typed<int>(field(j, "order"), "order");
  Table table = typed<Table>(field(j, "table"), "table");
  if (order != static_cast<int>(table.size()))
    throw IoError("\"order\" does not match the table size");
  GroupCheck ck = validate_group(table, bounds);
  if (!ck.ok()) throw DomainError("group rejected: " + describe(ck.violations[0]));
  return *ck.group;
}

SkewBrace brace_from_json(const json& j, const Bounds& bounds) {
  const int order = typed<int>(field(j, "order"), "order");
  Table add = typed<Table>(field(j, "add"), "add");
  Table mul = typed<Table>(field(j, "mul"), "mul");
  if (order != static_cast<int>(add.size()) || order != static_cast<int>(mul.size()))
    throw IoError("\"order\" does not match the table sizes");
  BraceCheck ck = validate_brace(add, mul, bounds);
  if (!ck.ok()) throw DomainError("brace rejected: " + describe(ck.violations[0]));
  return *ck.brace;
}

TrifactorisedGroup trifact_from_json(const json& j, const Bounds& bounds) {
  FiniteGroup G = group_from_json(field(j, "group"), bounds);
  std::vector<Elem> K = typed<std::vector<Elem>>(field(j, "K"), "K");
  std::vector<Elem> H = typed<std::vector<Elem>>(field(j, "H"), "H");
  std::vector<Elem> E = typed<std::vector<Elem>>(field(j, "E"), "E");
  TrifactCheck ck = validate_trifact(G, std::move(K), std::move(H), std::move(E), bounds);
  if (!ck.ok()) throw DomainError("tuple rejected: " + describe(ck.violations[0]));
  if (!j.contains("provenance")) return *ck.tuple;

  const json& pv = field(j, "provenance");
  SkewBrace B = brace_from_json(field(pv, "brace"), bounds);
  std::vector<Elem> N = typed<std::vector<Elem>>(field(pv, "N"), "N");
  TrifactorisedGroup rebuilt = generalised_trifact(B, N, bounds);
  if (!rebuilt.tuple_equal(*ck.tuple))
    throw DomainError("provenance does not rebuild the tuple in the file");
  return rebuilt;
}

std::vector<Elem> images_from_json(const json& j) {
  return typed<std::vector<Elem>>(field(j, "images"), "images");
}

std::string dump_canonical(const json& j) { return j.dump(1) + "\n"; }

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw IoError("parse error in " + path + ": " + e.what());
  }
}

void save_json(const std::string& path, const json& j) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp);
    out << dump_canonical(j);
    out.flush();
    if (!out) throw IoError("write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw IoError("cannot rename " + tmp + " to " + path);
  }
}

}  // namespace tribrace::io
