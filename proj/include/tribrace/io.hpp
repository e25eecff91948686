#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "tribrace/brace.hpp"
#include "tribrace/group.hpp"
#include "tribrace/trifact.hpp"

namespace tribrace::io {

using json = nlohmann::json;

// Serialized forms. Groups keep their semidirect structure when they have
// one; everything else is a dense table. Deserialization re-certifies every
// axiom, so a loaded object is as trustworthy as a constructed one.
//
//   group:   {"order": n, "table": [[...]]}
//            {"semidirect": {"base": <group>, "actor": <group>, "action": [[...], ...]}}
//   brace:   {"order": n, "add": [[...]], "mul": [[...]]}
//   trifact: {"group": <group>, "K": [...], "H": [...], "E": [...],
//             "provenance": {"brace": <brace>, "N": [...]}}    (optional)
//   map:     {"images": [...]}
//
// Malformed shapes raise IoError; axiom failures raise DomainError with the
// defect and witness in the message.

json group_to_json(const FiniteGroup& G);
json brace_to_json(const SkewBrace& B);
json trifact_to_json(const TrifactorisedGroup& T);

FiniteGroup group_from_json(const json& j, const Bounds& bounds = Bounds::active());
SkewBrace brace_from_json(const json& j, const Bounds& bounds = Bounds::active());
TrifactorisedGroup trifact_from_json(const json& j, const Bounds& bounds = Bounds::active());
std::vector<Elem> images_from_json(const json& j);

// Sorted keys, one-space indent, trailing newline; identical objects give
// identical bytes.
std::string dump_canonical(const json& j);

json load_json(const std::string& path);
// Writes dump_canonical to a temporary in the same directory, then renames.
void save_json(const std::string& path, const json& j);

}  // namespace tribrace::io
