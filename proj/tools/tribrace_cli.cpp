// Command-line front end for the tribrace library. Every report is printed
// deterministically: identical inputs and flags give identical bytes. Exit
// codes: 0 success, 1 mathematical rejection, 2 I/O or parse error, 3 bound
// exceeded. TRIFACT_BOUND_* environment variables override search bounds.

#include <CLI11.hpp>

#include <cctype>
#include <cstdio>
#include <iostream>
#include <span>
#include <string>
#include <vector>

#include "tribrace/classify.hpp"
#include "tribrace/errors.hpp"
#include "tribrace/io.hpp"
#include "tribrace/quotients.hpp"
#include "tribrace/substructure.hpp"

using namespace tribrace;
using nlohmann::json;

namespace {

enum class FileType { Group, Brace, Trifact };

FileType detect(const json& j) {
  if (j.is_object()) {
    if (j.contains("add") && j.contains("mul")) return FileType::Brace;
    if (j.contains("group") && j.contains("K")) return FileType::Trifact;
    if (j.contains("table") || j.contains("semidirect")) return FileType::Group;
  }
  throw IoError("unrecognised file shape: expected a group, brace, or tuple file");
}

const char* type_name(FileType t) {
  switch (t) {
    case FileType::Group: return "group";
    case FileType::Brace: return "brace";
    case FileType::Trifact: return "tuple";
  }
  return "?";
}

std::vector<Elem> parse_indices(const std::string& s) {
  std::vector<Elem> out;
  std::string cur;
  for (char c : s + ",") {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      cur += c;
    } else if (c == ',' || c == ' ') {
      if (!cur.empty()) {
        out.push_back(std::stoi(cur));
        cur.clear();
      }
    } else {
      throw IoError("cannot parse index list \"" + s + "\"");
    }
  }
  if (out.empty()) throw IoError("empty index list");
  return out;
}

std::string set_text(std::span<const Elem> v) {
  std::string out = "{";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i]);
  }
  return out + "}";
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

void emit(const json& rep, bool json_mode, const std::string& text) {
  if (json_mode)
    std::cout << io::dump_canonical(rep);
  else
    std::cout << text;
}

// ---------------------------------------------------------------------------
// validate

int cmd_validate(const std::string& path, bool json_mode) {
  json j = io::load_json(path);
  FileType t = detect(j);
  json rep{{"type", type_name(t)}};
  std::string text = std::string("type: ") + type_name(t) + "\n";
  try {
    switch (t) {
      case FileType::Group: {
        FiniteGroup G = io::group_from_json(j);
        rep["order"] = G.order();
        text += "order: " + std::to_string(G.order()) + "\n";
        break;
      }
      case FileType::Brace: {
        SkewBrace B = io::brace_from_json(j);
        rep["order"] = B.order();
        text += "order: " + std::to_string(B.order()) + "\n";
        break;
      }
      case FileType::Trifact: {
        TrifactorisedGroup T = io::trifact_from_json(j);
        rep["group_order"] = T.group().order();
        rep["k_order"] = T.k_set().size();
        rep["h_order"] = T.h_set().size();
        rep["e_order"] = T.e_set().size();
        rep["provenance"] = T.provenance().has_value();
        text += "group order: " + std::to_string(T.group().order()) + "\n";
        text += "K: " + std::to_string(T.k_set().size()) +
                "  H: " + std::to_string(T.h_set().size()) +
                "  E: " + std::to_string(T.e_set().size()) + "\n";
        text += std::string("provenance: ") + yesno(T.provenance().has_value()) + "\n";
        break;
      }
    }
  } catch (const DomainError& e) {
    rep["status"] = "invalid";
    rep["reason"] = e.what();
    text += "status: invalid\nreason: " + std::string(e.what()) + "\n";
    emit(rep, json_mode, text);
    return 1;
  }
  rep["status"] = "valid";
  text += "status: valid\n";
  emit(rep, json_mode, text);
  return 0;
}

// ---------------------------------------------------------------------------
// info

int cmd_info(const std::string& path, bool json_mode) {
  json j = io::load_json(path);
  FileType t = detect(j);
  json rep{{"type", type_name(t)}};
  std::string text = std::string("type: ") + type_name(t) + "\n";
  switch (t) {
    case FileType::Group: {
      FiniteGroup G = io::group_from_json(j);
      const int n = G.order();
      bool abelian = true;
      for (Elem x = 0; x < n && abelian; ++x)
        for (Elem y = x + 1; y < n; ++y)
          if (G.mul(x, y) != G.mul(y, x)) {
            abelian = false;
            break;
          }
      std::vector<Elem> all(static_cast<size_t>(n));
      for (Elem x = 0; x < n; ++x) all[static_cast<size_t>(x)] = x;
      std::vector<Elem> centre = centralizer_in(G, all, all);
      const int classes = static_cast<int>(conjugacy_classes(G).size());
      rep["order"] = n;
      rep["semidirect"] = G.is_semidirect();
      rep["abelian"] = abelian;
      rep["centre_order"] = static_cast<int>(centre.size());
      rep["conjugacy_classes"] = classes;
      text += "order: " + std::to_string(n) + "\n";
      text += std::string("semidirect: ") + yesno(G.is_semidirect()) + "\n";
      text += std::string("abelian: ") + yesno(abelian) + "\n";
      text += "centre order: " + std::to_string(centre.size()) + "\n";
      text += "conjugacy classes: " + std::to_string(classes) + "\n";
      break;
    }
    case FileType::Brace: {
      SkewBrace B = io::brace_from_json(j);
      const bool trivial = B.is_trivial();
      const SubgroupSet kl = ker_lambda(B);
      const OmegaSet om = omega(B);
      const auto auts = brace_automorphisms(B);
      rep["order"] = B.order();
      rep["trivial"] = trivial;
      rep["ker_lambda_order"] = kl.size();
      rep["omega_count"] = static_cast<int>(om.members.size());
      rep["aut_order"] = static_cast<int>(auts.size());
      text += "order: " + std::to_string(B.order()) + "\n";
      text += std::string("trivial: ") + yesno(trivial) + "\n";
      text += "|ker lambda|: " + std::to_string(kl.size()) + "\n";
      text += "|Omega|: " + std::to_string(om.members.size()) + "\n";
      text += "|Aut|: " + std::to_string(auts.size()) + "\n";
      break;
    }
    case FileType::Trifact: {
      TrifactorisedGroup T = io::trifact_from_json(j);
      KindCertificate kc = identify_kind(T);
      rep["group_order"] = T.group().order();
      rep["k_order"] = T.k_set().size();
      rep["h_order"] = T.h_set().size();
      rep["e_order"] = T.e_set().size();
      rep["kind"] = to_string(kc.kind);
      rep["is_large"] = kc.is_large;
      rep["is_small"] = kc.is_small;
      rep["ker_eta_order"] = static_cast<int>(kc.ker_eta.size());
      rep["provenance"] = T.provenance().has_value();
      text += "group order: " + std::to_string(T.group().order()) + "\n";
      text += "K: " + std::to_string(T.k_set().size()) +
              "  H: " + std::to_string(T.h_set().size()) +
              "  E: " + std::to_string(T.e_set().size()) + "\n";
      text += "kind: " + to_string(kc.kind) + "\n";
      text += std::string("large: ") + yesno(kc.is_large) +
              "  small: " + yesno(kc.is_small) + "\n";
      text += "|ker eta|: " + std::to_string(kc.ker_eta.size()) + "\n";
      text += std::string("provenance: ") + yesno(T.provenance().has_value()) + "\n";
      break;
    }
  }
  emit(rep, json_mode, text);
  return 0;
}

// ---------------------------------------------------------------------------
// trifact

int cmd_trifact(const std::string& path, const std::string& kind, const std::string& kernel,
                const std::string& out, bool json_mode) {
  SkewBrace B = io::brace_from_json(io::load_json(path));
  TrifactorisedGroup T;
  if (kind == "large") {
    T = large_trifact(B);
  } else if (kind == "small") {
    T = small_trifact(B);
  } else if (kind == "kernel") {
    if (kernel.empty()) throw IoError("--kind kernel requires --kernel");
    T = generalised_trifact(B, parse_indices(kernel));
  } else {
    throw IoError("--kind must be large, small, or kernel");
  }
  io::save_json(out, io::trifact_to_json(T));
  json rep{{"kind", kind},
           {"group_order", T.group().order()},
           {"k_order", T.k_set().size()},
           {"h_order", T.h_set().size()},
           {"e_order", T.e_set().size()},
           {"kernel", T.provenance()->kernel},
           {"out", out}};
  std::string text = "kind: " + kind + "\n";
  text += "kernel: " + set_text(T.provenance()->kernel) + "\n";
  text += "group order: " + std::to_string(T.group().order()) + "\n";
  text += "K: " + std::to_string(T.k_set().size()) +
          "  H: " + std::to_string(T.h_set().size()) +
          "  E: " + std::to_string(T.e_set().size()) + "\n";
  text += "wrote: " + out + "\n";
  emit(rep, json_mode, text);
  return 0;
}

// ---------------------------------------------------------------------------
// classify

int cmd_classify(const std::string& path, bool certify, bool json_mode) {
  SkewBrace B = io::brace_from_json(io::load_json(path));
  Classification cls = iso_classes(B, certify);
  const OmegaSet& om = cls.orbits.omega;
  const char* cert = cls.certified ? "exhaustive-search" : "orbit-criterion";

  json rep{{"order", B.order()},
           {"omega", om.members},
           {"aut_order", cls.orbits.aut_order},
           {"certified", cls.certified},
           {"search_nodes", cls.search_nodes}};
  json jorbits = json::array();
  for (const auto& orbit : cls.orbits.orbits) {
    json members = json::array();
    for (int m : orbit) members.push_back(om.members[static_cast<size_t>(m)]);
    jorbits.push_back(std::move(members));
  }
  rep["orbits"] = jorbits;
  json jclasses = json::array();
  for (const IsoClass& c : cls.classes)
    jclasses.push_back(json{{"kernel", c.kernel},
                            {"kernel_order", static_cast<int>(c.kernel.size())},
                            {"group_order", c.tuple.group().order()},
                            {"kind", to_string(c.kind)},
                            {"certificate", cert}});
  rep["classes"] = jclasses;

  std::string text = "order: " + std::to_string(B.order()) + "\n";
  text += "|Omega|: " + std::to_string(om.members.size()) + "\n";
  text += "|Aut|: " + std::to_string(cls.orbits.aut_order) + "\n";
  text += "orbits: " + std::to_string(cls.orbits.orbits.size()) + "\n";
  for (size_t i = 0; i < cls.orbits.orbits.size(); ++i) {
    text += "orbit " + std::to_string(i) + ":";
    for (int m : cls.orbits.orbits[i]) text += " " + set_text(om.members[static_cast<size_t>(m)]);
    text += "\n";
  }
  text += "classes: " + std::to_string(cls.classes.size()) + "\n";
  for (size_t i = 0; i < cls.classes.size(); ++i) {
    const IsoClass& c = cls.classes[i];
    text += "class " + std::to_string(i) + ": N = " + set_text(c.kernel) +
            "  |N| = " + std::to_string(c.kernel.size()) +
            "  |G| = " + std::to_string(c.tuple.group().order()) + "  kind = " +
            to_string(c.kind) + "  certificate = " + cert + "\n";
  }
  emit(rep, json_mode, text);
  return 0;
}

// ---------------------------------------------------------------------------
// substructures

int cmd_substructures(const std::string& path, bool json_mode) {
  json j = io::load_json(path);
  FileType t = detect(j);
  TrifactorisedGroup T;
  if (t == FileType::Brace)
    T = large_trifact(io::brace_from_json(j));
  else if (t == FileType::Trifact)
    T = io::trifact_from_json(j);
  else
    throw IoError("substructures needs a brace or tuple file");

  const std::vector<Elem>& kmem = T.k_set().members();
  FiniteGroup KG = subgroup_as_group(T.group(), kmem);
  std::vector<SubgroupSet> subs = all_subgroups(KG);

  json rep{{"type", type_name(t)}, {"brace_order", static_cast<int>(kmem.size())}};
  std::string text = std::string("type: ") + type_name(t) + "\n";
  text += "brace order: " + std::to_string(kmem.size()) + "\n";
  text += "subgroups: " + std::to_string(subs.size()) + "\n";
  json jrows = json::array();
  for (const SubgroupSet& sub : subs) {
    std::vector<Elem> L(sub.members().size());
    for (size_t i = 0; i < L.size(); ++i)
      L[i] = kmem[static_cast<size_t>(sub.members()[i])];
    SubstructureReport r = classify_substructure_trifact(T, L);

    json jrow{{"set", r.set},
              {"brace_set", r.brace_set},
              {"label", to_string(r.brace_label.kind)},
              {"consistent", r.consistent()}};
    text += "L = " + set_text(r.brace_set) + "  (G set " + set_text(r.set) + ")\n";
    text += "  label: " + to_string(r.brace_label.kind) + "\n";
    json jbats = json::array();
    for (const SubstructureBattery& bat : r.batteries) {
      json jconds = json::array();
      text += "  [" + bat.level + "] verdict = " + yesno(bat.verdict()) +
              ", agree = " + yesno(bat.agree()) + "\n";
      for (const SubstructureCondition& c : bat.conditions) {
        json jc{{"name", c.name}, {"holds", c.holds}};
        text += "    " + c.name + ": " + yesno(c.holds);
        if (!c.holds && c.witness[0] >= 0) {
          jc["witness"] = c.witness;
          text += "  witness = (" + std::to_string(c.witness[0]) + ", " +
                  std::to_string(c.witness[1]) + ")";
        }
        text += "\n";
        jconds.push_back(std::move(jc));
      }
      jbats.push_back(json{{"level", bat.level},
                           {"verdict", bat.verdict()},
                           {"agree", bat.agree()},
                           {"conditions", std::move(jconds)}});
    }
    jrow["batteries"] = std::move(jbats);
    text += std::string("  consistent: ") + yesno(r.consistent()) + "\n";
    jrows.push_back(std::move(jrow));
  }
  rep["subgroups"] = static_cast<int>(subs.size());
  rep["rows"] = std::move(jrows);
  emit(rep, json_mode, text);
  return 0;
}

// ---------------------------------------------------------------------------
// quotient

int cmd_quotient(const std::string& path, const std::string& ideal, const std::string& out_brace,
                 const std::string& out_tuple, bool json_mode) {
  json j = io::load_json(path);
  FileType t = detect(j);
  std::vector<Elem> I = parse_indices(ideal);
  json rep{{"type", type_name(t)}};
  std::string text;
  if (t == FileType::Brace) {
    if (!out_tuple.empty()) throw IoError("--out-tuple requires a tuple input");
    SkewBrace B = io::brace_from_json(j);
    BraceQuotientResult q = brace_quotient(B, I);
    rep["order"] = B.order();
    rep["ideal"] = q.projection.kernel();
    rep["quotient_order"] = q.quotient.order();
    rep["projection"] = q.projection.images();
    text += "input: brace of order " + std::to_string(B.order()) + "\n";
    text += "ideal: " + set_text(q.projection.kernel()) + "\n";
    text += "quotient order: " + std::to_string(q.quotient.order()) + "\n";
    text += "projection:";
    for (Elem x : q.projection.images()) text += " " + std::to_string(x);
    text += "\n";
    if (!out_brace.empty()) {
      io::save_json(out_brace, io::brace_to_json(q.quotient));
      rep["out_brace"] = out_brace;
      text += "wrote brace: " + out_brace + "\n";
    }
  } else if (t == FileType::Trifact) {
    TrifactorisedGroup T = io::trifact_from_json(j);
    IdealQuotient q = ideal_quotient_tuple(T, I);
    rep["group_order"] = T.group().order();
    rep["ideal"] = q.braces.projection.kernel();
    rep["quotient_group_order"] = q.quotient.group().order();
    rep["quotient_brace_order"] = q.braces.quotient.order();
    rep["projection"] = q.projection.map().images();
    text += "input: tuple on group of order " + std::to_string(T.group().order()) + "\n";
    text += "ideal: " + set_text(q.braces.projection.kernel()) + "\n";
    text += "quotient group order: " + std::to_string(q.quotient.group().order()) + "\n";
    text += "quotient brace order: " + std::to_string(q.braces.quotient.order()) + "\n";
    text += "projection:";
    for (Elem x : q.projection.map().images()) text += " " + std::to_string(x);
    text += "\n";
    if (!out_tuple.empty()) {
      io::save_json(out_tuple, io::trifact_to_json(q.quotient));
      rep["out_tuple"] = out_tuple;
      text += "wrote tuple: " + out_tuple + "\n";
    }
    if (!out_brace.empty()) {
      io::save_json(out_brace, io::brace_to_json(q.braces.quotient));
      rep["out_brace"] = out_brace;
      text += "wrote brace: " + out_brace + "\n";
    }
  } else {
    throw IoError("quotient needs a brace or tuple file");
  }
  emit(rep, json_mode, text);
  return 0;
}

// ---------------------------------------------------------------------------
// enumerate

int cmd_enumerate(const std::string& group_path, const std::string& prefix, bool json_mode) {
  FiniteGroup G = io::group_from_json(io::load_json(group_path));
  std::vector<SkewBrace> braces = enumerate_braces(G);
  json rep{{"group_order", G.order()}, {"count", static_cast<int>(braces.size())}};
  std::string text = "group order: " + std::to_string(G.order()) + "\n";
  text += "braces found: " + std::to_string(braces.size()) + "\n";
  if (!prefix.empty()) {
    json files = json::array();
    for (size_t i = 0; i < braces.size(); ++i) {
      char num[8];
      std::snprintf(num, sizeof num, "%03zu", i);
      std::string path = prefix + num + ".json";
      io::save_json(path, io::brace_to_json(braces[i]));
      files.push_back(path);
      text += "wrote: " + path + "\n";
    }
    rep["files"] = std::move(files);
  }
  emit(rep, json_mode, text);
  return 0;
}

// ---------------------------------------------------------------------------
// lift

int cmd_lift(const std::string& map_path, const std::string& src_path, const std::string& dst_path,
             const std::string& out, bool json_mode) {
  std::vector<Elem> images = io::images_from_json(io::load_json(map_path));
  TrifactorisedGroup T1 = io::trifact_from_json(io::load_json(src_path));
  TrifactorisedGroup T2 = io::trifact_from_json(io::load_json(dst_path));
  SkewBrace B1 = associated_brace(T1);
  SkewBrace B2 = associated_brace(T2);

  BraceHomCheck hc = is_brace_hom(B1, B2, images);
  if (!hc.ok()) {
    const char* defect = hc.defect == BraceHomCheck::Defect::Shape     ? "shape"
                         : hc.defect == BraceHomCheck::Defect::AddLaw  ? "add-law"
                         : hc.defect == BraceHomCheck::Defect::MulLaw ? "mul-law"
                                                                       : "?";
    json rep{{"brace_map", "rejected"}, {"defect", defect}};
    std::string text = "brace map: rejected\ndefect: " + std::string(defect) + "\n";
    if (hc.witness[0] >= 0) {
      rep["witness"] = hc.witness;
      text += "witness: (" + std::to_string(hc.witness[0]) + ", " +
              std::to_string(hc.witness[1]) + ")\n";
    }
    emit(rep, json_mode, text);
    return 1;
  }
  LiftResult lr = lift_brace_hom(*hc.map, T1, T2);
  if (!lr.ok()) {
    json rep{{"brace_map", "certified"}, {"lift", "obstructed"}, {"obstruction", lr.obstruction}};
    std::string text = "brace map: certified\nlift: obstructed\n";
    text += "obstruction: element " + std::to_string(lr.obstruction) +
            " lies in ker eta1 but its image leaves ker eta2\n";
    emit(rep, json_mode, text);
    return 1;
  }
  const TrifactMorphism& m = *lr.morphism;
  json rep{{"brace_map", "certified"},
           {"lift", "ok"},
           {"injective", m.map().injective()},
           {"surjective", m.map().surjective()}};
  std::string text = "brace map: certified\nlift: ok\n";
  text += std::string("injective: ") + yesno(m.map().injective()) +
          "  surjective: " + yesno(m.map().surjective()) + "\n";
  if (!out.empty()) {
    io::save_json(out, json{{"images", m.map().images()}});
    rep["out"] = out;
    text += "wrote: " + out + "\n";
  }
  emit(rep, json_mode, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for skew braces and trifactorised groups"};
  app.require_subcommand(1);
  bool json_mode = false;

  std::string v_path;
  CLI::App* validate = app.add_subcommand("validate", "certify a group, brace, or tuple file");
  validate->add_option("file", v_path, "input file")->required();
  validate->add_flag("--json", json_mode, "JSON report");

  std::string i_path;
  CLI::App* info = app.add_subcommand("info", "print invariants of a file");
  info->add_option("file", i_path, "input file")->required();
  info->add_flag("--json", json_mode, "JSON report");

  std::string t_path, t_kind = "large", t_kernel, t_out;
  CLI::App* trifact = app.add_subcommand("trifact", "build a trifactorised group from a brace");
  trifact->add_option("file", t_path, "brace file")->required();
  trifact->add_option("--kind", t_kind, "large, small, or kernel");
  trifact->add_option("--kernel", t_kernel, "admissible kernel indices, e.g. \"0,2,4\"");
  trifact->add_option("-o,--out", t_out, "output tuple file")->required();
  trifact->add_flag("--json", json_mode, "JSON report");

  std::string c_path;
  bool c_certify = false;
  CLI::App* classify = app.add_subcommand("classify", "isomorphism classes of associated tuples");
  classify->add_option("file", c_path, "brace file")->required();
  classify->add_flag("--certify", c_certify, "exhaustive pairwise non-isomorphism search");
  classify->add_flag("--json", json_mode, "JSON report");

  std::string s_path;
  CLI::App* subs = app.add_subcommand("substructures", "classify every subgroup of K");
  subs->add_option("file", s_path, "brace or tuple file")->required();
  subs->add_flag("--json", json_mode, "JSON report");

  std::string q_path, q_ideal, q_out_brace, q_out_tuple;
  CLI::App* quot = app.add_subcommand("quotient", "quotient by an ideal");
  quot->add_option("file", q_path, "brace or tuple file")->required();
  quot->add_option("--ideal", q_ideal, "ideal as brace indices, e.g. \"0,2,4\"")->required();
  quot->add_option("--out-brace", q_out_brace, "write the quotient brace");
  quot->add_option("--out-tuple", q_out_tuple, "write the quotient tuple");
  quot->add_flag("--json", json_mode, "JSON report");

  std::string e_group, e_prefix;
  CLI::App* enm = app.add_subcommand("enumerate", "all braces on an additive group");
  enm->add_option("--group", e_group, "group file")->required();
  enm->add_option("-o,--out", e_prefix, "output file prefix (files get NNN.json appended)");
  enm->add_flag("--json", json_mode, "JSON report");

  std::string l_map, l_src, l_dst, l_out;
  CLI::App* lift = app.add_subcommand("lift", "lift a brace homomorphism to tuples");
  lift->add_option("map", l_map, "map file {\"images\": [...]}")->required();
  lift->add_option("source", l_src, "source tuple file")->required();
  lift->add_option("target", l_dst, "target tuple file")->required();
  lift->add_option("-o,--out", l_out, "write the lifted morphism's image array");
  lift->add_flag("--json", json_mode, "JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*validate) return cmd_validate(v_path, json_mode);
    if (*info) return cmd_info(i_path, json_mode);
    if (*trifact) return cmd_trifact(t_path, t_kind, t_kernel, t_out, json_mode);
    if (*classify) return cmd_classify(c_path, c_certify, json_mode);
    if (*subs) return cmd_substructures(s_path, json_mode);
    if (*quot) return cmd_quotient(q_path, q_ideal, q_out_brace, q_out_tuple, json_mode);
    if (*enm) return cmd_enumerate(e_group, e_prefix, json_mode);
    if (*lift) return cmd_lift(l_map, l_src, l_dst, l_out, json_mode);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BoundExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
