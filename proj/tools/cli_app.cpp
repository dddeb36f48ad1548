#include "cli_app.hpp"

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pbzl/catalog.hpp"
#include "pbzl/center.hpp"
#include "pbzl/congruence.hpp"
#include "pbzl/enumerate.hpp"
#include "pbzl/ideal.hpp"
#include "pbzl/json_io.hpp"
#include "pbzl/term.hpp"
#include "pbzl/verify.hpp"

namespace pbzlat {

namespace {

using nlohmann::ordered_json;
using namespace pbzl;

const char* kYes = "\xe2\x9c\x93";  // check mark
const char* kNo = "\xe2\x9c\x97";   // cross

int error_exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::IsoCheckFailed:
    case ErrorCode::CharacterizationMismatch:
    case ErrorCode::NotBoolean:
      return 1;
    default:
      return 2;
  }
}

std::string set_text(const std::vector<Element>& xs) {
  std::string s = "{";
  for (size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "}";
}

ordered_json blocks_json(const Congruence& c) {
  ordered_json arr = ordered_json::array();
  for (const auto& blk : c.blocks()) arr.push_back(blk);
  return arr;
}

std::string blocks_text(const Congruence& c) {
  std::string s = "[";
  const auto blocks = c.blocks();
  for (size_t i = 0; i < blocks.size(); ++i) s += (i ? " " : "") + set_text(blocks[i]);
  return s + "]";
}

ordered_json report_json(const ClassificationReport& rep, int size) {
  ordered_json doc;
  doc["algebra"] = rep.algebra;
  doc["size"] = size;
  ordered_json classes;
  for (int i = 0; i < kNumClassLabels; ++i)
    classes[to_string(static_cast<ClassLabel>(i))] = rep.classes[i];
  doc["classes"] = std::move(classes);
  ordered_json ids;
  for (const auto& [name, holds] : rep.identities) ids[name] = holds;
  doc["identities"] = std::move(ids);
  doc["sharp"] = {{"kleene", rep.sharp.kleene},
                  {"diamond", rep.sharp.diamond},
                  {"brouwer", rep.sharp.brouwer}};
  return doc;
}

void print_report(const ClassificationReport& rep, int size, std::ostream& out) {
  out << "algebra: " << rep.algebra << " (" << size << " elements)\n";
  out << "classes:   ";
  for (int i = 0; i < kNumClassLabels; ++i)
    out << " " << to_string(static_cast<ClassLabel>(i)) << (rep.classes[i] ? kYes : kNo);
  out << "\nidentities:";
  for (const auto& [name, holds] : rep.identities) out << " " << name << (holds ? kYes : kNo);
  out << "\nS_K = " << set_text(rep.sharp.kleene);
  if (!rep.sharp.diamond.empty() || !rep.sharp.brouwer.empty())
    out << "  S_<> = " << set_text(rep.sharp.diamond) << "  S_B = " << set_text(rep.sharp.brouwer);
  out << "\n";
}

struct CommonOptions {
  std::string file;
  bool json = false;
  bool dump = false;
};

Signature parse_signature(const std::string& text, const FiniteAlgebra& a) {
  if (text == "bi") return Signature::BoundedInvolution;
  if (text == "bzl") {
    if (!a.has_tilde())
      throw AlgebraError(ErrorCode::BadInput, "--signature bzl needs a Brouwer complement");
    return Signature::Full;
  }
  if (!text.empty()) throw AlgebraError(ErrorCode::BadInput, "unknown signature " + text);
  return Signature::Full;
}

int cmd_classify(const CommonOptions& opt, std::ostream& out) {
  const FiniteAlgebra a = load_algebra(opt.file);
  if (opt.dump) {
    out << algebra_to_json(a).dump(2) << "\n";
    return 0;
  }
  const ClassificationReport rep = classify(a);
  if (opt.json)
    out << report_json(rep, a.size()).dump(2) << "\n";
  else
    print_report(rep, a.size(), out);
  return 0;
}

int cmd_check(const CommonOptions& opt, const std::string& id_name, const std::string& lhs_text,
              const std::string& rhs_text, std::ostream& out) {
  const FiniteAlgebra a = load_algebra(opt.file);
  std::string shown;
  CheckResult result;
  std::vector<std::string> var_names = {"x", "y", "z", "w"};
  if (!id_name.empty()) {
    const NamedIdentity& id = find_identity(id_name);
    result = check_identity(a, id);
    shown = id.name;
  } else {
    if (lhs_text.empty() || rhs_text.empty())
      throw AlgebraError(ErrorCode::BadInput, "check needs --identity NAME or both --lhs and --rhs");
    const Term lhs = parse_term(lhs_text), rhs = parse_term(rhs_text);
    result = check_identity(a, lhs, rhs);
    shown = lhs.render() + " \xe2\x89\x88 " + rhs.render();
  }
  if (opt.json) {
    ordered_json doc;
    doc["algebra"] = a.name();
    doc["identity"] = shown;
    doc["holds"] = result.holds;
    if (result.witness) {
      ordered_json w;
      for (size_t i = 0; i < result.witness->assignment.size(); ++i)
        w[var_names[i]] = result.witness->assignment[i];
      doc["witness"] = {{"assignment", w},
                        {"lhs", result.witness->lhs_value},
                        {"rhs", result.witness->rhs_value}};
    }
    out << doc.dump(2) << "\n";
  } else {
    out << shown << " on " << a.name() << ": " << (result.holds ? "holds" : "fails") << "\n";
    if (result.witness) {
      out << "witness:";
      for (size_t i = 0; i < result.witness->assignment.size(); ++i)
        out << " " << var_names[i] << "=" << result.witness->assignment[i];
      out << "  lhs=" << result.witness->lhs_value << " rhs=" << result.witness->rhs_value << "\n";
    }
  }
  return result.holds ? 0 : 1;
}

int cmd_center(const CommonOptions& opt, std::ostream& out) {
  const FiniteAlgebra a = load_algebra(opt.file);
  const CommutationReport rep = commutation_report(a);
  const FiniteAlgebra centre = center_boolean_algebra(a);
  if (opt.json) {
    ordered_json doc;
    doc["algebra"] = a.name();
    doc["commuting_pairs"] = rep.commuting_pairs.size();
    doc["sdm_commuting_pairs"] = rep.commuting_sdm_pairs.size();
    doc["c_p"] = rep.c_p;
    doc["c_pbz"] = rep.c_pbz;
    doc["c_factor"] = rep.c_factor;
    doc["c_c1c4"] = rep.c_c1c4;
    doc["sharp_kleene"] = rep.sharp_kleene;
    doc["centre_size"] = centre.size();
    out << doc.dump(2) << "\n";
  } else {
    out << "centre report for " << a.name() << "\n";
    out << "  C_p      = " << set_text(rep.c_p) << "\n";
    out << "  C_pbz    = " << set_text(rep.c_pbz) << "\n";
    out << "  C_factor = " << set_text(rep.c_factor) << "\n";
    out << "  C1-C4    = " << set_text(rep.c_c1c4) << "\n";
    out << "  S_K      = " << set_text(rep.sharp_kleene) << "\n";
    out << "  centre is a Boolean algebra with " << centre.size() << " elements\n";
  }
  return 0;
}

int cmd_decompose(const CommonOptions& opt, Element element, std::ostream& out) {
  const FiniteAlgebra a = load_algebra(opt.file);
  if (element < 0 || element >= a.size())
    throw AlgebraError(ErrorCode::BadInput, "--element out of range");
  const Decomposition d = decompose(a, element);
  ordered_json doc;
  doc["algebra"] = a.name();
  doc["element"] = d.element;
  doc["l1"] = d.l1.universe;
  doc["l2"] = d.l2.universe;
  ordered_json phi = ordered_json::array();
  for (const auto& [i, j] : d.phi) phi.push_back({i, j});
  doc["phi"] = std::move(phi);
  doc["verified"] = d.verified;
  if (opt.json) {
    out << doc.dump(2) << "\n";
  } else {
    out << a.name() << " ~= L1 x L2 along element " << d.element << "\n";
    out << "  L1 = " << set_text(d.l1.universe) << " (" << d.l1.algebra.size() << " elements)\n";
    out << "  L2 = " << set_text(d.l2.universe) << " (" << d.l2.algebra.size() << " elements)\n";
    out << "  phi verified: " << (d.verified ? "yes" : "no") << "\n";
  }
  return d.verified ? 0 : 1;
}

int cmd_congruences(const CommonOptions& opt, const std::string& signature, std::ostream& out) {
  const FiniteAlgebra a = load_algebra(opt.file);
  const Signature sig = parse_signature(signature, a);
  const ConLattice con = all_congruences(a, sig);
  const StructuralPredicates pred = structural_predicates(a, con);
  const auto factors = factor_pairs(a, con);
  if (opt.json) {
    ordered_json doc;
    doc["algebra"] = a.name();
    doc["count"] = con.congruences.size();
    ordered_json list = ordered_json::array();
    for (const auto& c : con.congruences) list.push_back(blocks_json(c));
    doc["congruences"] = std::move(list);
    ordered_json fps = ordered_json::array();
    for (auto [i, j] : factors) fps.push_back({i, j});
    doc["factor_pairs"] = std::move(fps);
    doc["directly_indecomposable"] = pred.directly_indecomposable;
    doc["subdirectly_irreducible"] = pred.subdirectly_irreducible;
    doc["simple"] = pred.simple;
    doc["reduced"] = pred.reduced;
    out << doc.dump(2) << "\n";
  } else {
    out << "Con(" << a.name() << "): " << con.congruences.size() << " congruences\n";
    for (size_t i = 0; i < con.congruences.size(); ++i)
      out << "  [" << i << "] " << blocks_text(con.congruences[i]) << "\n";
    out << "factor pairs:";
    for (auto [i, j] : factors) out << " (" << i << "," << j << ")";
    out << "\ndirectly indecomposable: " << (pred.directly_indecomposable ? "yes" : "no")
        << "\nsubdirectly irreducible: " << (pred.subdirectly_irreducible ? "yes" : "no")
        << "\nsimple: " << (pred.simple ? "yes" : "no")
        << "\nreduced: " << (pred.reduced ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_ideals(const CommonOptions& opt, int max_size, std::ostream& out) {
  const FiniteAlgebra a = load_algebra(opt.file);
  const ConLattice con = all_congruences(a);
  auto records = ursini_ideals(a, con);
  // Also list the lattice ideals that are not congruence kernels.
  std::vector<IdealRecord> rest;
  for (Mask m : lattice_ideals(a, max_size)) {
    if (std::any_of(records.begin(), records.end(),
                    [&](const IdealRecord& r) { return r.mask == m; }))
      continue;
    IdealRecord rec;
    rec.mask = m;
    rec.elements = mask_elements(m);
    rec.lattice_ideal = true;
    if (is_pbzstar_algebra(a)) {
      rec.p_ideal = is_p_ideal(a, m).holds;
      if (rec.p_ideal) rec.weak_de_morgan = is_weak_de_morgan(a, m).holds;
    }
    rest.push_back(std::move(rec));
  }
  records.insert(records.end(), rest.begin(), rest.end());
  std::sort(records.begin(), records.end(), [](const IdealRecord& l, const IdealRecord& r) {
    return std::make_pair(l.elements.size(), l.elements) <
           std::make_pair(r.elements.size(), r.elements);
  });
  if (opt.json) {
    ordered_json arr = ordered_json::array();
    for (const auto& rec : records) {
      ordered_json doc;
      doc["elements"] = rec.elements;
      doc["lattice_ideal"] = rec.lattice_ideal;
      doc["p_ideal"] = rec.p_ideal;
      doc["ursini"] = rec.ursini;
      doc["weak_de_morgan"] = rec.weak_de_morgan;
      if (rec.delta) doc["delta"] = blocks_json(*rec.delta);
      if (rec.epsilon) doc["epsilon"] = blocks_json(*rec.epsilon);
      arr.push_back(std::move(doc));
    }
    out << arr.dump(2) << "\n";
  } else {
    out << "ideals of " << a.name() << ":\n";
    for (const auto& rec : records) {
      out << "  " << set_text(rec.elements) << "  lattice" << (rec.lattice_ideal ? kYes : kNo)
          << " p" << (rec.p_ideal ? kYes : kNo) << " ursini" << (rec.ursini ? kYes : kNo)
          << " wdm" << (rec.weak_de_morgan ? kYes : kNo);
      if (rec.delta) out << "  delta=" << blocks_text(*rec.delta);
      if (rec.epsilon) out << " epsilon=" << blocks_text(*rec.epsilon);
      out << "\n";
    }
  }
  return 0;
}

int cmd_rho(const CommonOptions& opt, const std::string& ideal_text, std::ostream& out) {
  const FiniteAlgebra a = load_algebra(opt.file);
  std::vector<Element> elements;
  std::stringstream ss{ideal_text.empty() ? std::string("0") : ideal_text};
  for (std::string part; std::getline(ss, part, ',');)
    if (!part.empty()) elements.push_back(std::stoi(part));
  const Mask ideal = elements_mask(elements);
  const ModalPairRelation rel = rho(a, ideal);
  const auto cong = relation_is_congruence(a, rel);
  if (opt.json) {
    ordered_json doc;
    doc["algebra"] = a.name();
    doc["ideal"] = mask_elements(ideal);
    ordered_json pairs = ordered_json::array();
    for (const auto& [x, y] : rel.pairs()) pairs.push_back({x, y});
    doc["pairs"] = std::move(pairs);
    doc["equivalence"] = rel.is_equivalence();
    doc["congruence"] = cong.holds;
    if (cong.witness)
      doc["witness"] = {{"a", (*cong.witness)[0]}, {"b", (*cong.witness)[1]}, {"c", (*cong.witness)[2]}};
    out << doc.dump(2) << "\n";
  } else {
    out << "rho(" << set_text(mask_elements(ideal)) << ") on " << a.name() << ":";
    for (const auto& [x, y] : rel.pairs()) out << " (" << x << "," << y << ")";
    out << "\nequivalence: yes\ncongruence: " << (cong.holds ? "yes" : "no");
    if (cong.witness)
      out << "  (breaks at a=" << (*cong.witness)[0] << " b=" << (*cong.witness)[1]
          << " c=" << (*cong.witness)[2] << ")";
    out << "\n";
  }
  return 0;
}

ClassLabel parse_label(const std::string& text) {
  static const std::pair<const char*, ClassLabel> names[] = {
      {"bi", ClassLabel::BI},        {"pka", ClassLabel::PKA},    {"ol", ClassLabel::OL},
      {"oml", ClassLabel::OML},      {"para", ClassLabel::PARA},  {"bzl", ClassLabel::BZL},
      {"bzstar", ClassLabel::BZSTAR}, {"bz*", ClassLabel::BZSTAR}, {"pbzstar", ClassLabel::PBZSTAR},
      {"pbz*", ClassLabel::PBZSTAR}, {"aol", ClassLabel::AOL}};
  std::string lower;
  for (char c : text) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (const auto& [name, label] : names)
    if (lower == name) return label;
  throw AlgebraError(ErrorCode::BadInput, "unknown class label " + text);
}

int cmd_enumerate(int max_size, const std::string& label_text, bool count_only, bool json,
                  std::ostream& out) {
  const ClassLabel target = label_text.empty() ? ClassLabel::PBZSTAR : parse_label(label_text);
  ordered_json stream = ordered_json::array();
  for (int n = 1; n <= max_size; ++n) {
    int count = 0;
    for (const Lattice& lat : enumerate_lattices(n)) {
      for (auto& a : enumerate_expansions(lat, target)) {
        ++count;
        if (!count_only && json)
          stream.push_back(algebra_to_json(
              a.renamed(std::string(to_string(target)) + "-" + std::to_string(n) + "-" +
                        std::to_string(count))));
      }
    }
    if (!json) out << "size " << n << ": " << count << " algebras in class " << to_string(target) << "\n";
  }
  if (json) out << stream.dump(2) << "\n";
  return 0;
}

int cmd_catalog(const std::string& name, bool dump, bool json, std::ostream& out) {
  if (name.empty()) {
    if (json) {
      ordered_json arr = ordered_json::array();
      for (const auto& entry : catalog_entries()) {
        const FiniteAlgebra a = build_catalog_algebra(entry.name);
        arr.push_back({{"name", entry.name}, {"size", a.size()}, {"description", entry.description}});
      }
      out << arr.dump(2) << "\n";
    } else {
      for (const auto& entry : catalog_entries()) {
        const FiniteAlgebra a = build_catalog_algebra(entry.name);
        out << std::left << std::setw(10) << entry.name << std::setw(4) << a.size()
            << entry.description << "\n";
      }
    }
    return 0;
  }
  const FiniteAlgebra a = build_catalog_algebra(name);
  if (dump || json) {
    out << algebra_to_json(a).dump(2) << "\n";
  } else {
    print_report(classify(a), a.size(), out);
  }
  return 0;
}

int cmd_verify(int max_size, bool catalog_only, bool json, std::ostream& out) {
  const SuiteReport report = run_verification_suite({max_size, catalog_only});
  if (json) {
    ordered_json doc;
    doc["algebras"] = report.algebras;
    ordered_json rows = ordered_json::array();
    for (const auto& r : report.results) {
      ordered_json row;
      row["theorem"] = r.name;
      row["checked"] = r.checked;
      row["failures"] = r.failures;
      if (!r.first_counterexample.empty()) row["counterexample"] = r.first_counterexample;
      rows.push_back(std::move(row));
    }
    doc["results"] = std::move(rows);
    doc["all_passed"] = report.all_passed();
    out << doc.dump(2) << "\n";
  } else {
    out << "verification over " << report.algebras << " algebras\n";
    for (const auto& r : report.results) {
      out << "  " << std::left << std::setw(50) << r.name << std::right << std::setw(5)
          << r.checked << std::setw(4) << (r.failures == 0 ? " ok" : " FAIL");
      if (!r.first_counterexample.empty()) out << "  " << r.first_counterexample;
      out << "\n";
    }
    out << (report.all_passed() ? "ALL PASSED" : "FAILURES FOUND") << "\n";
  }
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite-model workbench for Brouwer-Zadeh style lattices"};
  app.require_subcommand(1);

  CommonOptions classify_opt, check_opt, center_opt, decompose_opt, congruence_opt, ideal_opt,
      rho_opt;

  auto* classify_cmd = app.add_subcommand("classify", "class labels, identities and sharp sets");
  classify_cmd->add_option("file", classify_opt.file, "algebra JSON document")->required();
  classify_cmd->add_flag("--json", classify_opt.json, "machine-readable report");
  classify_cmd->add_flag("--dump", classify_opt.dump, "echo the validated algebra as JSON");

  std::string check_identity_name, check_lhs, check_rhs;
  auto* check_cmd = app.add_subcommand("check", "test an identity by exhaustive assignment");
  check_cmd->add_option("file", check_opt.file)->required();
  check_cmd->add_option("--identity", check_identity_name, "catalog identity name");
  check_cmd->add_option("--lhs", check_lhs, "left term");
  check_cmd->add_option("--rhs", check_rhs, "right term");
  check_cmd->add_flag("--json", check_opt.json);

  auto* center_cmd = app.add_subcommand("center", "commutation relations and the centre");
  center_cmd->add_option("file", center_opt.file)->required();
  center_cmd->add_flag("--json", center_opt.json);

  int decompose_element = 0;
  auto* decompose_cmd = app.add_subcommand("decompose", "interval direct decomposition");
  decompose_cmd->add_option("file", decompose_opt.file)->required();
  decompose_cmd->add_option("--element", decompose_element, "split element")->required();
  decompose_cmd->add_flag("--json", decompose_opt.json);

  std::string signature;
  auto* congruence_cmd = app.add_subcommand("congruences", "the full congruence lattice");
  congruence_cmd->add_option("file", congruence_opt.file)->required();
  congruence_cmd->add_option("--signature", signature, "bi | bzl (default: all operations)");
  congruence_cmd->add_flag("--json", congruence_opt.json);

  int ideals_max = 20;
  auto* ideals_cmd = app.add_subcommand("ideals", "lattice/p/Ursini/weak De Morgan ideals");
  ideals_cmd->add_option("file", ideal_opt.file)->required();
  ideals_cmd->add_option("--max-size", ideals_max, "ideal enumeration cap");
  ideals_cmd->add_flag("--json", ideal_opt.json);

  std::string rho_ideal = "0";
  auto* rho_cmd = app.add_subcommand("rho", "modal equivalence relation of a p-ideal");
  rho_cmd->add_option("file", rho_opt.file)->required();
  rho_cmd->add_option("--ideal", rho_ideal, "comma-separated ideal elements (default {0})");
  rho_cmd->add_flag("--json", rho_opt.json);

  int enum_max = 5;
  std::string enum_class;
  bool enum_count_only = false, enum_json = false;
  auto* enum_cmd = app.add_subcommand("enumerate", "small algebras up to isomorphism");
  enum_cmd->add_option("--max-size", enum_max, "largest universe to enumerate");
  enum_cmd->add_option("--class", enum_class, "target class label (default PBZ*)");
  enum_cmd->add_flag("--count-only", enum_count_only);
  enum_cmd->add_flag("--json", enum_json);

  std::string catalog_name;
  bool catalog_dump = false, catalog_json = false;
  auto* catalog_cmd = app.add_subcommand("catalog", "named algebras from the literature");
  catalog_cmd->add_option("name", catalog_name, "entry name or product like D3xD2");
  catalog_cmd->add_flag("--dump", catalog_dump, "emit the algebra document");
  catalog_cmd->add_flag("--json", catalog_json);

  int verify_max = 6;
  bool verify_catalog_only = false, verify_json = false;
  auto* verify_cmd = app.add_subcommand("verify", "run the structure-theorem suite");
  verify_cmd->add_option("--max-size", verify_max, "enumeration bound");
  verify_cmd->add_flag("--catalog-only", verify_catalog_only);
  verify_cmd->add_flag("--json", verify_json);

  std::vector<const char*> argv;
  argv.push_back("pbzlat");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(classify_opt, out);
    if (check_cmd->parsed())
      return cmd_check(check_opt, check_identity_name, check_lhs, check_rhs, out);
    if (center_cmd->parsed()) return cmd_center(center_opt, out);
    if (decompose_cmd->parsed()) return cmd_decompose(decompose_opt, decompose_element, out);
    if (congruence_cmd->parsed()) return cmd_congruences(congruence_opt, signature, out);
    if (ideals_cmd->parsed()) return cmd_ideals(ideal_opt, ideals_max, out);
    if (rho_cmd->parsed()) return cmd_rho(rho_opt, rho_ideal, out);
    if (enum_cmd->parsed()) return cmd_enumerate(enum_max, enum_class, enum_count_only, enum_json, out);
    if (catalog_cmd->parsed()) return cmd_catalog(catalog_name, catalog_dump, catalog_json, out);
    if (verify_cmd->parsed()) return cmd_verify(verify_max, verify_catalog_only, verify_json, out);
  } catch (const AlgebraError& e) {
    err << e.what() << "\n";
    return error_exit_code(e.code());
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 2;
  }
  err << "no command\n";
  return 2;
}

}  // namespace pbzlat
