// kedl: command-line front end for parsing, reasoning, the bounded oracle,
// the axiom/property suite and knowledge-element translation.
//
// Exit codes: 0 affirmative verdict, 1 negative verdict, 2 input error.

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "kedl/km.hpp"
#include "kedl/oracle.hpp"
#include "kedl/parser.hpp"
#include "kedl/semantics.hpp"
#include "kedl/suite.hpp"
#include "kedl/tableau.hpp"

using json = nlohmann::ordered_json;
using namespace kedl;

namespace {

constexpr const char* kSchema = "kedl-report/1";

// Bad command-line input that is not a parse or sort error of a KEDL text.
class InputError : public Error {
 public:
  using Error::Error;
};

struct Settings {
  std::string format = "text";
  bool timings = true;
  std::string mode = "at-most-one";
  std::string bounds;  // empty: KEDL_BOUNDS or the default
};

struct Report {
  json verdicts = json::array();
  std::ostringstream text;
  int exit_code = 0;
  double seconds = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError("cannot write '" + path + "'");
}

Functionality mode_of(const Settings& s) {
  auto m = parse_functionality(s.mode);
  if (!m) throw InputError("unknown mode '" + s.mode + "' (at-most-one, exactly-one, unrestricted)");
  return *m;
}

Bounds bounds_of(const Settings& s) {
  std::string text = s.bounds;
  if (text.empty())
    if (const char* env = std::getenv("KEDL_BOUNDS")) text = env;
  if (text.empty()) return Bounds{2, 2, mode_of(s)};
  auto b = parse_bounds(text, mode_of(s));
  if (!b) throw InputError("bad bounds '" + text + "' (expected d,s with 1 <= d,s <= " +
                           std::to_string(kMaxDomainSize) + ")");
  return *b;
}

std::string bounds_text(const Bounds& b) {
  return "(" + std::to_string(b.max_delta) + "," + std::to_string(b.max_sigma) + ")";
}

TableauOptions tableau_options(const Settings& s) {
  TableauOptions o;
  o.mode = mode_of(s);
  return o;
}

std::string set_text(const ElementSet& set, const Interpretation& i, Sort sort) {
  std::string out = "{";
  for (std::size_t k = set.find_first(); k != ElementSet::npos; k = set.find_next(k))
    out += (out.size() > 1 ? ", " : "") + i.element_name(sort, k);
  return out + "}";
}

void add_trace(Report& r, json& v, const std::vector<TraceStep>& trace) {
  json steps = json::array();
  for (const auto& t : trace) steps.push_back({{"rule", t.rule}, {"node", t.node}, {"concept", t.concept_text}});
  v["trace"] = steps;
  r.text << "trace:\n" << format_trace(trace);
}

// Shared by check and sat.
void report_sat(Report& r, const SatResult& result, const char* yes, const char* no,
                const std::string& model_out) {
  json v;
  if (const auto* s = std::get_if<Satisfiable>(&result)) {
    const std::string model = serialize_interpretation(s->witness);
    v = {{"verdict", yes}, {"witness", model}};
    r.text << yes << "\n";
    if (!s->merges.empty()) {
      json merges = json::array();
      for (const auto& [a, b] : s->merges) {
        merges.push_back({a, b});
        r.text << "merged: " << a << " = " << b << "\n";
      }
      v["merges"] = merges;
    }
    r.text << "witness:\n" << model;
    if (!model_out.empty()) write_file(model_out, model);
  } else {
    v = {{"verdict", no}};
    r.text << no << "\n";
    add_trace(r, v, std::get<Unsatisfiable>(result).trace);
    r.exit_code = 1;
  }
  r.verdicts.push_back(v);
}

Report cmd_check(const Settings& s, const std::string& file, const std::string& model_out) {
  Report r;
  const KnowledgeBase kb = parse_kb(read_file(file));
  report_sat(r, is_consistent(kb, tableau_options(s)), "consistent", "inconsistent", model_out);
  return r;
}

Report cmd_sat(const Settings& s, const std::string& file, const std::string& expr, const std::string& model_out) {
  Report r;
  const KnowledgeBase kb = parse_kb(read_file(file));
  const Concept c = parse_concept(expr, kb.sig);
  report_sat(r, is_satisfiable(c, kb, tableau_options(s)), "satisfiable", "unsatisfiable", model_out);
  r.verdicts.back()["concept"] = c.to_string();
  return r;
}

void report_bool(Report& r, bool value, json v) {
  v["verdict"] = value;
  r.verdicts.push_back(v);
  r.text << (value ? "true" : "false") << "\n";
  r.exit_code = value ? 0 : 1;
}

Report cmd_subsumes(const Settings& s, const std::string& file, const std::string& sub, const std::string& sup) {
  Report r;
  const KnowledgeBase kb = parse_kb(read_file(file));
  const Concept c = parse_concept(sub, kb.sig);
  const Concept d = parse_concept(sup, kb.sig, check_sort(c, kb.sig));
  report_bool(r, subsumes(kb, c, d, tableau_options(s)), {{"sub", c.to_string()}, {"sup", d.to_string()}});
  return r;
}

Report cmd_instance(const Settings& s, const std::string& file, const std::string& ind, const std::string& expr) {
  Report r;
  const KnowledgeBase kb = parse_kb(read_file(file));
  const auto sort = kb.sig.individual_sort(ind);
  if (!sort) throw SortError(std::nullopt, "individual", ind, "undeclared individual '" + ind + "'");
  const Concept c = parse_concept(expr, kb.sig, *sort);
  report_bool(r, instance_of(kb, ind, c, tableau_options(s)), {{"individual", ind}, {"concept", c.to_string()}});
  return r;
}

json hierarchy_json(Report& r, const Hierarchy& h, const char* label) {
  json cells = json::array();
  r.text << label << ":\n";
  for (std::size_t i = 0; i < h.cells.size(); ++i) {
    std::string names, parents;
    for (const auto& n : h.cells[i]) names += (names.empty() ? "" : " = ") + n;
    json ps = json::array();
    for (int p : h.parents[i]) {
      std::string cell;
      for (const auto& n : h.cells[p]) cell += (cell.empty() ? "" : " = ") + n;
      parents += (parents.empty() ? "" : ", ") + cell;
      ps.push_back(h.cells[p]);
    }
    r.text << "  " << names << " < " << (parents.empty() ? "top" : parents) << "\n";
    cells.push_back({{"names", h.cells[i]}, {"parents", ps}});
  }
  return cells;
}

Report cmd_classify(const Settings& s, const std::string& file) {
  Report r;
  const KnowledgeBase kb = parse_kb(read_file(file));
  if (const auto consistent = is_consistent(kb, tableau_options(s)); !is_sat(consistent)) {
    json v{{"verdict", "inconsistent"}};
    r.text << "inconsistent\n";
    add_trace(r, v, std::get<Unsatisfiable>(consistent).trace);
    r.verdicts.push_back(v);
    r.exit_code = 1;
    return r;
  }
  const Classification c = classify(kb, tableau_options(s));
  json v{{"verdict", "classified"}};
  v["object"] = hierarchy_json(r, c.object, "object");
  v["attribute"] = hierarchy_json(r, c.attribute, "attribute");
  r.verdicts.push_back(v);
  return r;
}

Report cmd_verify_suite(const Settings& s, const std::string& only, bool no_oracle, unsigned threads) {
  Report r;
  SuiteOptions opts;
  opts.bounds = bounds_of(s);
  if (!only.empty()) {
    opts.only = only;
    bool any = false;
    for (const auto& item : suite_items()) any = any || suite_filter_matches(only, item.id);
    if (!any) throw InputError("no suite item matches '" + only + "'");
  }
  opts.run_oracle = !no_oracle;
  opts.threads = threads;
  const auto results = verify_suite(opts);
  std::size_t passed = 0;
  for (const auto& res : results) {
    json v{{"item", res.id}, {"group", res.group}, {"statement", res.statement},
           {"tableau", res.tableau_valid ? "valid" : "invalid"}};
    v["oracle"] = res.oracle_valid ? json(*res.oracle_valid ? "valid" : "countermodel") : json(nullptr);
    v["verdict"] = res.passed() ? "pass" : "fail";
    if (res.countermodel) v["countermodel"] = serialize_interpretation(*res.countermodel);
    if (s.timings) v["seconds"] = res.seconds;
    r.verdicts.push_back(v);
    passed += res.passed();
    r.text << (res.passed() ? "PASS " : "FAIL ") << res.id << "  tableau "
           << (res.tableau_valid ? "valid" : "invalid");
    if (res.oracle_valid) r.text << ", oracle " << (*res.oracle_valid ? "valid" : "countermodel");
    r.text << "  " << res.statement << "\n";
    if (res.countermodel) r.text << serialize_interpretation(*res.countermodel);
  }
  r.text << passed << "/" << results.size() << " passed";
  if (!no_oracle) r.text << " (oracle bounds " << bounds_text(opts.bounds) << ")";
  r.text << "\n";
  r.exit_code = passed == results.size() ? 0 : 1;
  return r;
}

struct OracleArgs {
  std::string kb_file, decl, concept_text, formula_text, model_out;
  bool find = false, count = false, valid = false;
};

Report cmd_oracle(const Settings& s, const OracleArgs& a) {
  Report r;
  if (a.find + a.count + a.valid != 1) throw InputError("give exactly one of --find-model, --count, --valid");
  if (!a.concept_text.empty() && !a.formula_text.empty()) throw InputError("give -c or -f, not both");
  const Bounds b = bounds_of(s);
  KnowledgeBase kb;
  if (!a.kb_file.empty()) kb = parse_kb(read_file(a.kb_file));
  if (!a.decl.empty()) kb.sig.merge(parse_kb(a.decl).sig);
  const std::string& text = a.formula_text.empty() ? a.concept_text : a.formula_text;
  if (!text.empty()) kb.sig = infer_signature(text, kb.sig);

  json v{{"bounds", {b.max_delta, b.max_sigma}}, {"mode", std::string(to_string(b.mode))}};
  auto emit_model = [&](const Interpretation& i, const char* key) {
    const std::string model = serialize_interpretation(i);
    v[key] = model;
    r.text << model;
    if (!a.model_out.empty()) write_file(a.model_out, model);
  };

  if (a.count) {
    if (a.concept_text.empty()) throw InputError("--count needs -c");
    const Concept c = parse_concept(a.concept_text, kb.sig);
    const std::uint64_t n = count_models(c, kb.sig, b);
    v["concept"] = c.to_string();
    v["verdict"] = n;
    r.text << n << "\n";
  } else if (a.find) {
    if (!a.formula_text.empty()) throw InputError("--find-model takes -c, not -f");
    ModelVerdict verdict;
    if (a.concept_text.empty()) {
      verdict = find_model(kb, b);
    } else {
      const Concept c = parse_concept(a.concept_text, kb.sig);
      v["concept"] = c.to_string();
      verdict = kb.empty() ? find_model(c, kb.sig, b) : find_model(kb, c, b);
    }
    if (const auto* m = std::get_if<Model>(&verdict)) {
      v["verdict"] = "model";
      r.text << "model\n";
      emit_model(m->interpretation, "model");
    } else {
      v["verdict"] = "no-model";
      r.text << "no model up to " << bounds_text(b) << "\n";
      r.exit_code = 1;
    }
  } else {
    Formula f;
    if (!a.formula_text.empty()) {
      f = parse_formula(a.formula_text, kb.sig);
    } else if (!a.concept_text.empty()) {
      const Concept c = parse_concept(a.concept_text, kb.sig);
      f = Inclusion{Concept::top(check_sort(c, kb.sig)), c};
    } else {
      throw InputError("--valid needs -c or -f");
    }
    const ValidityVerdict verdict =
        kb.definitions.empty() && kb.inclusions.empty() && kb.abox.empty() ? check_validity_bounded(f, kb.sig, b)
                                                                           : check_validity_bounded(f, kb, b);
    if (const auto* m = std::get_if<Countermodel>(&verdict)) {
      v["verdict"] = "countermodel";
      r.text << "countermodel\n";
      emit_model(m->interpretation, "countermodel");
      r.exit_code = 1;
    } else {
      v["verdict"] = "valid";
      r.text << "no countermodel up to " << bounds_text(b) << "\n";
    }
  }
  r.verdicts.push_back(v);
  return r;
}

Report cmd_km_validate(const std::string& file) {
  Report r;
  const auto violations = validate_km(parse_km(read_file(file)));
  json v{{"verdict", violations.empty() ? "valid" : "invalid"}};
  json list = json::array();
  for (const auto& x : violations) {
    list.push_back({{"element", x.element}, {"field", x.field}, {"message", x.message}});
    r.text << to_string(x) << "\n";
  }
  v["violations"] = list;
  if (violations.empty()) r.text << "valid\n";
  r.verdicts.push_back(v);
  r.exit_code = violations.empty() ? 0 : 1;
  return r;
}

Report cmd_km_translate(const Settings& s, const std::string& file, const std::string& out) {
  Report r;
  const std::string text = emit_kedl(parse_km(read_file(file)));
  json v{{"verdict", "translated"}};
  if (out.empty()) {
    if (s.format == "text") r.text << text;
    else v["kedl"] = text;
  } else {
    write_file(out, text);
    v["output"] = out;
    r.text << "wrote " << out << "\n";
  }
  r.verdicts.push_back(v);
  return r;
}

Report cmd_eval(const Settings& s, const std::string& file, const std::string& model_file,
                const std::string& concept_text, const std::string& formula_text, const std::string& reading) {
  Report r;
  if (concept_text.empty() == formula_text.empty()) throw InputError("give exactly one of -c, -f");
  const KnowledgeBase kb = parse_kb(read_file(file));
  const Interpretation i = parse_interpretation(read_file(model_file), kb.sig, mode_of(s));
  if (auto problems = validate_interpretation(i); !problems.empty())
    throw InputError("invalid interpretation: " + problems.front().where + ": " + problems.front().message);
  json v;
  if (!concept_text.empty()) {
    const Concept c = parse_concept(concept_text, kb.sig);
    const Sort sort = check_sort(c, kb.sig);
    const std::string ext = set_text(extension(c, i), i, sort);
    v = {{"concept", c.to_string()}, {"verdict", ext}};
    r.text << ext << "\n";
  } else {
    Reading rd;
    if (reading == "universal") rd = Reading::Universal;
    else if (reading == "paper-existential") rd = Reading::Existential;
    else throw InputError("unknown reading '" + reading + "' (universal, paper-existential)");
    const bool holds = satisfies_formula(i, parse_formula(formula_text, kb.sig), rd);
    v = {{"formula", formula_text}, {"reading", reading}, {"verdict", holds}};
    r.text << (holds ? "true" : "false") << "\n";
    r.exit_code = holds ? 0 : 1;
  }
  r.verdicts.push_back(v);
  return r;
}

void print_error(const Settings& s, const std::vector<std::string>& command, const std::string& message,
                 const json& details = nullptr) {
  if (s.format == "struct") {
    json out{{"schema", kSchema}, {"command", command}, {"error", message}};
    if (!details.is_null()) out["details"] = details;
    out["exit"] = 2;
    std::cout << out.dump(2) << "\n";
  }
  std::cerr << "error: " << message << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"KEDL reasoner: two-sorted description logic for knowledge elements"};
  app.require_subcommand(1);
  Settings s;
  app.add_option("--format", s.format, "Report format")->check(CLI::IsMember({"text", "struct"}));
  app.add_flag("!--no-timings", s.timings, "Leave timings out of reports");
  app.add_option("--mode", s.mode, "Cross-role functionality: at-most-one, exactly-one, unrestricted");

  std::string kb_file, expr, sub, sup, individual, model_out, only, model_file, formula, reading = "universal",
                                                                                       km_out;
  bool no_oracle = false;
  unsigned threads = 0;
  OracleArgs oa;

  auto* check = app.add_subcommand("check", "Is the knowledge base consistent?");
  check->add_option("kb", kb_file)->required();
  check->add_option("--model-out", model_out, "Write the witness model here");

  auto* sat = app.add_subcommand("sat", "Is a concept satisfiable with respect to the knowledge base?");
  sat->add_option("kb", kb_file)->required();
  sat->add_option("-c,--concept", expr)->required();
  sat->add_option("--model-out", model_out, "Write the witness model here");

  auto* subs = app.add_subcommand("subsumes", "Is -s subsumed by -t?");
  subs->add_option("kb", kb_file)->required();
  subs->add_option("-s,--sub", sub)->required();
  subs->add_option("-t,--sup", sup)->required();

  auto* inst = app.add_subcommand("instance", "Is an individual an instance of a concept?");
  inst->add_option("kb", kb_file)->required();
  inst->add_option("-i,--individual", individual)->required();
  inst->add_option("-c,--concept", expr)->required();

  auto* cls = app.add_subcommand("classify", "Subsumption hierarchy of the named concepts");
  cls->add_option("kb", kb_file)->required();

  auto* suite = app.add_subcommand("verify-suite", "Check every axiom and property by tableau and oracle");
  suite->add_option("--bounds", s.bounds, "Oracle bounds d,s (default KEDL_BOUNDS or 2,2)");
  suite->add_option("--only", only, "Item id or group, e.g. axiom16 or property10");
  suite->add_flag("--no-oracle", no_oracle, "Tableau only");
  suite->add_option("--threads", threads, "Worker threads (0: all cores)");

  auto* oracle = app.add_subcommand("oracle", "Bounded model finding by exhaustive search");
  oracle->add_option("--kb", oa.kb_file, "Knowledge base whose models are searched");
  oracle->add_option("--decl", oa.decl, "Declarations, e.g. \"xrole r; aconcept A;\"");
  oracle->add_option("-c,--concept", oa.concept_text);
  oracle->add_option("-f,--formula", oa.formula_text, "Inclusion or assertion");
  oracle->add_flag("--find-model", oa.find, "A model with a non-empty concept (or of the KB)");
  oracle->add_flag("--count", oa.count, "Interpretations of the signature where the concept is non-empty");
  oracle->add_flag("--valid", oa.valid, "Search for a countermodel of -f, or of top <= -c");
  oracle->add_option("--bounds", s.bounds, "Bounds d,s (default KEDL_BOUNDS or 2,2)");
  oracle->add_option("--model-out", oa.model_out, "Write the model or countermodel here");
  oracle->footer(
      "Names the declarations leave out are guessed: names after some/all/inv are roles (cross, then object, "
      "then attribute), the rest atoms (object, then attribute); the first guess that sort-checks is used.");

  auto* km = app.add_subcommand("km", "Knowledge-element files");
  km->require_subcommand(1);
  auto* km_translate = km->add_subcommand("translate", "Translate a .km file into a .kedl knowledge base");
  km_translate->add_option("file", kb_file)->required();
  km_translate->add_option("-o,--output", km_out);
  auto* km_validate = km->add_subcommand("validate", "List invariant violations of a .km file");
  km_validate->add_option("file", kb_file)->required();

  auto* eval = app.add_subcommand("eval", "Evaluate a concept or formula in a given interpretation");
  eval->add_option("kb", kb_file)->required();
  eval->add_option("--model", model_file, "Interpretation file")->required();
  eval->add_option("-c,--concept", expr);
  eval->add_option("-f,--formula", formula);
  eval->add_option("--reading", reading, "universal or paper-existential");

  std::vector<std::string> command(argv + 1, argv + argc);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  Report r;
  try {
    if (*check) r = cmd_check(s, kb_file, model_out);
    else if (*sat) r = cmd_sat(s, kb_file, expr, model_out);
    else if (*subs) r = cmd_subsumes(s, kb_file, sub, sup);
    else if (*inst) r = cmd_instance(s, kb_file, individual, expr);
    else if (*cls) r = cmd_classify(s, kb_file);
    else if (*suite) r = cmd_verify_suite(s, only, no_oracle, threads);
    else if (*oracle) r = cmd_oracle(s, oa);
    else if (*km_translate) r = cmd_km_translate(s, kb_file, km_out);
    else if (*km_validate) r = cmd_km_validate(kb_file);
    else if (*eval) r = cmd_eval(s, kb_file, model_file, expr, formula, reading);
  } catch (const KmError& e) {
    json list = json::array();
    for (const auto& v : e.violations())
      list.push_back({{"element", v.element}, {"field", v.field}, {"message", v.message}});
    print_error(s, command, e.what(), list);
    return 2;
  } catch (const SortError& e) {
    json details{{"expected", e.expected()}, {"found", e.found()}};
    if (e.where()) details["location"] = {e.where()->line, e.where()->column};
    print_error(s, command, e.what(), details);
    return 2;
  } catch (const ParseError& e) {
    print_error(s, command, e.what(), {{"location", {e.where().line, e.where().column}}});
    return 2;
  } catch (const Error& e) {
    print_error(s, command, e.what());
    return 2;
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (s.format == "struct") {
    json out{{"schema", kSchema}, {"command", command}, {"verdicts", r.verdicts}, {"exit", r.exit_code}};
    if (s.timings) out["timings"] = {{"total_seconds", r.seconds}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << r.text.str();
    if (s.timings && !*km_translate) std::cout << "time: " << r.seconds << " s\n";
  }
  return r.exit_code;
}
