#include "flatcheck/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "flatcheck/context.hpp"
#include "flatcheck/errors.hpp"
#include "flatcheck/flatness.hpp"
#include "flatcheck/openness.hpp"
#include "flatcheck/operations.hpp"
#include "flatcheck/parser.hpp"

namespace flatcheck::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::vector<std::string> files;
  std::string order = "grevlex";
  std::string by;
  bool json = false;
  bool assume_domain = false;
  bool assume_embedding = false;
  bool pure_dimensional = false;
  bool normal_target = false;
  int chart = 0;  // 1-based; 0 = automatic
  double timeout = 0;
};

ProblemFile load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_problem(buf.str());
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

MonomialOrder order_of(const Options& o) {
  auto kind = parse_order_kind(o.order);
  if (!kind) throw InputError("unknown order '" + o.order + "'");
  MonomialOrder order;
  order.kind = *kind;
  return order;
}

std::optional<std::size_t> chart_of(const Options& o, const UniversePtr& u) {
  if (o.chart == 0) return std::nullopt;
  const auto n = u->indices(VarRole::Base).size();
  if (o.chart < 0 || static_cast<std::size_t>(o.chart) > n)
    throw InputError("--chart must be between 1 and " + std::to_string(n));
  return static_cast<std::size_t>(o.chart - 1);
}

const Submodule& main_module(const ProblemFile& p) {
  if (p.module) return *p.module;
  if (p.base_ideal) return *p.base_ideal;
  throw InputError("problem has neither a module nor an ideal block");
}

json variables(const UniversePtr& u) {
  json names = json::array();
  for (std::size_t i = 0; i < u->size(); ++i) names.push_back(u->name(i));
  return names;
}

json elements(const std::vector<FreeModuleElement>& gens) {
  json list = json::array();
  for (const auto& g : gens) list.push_back(to_string(g));
  return list;
}

json stats_json(const EngineStats& s, double seconds) {
  return {{"groebner_calls", s.groebner_calls}, {"pairs_created", s.pairs_created},
          {"pairs_reduced", s.pairs_reduced},   {"zero_reductions", s.zero_reductions},
          {"max_basis_size", s.max_basis_size}, {"largest_input", s.largest_input},
          {"wall_seconds", seconds}};
}

struct Outcome {
  json report;
  int code = kOk;
};

Outcome run_flat(const Options& o) {
  const auto problem = load(o.files.at(0));
  const auto pres = problem.module_presentation();
  FlatOptions fo;
  fo.order = order_of(o);
  fo.assume_domain = o.assume_domain || problem.has_flag("assume-domain");
  fo.assume_embedding = o.assume_embedding || problem.has_flag("assume-embedding");
  fo.exceptional = chart_of(o, pres.universe);
  const auto v = flat_test(pres, fo);
  Outcome r;
  r.report["status"] = std::string(to_string(v.status));
  r.report["witness"] = v.witness ? json(to_string(*v.witness)) : json(nullptr);
  r.report["multiplier"] = v.multiplier ? json(to_string(*v.multiplier)) : json(nullptr);
  r.report["variables"] = v.module ? variables(v.module->universe()) : variables(pres.universe);
  r.report["citation"] = v.citation;
  r.report["chart"] = v.chart;
  r.report["note"] = v.note;
  json assumptions = json::array();
  if (fo.assume_domain) assumptions.push_back("assume-domain");
  if (fo.assume_embedding) assumptions.push_back("assume-embedding");
  r.report["assumptions"] = assumptions;
  if (v.strict_transform) r.report["result"] = elements(v.strict_transform->generators());
  switch (v.status) {
    case FlatStatus::Flat: r.code = kOk; break;
    case FlatStatus::NotFlat: r.code = kNegative; break;
    case FlatStatus::ZeroDivisorFound: r.code = kWeak; break;
    case FlatStatus::Improper: r.code = kImproper; break;
  }
  return r;
}

Outcome run_open(const Options& o) {
  const auto problem = load(o.files.at(0));
  auto mp = problem.map_presentation();
  mp.pure_dimensional = mp.pure_dimensional || o.pure_dimensional;
  mp.normal_target = mp.normal_target || o.normal_target;
  OpenOptions oo;
  oo.exceptional = chart_of(o, mp.universe);
  Outcome r;
  OpennessVerdict v;
  try {
    v = openness_verdict(mp, oo);
  } catch (const DomainError& e) {
    r.report["status"] = "Improper";
    r.report["witness"] = nullptr;
    r.report["citation"] = "";
    r.report["chart"] = "";
    r.report["note"] = e.what();
    r.code = kImproper;
    return r;
  }
  r.report["status"] = std::string(to_string(v.status));
  r.report["witness"] = v.vertical.witness ? json(to_string(*v.vertical.witness)) : json(nullptr);
  r.report["variables"] = variables(v.pullback.universe());
  r.report["citation"] = v.citation;
  r.report["chart"] = v.chart;
  r.report["note"] = v.note;
  r.report["vertical_component"] = v.vertical.vertical;
  json assumptions = json::array();
  if (mp.pure_dimensional) assumptions.push_back("pure-dimensional");
  if (mp.normal_target) assumptions.push_back("normal-target");
  r.report["assumptions"] = assumptions;
  r.report["pullback"] = elements(v.pullback.generators());
  r.report["result"] = elements(v.vertical.saturation.generators());
  r.report["exponent"] = v.vertical.exponent;
  switch (v.status) {
    case OpenStatus::Open: r.code = kOk; break;
    case OpenStatus::NotOpen: r.code = kNegative; break;
    case OpenStatus::Inconclusive: r.code = kWeak; break;
  }
  return r;
}

Outcome run_algebra(const std::string& command, const Options& o) {
  const auto order = order_of(o);
  Outcome r;
  r.report["status"] = "OK";
  if (command == "intersect") {
    if (o.files.size() < 2) throw InputError("intersect needs at least two files");
    std::vector<ProblemFile> problems;
    for (const auto& f : o.files) problems.push_back(load(f));
    Submodule acc = main_module(problems[0]);
    for (std::size_t i = 1; i < problems.size(); ++i) {
      const auto& m = main_module(problems[i]);
      if (!same_universe(m.universe(), acc.universe())) throw InputError("intersect: files declare different rings");
      acc = intersect(acc, Submodule(acc.universe(), m.rank(), m.generators()), order);
    }
    acc = buchberger(acc, order);
    r.report["variables"] = variables(acc.universe());
    r.report["result"] = elements(acc.generators());
    return r;
  }
  if (o.files.size() != 1) throw InputError(command + " takes exactly one file");
  const auto problem = load(o.files[0]);
  if (command == "strict-transform") {
    if (!problem.base_ideal) throw InputError("strict-transform needs a base ideal block");
    const auto& ideal = *problem.base_ideal;
    const auto e = chart_of(o, ideal.universe());
    const auto chart = e ? BlowupChart::with_exceptional(ideal.universe(), *e) : BlowupChart::standard(ideal.universe());
    const auto st = strict_transform(ideal, chart);
    const auto basis = buchberger(st.ideal, order);
    r.report["variables"] = variables(basis.universe());
    r.report["result"] = elements(basis.generators());
    r.report["exponent"] = st.exponent;
    r.report["chart"] = "exceptional " + ideal.universe()->name(chart.exceptional_position());
    r.report["proper_at_origin"] = vanishes_at_origin(basis, order);
    return r;
  }
  const Submodule& m = main_module(problem);
  r.report["variables"] = variables(m.universe());
  if (command == "gb") {
    r.report["result"] = elements(buchberger(m, order).generators());
    return r;
  }
  if (o.by.empty()) throw InputError(command + " needs --by <polynomial>");
  const Polynomial f = parse_polynomial(o.by, m.universe());
  if (f.is_zero()) throw InputError("--by must be a nonzero polynomial");
  if (command == "colon") {
    r.report["result"] = elements(colon_element(m, f, order).generators());
  } else {
    const auto sat = saturate_element(m, f, order);
    r.report["result"] = elements(sat.module.generators());
    r.report["exponent"] = sat.exponent;
  }
  return r;
}

void summary(std::ostream& out, const json& report) {
  out << "status: " << report["status"].get<std::string>() << "\n";
  auto text = [&](const char* key, const char* label) {
    if (report.contains(key) && report[key].is_string() && !report[key].get<std::string>().empty())
      out << label << ": " << report[key].get<std::string>() << "\n";
  };
  text("witness", "witness");
  text("multiplier", "multiplier");
  text("chart", "chart");
  text("citation", "criterion");
  text("note", "note");
  if (report.contains("result")) {
    out << "result: (";
    bool first = true;
    for (const auto& g : report["result"]) {
      out << (first ? "" : ", ") << g.get<std::string>();
      first = false;
    }
    out << ")\n";
  }
  if (report.contains("exponent")) out << "exponent: " << report["exponent"] << "\n";
  const auto& s = report["stats"];
  out << "time: " << s["wall_seconds"].get<double>() << " s, " << s["groebner_calls"] << " Groebner bases, "
      << s["pairs_reduced"] << " pairs reduced, largest basis " << s["max_basis_size"] << "\n";
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--order", o.order, "monomial order")->check(CLI::IsMember({"lex", "grlex", "grevlex"}));
  sub->add_flag("--json", o.json, "print a JSON report instead of the summary");
  sub->add_option("--timeout", o.timeout, "time limit in seconds")->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Flatness and openness tests at the origin via blow-up charts"};
  app.require_subcommand(1);
  Options o;

  auto* flat = app.add_subcommand("flat", "flatness of a module presentation at the origin");
  flat->add_option("file", o.files, "problem file")->required()->expected(1);
  flat->add_flag("--assume-domain", o.assume_domain, "assert that S/I* is a domain");
  flat->add_flag("--assume-embedding", o.assume_embedding, "assert that the base embeds in the chart");
  flat->add_option("--chart", o.chart, "exceptional base variable (1-based)");
  add_common(flat, o);

  auto* open = app.add_subcommand("open", "openness of a polynomial map at the origin");
  open->add_option("file", o.files, "problem file")->required()->expected(1);
  open->add_flag("--pure-dimensional", o.pure_dimensional, "assert that the source is pure-dimensional");
  open->add_flag("--normal-target", o.normal_target, "assert that the target is normal");
  open->add_option("--chart", o.chart, "exceptional base variable (1-based)");
  add_common(open, o);

  auto* gb = app.add_subcommand("gb", "reduced Groebner basis of the module block");
  gb->add_option("file", o.files, "problem file")->required()->expected(1);
  add_common(gb, o);

  auto* colon = app.add_subcommand("colon", "colon of the module block by a polynomial");
  colon->add_option("file", o.files, "problem file")->required()->expected(1);
  colon->add_option("--by", o.by, "polynomial")->required();
  add_common(colon, o);

  auto* saturate = app.add_subcommand("saturate", "saturation of the module block by a polynomial");
  saturate->add_option("file", o.files, "problem file")->required()->expected(1);
  saturate->add_option("--by", o.by, "polynomial")->required();
  add_common(saturate, o);

  auto* strict = app.add_subcommand("strict-transform", "strict transform of the base ideal");
  strict->add_option("file", o.files, "problem file")->required()->expected(1);
  strict->add_option("--chart", o.chart, "exceptional base variable (1-based)");
  add_common(strict, o);

  auto* meet = app.add_subcommand("intersect", "intersection of the modules of several files");
  meet->add_option("files", o.files, "problem files")->required()->expected(2, -1);
  add_common(meet, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  EngineStats stats;
  const auto start = std::chrono::steady_clock::now();
  Outcome result;
  try {
    StatsScope scope(stats);
    std::optional<ScopedDeadline> deadline;
    if (o.timeout > 0)
      deadline.emplace(std::chrono::duration_cast<std::chrono::steady_clock::duration>(
          std::chrono::duration<double>(o.timeout)));
    if (command == "flat")
      result = run_flat(o);
    else if (command == "open")
      result = run_open(o);
    else
      result = run_algebra(command, o);
  } catch (const TimeoutError& e) {
    err << "error: " << e.what() << "\n";
    return kTimeout;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  json report;
  report["command"] = command;
  report["order"] = o.order;
  for (auto& [k, v] : result.report.items()) report[k] = v;
  report["stats"] = stats_json(stats, seconds);
  if (o.json)
    out << report.dump(2) << "\n";
  else
    summary(out, report);
  return result.code;
}

}  // namespace flatcheck::cli
