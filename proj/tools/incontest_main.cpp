// Copyright 2026 The incontest Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exit codes: 0 pass, 1 property failure, 2 input error, 3 mechanism-spec
// error, 4 budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "incontest/generate.hpp"
#include "incontest/json_io.hpp"
#include "incontest/mechanisms.hpp"
#include "incontest/oracle.hpp"
#include "incontest/priority_sets.hpp"
#include "incontest/properties.hpp"

namespace {

using incontest::Assignment;
using incontest::Err;
using incontest::Error;
using incontest::kSelf;
using incontest::MechanismSpec;
using incontest::Problem;
using nlohmann::json;

int exit_code_for(const Error& e) {
  switch (e.code) {
    case Err::kBudgetExceeded:
      return 4;
    case Err::kBadMechanismSpec:
    case Err::kInvalidPeriod:
    case Err::kListCapExceeded:
      return 3;
    default:
      return 2;
  }
}

std::string seat_name(const Problem& p, int v) {
  return v == kSelf ? std::string("-") : p.school_names[v];
}

json seat_json(const Problem& p, int v) {
  return v == kSelf ? json(nullptr) : json(p.school_names[v]);
}

json names_json(const Problem& p, const std::vector<int>& schools) {
  json arr = json::array();
  for (int s : schools) arr.push_back(seat_json(p, s));
  return arr;
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(Err::kParseError, "cannot open output file: " + path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

std::string render(const json& j, const std::string& format) {
  if (format == "json") return j.dump(2);
  // Flat two-column table: one "key value" line per leaf, arrays joined.
  std::ostringstream os;
  for (const auto& [key, value] : j.items()) {
    os << key << "  ";
    if (value.is_array() || value.is_object())
      os << value.dump();
    else if (value.is_null())
      os << "-";
    else if (value.is_string())
      os << value.get<std::string>();
    else
      os << value.dump();
    os << '\n';
  }
  return os.str();
}

const char* complaint_kind_name(incontest::Complaint::Kind k) {
  switch (k) {
    case incontest::Complaint::Kind::kUnacceptableSeat:
      return "unacceptable_seat";
    case incontest::Complaint::Kind::kWastedSeat:
      return "wasted_seat";
    case incontest::Complaint::Kind::kTopPriorityViolation:
      return "top_priority_violation";
  }
  return "?";
}

json audit_json(const Problem& p, const incontest::AuditReport& rep) {
  json out;
  out["incontestable"] = rep.incontestable;
  json arr = json::array();
  for (const auto& c : rep.complaints) {
    json e;
    e["student"] = p.student_names[c.student];
    e["kind"] = complaint_kind_name(c.kind);
    if (c.kind == incontest::Complaint::Kind::kWastedSeat)
      e["school"] = p.school_names[c.school];
    if (c.kind == incontest::Complaint::Kind::kTopPriorityViolation)
      e["set"] = names_json(p, c.set);
    arr.push_back(e);
  }
  out["complaints"] = arr;
  return out;
}

json trace_json(const Problem& p, const std::vector<incontest::TraceEvent>& trace) {
  static const char* kNames[] = {"propose", "reject", "hold",  "clinch",
                                 "cycle",   "settle", "place", "retire"};
  json arr = json::array();
  for (const auto& ev : trace) {
    json e;
    e["round"] = ev.round;
    e["event"] = kNames[static_cast<int>(ev.kind)];
    e["student"] = p.student_names[ev.student];
    e["school"] = seat_json(p, ev.school);
    arr.push_back(e);
  }
  return arr;
}

struct CommonFlags {
  std::string output;
  std::string format = "json";
};

void add_common(CLI::App* cmd, CommonFlags* flags) {
  cmd->add_option("-o,--output", flags->output, "Output file (default: stdout)");
  cmd->add_option("--format", flags->format, "Output format")
      ->check(CLI::IsMember({"json", "table"}));
}

int cmd_solve(const std::string& instance, const std::string& mech, bool trace,
              const CommonFlags& flags) {
  const MechanismSpec spec = incontest::parse_mechanism_spec(mech);
  const Problem p = incontest::load_problem(instance);
  const incontest::MechanismRun run = incontest::run_mechanism(spec, p);
  json out;
  out["mechanism"] = incontest::to_string(spec);
  out["seats"] = incontest::assignment_to_json(p, run.outcome)["seats"];
  if (trace) out["trace"] = trace_json(p, run.trace);
  if (flags.format == "table") {
    std::ostringstream os;
    for (int i = 0; i < p.num_students(); ++i)
      os << p.student_names[i] << "  " << seat_name(p, run.outcome.seat[i]) << '\n';
    write_out(flags.output, os.str());
  } else {
    write_out(flags.output, out.dump(2));
  }
  return 0;
}

int cmd_audit(const std::string& instance, const std::string& assignment,
              const CommonFlags& flags) {
  const Problem p = incontest::load_problem(instance);
  const Assignment a = incontest::load_assignment(p, assignment);
  const incontest::AuditReport rep = incontest::incontestability_verdict(p, a);
  write_out(flags.output, render(audit_json(p, rep), flags.format));
  return rep.incontestable ? 0 : 1;
}

int cmd_attainable(const std::string& instance, const std::string& mech,
                   const std::string& student, long long budget, const CommonFlags& flags) {
  const MechanismSpec spec = incontest::parse_mechanism_spec(mech);
  const Problem p = incontest::load_problem(instance);
  const int i = p.student_index(student);
  const incontest::AttainableReport rep =
      incontest::attainable_set(spec, p, i, p.prefs[i], budget);
  const std::vector<int> predicted = incontest::guaranteed_outcomes(p, i);
  const bool match = rep.outcomes == predicted;

  json out;
  out["student"] = student;
  out["mechanism"] = incontest::to_string(spec);
  out["outcomes"] = names_json(p, rep.outcomes);
  out["predicted"] = names_json(p, predicted);
  out["match"] = match;
  json wits = json::array();
  for (const auto& [v, prefs] : rep.witnesses) {
    json w;
    w["outcome"] = seat_json(p, v);
    json prof;
    for (int j = 0; j < p.num_students(); ++j) {
      json lst = json::array();
      for (int s : prefs[j]) lst.push_back(p.school_names[s]);
      prof[p.student_names[j]] = lst;
    }
    w["profile"] = prof;
    wits.push_back(w);
  }
  out["witnesses"] = wits;
  write_out(flags.output, render(out, flags.format));
  return match ? 0 : 1;
}

int cmd_strategy(const std::string& instance, const std::string& student, bool safe,
                 bool maxmin, bool dominant, const std::string& mech, int k, bool brute,
                 long long budget, const CommonFlags& flags) {
  if (static_cast<int>(safe) + static_cast<int>(maxmin) + static_cast<int>(dominant) != 1)
    throw Error(Err::kPreconditionViolated,
                "pick exactly one of --safe, --maxmin, --dominant");
  const Problem p = incontest::load_problem(instance);
  const int i = p.student_index(student);
  json out;
  out["student"] = student;
  out["k"] = k;
  int rc = 0;

  if (safe) {
    const incontest::SafeStrategyReport rep = incontest::has_safe_strategy(p, i, k);
    out["analysis"] = "safe";
    out["exists"] = rep.exists;
    out["witness"] = names_json(p, rep.witness);
    if (brute) {
      if (mech.empty())
        throw Error(Err::kPreconditionViolated, "--brute needs --mechanism");
      MechanismSpec spec = incontest::parse_mechanism_spec(mech);
      spec.list_cap = k;
      const incontest::SafeStrategyReport got =
          incontest::has_safe_strategy_brute(spec, p, i, budget);
      out["brute_exists"] = got.exists;
      out["agrees"] = got.exists == rep.exists;
      if (got.exists != rep.exists) rc = 1;
    }
  } else if (dominant) {
    const incontest::DominantStrategyReport rep =
        incontest::has_dominant_strategy(p, i, p.prefs[i], k);
    out["analysis"] = "dominant";
    out["exists"] = rep.exists;
    out["strategy"] = names_json(p, rep.strategy);
    if (brute) {
      if (mech.empty())
        throw Error(Err::kPreconditionViolated, "--brute needs --mechanism");
      MechanismSpec spec = incontest::parse_mechanism_spec(mech);
      spec.list_cap = k;
      const incontest::DominantStrategyReport got =
          incontest::has_dominant_strategy_brute(spec, p, i, p.prefs[i], budget);
      out["brute_exists"] = got.exists;
      out["agrees"] = got.exists == rep.exists;
      if (got.exists != rep.exists) rc = 1;
    }
  } else {
    if (mech.empty()) throw Error(Err::kPreconditionViolated, "--maxmin needs --mechanism");
    MechanismSpec spec = incontest::parse_mechanism_spec(mech);
    if (k > 0) spec.list_cap = k;
    const std::vector<int> truth = p.prefs[i];
    const std::vector<int> submitted = incontest::truncated(
        truth, spec.list_cap > 0 ? spec.list_cap : p.num_schools());
    const int worst = incontest::maxmin_worst(spec, p, i, submitted, truth, budget);
    const bool optimal = incontest::check_maxmin_optimal(spec, p, i, truth, budget);
    out["analysis"] = "maxmin";
    out["mechanism"] = incontest::to_string(spec);
    out["truthful_worst"] = seat_json(p, worst);
    out["truth_is_maxmin_optimal"] = optimal;
    if (!optimal) rc = 1;
  }
  write_out(flags.output, render(out, flags.format));
  return rc;
}

std::vector<MechanismSpec> parse_mech_list(const std::string& text) {
  std::vector<MechanismSpec> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(incontest::parse_mechanism_spec(item));
  if (out.empty()) throw Error(Err::kBadMechanismSpec, "empty mechanism list");
  return out;
}

int cmd_consistency(const std::string& mechs, std::vector<std::string> instances,
                    int students, int schools, int samples, std::uint64_t seed,
                    bool exhaustive, long long budget, const CommonFlags& flags) {
  const std::vector<MechanismSpec> specs = parse_mech_list(
      mechs.empty() ? "sosm,ttc,seadam,ct,fct" : mechs);

  std::vector<Problem> corpus;
  if (!instances.empty()) {
    for (const std::string& path : instances) corpus.push_back(incontest::load_problem(path));
  } else if (exhaustive) {
    // Every preference profile over the fixed unit-capacity priority family;
    // the budget caps the total problem count.
    const std::vector<Problem> frames =
        incontest::priority_family_frames(students, schools);
    const incontest::StrategySpace space = incontest::make_strategy_space(schools, 0);
    long long total = 0;
    for (std::size_t t = 0; t < frames.size(); ++t) {
      long long per = 1;
      for (int i = 0; i < students; ++i) {
        per *= static_cast<long long>(space.strategies.size());
        if (per > budget) break;
      }
      total += per;
      if (total > budget) throw Error(Err::kBudgetExceeded, "exhaustive corpus exceeds budget");
    }
    for (const Problem& frame : frames) {
      std::vector<int> all(frame.num_students());
      for (int i = 0; i < frame.num_students(); ++i) all[i] = i;
      incontest::ProfileEnumerator en(frame, all, space, budget);
      while (const Problem* q = en.next()) corpus.push_back(*q);
    }
  } else {
    for (int t = 0; t < samples; ++t) {
      std::vector<int> caps(schools, 1);
      if (t % 3 == 2) caps.back() = 2;  // mix in one two-seat school
      corpus.push_back(incontest::gen_problem_caps(students, caps,
                                                   seed + static_cast<std::uint64_t>(t)));
    }
  }

  json report;
  report["problems"] = corpus.size();
  json by_mech = json::array();
  bool all_pass = true;
  for (const MechanismSpec& spec : specs) {
    json entry;
    entry["mechanism"] = incontest::to_string(spec);
    json contestable = json::array();
    for (std::size_t t = 0; t < corpus.size(); ++t) {
      const Assignment a = incontest::run_spec(spec, corpus[t]);
      const incontest::AuditReport rep = incontest::incontestability_verdict(corpus[t], a);
      if (!rep.incontestable) {
        json e = audit_json(corpus[t], rep);
        e["problem"] = t;
        contestable.push_back(e);
      }
    }
    const std::vector<incontest::TopTopViolation> ttv =
        incontest::audit_top_top_consistency(spec, corpus);
    json viols = json::array();
    for (const auto& v : ttv) {
      json e;
      e["problem"] = v.problem_index;
      e["student"] = corpus[v.problem_index].student_names[v.student];
      e["school"] = corpus[v.problem_index].school_names[v.school];
      e["mismatched"] = v.mismatched;
      viols.push_back(e);
    }
    entry["contestable"] = contestable;
    entry["top_top_violations"] = viols;
    const bool pass = contestable.empty() && viols.empty();
    entry["pass"] = pass;
    all_pass = all_pass && pass;
    by_mech.push_back(entry);
  }
  report["mechanisms"] = by_mech;
  report["pass"] = all_pass;
  write_out(flags.output, render(report, flags.format));
  return all_pass ? 0 : 1;
}

int cmd_gen(int students, int schools, std::uint64_t seed, const CommonFlags& flags) {
  const Problem p = incontest::gen_problem(students, schools, seed);
  write_out(flags.output, incontest::problem_to_json(p).dump(2));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"School-choice mechanism toolkit"};
  app.require_subcommand(1);

  std::string instance, assignment, mech, student;
  std::vector<std::string> instances;
  bool trace = false, safe = false, maxmin = false, dominant = false;
  bool brute = false, exhaustive = false;
  int k = 0, students = 4, schools = 3, samples = 25;
  std::uint64_t seed = 1;
  long long budget = incontest::default_budget();
  CommonFlags solve_f, audit_f, att_f, strat_f, cons_f, gen_f;

  CLI::App* solve = app.add_subcommand("solve", "Run a mechanism on an instance");
  solve->add_option("-i,--instance", instance)->required();
  solve->add_option("-m,--mechanism", mech)->required();
  solve->add_flag("--trace", trace, "Include the event trace");
  add_common(solve, &solve_f);

  CLI::App* audit = app.add_subcommand("audit", "Audit an assignment for legitimate complaints");
  audit->add_option("-i,--instance", instance)->required();
  audit->add_option("-a,--assignment", assignment)->required();
  add_common(audit, &audit_f);

  CLI::App* att = app.add_subcommand("attainable", "Enumerate a student's attainable outcomes");
  att->add_option("-i,--instance", instance)->required();
  att->add_option("-m,--mechanism", mech)->required();
  att->add_option("--student", student)->required();
  att->add_option("--budget", budget);
  add_common(att, &att_f);

  CLI::App* strat = app.add_subcommand("strategy", "Safe / maxmin / dominant strategy analyses");
  strat->add_option("-i,--instance", instance)->required();
  strat->add_option("--student", student)->required();
  strat->add_flag("--safe", safe);
  strat->add_flag("--maxmin", maxmin);
  strat->add_flag("--dominant", dominant);
  strat->add_option("-m,--mechanism", mech);
  strat->add_option("-k", k, "List-length cap (0 = unbounded)");
  strat->add_flag("--brute", brute, "Cross-check with brute force (needs -m)");
  strat->add_option("--budget", budget);
  add_common(strat, &strat_f);

  CLI::App* cons = app.add_subcommand("consistency", "Incontestability and reduction audits over a corpus");
  cons->add_option("-m,--mechanism", mech, "Comma-separated list (default: sosm,ttc,seadam,ct,fct)");
  cons->add_option("-i,--instance", instances, "Instance files (repeatable)");
  cons->add_option("--students", students);
  cons->add_option("--schools", schools);
  cons->add_option("--samples", samples);
  cons->add_option("--seed", seed);
  cons->add_flag("--exhaustive", exhaustive, "All preference profiles over the fixed priority family");
  cons->add_option("--budget", budget);
  add_common(cons, &cons_f);

  CLI::App* gen = app.add_subcommand("gen", "Emit a seeded random instance");
  gen->add_option("--students", students)->required();
  gen->add_option("--schools", schools)->required();
  gen->add_option("--seed", seed);
  add_common(gen, &gen_f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed()) return cmd_solve(instance, mech, trace, solve_f);
    if (audit->parsed()) return cmd_audit(instance, assignment, audit_f);
    if (att->parsed()) return cmd_attainable(instance, mech, student, budget, att_f);
    if (strat->parsed())
      return cmd_strategy(instance, student, safe, maxmin, dominant, mech, k, brute,
                          budget, strat_f);
    if (cons->parsed())
      return cmd_consistency(mech, instances, students, schools, samples, seed,
                             exhaustive, budget, cons_f);
    if (gen->parsed()) return cmd_gen(students, schools, seed, gen_f);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << " [" << incontest::err_name(e.code) << "]\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
