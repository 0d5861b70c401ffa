#pragma once

// Command-line front end. run_cli() holds all logic so that tests can drive
// it with string streams; tools/x5.cpp only forwards main's arguments.
//
// Exit codes: 0 success, 1 checked and negative, 2 usage or input error,
// 3 resource guard tripped.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "x5/x5.hpp"

namespace x5::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2, kResource = 3 };

using json = nlohmann::ordered_json;

namespace detail {

inline std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Signature parse_signature(const std::string& text) {
  Signature sig;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    const auto e = item.find_last_not_of(" \t");
    sig.insert(Atom(item.substr(b, e - b + 1)));
  }
  return sig;
}

inline EvalMode parse_mode(const std::string& s) {
  if (s == "n5") return EvalMode::N5;
  if (s == "classical") return EvalMode::ClassicalNeg;
  return EvalMode::X5;
}

inline json literals_json(const Interpretation& i) {
  json arr = json::array();
  for (const auto& l : i) arr.push_back(to_string(l));
  return arr;
}

inline json models_json(const std::vector<Interpretation>& ms) {
  json arr = json::array();
  for (const auto& m : ms) arr.push_back(literals_json(m));
  return arr;
}

inline json witness_json(const EquivVerdict& v) {
  if (!v.witness) return nullptr;
  json assignment = json::object();
  for (const auto& a : v.signature) assignment[a.name()] = v.witness->value_of(a).value();
  json values = json::array();
  for (const auto& x : v.witness_values) values.push_back(x.value());
  return json{{"assignment", assignment},
              {"here", literals_json(v.witness->here())},
              {"there", literals_json(v.witness->there())},
              {"values", values}};
}

/// "p=1, q=0 : -1 vs -2"
inline std::string witness_text(const EquivVerdict& v) {
  std::string out = to_string(*v.witness, v.signature) + " :";
  for (std::size_t i = 0; i < v.witness_values.size(); ++i) {
    if (i) out += " vs";
    out += " " + std::to_string(v.witness_values[i].value());
  }
  return out;
}

struct Source {
  std::optional<Program> program;
  Theory theory;
};

// A file is a program when every statement has rule shape, otherwise a theory.
inline Source load_source(const std::string& path) {
  const std::string text = read_input(path);
  Source s;
  try {
    s.program = parse_program(text);
    s.theory = Theory(*s.program);
  } catch (const ParseError& e) {
    if (e.message().rfind("implication nested", 0) != 0) throw;
    s.theory = parse_theory(text);
  }
  return s;
}

inline std::string pad(const std::string& s, std::size_t w) {
  return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
}

inline std::string binary_table(const std::string& op, EvalMode mode,
                                const std::function<Formula(Formula, Formula)>& make) {
  const Atom p("p");
  const Atom q("q");
  const Formula f = make(Formula::atom(p), Formula::atom(q));
  std::string out = pad(op, 4) + " |";
  for (int c = -2; c <= 2; ++c) out += pad(std::to_string(c), 3);
  out += "\n" + std::string(5, '-') + "+" + std::string(15, '-') + "\n";
  for (int r = -2; r <= 2; ++r) {
    out += pad(std::to_string(r), 4) + " |";
    for (int c = -2; c <= 2; ++c) {
      const auto m = X5Interpretation::from_values({{p, r}, {q, c}});
      out += pad(std::to_string(value5(m, f, mode).value()), 3);
    }
    out += "\n";
  }
  return out;
}

inline std::string unary_table(const std::string& op, EvalMode mode,
                               const std::function<Formula(Formula)>& make) {
  const Atom p("p");
  const Formula f = make(Formula::atom(p));
  std::string out = pad("", 4) + " |" + pad(op, 4) + "\n" + std::string(5, '-') + "+" +
                    std::string(4, '-') + "\n";
  for (int r = -2; r <= 2; ++r) {
    const auto m = X5Interpretation::from_values({{p, r}});
    out += pad(std::to_string(r), 4) + " |" + pad(std::to_string(value5(m, f, mode).value()), 4) +
           "\n";
  }
  return out;
}

}  // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Five-valued equilibrium logic toolkit", "x5"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string signature_text;
  std::size_t max_atoms = 12;
  bool as_json = false;
  unsigned parallel = 1;
  app.add_option("--signature", signature_text, "Extra atoms, comma separated");
  app.add_option("--max-atoms", max_atoms, "Enumeration limit")->check(CLI::PositiveNumber);
  app.add_flag("--json", as_json, "Machine-readable output");
  app.add_option("--parallel", parallel, "Worker threads")->check(CLI::PositiveNumber);

  const std::vector<std::string> modes{"x5", "n5", "classical"};

  std::string file;
  std::string via;
  auto* solve = app.add_subcommand("solve", "Answer sets or equilibrium models");
  solve->add_option("file", file, "Program or theory file")->required();
  solve->add_option("--via", via, "Single engine")->check(CLI::IsMember({"reduct", "x5", "ferraris"}));

  std::string model_text;
  std::string here_text;
  std::string mode_text = "x5";
  std::string expr;
  auto* eval = app.add_subcommand("eval", "Evaluate a formula at an interpretation");
  eval->add_option("--model", model_text, "There-world T")->required();
  eval->add_option("--here", here_text, "Here-world H (default T)");
  eval->add_option("--mode", mode_text)->check(CLI::IsMember(modes));
  eval->add_option("expr", expr)->required();

  std::string wrt_text;
  bool ferraris = false;
  bool simplify = false;
  auto* reduct = app.add_subcommand("reduct", "Reduct with respect to an interpretation");
  reduct->add_option("--wrt", wrt_text)->required();
  reduct->add_flag("--ferraris", ferraris, "Plus/minus transformation");
  reduct->add_flag("--simplify", simplify, "Fold constants");
  reduct->add_option("file", file)->required();

  auto* valid = app.add_subcommand("valid", "Check validity");
  valid->add_option("--mode", mode_text)->check(CLI::IsMember({"x5", "n5"}));
  valid->add_option("expr", expr)->required();

  std::string kind;
  std::string expr2;
  auto* equiv = app.add_subcommand("equiv", "Weak or substitution equivalence");
  equiv->add_option("--mode", mode_text)->check(CLI::IsMember({"x5", "n5"}));
  equiv->add_option("kind", kind)->required()->check(CLI::IsMember({"weak", "subst"}));
  equiv->add_option("a", expr)->required();
  equiv->add_option("b", expr2)->required();

  auto* context = app.add_subcommand("context", "Discriminating theory");
  context->add_option("a", expr)->required();
  context->add_option("b", expr2)->required();

  bool trace_rules = false;
  auto* nnf = app.add_subcommand("nnf", "Explicit negation normal form");
  nnf->add_option("--mode", mode_text)->check(CLI::IsMember({"x5", "n5"}));
  nnf->add_flag("--rule-trace", trace_rules);
  nnf->add_option("expr", expr)->required();

  RegularizeOptions reg_opts;
  auto add_regular_flags = [&](CLI::App* sub) {
    sub->add_flag("--rule-trace", trace_rules);
    sub->add_flag("--eliminate-head-negation", reg_opts.eliminate_head_negation);
    sub->add_option("--max-nodes", reg_opts.max_nodes)->check(CLI::PositiveNumber);
    sub->add_option("file", file)->required();
  };
  auto* regular = app.add_subcommand("regular", "Regular program");
  add_regular_flags(regular);
  auto* exporter = app.add_subcommand("export", "Solver syntax");
  add_regular_flags(exporter);

  auto* tables = app.add_subcommand("tables", "Truth tables");
  tables->add_option("--mode", mode_text)->check(CLI::IsMember({"x5", "n5"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  json doc{{"command", app.get_subcommands().front()->get_name()},
           {"result", nullptr},
           {"witness", nullptr},
           {"engine_agreement", nullptr}};
  auto finish = [&](int code) {
    if (as_json) out << doc.dump(2) << "\n";
    return code;
  };

  try {
    SolveOptions opts;
    opts.signature = detail::parse_signature(signature_text);
    opts.max_atoms = max_atoms;
    opts.parallel = parallel;
    const EvalMode mode = detail::parse_mode(mode_text);

    if (*solve) {
      const auto src = detail::load_source(file);
      std::vector<std::pair<std::string, std::vector<Interpretation>>> runs;
      const bool all = via.empty();
      if (via == "reduct" && !src.program)
        throw InvalidArgument("the reduct engine needs a program; input is a theory");
      if ((all || via == "reduct") && src.program) runs.emplace_back("reduct", answer_sets(*src.program, opts));
      if (all || via == "x5") runs.emplace_back("x5", equilibrium_models(src.theory, opts));
      if (all || via == "ferraris")
        runs.emplace_back("ferraris", equilibrium_models_ferraris(src.theory, opts));

      bool agree = true;
      for (const auto& r : runs) agree = agree && r.second == runs.front().second;
      json engines = json::object();
      for (const auto& [name, ms] : runs) engines[name] = detail::models_json(ms);
      doc["result"] = {{"kind", src.program ? "answer-sets" : "equilibrium-models"},
                       {"models", detail::models_json(runs.front().second)},
                       {"engines", engines}};
      doc["engine_agreement"] = agree;
      if (!agree) {
        err << "engines disagree:\n";
        for (const auto& [name, ms] : runs) {
          err << "  " << name << ":";
          for (const auto& m : ms) err << " " << to_string(m);
          err << "\n";
        }
        return finish(kNegative);
      }
      if (!as_json)
        for (const auto& m : runs.front().second) out << to_string(m) << "\n";
      return finish(kOk);
    }

    if (*eval) {
      const Formula f = parse_formula(expr);
      const Interpretation there = parse_interpretation(model_text);
      const Interpretation here = here_text.empty() ? there : parse_interpretation(here_text);
      const X5Interpretation m(here, there);
      json result = json::object();
      std::string text;
      if (mode == EvalMode::ClassicalNeg) {
        const bool s = classical_sat(m, f);
        result["sat"] = s;
        text = std::string("sat ") + (s ? "true" : "false") + "\n";
      } else {
        const int v = value5(m, f, mode).value();
        const bool s = mode == EvalMode::X5 ? x5_sat(m, f) : v == 2;
        const bool fl = mode == EvalMode::X5 ? x5_fals(m, f) : v == -2;
        result["value"] = v;
        result["sat"] = s;
        result["fals"] = fl;
        text = "value " + std::to_string(v) + "\nsat " + (s ? "true" : "false") + "\nfals " +
               (fl ? "true" : "false") + "\n";
      }
      doc["result"] = result;
      if (!as_json) out << text;
      return finish(kOk);
    }

    if (*reduct) {
      const Interpretation t = parse_interpretation(wrt_text);
      if (!ferraris) {
        const auto src = detail::load_source(file);
        if (!src.program) throw InvalidArgument("the reduct needs a program; input is a theory");
        Program r = reduct_program(*src.program, t);
        if (simplify) r = simplify_constants(r);
        doc["result"] = json::array();
        for (const auto& rule : r) doc["result"].push_back(to_string(rule));
        if (!as_json) out << to_string(r);
        return finish(kOk);
      }
      const auto src = detail::load_source(file);
      doc["result"] = json::array();
      for (const auto& f : src.theory) {
        Formula plus = ferraris_plus(f, t);
        Formula minus = ferraris_minus(f, t);
        if (simplify) {
          plus = simplify_constants(plus);
          minus = simplify_constants(minus);
        }
        doc["result"].push_back({{"formula", to_string(f)},
                                 {"plus", to_string(plus)},
                                 {"minus", to_string(minus)}});
        if (!as_json) out << "plus  " << to_string(plus) << "\nminus " << to_string(minus) << "\n";
      }
      return finish(kOk);
    }

    if (*valid) {
      const auto v = is_valid(parse_formula(expr), opts, mode);
      doc["result"] = v.equivalent ? "valid" : "not valid";
      doc["witness"] = detail::witness_json(v);
      if (!as_json) {
        out << (v.equivalent ? "valid" : "not valid") << "\n";
        if (v.witness) out << "witness " << detail::witness_text(v) << "\n";
      }
      return finish(v.equivalent ? kOk : kNegative);
    }

    if (*equiv) {
      const Formula a = parse_formula(expr);
      const Formula b = parse_formula(expr2);
      const bool weak = kind == "weak";
      const auto v = weak ? weak_equiv(a, b, opts, mode) : subst_equiv(a, b, opts, mode);
      const std::string name = weak ? "weakly equivalent" : "substitution-equivalent";
      const std::string verdict = v.equivalent ? name : "not " + name;
      doc["result"] = verdict;
      doc["witness"] = detail::witness_json(v);
      if (!as_json) {
        out << verdict << "\n";
        if (v.witness) out << "witness " << detail::witness_text(v) << "\n";
      }
      return finish(v.equivalent ? kOk : kNegative);
    }

    if (*context) {
      const Formula a = parse_formula(expr);
      const Formula b = parse_formula(expr2);
      EquivVerdict v;
      try {
        v = discriminating_context(a, b, opts);
      } catch (const EquivalentFormulas& e) {
        doc["result"] = {{"context", nullptr}, {"verified", nullptr}};
        if (!as_json) out << "strongly equivalent: no discriminating context\n";
        return finish(kNegative);
      }
      const auto& c = *v.check;
      doc["result"] = {{"context", json::array()},
                       {"models_with_a", detail::models_json(c.models_with_alpha)},
                       {"models_with_b", detail::models_json(c.models_with_beta)},
                       {"verified", c.verified}};
      for (const auto& r : *v.context) doc["result"]["context"].push_back(to_string(r));
      doc["witness"] = detail::witness_json(v);
      if (!as_json) {
        out << "context\n" << to_string(*v.context);
        out << "witness " << detail::witness_text(v) << "\n";
        auto line = [&](const char* label, const std::vector<Interpretation>& ms) {
          out << label;
          for (const auto& m : ms) out << " " << to_string(m);
          out << "\n";
        };
        line("models with a:", c.models_with_alpha);
        line("models with b:", c.models_with_beta);
        out << (c.verified ? "verified" : "NOT verified") << "\n";
      }
      return finish(c.verified ? kOk : kNegative);
    }

    if (*nnf) {
      RewriteTrace trace;
      const Formula f = to_nnf(parse_formula(expr), mode, trace_rules ? &trace : nullptr);
      doc["result"] = to_string(f);
      if (trace_rules) {
        doc["trace"] = json::array();
        for (const auto& s : trace) doc["trace"].push_back({{"rule", s.rule}, {"position", s.position}});
      }
      if (!as_json) out << to_string(f) << "\n" << to_string(trace);
      return finish(kOk);
    }

    if (*regular || *exporter) {
      const Program p = parse_program(detail::read_input(file));
      RewriteTrace trace;
      RewriteTrace* tp = trace_rules ? &trace : nullptr;
      const Program r = to_regular(to_nnf_program(p, EvalMode::X5, tp), reg_opts, tp);
      const std::string text = *regular ? to_string(r) : export_asp(r);
      doc["result"] = text;
      if (trace_rules) {
        doc["trace"] = json::array();
        for (const auto& s : trace) doc["trace"].push_back({{"rule", s.rule}, {"position", s.position}});
      }
      if (!as_json) out << text << to_string(trace);
      return finish(kOk);
    }

    if (*tables) {
      using F = Formula;
      std::string text;
      json result = json::object();
      auto binary = [&](const std::string& op, std::function<F(F, F)> make) {
        text += detail::binary_table(op, mode, make) + "\n";
        json rows = json::array();
        const Atom p("p");
        const Atom q("q");
        const F f = make(F::atom(p), F::atom(q));
        for (int r = -2; r <= 2; ++r) {
          json row = json::array();
          for (int c = -2; c <= 2; ++c)
            row.push_back(value5(X5Interpretation::from_values({{p, r}, {q, c}}), f, mode).value());
          rows.push_back(row);
        }
        result[op] = rows;
      };
      auto unary = [&](const std::string& op, std::function<F(F)> make) {
        text += detail::unary_table(op, mode, make) + "\n";
        json col = json::array();
        const Atom p("p");
        for (int r = -2; r <= 2; ++r)
          col.push_back(value5(X5Interpretation::from_values({{p, r}}), make(F::atom(p)), mode).value());
        result[op] = col;
      };
      binary("&", F::conj);
      binary("|", F::disj);
      binary("->", F::impl);
      binary("<->", [](F a, F b) { return F::iff(a, b); });
      binary("<=>", [](F a, F b) { return F::strong_iff(a, b); });
      unary("~", F::xneg);
      unary("not", F::dneg);
      doc["result"] = result;
      if (!as_json) out << text;
      return finish(kOk);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const SignatureTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kResource;
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << "\n";
    return kResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace x5::cli
