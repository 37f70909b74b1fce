// Command-line driver. Exit codes:
//   0 success (eq: Equal; dill check: valid; dill sim: Equal)
//   1 negative verdict (eq/dill sim: Distinct; dill check: invalid)
//   2 inconclusive (eq/dill sim: Unknown; norm: fuel exhausted)
//   3 usage error
//   4 input error (unreadable file, parse, type or measure error)
//   5 internal error

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "lincat/dill.hpp"
#include "lincat/measure.hpp"
#include "lincat/normalize.hpp"
#include "lincat/session.hpp"
#include "lincat/trace_io.hpp"

namespace {

using namespace lincat;

enum Exit { kOk = 0, kNegative = 1, kInconclusive = 2, kUsage = 3, kInput = 4, kInternal = 5 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string typing_str(const Typing& t) { return t.dom.str() + " ⊢ " + t.cod.str(); }

std::vector<Nat> parse_labels(const std::string& text) {
  std::vector<Nat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("labels must be comma-separated naturals, got '" + text + "'");
    out.emplace_back(mpz_class(item));
  }
  return out;
}

// Splits a batch line into words; single and double quotes group, backslash
// escapes the next character.
std::vector<std::string> split_words(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool have = false;
  char quote = 0;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (c == '\\' && i + 1 < line.size() && quote != '\'') {
      cur += line[++i];
      have = true;
    } else if (quote) {
      if (c == quote) quote = 0;
      else cur += c;
    } else if (c == '"' || c == '\'') {
      quote = c;
      have = true;
    } else if (c == ' ' || c == '\t') {
      if (have) out.push_back(cur);
      cur.clear();
      have = false;
    } else {
      cur += c;
      have = true;
    }
  }
  if (quote) throw InputError("unterminated quote");
  if (have) out.push_back(cur);
  return out;
}

bool has_arrow_line(const std::string& text) {
  std::istringstream ss(text);
  for (std::string line; std::getline(ss, line);) {
    std::size_t a = line.find_first_not_of(" \t");
    std::size_t b = line.find_last_not_of(" \t\r");
    if (a != std::string::npos && line.substr(a, b - a + 1) == "=>") return true;
  }
  return false;
}

int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

int run_batch(const std::vector<std::string>& prefix, int jobs, std::istream& in, std::ostream& out) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  struct Result {
    int code = kOk;
    std::string out, err;
    bool skip = false;
  };
  std::vector<Result> results(lines.size());
  auto work = [&](std::size_t k) {
    Result& r = results[k];
    std::string t = lines[k];
    std::size_t a = t.find_first_not_of(" \t");
    if (a == std::string::npos || t[a] == '#') {
      r.skip = true;
      return;
    }
    std::ostringstream o, e;
    try {
      std::vector<std::string> words = split_words(t);
      if (!words.empty() && words[0] == "batch") throw InputError("batch cannot nest");
      std::vector<std::string> argv = prefix;
      argv.insert(argv.end(), words.begin(), words.end());
      std::istringstream none;
      r.code = run(argv, none, o, e);
    } catch (const InputError& ex) {
      e << "error: " << ex.what() << "\n";
      r.code = kInput;
    }
    r.out = o.str();
    r.err = e.str();
  };
  std::size_t n = std::max(1, jobs);
  if (n == 1) {
    for (std::size_t k = 0; k < lines.size(); ++k) work(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < n; ++t)
      pool.emplace_back([&] {
        for (std::size_t k; (k = next++) < lines.size();) work(k);
      });
    for (auto& th : pool) th.join();
  }
  int worst = kOk;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const Result& r = results[k];
    if (r.skip) continue;
    out << "== " << (k + 1) << " exit=" << r.code << "\n" << r.out << r.err;
    worst = std::max(worst, r.code);
  }
  return worst;
}

int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rewriting and normal forms for linear category morphisms", "lincat"};
  app.require_subcommand(1);

  std::vector<std::string> defs;
  SessionOptions opts;
  app.add_option("--defs", defs, "Definitions file (repeatable)");
  app.add_option("--strategy", opts.strategy, "Reduction strategy")->check(CLI::IsMember({"default"}));

  std::string expr, expr2, labels, trace_fmt, file;
  int first_rule = 0, jobs = 1;

  auto* parse = app.add_subcommand("parse", "Print the expression without sugar expansion");
  parse->add_option("expr", expr)->required();

  auto* type = app.add_subcommand("type", "Print domain and codomain");
  type->add_option("expr", expr)->required();

  auto* norm = app.add_subcommand("norm", "Normalize and print the normal form");
  norm->add_option("expr", expr)->required();
  norm->add_option("--trace", trace_fmt, "Trace format")->check(CLI::IsMember({"text", "json"}));
  norm->add_option("--fuel", opts.fuel, "Step limit")->check(CLI::NonNegativeNumber);
  norm->add_option("--first-rule", first_rule, "Contract a redex of this rule first")->check(CLI::Range(0, 23));

  auto* eq = app.add_subcommand("eq", "Decide equality (exit 0 Equal, 1 Distinct, 2 Unknown)");
  eq->add_option("expr1", expr)->required();
  eq->add_option("expr2", expr2)->required();
  eq->add_option("--budget", opts.budget, "Congruence search budget")->check(CLI::NonNegativeNumber);

  auto* meas = app.add_subcommand("measure", "Label back-propagation for composite algebraic morphisms");
  meas->add_option("expr", expr)->required();
  meas->add_option("--labels", labels, "Codomain occurrence labels k1,k2,...")->required();
  meas->add_option("--depth-guard", opts.depth_guard, "Maximum tower height")->check(CLI::PositiveNumber);

  auto* dill = app.add_subcommand("dill", "Derivations of the linear term calculus");
  dill->require_subcommand(1);
  auto* dcheck = dill->add_subcommand("check", "Check a derivation");
  dcheck->add_option("file", file)->required();
  auto* delab = dill->add_subcommand("elab", "Print the morphism of a derivation");
  delab->add_option("file", file)->required();
  auto* dsim = dill->add_subcommand("sim", "Compare a term reduction with its categorical counterpart");
  dsim->add_option("file", file)->required();
  dsim->add_option("--budget", opts.budget, "Congruence search budget")->check(CLI::NonNegativeNumber);

  auto* defcmd = app.add_subcommand("defs", "Load a definitions file and list its bindings");
  defcmd->add_option("file", file)->required();

  auto* batch = app.add_subcommand("batch", "Run one query per standard-input line");
  batch->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    Session s;
    s.options = opts;
    for (const auto& d : defs) s.load_defs(read_file(d), d);

    if (*parse) {
      out << pretty(s.morphism(expr, false)) << "\n";
    } else if (*type) {
      out << typing_str(infer_type(s.morphism(expr))) << "\n";
    } else if (*norm) {
      NormalizeOptions no{s.options.fuel, s.options.strategy, first_rule};
      Trace t = normalize(s.morphism(expr), no);
      if (trace_fmt == "json") out << trace_json(t) << "\n";
      else if (trace_fmt == "text") out << trace_text(t);
      else out << pretty(to_term(t.result)) << "\n";
      if (t.stuck) err << "warning: " << t.stuck << " irreversible redex(es) could not be contracted\n";
      if (t.fuel_exhausted) {
        err << "fuel exhausted after " << t.steps.size() << " steps\n";
        return kInconclusive;
      }
    } else if (*eq) {
      NormalizeOptions no{s.options.fuel, s.options.strategy, 0};
      EqualResult r = equal(s.morphism(expr), s.morphism(expr2), s.options.budget, no);
      out << equality_name(r.verdict);
      if (!r.reason.empty()) out << ": " << r.reason;
      out << "\n";
      if (r.verdict == Equality::Distinct) return kNegative;
      if (r.verdict == Equality::Unknown) return kInconclusive;
    } else if (*meas) {
      CanonicalForm c = flatten(s.morphism(expr));
      MorphClass k = classify(c);
      out << "class: " << morph_class_name(k) << "\n";
      if (k == MorphClass::Other) throw MeasureError("not a composite algebraic morphism");
      std::vector<Nat> xs = parse_labels(labels);
      OccLabeling dom = measure(c, {c.cod, xs}, s.options.depth_guard);
      std::vector<Expr> forms = measure_exprs(c);
      Nat total;
      for (std::size_t i = 0; i < forms.size(); ++i) {
        out << "occ " << (i + 1) << ": " << forms[i].str() << " = " << dom.labels[i].str() << "\n";
        total = total + dom.labels[i];
      }
      out << "sum: " << total.str() << "\n";
    } else if (*dill) {
      std::string text = read_file(file);
      std::vector<Derivation> ds;
      if (has_arrow_line(text)) {
        auto [redex, contractum] = parse_simulation(text);
        ds = {redex, contractum};
      } else {
        ds.push_back(parse_derivation(text));
      }
      if (*dcheck) {
        int code = kOk;
        for (const auto& d : ds) {
          CheckResult r = check_derivation(d);
          if (r.ok) {
            out << "valid: " << d.concl.str() << "\n";
          } else {
            out << "invalid: line " << r.line << ": " << r.reason << "\n";
            code = kNegative;
          }
        }
        return code;
      } else if (*delab) {
        for (const auto& d : ds) {
          MorphTerm m = elaborate(d);
          out << pretty(m) << "\n" << typing_str(infer_type(m)) << "\n";
        }
      } else {
        auto [redex, contractum] = parse_simulation(text);
        SimulationReport r = simulate(redex, contractum, s.options.budget);
        out << "schema: " << schema_name(r.schema) << (r.empty_delta ? " (empty context)" : "") << "\n";
        out << "verdict: " << equality_name(r.equality.verdict);
        if (!r.equality.reason.empty()) out << ": " << r.equality.reason;
        out << "\n";
        if (r.reached) {
          out << "path:";
          for (int rule : r.path) out << " " << rule;
          out << "\nrules:";
          for (int rule : r.rule_set()) out << " " << rule;
          out << "\n";
        } else {
          out << "path: not found within the search limits\n";
        }
        if (r.equality.verdict == Equality::Distinct) return kNegative;
        if (r.equality.verdict == Equality::Unknown) return kInconclusive;
      }
    } else if (*defcmd) {
      s.load_defs(read_file(file), file);
      const Bindings& b = s.bindings();
      for (const auto& name : s.names()) {
        if (s.is_object(name)) out << name << " : obj = " << b.objects.at(name).str() << "\n";
        else out << name << " : " << typing_str(infer_type(b.morphisms.at(name))) << "\n";
      }
    } else if (*batch) {
      std::vector<std::string> prefix;
      for (const auto& d : defs) prefix.insert(prefix.end(), {"--defs", d});
      prefix.insert(prefix.end(), {"--strategy", s.options.strategy});
      return run_batch(prefix, jobs, in, out);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kInput;
  } catch (const TypeError& e) {
    err << "type error: " << e.what() << "\n";
    return kInput;
  } catch (const SessionError& e) {
    err << "definitions error: " << e.what() << "\n";
    return kInput;
  } catch (const DillError& e) {
    err << "derivation error: " << e.what() << "\n";
    return kInput;
  } catch (const MeasureError& e) {
    err << "measure error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cin, std::cout, std::cerr);
}
