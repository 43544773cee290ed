#include "cli.hpp"

#include <CLI11.hpp>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "feitlab/serialize.hpp"
#include "verify.hpp"

namespace feitlab::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t resolve_bound(std::optional<long> flag, std::optional<long> fallback, std::ostream& err) {
  long bound = static_cast<long>(kDefaultOracleBound);
  if (flag) {
    bound = *flag;
  } else if (fallback) {
    bound = *fallback;
  } else if (const char* env = std::getenv("FEITLAB_ORACLE_BOUND")) {
    try {
      bound = std::stol(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("FEITLAB_ORACLE_BOUND is not an integer: ") + env);
    }
  }
  if (bound < 1) throw UsageError("oracle bound must be at least 1");
  if (bound > static_cast<long>(kMaxOracleBound))
    throw UsageError("oracle bound " + std::to_string(bound) + " exceeds the maximum " + std::to_string(kMaxOracleBound));
  if (bound > static_cast<long>(kDefaultOracleBound))
    err << "warning: oracle bound " << bound << " above " << kDefaultOracleBound << "; chain enumeration may be slow\n";
  return static_cast<std::size_t>(bound);
}

std::string witness_text(const std::optional<Witness>& w) {
  if (!w) return "none";
  return "class " + std::to_string(w->class_index) + ", z^" + std::to_string(w->j) + " of order " +
         std::to_string(w->order);
}

void print_table(const CharacterTable& t, std::ostream& out) {
  const std::size_t r = t.num_classes();
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{"class"}, ord{"order"}, size{"size"};
  for (std::size_t c = 0; c < r; ++c) {
    head.push_back(std::to_string(c));
    ord.push_back(std::to_string(t.classes()[c].rep_order));
    size.push_back(std::to_string(t.classes()[c].size));
  }
  cells.push_back(std::move(head));
  cells.push_back(std::move(ord));
  cells.push_back(std::move(size));
  for (std::size_t i = 0; i < t.num_characters(); ++i) {
    std::vector<std::string> row{"chi" + std::to_string(i)};
    for (std::size_t c = 0; c < r; ++c) row.push_back(t.value(i, c).to_string());
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> width(r + 1, 0);
  for (const auto& row : cells)
    for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].size());
  out << t.name() << "  |G|=" << t.order() << "  exp=" << t.exponent() << "\n";
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (k == 3) out << "\n";
    const auto& row = cells[k];
    out << std::left << std::setw(static_cast<int>(width[0])) << row[0];
    for (std::size_t c = 1; c < row.size(); ++c) out << "  " << std::right << std::setw(static_cast<int>(width[c])) << row[c];
    out << "\n";
  }
}

void print_verify(const EntryReport& r, bool timings, std::ostream& out) {
  if (r.error) {
    out << r.entry << ": ERROR " << *r.error << "\n";
    return;
  }
  out << r.group << "  |G|=" << r.order << "  exp=" << r.exponent << "\n";
  for (const auto& c : r.checks) {
    out << (c.skipped ? "SKIP " : c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail;
    if (timings && !c.skipped && r.timings.count(c.name))
      out << "  [" << std::fixed << std::setprecision(3) << r.timings.at(c.name) << "s]" << std::defaultfloat;
    out << "\n";
  }
  if (r.strict_inclusion) out << "strict inclusion M~ < M: " << *r.strict_inclusion << "\n";
  for (const auto& c : r.characters)
    if (c.feit == 0) out << "conjecture counterexample candidate: chi=" << c.chi << " conductor=" << c.conductor << "\n";
}

int exit_for(const std::vector<EntryReport>& reports) {
  for (const auto& r : reports)
    if (!r.all_checks_passed()) return kFailed;
  for (const auto& r : reports)
    if (r.has_feit_zero()) return kFeitZero;
  return kOk;
}

Input load_input(const std::string& entry) {
  try {
    return resolve_input(entry);
  } catch (const TableError&) {
    throw;
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  } catch (const BoundExceeded& ex) {
    throw UsageError(ex.what());
  }
}

int cmd_table(const std::string& entry, bool as_json, std::ostream& out) {
  const Input in = load_input(entry);
  if (as_json)
    out << save_table(in.table);
  else
    print_table(in.table, out);
  return kOk;
}

int cmd_s(const std::string& entry, long chi, long n, bool as_json, std::ostream& out) {
  const Input in = load_input(entry);
  const CharacterTable& t = in.table;
  if (chi < 0 || static_cast<std::size_t>(chi) >= t.num_characters())
    throw UsageError("--chi must lie in [0, " + std::to_string(t.num_characters()) + ")");
  if (n < 1 || t.exponent() % n != 0)
    throw UsageError("--n " + std::to_string(n) + " does not divide exp(G) = " + std::to_string(t.exponent()) +
                     "; S(G, chi, n) is only defined for divisors of the exponent");
  const SReport rep = s_invariant(t, static_cast<std::size_t>(chi), n);
  if (as_json) {
    out << to_json(rep).dump(2) << "\n";
    return kOk;
  }
  out << "S(" << t.name() << ", chi" << chi << ", " << n << ") = " << rep.value << "\n";
  for (const auto& s : rep.summands) {
    std::string rho = "{";
    for (Int p : s.rho) rho += (rho.size() > 1 ? "," : "") + std::to_string(p);
    rho += "}";
    out << "  rho=" << std::left << std::setw(10) << rho << " n(rho)=" << std::setw(5) << s.n_rho
        << " (Psi^n(rho) chi, 1) = " << s.multiplicity << "\n";
  }
  out << "witness: " << witness_text(rep.witness) << "\n";
  return kOk;
}

int cmd_feit(const std::string& entry, std::optional<long> chi, bool as_json, bool as_csv, std::ostream& out) {
  const Input in = load_input(entry);
  const CharacterTable& t = in.table;
  std::vector<std::size_t> rows;
  if (chi) {
    if (*chi < 0 || static_cast<std::size_t>(*chi) >= t.num_characters())
      throw UsageError("--chi must lie in [0, " + std::to_string(t.num_characters()) + ")");
    rows.push_back(static_cast<std::size_t>(*chi));
  } else {
    for (std::size_t i = 0; i < t.num_characters(); ++i) rows.push_back(i);
  }
  std::vector<FeitReport> reports;
  for (std::size_t i : rows) reports.push_back(feit_indicator(t, i));
  bool all_positive = true;
  for (const auto& rep : reports) all_positive = all_positive && rep.value > 0;

  if (as_json) {
    json arr = json::array();
    for (const auto& rep : reports) arr.push_back(to_json(rep));
    out << json{{"group", t.name()}, {"reports", arr}, {"all_positive", all_positive}}.dump(2) << "\n";
  } else if (as_csv) {
    out << "group,chi_index,degree,conductor,F,witness_class,witness_order\n";
    for (const auto& rep : reports) {
      out << t.name() << "," << *rep.chi << "," << t.degree(*rep.chi) << "," << rep.conductor << "," << rep.value << ",";
      if (rep.witness) out << rep.witness->class_index << "," << rep.witness->order;
      else out << ",";
      out << "\n";
    }
  } else {
    out << t.name() << "  |G|=" << t.order() << "  exp=" << t.exponent() << "\n";
    for (const auto& rep : reports)
      out << "chi" << *rep.chi << "  degree=" << t.degree(*rep.chi) << "  conductor=" << rep.conductor
          << "  F=" << rep.value << "  witness: " << witness_text(rep.witness) << "\n";
    out << (all_positive ? "all F > 0\n" : "F = 0 found: conjecture counterexample candidate\n");
  }
  return all_positive ? kOk : kFeitZero;
}

int cmd_verify(const std::string& entry, std::size_t bound, bool as_json, bool timings, std::ostream& out) {
  const Input in = load_input(entry);
  VerifyOptions opt;
  opt.oracle_bound = bound;
  const auto t0 = std::chrono::steady_clock::now();
  EntryReport r = verify(in, opt);
  r.timings["total"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (as_json)
    out << to_json(r, timings).dump(2) << "\n";
  else
    print_verify(r, timings, out);
  return exit_for({r});
}

struct CorpusSpec {
  std::vector<std::string> entries;
  std::optional<long> oracle_bound;
  std::string format = "json";
};

CorpusSpec read_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open corpus file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& ex) {
    throw UsageError("corpus file " + path + ": " + ex.what());
  }
  CorpusSpec spec;
  const fs::path base = fs::path(path).parent_path();
  try {
    for (const auto& e : j.value("entries", json::array())) {
      std::string entry = e.get<std::string>();
      if (entry.size() >= 5 && entry.compare(entry.size() - 5, 5, ".json") == 0 && fs::path(entry).is_relative())
        entry = (base / entry).string();
      spec.entries.push_back(std::move(entry));
    }
    if (j.contains("oracle_bound")) spec.oracle_bound = j.at("oracle_bound").get<long>();
    spec.format = j.value("format", std::string("json"));
  } catch (const json::exception& ex) {
    throw UsageError("corpus file " + path + ": " + ex.what());
  }
  if (spec.format != "json" && spec.format != "csv") throw UsageError("corpus format must be json or csv");
  return spec;
}

int cmd_corpus(const std::string& path, std::optional<long> bound_flag, bool as_json, bool as_csv, long jobs,
               const std::string& output, bool timings, std::ostream& out, std::ostream& err) {
  CorpusSpec spec = read_corpus(path);
  if (as_json) spec.format = "json";
  if (as_csv) spec.format = "csv";
  VerifyOptions opt;
  opt.oracle_bound = resolve_bound(bound_flag, spec.oracle_bound, err);
  if (jobs < 1) throw UsageError("--jobs must be at least 1");

  std::vector<EntryReport> reports(spec.entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < spec.entries.size(); i = next++) reports[i] = verify_entry(spec.entries[i], opt);
  };
  std::vector<std::thread> pool;
  const std::size_t n_threads = std::min<std::size_t>(static_cast<std::size_t>(jobs), std::max<std::size_t>(1, spec.entries.size()));
  for (std::size_t k = 1; k < n_threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::ostringstream body;
  if (spec.format == "csv") {
    body << csv_header() << "\n";
    for (const auto& r : reports)
      for (const auto& row : csv_rows(r)) body << row << "\n";
  } else {
    json arr = json::array();
    std::size_t failed = 0, feit_zero = 0;
    for (const auto& r : reports) {
      arr.push_back(to_json(r, timings));
      if (!r.all_checks_passed()) ++failed;
      if (r.has_feit_zero()) ++feit_zero;
    }
    json doc = {{"oracle_bound", opt.oracle_bound},
                {"entries", arr},
                {"summary", {{"entries", reports.size()}, {"failed", failed}, {"feit_zero", feit_zero}}}};
    body << doc.dump(2) << "\n";
  }
  if (output.empty()) {
    out << body.str();
  } else {
    std::ofstream f(output, std::ios::binary);
    if (!f) throw UsageError("cannot write " + output);
    f << body.str();
  }
  for (const auto& r : reports)
    if (r.error) err << "entry " << r.entry << ": " << *r.error << "\n";
    else if (!r.all_checks_passed()) err << "entry " << r.entry << ": failed checks\n";
  return exit_for(reports);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computation of S(G, chi, n), the Feit indicator and Brauer induction checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "feitlab 0.1.0");

  std::string input;
  bool as_json = false, as_csv = false, all = false, timings = false;
  std::optional<long> chi, n, bound;
  long jobs = 1;
  std::string output;

  auto* table = app.add_subcommand("table", "Print the character table of a group or table file");
  table->add_option("input", input, "group spec or table .json")->required();
  table->add_flag("--json", as_json, "emit the JSON table format");

  auto* s = app.add_subcommand("s", "Compute S(G, chi, n) by the Adams route");
  s->add_option("input", input, "group spec or table .json")->required();
  s->add_option("--chi", chi, "character index")->required();
  s->add_option("--n", n, "a divisor of exp(G)")->required();
  s->add_flag("--json", as_json, "emit JSON");

  auto* feit = app.add_subcommand("feit", "Feit indicator F(G, chi) = S(G, chi, c(chi))");
  feit->add_option("input", input, "group spec or table .json")->required();
  auto* chi_opt = feit->add_option("--chi", chi, "a single character index");
  feit->add_flag("--all", all, "every irreducible character (default)")->excludes(chi_opt);
  feit->add_flag("--json", as_json, "emit JSON");
  feit->add_flag("--csv", as_csv, "emit CSV");

  auto* verify_cmd = app.add_subcommand("verify", "Run every check on one group");
  verify_cmd->add_option("input", input, "group spec or table .json")->required();
  verify_cmd->add_option("--oracle-bound", bound, "largest |G| for the brute-force oracle (default 24, max 60)");
  verify_cmd->add_flag("--json", as_json, "emit JSON");
  verify_cmd->add_flag("--timings", timings, "include timings");

  auto* corpus = app.add_subcommand("corpus", "Verify every entry of a corpus file");
  corpus->add_option("spec", input, "corpus JSON file")->required();
  corpus->add_option("--oracle-bound", bound, "overrides the corpus file's oracle_bound");
  corpus->add_option("--jobs", jobs, "entries processed concurrently");
  corpus->add_option("--output,-o", output, "write the report here instead of stdout");
  auto* cj = corpus->add_flag("--json", as_json, "emit JSON");
  corpus->add_flag("--csv", as_csv, "emit CSV")->excludes(cj);
  corpus->add_flag("--timings", timings, "include timings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << "\n";
    return kOk;
  } catch (const CLI::ParseError& ex) {
    const CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    if (ex.get_name() == "CallForHelp") {
      out << sub->help();
      return kOk;
    }
    err << "error: " << ex.what() << "\n" << "run with --help for usage\n";
    return kUsage;
  }

  try {
    if (*table) return cmd_table(input, as_json, out);
    if (*s) return cmd_s(input, *chi, *n, as_json, out);
    if (*feit) return cmd_feit(input, chi, as_json, as_csv, out);
    if (*verify_cmd) return cmd_verify(input, resolve_bound(bound, std::nullopt, err), as_json, timings, out);
    if (*corpus) return cmd_corpus(input, bound, as_json, as_csv, jobs, output, timings, out, err);
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << "\n";
    return kUsage;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kFailed;
  }
  return kUsage;
}

}  // namespace feitlab::cli
