#include "verify.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include "feitlab/numth.hpp"
#include "feitlab/serialize.hpp"

namespace feitlab::cli {

namespace {

using Clock = std::chrono::steady_clock;

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs one named section, turning exceptions into a failed check.
class Sections {
 public:
  explicit Sections(EntryReport& r) : r_(r) {}

  void run(const std::string& name, const std::function<std::string(bool&)>& body) {
    const auto t0 = Clock::now();
    CheckResult c;
    c.name = name;
    try {
      c.detail = body(c.passed);
    } catch (const std::exception& ex) {
      c.passed = false;
      c.detail = ex.what();
    }
    r_.timings[name] = std::chrono::duration<double>(Clock::now() - t0).count();
    r_.checks.push_back(std::move(c));
  }

  void skip(const std::string& name, const std::string& why) {
    r_.checks.push_back(CheckResult{name, true, true, why});
  }

 private:
  EntryReport& r_;
};

Int linear_order(const ClassFunction& phi) {
  Int o = 1;
  for (const auto& v : phi.values()) {
    const auto root = v.as_root_of_unity();
    if (!root) throw std::logic_error("linear character value is not a root of unity");
    o = numth::lcm(o, root->order());
  }
  return o;
}

std::string fail_note(std::size_t chi, Int n, const std::string& what) {
  return "chi=" + std::to_string(chi) + " n=" + std::to_string(n) + ": " + what;
}

void table_sections(const Input& in, EntryReport& r, Sections& s) {
  const CharacterTable& t = in.table;
  s.run("table-integrity", [&](bool&) {
    return std::to_string(t.num_classes()) + " classes; orthogonality, degrees and power maps validated";
  });
  s.run("json-roundtrip", [&](bool& ok) {
    const std::string a = save_table(t);
    const std::string b = save_table(load_table(a));
    ok = a == b;
    return ok ? std::to_string(a.size()) + " bytes" : std::string("save(load(save(T))) differs");
  });
  if (!in.group) {
    s.skip("power-maps", "no group available");
  } else {
    s.run("power-maps", [&](bool& ok) {
      const PermGroup& g = *in.group;
      for (Int m = 0; m <= 2 * t.exponent(); ++m) {
        const auto direct = g.class_power_map(m);
        for (std::size_t c = 0; c < t.num_classes(); ++c)
          if (t.class_of_power(static_cast<int>(c), m) != direct[c]) {
            ok = false;
            return "class " + std::to_string(c) + ", m = " + std::to_string(m);
          }
      }
      return std::string("class_of_power matches the group for 0 <= m <= 2e");
    });
  }
  (void)r;
}

void adams_sections(const Input& in, EntryReport& r, Sections& s) {
  const CharacterTable& t = in.table;
  const auto divisors = numth::divisors(t.exponent());
  s.run("theorem-b", [&](bool& ok) {
    std::string bad;
    for (std::size_t i = 0; i < t.num_characters(); ++i) {
      const ClassFunction chi = t.character(i);
      for (Int n : divisors) {
        const TheoremBCheck c = verify_theorem_b(chi, n);
        r.s_records.push_back(SRecord{i, n, c.value, c.witness, std::nullopt, c.passed()});
        if (!c.passed() && bad.empty()) bad = fail_note(i, n, "S = " + std::to_string(c.value));
      }
    }
    ok = bad.empty();
    return ok ? std::to_string(r.s_records.size()) + " (chi, n) pairs" : bad;
  });
  s.run("examples", [&](bool& ok) {
    const ClassFunction one = t.trivial_character();
    const ClassFunction reg = t.regular_character();
    for (Int n : divisors) {
      if (s_invariant(one, n).value != (n == 1 ? 1 : 0)) {
        ok = false;
        return "(a) trivial character, n = " + std::to_string(n);
      }
      Int census = 0;
      for (const auto& c : t.classes())
        if (c.rep_order % n == 0) census += c.size;
      if (s_invariant(reg, n).value != census) {
        ok = false;
        return "(c) regular character, n = " + std::to_string(n);
      }
    }
    for (std::size_t i = 0; i < t.num_characters(); ++i) {
      const ClassFunction chi = t.character(i);
      if (s_invariant(chi, 1).value != t.degree(i)) {
        ok = false;
        return "(d) chi = " + std::to_string(i);
      }
      if (t.degree(i) != 1) continue;
      const Int o = linear_order(chi);
      for (Int n : divisors)
        if (s_invariant(chi, n).value != (o % n == 0 ? 1 : 0)) {
          ok = false;
          return "(b) chi = " + std::to_string(i) + ", n = " + std::to_string(n);
        }
    }
    return std::string("(a) (b) (c) (d) hold for every n | exp(G)");
  });
  s.run("feit-indicator", [&](bool&) {
    Int zeros = 0;
    for (std::size_t i = 0; i < t.num_characters(); ++i) {
      const FeitReport f = feit_indicator(t, i);
      r.characters.push_back(CharRecord{i, t.degree(i), f.conductor, f.value, f.witness});
      if (f.value == 0) ++zeros;
    }
    return zeros == 0 ? std::string("F > 0 for every irreducible")
                      : std::to_string(zeros) + " conjecture counterexample candidate(s) with F = 0";
  });
}

const char* kOracleChecks[] = {"oracle-chains",     "oracle-section",        "oracle-normalization",
                               "oracle-restriction", "oracle-route",          "oracle-adams-identity",
                               "oracle-max-sets",   "oracle-equivalences"};

void oracle_sections(const Input& in, EntryReport& r, Sections& s, const VerifyOptions& opt) {
  if (!in.group) {
    for (const char* name : kOracleChecks) s.skip(name, "no group available");
    return;
  }
  const PermGroup& g = *in.group;
  if (static_cast<std::size_t>(g.order()) > opt.oracle_bound) {
    const std::string why =
        "|G| = " + std::to_string(g.order()) + " exceeds the oracle bound " + std::to_string(opt.oracle_bound);
    for (const char* name : kOracleChecks) s.skip(name, why);
    return;
  }
  r.oracle_checked = true;
  const CharacterTable& t = in.table;
  std::optional<MonomialPoset> poset;
  std::vector<RPlusElement> a;
  s.run("oracle-chains", [&](bool& ok) {
    poset.emplace(g, opt.oracle_bound);
    for (std::size_t i = 0; i < t.num_characters(); ++i) {
      a.push_back(a_g_chains(*poset, t.character(i)));
      if (!(a.back() == a_g_orbit_chains(*poset, t.character(i)))) {
        ok = false;
        return "chi = " + std::to_string(i);
      }
    }
    return std::to_string(poset->size()) + " pairs, " + std::to_string(poset->representatives().size()) + " orbits";
  });
  if (a.size() != t.num_characters()) {
    for (std::size_t k = 1; k < std::size(kOracleChecks); ++k) s.skip(kOracleChecks[k], "a_G unavailable");
    return;
  }
  const auto divisors = numth::divisors(t.exponent());
  s.run("oracle-section", [&](bool& ok) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!(b_g(a[i], t) == t.character(i))) {
        ok = false;
        return "b_G(a_G(chi)) != chi for chi = " + std::to_string(i);
      }
    return std::string("b_G(a_G(chi)) = chi");
  });
  s.run("oracle-normalization", [&](bool& ok) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      const auto m = pair_multiplicities(*poset, t.character(i));
      for (int p = 0; p < static_cast<int>(poset->size()); ++p)
        if (poset->pair(p).subgroup.order() == g.order() && a[i].coefficient(p) != m[static_cast<std::size_t>(p)]) {
          ok = false;
          return "chi = " + std::to_string(i);
        }
    }
    return std::string("coefficient of [G, phi] equals (chi, phi)");
  });
  s.run("oracle-restriction", [&](bool& ok) {
    const auto subgroups = all_subgroups(g, opt.oracle_bound);
    for (const auto& U : subgroups) {
      const MonomialPoset pu(U, opt.oracle_bound);
      for (std::size_t i = 0; i < a.size(); ++i)
        if (!(restrict_rplus(a[i], pu) == a_g_chains(pu, t.character(i)))) {
          ok = false;
          return "chi = " + std::to_string(i) + ", |U| = " + std::to_string(U.order());
        }
    }
    return std::to_string(subgroups.size()) + " subgroups";
  });
  s.run("oracle-route", [&](bool& ok) {
    std::string bad;
    for (auto& rec : r.s_records) {
      rec.oracle_value = s_via_coefficients(a[rec.chi], rec.n);
      if (*rec.oracle_value != rec.value && bad.empty()) bad = fail_note(rec.chi, rec.n, "routes disagree");
    }
    ok = bad.empty();
    return ok ? std::string("s_via_coefficients = s_invariant") : bad;
  });
  s.run("oracle-adams-identity", [&](bool& ok) {
    for (std::size_t i = 0; i < a.size(); ++i)
      for (Int n : divisors) {
        const auto c = adams_coefficient_identity(*poset, t.character(i), n);
        if (!c.passed()) {
          ok = false;
          return fail_note(i, n, std::to_string(c.lhs) + " != " + std::to_string(c.rhs));
        }
      }
    return std::string("identity holds for every n | exp(G)");
  });
  s.run("oracle-max-sets", [&](bool& ok) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      const auto c = check_max_sets(*poset, t.character(i));
      if (!c.passed()) {
        ok = false;
        return "chi = " + std::to_string(i);
      }
      if (c.strict() && !r.strict_inclusion)
        r.strict_inclusion = "chi=" + std::to_string(i) + " |M|=" + std::to_string(c.m.size()) +
                             " |M~|=" + std::to_string(c.m_tilde.size());
    }
    return std::string("Max(M) = Max(M~) and M~ within M");
  });
  s.run("oracle-equivalences", [&](bool& ok) {
    for (std::size_t i = 0; i < a.size(); ++i)
      for (Int n : divisors)
        if (!check_equivalences(*poset, t.character(i), n).passed()) {
          ok = false;
          return fail_note(i, n, "statements disagree");
        }
    return std::string("all seven statements agree");
  });
}

nlohmann::ordered_json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  return {{"class", w->class_index}, {"j", w->j}, {"order", w->order}};
}

}  // namespace

bool EntryReport::all_checks_passed() const {
  if (error) return false;
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

bool EntryReport::has_feit_zero() const {
  return std::any_of(characters.begin(), characters.end(), [](const CharRecord& c) { return c.feit == 0; });
}

Input resolve_input(const std::string& entry, std::size_t table_bound) {
  if (ends_with(entry, ".json")) return Input{entry, std::nullopt, load_table(read_file(entry))};
  PermGroup g = parse_group_spec(entry);
  CharacterTable t = compute_table(g, table_bound);
  return Input{entry, std::move(g), std::move(t)};
}

EntryReport verify(const Input& input, const VerifyOptions& options) {
  EntryReport r;
  r.entry = input.entry;
  r.group = input.table.name();
  r.order = input.table.order();
  r.exponent = input.table.exponent();
  Sections s(r);
  table_sections(input, r, s);
  adams_sections(input, r, s);
  oracle_sections(input, r, s, options);
  return r;
}

EntryReport verify_entry(const std::string& entry, const VerifyOptions& options) {
  const auto t0 = Clock::now();
  try {
    const Input in = resolve_input(entry, options.table_bound);
    const double setup = std::chrono::duration<double>(Clock::now() - t0).count();
    EntryReport r = verify(in, options);
    r.timings["setup"] = setup;
    return r;
  } catch (const std::exception& ex) {
    EntryReport r;
    r.entry = entry;
    r.error = ex.what();
    return r;
  }
}

nlohmann::ordered_json to_json(const EntryReport& r, bool with_timings) {
  using json = nlohmann::ordered_json;
  json out = {{"entry", r.entry}, {"group", r.group}, {"order", r.order}, {"exponent", r.exponent}};
  if (r.error) {
    out["error"] = *r.error;
    out["all_checks_passed"] = false;
    return out;
  }
  out["oracle_checked"] = r.oracle_checked;
  out["all_checks_passed"] = r.all_checks_passed();
  out["feit_zero"] = r.has_feit_zero();
  json checks = json::array();
  for (const auto& c : r.checks) {
    json jc = {{"name", c.name}, {"passed", c.passed}, {"skipped", c.skipped}, {"detail", c.detail}};
    if (with_timings && r.timings.count(c.name)) jc["seconds"] = r.timings.at(c.name);
    checks.push_back(std::move(jc));
  }
  out["checks"] = std::move(checks);
  json chars = json::array();
  for (const auto& c : r.characters)
    chars.push_back({{"chi", c.chi}, {"degree", c.degree}, {"conductor", c.conductor}, {"F", c.feit},
                     {"witness", witness_json(c.witness)}});
  out["characters"] = std::move(chars);
  json recs = json::array();
  for (const auto& s : r.s_records) {
    json o = nullptr;
    if (s.oracle_value) o = *s.oracle_value;
    recs.push_back({{"chi", s.chi}, {"n", s.n}, {"S", s.value}, {"witness", witness_json(s.witness)},
                    {"oracle_S", o}, {"theorem_b", s.theorem_b}});
  }
  out["s_records"] = std::move(recs);
  out["strict_inclusion"] = r.strict_inclusion ? json(*r.strict_inclusion) : json(nullptr);
  if (with_timings && r.timings.count("setup")) out["setup_seconds"] = r.timings.at("setup");
  return out;
}

std::string csv_header() {
  return "group,order,chi_index,degree,conductor,S_at_conductor,witness_class,witness_order,oracle_checked,"
         "all_checks_passed";
}

std::vector<std::string> csv_rows(const EntryReport& r) {
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  };
  const std::string name = quote(r.group.empty() ? r.entry : r.group);
  const std::string passed = r.all_checks_passed() ? "true" : "false";
  std::vector<std::string> rows;
  if (r.error) {
    rows.push_back(name + ",,,,,,,,false,false");
    return rows;
  }
  for (const auto& c : r.characters) {
    std::string row = name + "," + std::to_string(r.order) + "," + std::to_string(c.chi) + "," +
                      std::to_string(c.degree) + "," + std::to_string(c.conductor) + "," + std::to_string(c.feit) + ",";
    if (c.witness) row += std::to_string(c.witness->class_index) + "," + std::to_string(c.witness->order);
    else row += ",";
    row += std::string(",") + (r.oracle_checked ? "true" : "false") + "," + passed;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace feitlab::cli
