#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "feitlab/adams.hpp"
#include "feitlab/brauer.hpp"
#include "feitlab/chartab.hpp"
#include "feitlab/groups.hpp"

namespace feitlab::cli {

struct CheckResult {
  std::string name;
  bool passed = true;
  bool skipped = false;
  std::string detail;
};

struct CharRecord {
  std::size_t chi = 0;
  Int degree = 1;
  Int conductor = 1;
  Int feit = 0;
  std::optional<Witness> witness;
};

struct SRecord {
  std::size_t chi = 0;
  Int n = 1;
  Int value = 0;
  std::optional<Witness> witness;
  std::optional<Int> oracle_value;
  bool theorem_b = true;
};

struct EntryReport {
  std::string entry;
  std::string group;
  Int order = 0;
  Int exponent = 0;
  bool oracle_checked = false;
  std::vector<CheckResult> checks;
  std::vector<CharRecord> characters;
  std::vector<SRecord> s_records;
  std::optional<std::string> strict_inclusion;  // smallest (G, chi) with M~ strictly inside M
  std::optional<std::string> error;
  std::map<std::string, double> timings;

  bool all_checks_passed() const;
  bool has_feit_zero() const;
};

struct VerifyOptions {
  std::size_t oracle_bound = kDefaultOracleBound;
  std::size_t table_bound = kDefaultTableBound;
};

/// The entry is a group spec or a path to a JSON table (anything ending in .json).
struct Input {
  std::string entry;
  std::optional<PermGroup> group;
  CharacterTable table;
};

Input resolve_input(const std::string& entry, std::size_t table_bound = kDefaultTableBound);

/// Runs every applicable check; oracle sections need a group with |G| <= bound.
EntryReport verify(const Input& input, const VerifyOptions& options);
/// As above, recording resolution failures in EntryReport::error.
EntryReport verify_entry(const std::string& entry, const VerifyOptions& options);

nlohmann::ordered_json to_json(const EntryReport& report, bool with_timings);
/// One CSV row per character; header first.
std::vector<std::string> csv_rows(const EntryReport& report);
std::string csv_header();

}  // namespace feitlab::cli
