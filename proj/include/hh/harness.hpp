// Front end plumbing: algebra loading (zoo names or JSON files), running
// checks by id, and table / JSON reports.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hh/frobenius.hpp"
#include "hh/report.hpp"

namespace hh {

// Parse or schema error in an algebra file; `where` is "path:line" or
// "path: field <name>".
struct LoadError : std::runtime_error {
  std::string where;
  LoadError(std::string where_, const std::string& what);
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Field of an algebra spec: the file's own field for `file:<path>`, else
// `flag` (rationals when absent). A flag contradicting a file is an error.
FieldSpec resolve_field(const std::string& spec, const std::optional<FieldSpec>& flag);

// `file:<path>` (JSON) or a zoo name.
template <class K>
Algebra<K> load_algebra(const std::string& spec, const FieldSpec& field);

// Parses the JSON text of an algebra file; `source` names it in diagnostics.
template <class K>
Algebra<K> parse_algebra_json(const std::string& text, const std::string& source);

const std::vector<std::string>& all_check_ids();

// Comma-separated ids, "all" expands; sorted and deduplicated. Throws UsageError.
std::vector<std::string> parse_check_list(const std::string& text);

struct RunOptions {
  std::size_t n_max = 3;
  std::optional<std::string> root;  // root of unity for the grading
  std::uint64_t seed = 1;
  Limits limits;
  bool inject_corruption = false;  // appends a check run on a corrupted differential
};

template <class K>
VerificationReport run_checks(const Algebra<K>& a, const std::string& algebra_id, const std::vector<std::string>& ids,
                              const RunOptions& opt);

std::string emit_table(const VerificationReport& r);
std::string emit_json(const VerificationReport& r);
VerificationReport parse_report_json(const std::string& text);

// 0 iff no check failed.
int exit_code(const VerificationReport& r);

}  // namespace hh
