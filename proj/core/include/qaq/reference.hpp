#ifndef QAQ_REFERENCE_HPP
#define QAQ_REFERENCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "qaq/quandle.hpp"

namespace qaq {

// One expected table cell: the action polynomial of a link for a 1-indexed
// acting element, in canonical text form.
struct ReferenceCell {
  std::string link;
  int element;  // 1-indexed
  std::string polynomial;
  // The printed source table contains a typo for this cell; the value here
  // is the corrected one and reports flag it.
  bool flagged_typo = false;
};

struct ReferenceTable {
  std::string id;            // "five-element", "four-element", "six-element"
  std::string quandle_text;  // table file format
  // Expected counting invariant for every row, when the table asserts one.
  std::optional<long> counting;
  // Row values are checked byte-exact when true; informational otherwise.
  bool blocking = true;
  std::vector<ReferenceCell> cells;
};

const std::vector<ReferenceTable>& reference_tables();

// Convenience accessors for the three reference quandles.
Quandle reference_quandle(const std::string& table_id);

enum class CellStatus { Match, Mismatch, Unresolved };

struct ReportLine {
  std::string table_id;
  std::string link;
  int element = 0;  // 1-indexed; 0 when not applicable
  CellStatus status = CellStatus::Match;
  std::string expected;
  std::string computed;
  bool flagged_typo = false;
  bool blocking = true;  // informational rows report differences, not failures
  std::optional<long> counting_expected;
  std::optional<long> counting_computed;
  bool invariants_ok = true;  // u=1 sum, coefficient divisibility, exponent | order
  std::string note;
};

// Computes every reproducible reference cell and compares it with the
// embedded expected value; unresolvable link names are reported, not errors.
std::vector<ReportLine> run_reference_report();

std::string format_reference_report(const std::vector<ReportLine>& lines);

}  // namespace qaq

#endif
