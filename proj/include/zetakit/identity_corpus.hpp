// The verification corpus: each record names one identity from the source
// material as a pair of evaluation plans plus tolerance class and citation.
// The runner produces machine-readable outcomes; flagged records are judged
// against an independent oracle and reported, never asserted.

#ifndef ZETAKIT_IDENTITY_CORPUS_HPP
#define ZETAKIT_IDENTITY_CORPUS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zetakit/precision.hpp"

namespace zk {

enum class Category { FiniteExact, SeriesClosed, IntegralClosed, CrossRep, Limit, Flagged };

enum class ToleranceClass {
  Exact,      // rational comparison, difference must be identically zero
  Standard,   // 1e-30 at the default context
  Heuristic,  // 1e-12; some side carries an empirical-ratio tail
  Empirical   // measured and recorded, not asserted
};

std::string to_string(Category c);
std::string to_string(ToleranceClass t);

struct EvalOutput {
  Approx lhs;
  Approx rhs;
  bool exact = false;          // finite-exact entries: exact_equal carries the verdict
  bool exact_equal = false;
  long terms = 0;
  long nodes = 0;
  // flagged entries: lhs is the oracle, candidates are the competing closed
  // forms; the matched one is reported.
  std::vector<std::pair<std::string, Approx>> candidates;
};

struct IdentityRecord {
  std::string id;
  std::string title;
  std::string paper_ref;  // equation tag + verbatim quote
  Category category = Category::CrossRep;
  ToleranceClass tolerance = ToleranceClass::Standard;
  std::function<EvalOutput(const PrecisionContext&)> eval;
};

struct VerificationOutcome {
  std::string id;
  std::string category;
  std::string status;  // "pass" | "fail" | "recorded"
  std::string lhs;
  std::string rhs;
  std::string abs_diff;
  std::string bound;
  std::string tolerance_class;
  long terms = 0;
  long quadrature_nodes = 0;
  long elapsed_ms = 0;
  std::string paper_ref;
  std::string note;  // matched candidate, or the error text on a failure
};

// The shipped registry, construction-checked for duplicate ids.
const std::vector<IdentityRecord>& corpus();

struct RunFilter {
  std::optional<std::string> id;
  std::optional<Category> category;
};

std::vector<VerificationOutcome> run_corpus(const RunFilter& filter, const PrecisionContext& ctx);

// json-lines: one object per outcome with the fixed schema; stable zeroes
// elapsed_ms so reruns are byte-identical.
std::string emit_report_jsonl(const std::vector<VerificationOutcome>& outcomes, bool stable);
std::string emit_report_table(const std::vector<VerificationOutcome>& outcomes);

std::optional<Category> parse_category(const std::string& name);

}  // namespace zk

#endif  // ZETAKIT_IDENTITY_CORPUS_HPP
