#ifndef SRW_HARNESS_HPP
#define SRW_HARNESS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "srw/constructions.hpp"
#include "srw/core.hpp"
#include "srw/ideals.hpp"
#include "srw/pc.hpp"

namespace srw {

/// Every MC-set of S in lectic order, at most `cap` of them (the flag tells
/// whether the list is complete).
struct McSetList {
  std::vector<ElementSet> sets;
  bool complete = true;
};
McSetList enumerate_mc_sets(const FiniteSemiring& S, std::size_t cap);

enum class Theorem {
  kPseudo1,
  kPcfnMin,
  kPcfnMin2,
  kMinprimePc,
  kStone1,
  kSimple,
  kBdl,
  kPbdl,
  kStone2,
  kSkel1,
  kSkelBool,
  kMi,
  kDense1,
  kMaxPrime,
  kKrullRad,
  kKrullMin,
  kHuckaba,
  kHuckaba2,
  kHuckaba3,
  kZdiv,
  kMinPbdl,
  kIdSemiring,
};

std::string_view to_string(Theorem t);

/// A catalog entry: a theorem and, for multi-part statements, the clause
/// ("4" in PSEUDO1.4, "a" in DENSE1.a). Empty clause for single statements.
struct TheoremId {
  Theorem theorem = Theorem::kPseudo1;
  std::string clause;

  std::string to_string() const;
  friend bool operator==(const TheoremId&, const TheoremId&) = default;
};

/// Every checkable statement, in report order.
const std::vector<TheoremId>& theorem_catalog();

/// Accepts a full id ("PSEUDO1.4") or a theorem name selecting all of its
/// clauses ("PSEUDO1"). Throws ParseError for unknown names.
std::vector<TheoremId> parse_theorem_ids(std::string_view text);

/// Comma-separated list of ids; "all" or empty selects the full catalog.
std::vector<TheoremId> parse_theorem_list(std::string_view text);

enum class Result { kPass, kFail, kSkipped };
std::string_view to_string(Result r);

/// The elements, subsets and maps that make up one instance of a statement.
/// A failing report carries the instance that failed, which can be replayed.
struct Witness {
  std::map<std::string, Element> elements;
  std::map<std::string, ElementSet> sets;
  std::map<std::string, std::vector<Element>> maps;
  std::string detail;
};

struct TheoremReport {
  TheoremId theorem;
  std::string semiring_id;
  bool hypotheses_met = false;
  /// Instances on which the statement's hypotheses held and it was evaluated.
  std::size_t instances = 0;
  Result result = Result::kSkipped;
  std::optional<Witness> witness;
  /// Why the statement was skipped (text output only).
  std::string skip_reason;
};

struct VerifyOptions {
  std::size_t ideal_cap = kDefaultIdealCap;
  /// Largest number of MC-sets enumerated for MAX-PRIME.
  std::size_t mc_set_cap = 4096;
  /// Exhaustive pc-function enumeration up to this many maps; beyond it a
  /// fixed representative family is used.
  std::size_t pc_function_cap = 512;
};

/// Everything a catalog check needs about one semiring, computed once.
class VerificationContext {
 public:
  VerificationContext(std::string id, OrderedView view, VerifyOptions options = {});

  const std::string& id() const { return id_; }
  const OrderedView& view() const { return view_; }
  const FiniteSemiring& semiring() const { return view_.semiring(); }
  const VerifyOptions& options() const { return options_; }

  /// Null unless the view is positive.
  const PcAnalysis* pc() const { return pc_ ? &*pc_ : nullptr; }
  /// Replaces the pseudocomplement data seen by the checks (fault injection).
  void override_pc_analysis(PcAnalysis pc) { pc_ = std::move(pc); }

  /// Null when the order exceeds the ideal cap.
  const IdealCatalog* ideals() const { return catalog_ ? &*catalog_ : nullptr; }

  /// MC-sets, enumerated alongside the ideals.
  const McSetList& mc_sets() const { return mc_sets_; }

  const std::vector<PcFunction>& pc_functions() const { return pc_functions_; }
  void add_pc_function(PcFunction f);
  /// True when every pc-function of the semiring is in pc_functions().
  bool pc_functions_exhaustive() const { return pc_functions_exhaustive_; }

  bool mult_idempotent() const { return mult_idempotent_; }
  bool nilpotent_free() const { return nilpotent_free_; }

 private:
  std::string id_;
  OrderedView view_;
  VerifyOptions options_;
  std::optional<PcAnalysis> pc_;
  std::optional<IdealCatalog> catalog_;
  McSetList mc_sets_;
  std::vector<PcFunction> pc_functions_;
  bool pc_functions_exhaustive_ = false;
  bool mult_idempotent_ = false;
  bool nilpotent_free_ = false;
};

/// Evaluates one statement on every instance it quantifies over. Never
/// throws: violations and unexpected errors become failing reports.
TheoremReport verify(const VerificationContext& ctx, const TheoremId& id);
std::vector<TheoremReport> verify(const VerificationContext& ctx,
                                  const std::vector<TheoremId>& ids);

/// Re-runs the check on a failing report's witness; true when the failure
/// reproduces.
bool replay(const VerificationContext& ctx, const TheoremReport& report);

struct CorpusMember {
  std::string id;
  OrderedView view;
};

/// Generates every spec (with default_view orders) in the given order.
std::vector<CorpusMember> build_corpus(const std::vector<GeneratorSpec>& specs,
                                       unsigned order_cap = kDefaultEnumerationOrderCap);

/// Exhaustive orders 2..4, the named families and their pairwise products of
/// order at most 16.
std::vector<GeneratorSpec> default_corpus_specs();

struct CorpusCounts {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
};

struct CorpusReport {
  /// Member order, then catalog order.
  std::vector<TheoremReport> reports;
  std::size_t members = 0;
  CorpusCounts totals() const;
  std::map<std::string, CorpusCounts> by_theorem() const;
  bool any_failure() const { return totals().fail > 0; }
};

/// Runs every (member, theorem) pair, spreading members over `jobs` threads.
CorpusReport corpus_run(const std::vector<CorpusMember>& members,
                        const std::vector<TheoremId>& theorems, const VerifyOptions& options = {},
                        unsigned jobs = 1);

nlohmann::json to_json(const TheoremReport& r);
nlohmann::json to_json(const CorpusReport& r);
std::string report_line(const TheoremReport& r);
/// Per-theorem pass/fail/skipped table followed by any failures.
std::string summary_table(const CorpusReport& r);

}  // namespace srw

#endif  // SRW_HARNESS_HPP
