#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace seedopt {

/// Severity of a validation finding. Errors make a system unusable for
/// graph construction; warnings are advisory.
enum class Severity { error, warning };

struct Diagnostic {
  Severity severity = Severity::error;
  std::string location;  ///< rule id or field path ("machines", "system", ...)
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

/// Thrown when an operation requires an error-free system and gets one with
/// validation errors. Carries the full diagnostic list.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

/// Thrown when a system exceeds a hard size cap (graph: 24 machines,
/// oracle: 12 machines, mask width: 32).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cost vector in schema component order. All entries nonnegative and finite
/// in a valid system.
using CostVector = std::vector<double>;

struct MachineSpec {
  std::string id;
  double mass = 1.0;  ///< transport-mass units; defaults to 1 so transport mass degenerates to cardinality

  bool operator==(const MachineSpec&) const = default;
};

struct CostSchema {
  std::vector<std::string> components;

  bool operator==(const CostSchema&) const = default;

  /// Index of a component name, -1 when absent.
  int index_of(std::string_view name) const;
};

/// One defined point of the generation function: applying exactly
/// `lhs_machines` to exactly `resources` yields exactly `output`. Machines in
/// lhs but absent from output are consumed by the step. Subset fields are
/// sets; keep them sorted and duplicate-free (normalize_ids).
struct GenerationRule {
  std::string id;
  std::vector<std::string> lhs_machines;
  std::vector<std::string> resources;
  std::vector<std::string> output;
  CostVector cost;

  bool operator==(const GenerationRule&) const = default;
};

/// A finite generation system: machines M, resources R, and the rule table
/// defining the generation function (empty set off-table). Immutable after
/// construction/validation; safe to share across threads for read-only use.
struct GenerationSystem {
  std::vector<MachineSpec> machines;
  std::vector<std::string> resources;
  CostSchema schema;
  std::vector<GenerationRule> rules;

  bool operator==(const GenerationSystem&) const = default;

  std::vector<std::string> machine_ids() const;
  bool has_machine(std::string_view id) const;
  bool has_resource(std::string_view id) const;
  double mass_of(std::string_view id) const;  ///< 0 when unknown
};

/// Ids are nonempty tokens with no whitespace and no commas.
bool is_valid_token(std::string_view id);

/// Sorts and removes duplicates; the canonical representation of a subset.
std::vector<std::string> normalize_ids(std::vector<std::string> ids);

/// Checks every structural invariant: token validity, id uniqueness,
/// schema/cost consistency, rule membership, weak regularity
/// (output ∩ resources = ∅), and functionality of the rule table (no two
/// rules on the same (machines, resources) point). Warnings: a rule with an
/// empty machine or output set, and a target set with no self-replication
/// witness.
std::vector<Diagnostic> validate_system(const GenerationSystem& sys);

bool has_errors(const std::vector<Diagnostic>& diagnostics);

/// The generation function. Exact rule-table lookup on the given subsets;
/// off-table pairs yield the empty set. Throws std::invalid_argument when an
/// input id is not a known machine/resource.
std::vector<std::string> generate(const GenerationSystem& sys,
                                  const std::vector<std::string>& machines,
                                  const std::vector<std::string>& resources);

/// True iff some rule has lhs_machines = output = subset, i.e. some resource
/// choice reproduces the subset exactly.
bool is_self_replicating(const GenerationSystem& sys,
                         const std::vector<std::string>& subset);

CostVector add_costs(const CostVector& a, const CostVector& b);

/// Shortest round-trip decimal for a double; integral values print without
/// a fraction part ("5", not "5.0").
std::string format_number(double value);

/// "(5, 2)" style rendering of a cost vector.
std::string format_cost(const CostVector& cost);

}  // namespace seedopt
