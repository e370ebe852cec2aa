#include "seedopt/core_model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <utility>

namespace seedopt {

namespace {

std::string join_diag_summary(const std::vector<Diagnostic>& diagnostics) {
  std::string out = "system validation failed:";
  for (const auto& d : diagnostics) {
    if (d.severity != Severity::error) continue;
    out += " [" + d.location + "] " + d.message + ";";
  }
  return out;
}

bool is_sorted_unique(const std::vector<std::string>& ids) {
  return std::adjacent_find(ids.begin(), ids.end(),
                            [](const auto& a, const auto& b) { return a >= b; }) == ids.end();
}

}  // namespace

ValidationError::ValidationError(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(join_diag_summary(diagnostics)),
      diagnostics_(std::move(diagnostics)) {}

int CostSchema::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i] == name) return static_cast<int>(i);
  }
  return -1;
}

std::vector<std::string> GenerationSystem::machine_ids() const {
  std::vector<std::string> ids;
  ids.reserve(machines.size());
  for (const auto& m : machines) ids.push_back(m.id);
  return ids;
}

bool GenerationSystem::has_machine(std::string_view id) const {
  return std::any_of(machines.begin(), machines.end(),
                     [&](const MachineSpec& m) { return m.id == id; });
}

bool GenerationSystem::has_resource(std::string_view id) const {
  return std::find(resources.begin(), resources.end(), id) != resources.end();
}

double GenerationSystem::mass_of(std::string_view id) const {
  for (const auto& m : machines) {
    if (m.id == id) return m.mass;
  }
  return 0.0;
}

bool is_valid_token(std::string_view id) {
  if (id.empty()) return false;
  for (unsigned char c : id) {
    if (c == ',' || std::isspace(c)) return false;
  }
  return true;
}

std::vector<std::string> normalize_ids(std::vector<std::string> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

namespace {

void check_id_list(const std::vector<std::string>& ids, const std::string& location,
                   const char* kind, std::vector<Diagnostic>& out) {
  std::set<std::string> seen;
  for (const auto& id : ids) {
    if (!is_valid_token(id)) {
      out.push_back({Severity::error, location,
                     std::string("invalid ") + kind + " id '" + id +
                         "': ids must be nonempty tokens without whitespace or commas"});
    }
    if (!seen.insert(id).second) {
      out.push_back({Severity::error, location,
                     std::string("duplicate ") + kind + " id '" + id + "'"});
    }
  }
}

void check_subset(const std::vector<std::string>& subset,
                  const std::set<std::string>& allowed, const std::string& rule_id,
                  const char* field, const char* kind, std::vector<Diagnostic>& out) {
  for (const auto& id : subset) {
    if (!allowed.count(id)) {
      out.push_back({Severity::error, rule_id,
                     std::string("unknown ") + kind + " id '" + id + "' in " + field});
    }
  }
}

}  // namespace

std::vector<Diagnostic> validate_system(const GenerationSystem& sys) {
  std::vector<Diagnostic> out;

  if (sys.machines.empty() && sys.resources.empty()) {
    out.push_back({Severity::error, "system", "machine and resource sets are both empty"});
  }

  check_id_list(sys.machine_ids(), "machines", "machine", out);
  for (const auto& m : sys.machines) {
    if (!(m.mass >= 0.0) || !std::isfinite(m.mass)) {
      out.push_back({Severity::error, "machines",
                     "machine '" + m.id + "': mass must be nonnegative and finite"});
    }
  }
  check_id_list(sys.resources, "resources", "resource", out);

  if (sys.schema.components.empty()) {
    out.push_back({Severity::error, "cost_components", "at least one cost component is required"});
  }
  {
    std::set<std::string> seen;
    for (const auto& name : sys.schema.components) {
      if (name.empty()) {
        out.push_back({Severity::error, "cost_components", "cost component name must be nonempty"});
      }
      if (!seen.insert(name).second) {
        out.push_back({Severity::error, "cost_components",
                       "duplicate cost component '" + name + "'"});
      }
    }
  }

  const std::set<std::string> machine_set(sys.machines.size() ? [&] {
    std::set<std::string> s;
    for (const auto& m : sys.machines) s.insert(m.id);
    return s;
  }() : std::set<std::string>{});
  const std::set<std::string> resource_set(sys.resources.begin(), sys.resources.end());

  std::set<std::string> rule_ids;
  // (machines, resources) points already claimed, with the claiming rule id.
  std::vector<std::pair<std::pair<std::vector<std::string>, std::vector<std::string>>, std::string>> points;

  for (const auto& rule : sys.rules) {
    const std::string loc = rule.id.empty() ? std::string("rules") : rule.id;
    if (!is_valid_token(rule.id)) {
      out.push_back({Severity::error, "rules",
                     "invalid rule id '" + rule.id +
                         "': ids must be nonempty tokens without whitespace or commas"});
    } else if (!rule_ids.insert(rule.id).second) {
      out.push_back({Severity::error, rule.id, "duplicate rule id"});
    }

    const auto lhs = normalize_ids(rule.lhs_machines);
    const auto res = normalize_ids(rule.resources);
    const auto output = normalize_ids(rule.output);

    check_subset(lhs, machine_set, loc, "machines", "machine", out);
    check_subset(output, machine_set, loc, "output", "machine", out);
    check_subset(res, resource_set, loc, "resources", "resource", out);

    for (const auto& id : output) {
      if (std::binary_search(res.begin(), res.end(), id)) {
        out.push_back({Severity::error, loc,
                       "weak regularity violated: output machine '" + id +
                           "' appears in the rule's resources"});
      }
    }

    if (rule.cost.size() != sys.schema.components.size()) {
      out.push_back({Severity::error, loc,
                     "cost has " + std::to_string(rule.cost.size()) + " entries, schema has " +
                         std::to_string(sys.schema.components.size())});
    }
    for (double v : rule.cost) {
      if (!(v >= 0.0) || !std::isfinite(v)) {
        out.push_back({Severity::error, loc, "cost entries must be nonnegative and finite"});
        break;
      }
    }

    auto point = std::make_pair(lhs, res);
    auto prev = std::find_if(points.begin(), points.end(),
                             [&](const auto& p) { return p.first == point; });
    if (prev != points.end()) {
      out.push_back({Severity::error, loc,
                     "duplicate generation point: same machines and resources as rule '" +
                         prev->second + "'"});
    } else {
      points.emplace_back(std::move(point), rule.id);
    }

    if (lhs.empty()) {
      out.push_back({Severity::warning, loc, "rule has an empty machine set"});
    }
    if (output.empty()) {
      out.push_back({Severity::warning, loc, "rule has an empty output set"});
    }
  }

  const auto target = normalize_ids(sys.machine_ids());
  const bool target_replicates = std::any_of(
      sys.rules.begin(), sys.rules.end(), [&](const GenerationRule& r) {
        return normalize_ids(r.lhs_machines) == target && normalize_ids(r.output) == target;
      });
  if (!target_replicates) {
    out.push_back({Severity::warning, "system", "target set is not self-replicating"});
  }

  return out;
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::error; });
}

std::vector<std::string> generate(const GenerationSystem& sys,
                                  const std::vector<std::string>& machines,
                                  const std::vector<std::string>& resources) {
  const auto m = normalize_ids(machines);
  const auto r = normalize_ids(resources);
  for (const auto& id : m) {
    if (!sys.has_machine(id)) throw std::invalid_argument("unknown machine id '" + id + "'");
  }
  for (const auto& id : r) {
    if (!sys.has_resource(id)) throw std::invalid_argument("unknown resource id '" + id + "'");
  }
  for (const auto& rule : sys.rules) {
    if (normalize_ids(rule.lhs_machines) == m && normalize_ids(rule.resources) == r) {
      return normalize_ids(rule.output);
    }
  }
  return {};
}

bool is_self_replicating(const GenerationSystem& sys,
                         const std::vector<std::string>& subset) {
  const auto s = normalize_ids(subset);
  for (const auto& id : s) {
    if (!sys.has_machine(id)) throw std::invalid_argument("unknown machine id '" + id + "'");
  }
  return std::any_of(sys.rules.begin(), sys.rules.end(), [&](const GenerationRule& r) {
    return normalize_ids(r.lhs_machines) == s && normalize_ids(r.output) == s;
  });
}

CostVector add_costs(const CostVector& a, const CostVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("cost vectors have different arity");
  }
  CostVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

std::string format_number(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, end);
}

std::string format_cost(const CostVector& cost) {
  std::string out = "(";
  for (std::size_t i = 0; i < cost.size(); ++i) {
    if (i) out += ", ";
    out += format_number(cost[i]);
  }
  out += ")";
  return out;
}

}  // namespace seedopt
