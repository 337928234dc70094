#pragma once

#include "skewlab/theorems.hpp"

#include <json.hpp>

namespace skewlab {

/// Ordered JSON keeps key insertion order, which together with string-typed
/// field elements makes every report byte-identical across runs.
using Json = nlohmann::ordered_json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A parsed and validated problem description.
struct Problem {
  Field field;
  AlgebraPtr algebra;
  GroupPtr group;
  ActionPtr action;
  std::uint64_t seed = 0;
  int max_samples = 64;
  int degree_ceiling = 16;
  std::vector<int> block_order;
};

Field field_from_json(const Json &j);
Json field_to_json(const Field &f);

/// Matrices serialize as arrays of arrays of exact string literals ("-3/2").
Matrix matrix_from_json(const Field &f, const Json &j);
Json matrix_to_json(const Field &f, const Matrix &m);

std::vector<Fel> vector_from_json(const Field &f, const Json &j);
Json vector_to_json(const Field &f, const std::vector<Fel> &v);

Quiver quiver_from_json(const Json &j);
Json quiver_to_json(const Quiver &q);

/// Quiver form {"quiver": ...} or structure-constant form
/// {"labels": [...], "table": [i][j] -> coefficient row, "unit": [...],
///  "generators": [[...], ...] (optional)}.
Algebra algebra_from_json(const Field &f, const Json &j);
/// Emits the structure-constant form (always re-parseable).
Json algebra_to_json(const Algebra &a);

FiniteGroup group_from_json(const Json &j);
Json group_to_json(const FiniteGroup &g);

/// Full problem: field, algebra, group, action, options. Enforces
/// gcd(char, |G|) = 1 at parse time.
Problem problem_from_json(const Json &j);
Problem load_problem(const std::string &path);

Json validation_report_to_json(const ValidationReport &r);
Json irr_table_to_json(const Field &f, const std::vector<Irreducible> &irrs);
Json skew_summary_to_json(const SkewAlgebra &s);
Json basic_report_to_json(const BasicReductionReport &r);
Json main_report_to_json(const MainTheoremReport &r);
Json quiver_report_to_json(const QuiverReport &r);
Json demonet_report_to_json(const DemonetReport &r);

} // namespace skewlab
