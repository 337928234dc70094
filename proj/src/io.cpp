#include "skewlab/io.hpp"

#include <fstream>
#include <numeric>

namespace skewlab {

namespace {

const Json &need(const Json &j, const char *key) {
  if (!j.is_object() || !j.contains(key))
    throw IoError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int as_int(const Json &j, const char *what) {
  if (!j.is_number_integer())
    throw IoError(std::string(what) + " must be an integer");
  return j.get<int>();
}

} // namespace

Field field_from_json(const Json &j) {
  if (j.is_string() && j.get<std::string>() == "Q")
    return Field::rationals();
  if (j.is_object() && j.contains("Fp"))
    return Field::prime(as_int(j.at("Fp"), "Fp"));
  throw IoError("field must be \"Q\" or {\"Fp\": p}");
}

Json field_to_json(const Field &f) {
  if (f.kind() == Field::Kind::Rationals)
    return Json("Q");
  return Json{{"Fp", f.p()}};
}

std::vector<Fel> vector_from_json(const Field &f, const Json &j) {
  if (!j.is_array())
    throw IoError("vector must be an array of strings");
  std::vector<Fel> v;
  for (const auto &e : j) {
    if (!e.is_string())
      throw IoError("vector entries must be exact string literals");
    v.push_back(f.from_string(e.get<std::string>()));
  }
  return v;
}

Json vector_to_json(const Field &f, const std::vector<Fel> &v) {
  Json a = Json::array();
  for (const Fel &x : v)
    a.push_back(f.to_string(x));
  return a;
}

Matrix matrix_from_json(const Field &f, const Json &j) {
  if (!j.is_array() || j.empty())
    throw IoError("matrix must be a non-empty array of rows");
  std::vector<std::vector<Fel>> rows;
  for (const auto &r : j)
    rows.push_back(vector_from_json(f, r));
  for (const auto &r : rows)
    if (r.size() != rows.front().size())
      throw IoError("matrix rows have unequal lengths");
  return Matrix::from_rows(f, rows);
}

Json matrix_to_json(const Field &f, const Matrix &m) {
  Json a = Json::array();
  for (int i = 0; i < m.rows(); ++i)
    a.push_back(vector_to_json(f, m.row(i)));
  return a;
}

Quiver quiver_from_json(const Json &j) {
  std::vector<std::string> vertices;
  for (const auto &v : need(j, "vertices")) {
    if (!v.is_string())
      throw IoError("quiver vertices must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<Quiver::Arrow> arrows;
  if (j.contains("arrows"))
    for (const auto &a : j.at("arrows")) {
      Quiver::Arrow arrow;
      arrow.name = need(a, "name").get<std::string>();
      auto vertex_of = [&](const Json &x, const char *what) {
        if (x.is_string()) {
          auto it = std::find(vertices.begin(), vertices.end(),
                              x.get<std::string>());
          if (it == vertices.end())
            throw IoError(std::string("arrow ") + what +
                          " names an unknown vertex " + x.get<std::string>());
          return static_cast<int>(it - vertices.begin());
        }
        return as_int(x, what);
      };
      arrow.source = vertex_of(need(a, "source"), "source");
      arrow.target = vertex_of(need(a, "target"), "target");
      arrows.push_back(std::move(arrow));
    }
  return Quiver(vertices, arrows);
}

Json quiver_to_json(const Quiver &q) {
  Json out;
  out["vertices"] = q.vertices();
  Json arrows = Json::array();
  for (const auto &a : q.arrows())
    arrows.push_back(Json{{"name", a.name},
                          {"source", q.vertices()[a.source]},
                          {"target", q.vertices()[a.target]}});
  out["arrows"] = std::move(arrows);
  return out;
}

Algebra algebra_from_json(const Field &f, const Json &j) {
  if (j.contains("quiver"))
    return Algebra::path_algebra(quiver_from_json(j.at("quiver")), f);
  std::vector<std::string> labels;
  for (const auto &l : need(j, "labels"))
    labels.push_back(l.get<std::string>());
  int d = static_cast<int>(labels.size());
  const Json &tab = need(j, "table");
  if (!tab.is_array() || static_cast<int>(tab.size()) != d)
    throw IoError("structure table must have one row block per basis element");
  std::vector<Fel> structure;
  structure.reserve(static_cast<size_t>(d) * d * d);
  for (const auto &row : tab) {
    if (!row.is_array() || static_cast<int>(row.size()) != d)
      throw IoError("structure table row block has wrong length");
    for (const auto &cell : row) {
      std::vector<Fel> c = vector_from_json(f, cell);
      if (static_cast<int>(c.size()) != d)
        throw IoError("structure table coefficient row has wrong length");
      structure.insert(structure.end(), c.begin(), c.end());
    }
  }
  std::vector<Fel> unit = vector_from_json(f, need(j, "unit"));
  std::vector<std::vector<Fel>> gens;
  if (j.contains("generators"))
    for (const auto &g : j.at("generators"))
      gens.push_back(vector_from_json(f, g));
  return Algebra(f, labels, structure, unit, gens);
}

Json algebra_to_json(const Algebra &a) {
  const Field &f = a.field();
  Json out;
  out["labels"] = a.basis_labels();
  Json tab = Json::array();
  for (int i = 0; i < a.dim(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < a.dim(); ++j) {
      std::vector<Fel> c(a.dim());
      for (int k = 0; k < a.dim(); ++k)
        c[k] = a.c(i, j, k);
      row.push_back(vector_to_json(f, c));
    }
    tab.push_back(std::move(row));
  }
  out["table"] = std::move(tab);
  out["unit"] = vector_to_json(f, a.unit());
  Json gens = Json::array();
  for (const auto &g : a.generators())
    gens.push_back(vector_to_json(f, g));
  out["generators"] = std::move(gens);
  return out;
}

FiniteGroup group_from_json(const Json &j) {
  int degree = as_int(need(j, "degree"), "group degree");
  std::vector<Perm> gens;
  for (const auto &g : need(j, "generators")) {
    Perm p;
    for (const auto &x : g)
      p.push_back(as_int(x, "permutation image"));
    gens.push_back(std::move(p));
  }
  return FiniteGroup::from_generators(degree, gens);
}

Json group_to_json(const FiniteGroup &g) {
  Json out;
  out["degree"] = g.degree();
  Json gens = Json::array();
  for (int gi : g.generator_indices())
    gens.push_back(g.element(gi));
  out["generators"] = std::move(gens);
  return out;
}

Problem problem_from_json(const Json &j) {
  Field f = field_from_json(need(j, "field"));
  auto algebra =
      std::make_shared<Algebra>(algebra_from_json(f, need(j, "algebra")));
  auto group = std::make_shared<FiniteGroup>(group_from_json(need(j, "group")));
  if (f.characteristic() != 0 &&
      std::gcd(static_cast<long>(group->order()), f.characteristic()) != 1)
    throw IoError("field characteristic divides the group order");
  const Json &act = need(j, "action");
  ActionPtr action;
  if (act.contains("matrices")) {
    std::vector<Matrix> mats;
    for (const auto &m : act.at("matrices"))
      mats.push_back(matrix_from_json(f, m));
    action = std::make_shared<const AlgebraAction>(
        AlgebraAction::from_generator_matrices(algebra, group, mats));
  } else if (act.contains("vertex_perms")) {
    auto perms_of = [&](const Json &a) {
      std::vector<Perm> ps;
      for (const auto &g : a) {
        Perm p;
        for (const auto &x : g)
          p.push_back(as_int(x, "permutation image"));
        ps.push_back(std::move(p));
      }
      return ps;
    };
    std::vector<Perm> vperms = perms_of(act.at("vertex_perms"));
    std::vector<Perm> aperms(vperms.size());
    if (act.contains("arrow_perms"))
      aperms = perms_of(act.at("arrow_perms"));
    std::vector<std::vector<Fel>> signs;
    if (act.contains("arrow_signs"))
      for (const auto &s : act.at("arrow_signs"))
        signs.push_back(vector_from_json(f, s));
    action = std::make_shared<const AlgebraAction>(AlgebraAction::on_path_algebra(
        algebra, group, vperms, aperms, signs));
  } else if (act.contains("trivial") && act.at("trivial").get<bool>()) {
    action =
        std::make_shared<const AlgebraAction>(AlgebraAction::trivial(algebra, group));
  } else {
    throw IoError(
        "action needs \"matrices\", \"vertex_perms\", or \"trivial\": true");
  }
  Problem p{f, algebra, group, action};
  if (j.contains("options")) {
    const Json &o = j.at("options");
    if (o.contains("seed"))
      p.seed = o.at("seed").get<std::uint64_t>();
    if (o.contains("max_samples"))
      p.max_samples = as_int(o.at("max_samples"), "max_samples");
    if (o.contains("degree_ceiling"))
      p.degree_ceiling = as_int(o.at("degree_ceiling"), "degree_ceiling");
    if (o.contains("block_order"))
      for (const auto &b : o.at("block_order"))
        p.block_order.push_back(as_int(b, "block_order entry"));
  }
  return p;
}

Problem load_problem(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw IoError("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception &e) {
    throw IoError(path + ": " + e.what());
  }
  try {
    return problem_from_json(j);
  } catch (const std::exception &e) {
    throw IoError(path + ": " + e.what());
  }
}

Json validation_report_to_json(const ValidationReport &r) {
  Json out;
  out["ok"] = r.ok();
  Json items = Json::array();
  for (const auto &i : r.items)
    items.push_back(
        Json{{"name", i.name}, {"pass", i.pass}, {"detail", i.detail}});
  out["items"] = std::move(items);
  return out;
}

Json irr_table_to_json(const Field &f, const std::vector<Irreducible> &irrs) {
  Json out;
  out["field"] = field_to_json(f);
  Json rows = Json::array();
  int total = 0;
  for (const auto &ir : irrs) {
    rows.push_back(Json{{"name", ir.rep.name()},
                        {"dim", ir.rep.dim()},
                        {"end_dim", ir.end_dim},
                        {"mult", ir.multiplicity_in_regular}});
    total += ir.rep.dim() * ir.multiplicity_in_regular;
  }
  out["rows"] = std::move(rows);
  out["sum_dim_times_mult"] = total;
  return out;
}

Json skew_summary_to_json(const SkewAlgebra &s) {
  Json out;
  out["dim"] = s.algebra->dim();
  out["group_order"] = s.action->group().order();
  out["base_dim"] = s.base_dim();
  out["algebra"] = algebra_to_json(*s.algebra);
  return out;
}

Json basic_report_to_json(const BasicReductionReport &r) {
  Json out;
  Json classes = Json::array();
  for (const auto &p : r.projectives)
    classes.push_back(Json{{"dim", p.module.dim()},
                           {"multiplicity", p.multiplicity}});
  out["projective_classes"] = std::move(classes);
  out["basic_dim"] = r.basic().dim();
  out["cartan"] = r.cartan;
  out["basic_algebra"] = algebra_to_json(r.basic());
  return out;
}

Json main_report_to_json(const MainTheoremReport &r) {
  const Field &f = r.collection.skew.algebra->field();
  Json out;
  out["verified"] = r.verified;
  out["dim_skew"] = r.dim_skew;
  out["dim_end_big"] = r.dim_end_big;
  out["dim_basic"] = r.dim_basic;
  Json objs = Json::array();
  for (const auto &o : r.collection.objects)
    objs.push_back(Json{{"label", o.label},
                        {"dim", o.skew_module.dim()},
                        {"n", o.n},
                        {"end_dim", o.end_dim},
                        {"division", o.division}});
  out["objects"] = std::move(objs);
  out["matching"] = r.matching;
  Json items = Json::array();
  for (const auto &i : r.items)
    items.push_back(
        Json{{"name", i.name}, {"pass", i.pass}, {"detail", i.detail}});
  out["items"] = std::move(items);
  Json cchecks = Json::array();
  for (const auto &i : r.collection.checks.items)
    if (!i.pass)
      cchecks.push_back(Json{{"name", i.name}, {"detail", i.detail}});
  out["failed_collection_checks"] = std::move(cchecks);
  if (r.verified)
    out["isomorphism"] = matrix_to_json(f, r.iso);
  return out;
}

Json quiver_report_to_json(const QuiverReport &r) {
  Json out;
  out["vertices"] = r.nvertices;
  out["vertex_end_dims"] = r.vertex_end_dims;
  out["arrow_counts"] = r.arrow_counts;
  int total = 0;
  for (const auto &row : r.arrow_counts)
    for (int c : row)
      total += c;
  out["arrows"] = total;
  out["acyclic"] = r.quiver.has_value();
  if (r.quiver)
    out["quiver"] = quiver_to_json(*r.quiver);
  return out;
}

Json demonet_report_to_json(const DemonetReport &r) {
  Json out;
  out["vertices"] = r.vertices;
  out["irr_counts_per_block"] = r.irr_counts;
  out["pass"] = r.pass;
  return out;
}

} // namespace skewlab
