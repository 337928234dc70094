#include "skewlab/io.hpp"

#include <CLI11.hpp>
#include <iostream>

using namespace skewlab;

namespace {

constexpr std::uint64_t kSeedUnset = ~std::uint64_t{0};

struct Options {
  std::string path;
  std::uint64_t seed = kSeedUnset; // command line overrides the file
  int max_samples = 64;
  int degree_ceiling = 16;
  std::string output = "text";
};

void add_common(CLI::App *cmd, Options &opt, bool with_path = true) {
  if (with_path)
    cmd->add_option("file", opt.path, "problem description (JSON)")
        ->required()
        ->check(CLI::ExistingFile);
  cmd->add_option("--seed", opt.seed, "random seed for all pipelines");
  cmd->add_option("--max-samples", opt.max_samples,
                  "sample budget for randomized certificates");
  cmd->add_option("--degree-ceiling", opt.degree_ceiling,
                  "cap on minimal-polynomial degrees explored");
  cmd->add_option("--output", opt.output, "report format")
      ->check(CLI::IsMember({"text", "json"}));
}

Problem load(const Options &opt) {
  Problem p = load_problem(opt.path);
  if (opt.seed != kSeedUnset)
    p.seed = opt.seed;
  return p;
}

std::uint64_t seed_or_zero(const Options &opt) {
  return opt.seed == kSeedUnset ? 0 : opt.seed;
}

void emit(const Options &opt, const Json &j, const std::string &text) {
  if (opt.output == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::string items_text(const std::vector<CheckItem> &items) {
  std::string out;
  for (const auto &i : items) {
    out += (i.pass ? "PASS  " : "FAIL  ") + i.name;
    if (!i.detail.empty())
      out += "  [" + i.detail + "]";
    out += "\n";
  }
  return out;
}

int cmd_check(const Options &opt) {
  Problem p = load(opt);
  ExceptionalSetup setup = make_setup(p.action, p.block_order);
  ValidationReport r = validate_setup(setup);
  emit(opt, validation_report_to_json(r), items_text(r.items));
  return r.ok() ? 0 : 1;
}

int cmd_skew(const Options &opt) {
  Problem p = load(opt);
  SkewAlgebra s = skew_algebra(p.action);
  std::string text = "skew group algebra: dim " +
                     std::to_string(s.algebra->dim()) + " = |G| " +
                     std::to_string(s.action->group().order()) + " x dim A " +
                     std::to_string(s.base_dim()) + "\n";
  emit(opt, skew_summary_to_json(s), text);
  return 0;
}

int cmd_basic(const Options &opt) {
  Problem p = load(opt);
  SkewAlgebra s = skew_algebra(p.action);
  BasicReductionReport r = basic_reduction(*s.algebra, p.seed);
  std::string text = "basic reduction of the skew algebra (dim " +
                     std::to_string(s.algebra->dim()) + "):\n";
  for (const auto &c : r.projectives)
    text += "  projective class dim " + std::to_string(c.module.dim()) +
            " multiplicity " + std::to_string(c.multiplicity) + "\n";
  text += "basic dim " + std::to_string(r.basic().dim()) + "\n";
  emit(opt, basic_report_to_json(r), text);
  return 0;
}

int cmd_irr(const Options &opt, const std::string &group_spec,
            const std::string &field_spec) {
  Field f = field_spec == "Q"
                ? Field::rationals()
                : Field::prime(std::stol(field_spec.substr(1)));
  FiniteGroup g = [&] {
    if (group_spec.size() >= 2 &&
        (group_spec[0] == 'S' || group_spec[0] == 'C')) {
      int n = std::stoi(group_spec.substr(1));
      return group_spec[0] == 'S' ? FiniteGroup::symmetric(n)
                                  : FiniteGroup::cyclic(n);
    }
    throw IoError("group spec must be S<n> or C<n>");
  }();
  if (f.characteristic() != 0 && g.order() % f.characteristic() == 0)
    throw IoError("field characteristic divides the group order");
  std::vector<Irreducible> irrs = irreducible_reps(g, f, seed_or_zero(opt));
  std::string text = "irr(" + group_spec + ", " + f.describe() + "):\n";
  for (const auto &ir : irrs)
    text += "  (dim " + std::to_string(ir.rep.dim()) + ", end " +
            std::to_string(ir.end_dim) + ", mult " +
            std::to_string(ir.multiplicity_in_regular) + ")\n";
  emit(opt, irr_table_to_json(f, irrs), text);
  return 0;
}

int cmd_verify_main(const Options &opt) {
  Problem p = load(opt);
  ExceptionalSetup setup = make_setup(p.action, p.block_order);
  MainTheoremReport r = verify_main_theorem(setup, p.seed);
  std::string text = std::string(r.verified ? "VERIFIED" : "FAILED") +
                     ": dim skew " + std::to_string(r.dim_skew) +
                     ", dim End(F) " + std::to_string(r.dim_end_big) +
                     ", dim basic " + std::to_string(r.dim_basic) + "\n";
  for (const auto &o : r.collection.objects)
    text += "  " + o.label + ": dim " + std::to_string(o.skew_module.dim()) +
            ", n " + std::to_string(o.n) + ", End dim " +
            std::to_string(o.end_dim) + ", division " + o.division + "\n";
  text += items_text(r.items);
  emit(opt, main_report_to_json(r), text);
  return r.verified ? 0 : 1;
}

int cmd_quiver(const Options &opt) {
  Problem p = load(opt);
  ExceptionalSetup setup = make_setup(p.action, p.block_order);
  MainTheoremReport r = verify_main_theorem(setup, p.seed);
  QuiverReport q = quiver_of_basic(r.skew_basic.basic(), p.seed);
  DemonetReport d = demonet_check(setup, r, p.seed);
  int arrows = 0;
  for (const auto &row : q.arrow_counts)
    for (int c : row)
      arrows += c;
  std::string text = "quiver of the basic skew algebra: " +
                     std::to_string(q.nvertices) + " vertices, " +
                     std::to_string(arrows) + " arrows, " +
                     (q.quiver ? "acyclic" : "not acyclic") + "\n";
  text += "vertex count check: " + std::to_string(d.vertices) + " = ";
  for (size_t i = 0; i < d.irr_counts.size(); ++i)
    text += (i ? " + " : "") + std::to_string(d.irr_counts[i]);
  text += d.pass ? "  (PASS)\n" : "  (FAIL)\n";
  Json out;
  out["quiver"] = quiver_report_to_json(q);
  out["vertex_count_check"] = demonet_report_to_json(d);
  emit(opt, out, text);
  return d.pass ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"skewlab: skew group algebras, equivariant modules, and "
               "induced exceptional collections in exact arithmetic"};
  app.require_subcommand(1);

  Options opt;
  std::string group_spec, field_spec = "Q";

  CLI::App *check = app.add_subcommand("check", "validate a setup file");
  add_common(check, opt);
  CLI::App *skew = app.add_subcommand("skew", "construct the skew group algebra");
  add_common(skew, opt);
  CLI::App *basic = app.add_subcommand("basic", "basic reduction of the skew algebra");
  add_common(basic, opt);
  CLI::App *irr = app.add_subcommand("irr", "irreducible representation table");
  irr->add_option("group", group_spec, "group spec: S<n> or C<n>")->required();
  irr->add_option("--field", field_spec, "Q or F<p>");
  add_common(irr, opt, false);
  CLI::App *verify =
      app.add_subcommand("verify-main", "verify End(F) = basic skew algebra");
  add_common(verify, opt);
  CLI::App *quiver =
      app.add_subcommand("quiver", "quiver of the basic skew algebra");
  add_common(quiver, opt);

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed())
      return cmd_check(opt);
    if (skew->parsed())
      return cmd_skew(opt);
    if (basic->parsed())
      return cmd_basic(opt);
    if (irr->parsed())
      return cmd_irr(opt, group_spec, field_spec);
    if (verify->parsed())
      return cmd_verify_main(opt);
    if (quiver->parsed())
      return cmd_quiver(opt);
  } catch (const UndecidedError &e) {
    Json j{{"status", "undecided"}, {"reason", e.what()}};
    std::cerr << j.dump() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
