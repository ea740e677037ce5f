#include "tropsym/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <sstream>

#include "tropsym/chain_of_loops.hpp"
#include "tropsym/chipfiring.hpp"
#include "tropsym/errors.hpp"
#include "tropsym/io.hpp"
#include "tropsym/maps.hpp"
#include "tropsym/sympow.hpp"

namespace tropsym::cli {

namespace {

using io::json;

struct Options {
  std::string model;
  std::string divisor;
  std::string klass;
  std::string spec;
  std::string complex;
  std::string base;
  std::string format = "json";
  std::string resolution;
  std::string shape;
  int d = -1;
  std::int64_t refinement = 1;
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

ModelPtr load_model(const Options& o) {
  if (o.model.empty()) throw SchemaError("--model", "required");
  return share(io::model_from_json(io::read_json_file(o.model)));
}

Divisor load_divisor(const Options& o, const ModelPtr& host) {
  if (o.divisor.empty()) throw SchemaError("--divisor", "required");
  return io::divisor_from_json(io::read_json_file(o.divisor), host);
}

PointOnModel base_point(const Options& o, const Model& m) {
  if (o.base.empty()) return default_base(m);
  auto v = m.find_vertex(o.base);
  if (!v) throw SchemaError("--base", "unknown vertex '" + o.base + "'");
  return PointOnModel::at_vertex(*v);
}

int degree_option(const Options& o) {
  if (o.d < 0) throw SchemaError("--d", "a nonnegative degree is required");
  return o.d;
}

std::string cmd_sympow(const Options& o) {
  const SymPowComplex c = enumerate_cells(load_model(o), degree_option(o));
  if (o.format == "fvector") {
    std::string line;
    for (std::size_t n : f_vector(c)) {
      line += (line.empty() ? "" : " ") + std::to_string(n);
    }
    return line + "\n";
  }
  if (o.format == "dot") return io::complex_to_dot(c);
  return dump(io::complex_to_json(c));
}

std::string cmd_fvector(const Options& o) {
  const SymPowComplex c = enumerate_cells(load_model(o), degree_option(o));
  return dump({{"d", c.degree()},
               {"f_vector", f_vector(c)},
               {"euler_characteristic", euler_characteristic(c)}});
}

std::string cmd_rank(const Options& o) {
  const ModelPtr m = load_model(o);
  const Divisor d = load_divisor(o, m);
  return dump({{"degree", d.degree()},
               {"rank", rank(d, RankOptions{o.refinement})}});
}

std::string cmd_rrcheck(const Options& o) {
  const ModelPtr m = load_model(o);
  const Divisor d = load_divisor(o, m);
  const RankOptions options{o.refinement};
  const int r = rank(d, options);
  const int r_dual = rank(canonical_divisor(m) - d, options);
  const int g = genus(*m);
  const std::int64_t defect = r - r_dual - (d.degree() - g + 1);
  return dump({{"degree", d.degree()},
               {"genus", g},
               {"rank", r},
               {"rank_of_dual", r_dual},
               {"defect", defect}});
}

std::string cmd_reduce(const Options& o) {
  const ModelPtr m = load_model(o);
  const Divisor d = load_divisor(o, m);
  const PointOnModel q = base_point(o, *m);
  return dump({{"base", io::point_to_json(*m, q)},
               {"reduced", io::divisor_to_json(q_reduced(d, q))}});
}

std::string cmd_abeljacobi(const Options& o) {
  const ModelPtr m = load_model(o);
  const Divisor d = load_divisor(o, m);
  return dump(io::class_to_json(abel_jacobi(d, base_point(o, *m))));
}

ChainOfLoopsSpec load_spec(const Options& o) {
  if (o.spec.empty()) throw SchemaError("--spec", "required");
  return io::chain_spec_from_json(io::read_json_file(o.spec));
}

std::string cmd_chain(const Options& o) {
  return dump(io::model_to_json(chain_of_loops(load_spec(o))));
}

std::string cmd_generic(const Options& o) {
  const ChainOfLoopsSpec spec = load_spec(o);
  return dump({{"genus", spec.genus()}, {"generic", is_generic_chain(spec)}});
}

std::vector<int> parse_shape(const std::string& text) {
  std::vector<int> shape;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      const int a = std::stoi(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      shape.push_back(a);
    } catch (const std::logic_error&) {
      throw SchemaError("--shape", "expected comma-separated integers");
    }
  }
  if (shape.empty()) throw SchemaError("--shape", "required");
  return shape;
}

std::string cmd_dejonquieres(const Options& o) {
  const ModelPtr m = load_model(o);
  if (o.klass.empty()) throw SchemaError("--class", "required");
  const json j = io::read_json_file(o.klass);
  // A class file as written by `abeljacobi`, or a bare divisor.
  PointOnModel base = base_point(o, *m);
  Divisor d(m);
  if (j.is_object() && j.contains("representative")) {
    if (j.contains("base")) base = io::point_from_json(j["base"], *m, "/base");
    d = io::divisor_from_json(j["representative"], m);
  } else {
    d = io::divisor_from_json(j, m);
  }
  if (o.resolution.empty()) throw SchemaError("--resolution", "required");
  const Rational resolution = io::rational_from_json(o.resolution, "--resolution");
  const auto found = dejonquieres_search(
      DeJonquieresQuery{DivisorClass(d, base), parse_shape(o.shape), resolution});
  json out = json::array();
  for (const auto& x : found) out.push_back(io::divisor_to_json(x));
  return dump(out);
}

std::string cmd_validate(const Options& o) {
  const ModelPtr m = load_model(o);
  json semistability = json::array();
  for (const auto& v : validate_strictly_semistable(*m)) {
    semistability.push_back(
        {{"kind", v.kind == SemistabilityViolation::Kind::LoopEdge ? "loop_edge"
                                                                   : "leaf_vertex"},
         {"id", v.id}});
  }
  json out = {{"semistability_violations", semistability}};
  std::vector<ComplexViolation> violations;
  if (!o.complex.empty()) {
    violations = validate_complex(io::complex_from_json(io::read_json_file(o.complex), m));
  } else if (o.d >= 0) {
    violations = validate_complex(enumerate_cells(m, o.d));
  }
  json complex = json::array();
  for (const auto& v : violations) {
    complex.push_back({{"cell", v.cell}, {"message", v.message}});
  }
  out["complex_violations"] = complex;
  out["valid"] = semistability.empty() && complex.empty();
  return dump(out);
}

json error_json(const char* kind, const std::string& message,
                const std::string& path = "") {
  json e = {{"kind", kind}, {"message", message}};
  if (!path.empty()) e["path"] = path;
  return {{"error", e}};
}

}  // namespace

Result run(const std::vector<std::string>& args) {
  CLI::App app{"Symmetric powers and divisor theory of metric graphs", "tropsym"};
  app.require_subcommand(1);
  Options o;

  auto model = [&](CLI::App* sub) { sub->add_option("--model", o.model, "model JSON file"); };
  auto divisor = [&](CLI::App* sub) {
    sub->add_option("--divisor", o.divisor, "divisor JSON file");
  };
  auto refinement = [&](CLI::App* sub) {
    sub->add_option("--refinement", o.refinement, "extra lattice subdivision")
        ->check(CLI::PositiveNumber);
  };

  auto* sympow = app.add_subcommand("sympow", "cells of the d-th symmetric power");
  model(sympow);
  sympow->add_option("--d", o.d, "degree");
  sympow->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "fvector", "dot"}));

  auto* fvector = app.add_subcommand("fvector", "f-vector and Euler characteristic");
  model(fvector);
  fvector->add_option("--d", o.d, "degree");

  auto* rank_cmd = app.add_subcommand("rank", "Baker-Norine rank");
  model(rank_cmd);
  divisor(rank_cmd);
  refinement(rank_cmd);

  auto* rrcheck = app.add_subcommand("rrcheck", "Riemann-Roch defect");
  model(rrcheck);
  divisor(rrcheck);
  refinement(rrcheck);

  auto* reduce = app.add_subcommand("reduce", "reduced divisor at a base vertex");
  model(reduce);
  divisor(reduce);
  reduce->add_option("--base", o.base, "base vertex id");

  auto* abeljacobi = app.add_subcommand("abeljacobi", "class of an effective divisor");
  model(abeljacobi);
  divisor(abeljacobi);
  abeljacobi->add_option("--base", o.base, "base vertex id");

  auto* chain = app.add_subcommand("chain", "chain of loops model from a spec");
  chain->add_option("--spec", o.spec, "chain spec JSON file");

  auto* generic = app.add_subcommand("generic", "genericity of a chain of loops");
  generic->add_option("--spec", o.spec, "chain spec JSON file");

  auto* dejonquieres =
      app.add_subcommand("dejonquieres", "grid search for divisors of a given shape");
  model(dejonquieres);
  dejonquieres->add_option("--class", o.klass, "class or divisor JSON file");
  dejonquieres->add_option("--shape", o.shape, "multiplicities, e.g. 2,1,1");
  dejonquieres->add_option("--resolution", o.resolution, "grid step, e.g. 1/6");
  dejonquieres->add_option("--base", o.base, "base vertex id");

  auto* validate = app.add_subcommand("validate", "semistability and complex checks");
  model(validate);
  validate->add_option("--d", o.d, "degree of the complex to enumerate");
  validate->add_option("--complex", o.complex, "complex JSON file to check");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {0, app.help()};
  } catch (const CLI::CallForAllHelp&) {
    return {0, app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    return {2, dump(error_json("usage", e.what()))};
  }

  try {
    const auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "sympow") return {0, cmd_sympow(o)};
    if (name == "fvector") return {0, cmd_fvector(o)};
    if (name == "rank") return {0, cmd_rank(o)};
    if (name == "rrcheck") return {0, cmd_rrcheck(o)};
    if (name == "reduce") return {0, cmd_reduce(o)};
    if (name == "abeljacobi") return {0, cmd_abeljacobi(o)};
    if (name == "chain") return {0, cmd_chain(o)};
    if (name == "generic") return {0, cmd_generic(o)};
    if (name == "dejonquieres") return {0, cmd_dejonquieres(o)};
    return {0, cmd_validate(o)};
  } catch (const SchemaError& e) {
    return {2, dump(error_json("schema", e.what(), e.path()))};
  } catch (const DomainError& e) {
    return {1, dump(error_json("domain", e.what()))};
  }
}

}  // namespace tropsym::cli
