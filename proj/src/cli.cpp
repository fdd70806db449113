#include "minkval/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>

#include "minkval/harness.hpp"
#include "minkval/io.hpp"

namespace minkval::cli {

namespace {

using io::Json;

struct OpArgs {
  std::string kind;
  std::string body, m, n, spec;
};

void add_op_flags(CLI::App* sub, OpArgs& a, bool kind_required) {
  auto* kind = sub->add_option("KIND", a.kind, "proj, diff, d_m, pi_n, dtilde_m, z_combined, or cov_ + a contravariant kind");
  if (kind_required) kind->required();
  sub->add_option("--body", a.body, "Body K (JSON, ambient dimension 4)")->required();
  sub->add_option("--M", a.m, "Planar parameter body M (JSON)");
  sub->add_option("--N", a.n, "Planar parameter body N (JSON)");
}

ValuationOp load_op(const OpArgs& a) {
  if (!a.spec.empty()) {
    if (!a.m.empty() || !a.n.empty()) throw ParseError("--spec already carries M and N");
    ValuationOp op = io::op_from_json(io::read_json_file(a.spec), a.spec);
    if (!a.kind.empty() && a.kind != op.name())
      throw ParseError("KIND '" + a.kind + "' disagrees with " + a.spec + ": op '" + op.name() + "'");
    return op;
  }
  if (a.kind.empty()) throw ParseError("give KIND or --spec");
  std::optional<Polytope> m, n;
  if (!a.m.empty()) m = io::read_body(a.m, 2);
  if (!a.n.empty()) n = io::read_body(a.n, 2);
  return io::op_from_name(a.kind, std::move(m), std::move(n));
}

/// Hopf-style grid on S^3: (cos a cos b, cos a sin b, sin a cos c, sin a sin c).
std::vector<std::array<double, 4>> sphere_grid(int g) {
  std::vector<std::array<double, 4>> out;
  const double pi = std::numbers::pi;
  for (int i = 0; i <= g; ++i) {
    const double a = 0.5 * pi * i / g;
    for (int j = 0; j < 2 * g; ++j) {
      if (i == g && j > 0) continue;  // cos a = 0
      const double b = pi * j / g;
      for (int k = 0; k < 2 * g; ++k) {
        if (i == 0 && k > 0) continue;  // sin a = 0
        const double c = pi * k / g;
        out.push_back({std::cos(a) * std::cos(b), std::cos(a) * std::sin(b), std::sin(a) * std::cos(c), std::sin(a) * std::sin(c)});
      }
    }
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Minkowski valuations on polytopes in C^2", "minkval"};
  app.require_subcommand(1);

  std::string in_path, out_path, dir_text, dirs_path, csv_path, only;
  std::vector<std::string> mixed_paths;
  OpArgs op_args;
  std::uint64_t seed = 42;
  int trials = 100, grid = 8, precision = 15;
  bool flip = false;

  auto* hull = app.add_subcommand("hull", "Canonical convex hull of a vertex list");
  hull->add_option("IN", in_path)->required();
  hull->add_option("--out", out_path, "Write here instead of stdout");

  auto* volume = app.add_subcommand("volume", "Exact volume");
  volume->add_option("IN", in_path)->required();

  auto* support = app.add_subcommand("support", "Support function at one direction");
  support->add_option("IN", in_path)->required();
  support->add_option("--dir", dir_text, "\"a,b,c,d\"")->required();

  auto* mixed = app.add_subcommand("mixed", "Mixed volume V(K1,K2,K3,K4)");
  mixed->add_option("BODIES", mixed_paths)->required()->expected(4);

  auto* op = app.add_subcommand("op", "Apply a valuation");
  add_op_flags(op, op_args, false);
  op->add_option("--spec", op_args.spec, "Operator spec JSON {\"op\", \"M\", \"N\"}");
  op->add_option("--out", out_path, "Write the output body here");
  op->add_option("--dir", dir_text, "Print the support of the output at this direction");

  auto* decompose = app.add_subcommand("decompose", "Homogeneous decomposition coefficients c0..c4");
  add_op_flags(decompose, op_args, true);
  decompose->add_option("--dirs", dirs_path, "JSON array of directions")->required();

  auto* verify = app.add_subcommand("verify", "Run the property suite");
  verify->add_option("--seed", seed);
  verify->add_option("--trials", trials);
  verify->add_option("--only", only, "Run a single check");
  verify->add_flag("--flip-conjugation", flip, "Evaluate dtilde_m with the rejected convention (fault injection)");

  auto* sample = app.add_subcommand("sample", "Sample a support function on a sphere grid as CSV");
  add_op_flags(sample, op_args, true);
  sample->add_option("--sphere-grid", grid, "Grid resolution")->required()->check(CLI::Range(1, 200));
  sample->add_option("--csv", csv_path)->required();
  sample->add_option("--precision", precision, "Significant digits")->check(CLI::Range(1, 17));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (hull->parsed()) {
      const Json j = io::to_json(io::read_body(in_path).body);
      if (out_path.empty()) out << j.dump() << '\n';
      else io::write_json_file(out_path, j);
      return kOk;
    }
    if (volume->parsed()) {
      out << to_string(io::read_body(in_path).body.volume()) << '\n';
      return kOk;
    }
    if (support->parsed()) {
      const Polytope p = io::read_body(in_path).body;
      if (p.is_empty()) throw Error(in_path + ": body is empty");
      out << to_string(p.support(Covector(io::parse_direction(dir_text, p.ambient_dim(), "--dir")))) << '\n';
      return kOk;
    }
    if (mixed->parsed()) {
      std::vector<Polytope> bodies;
      for (const auto& path : mixed_paths) bodies.push_back(io::read_body(path, 4));
      out << to_string(mixed_volume(bodies)) << '\n';
      return kOk;
    }
    if (op->parsed()) {
      const ValuationOp v = load_op(op_args);
      const Polytope k = io::read_body(op_args.body, 4);
      const ValuationOutput result = apply(v, k);
      if (!dir_text.empty()) out << to_string(support_at(result, io::parse_direction(dir_text, 4, "--dir"))) << '\n';
      if (!out_path.empty()) io::write_json_file(out_path, io::to_json(result));
      if (dir_text.empty() && out_path.empty()) out << io::to_json(result).dump() << '\n';
      return kOk;
    }
    if (decompose->parsed()) {
      const ValuationOp v = load_op(op_args);
      const Polytope k = io::read_body(op_args.body, 4);
      const auto dirs = io::directions_from_json(io::read_json_file(dirs_path), dirs_path, 4);
      const auto table = harness::homogeneous_decomposition(v, k, dirs);
      for (std::size_t i = 0; i < dirs.size(); ++i) {
        Json d = Json::array(), c = Json::array();
        for (const auto& x : dirs[i]) d.push_back(io::rational_to_json(x));
        for (const auto& x : table.coefficients[i]) c.push_back(io::rational_to_json(x));
        out << Json{{"direction", d}, {"coefficients", c}}.dump() << '\n';
      }
      return kOk;
    }
    if (verify->parsed()) {
      harness::SuiteOptions o;
      o.seed = seed;
      o.trials = trials;
      if (!only.empty()) o.only = only;
      o.flip_conjugation = flip;
      const auto summary = harness::run_suite(o);
      harness::write_summary(summary, out);
      return summary.ok() ? kOk : kVerificationFailed;
    }
    if (sample->parsed()) {
      const ValuationOp v = load_op(op_args);
      const Polytope k = io::read_body(op_args.body, 4);
      const ValuationOutput result = apply(v, k);
      std::ofstream csv(csv_path);
      if (!csv) throw Error(csv_path + ": cannot write file");
      csv << "# lossy: decimal values rounded to " << precision << " significant digits; op " << v.name() << '\n';
      csv << "w1,w2,w3,w4,h\n";
      csv << std::setprecision(precision);
      for (const auto& w : sphere_grid(grid)) {
        // Doubles convert to rationals exactly; only the printed h is rounded.
        const std::vector<Rational> d{Rational(w[0]), Rational(w[1]), Rational(w[2]), Rational(w[3])};
        const Rational h = support_at(result, d);
        csv << w[0] << ',' << w[1] << ',' << w[2] << ',' << w[3] << ',' << h.get_d() << '\n';
      }
      return kOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace minkval::cli
