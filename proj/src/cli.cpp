#include "axkatz/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <sstream>

#include "axkatz/bounds.hpp"
#include "axkatz/calculus.hpp"
#include "axkatz/json_io.hpp"
#include "axkatz/oracle.hpp"

namespace axkatz::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::uint64_t parse_uint(const std::string& text, const std::string& what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw ValidationError(what + ": expected a non-negative integer, got '" + text + "'");
  try {
    return std::stoull(text);
  } catch (const std::out_of_range&) {
    throw ValidationError(what + ": '" + text + "' is too large");
  }
}

std::vector<std::uint64_t> parse_uint_list(const std::string& text, const std::string& what) {
  std::vector<std::uint64_t> out;
  for (const std::string& item : split(text, ',')) out.push_back(parse_uint(item, what));
  if (out.empty()) throw ValidationError(what + ": empty list");
  return out;
}

Partition parse_partition(const std::string& text, const std::string& what) {
  std::vector<int> parts;
  for (std::uint64_t v : parse_uint_list(text, what)) {
    if (v > 1000) throw ValidationError(what + ": part " + std::to_string(v) + " is too large");
    parts.push_back(static_cast<int>(v));
  }
  return Partition(std::move(parts));
}

// "beta:d[,beta:d...]"
std::vector<Target> parse_targets(const std::string& text) {
  std::vector<Target> out;
  for (const std::string& item : split(text, ',')) {
    const auto pieces = split(item, ':');
    if (pieces.size() != 2) throw ValidationError("targets: expected beta:d, got '" + item + "'");
    const std::uint64_t beta = parse_uint(pieces[0], "targets");
    if (beta > 64) throw ValidationError("targets: beta " + pieces[0] + " is too large");
    out.push_back({static_cast<unsigned>(beta), parse_uint(pieces[1], "targets")});
  }
  return out;
}

// "m_1,m_2,...:d"
std::pair<AbelianShape, std::uint64_t> parse_target_shape(const std::string& text) {
  const auto pieces = split(text, ':');
  if (pieces.size() != 2)
    throw ValidationError("target-shape: expected m1,m2,...:d, got '" + text + "'");
  return {AbelianShape(parse_uint_list(pieces[0], "target-shape")),
          parse_uint(pieces[1], "target-shape")};
}

std::optional<BigInt> parse_budget(const std::string& text) {
  if (text == "inf") return std::nullopt;
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw ValidationError("D: expected a non-negative integer or 'inf', got '" + text + "'");
  return BigInt(text);
}

struct Common {
  std::uint64_t p = 0;
  std::string alpha;
  std::string targets;
  std::vector<std::string> target_shapes;
};

TargetSpec collect_targets(const Prime& p, const Common& c) {
  std::vector<Target> targets;
  if (!c.targets.empty()) targets = parse_targets(c.targets);
  std::vector<std::pair<AbelianShape, std::uint64_t>> shapes;
  for (const std::string& s : c.target_shapes) shapes.push_back(parse_target_shape(s));
  const TargetSpec expanded = expand_targets(p, shapes);
  targets.insert(targets.end(), expanded.targets().begin(), expanded.targets().end());
  if (targets.empty()) throw ValidationError("give --targets or --target-shape");
  return TargetSpec(p, std::move(targets));
}

std::vector<FiniteMap> read_maps(const std::string& list) {
  std::vector<FiniteMap> maps;
  for (const std::string& path : split(list, ','))
    maps.push_back(finite_map_from_json(read_json_file(path)));
  if (maps.empty()) throw ValidationError("no map files given");
  return maps;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return quoted + "\"";
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string join(const std::vector<Target>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i].beta) + ":" + std::to_string(v[i].d);
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Group-theoretic Ax-Katz bounds, functional degrees and brute-force checks",
               "axkatz"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub, bool need_targets) {
    sub->add_option("--p", common.p, "prime")->required();
    sub->add_option("--alpha", common.alpha, "exponent partition, e.g. 2,1")->required();
    if (need_targets) {
      sub->add_option("--targets", common.targets, "cyclic targets beta:d[,beta:d...]");
      sub->add_option("--target-shape", common.target_shapes,
                      "non-cyclic target m1,m2,...:d (repeatable)");
    }
  };

  auto* bound = app.add_subcommand("bound", "main lower bound and its intermediate quantities");
  std::string domain;
  bound->add_option("--p", common.p, "prime");
  bound->add_option("--alpha", common.alpha, "exponent partition");
  bound->add_option("--targets", common.targets, "cyclic targets beta:d[,beta:d...]");
  bound->add_option("--target-shape", common.target_shapes, "target m1,m2,...:d (repeatable)");
  bound->add_option("--domain", domain, "any finite abelian domain m1,m2,...; per-prime bounds");

  auto* vp = app.add_subcommand("vp", "minimum of nu_p over |n| <= D with a witness");
  std::string budget;
  add_common(vp, false);
  vp->add_option("--D", budget, "budget D (integer or inf)")->required();

  auto* nu = app.add_subcommand("nu", "nu_p(alpha, n)");
  std::string nvec;
  add_common(nu, false);
  nu->add_option("--n", nvec, "multi-index n_1,...,n_N")->required();

  auto* delta = app.add_subcommand("delta", "maximal functional degree delta_p(alpha, beta)");
  std::uint64_t beta = 1;
  add_common(delta, false);
  delta->add_option("--beta", beta, "codomain exponent")->required();

  auto* fdeg = app.add_subcommand("fdeg", "functional degree of a tabulated map");
  std::string map_file;
  fdeg->add_option("--map", map_file, "function-table JSON file")->required();

  auto* conj = app.add_subcommand("conjugate", "conjugate partition");
  std::string parts;
  conj->add_option("--parts", parts, "partition, e.g. 3,2,2,1")->required();

  auto* zeros = app.add_subcommand("zeros", "common zero count of maps sharing a domain");
  std::string map_files;
  zeros->add_option("--maps", map_files, "comma-separated function-table files")->required();

  auto* verify = app.add_subcommand("verify", "check the bound against enumerated or sampled systems");
  std::string mode = "exhaustive";
  VerifyOptions options;
  bool serial = false;
  std::string verify_maps;
  verify->add_option("--p", common.p, "prime");
  verify->add_option("--alpha", common.alpha, "exponent partition, e.g. 2,1");
  verify->add_option("--targets", common.targets, "cyclic targets beta:d[,beta:d...]");
  verify->add_option("--target-shape", common.target_shapes, "target m1,m2,...:d (repeatable)");
  verify->add_option("--maps", verify_maps, "check one system given as function-table files");
  verify->add_option("--mode", mode, "exhaustive or sampled")
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  verify->add_option("--seed", options.seed, "seed for sampled mode");
  verify->add_option("--cap", options.table_cap, "cap on |B|^|A| for exhaustive mode");
  verify->add_option("--samples", options.samples, "systems drawn in sampled mode");
  verify->add_flag("--serial", serial, "use the serial reference kernels");

  auto* trace = app.add_subcommand("trace", "integral form of the zero count");
  std::string trace_files;
  std::optional<unsigned> trace_beta;
  trace->add_option("--maps", trace_files, "maps into Z/p^beta_j (comma-separated files)")->required();
  trace->add_option("--beta", trace_beta, "working exponent (default ord_p(#Z) + 1)");

  auto* scan = app.add_subcommand("scan", "bounds over a grid of primes, partitions and targets");
  std::string primes = "2";
  std::string alphas;
  int max_alpha = 0;
  std::string target_family = "1:1";
  std::string format = "csv";
  std::uint64_t limit = 100'000;
  scan->add_option("--primes", primes, "primes, e.g. 2,3,5");
  scan->add_option("--alphas", alphas, "partitions separated by ';', e.g. 2,1;1,1,1");
  scan->add_option("--max-alpha", max_alpha, "all partitions of 1..N");
  scan->add_option("--targets-family", target_family, "target lists separated by ';'");
  scan->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  scan->add_option("--limit", limit, "maximum number of rows");

  auto* polybound = app.add_subcommand("polybound", "polynomial systems over Z/m");
  std::string system_file;
  std::uint64_t modulus = 0, vars = 0;
  std::string degrees;
  polybound->add_option("--system", system_file, "polynomial-system JSON file");
  polybound->add_option("--m", modulus, "modulus");
  polybound->add_option("--n", vars, "number of variables");
  polybound->add_option("--degrees", degrees, "polynomial degrees d_1,...,d_r");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    Json result;
    int code = 0;
    if (bound->parsed()) {
      if (!domain.empty()) {
        if (!common.targets.empty() || common.p != 0 || !common.alpha.empty())
          throw ValidationError("--domain takes targets through --target-shape only");
        const AbelianShape A(parse_uint_list(domain, "domain"));
        std::vector<std::pair<AbelianShape, std::uint64_t>> shapes;
        for (const std::string& s : common.target_shapes) shapes.push_back(parse_target_shape(s));
        if (shapes.empty()) throw ValidationError("give at least one --target-shape");
        Json primes_json = Json::object();
        for (const auto& [l, b] : multi_prime_bounds(A, shapes)) primes_json[std::to_string(l)] = to_json(b);
        result = Json{{"domain", to_json(A)}, {"primes", std::move(primes_json)}};
      } else {
        if (common.p == 0 || common.alpha.empty())
          throw ValidationError("bound needs --p and --alpha, or --domain");
        const Prime p(common.p);
        result = to_json(main_bound(p, parse_partition(common.alpha, "alpha"), collect_targets(p, common)));
      }
    } else if (vp->parsed()) {
      result = to_json(Vp(Prime(common.p), parse_partition(common.alpha, "alpha"), parse_budget(budget)));
    } else if (nu->parsed()) {
      std::vector<BigInt> n;
      for (std::uint64_t v : parse_uint_list(nvec, "n")) n.emplace_back(v);
      result = Json{{"nu", to_json(nu_p(Prime(common.p), parse_partition(common.alpha, "alpha"), n))}};
    } else if (delta->parsed()) {
      if (beta < 1 || beta > 64) throw ValidationError("beta must lie in [1, 64]");
      const PGroupShape A(Prime(common.p), parse_partition(common.alpha, "alpha"));
      result = Json{{"delta", to_json(delta_max(A, static_cast<unsigned>(beta)))}};
    } else if (fdeg->parsed()) {
      result = Json{{"fdeg", to_json(functional_degree(finite_map_from_json(read_json_file(map_file))))}};
    } else if (conj->parsed()) {
      const Partition c = conjugate(parse_partition(parts, "parts"));
      result = std::vector<int>(c.parts().begin(), c.parts().end());
    } else if (zeros->parsed()) {
      const auto maps = read_maps(map_files);
      result = to_json(zero_count(maps.front().domain(), maps));
    } else if (verify->parsed() && !verify_maps.empty()) {
      if (common.p != 0 || !common.alpha.empty() || !common.targets.empty() ||
          !common.target_shapes.empty())
        throw ValidationError("--maps takes the domain and caps from the maps themselves");
      const auto maps = read_maps(verify_maps);
      const PGroupShape A = to_pgroup(maps.front().domain());
      std::vector<std::pair<AbelianShape, std::uint64_t>> shapes;
      for (const FiniteMap& f : maps) {
        const ExtendedDegree d = functional_degree(f);
        if (!d.is_finite() || d.value() < 1)
          throw ValidationError("every map needs a finite functional degree >= 1, got " + d.to_string());
        shapes.emplace_back(f.codomain(), d.value());
      }
      const BoundReport report = main_bound(A.prime(), A.exponents(), expand_targets(A.prime(), shapes));
      const ZeroCount z = zero_count(maps.front().domain(), maps);
      const ExtendedDegree ord = ord_of_count(z.count, A.prime());
      const bool pass = ord >= ExtendedDegree::finite(report.bound);
      result = Json{{"report", to_json(report)}, {"count", z.count}, {"ord", to_json(ord)}, {"pass", pass}};
      code = pass ? 0 : 1;
    } else if (verify->parsed()) {
      if (common.p == 0 || common.alpha.empty()) throw ValidationError("verify needs --p and --alpha, or --maps");
      const Prime p(common.p);
      const PGroupShape A(p, parse_partition(common.alpha, "alpha"));
      std::vector<std::pair<AbelianShape, std::uint64_t>> shapes;
      if (!common.targets.empty())
        for (const Target& t : parse_targets(common.targets))
          shapes.emplace_back(AbelianShape({checked_pow(p, t.beta)}), t.d);
      for (const std::string& s : common.target_shapes) shapes.push_back(parse_target_shape(s));
      if (shapes.empty()) throw ValidationError("give --targets or --target-shape");
      options.mode = mode == "sampled" ? VerifyMode::sampled : VerifyMode::exhaustive;
      options.exec = serial ? Execution::serial : Execution::parallel;
      const VerifyReport report = verify_main_theorem(A, shapes, options);
      result = to_json(report);
      code = report.pass ? 0 : 1;
    } else if (trace->parsed()) {
      const auto maps = read_maps(trace_files);
      const ProofTrace t = proof_trace(maps, trace_beta);
      result = to_json(t);
      const bool ok = t.congruent && t.coefficients_ok && t.indicator_degrees_ok &&
                      (t.empty_zero_set || t.orders_match);
      code = ok ? 0 : 1;
    } else if (scan->parsed()) {
      std::vector<Partition> family;
      if (!alphas.empty())
        for (const std::string& a : split(alphas, ';')) family.push_back(parse_partition(a, "alphas"));
      if (max_alpha > 0) {
        if (max_alpha > 30) throw ValidationError("--max-alpha must be <= 30");
        for (Partition& a : partitions_up_to(max_alpha)) family.push_back(std::move(a));
      }
      if (family.empty()) throw ValidationError("give --alphas or --max-alpha");
      std::vector<std::vector<Target>> target_lists;
      for (const std::string& t : split(target_family, ';')) target_lists.push_back(parse_targets(t));
      const auto prime_list = parse_uint_list(primes, "primes");
      const std::uint64_t rows = prime_list.size() * family.size() * target_lists.size();
      if (rows > limit)
        throw ResourceError("scan has " + std::to_string(rows) + " rows, above --limit " +
                            std::to_string(limit));
      Json json_rows = Json::array();
      std::ostringstream csv;
      csv << "p,alpha,targets,A,B,Abreve,case,bound\n";
      for (std::uint64_t pv : prime_list) {
        const Prime p(pv);
        for (const Partition& a : family)
          for (const auto& t : target_lists) {
            const BoundReport r = main_bound(p, a, TargetSpec(p, t));
            if (format == "json") {
              json_rows.push_back(Json{{"p", r.p},
                                       {"alpha", r.alpha},
                                       {"targets", join(r.targets)},
                                       {"A", to_json(r.A)},
                                       {"B", to_json(r.B)},
                                       {"Abreve", to_json(r.A_breve)},
                                       {"case", to_string(r.bound_case)},
                                       {"bound", r.bound}});
            } else {
              csv << r.p << ',' << csv_field(join(r.alpha)) << ',' << csv_field(join(r.targets)) << ','
                  << r.A << ',' << r.B << ',' << r.A_breve << ',' << to_string(r.bound_case) << ','
                  << r.bound << '\n';
            }
          }
      }
      if (format == "csv") {
        out << csv.str();
        return 0;
      }
      result = std::move(json_rows);
    } else if (polybound->parsed()) {
      if (!system_file.empty()) {
        const PolyZeroCount c = poly_zero_count(poly_system_from_json(read_json_file(system_file)));
        result = to_json(c);
        code = c.holds ? 0 : 1;
      } else {
        if (modulus == 0 || vars == 0 || degrees.empty())
          throw ValidationError("polybound needs --system, or --m, --n and --degrees");
        const auto ds = parse_uint_list(degrees, "degrees");
        Json per_prime = Json::object();
        for (const auto& [l, r] : rng_system_bound(modulus, vars, ds)) per_prime[std::to_string(l)] = to_json(r);
        result = Json{{"modulus", modulus}, {"vars", vars}, {"primes", std::move(per_prime)}};
      }
    }
    out << result.dump() << "\n";
    return code;
  } catch (const InternalError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace axkatz::cli
