#include "phcalc/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "phcalc/bench.hpp"
#include "phcalc/checks.hpp"
#include "phcalc/formats.hpp"
#include "phcalc/generator.hpp"
#include "phcalc/persistence.hpp"
#include "phcalc/render.hpp"

namespace phcalc::cli {

namespace {

// Thrown for argument errors detected after CLI11 parsing.
class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

Filtration load_filtration(const std::string& path, bool incremental, std::istream& in) {
  try {
    return formats::to_filtration(formats::parse_filtration(slurp(path, in), incremental));
  } catch (const formats::ParseError& e) {
    throw formats::ParseError(path + ": " + e.location(),
                              std::string(e.what()).substr(e.location().size() + 2));
  }
}

void check_pair(const Filtration& f, std::size_t j, std::size_t p, bool strict) {
  const std::size_t m = f.last_level();
  const bool bad = strict ? (j >= p || p > m) : (j > p || p > m);
  if (bad) {
    throw UsageError("levels j=" + std::to_string(j) + ", p=" + std::to_string(p) +
                     " out of range: need 0 <= j " + (strict ? "<" : "<=") + " p <= " +
                     std::to_string(m));
  }
}

std::vector<std::size_t> dimensions_for(const Filtration& f, std::optional<std::size_t> dim) {
  if (dim) return {*dim};
  std::vector<std::size_t> dims;
  const std::size_t top = f.final_complex().top_dimension().value_or(0);
  for (std::size_t n = 0; n <= top; ++n) dims.push_back(n);
  return dims;
}

struct Options {
  std::string file;
  std::size_t dim = 0;
  std::size_t j = 0;
  std::size_t p = 0;
  std::string death;
  bool incremental = false;
  std::optional<std::size_t> barcode_dim;
  std::string format = "text";
  std::optional<std::size_t> max_dim;
  bool oracle = false;
  unsigned jobs = 1;
  GeneratorOptions gen;
  std::optional<std::size_t> gen_vertices;
  std::string output = "-";
  std::vector<std::size_t> bench_triangles{10, 50, 100, 200, 500};
  std::size_t bench_levels = 5;
  std::uint64_t bench_seed = 1;
};

int cmd_betti(const Options& o, std::istream& in, std::ostream& out) {
  std::vector<Simplex> facets;
  try {
    facets = formats::parse_complex(slurp(o.file, in));
  } catch (const formats::ParseError& e) {
    throw formats::ParseError(o.file + ": " + e.location(),
                              std::string(e.what()).substr(e.location().size() + 2));
  }
  out << betti(closure_of_facets(facets), o.dim) << "\n";
  return kOk;
}

int cmd_pbetti(const Options& o, std::istream& in, std::ostream& out) {
  const Filtration f = load_filtration(o.file, o.incremental, in);
  check_pair(f, o.j, o.p, false);
  out << persistent_betti(f, o.dim, o.j, o.p) << "\n";
  return kOk;
}

int cmd_mu(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const Filtration f = load_filtration(o.file, o.incremental, in);
  std::int64_t value = 0;
  if (o.death == "inf") {
    if (o.j > f.last_level()) {
      throw UsageError("level j=" + std::to_string(o.j) + " out of range: need 0 <= j <= " +
                       std::to_string(f.last_level()));
    }
    value = mu_infinity(f, o.dim, o.j);
  } else {
    std::size_t p = 0;
    try {
      std::size_t used = 0;
      p = std::stoul(o.death, &used);
      if (used != o.death.size()) throw std::invalid_argument(o.death);
    } catch (const std::logic_error&) {
      throw UsageError("death level must be a non-negative integer or 'inf', got '" + o.death + "'");
    }
    check_pair(f, o.j, p, true);
    value = mu(f, o.dim, o.j, p);
  }
  out << value << "\n";
  if (value < 0) {
    err << "error: negative multiplicity at (n=" << o.dim << ", j=" << o.j << ", p=" << o.death
        << ")\n";
    return kInvariant;
  }
  return kOk;
}

int cmd_barcode(const Options& o, std::istream& in, std::ostream& out) {
  const Filtration f = load_filtration(o.file, o.incremental, in);
  formats::BarcodeDocument doc;
  doc.last_level = f.last_level();
  for (const std::size_t n : dimensions_for(f, o.barcode_dim)) {
    doc.barcodes.push_back(barcode(betti_table(f, n, o.jobs)));
  }
  if (o.format == "structured" || o.format == "json") {
    out << formats::to_json(doc).dump(2) << "\n";
  } else if (o.format == "svg") {
    out << render::render_svg(doc.barcodes, doc.last_level);
  } else {
    for (std::size_t i = 0; i < doc.barcodes.size(); ++i) {
      if (i != 0) out << "\n";
      out << render::render_text(doc.barcodes[i], doc.last_level);
    }
  }
  return kOk;
}

int cmd_check(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  Filtration f = [&] {
    try {
      return load_filtration(o.file, o.incremental, in);
    } catch (const FiltrationError& e) {
      nlohmann::json report = {{"ok", false},
                               {"validation",
                                {{"level", e.violation().level},
                                 {"simplex", e.violation().simplex.to_string()},
                                 {"message", e.what()}}}};
      out << report.dump(2) << "\n";
      throw;
    }
  }();
  CheckOptions options;
  options.max_dim = o.max_dim;
  options.oracle = o.oracle;
  options.jobs = o.jobs;
  const CheckReport report = run_checks(f, options);
  out << report.to_json().dump(2) << "\n";
  if (!report.ok()) {
    err << "error: " << report.violations.size() << " check(s) failed\n";
    return kInvariant;
  }
  return kOk;
}

int cmd_gen(const Options& o, std::ostream& out) {
  GeneratorOptions options = o.gen;
  options.vertices = o.gen_vertices;
  const std::string text = formats::serialize_filtration(generate_filtration(options));
  if (o.output == "-") {
    out << text;
    return kOk;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + o.output + "'");
  file << text;
  return kOk;
}

int cmd_bench(const Options& o, std::ostream& out) {
  const auto columns = run_benchmark(o.bench_triangles, o.bench_levels, o.bench_seed);
  out << "Execution times in seconds (levels=" << o.bench_levels << ", seed=" << o.bench_seed
      << ")\n"
      << format_bench_table(columns);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact persistent homology over Z/2", "phcalc"};
  app.require_subcommand(1);
  Options o;

  auto* betti_cmd = app.add_subcommand("betti", "Betti number of the complex spanned by a facet file");
  betti_cmd->add_option("file", o.file, "Facet file, or - for stdin")->required();
  betti_cmd->add_option("dim", o.dim, "Homology dimension")->required();

  auto* pbetti_cmd = app.add_subcommand("pbetti", "p-persistent n-th Betti number of level j");
  pbetti_cmd->add_option("file", o.file, "Filtration file, or - for stdin")->required();
  pbetti_cmd->add_option("n", o.dim, "Homology dimension")->required();
  pbetti_cmd->add_option("j", o.j, "Level whose classes are followed")->required();
  pbetti_cmd->add_option("p", o.p, "Level at which they must still be alive")->required();
  pbetti_cmd->add_flag("--incremental", o.incremental, "Levels list only newly added facets");

  auto* mu_cmd = app.add_subcommand("mu", "Number of classes born at level j that die entering p");
  mu_cmd->add_option("file", o.file, "Filtration file, or - for stdin")->required();
  mu_cmd->add_option("n", o.dim, "Homology dimension")->required();
  mu_cmd->add_option("j", o.j, "Birth level")->required();
  mu_cmd->add_option("p", o.death, "Death level, or inf")->required();
  mu_cmd->add_flag("--incremental", o.incremental, "Levels list only newly added facets");

  auto* barcode_cmd = app.add_subcommand("barcode", "Barcodes of a filtration");
  barcode_cmd->add_option("file", o.file, "Filtration file, or - for stdin")->required();
  auto* dim_opt = barcode_cmd->add_option("--dim", o.barcode_dim, "Single homology dimension");
  barcode_cmd->add_flag("--all-dims", "All dimensions up to the top of the last level (default)")
      ->excludes(dim_opt);
  barcode_cmd->add_option("--format", o.format, "Output rendering")
      ->check(CLI::IsMember({"text", "structured", "json", "svg"}));
  barcode_cmd->add_flag("--incremental", o.incremental, "Levels list only newly added facets");
  barcode_cmd->add_option("--jobs", o.jobs, "Worker threads for the Betti table")
      ->check(CLI::PositiveNumber);

  auto* check_cmd = app.add_subcommand("check", "Verify nilpotency, inclusions and the fundamental lemma");
  check_cmd->add_option("file", o.file, "Filtration file, or - for stdin")->required();
  check_cmd->add_option("--max-dim", o.max_dim, "Highest homology dimension to check");
  check_cmd->add_flag("--oracle", o.oracle, "Also compare against brute-force enumeration");
  check_cmd->add_flag("--incremental", o.incremental, "Levels list only newly added facets");
  check_cmd->add_option("--jobs", o.jobs, "Worker threads for the Betti table")
      ->check(CLI::PositiveNumber);

  auto* gen_cmd = app.add_subcommand("gen", "Generate a random filtration of triangles");
  gen_cmd->add_option("--triangles", o.gen.triangles, "Number of triangles")->required();
  gen_cmd->add_option("--levels", o.gen.levels, "Number of levels")->required();
  gen_cmd->add_option("--vertices", o.gen_vertices, "Vertex pool size (default 3*ceil(sqrt(T)))");
  gen_cmd->add_option("--seed", o.gen.seed, "Random seed")->required();
  gen_cmd->add_option("-o,--output", o.output, "Output file, - for stdout");

  auto* bench_cmd = app.add_subcommand("bench", "Time Betti and persistent Betti computations");
  bench_cmd->add_option("--triangles", o.bench_triangles, "Comma-separated triangle counts")
      ->delimiter(',');
  bench_cmd->add_option("--levels", o.bench_levels, "Levels per generated filtration")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", o.bench_seed, "Random seed");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*betti_cmd) return cmd_betti(o, in, out);
    if (*pbetti_cmd) return cmd_pbetti(o, in, out);
    if (*mu_cmd) return cmd_mu(o, in, out, err);
    if (*barcode_cmd) return cmd_barcode(o, in, out);
    if (*check_cmd) return cmd_check(o, in, out, err);
    if (*gen_cmd) return cmd_gen(o, out);
    if (*bench_cmd) return cmd_bench(o, out);
  } catch (const formats::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const FiltrationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const NegativeMultiplicityError& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kInvariant;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kInvariant;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace phcalc::cli
