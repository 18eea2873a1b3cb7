#include "egc/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>

#include "egc/amalgam.hpp"
#include "egc/build.hpp"
#include "egc/codes.hpp"
#include "egc/errors.hpp"
#include "egc/io.hpp"
#include "egc/structure.hpp"
#include "egc/verify.hpp"

namespace egc {

namespace {

const std::map<std::string, Builder> kBuilders{{"k4-unique", Builder::k4_unique},
                                               {"k5-unique", Builder::k5_unique},
                                               {"k8-odd", Builder::k8_odd}};
const std::map<std::string, Property> kProperties{{"h-odd", Property::odd},
                                                  {"h-unique", Property::unique}};

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  return out;
}

struct Config {
  // shared
  std::string in, out, left, right, map_path, graph_path, image_path;
  unsigned threads = 0;
  bool force = false;
  bool timing = false;
  std::size_t max_vertices = kDefaultMaxVertices;
  // build
  std::size_t target = 0;
  Builder builder = Builder::k4_unique;
  std::uint64_t base = 2;
  std::vector<std::uint64_t> factors;
  // verify
  Property property = Property::odd;
  std::size_t t = 0;
  bool exhaustive = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  // analyze growth
  std::size_t steps = 0;
  bool csv = false;
  // code
  bool report = false;
  // structure
  bool even_decomposable = false, b2_set = false, exponent = false;
};

void print_set(std::ostream& out, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Edge-colourings of complete graphs without even-chromatic or non-unique-chromatic cliques",
               "egc"};
  app.require_subcommand(1);
  Config cfg;

  auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", cfg.threads, "Worker threads (default: hardware concurrency)");
  };

  auto* build = app.add_subcommand("build", "Construct a colouring by repeated amalgamation");
  build->add_option("--target", cfg.target, "Vertex count")->required()->check(CLI::PositiveNumber);
  build->add_option("--property", cfg.builder, "k4-unique | k5-unique | k8-odd")
      ->required()
      ->transform(CLI::CheckedTransformer(kBuilders, CLI::ignore_case));
  build->add_option("--base", cfg.base, "Base rainbow size n0")->check(CLI::Range(2, 1 << 20));
  build->add_option("--factors", cfg.factors, "Explicit factor sizes m1,m2,...")->delimiter(',');
  build->add_option("--out", cfg.out, "Output EGC file")->required();
  build->add_option("--max-vertices", cfg.max_vertices, "Materialization cap");

  auto* verify = app.add_subcommand("verify", "Scan clique copies for a property");
  verify->add_option("--in", cfg.in, "Input EGC file")->required();
  verify->add_option("--property", cfg.property, "h-odd | h-unique")
      ->required()
      ->transform(CLI::CheckedTransformer(kProperties, CLI::ignore_case));
  verify->add_option("--t", cfg.t, "Clique size")->required();
  auto* exh = verify->add_flag("--exhaustive", cfg.exhaustive, "Check every copy");
  auto* smp = verify->add_option("--sample", cfg.samples, "Number of sampled copies");
  auto* seed = verify->add_option("--seed", cfg.seed, "Sampling seed");
  exh->excludes(smp);
  smp->needs(seed);
  verify->add_flag("--force", cfg.force, "Allow exhaustive scans beyond the copy limit");
  verify->add_flag("--timing", cfg.timing, "Print elapsed time to stderr");
  add_threads(verify);

  auto* analyze = app.add_subcommand("analyze", "Arithmetic analyses");
  analyze->require_subcommand(1);
  auto* growth = analyze->add_subcommand("growth", "Colour-count recursion table");
  growth->add_option("--property", cfg.builder, "k4-unique | k5-unique | k8-odd")
      ->required()
      ->transform(CLI::CheckedTransformer(kBuilders, CLI::ignore_case));
  growth->add_option("--steps", cfg.steps, "Amalgamation steps")->required()->check(CLI::PositiveNumber);
  growth->add_option("--base", cfg.base, "Base rainbow size n0")->check(CLI::Range(2, 1 << 20));
  growth->add_flag("--csv", cfg.csv, "CSV output");

  auto* code = app.add_subcommand("code", "Linear graph code of a colouring");
  code->add_option("--in", cfg.in, "Input EGC file")->required();
  code->add_flag("--report", cfg.report, "Print n, k, rank, dimension, density_log2");
  code->add_option("--check-image", cfg.image_path, "Edge-list file of H; search for images");
  code->add_flag("--force", cfg.force, "Allow enumeration beyond the placement limit");
  add_threads(code);

  auto* structure = app.add_subcommand("structure", "Structural procedures on a small graph");
  structure->add_option("--graph", cfg.graph_path, "Edge-list file")->required();
  auto* ed = structure->add_flag("--even-decomposable", cfg.even_decomposable);
  auto* b2 = structure->add_flag("--b2-set", cfg.b2_set);
  auto* ex = structure->add_flag("--exponent", cfg.exponent);
  ed->excludes(b2, ex);
  b2->excludes(ex);

  auto* amalg = app.add_subcommand("amalgamate", "Amalgamate two colourings");
  amalg->add_option("--left", cfg.left, "Colouring c on K_n")->required();
  amalg->add_option("--right", cfg.right, "Colouring d on K_m")->required();
  amalg->add_option("--out", cfg.out, "Output EGC file with meta section")->required();
  amalg->add_option("--max-vertices", cfg.max_vertices, "Materialization cap");

  auto* weak = app.add_subcommand("weaken", "Post-compose a colouring with a colour map");
  weak->add_option("--in", cfg.in, "Input EGC file")->required();
  weak->add_option("--map", cfg.map_path, "Colour-map file")->required();
  weak->add_option("--out", cfg.out, "Output EGC file")->required();

  auto* prod = app.add_subcommand("product", "Product of two colourings of the same K_n");
  prod->add_option("--left", cfg.left, "First colouring")->required();
  prod->add_option("--right", cfg.right, "Second colouring")->required();
  prod->add_option("--out", cfg.out, "Output EGC file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    if (*build) {
      BuildOptions options{cfg.base, cfg.factors, cfg.max_vertices};
      const Colouring c = egc::build(cfg.builder, cfg.target, options);
      save_colouring(cfg.out, c);
      out << "built property=" << builder_name(cfg.builder) << " n=" << c.vertices()
          << " colours=" << c.palette_size() << '\n';
      return kExitOk;
    }
    if (*verify) {
      if (!cfg.exhaustive && smp->count() == 0) {
        err << "error: verify needs --exhaustive or --sample\n";
        return kExitError;
      }
      const Colouring c = load_colouring(cfg.in);
      const ScanMode mode = cfg.exhaustive ? ScanMode{Exhaustive{}} : ScanMode{Sample{cfg.samples, cfg.seed}};
      const ScanReport r = scan(c, cfg.t, cfg.property, mode, {cfg.threads, cfg.force});
      out << format_report(r);
      if (cfg.timing)
        err << "elapsed_ms " << std::chrono::duration_cast<std::chrono::milliseconds>(r.elapsed).count()
            << '\n';
      return r.passed() ? kExitOk : kExitCounterexample;
    }
    if (*growth) {
      out << format_growth(growth_report(cfg.builder, cfg.steps, cfg.base), cfg.csv);
      return kExitOk;
    }
    if (*code) {
      const Colouring c = load_colouring(cfg.in);
      if (!cfg.report && cfg.image_path.empty()) cfg.report = true;
      if (cfg.report) out << format_code_report(code_report(parity_matrix(c)));
      if (!cfg.image_path.empty()) {
        const ImageCheckReport r =
            verify_code_avoids(load_graph(cfg.image_path), c, {cfg.threads, cfg.force});
        out << format_image_report(r);
        if (!r.passed()) return kExitCounterexample;
      }
      return kExitOk;
    }
    if (*structure) {
      const GraphSpec h = load_graph(cfg.graph_path);
      if (cfg.b2_set) {
        out << "b2-set: ";
        print_set(out, find_independent_set_b2(h));
        out << '\n';
      } else if (cfg.exponent) {
        const Rational r = unique_lower_bound_exponent(h);
        out << "exponent: " << r.num << '/' << r.den << '\n';
      } else {
        const auto chain = is_even_decomposable(h);
        out << "even-decomposable: " << (chain ? "yes" : "no") << '\n';
        if (chain)
          for (const VertexSet& s : chain->chain) {
            out << "chain:";
            for (Vertex x : s) out << ' ' << x;
            out << '\n';
          }
      }
      return kExitOk;
    }
    if (*amalg) {
      const AmalgamColouring a =
          amalgamate(load_colouring(cfg.left), load_colouring(cfg.right), {cfg.max_vertices});
      auto file = open_out(cfg.out);
      write_amalgam(file, a);
      out << "amalgamated n=" << a.colouring.vertices() << " colours=" << a.colouring.palette_size()
          << '\n';
      return kExitOk;
    }
    if (*weak) {
      std::ifstream map_in(cfg.map_path);
      if (!map_in) throw ParseError("cannot open '" + cfg.map_path + "'");
      const Colouring c = weaken(load_colouring(cfg.in), read_colour_map(map_in));
      save_colouring(cfg.out, c);
      out << "weakened n=" << c.vertices() << " colours=" << c.palette_size() << '\n';
      return kExitOk;
    }
    if (*prod) {
      const Colouring c = product(load_colouring(cfg.left), load_colouring(cfg.right));
      save_colouring(cfg.out, c);
      out << "product n=" << c.vertices() << " colours=" << c.palette_size() << '\n';
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace egc
