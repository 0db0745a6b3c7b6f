// bowditch: check | render | fib | torelli

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bowditch/algebra.hpp"
#include "bowditch/bq.hpp"
#include "bowditch/fibonacci.hpp"
#include "bowditch/free_group.hpp"
#include "bowditch/render.hpp"
#include "bowditch/sl2.hpp"

using namespace bowditch;

namespace {

constexpr int kUsage = 64;

CharacterPoint parse_point(const std::vector<std::string>& args) {
  if (args.size() != 7)
    throw std::invalid_argument("expected 7 values a b c d x y z");
  std::array<Complex, 7> v;
  for (int k = 0; k < 7; ++k) v[k] = parse_complex(args[k]);
  return CharacterPoint(v[0], v[1], v[2], v[3], v[4], v[5], v[6]);
}

int cmd_check(const std::vector<std::string>& args, std::optional<double> k,
              long edges) {
  CharacterPoint pt = parse_point(args);
  MarkoffQuad q = MarkoffQuad::unchecked(pt.quad(), pt.boundary());
  BqParams p;
  p.K = k;
  p.max_total_edges = edges;
  MarkoffMap m(q);
  BqVerdict v = decide_bq(m, p);
  std::cout << "verdict " << describe(v) << "\n";
  std::cout << "relative_residual " << q.residual
            << (q.residual > 1e-9 ? " (off variety)" : "") << "\n";
  if (auto* in = std::get_if<InBQ>(&v.result)) {
    std::cout << "certificate_edges " << in->tree.edges.size() << "\n";
    for (const FaceKey& f : in->tree.faces) {
      auto [n1, n2] = in->tree.arcs.at(f);
      std::cout << "  face {" << f.i << "," << f.j << "}@" << f.anchor.str()
                << " value " << format_complex(m.eval_face(f)) << " arc ["
                << n1 << "," << n2 << "]\n";
    }
    return 0;
  }
  return v.not_bq() ? 1 : 2;
}

int cmd_render(const std::string& config, const std::string& out, int threads) {
  std::ifstream f(config);
  if (!f) throw std::runtime_error("cannot read config '" + config + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  SliceConfig cfg = SliceConfig::from_json(ss.str());
  RenderResult r = render_slice(cfg, threads);
  write_ppm(r, out);
  std::string report = render_report(cfg, r);
  std::ofstream side(out + ".report.txt");
  side << report;
  std::cout << report;
  return 0;
}

int cmd_fib(const std::vector<std::string>& args, int depth) {
  if (depth < 2 || depth > 12)
    throw std::invalid_argument("depth must be in [2, 12]");
  CharacterPoint pt = parse_point(args);
  MarkoffMap m(MarkoffQuad::unchecked(pt.quad(), pt.boundary()));
  FibTable t;
  FibState s = t.state_at(t.base_edge().parent());
  std::cout << "base_edge " << t.base_edge().child.str() << "\n";
  std::cout << "base_regions";
  for (auto F : s.regions) std::cout << " " << F;
  std::cout << "\n";
  GrowthReport g = growth_report(m, t, static_cast<std::size_t>(depth));
  std::cout << "depth " << depth << "\n";
  std::cout << "kappa_lower " << g.kappa_lower << "\n";
  std::cout << "kappa_upper " << g.kappa_upper << "\n";
  std::visit(
      [](const auto& key) {
        using T = std::decay_t<decltype(key)>;
        if constexpr (std::is_same_v<T, RegionKey>)
          std::cout << "argmin region " << key.color << "@" << key.anchor.str() << "\n";
        else
          std::cout << "argmin face {" << key.i << "," << key.j << "}@"
                    << key.anchor.str() << "\n";
      },
      g.argmin);
  std::cout << "evaluated " << g.evaluated << " skipped_huge " << g.skipped_huge
            << " upper_bound_violations " << g.upper_bound_violations << "\n";
  return 0;
}

int cmd_torelli(int trials, std::uint64_t seed) {
  double worst = 0.0;
  bool exact = true;
  for (Magnus k : {Magnus::K12, Magnus::K23, Magnus::K31, Magnus::K123,
                   Magnus::K231, Magnus::K312}) {
    Automorphism lhs = magnus_generator(k);
    Automorphism rhs = involution_product(magnus_identity(k));
    auto w = equal_in_out(lhs, rhs, 6);
    double dev = character_agree(lhs, rhs, trials, seed);
    worst = std::max(worst, dev);
    exact = exact && w.has_value();
    std::cout << to_string(k) << " = " << magnus_identity(k)
              << " conjugator " << (w ? w->str() : "none") << " deviation "
              << dev << "\n";
  }
  for (char c : std::string("abcdxyz")) {
    Involution t = involution_from_char(c);
    double dev = 0.0;
    for (int s = 0; s < trials; ++s) {
      auto rng = trial_rng(seed + 1000, static_cast<std::uint64_t>(s));
      CharacterPoint pt = sample_sl2_triple(rng).character();
      CharacterPoint a = induced_character_map(named_involution(t), pt);
      CharacterPoint b = involution_theta(pt, t);
      for (int q = 0; q < 7; ++q)
        dev = std::max(dev, std::abs(a.coords()[q] - b.coords()[q]));
    }
    worst = std::max(worst, dev);
    std::cout << "tau_" << c << " vs theta_" << c << " deviation " << dev << "\n";
  }
  std::cout << "max_deviation " << worst << "\n";
  return worst <= 1e-8 && exact ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bowditch set tools for the three-holed projective plane"};
  app.require_subcommand(1);

  std::vector<std::string> point;
  std::optional<double> k;
  long edges = 100000;
  auto* check = app.add_subcommand("check", "decide one point a b c d x y z");
  check->add_option("point", point, "seven values 're,im' or 're'")->expected(7)->required();
  check->add_option("--k", k, "level set constant (default 2+M)");
  check->add_option("--max-edges", edges, "total edge budget");

  std::string config, out = "slice.ppm";
  int threads = 1;
  auto* render = app.add_subcommand("render", "render a slice to PPM");
  render->add_option("--config", config, "JSON slice config")->required();
  render->add_option("--out", out, "output PPM path");
  render->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  int depth = 6;
  auto* fib = app.add_subcommand("fib", "Fibonacci growth diagnostics");
  fib->add_option("point", point, "seven values")->expected(7)->required();
  fib->add_option("--depth", depth, "ball depth (2..12)");

  int trials = 200;
  std::uint64_t seed = 1;
  auto* torelli = app.add_subcommand("torelli", "verify the Torelli identities");
  torelli->add_option("--trials", trials, "random trials")->check(CLI::PositiveNumber);
  torelli->add_option("--seed", seed, "sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*check) return cmd_check(point, k, edges);
    if (*render) return cmd_render(config, out, threads);
    if (*fib) return cmd_fib(point, depth);
    if (*torelli) return cmd_torelli(trials, seed);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return kUsage;
}
