// hnewton: find, certify and draw zeros of planar harmonic mappings
//
// subcommands: solve, basins, phaseplot, seeds, certify, laurent, sweep, rerun
// exit codes: 0 ok, 1 usage error, 2 numerical failure

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hnewton/hnewton.hpp"

using namespace hnewton;
using nlohmann::json;

namespace {

int dispatch(const std::vector<std::string>& args);

cplx parse_cplx_arg(const std::string& s, const std::string& what) {
  std::istringstream in(s);
  double re = 0, im = 0;
  char comma = 0;
  if (!(in >> re)) throw CLI::ValidationError(what, "expected re[,im]");
  if (in >> comma) {
    if (comma != ',' || !(in >> im))
      throw CLI::ValidationError(what, "expected re[,im]");
  }
  std::string rest;
  if (in >> rest) throw CLI::ValidationError(what, "trailing junk: " + rest);
  return {re, im};
}

std::string fmt_cplx(cplx z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "(%.17g, %.17g)", z.real(), z.imag());
  return buf;
}

// ---- function selection shared by most subcommands ----------------------

struct FnOptions {
  std::string builtin;
  std::string function_file;
  int n = 3;
  double r = 0.6;
  double eps = 0.004;
  double k = 0.25;
  std::string w = "0,0";
  std::string shift;
};

void add_fn_options(CLI::App* cmd, FnOptions& fn) {
  auto* b = cmd->add_option("--builtin", fn.builtin,
                            "named map: mpw|rhie|wilmshurst|tan_conj|einstein|isothermal");
  auto* f = cmd->add_option("--function", fn.function_file,
                            "JSON function spec file");
  b->excludes(f);
  cmd->add_option("--n", fn.n, "degree parameter for mpw/rhie/wilmshurst");
  cmd->add_option("--r", fn.r, "radius parameter for mpw/rhie");
  cmd->add_option("--eps", fn.eps, "rhie mass-splitting parameter");
  cmd->add_option("--k", fn.k, "isothermal strength");
  cmd->add_option("--w", fn.w, "isothermal source position re,im");
  cmd->add_option("--shift", fn.shift, "add a constant re,im to f");
}

HarmonicMap build_map(const FnOptions& fn) {
  HarmonicMap map;
  if (!fn.function_file.empty()) {
    map = map_from_spec_file(fn.function_file);
  } else if (fn.builtin == "mpw") {
    map = make_mpw(fn.n, fn.r);
  } else if (fn.builtin == "rhie") {
    map = make_rhie(fn.n, fn.r, fn.eps);
  } else if (fn.builtin == "wilmshurst") {
    map = make_wilmshurst(fn.n);
  } else if (fn.builtin == "tan_conj") {
    map = make_tan_conj();
  } else if (fn.builtin == "einstein") {
    map = make_einstein();
  } else if (fn.builtin == "isothermal") {
    map = make_isothermal(fn.k, parse_cplx_arg(fn.w, "--w"));
  } else if (fn.builtin.empty()) {
    throw CLI::ValidationError("function", "need --builtin or --function");
  } else {
    throw CLI::ValidationError("--builtin", "unknown builtin " + fn.builtin);
  }
  if (!fn.shift.empty())
    map = make_shifted(std::move(map), parse_cplx_arg(fn.shift, "--shift"));
  return map;
}

// per-map defaults follow the windows the examples are usually drawn in
void default_window(const HarmonicMap& map, GridSpec& spec) {
  if (map.name.rfind("tan_conj", 0) == 0) {
    spec = {-8, 8, -2, 2, 0.2};
  } else if (map.name.rfind("einstein", 0) == 0 ||
             map.name.rfind("isothermal", 0) == 0) {
    spec = {-2, 2, -2, 2, 0.02};
  } else if (map.name.rfind("wilmshurst", 0) == 0) {
    spec = {-1.5, 2.5, -1.5, 2.5, 0.05};
  } else {
    spec = {-2, 2, -2, 2, 0.05};
  }
}

// ---- grid/stopping option plumbing ---------------------------------------

struct GridOptions {
  std::string window;  // x_min,x_max,y_min,y_max
  double mesh = 0.0;   // 0 = builtin default
};

void add_grid_options(CLI::App* cmd, GridOptions& g) {
  cmd->add_option("--window", g.window, "x_min,x_max,y_min,y_max");
  cmd->add_option("--mesh", g.mesh, "grid spacing");
}

GridSpec resolve_grid(const HarmonicMap& map, const GridOptions& g) {
  GridSpec spec;
  default_window(map, spec);
  if (!g.window.empty()) {
    std::istringstream in(g.window);
    char c1, c2, c3;
    if (!(in >> spec.x_min >> c1 >> spec.x_max >> c2 >> spec.y_min >> c3 >>
          spec.y_max) ||
        c1 != ',' || c2 != ',' || c3 != ',')
      throw CLI::ValidationError("--window", "expected x0,x1,y0,y1");
  }
  if (g.mesh > 0.0) spec.mesh = g.mesh;
  return spec;
}

struct StopOptions {
  StoppingConfig cfg;
  std::string linsys = "never";
};

void add_stop_options(CLI::App* cmd, StopOptions& s) {
  cmd->add_option("--maxit", s.cfg.maxit, "iteration cap");
  cmd->add_option("--restol", s.cfg.restol, "residual tolerance");
  cmd->add_option("--steptol", s.cfg.steptol, "relative step tolerance");
  cmd->add_option("--linsys", s.linsys, "2x2 solver use: never|always|auto");
  cmd->add_option("--auto-threshold", s.cfg.auto_threshold,
                  "relative |J| threshold for --linsys auto");
}

StoppingConfig resolve_stopping(const StopOptions& s) {
  StoppingConfig cfg = s.cfg;
  cfg.use_linsys = linsys_mode_from_string(s.linsys);
  return cfg;
}

// ---- manifest sidecars ----------------------------------------------------

std::vector<std::string> g_argv;  // set once in main

void write_manifest(const std::string& primary_output,
                    const std::vector<std::string>& outputs) {
  json m;
  m["argv"] = g_argv;
  m["outputs"] = outputs;
  const std::string path = primary_output + ".manifest.json";
  std::ofstream out(path);
  out << m.dump(2) << '\n';
}

void write_image(const RasterImage& img, const std::string& path) {
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".png") {
    if (!write_png(img, path))
      throw CLI::ValidationError("--out", "built without PNG support, use .ppm");
  } else {
    write_ppm(img, path);
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
}

// ---- coefficient sources for the seeds subcommand -------------------------

std::map<int, cplx> coeff_map_from_json(const json& j, const char* what) {
  std::map<int, cplx> m;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const int k = std::stoi(it.key());
    const auto& v = it.value();
    if (v.is_number())
      m[k] = cplx(v.get<double>(), 0.0);
    else if (v.is_array() && v.size() == 2)
      m[k] = cplx(v[0].get<double>(), v[1].get<double>());
    else
      throw CLI::ValidationError(what, "coefficient must be number or [re,im]");
  }
  return m;
}

}  // namespace

namespace {

int dispatch(const std::vector<std::string>& args) {
  CLI::App app{"zeros, certificates and pictures for harmonic mappings f = h + conj(g)"};
  app.require_subcommand(1);

  // ---- solve ----
  auto* solve = app.add_subcommand("solve", "grid search for zeros");
  FnOptions solve_fn;
  GridOptions solve_grid;
  StopOptions solve_stop;
  double solve_dedup = 1e-8;
  std::string solve_csv, solve_json;
  bool solve_print = false;
  add_fn_options(solve, solve_fn);
  add_grid_options(solve, solve_grid);
  add_stop_options(solve, solve_stop);
  solve->add_option("--dedup-tol", solve_dedup, "cluster linkage threshold");
  solve->add_option("--csv", solve_csv, "write zero table as CSV");
  solve->add_option("--json", solve_json, "write zero table as JSON");
  solve->add_flag("--print-zeros", solve_print, "print the zero table");

  // ---- basins ----
  auto* basins = app.add_subcommand("basins", "basins of attraction image");
  FnOptions basins_fn;
  GridOptions basins_grid;
  StopOptions basins_stop;
  double basins_dedup = 1e-8, basins_match = 1e-6;
  std::string basins_out = "basins.ppm";
  unsigned basins_seed = 0;
  int basins_shade = 0;
  add_fn_options(basins, basins_fn);
  add_grid_options(basins, basins_grid);
  add_stop_options(basins, basins_stop);
  basins->add_option("--dedup-tol", basins_dedup, "cluster linkage threshold");
  basins->add_option("--match-tol", basins_match, "limit-to-zero match radius");
  basins->add_option("--out", basins_out, "output image (.ppm or .png)");
  basins->add_option("--palette-seed", basins_seed, "basin palette seed");
  basins->add_option("--shade-maxit", basins_shade,
                     "iteration count mapped to darkest shade (0 = auto)");

  // ---- phaseplot ----
  auto* phase = app.add_subcommand("phaseplot", "domain-coloring phase plot");
  FnOptions phase_fn;
  GridOptions phase_grid;
  std::string phase_out = "phase.ppm";
  int phase_w = 800, phase_h = 800, phase_dot = 3;
  bool phase_overlay_zeros = false, phase_overlay_poles = false;
  StopOptions phase_stop;
  double phase_dedup = 1e-8;
  add_fn_options(phase, phase_fn);
  add_grid_options(phase, phase_grid);
  add_stop_options(phase, phase_stop);
  phase->add_option("--out", phase_out, "output image (.ppm or .png)");
  phase->add_option("--width", phase_w, "pixels");
  phase->add_option("--height", phase_h, "pixels");
  phase->add_flag("--overlay-zeros", phase_overlay_zeros,
                  "run the zero search and draw black dots");
  phase->add_flag("--overlay-poles", phase_overlay_poles,
                  "draw white dots at the known poles");
  phase->add_option("--dot-radius", phase_dot, "overlay dot radius in pixels");
  phase->add_option("--dedup-tol", phase_dedup, "dedup for --overlay-zeros");

  // ---- seeds ----
  auto* seeds = app.add_subcommand("seeds", "constructive initial points");
  FnOptions seeds_fn;
  std::string seeds_coeffs;       // coefficient file
  int seeds_pole_index = -1;      // index into map metadata
  std::string seeds_pole_at;      // explicit pole location
  int seeds_pole_order = 0;
  int seeds_infinity = 0;         // n at infinity
  std::string seeds_singular;     // singular zero location
  double seeds_delta = 0.0;
  double seeds_radius = 0.25;     // quadrature radius
  int seeds_nodes = 256;
  bool seeds_iterate = false;
  StopOptions seeds_stop;
  add_fn_options(seeds, seeds_fn);
  add_stop_options(seeds, seeds_stop);
  seeds->add_option("--coeffs", seeds_coeffs,
                    "JSON file with center/n/a/b coefficient maps");
  seeds->add_option("--at-pole", seeds_pole_index,
                    "seed at the k-th known pole of the builtin");
  seeds->add_option("--pole", seeds_pole_at, "seed at this pole re,im");
  seeds->add_option("--pole-order", seeds_pole_order, "order of --pole");
  seeds->add_option("--at-infinity", seeds_infinity,
                    "seeds near infinity for the given degree n");
  seeds->add_option("--singular", seeds_singular,
                    "singular zero location re,im for bifurcation seeds");
  seeds->add_option("--delta", seeds_delta, "perturbation size for --singular");
  seeds->add_option("--laurent-radius", seeds_radius,
                    "quadrature circle radius for coefficients");
  seeds->add_option("--laurent-nodes", seeds_nodes, "quadrature nodes");
  seeds->add_flag("--iterate", seeds_iterate, "run the iteration from each seed");

  // ---- certify ----
  auto* certify = app.add_subcommand("certify", "convergence certificates");
  FnOptions cert_fn;
  std::string cert_point;
  double cert_domain = 0.25, cert_sup_ddh = -1.0, cert_sup_ddg = -1.0;
  int cert_grid_n = 64;
  bool cert_mysovskii = false;
  double cert_rmax = 0.5;
  int cert_rsteps = 20, cert_mgrid = 12;
  add_fn_options(certify, cert_fn);
  certify->add_option("--point", cert_point, "initial point re,im")->required();
  certify->add_option("--domain-radius", cert_domain,
                      "disk radius the sup bounds must cover");
  certify->add_option("--sup-ddh", cert_sup_ddh,
                      "analytic sup |h''| (otherwise grid-estimated)");
  certify->add_option("--sup-ddg", cert_sup_ddg, "analytic sup |g''|");
  certify->add_option("--grid-n", cert_grid_n, "sup estimation grid");
  certify->add_flag("--mysovskii", cert_mysovskii,
                    "also compute a certified disk around the point");
  certify->add_option("--r-max", cert_rmax, "largest radius in the sweep");
  certify->add_option("--r-steps", cert_rsteps, "radii in the sweep");
  certify->add_option("--m-grid-n", cert_mgrid, "sample grid for omega");

  // ---- laurent ----
  auto* laurent = app.add_subcommand("laurent", "contour-quadrature coefficients");
  FnOptions lau_fn;
  std::string lau_which = "h", lau_center = "0,0", lau_csv;
  double lau_radius = 0.5;
  int lau_nodes = 256, lau_kmin = -4, lau_kmax = 8;
  add_fn_options(laurent, lau_fn);
  laurent->add_option("--which", lau_which, "h or g");
  laurent->add_option("--center", lau_center, "expansion center re,im");
  laurent->add_option("--radius", lau_radius, "contour radius");
  laurent->add_option("--nodes", lau_nodes, "quadrature nodes");
  laurent->add_option("--kmin", lau_kmin, "lowest coefficient index");
  laurent->add_option("--kmax", lau_kmax, "highest coefficient index");
  laurent->add_option("--csv", lau_csv, "write k,re,im rows to a file");

  // ---- sweep ----
  auto* sweep = app.add_subcommand("sweep", "bifurcation sweep at a singular zero");
  FnOptions sweep_fn;
  GridOptions sweep_grid;
  StopOptions sweep_stop;
  std::string sweep_z0 = "0,0", sweep_deltas = "0,0.003",
              sweep_prefix = "sweep";
  std::string sweep_format = "ppm";
  double sweep_radius = 0.05, sweep_region = 0.1, sweep_dedup = 1e-6,
         sweep_match = 1e-6;
  int sweep_nodes = 256;
  unsigned sweep_seed = 0;
  add_fn_options(sweep, sweep_fn);
  add_grid_options(sweep, sweep_grid);
  add_stop_options(sweep, sweep_stop);
  sweep->add_option("--z0", sweep_z0, "singular zero re,im");
  sweep->add_option("--deltas", sweep_deltas, "comma-separated delta list");
  sweep->add_option("--out-prefix", sweep_prefix, "image path prefix");
  sweep->add_option("--format", sweep_format, "ppm or png");
  sweep->add_option("--laurent-radius", sweep_radius,
                    "quadrature radius for the normal form");
  sweep->add_option("--laurent-nodes", sweep_nodes, "quadrature nodes");
  sweep->add_option("--region-radius", sweep_region,
                    "zeros within this distance of z0 are counted");
  sweep->add_option("--dedup-tol", sweep_dedup, "cluster linkage threshold");
  sweep->add_option("--match-tol", sweep_match, "limit-to-zero match radius");
  sweep->add_option("--palette-seed", sweep_seed, "basin palette seed");

  // ---- rerun ----
  auto* rerun = app.add_subcommand("rerun", "re-execute a manifest sidecar");
  std::string rerun_path;
  rerun->add_option("manifest", rerun_path, "path to a .manifest.json")->required();

  // parse
  std::vector<const char*> argv;
  argv.push_back("hnewton");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  std::cout.precision(17);

  if (solve->parsed()) {
    const HarmonicMap map = build_map(solve_fn);
    const GridSpec spec = resolve_grid(map, solve_grid);
    const StoppingConfig cfg = resolve_stopping(solve_stop);
    const auto zeros = find_zeros(map, spec, cfg, solve_dedup);
    double max_res = 0.0;
    for (const auto& z : zeros) max_res = std::max(max_res, z.residual);
    std::cout << map.name << ": " << zeros.size() << " zeros, max residual "
              << max_res << "\n";
    if (nonisolated_suspected(zeros))
      std::cout << "note: cluster pattern suggests a nonisolated zero set\n";
    if (solve_print) std::cout << zero_records_csv(zeros);
    std::vector<std::string> outputs;
    if (!solve_csv.empty()) {
      write_text(solve_csv, zero_records_csv(zeros));
      outputs.push_back(solve_csv);
    }
    if (!solve_json.empty()) {
      write_text(solve_json, zero_records_json(zeros));
      outputs.push_back(solve_json);
    }
    if (!outputs.empty()) write_manifest(outputs.front(), outputs);
    return 0;
  }

  if (basins->parsed()) {
    const HarmonicMap map = build_map(basins_fn);
    const GridSpec spec = resolve_grid(map, basins_grid);
    const StoppingConfig cfg = resolve_stopping(basins_stop);
    const auto zeros = find_zeros(map, spec, cfg, basins_dedup);
    const auto lab = label_basins(map, spec, cfg, zeros, basins_match);
    const auto img = render_basins(lab, basins_seed,
                                   basins_shade > 0 ? basins_shade : cfg.maxit);
    write_image(img, basins_out);
    write_manifest(basins_out, {basins_out});
    std::cout << map.name << ": " << zeros.size() << " zeros, image "
              << img.width << "x" << img.height << " -> " << basins_out << "\n";
    return 0;
  }

  if (phase->parsed()) {
    const HarmonicMap map = build_map(phase_fn);
    const GridSpec spec = resolve_grid(map, phase_grid);
    RasterImage img = render_phase(
        map, phase_w, phase_h, {spec.x_min, spec.x_max, spec.y_min, spec.y_max});
    if (phase_overlay_zeros) {
      const StoppingConfig cfg = resolve_stopping(phase_stop);
      for (const auto& z : find_zeros(map, spec, cfg, phase_dedup))
        draw_disk(img, z.location, phase_dot, RGB{0, 0, 0});
    }
    if (phase_overlay_poles) {
      for (const auto& [pole, order] : map.poles)
        draw_disk(img, pole, phase_dot, RGB{255, 255, 255});
    }
    write_image(img, phase_out);
    write_manifest(phase_out, {phase_out});
    std::cout << map.name << ": phase plot " << img.width << "x" << img.height
              << " -> " << phase_out << "\n";
    return 0;
  }

  if (seeds->parsed()) {
    const int modes = (seeds_pole_index >= 0 || !seeds_pole_at.empty() ? 1 : 0) +
                      (seeds_infinity > 0 ? 1 : 0) +
                      (!seeds_singular.empty() ? 1 : 0);
    if (modes != 1)
      throw CLI::ValidationError(
          "seeds", "pick exactly one of --at-pole/--pole, --at-infinity, --singular");

    std::vector<cplx> pts;
    HarmonicMap map;
    bool have_map = false;

    if (!seeds_coeffs.empty()) {
      // coefficients straight from a file; no map needed unless iterating
      std::ifstream in(seeds_coeffs);
      if (!in)
        throw CLI::ValidationError("--coeffs", "cannot open " + seeds_coeffs);
      json j = json::parse(in);
      LaurentData data;
      if (j.contains("center"))
        data.center = cplx(j["center"][0].get<double>(), j["center"][1].get<double>());
      data.n = j.value("n", 1);
      if (j.contains("a")) data.a = coeff_map_from_json(j["a"], "--coeffs a");
      if (j.contains("b")) data.b = coeff_map_from_json(j["b"], "--coeffs b");
      if (seeds_infinity > 0) {
        pts = infinity_seeds(data.a, data.b, seeds_infinity);
      } else if (!seeds_singular.empty()) {
        const cplx z0 = parse_cplx_arg(seeds_singular, "--singular");
        pts = singular_seeds(normal_form(data.a, data.b, z0), seeds_delta);
      } else {
        pts = pole_seeds(data);
      }
    } else {
      map = build_map(seeds_fn);
      have_map = true;
      if (!map.eval_h || !map.eval_g)
        throw CLI::ValidationError("seeds",
                                   "map has no h/g evaluators; use --coeffs");
      LaurentData data;
      QuadratureConfig qc;
      qc.nodes = seeds_nodes;

      if (seeds_infinity > 0) {
        qc.center = 0.0;
        // the expansion at infinity needs a contour outside all poles
        qc.radius = seeds->count("--laurent-radius") ? seeds_radius : 10.0;
        qc.k_min = 0;
        qc.k_max = seeds_infinity;
        pts = infinity_seeds(laurent_coefficients(map.eval_h, qc),
                             laurent_coefficients(map.eval_g, qc),
                             seeds_infinity);
      } else if (!seeds_singular.empty()) {
        const cplx z0 = parse_cplx_arg(seeds_singular, "--singular");
        qc.center = z0;
        qc.radius = seeds_radius;
        qc.k_min = 0;
        qc.k_max = 6;
        const auto nf = normal_form(laurent_coefficients(map.eval_h, qc),
                                    laurent_coefficients(map.eval_g, qc), z0);
        pts = singular_seeds(nf, seeds_delta);
      } else {
        if (seeds_pole_index >= 0) {
          if (seeds_pole_index >= int(map.poles.size()))
            throw CLI::ValidationError("--at-pole",
                                       "map has " + std::to_string(map.poles.size()) +
                                           " known poles");
          data.center = map.poles[seeds_pole_index].first;
          data.n = map.poles[seeds_pole_index].second;
        } else {
          if (seeds_pole_order < 1)
            throw CLI::ValidationError("--pole-order",
                                       "a positive --pole-order is required with --pole");
          data.center = parse_cplx_arg(seeds_pole_at, "--pole");
          data.n = seeds_pole_order;
        }
        qc.center = data.center;
        qc.radius = seeds_radius;
        qc.k_min = -data.n;
        qc.k_max = 2;
        data.a = laurent_coefficients(map.eval_h, qc);
        data.b = laurent_coefficients(map.eval_g, qc);
        pts = pole_seeds(data);
      }
    }

    const StoppingConfig cfg = resolve_stopping(seeds_stop);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      std::cout << "seed " << i << ": " << fmt_cplx(pts[i]);
      if (seeds_iterate) {
        if (!have_map) map = build_map(seeds_fn);
        have_map = true;
        const auto out = iterate(map, pts[i], cfg);
        std::cout << " -> " << to_string(out.status) << " after "
                  << out.iterations << " steps, residual " << out.residual
                  << ", limit " << fmt_cplx(out.final);
      }
      std::cout << "\n";
    }
    return 0;
  }

  if (certify->parsed()) {
    const HarmonicMap map = build_map(cert_fn);
    const cplx z0 = parse_cplx_arg(cert_point, "--point");
    double sh = cert_sup_ddh, sg = cert_sup_ddg;
    bool empirical = false;
    if (sh < 0.0 || sg < 0.0) {
      const auto est = sup_second_derivatives(map, z0, cert_domain, cert_grid_n);
      if (sh < 0.0) sh = est.first;
      if (sg < 0.0) sg = est.second;
      empirical = true;
    }
    const auto cert = kantorovich(map, z0, cert_domain, sh, sg, empirical);
    std::cout << "kantorovich at " << fmt_cplx(z0) << ": alpha " << cert.alpha
              << ", omega0 " << cert.omega0 << ", h0 " << cert.h0 << ", rho "
              << cert.rho << ", certified " << (cert.certified ? "yes" : "no")
              << (cert.empirical ? " (empirical sup bounds)" : "") << "\n";
    if (cert_mysovskii) {
      const auto [radius, omega] =
          mysovskii_disk(map, z0, cert_rmax, cert_mgrid, cert_rsteps);
      std::cout << "mysovskii disk: radius " << radius << ", omega " << omega
                << "\n";
    }
    return 0;
  }

  if (laurent->parsed()) {
    const HarmonicMap map = build_map(lau_fn);
    const evaluator* func = nullptr;
    if (lau_which == "h") func = &map.eval_h;
    else if (lau_which == "g") func = &map.eval_g;
    else throw CLI::ValidationError("--which", "must be h or g");
    if (!*func)
      throw CLI::ValidationError("--which", "map has no " + lau_which + " evaluator");
    QuadratureConfig qc;
    qc.center = parse_cplx_arg(lau_center, "--center");
    qc.radius = lau_radius;
    qc.nodes = lau_nodes;
    qc.k_min = lau_kmin;
    qc.k_max = lau_kmax;
    const auto coeffs = laurent_coefficients(*func, qc);
    std::ostringstream rows;
    rows.precision(17);
    rows << "k,re,im\n";
    for (const auto& [k, c] : coeffs)
      rows << k << ',' << c.real() << ',' << c.imag() << '\n';
    std::cout << rows.str();
    if (!lau_csv.empty()) {
      write_text(lau_csv, rows.str());
      write_manifest(lau_csv, {lau_csv});
    }
    return 0;
  }

  if (sweep->parsed()) {
    const HarmonicMap map = build_map(sweep_fn);
    if (!map.eval_h || !map.eval_g)
      throw CLI::ValidationError("sweep", "map needs h/g evaluators");
    const cplx z0 = parse_cplx_arg(sweep_z0, "--z0");
    QuadratureConfig qc;
    qc.center = z0;
    qc.radius = sweep_radius;
    qc.nodes = sweep_nodes;
    qc.k_min = 0;
    qc.k_max = 6;
    const auto nf = normal_form(laurent_coefficients(map.eval_h, qc),
                                laurent_coefficients(map.eval_g, qc), z0);
    const cplx c = nf.scale * nf.c_tilde;  // f_{delta c} = f - delta * c

    std::vector<double> deltas;
    {
      std::istringstream in(sweep_deltas);
      std::string tok;
      while (std::getline(in, tok, ',')) deltas.push_back(std::stod(tok));
      if (deltas.empty())
        throw CLI::ValidationError("--deltas", "need at least one value");
    }

    const GridSpec spec = resolve_grid(map, sweep_grid);
    const StoppingConfig cfg = resolve_stopping(sweep_stop);
    std::vector<std::string> outputs;
    for (std::size_t i = 0; i < deltas.size(); ++i) {
      const double d = deltas[i];
      const HarmonicMap fd = make_shifted(map, -d * c);
      const auto zeros = find_zeros(fd, spec, cfg, sweep_dedup);
      const auto lab = label_basins(fd, spec, cfg, zeros, sweep_match);
      const auto img = render_basins(lab, sweep_seed, cfg.maxit);
      const std::string path =
          sweep_prefix + "_" + std::to_string(i) + "." + sweep_format;
      write_image(img, path);
      outputs.push_back(path);
      int near = 0;
      for (const auto& z : zeros)
        if (std::abs(z.location - z0) <= sweep_region) ++near;
      std::cout << "delta " << d << ": " << zeros.size() << " zeros total, "
                << near << " within " << sweep_region << " of z0 -> " << path
                << "\n";
    }
    write_manifest(outputs.front(), outputs);
    return 0;
  }

  if (rerun->parsed()) {
    std::ifstream in(rerun_path);
    if (!in) throw CLI::ValidationError("rerun", "cannot open " + rerun_path);
    json m = json::parse(in);
    std::vector<std::string> stored;
    for (const auto& a : m.at("argv")) stored.push_back(a.get<std::string>());
    if (!stored.empty() && stored.front() == "rerun")
      throw CLI::ValidationError("rerun", "manifest stores a rerun command");
    const auto saved = g_argv;
    g_argv = stored;
    const int code = dispatch(stored);
    g_argv = saved;
    return code;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  g_argv.assign(argv + 1, argv + argc);
  try {
    return dispatch(g_argv);
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
