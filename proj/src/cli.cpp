#include "movcone/cli.hpp"

#include "movcone/errors.hpp"
#include "movcone/json_io.hpp"
#include "movcone/render.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <regex>

namespace movcone::cli {

namespace {

namespace fs = std::filesystem;

const char* kGrammar =
    "usage:\n"
    "  movcone analyze <cfg|dir> [--out r.json]\n"
    "  movcone reduce <cfg> --class v[,v...] [--max-steps N] [--out r.json]\n"
    "  movcone chambers <cfg> --depth D [--out r.json]\n"
    "  movcone boundary <cfg> --depth D [--out r.json]\n"
    "  movcone numdim <cfg> --word j1,j2[,...] [--tol T] [--out r.json] [--csv t.csv]\n"
    "  movcone sweep --n-max N --j-max J [--n-min N] [--j-min J] [--threads T]\n"
    "                [--checkpoint p] [--report p] [--counterexample-log p]\n"
    "  movcone render <cfg> --depth D --out figure.svg [--size WxH] [--colors spec]\n"
    "                [--no-orbit] [--no-boundary]\n";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_json(const std::string& path, const json& j) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f)
    throw Error(Errc::Io, "cannot write " + path);
  f << j.dump(2) << '\n';
  if (!f)
    throw Error(Errc::Io, "cannot write " + path);
}

ValidatedVariety load(const std::string& path) { return validate(load_spec(path)); }

std::string join_one_based(const std::vector<int>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k)
    s += (k ? "," : "") + std::to_string(v[k] + 1);
  return s;
}

std::string class_text(const DivisorClass& e) {
  std::string s;
  for (std::size_t k = 0; k < e.size(); ++k)
    s += (k ? "," : "") + e[k].get_str();
  return s;
}

std::string qvector_text(const QVector& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k)
    s += (k ? ", " : "") + v[k].to_string();
  return s + ")";
}

void print_analysis(const ValidatedVariety& v, const std::string& label, std::ostream& out) {
  const auto& spec = v.spec();
  out << "variety: " << (spec.name.empty() ? label : spec.name) << "\n";
  out << "factors: " << json(spec.factors).dump() << "  degrees: " << json(spec.degrees).dump()
      << "\n";
  out << "n = " << v.n() << "  J = {" << join_one_based(v.J()) << "}  dim X = " << v.dim()
      << "  codim X = " << v.codim() << "\n";
  if (v.subcritical()) {
    out << "codim X < n: Nef(X) = Mov(X), Bir(X) acts trivially\n";
    return;
  }
  out << "[X] = " << cycle_class(v).to_string() << "\n";
  ReflectionRep rep(v);
  out << "b:";
  for (const auto& [key, value] : rep.b().b)
    if (rep.in_J(key.first) && rep.in_J(key.second))
      out << " b" << key.first + 1 << key.second + 1 << "=" << value.get_str();
  out << "\nB =\n" << format_matrix(rep.gram().matrix()) << "\n";
  for (int j : rep.J())
    out << "iota_" << j + 1 << "^* =\n" << format_matrix(rep.involution(j)) << "\n";
  if (rep.J().size() >= 2) {
    Inertia in = signature(rep.gram_J());
    out << "signature(B_J) = (" << in.positive << "," << in.negative << "," << in.zero << ")  "
        << (is_lorentzian(rep.gram_J()) ? "Lorentzian" : "not Lorentzian") << "\n";
  } else {
    out << "|J| = 1: W_J = Z/2\n";
  }
}

int cmd_analyze(const std::string& target, const std::string& out_path, std::ostream& out) {
  if (fs::is_directory(target)) {
    json all = json::array();
    for (const auto& [path, spec] : load_spec_directory(target)) {
      ValidatedVariety v = validate(spec);
      print_analysis(v, path.filename().string(), out);
      out << "\n";
      json j = analysis_json(v);
      j["path"] = path.string();
      all.push_back(j);
    }
    if (!out_path.empty())
      write_json(out_path, all);
    return kExitOk;
  }
  ValidatedVariety v = load(target);
  print_analysis(v, fs::path(target).filename().string(), out);
  if (!out_path.empty())
    write_json(out_path, analysis_json(v));
  return kExitOk;
}

int cmd_reduce(const std::string& cfg, const std::string& cls, std::optional<long> max_steps,
               const std::string& out_path, std::ostream& out) {
  DivisorClass e;
  try {
    e = parse_class(cls);
  } catch (const std::invalid_argument& ex) {
    throw UsageError(std::string("--class: ") + ex.what());
  }
  ValidatedVariety v = load(cfg);
  ReflectionRep rep(v);
  DescentResult r = reduce_to_nef(e, rep, max_steps);
  out << "verdict: " << verdict_name(r.verdict) << "\n";
  out << "word: " << r.word.to_string() << "\n";
  out << "final: " << class_text(r.final_class) << "\n";
  if (r.witness) {
    out << "witness: " << witness_name(r.witness->kind) << " (" << r.witness->first + 1;
    if (r.witness->second >= 0)
      out << "," << r.witness->second + 1;
    out << ")\n";
  }
  out << "trace:\n";
  for (const auto& t : r.trace)
    out << "  " << (t.letter ? "s" + std::to_string(*t.letter + 1) : std::string("start")) << "  "
        << class_text(t.cls) << "  s=" << t.s.get_str() << "\n";
  if (!out_path.empty())
    write_json(out_path, descent_json(r));
  return kExitOk;
}

int cmd_chambers(const std::string& cfg, int depth, const std::string& out_path,
                 std::ostream& out) {
  ValidatedVariety v = load(cfg);
  ReflectionRep rep(v);
  auto chambers = chamber_orbit(rep, depth);
  out << "chambers up to depth " << depth << ": " << chambers.size() << "\n";
  for (const auto& c : chambers) {
    out << "  " << c.word.to_string() << ":";
    for (std::size_t k = 0; k < c.generators.cols(); ++k) {
      out << " (";
      auto col = c.generators.column(k);
      for (std::size_t r = 0; r < col.size(); ++r)
        out << (r ? "," : "") << col[r].get_str();
      out << ")";
    }
    out << "\n";
  }
  if (!out_path.empty())
    write_json(out_path, chambers_json(chambers, depth));
  return kExitOk;
}

int cmd_boundary(const std::string& cfg, int depth, const std::string& out_path,
                 std::ostream& out) {
  ValidatedVariety v = load(cfg);
  ReflectionRep rep(v);
  auto eigen = pair_eigendata(rep);
  for (const auto& [key, e] : eigen)
    out << "pair (" << key.first + 1 << "," << key.second + 1 << "): b = " << e.b.get_str()
        << ", lambda = " << e.lambda.to_string() << "\n";
  auto cones = boundary_cones(rep, eigen, depth);
  out << "boundary cones up to depth " << depth << ": " << cones.size() << "\n";
  for (const auto& c : cones) {
    out << "  " << (c.kind == ConeKind::Face ? "face " + std::to_string(c.first + 1)
                                             : "pair (" + std::to_string(c.first + 1) + "," +
                                                   std::to_string(c.second + 1) + ")")
        << " word " << c.orbit_word.to_string() << ":";
    for (const auto& g : c.generators)
      out << " " << qvector_text(g);
    out << "\n";
  }
  if (!out_path.empty())
    write_json(out_path, cones_json(cones, depth));
  return kExitOk;
}

int cmd_numdim(const std::string& cfg, const std::string& word, double tol,
               const std::string& out_path, const std::string& csv_path, std::ostream& out) {
  ReducedWord w;
  try {
    w = parse_word(word);
  } catch (const std::invalid_argument& ex) {
    throw UsageError(std::string("--word: ") + ex.what());
  }
  ValidatedVariety v = load(cfg);
  ReflectionRep rep(v);
  SpectralReport r = spectral_report(rep, w, tol);
  NuVol nu = nu_vol(v, r, tol);
  out << "word: " << w.to_string() << "\n";
  if (r.lambda_exact)
    out << "lambda1 = mu1 = " << r.lambda_exact->to_string() << "\n";
  char buf[128];
  std::snprintf(buf, sizeof buf, "lambda1 = %.15g (+- %.2g)\nmu1 = %.15g (+- %.2g)\n",
                r.lambda1.value, r.lambda1.error, r.mu1.value, r.mu1.error);
  out << buf;
  out << "other eigenvalues on the unit circle: " << (r.unit_others ? "yes" : "no") << "\n";
  out << "reciprocal pairing: " << (r.reciprocal_pair ? "yes" : "no") << "\n";
  out << "Delta+ + Delta- reduces into the interior of Nef: " << (r.sum_interior ? "yes" : "no")
      << "\n";
  if (nu.exact)
    out << "nu_vol = " << nu.exact->get_str() << " (certified)\n";
  else {
    std::snprintf(buf, sizeof buf, "nu_vol = %.15g (not certified)\n", nu.value);
    out << buf;
  }
  if (!out_path.empty())
    write_json(out_path, spectral_json(r, nu));
  if (!csv_path.empty()) {
    std::ofstream f(csv_path);
    if (!f)
      throw Error(Errc::Io, "cannot write " + csv_path);
    write_numdim_csv(f, {{r, nu}});
  }
  return kExitOk;
}

int cmd_sweep(const SweepOptions& o, const std::string& report_path, std::ostream& out) {
  SweepReport r = sweep(o);
  out << "n in [" << o.n_min << "," << o.n_max << "], |J| in [" << o.j_min << "," << o.j_max
      << "]\n";
  out << "tasks: " << r.tasks << " (anchors " << r.anchors << ")\n";
  out << "counterexamples: " << r.counterexamples.size() << "\n";
  for (const auto& c : r.counterexamples) {
    out << "  n=" << c.task.n << " |J|=" << c.task.j_size << " partition="
        << json(c.task.partition).dump() << " signature=(" << c.inertia.positive << ","
        << c.inertia.negative << "," << c.inertia.zero << ")\n";
  }
  if (!r.complete)
    out << "stopped early; resume from the checkpoint\n";
  if (!report_path.empty())
    write_json(report_path, sweep_json(r));
  return kExitOk;
}

int cmd_render(const std::string& cfg, int depth, const std::string& out_path,
               const std::string& size, const std::string& colors, bool no_orbit,
               bool no_boundary, std::ostream& out) {
  RenderOptions opts;
  if (!size.empty()) {
    static const std::regex form(R"(([0-9]+)x([0-9]+))");
    std::smatch m;
    if (!std::regex_match(size, m, form))
      throw UsageError("--size must look like 800x600");
    opts.width = std::stoi(m[1]);
    opts.height = std::stoi(m[2]);
    if (opts.width < 1 || opts.height < 1)
      throw UsageError("--size must be positive");
  }
  if (!colors.empty()) {
    try {
      apply_color_spec(opts, colors);
    } catch (const Error& e) {
      throw UsageError(std::string("--colors: ") + e.what());
    }
  }
  opts.orbit_layer = !no_orbit;
  opts.boundary_layer = !no_boundary;

  ValidatedVariety v = load(cfg);
  ReflectionRep rep(v);
  if (rep.rank() != 3)
    throw Error(Errc::RankNotThree, "slice pictures need Picard rank 3, got " +
                                        std::to_string(rep.rank()) +
                                        "; use `movcone boundary --out` for the cone data");
  auto chambers = chamber_orbit(rep, depth);
  std::vector<ConeDescription> cones;
  if (rep.J().size() < 2 || is_lorentzian(rep.gram_J()))
    cones = boundary_cones(rep, pair_eigendata(rep), depth);
  else
    out << "W_J is not Lorentzian; boundary layer left empty\n";
  SliceScene scene = build_scene(rep, chambers, cones, opts);
  emit_svg(scene, fs::path(out_path));
  out << "wrote " << out_path << ": " << scene.chambers.size() << " chambers, "
      << scene.segments.size() << " boundary segments\n";
  return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Movable cones of Calabi-Yau complete intersections in products of projective spaces",
               "movcone"};
  app.require_subcommand(1);
  app.footer(kGrammar);

  std::string cfg, out_path, cls, word, csv_path, checkpoint, report, ce_log, size, colors;
  int depth = 0;
  long max_steps = 0;
  double tol = 1e-9;
  bool no_orbit = false, no_boundary = false;
  SweepOptions sw;

  auto* analyze = app.add_subcommand("analyze", "intersection data, B, involutions, Lorentzian verdict");
  analyze->add_option("cfg", cfg, "config file or directory of *.cfg")->required();
  analyze->add_option("--out", out_path, "JSON output path");

  auto* reduce = app.add_subcommand("reduce", "descend a divisor class to the nef cone");
  reduce->add_option("cfg", cfg, "config file")->required();
  reduce->add_option("--class", cls, "coordinates in the basis h_i, e.g. 80,55,-8")->required();
  auto* max_opt = reduce->add_option("--max-steps", max_steps, "step cap")->check(CLI::PositiveNumber);
  reduce->add_option("--out", out_path, "JSON output path");

  auto* chambers = app.add_subcommand("chambers", "chambers w^* Nef(X) up to a word length");
  chambers->add_option("cfg", cfg, "config file")->required();
  chambers->add_option("--depth", depth, "maximal word length")->required()->check(CLI::NonNegativeNumber);
  chambers->add_option("--out", out_path, "JSON output path");

  auto* boundary = app.add_subcommand("boundary", "boundary cones of Mov(X) up to a word length");
  boundary->add_option("cfg", cfg, "config file")->required();
  boundary->add_option("--depth", depth, "maximal word length")->required()->check(CLI::NonNegativeNumber);
  boundary->add_option("--out", out_path, "JSON output path");

  auto* numdim = app.add_subcommand("numdim", "spectral data and nu_vol of a word");
  numdim->add_option("cfg", cfg, "config file")->required();
  numdim->add_option("--word", word, "1-based letters, e.g. 2,3")->required();
  numdim->add_option("--tol", tol, "tolerance")->check(CLI::PositiveNumber);
  numdim->add_option("--out", out_path, "JSON output path");
  numdim->add_option("--csv", csv_path, "CSV output path");

  auto* sweep_cmd = app.add_subcommand("sweep", "check signature(B_J) = (|J|-1,1) over partitions");
  sweep_cmd->add_option("--n-max", sw.n_max, "largest n")->required();
  sweep_cmd->add_option("--j-max", sw.j_max, "largest |J|")->required();
  sweep_cmd->add_option("--n-min", sw.n_min, "smallest n (default 2)");
  sweep_cmd->add_option("--j-min", sw.j_min, "smallest |J| (default 2)");
  sweep_cmd->add_option("--threads", sw.threads, "worker threads")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--checkpoint", checkpoint, "checkpoint file (resumed if present)");
  sweep_cmd->add_option("--report", report, "JSON report path");
  sweep_cmd->add_option("--counterexample-log", ce_log, "append counterexamples here");

  auto* render = app.add_subcommand("render", "SVG of the slice sum = 1 for rank 3");
  render->add_option("cfg", cfg, "config file")->required();
  render->add_option("--depth", depth, "maximal word length")->required()->check(CLI::NonNegativeNumber);
  render->add_option("--out", out_path, "SVG output path")->required();
  render->add_option("--size", size, "WxH in pixels");
  render->add_option("--colors", colors, "nef=#rrggbb,chamber=...,stroke=...,face=...,pair=...");
  render->add_flag("--no-orbit", no_orbit, "omit the chamber layer");
  render->add_flag("--no-boundary", no_boundary, "omit the boundary layer");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(std::move(rev));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << kGrammar;
    return kExitUsage;
  }

  try {
    if (*analyze)
      return cmd_analyze(cfg, out_path, out);
    if (*reduce)
      return cmd_reduce(cfg, cls, *max_opt ? std::optional<long>(max_steps) : std::nullopt,
                        out_path, out);
    if (*chambers)
      return cmd_chambers(cfg, depth, out_path, out);
    if (*boundary)
      return cmd_boundary(cfg, depth, out_path, out);
    if (*numdim)
      return cmd_numdim(cfg, word, tol, out_path, csv_path, out);
    if (*sweep_cmd) {
      if (!checkpoint.empty())
        sw.checkpoint = checkpoint;
      if (!ce_log.empty())
        sw.counterexample_log = ce_log;
      return cmd_sweep(sw, report, out);
    }
    if (*render)
      return cmd_render(cfg, depth, out_path, size, colors, no_orbit, no_boundary, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n" << kGrammar;
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
    return kExitDomain;
  } catch (const Error& e) {
    err << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  err << kGrammar;
  return kExitUsage;
}

} // namespace movcone::cli
