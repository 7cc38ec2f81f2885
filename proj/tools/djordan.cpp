// djordan: command-line front end for the discrete Jordan curve library.
//
// Exit codes: 0 pass, 1 verdict fail or library error, 2 hypotheses fail,
// 3 I/O or parse error. Relative output paths are resolved against
// $DJORDAN_OUTPUT_DIR when it is set.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>

#include "djc/acceptance.hpp"
#include "djc/contraction.hpp"
#include "djc/gensurf.hpp"
#include "djc/io.hpp"
#include "djc/jordan.hpp"
#include "djc/planar.hpp"
#include "djc/render.hpp"

using namespace djc;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kHypotheses = 2;
constexpr int kIo = 3;

std::string output_path(const std::string& path) {
  std::filesystem::path p(path);
  const char* dir = std::getenv("DJORDAN_OUTPUT_DIR");
  if (dir && *dir && p.is_relative()) p = std::filesystem::path(dir) / p;
  std::error_code ec;
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path(), ec);
  return p.string();
}

void emit(const std::string& output, const std::string& text) {
  if (output.empty())
    std::cout << text;
  else
    write_file(output_path(output), text);
}

std::optional<Rational> rational_option(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_rational(text);
}

Path pick_curve(const SceneFile& scene, const std::string& curve_file, int index) {
  if (!curve_file.empty()) {
    auto side = parse_scene(read_file(curve_file));
    if (side.curves.empty()) throw Error(ErrorCode::Parse, curve_file + " has no curve line");
    return side.curves.front();
  }
  if (index < 0 || index >= static_cast<int>(scene.curves.size()))
    throw Error(ErrorCode::Parse, "no curve number " + std::to_string(index) + " in the input");
  return scene.curves[index];
}

int code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::Parse:
    case ErrorCode::Io: return kIo;
    case ErrorCode::HypothesesFailed: return kHypotheses;
    default: return kFail;
  }
}

struct Options {
  std::string input, output, curve_file, mode = "theorem2", sequence, svg, svg_dir, config, kind;
  std::string edge_length, margin;
  std::vector<int> params;
  int curve = 0;
  int anchor = -1;
  int random_curves = 5;
  int pairs = 3;
  int widen_rounds = 2;
  int isolate_rounds = 2;
  std::uint64_t seed = 0;
  bool mutate = false;
};

int cmd_validate(const Options& o) {
  auto scene = parse_scene(read_file(o.input));
  auto issues = validate(scene.surface);
  for (const auto& v : issues) std::cout << v.message << "\n";
  if (issues.empty()) std::cout << "valid\n";
  return issues.empty() ? kPass : kFail;
}

int cmd_gen(const Options& o) {
  GenSpec spec;
  spec.kind = parse_kind(o.kind);
  spec.seed = o.seed;
  if (!o.params.empty()) spec.a = o.params[0];
  if (o.params.size() > 1) spec.b = o.params[1];
  if (spec.kind == SurfaceKind::TorusGrid && o.params.size() == 1) spec.b = spec.a;
  auto g = generate(spec);
  std::string text = write_surface(g.surface);
  for (const auto& [name, curve] : g.curves) text += "# curve " + name + "\n" + write_curve(curve);
  emit(o.output, text);
  return kPass;
}

int cmd_separate(const Options& o) {
  auto scene = parse_scene(read_file(o.input));
  const Path curve = pick_curve(scene, o.curve_file, o.curve);
  std::string text;
  int code = kFail;
  if (o.mode == "theorem1") {
    auto r = check_theorem1(scene.surface, curve);
    text = write_separation(r.report, r.verdict);
    if (!r.note.empty()) text = "# " + r.note + "\n" + text;
    code = r.verdict == Verdict::Pass ? kPass : r.verdict == Verdict::HypothesesFailed ? kHypotheses : kFail;
  } else if (o.mode == "theorem2") {
    auto r = check_theorem2(scene.surface, curve);
    text = write_separation(r.report, r.verdict);
    if (!r.note.empty()) text = "# " + r.note + "\n" + text;
    code = r.verdict == Verdict::Pass ? kPass : kFail;
  } else if (o.mode == "components") {
    auto rep = components(scene.surface, curve);
    const Verdict v = rep.components.size() >= 2 && rep.seeds_separated() ? Verdict::Pass : Verdict::Fail;
    text = write_separation(rep, v);
    code = v == Verdict::Pass ? kPass : kFail;
  } else {
    throw Error(ErrorCode::Parse, "unknown mode '" + o.mode + "'");
  }
  emit(o.output, text);
  return code;
}

int cmd_contract(const Options& o) {
  auto scene = parse_scene(read_file(o.input));
  const Path curve = pick_curve(scene, o.curve_file, o.curve);
  const VertexId p = o.anchor >= 0 ? o.anchor : curve.vertices.at(0);
  auto seq = contract_cycle(scene.surface, curve, p);
  emit(o.output, write_sequence(seq));
  if (!o.svg_dir.empty()) {
    const Layout xy = scene.coords.empty() ? tutte_layout(scene.surface) : layout_of(embedded_from_scene(scene));
    const auto frames = render_sequence(scene.surface, xy, seq);
    const std::string dir = output_path(o.svg_dir);
    std::filesystem::create_directories(dir);
    for (std::size_t i = 0; i < frames.size(); ++i)
      write_file((std::filesystem::path(dir) / ("step_" + std::to_string(i) + ".svg")).string(), frames[i]);
  }
  std::cerr << seq.steps() << " steps\n";
  return kPass;
}

int cmd_certify(const Options& o) {
  auto scene = parse_scene(read_file(o.input));
  SampleSpec spec;
  spec.curves = scene.curves;
  spec.random_curves = o.random_curves;
  spec.pairs_per_curve = o.pairs;
  spec.seed = o.seed;
  auto rep = certify_simply_connected(scene.surface, spec);
  for (const auto& e : rep.entries) {
    std::string line = write_curve(e.curve);
    line.pop_back();
    std::cout << (e.success ? "ok " : "failed ") << "p=" << e.p << " q=" << e.q << " " << line;
    if (!e.error.empty()) std::cout << "  # " << e.error;
    std::cout << "\n";
  }
  if (!rep.warning.empty()) std::cout << "# warning: " << rep.warning << "\n";
  std::cout << (rep.certified ? "certified\n" : "not certified\n");
  return rep.certified ? kPass : kFail;
}

int cmd_embed(const Options& o) {
  auto scene = parse_scene(read_file(o.input));
  EmbedConfig cfg;
  cfg.edge_length = rational_option(o.edge_length);
  cfg.margin = rational_option(o.margin);
  cfg.widen_rounds = o.widen_rounds;
  cfg.isolate_rounds = o.isolate_rounds;
  auto r = embed(scene.polygon, cfg);
  emit(o.output, write_embedded(r.complex, {r.curve}));
  if (!o.svg.empty()) write_file(output_path(o.svg), render_svg(r.complex.surface, layout_of(r.complex), {r.curve}));
  auto hyp = check_theorem1_hypotheses(r.complex.surface, r.curve);
  std::cerr << r.complex.surface.cell_count() << " cells, curve of " << r.curve.size() << " vertices, hypotheses "
            << (hyp.ok() ? "hold" : "fail") << "\n";
  return hyp.ok() ? kPass : kHypotheses;
}

int cmd_render(const Options& o) {
  auto scene = parse_scene(read_file(o.input));
  const Layout xy = scene.coords.empty() ? tutte_layout(scene.surface) : layout_of(embedded_from_scene(scene));
  if (!o.sequence.empty()) {
    auto seq = parse_sequence(read_file(o.sequence));
    const auto frames = render_sequence(scene.surface, xy, seq);
    const std::string stem = o.output.empty() ? "frame" : o.output;
    for (std::size_t i = 0; i < frames.size(); ++i)
      write_file(output_path(stem + "_" + std::to_string(i) + ".svg"), frames[i]);
    std::cerr << frames.size() << " frames\n";
    return kPass;
  }
  std::vector<Path> curves = scene.curves;
  if (!o.curve_file.empty()) curves = {pick_curve(scene, o.curve_file, 0)};
  emit(o.output, render_svg(scene.surface, xy, curves));
  return kPass;
}

int cmd_accept(const Options& o) {
  AcceptConfig cfg;
  if (!o.config.empty()) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(read_file(o.config));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::Parse, std::string("config: ") + e.what());
    }
    if (!j.is_object()) throw Error(ErrorCode::Parse, "config must be a JSON object");
    for (auto& [key, value] : j.items()) {
      try {
        if (key == "seed")
          cfg.seed = value.get<std::uint64_t>();
        else if (key == "widen_rounds")
          cfg.widen_rounds = value.get<int>();
        else if (key == "oracle_cell_limit")
          cfg.oracle_cell_limit = value.get<int>();
        else if (key == "mutate_veblen")
          cfg.mutate_veblen = value.get<bool>();
        else
          throw Error(ErrorCode::Parse, "unknown config key '" + key + "'");
      } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Parse, "config key '" + key + "': " + e.what());
      }
    }
  }
  if (o.mutate) cfg.mutate_veblen = true;
  int failed = 0;
  for (const auto& r : run_acceptance(cfg)) {
    std::cout << format_result(r) << std::endl;
    if (!r.pass) ++failed;
  }
  std::cout << "summary " << (10 - failed) << "/10 pass" << std::endl;
  return failed ? kFail : kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete Jordan curve toolkit"};
  app.require_subcommand(1);
  Options o;

  auto* validate_cmd = app.add_subcommand("validate", "check surface invariants");
  validate_cmd->add_option("surface", o.input, "surface file")->required();

  auto* gen = app.add_subcommand("gen", "generate a surface with its named curves");
  gen->add_option("kind", o.kind, "octahedron, icosahedron, disk, fan, torus, annulus, moebius")->required();
  gen->add_option("params", o.params, "disk: rings; fan: n; torus: m n; annulus: cells");
  gen->add_option("--seed", o.seed, "vertex relabelling seed (0 keeps natural ids)");
  gen->add_option("--output", o.output, "output file (default stdout)");

  auto* separate = app.add_subcommand("separate", "components of S - C and the theorem verdict");
  separate->add_option("surface", o.input, "surface file with curve lines")->required();
  separate->add_option("--curve-file", o.curve_file, "take the curve from this file instead");
  separate->add_option("--curve", o.curve, "index of the curve line in the surface file");
  separate->add_option("--mode", o.mode, "theorem2 (default), theorem1 or components");
  separate->add_option("--output", o.output, "report file (default stdout)");

  auto* contract = app.add_subcommand("contract", "contract a cycle through an anchor");
  contract->add_option("surface", o.input, "surface file with curve lines")->required();
  contract->add_option("--anchor", o.anchor, "anchor vertex (default: first curve vertex)");
  contract->add_option("--curve-file", o.curve_file, "take the curve from this file instead");
  contract->add_option("--curve", o.curve, "index of the curve line in the surface file");
  contract->add_option("--output", o.output, "sequence file (default stdout)");
  contract->add_option("--svg-dir", o.svg_dir, "write one SVG per step into this directory");

  auto* certify = app.add_subcommand("certify", "sample arc deformations to certify simple connectedness");
  certify->add_option("surface", o.input, "surface file; its curve lines are sampled too")->required();
  certify->add_option("--random-curves", o.random_curves, "extra random curves (default 5)");
  certify->add_option("--pairs", o.pairs, "(p, q) pairs per curve (default 3)");
  certify->add_option("--seed", o.seed, "sampling seed");

  auto* embed_cmd = app.add_subcommand("embed", "embed a polygon into a fine triangular lattice");
  embed_cmd->add_option("polygon", o.input, "file of 'p x y' lines")->required();
  embed_cmd->add_option("--edge-length", o.edge_length, "lattice edge, at most d0/3 (default: largest such)");
  embed_cmd->add_option("--margin", o.margin, "margin around the polygon, above its diameter");
  embed_cmd->add_option("--widen-rounds", o.widen_rounds, "centroid rounds, at least 2 (default 2)");
  embed_cmd->add_option("--isolate-rounds", o.isolate_rounds, "curve-local refinement rounds (default 2)");
  embed_cmd->add_option("--output", o.output, "embedded complex file (default stdout)");
  embed_cmd->add_option("--svg", o.svg, "also render to this SVG file");

  auto* render = app.add_subcommand("render", "draw a surface, an embedding or a contraction as SVG");
  render->add_option("input", o.input, "surface or embedded complex file")->required();
  render->add_option("--sequence", o.sequence, "deformation sequence; writes <output>_<i>.svg per entry");
  render->add_option("--curve-file", o.curve_file, "highlight this curve instead of the file's");
  render->add_option("--output", o.output, "SVG file, or frame prefix with --sequence");

  auto* accept = app.add_subcommand("accept", "run the acceptance suite");
  accept->add_option("--config", o.config, "JSON with seed, widen_rounds, oracle_cell_limit, mutate_veblen");
  accept->add_flag("--mutate-veblen", o.mutate, "split curve edges too (the suite should then fail)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kIo;
  }

  try {
    if (*validate_cmd) return cmd_validate(o);
    if (*gen) return cmd_gen(o);
    if (*separate) return cmd_separate(o);
    if (*contract) return cmd_contract(o);
    if (*certify) return cmd_certify(o);
    if (*embed_cmd) return cmd_embed(o);
    if (*render) return cmd_render(o);
    if (*accept) return cmd_accept(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return code_for(e);
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  }
  return kFail;
}
