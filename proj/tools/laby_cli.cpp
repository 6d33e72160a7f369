// Command-line front end: generate, validate, compose, path/oracle, dim,
// core and render subcommands over the pattern text format.
//
// Exit codes: 0 success, 1 validation failed, 2 usage or parse error,
// 3 materialization cap exceeded.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "laby/laby.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kValidationFailed = 1;
constexpr int kUsageError = 2;
constexpr int kCapExceeded = 3;

std::int64_t max_width_from_env() {
  if (const char* env = std::getenv("LABY_MAX_WIDTH")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end == env || *end != '\0' || v < 1)
      throw laby::BadParameter("LABY_MAX_WIDTH must be a positive integer");
    return v;
  }
  return laby::kDefaultMaxWidth;
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw laby::BadParameter("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw laby::BadParameter("cannot open '" + path + "' for writing");
  out << text;
}

laby::Pattern load_pattern(const std::string& path) { return laby::read_pattern(slurp(path)); }

laby::Pattern load_composed(const std::vector<std::string>& paths, std::int64_t cap) {
  std::vector<laby::Pattern> seq;
  seq.reserve(paths.size());
  for (const std::string& p : paths) seq.push_back(load_pattern(p));
  return laby::compose_sequence(seq, cap).pattern;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"labyrinth pattern toolkit"};
  app.require_subcommand(1);

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "generate a pattern");
  gen->require_subcommand(1);
  int gen_k = 1;
  bool gen_left = false;
  std::string gen_out;
  auto* gen_snake = gen->add_subcommand("snake", "snake cross pattern A_k (width 4k+7)");
  gen_snake->add_option("--k", gen_k, "pattern index k >= 1")->required();
  gen_snake->add_flag("--left", gen_left, "left (mirrored) chirality");
  gen_snake->add_option("-o,--out", gen_out, "output file (default stdout)");
  auto* gen_cross = gen->add_subcommand("cross", "plain cross pattern (width 2k+1)");
  gen_cross->add_option("--k", gen_k, "pattern index k >= 1")->required();
  gen_cross->add_option("-o,--out", gen_out, "output file (default stdout)");

  // ---- validate ----
  auto* val = app.add_subcommand("validate", "check the labyrinth properties");
  std::string val_in = "-";
  bool val_machine = false;
  val->add_option("input", val_in, "pattern file or - for stdin");
  val->add_flag("--machine", val_machine, "key=value output");

  // ---- compose ----
  auto* comp = app.add_subcommand("compose", "substitute patterns left to right");
  std::vector<std::string> comp_in;
  std::string comp_out;
  comp->add_option("inputs", comp_in, "pattern files (outermost first)")->required()->expected(-2);
  comp->add_option("-o,--out", comp_out, "output file (default stdout)");

  // ---- path / oracle ----
  auto* path_cmd = app.add_subcommand("path", "exit-to-exit tree path of a (composed) pattern");
  std::string path_from = "top", path_to = "bottom";
  std::vector<std::string> path_in;
  bool path_cells = false;
  path_cmd->add_option("--from", path_from, "top|bottom|left|right");
  path_cmd->add_option("--to", path_to, "top|bottom|left|right");
  path_cmd->add_option("--pattern", path_in, "pattern file(s); several compose")->required();
  path_cmd->add_flag("--cells", path_cells, "also print the square list");

  auto* oracle_cmd = app.add_subcommand("oracle", "independent BFS cross-check of path lengths");
  oracle_cmd->add_option("--from", path_from, "top|bottom|left|right");
  oracle_cmd->add_option("--to", path_to, "top|bottom|left|right");
  oracle_cmd->add_option("--pattern", path_in, "pattern file(s); several compose")->required();

  // ---- dim ----
  auto* dim = app.add_subcommand("dim", "dimension quotients, estimates, schedules");
  dim->require_subcommand(1);
  std::int64_t dim_k = 0;
  auto* dim_quot = dim->add_subcommand("quotient", "k-th dimension quotient d_k");
  dim_quot->add_option("--k", dim_k, "index k >= 0")->required();
  std::string dim_sched_file;
  auto* dim_est = dim->add_subcommand("estimate", "level estimate of a schedule file");
  dim_est->add_option("--schedule", dim_sched_file, "schedule file (lines: k p q)")->required();
  double dim_delta = 2.0, dim_tol = 1e-3;
  int dim_max_terms = 64;
  std::string dim_out, dim_trace_out;
  auto* dim_target = dim->add_subcommand("target", "schedule hitting a target dimension");
  dim_target->add_option("--delta", dim_delta, "target dimension in [1,2]")->required();
  dim_target->add_option("--tol", dim_tol, "estimate tolerance");
  dim_target->add_option("--max-terms", dim_max_terms, "term budget");
  dim_target->add_option("-o,--out", dim_out, "schedule file (default stdout)");
  dim_target->add_option("--trace", dim_trace_out, "trace table file (default stdout)");

  // ---- core ----
  auto* core_cmd = app.add_subcommand("core", "minimal labyrinth sub-pattern");
  std::string core_in = "-", core_out;
  core_cmd->add_option("input", core_in, "pattern file or - for stdin");
  core_cmd->add_option("-o,--out", core_out, "output file (default stdout)");

  // ---- render ----
  auto* render_cmd = app.add_subcommand("render", "emit an SVG image");
  std::string render_in, render_out, render_path;
  bool render_arms = false, render_grid = false;
  int render_cell_px = 8;
  render_cmd->add_option("--in", render_in, "pattern file or - for stdin")->required();
  render_cmd->add_option("--out", render_out, "SVG file (default stdout)");
  render_cmd->add_option("--path", render_path, "highlight exit path, e.g. top:bottom");
  render_cmd->add_flag("--arms", render_arms, "color the four arms and the center");
  render_cmd->add_flag("--grid", render_grid, "draw cell grid lines");
  render_cmd->add_option("--cell-px", render_cell_px, "pixels per cell");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    const std::int64_t cap = max_width_from_env();

    if (gen_snake->parsed()) {
      emit(gen_out, laby::write_pattern(laby::snake_cross(
                        gen_k, gen_left ? laby::Chirality::Left : laby::Chirality::Right)));
      return kOk;
    }
    if (gen_cross->parsed()) {
      emit(gen_out, laby::write_pattern(laby::plain_cross(gen_k)));
      return kOk;
    }

    if (val->parsed()) {
      const laby::ValidationReport rep = laby::validate(load_pattern(val_in));
      std::cout << (val_machine ? rep.to_kv() : rep.to_text());
      return rep.is_labyrinth() ? kOk : kValidationFailed;
    }

    if (comp->parsed()) {
      emit(comp_out, laby::write_pattern(load_composed(comp_in, cap)));
      return kOk;
    }

    if (path_cmd->parsed() || oracle_cmd->parsed()) {
      const laby::Side from = laby::parse_side(path_from);
      const laby::Side to = laby::parse_side(path_to);
      if (from == to) throw laby::BadParameter("--from and --to must differ");
      const laby::Pattern p = load_composed(path_in, cap);
      const laby::ExitSet exits = laby::exit_set(p);
      const laby::TreePath path = laby::tree_path(p, exits.by_side(from), exits.by_side(to));
      if (oracle_cmd->parsed()) {
        const std::int64_t oracle = laby::bfs_oracle(p, exits.by_side(from), exits.by_side(to));
        std::cout << "tree_path " << path.length() << "\noracle " << oracle << "\n";
        if (oracle != path.length()) {
          std::cerr << "oracle mismatch\n";
          return kValidationFailed;
        }
        return kOk;
      }
      std::cout << path.length() << "\n";
      if (path_cells)
        for (const laby::CellAddr& c : path.squares)
          std::cout << c.col << " " << c.row << "\n";
      return kOk;
    }

    if (dim_quot->parsed()) {
      std::cout << laby::format_g12(laby::dim_quotient(dim_k)) << "\n";
      return kOk;
    }
    if (dim_est->parsed()) {
      const auto terms = laby::read_schedule(slurp(dim_sched_file));
      std::cout << laby::format_g12(laby::schedule_estimate(terms)) << "\n";
      return kOk;
    }
    if (dim_target->parsed()) {
      const laby::Schedule sch = laby::target_dimension(dim_delta, dim_tol, dim_max_terms);
      emit(dim_out, laby::write_schedule(sch));
      emit(dim_trace_out, laby::write_trace(sch));
      if (!sch.converged) {
        std::cerr << "tolerance not reached: " << sch.diagnostic << "\n";
        return kValidationFailed;
      }
      return kOk;
    }

    if (core_cmd->parsed()) {
      emit(core_out, laby::write_pattern(laby::core(load_pattern(core_in))));
      return kOk;
    }

    if (render_cmd->parsed()) {
      const laby::Pattern p = load_pattern(render_in);
      laby::RenderSpec spec;
      spec.cell_px = render_cell_px;
      spec.color_arms = render_arms;
      spec.grid_lines = render_grid;
      laby::TreePath overlay;
      if (!render_path.empty()) {
        const std::size_t colon = render_path.find(':');
        if (colon == std::string::npos)
          throw laby::BadParameter("--path wants the form from:to, e.g. top:bottom");
        const laby::ExitSet exits = laby::exit_set(p);
        overlay = laby::tree_path(p, exits.by_side(laby::parse_side(render_path.substr(0, colon))),
                                  exits.by_side(laby::parse_side(render_path.substr(colon + 1))));
        spec.overlay = &overlay;
      }
      emit(render_out, laby::render_pattern(p, spec));
      return kOk;
    }

    std::cerr << "no subcommand\n";
    return kUsageError;
  } catch (const laby::TooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const laby::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const laby::NotLabyrinth& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidationFailed;
  } catch (const laby::NotTree& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidationFailed;
  } catch (const laby::Unreachable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidationFailed;
  } catch (const laby::MissingExits& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidationFailed;
  } catch (const laby::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
}
