#include "multideg/io.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace multideg;

namespace {

struct Flags {
  std::string input = "-";
  std::string method;
  std::optional<std::size_t> pivot;
  bool force = false;
  bool symbolic = false;
  bool dump = false;
  bool text = false;
  bool json = false;
  std::optional<std::uint64_t> seed;
  bool timing = false;
};

void add_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("-i,--input", f.input, "input JSON file, or - for stdin");
  cmd->add_option("--method", f.method, "triangulation | charpoly | prechar | all")
      ->check(CLI::IsMember({"triangulation", "charpoly", "prechar", "all"}));
  cmd->add_option("--pivot", f.pivot, "pivot row (1-based)");
  cmd->add_flag("--force", f.force, "run the characteristic-polynomial routes on any square map");
  cmd->add_flag("--symbolic", f.symbolic, "include the unsubstituted integral");
  cmd->add_flag("--dump-triangulation", f.dump, "list the simplices of the triangulation");
  auto* text = cmd->add_flag("--text", f.text, "human-readable output");
  auto* json = cmd->add_flag("--json", f.json, "JSON output (default)");
  text->excludes(json);
  cmd->add_option("--seed", f.seed, "seed for sampled identity checks");
  cmd->add_flag("--timing", f.timing, "include wall-clock timings (output is no longer byte-stable)");
}

int emit(const io::RunResult& r) {
  std::cout << r.output;
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multidegrees of rational maps defined by monomials in hypersurface equations"};
  app.require_subcommand(1);
  Flags flags;
  for (const char* name : {"compute", "check-wp", "homogenize", "segre", "symbolic"}) {
    add_flags(app.add_subcommand(name), flags);
  }
  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().front()->get_name();

  io::RunOptions options;
  options.format = flags.text ? io::OutputFormat::Text : io::OutputFormat::Json;
  options.timing = flags.timing;

  try {
    io::ProblemInput in = io::parse_input_file(flags.input);
    if (!flags.method.empty()) in.method = io::parse_method(flags.method);
    if (flags.pivot) {
      std::size_t rows = in.rows ? in.rows->size() : in.torus->size() + 1;
      if (*flags.pivot < 1 || *flags.pivot > rows) {
        throw ValidationError("--pivot " + std::to_string(*flags.pivot) + " out of range 1.." +
                              std::to_string(rows));
      }
      in.pivot = *flags.pivot - 1;
    }
    in.force = in.force || flags.force;
    in.symbolic = in.symbolic || flags.symbolic;
    in.dump_triangulation = in.dump_triangulation || flags.dump;
    if (flags.seed) in.seed = *flags.seed;
    int code = emit(io::run(command, in, options));
    if (code != 0) std::cerr << "multideg: " << command << " failed (exit " << code << ")\n";
    return code;
  } catch (const Error& e) {
    std::cout << io::error_envelope(e).dump(2) << "\n";
    std::cerr << "multideg: " << e.what() << "\n";
    return io::exit_code_for(e.kind());
  }
}
