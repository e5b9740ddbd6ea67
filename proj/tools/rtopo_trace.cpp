// rtopo-trace: replay an operation trace against a DynamicGraph.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "robust_topo/trace.hpp"
#include "robust_topo/version.hpp"

namespace {

using namespace rtopo::trace;

// Reads and parses `path`; reports errors on stderr.
bool load(const std::string& path, std::vector<TraceOp>& ops) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "rtopo-trace: cannot open " << path << '\n';
    return false;
  }
  std::ostringstream text;
  text << in.rdbuf();
  try {
    ops = parse_trace(text.str());
  } catch (const ParseError& e) {
    std::cerr << path << ':' << e.what() << '\n';
    return false;
  }
  return true;
}

int run(const std::string& path, bool dot) {
  std::vector<TraceOp> ops;
  if (!load(path, ops)) return kParseError;

  if (!dot) {
    const ReplayResult result = execute_trace(ops);
    std::cout << result.output;
    if (!result.error.empty()) std::cerr << path << ':' << result.error << '\n';
    return result.status;
  }

  Session session;
  std::string discard;
  for (const TraceOp& op : ops) {
    try {
      if (!session.apply(op, discard)) {
        std::cerr << path << ":line " << op.line << ": invariant check failed\n";
        return kInvariantFailure;
      }
    } catch (const SemanticError& e) {
      std::cerr << path << ':' << e.what() << '\n';
      return kSemanticError;
    }
  }
  std::cout << export_dot(session.graph(), session.names());
  return kOk;
}

int bench(const std::string& path) {
  std::vector<TraceOp> ops;
  if (!load(path, ops)) return kParseError;
  try {
    std::cout << format_bench(bench_compare(ops));
  } catch (const SemanticError& e) {
    std::cerr << path << ':' << e.what() << '\n';
    return kSemanticError;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Replay directed-graph traces with cycle-tolerant incremental "
               "topological ordering"};
  app.set_version_flag("--version", std::string("rtopo-trace ") +
                                        rtopo::kVersion);
  app.require_subcommand(1);

  std::string path;
  auto* run_cmd = app.add_subcommand("run", "Replay a trace and print results");
  run_cmd->add_option("trace", path, "Trace file")->required();
  auto* dot_cmd = app.add_subcommand("dot", "Replay a trace, print DOT");
  dot_cmd->add_option("trace", path, "Trace file")->required();
  auto* bench_cmd = app.add_subcommand(
      "bench", "Compare incremental replay against batch recomputation");
  bench_cmd->add_option("trace", path, "Trace file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kParseError;
  }

  if (*run_cmd) return run(path, false);
  if (*dot_cmd) return run(path, true);
  return bench(path);
}
