// igcob: command-line front end for execution, cobordisms and the checkers.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "igcob/campaigns.hpp"
#include "igcob/errors.hpp"
#include "igcob/execution.hpp"
#include "igcob/functor_bridge.hpp"
#include "igcob/text_format.hpp"

namespace {

using namespace igcob;

enum Exit : int { kOk = 0, kViolation = 1, kInputError = 2, kInfinite = 3 };

// Graph blocks of all files in order; a single file may hold both operands.
std::vector<GraphBlock> graph_blocks(const std::vector<std::string>& files) {
  std::vector<GraphBlock> out;
  for (const auto& f : files) {
    auto doc = read_document(f);
    for (auto& g : doc.graphs) out.push_back(std::move(g));
  }
  return out;
}

std::vector<CobBlock> cob_blocks(const std::vector<std::string>& files) {
  std::vector<CobBlock> out;
  for (const auto& f : files) {
    auto doc = read_document(f);
    for (auto& c : doc.cobs) out.push_back(std::move(c));
  }
  return out;
}

std::pair<GraphBlock, GraphBlock> two_graphs(const std::vector<std::string>& files) {
  auto blocks = graph_blocks(files);
  if (blocks.size() != 2) {
    throw PreconditionViolation("expected exactly two graphs, found " + std::to_string(blocks.size()));
  }
  return {std::move(blocks[0]), std::move(blocks[1])};
}

bool is_bimodular(const GraphBlock& b) {
  return !b.groups.empty() || !b.left_actions.empty() || !b.right_actions.empty();
}

Orientation parse_mode(const std::string& s) {
  return s == "unoriented" ? Orientation::Unoriented : Orientation::Directed;
}

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : " ") + x;
  return out;
}

struct ExecuteArgs {
  std::vector<std::string> files;
  std::string measure;
  bool dot = false;
};

int cmd_execute(const ExecuteArgs& a) {
  const auto [gb, hb] = two_graphs(a.files);
  if (is_bimodular(gb) || is_bimodular(hb)) {
    const auto out = bimod_execute(gb.to_bimodular(), hb.to_bimodular());
    std::cout << (a.dot ? to_dot("result", out.graph()) : format_bimodular("result", out));
    return kOk;
  }
  const Graph g = gb.to_graph();
  const Graph h = hb.to_graph();
  const Graph r = execute(g, h);
  if (gb.wager || hb.wager) {
    const Project p{gb.wager.value_or(0), g};
    const Project q{hb.wager.value_or(0), h};
    const auto mode = parse_mode(a.measure.empty() ? "directed" : a.measure);
    const Project pq = project_execute(p, q, mode);
    std::cout << (a.dot ? to_dot("result", pq.graph) : format_project("result", pq));
  } else {
    std::cout << (a.dot ? to_dot("result", r) : format_graph("result", r));
  }
  if (!a.measure.empty()) std::cout << "# measure " << measure(g, h, parse_mode(a.measure)) << '\n';
  return kOk;
}

int cmd_measure(const std::vector<std::string>& files, const std::string& mode) {
  const auto [gb, hb] = two_graphs(files);
  std::cout << measure(gb.to_graph(), hb.to_graph(), parse_mode(mode)) << '\n';
  return kOk;
}

int cmd_cob_compose(const std::vector<std::string>& files) {
  const auto blocks = cob_blocks(files);
  if (blocks.empty()) throw PreconditionViolation("no cob blocks");
  Cob0Morphism acc = blocks[0].to_cob();
  for (std::size_t i = 1; i < blocks.size(); ++i) acc = cob0_compose(acc, blocks[i].to_cob());
  std::cout << format_cob("composite", acc);
  return kOk;
}

int cmd_cob_identity(const std::vector<std::string>& labels) {
  std::cout << format_cob("identity", cob0_identity(LabelSet(labels.begin(), labels.end())));
  return kOk;
}

int cmd_cob_functor(const std::vector<std::string>& files, const std::string& format) {
  const auto blocks = cob_blocks(files);
  if (blocks.empty() || blocks.size() > 2) throw PreconditionViolation("expected one or two cob blocks");
  for (const auto& b : blocks) std::cout << format_int_project("F_" + b.name, functor_bar(b.to_cob()));
  if (blocks.size() == 1) return kOk;
  const Report r = check_functoriality(blocks[0].to_cob(), blocks[1].to_cob());
  std::cout << (format == "lines" ? r.to_lines() : r.to_text());
  return r.passed() ? kOk : kViolation;
}

int cmd_dot(const std::vector<std::string>& files) {
  for (const auto& f : files) {
    const Document doc = read_document(f);
    for (const auto& g : doc.graphs) std::cout << to_dot(g.name, g.to_graph());
    for (const auto& c : doc.cobs) std::cout << to_dot(c.name, fundamental_graph(c.to_cob()).graph());
  }
  return kOk;
}

struct CheckArgs {
  std::string property;
  CampaignOptions options;
  std::string format = "text";
  std::string replay;
};

int cmd_check(const CheckArgs& a) {
  Report r;
  if (!a.replay.empty()) {
    std::ifstream in(a.replay);
    if (!in) throw PreconditionViolation("cannot open " + a.replay);
    std::ostringstream text;
    text << in.rdbuf();
    r = replay_campaign(a.property, text.str());
  } else {
    r = run_campaign(a.property, a.options);
  }
  std::cout << (a.format == "lines" ? r.to_lines() : r.to_text());
  return r.passed() ? kOk : kViolation;
}

int run(int argc, char** argv) {
  CLI::App app{"Interaction graphs, Cob0 and their verification campaigns"};
  app.require_subcommand(1);

  ExecuteArgs exec;
  auto* execute_cmd = app.add_subcommand("execute", "Execute two graphs (or bimodular graphs, or projects)");
  execute_cmd->add_option("files", exec.files, "Instance files holding the two operands")->required()->check(CLI::ExistingFile);
  execute_cmd->add_option("--measure", exec.measure, "Also print the cycle count")
      ->check(CLI::IsMember({"directed", "unoriented"}));
  execute_cmd->add_flag("--dot", exec.dot, "Emit DOT instead of the text format");

  std::vector<std::string> measure_files;
  std::string measure_mode = "directed";
  auto* measure_cmd = app.add_subcommand("measure", "Count prime alternating cycles of two graphs");
  measure_cmd->add_option("files", measure_files)->required()->check(CLI::ExistingFile);
  measure_cmd->add_option("--mode", measure_mode)->check(CLI::IsMember({"directed", "unoriented"}));

  auto* cob_cmd = app.add_subcommand("cob", "Cob0 operations");
  cob_cmd->require_subcommand(1);
  std::vector<std::string> cob_files;
  std::vector<std::string> identity_labels;
  std::string cob_format = "text";
  auto* compose_cmd = cob_cmd->add_subcommand("compose", "Compose cobordisms left to right");
  compose_cmd->add_option("files", cob_files)->required()->check(CLI::ExistingFile);
  auto* identity_cmd = cob_cmd->add_subcommand("identity", "Print the identity cobordism on the given points");
  identity_cmd->add_option("labels", identity_labels);
  auto* functor_cmd = cob_cmd->add_subcommand("functor", "Image under the extended functor; checks functoriality for a pair");
  functor_cmd->add_option("files", cob_files)->required()->check(CLI::ExistingFile);
  functor_cmd->add_option("--format", cob_format)->check(CLI::IsMember({"text", "lines"}));

  CheckArgs check;
  check.options.exhaustive_bound = 0;
  auto* check_cmd = app.add_subcommand("check", "Run a verification campaign");
  check_cmd->add_option("property", check.property)->required()->check(CLI::IsMember(campaign_names()));
  check_cmd->add_option("--trials", check.options.trials);
  check_cmd->add_option("--seed", check.options.seed);
  check_cmd->add_option("--max-vertices", check.options.max_vertices)->check(CLI::Range(1, 64));
  check_cmd->add_option("--max-edges", check.options.max_edges)->check(CLI::Range(0, 64));
  check_cmd->add_option("--exhaustive-bound", check.options.exhaustive_bound, "0 picks the property default")
      ->check(CLI::Range(0, 8));
  check_cmd->add_option("--threads", check.options.threads, "0 uses every core");
  check_cmd->add_option("--format", check.format)->check(CLI::IsMember({"text", "lines"}));
  check_cmd->add_option("--replay", check.replay, "Re-check a printed counterexample")->check(CLI::ExistingFile);

  std::vector<std::string> dot_files;
  auto* dot_cmd = app.add_subcommand("dot", "Render graphs and fundamental graphs of cobordisms as DOT");
  dot_cmd->add_option("files", dot_files)->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*execute_cmd) return cmd_execute(exec);
    if (*measure_cmd) return cmd_measure(measure_files, measure_mode);
    if (*compose_cmd) return cmd_cob_compose(cob_files);
    if (*identity_cmd) return cmd_cob_identity(identity_labels);
    if (*functor_cmd) return cmd_cob_functor(cob_files, cob_format);
    if (*check_cmd) return cmd_check(check);
    if (*dot_cmd) return cmd_dot(dot_files);
  } catch (const InfinitePathSet& e) {
    std::cerr << "error: " << e.what() << "\nwitness cycle: " << join(e.witness()) << '\n';
    return kInfinite;
  } catch (const InfiniteCycleSet& e) {
    std::cerr << "error: " << e.what() << "\nwitness cycle: " << join(e.witness()) << '\n';
    return kInfinite;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}
