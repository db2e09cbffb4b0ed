#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <particat/cli.hpp>

int main(int argc, char** argv) {
  using namespace particat;
  cli::Command cmd;
  bool pretty = false;
  bool json = false;
  std::string config;
  unsigned n_value = 0;
  std::size_t max_points = 0, power = 0;

  CLI::App app{"particat: representation theory of easy quantum groups from categories of partitions"};
  app.require_subcommand(1);
  app.add_flag("--pretty", pretty, "indented JSON");
  app.add_flag("--json", json, "compact JSON (default)");
  app.add_option("--config", config, "JSON file overriding size caps");
  app.add_flag("--timing", cmd.timing, "record elapsed_ms (output is then not byte-stable)");

  auto common = [&](CLI::App* sub, bool with_category = true) {
    if (with_category) sub->add_option("--category", cmd.category, "p, p2, nc, nc2, ncb, nceven, ucol or gen:<file>");
    sub->add_option("--N", n_value, "matrix dimension N");
    sub->add_option("--max-points", max_points, "closure bound for gen: categories, or suite size");
    sub->add_flag("--pretty", pretty, "indented JSON");
    sub->add_flag("--json", json, "compact JSON (default)");
    sub->add_option("--config", config, "JSON file overriding size caps");
    sub->add_flag("--timing", cmd.timing, "record elapsed_ms");
  };

  auto* fuse = app.add_subcommand("fuse", "fusion of two projective partitions or labels");
  common(fuse);
  fuse->add_option("--left", cmd.left, "partition or label")->required();
  fuse->add_option("--right", cmd.right, "partition or label")->required();

  auto* decompose = app.add_subcommand("decompose", "classes of projectives in C(k,k), with ranks when --N is given");
  common(decompose);
  decompose->add_option("--power", power, "tensor power k")->required();

  auto* member = app.add_subcommand("member", "membership of a partition");
  common(member);
  member->add_option("--partition", cmd.partition)->required();

  auto* sym = app.add_subcommand("sym", "symmetry group Sym(p) of a projective partition");
  common(sym);
  sym->add_option("--partition", cmd.partition)->required();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  common(verify, false);
  verify->add_option("--suite", cmd.suite, "functor, structure, categories, fusion or all");

  auto* brauer = app.add_subcommand("brauer", "rank and kernel dimension of span{T_p : p in C(k,k)}");
  common(brauer);
  brauer->add_option("--power", power, "k")->required();

  auto* table = app.add_subcommand("table", "labelled fusion table checked against partition-level fusion");
  common(table);
  table->add_option("--max-label", cmd.max_label, "largest label, or word length");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::parse_error;
  }
  for (auto* sub : app.get_subcommands()) cmd.name = sub->get_name();
  if (n_value) cmd.N = n_value;
  if (max_points) cmd.max_points = max_points;
  if (power || cmd.name == "decompose" || cmd.name == "brauer") cmd.power = power;

  if (!config.empty()) {
    try {
      for (const auto& w : cli::apply_config(config, cmd.limits)) std::cerr << "warning: " << w << "\n";
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return cli::parse_error;
    }
  }

  const auto out = cli::run(cmd);
  std::cout << (pretty ? out.document.dump(2) : out.document.dump()) << "\n";
  if (out.document.contains("error")) std::cerr << "error: " << out.document["error"]["message"].get<std::string>() << "\n";
  return out.exit_code;
}
