#include <iostream>

#include "CLI11.hpp"

#include "intspec/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Pedestal matrices of finite posets and their spectra"};
  app.require_subcommand(1);
  intspec::RunConfig config;

  auto add_source = [&](CLI::App* sub) {
    sub->add_option("--partition", config.partition, "partition shape, e.g. 3,2,1");
    sub->add_option("--covers", config.covers, "poset JSON file {\"names\": [...], \"covers\": [[a,b],...]}");
    sub->add_option("--box", config.box, "chain product, e.g. 2x2x2");
    sub->add_option("--format", config.format, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--cap", config.cap, "maximum number of linear extensions");
  };

  auto* ext = app.add_subcommand("extensions", "list the linear extensions");
  add_source(ext);
  auto* matrix = app.add_subcommand("matrix", "print the pedestal matrix");
  add_source(matrix);
  matrix->add_option("--view", config.view, "symbolic | monomial")->check(CLI::IsMember({"symbolic", "monomial"}));
  auto* eigen = app.add_subcommand("eigen", "eigenvalues as linear forms in the a_eps");
  add_source(eigen);
  eigen->add_option("--jordan", config.jordan, "specialization such as 00=5,01=1,10=-2; reports Jordan data");
  auto* verify = app.add_subcommand("verify", "run every check on one poset");
  add_source(verify);
  verify->add_option("--seed", config.seed, "seed for random specializations and samples");
  verify->add_option("--draws", config.draws, "number of random specializations");
  verify->add_option("--tmax", config.tmax, "series truncation");
  auto* genfun = app.add_subcommand("genfun", "generating function of monotone maps");
  add_source(genfun);
  genfun->add_option("--tmax", config.tmax, "series truncation");
  auto* count = app.add_subcommand("count-posets", "number of labeled posets on n elements");
  count->add_option("n", config.count_n, "number of elements (0..5)")->required();
  count->add_option("--format", config.format, "text | json")->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);
  config.command = app.get_subcommands().front()->get_name();
  return intspec::run(config, std::cout, std::cerr);
}
