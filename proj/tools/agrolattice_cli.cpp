#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "agrolattice/commands.hpp"
#include "agrolattice/errors.hpp"
#include "agrolattice/io.hpp"

namespace {

struct RawOptions {
  std::string input;
  std::string format = "wide-csv";
  std::string axes;
  std::string min_support = "0";
  std::string min_confidence = "0";
  std::string denominator = "locations";
  std::string orientation = "by_time";
  std::string out;
  std::string emit;
  std::string to;
  bool artificial_bounds = false;
};

void add_common(CLI::App* cmd, RawOptions& o) {
  cmd->add_option("-i,--input", o.input, "Input cube file")->required();
  cmd->add_option("-f,--format", o.format, "long-csv | wide-csv | cube-json")
      ->check(CLI::IsMember({"long-csv", "wide-csv", "cube-json"}));
  cmd->add_option("--axes", o.axes, "Axis declaration JSON (locations, dimensions, timestamps)");
  cmd->add_option("--orientation", o.orientation, "by_time | by_dimension")
      ->check(CLI::IsMember({"by_time", "by_dimension"}));
  cmd->add_option("-o,--out", o.out, "Output file (stdout when omitted)");
}

void add_rule_options(CLI::App* cmd, RawOptions& o) {
  cmd->add_option("--min-support", o.min_support, "Minimum support, decimal or p/q");
  cmd->add_option("--min-confidence", o.min_confidence, "Minimum confidence, decimal or p/q");
  cmd->add_option("--support-denominator", o.denominator, "locations | dimensions")
      ->check(CLI::IsMember({"locations", "dimensions"}));
}

agro::RunConfig to_config(const RawOptions& o, agro::Emit emit) {
  agro::RunConfig cfg;
  cfg.input = o.input;
  cfg.format = agro::parse_format(o.format);
  if (!o.axes.empty()) cfg.axes = o.axes;
  cfg.min_support = agro::Ratio::parse(o.min_support);
  cfg.min_confidence = agro::Ratio::parse(o.min_confidence);
  cfg.support_denominator = agro::parse_denominator(o.denominator);
  cfg.orientation = agro::parse_orientation(o.orientation);
  cfg.artificial_bounds = o.artificial_bounds;
  if (!o.out.empty()) cfg.out = o.out;
  cfg.emit = emit;
  return cfg;
}

void deliver(const agro::RunConfig& cfg, const std::string& text) {
  if (cfg.out)
    agro::write_file_atomic(*cfg.out, text);
  else
    std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mine closed spatio-temporal triples, their lattice and temporal rules from a Boolean data cube"};
  app.require_subcommand(1);
  RawOptions o;

  auto* triples = app.add_subcommand("mine-triples", "List every closed (locations, dimensions, timestamps) triple");
  add_common(triples, o);

  auto* lattice = app.add_subcommand("build-lattice", "Order the triples and emit the Hasse diagram");
  add_common(lattice, o);
  o.emit = "lattice-dot";
  lattice->add_option("--emit", o.emit, "lattice-dot | lattice-json")
      ->check(CLI::IsMember({"lattice-dot", "lattice-json"}));
  lattice->add_flag("--artificial-bounds", o.artificial_bounds, "Add artificial top and bottom nodes");

  auto* rules = app.add_subcommand("mine-rules", "Generate temporal association rules as CSV");
  add_common(rules, o);
  add_rule_options(rules, o);

  auto* conformance = app.add_subcommand("conformance", "Compare mined results against the bundled toy reference");
  add_common(conformance, o);

  auto* run = app.add_subcommand("run", "Run the pipeline and emit one artifact");
  add_common(run, o);
  add_rule_options(run, o);
  run->add_option("--emit", o.emit, "triples | lattice-dot | lattice-json | rules | conformance")
      ->required()
      ->check(CLI::IsMember({"triples", "lattice-dot", "lattice-json", "rules", "conformance"}));
  run->add_flag("--artificial-bounds", o.artificial_bounds, "Add artificial top and bottom nodes");

  auto* convert = app.add_subcommand("convert", "Re-serialize a cube in another input format");
  add_common(convert, o);
  convert->add_option("--to", o.to, "long-csv | wide-csv | cube-json")
      ->required()
      ->check(CLI::IsMember({"long-csv", "wide-csv", "cube-json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (convert->parsed()) {
      agro::RunConfig cfg = to_config(o, agro::Emit::triples);
      deliver(cfg, agro::export_cube(agro::load_cube(cfg), agro::parse_format(o.to)));
      return 0;
    }
    agro::Emit emit = agro::Emit::triples;
    if (lattice->parsed()) emit = agro::parse_emit(o.emit);
    if (rules->parsed()) emit = agro::Emit::rules;
    if (conformance->parsed()) emit = agro::Emit::conformance;
    if (run->parsed()) emit = agro::parse_emit(o.emit);
    const agro::RunConfig cfg = to_config(o, emit);
    deliver(cfg, agro::run(cfg));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
