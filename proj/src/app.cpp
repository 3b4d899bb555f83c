#include "monoalg/app.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "monoalg/input.hpp"
#include "monoalg/report.hpp"

namespace monoalg {

namespace {

struct Options {
  bool json_output = false;
  bool verify = false;
  bool verbose = false;
  std::uint64_t characteristic = 0;
  int t_max = 6;
  std::string input;
};

std::string slurp(std::istream& in) {
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Loaded {
  InputDocument doc;
  AffineSemigroup semigroup;
};

Loaded load(const Options& opt, std::istream& in) {
  std::string text;
  if (opt.input.empty() || opt.input == "-") {
    text = slurp(in);
  } else {
    std::ifstream f(opt.input, std::ios::binary);
    if (!f) throw Error(ErrorKind::Usage, "cannot open input file '" + opt.input + "'");
    text = slurp(f);
  }
  InputDocument doc = parse_input(text);
  AffineSemigroup b = AffineSemigroup::validate(doc.generators);
  return {std::move(doc), std::move(b)};
}

void with_name(json& j, const InputDocument& doc) {
  if (doc.name) j["name"] = *doc.name;
}

int execute(const std::string& command, const Options& opt, const SweepConfig& sweep_cfg,
            std::istream& in, std::ostream& out, std::ostream& err) {
  const Characteristic ch = Characteristic::of(opt.characteristic);
  if (opt.t_max < 0) throw Error(ErrorKind::Usage, "--tmax must not be negative");

  if (command == "sweep") {
    SweepConfig cfg = sweep_cfg;
    cfg.characteristic = ch;
    const auto summary = sweep(cfg, default_thread_count());
    out << (opt.json_output ? canonical_dump(sweep_json(summary)) : sweep_text(summary));
    return 0;
  }

  const auto [doc, b] = load(opt, in);
  const Decomposition d = decompose(b);

  std::optional<VerificationReport> verification;
  if (opt.verify) {
    verification = verify(b, d, ch, opt.t_max);
    if (!verification->ok()) err << "warning: verification failed\n";
  }

  json j;
  std::string text;
  if (command == "decompose") {
    j = decomposition_json(b, d, opt.verbose);
    text = decomposition_text(b, d, opt.verbose);
  } else if (command == "props") {
    const auto p = full_report(b, d);
    j = properties_json(p);
    text = properties_text(p);
  } else if (command == "reg") {
    const auto r = analyze(b, d, ch);
    j = regularity_json(r, ch);
    text = regularity_text(r, ch);
  } else if (command == "eg") {
    const auto r = analyze(b, d, ch);
    j = eg_json(r);
    text = eg_text(r);
  } else {  // analyze
    const auto p = full_report(b, d);
    j = {{"decomposition", decomposition_json(b, d, opt.verbose)},
         {"properties", properties_json(p)}};
    text = decomposition_text(b, d, opt.verbose) + properties_text(p);
    try {
      const auto r = analyze(b, d, ch);
      j["regularity"] = regularity_json(r, ch);
      text += regularity_text(r, ch);
    } catch (const Error& e) {
      if (!is_precondition(e.kind())) throw;
      j["regularity"] = error_json(e);
      text += "regularity: unavailable (" + std::string(to_string(e.kind())) + ": " + e.what() + ")\n";
    }
  }
  if (verification) {
    j["verification"] = verification_json(*verification);
    text += verification_text(*verification);
  }
  if (command != "eg") with_name(j, doc);
  out << (opt.json_output ? canonical_dump(j) : text);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decompose affine semigroup rings and test their ring properties", "monoalg"};
  app.require_subcommand(1);

  Options opt;
  SweepConfig sweep_cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", opt.json_output, "Emit canonical JSON");
    sub->add_option("--char", opt.characteristic, "Field characteristic (0 or a prime)");
    sub->add_option("--tmax", opt.t_max, "Hilbert function check depth for --verify");
    sub->add_flag("--verify", opt.verify, "Cross-check the decomposition and Betti numbers");
    sub->add_flag("--verbose", opt.verbose, "Include lambda-coordinates");
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input,input", opt.input, "Input file (default: stdin)");
  };

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"decompose", "Direct sum decomposition over the frame ring"},
      {"props", "Seminormal, normal, Cohen-Macaulay, Buchsbaum, Gorenstein"},
      {"reg", "Regularity, degree, codimension and depth"},
      {"eg", "Eisenbud-Goto bound check"},
      {"analyze", "Everything above"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub);
    add_input(sub);
  }
  auto* sw = app.add_subcommand("sweep", "Seeded random sweep of homogeneous simplicial semigroups");
  add_common(sw);
  sw->add_option("--dim", sweep_cfg.ambient_dim, "Ambient dimension");
  sw->add_option("--gens", sweep_cfg.num_generators, "Generators per instance, frame included");
  sw->add_option("--max-entry,--degree", sweep_cfg.max_entry, "Common degree D of all generators");
  sw->add_option("--count", sweep_cfg.count, "Number of instances");
  sw->add_option("--seed", sweep_cfg.seed, "RNG seed");
  sw->add_option("--sweep-tmax", sweep_cfg.t_max, "Hilbert function check depth per instance");

  std::vector<std::string> rest(args.rbegin(), args.rend());
  if (!rest.empty()) rest.pop_back();  // program name
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "monoalg: " << e.what() << "\n";
    return 1;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return execute(command, opt, sweep_cfg, in, out, err);
  } catch (const Error& e) {
    const int code = is_precondition(e.kind()) ? 2 : 1;
    if (opt.json_output) out << canonical_dump(error_json(e));
    err << "monoalg: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return code;
  } catch (const std::exception& e) {
    err << "monoalg: internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace monoalg
