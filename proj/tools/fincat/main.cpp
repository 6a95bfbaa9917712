#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <iostream>

#include "fincat/error.hpp"
#include "fincat/suite/commands.hpp"

namespace {

struct CommandInfo {
  const char* name;
  const char* help;
};

const CommandInfo kCommands[] = {
    {"validate", "check a bundle against the laws of its kind"},
    {"limits", "limit of a finite diagram, with universality check"},
    {"colimits", "colimit of a finite diagram, with universality check"},
    {"yoneda", "Nat(Hom(A,-), F) against F(A)"},
    {"represent", "search for a representing object"},
    {"adjoint", "triangle identities and hom-set bijection"},
    {"galois", "Galois connection between two preorders"},
    {"monad", "monad laws (bundle, induced, or the power-set monad)"},
    {"coherence", "pentagon and triangle on small objects"},
    {"hopf", "Hopf algebra diagrams over F_p"},
    {"corpus", "run every criterion over the fixture corpus"},
    {"emit", "write the canonical fixtures"},
};

}  // namespace

int main(int argc, char** argv) {
  using namespace fincat::suite;
  CLI::App app{"fincat: finite category checks"};
  app.require_subcommand(1);

  CommandArgs args;
  std::string out;
  std::size_t max_size = args.max_size;

  for (const auto& info : kCommands) {
    auto* sub = app.add_subcommand(info.name, info.help);
    const std::string name = info.name;
    sub->add_option("--out", out, "also write the report to this file");
    sub->add_option("--seed", args.seed, "random seed")->capture_default_str();
    sub->add_option("--budget", args.budget, "enumeration or sampling budget");
    sub->add_flag("--timing", args.timing, "include wall-clock timings");
    if (name == "validate") {
      sub->add_option("file", args.bundle, "bundle file")->required();
    } else if (name == "limits" || name == "colimits") {
      sub->add_option("--diagram", args.diagram, "diagram bundle")->required();
    } else if (name == "yoneda" || name == "represent") {
      sub->add_option("--functor", args.functor, "set-valued functor bundle")->required();
      sub->add_option("--category", args.category, "category bundle (must match the functor's source)");
      if (name == "yoneda") sub->add_option("--object", args.object, "object index A")->required();
    } else if (name == "adjoint") {
      sub->add_option("--adjunction", args.adjunction, "adjunction bundle")->required();
    } else if (name == "galois") {
      sub->add_option("--galois", args.galois, "galois bundle")->required();
    } else if (name == "monad") {
      auto* m = sub->add_option("--monad", args.monad, "monad bundle");
      sub->add_option("--adjunction", args.adjunction, "use the monad induced by this adjunction")->excludes(m);
      sub->add_option("--max-size", max_size, "power-set exhaustive bound (at most 2)");
    } else if (name == "coherence") {
      sub->add_option("--structure", args.structure, "cartesian, cocartesian or finvect")
          ->check(CLI::IsMember({"cartesian", "cocartesian", "finvect"}));
      sub->add_option("--modulus", args.modulus, "prime for finvect");
      sub->add_option("--max-size", max_size, "largest object size");
    } else if (name == "hopf") {
      auto* g = sub->add_option("--group", args.group, "group bundle");
      sub->add_option("--algebra", args.algebra, "algebra bundle")->excludes(g);
      sub->add_option("--modulus", args.modulus, "prime field for --group");
    } else if (name == "corpus" || name == "emit") {
      sub->add_option("--fixtures", args.fixtures, "fixture directory (default $FINCAT_FIXTURES or ./fixtures)");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputErrorStatus;
  }
  args.max_size = max_size;

  const std::string command = app.get_subcommands().front()->get_name();
  std::string text;
  int status = 0;
  try {
    Report r = run_command(command, args);
    text = r.dump();
    status = exit_status(r);
  } catch (const std::exception& e) {
    std::cerr << "fincat " << command << ": " << e.what() << "\n";
    text = error_document(command, e);
    status = kInputErrorStatus;
  }
  std::cout << text;
  if (!out.empty()) {
    std::ofstream f(out, std::ios::binary);
    f << text;
    if (!f) {
      std::cerr << fmt::format("fincat: cannot write {}\n", out);
      return kInputErrorStatus;
    }
  }
  return status;
}
