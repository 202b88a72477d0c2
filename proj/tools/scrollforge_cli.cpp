// scrollforge: construct seeded witnesses for the degree-9 scroll /
// hyperelliptic-curve correspondence over a prime field, and print the
// genus-22 lattice census.

#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "scrollforge/scrollforge.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitChecksFailed = 1;
constexpr int kExitGenericity = 2;
constexpr int kExitBudget = 3;
constexpr int kExitUsage = 64;

int run_construct(const scrollforge::k3pipeline::RunConfig& cfg, const std::string& output) {
  using namespace scrollforge::k3pipeline;
  try {
    validate_stages(cfg);
    if (!scrollforge::polycore::PrimeField::is_prime(cfg.prime)) {
      std::cerr << "error: --prime must be a prime number\n";
      return kExitUsage;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    RunOutcome out = run_pipeline(cfg);
    if (output == "json")
      std::cout << out.report.to_json().dump(2) << "\n";
    else
      std::cout << out.report.to_text();
    return out.report.all_pass() ? kExitOk : kExitChecksFailed;
  } catch (const GenericityExhausted& e) {
    std::cerr << "genericity retries exhausted: " << e.what() << "\n";
    return kExitGenericity;
  } catch (const scrollforge::idealkit::BudgetError& e) {
    std::cerr << "computation budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"scrollforge: exact witnesses for nodal degree-9 scrolls over F_p"};
  app.require_subcommand(1);

  scrollforge::k3pipeline::RunConfig cfg;
  std::string output = "text";
  std::string stages_arg;

  auto* construct = app.add_subcommand("construct", "run the seeded construction pipeline");
  construct->add_option("--seed", cfg.seed, "random seed (default 1)");
  construct->add_option("--prime", cfg.prime, "prime modulus (default 32003)");
  construct->add_option("--stages", stages_arg,
                        "comma-separated stage list (scroll,octic,embed,quadrics,"
                        "reconstruct,ruling-quadric,fixtures,lattice)");
  construct->add_option("--output", output, "report format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  construct->add_option("--cache-dir", cfg.cache_dir,
                        "content-addressed ideal cache directory");
  construct->add_option("--retry-budget", cfg.retry_budget, "genericity retries per stage set");

  auto* census = app.add_subcommand("census", "print the discriminant and class census");
  std::string census_output = "text";
  census->add_option("--output", census_output, "census format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (construct->parsed()) {
    if (!stages_arg.empty()) {
      cfg.stages.clear();
      std::stringstream ss(stages_arg);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) cfg.stages.push_back(tok);
      }
    }
    if (cfg.cache_dir.empty()) {
      if (const char* env = std::getenv("SCROLLFORGE_CACHE")) cfg.cache_dir = env;
    }
    return run_construct(cfg, output);
  }
  if (census->parsed()) {
    auto c = scrollforge::hklattice::build_census();
    if (census_output == "json")
      std::cout << scrollforge::hklattice::census_json(c).dump(2) << "\n";
    else
      std::cout << scrollforge::hklattice::census_text(c);
    return kExitOk;
  }
  return kExitUsage;
}
