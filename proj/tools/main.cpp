#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "frey13/pipeline.hpp"

int main(int argc, char** argv) {
  CLI::App app{"frey13: verification pipeline for the degree-13 elimination"};
  app.require_subcommand(1);

  frey13::PipelineOptions opt;
  std::string format = "text";
  bool timings = false;

  app.add_option("--data-dir", opt.data_dir,
                 "directory holding the eigenvalue and factor tables")
      ->capture_default_str();
  app.add_option("--workers", opt.workers, "worker threads for the trace enumeration")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_flag("--timings", timings, "attach wall-clock stage timings to the report");
  app.add_option("--lift-modulus", opt.lift_modulus,
                 "largest lift grid modulus for the trace enumeration "
                 "(0 = default policy)")
      ->check(CLI::NonNegativeNumber);

  auto* algebra =
      app.add_subcommand("algebra", "cyclotomic factorization and scalar identities");
  auto* family =
      app.add_subcommand("family", "curve family coefficients and their descent");
  auto* conductors =
      app.add_subcommand("conductors", "reduction types at the primes over 2 and 13");
  auto* traces =
      app.add_subcommand("traces", "Frobenius trace sets at the eleven odd primes");
  traces->add_option("--d", opt.d,
                     "restrict parameters to d | a+b (d | a^2+b^2 with --squares)")
      ->check(CLI::IsMember({3, 5, 7, 11}));
  traces->add_flag("--squares", opt.squares,
                   "enumerate the squares subfamily E(a^2, b^2)");
  auto* eliminate = app.add_subcommand(
      "eliminate", "sieve the eigenvalue table against the trace sets");
  eliminate
      ->add_option("--part", opt.part,
                   "run only one half: I (plain sieve) or II (squares sieve)")
      ->check(CLI::IsMember({"I", "II"}));
  eliminate
      ->add_option("--d", opt.d,
                   "restrict the constrained pass of part I to a single d")
      ->check(CLI::IsMember({3, 5, 7, 11}));
  auto* bound =
      app.add_subcommand("bound", "irreducibility and nonrational-eigenvalue bounds");
  auto* all = app.add_subcommand("all", "every stage plus the final verdict");
  // let the global options appear after the subcommand name too
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  frey13::Report rep;
  rep.set_timings_enabled(timings);

  if (algebra->parsed())
    frey13::run_algebra(rep);
  else if (family->parsed())
    frey13::run_family(rep);
  else if (conductors->parsed())
    frey13::run_conductors(rep);
  else if (traces->parsed())
    frey13::run_traces(rep, opt);
  else if (eliminate->parsed())
    frey13::run_eliminate(rep, opt);
  else if (bound->parsed())
    frey13::run_bound(rep, opt);
  else if (all->parsed())
    frey13::run_all(rep, opt);

  if (format == "json")
    std::cout << rep.to_json().dump(2) << "\n";
  else
    std::cout << rep.to_text();

  if (all->parsed()) return frey13::verdict_clean(rep) ? 0 : 1;
  return rep.all_ok() ? 0 : 1;
}
