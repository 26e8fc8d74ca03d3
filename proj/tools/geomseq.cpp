// geomseq: generate sequences, analyze membership, run the self-test suites.
//
// Exit codes: 0 success (a "no" verdict is still success), 2 invalid input,
// 3 parameter error, 1 self-test failure.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "geomseq/geomseq.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitParam = 3;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw geomseq::ParameterError("cannot write " + path);
  out << text;
}

void add_family_options(CLI::App* cmd, geomseq::FamilySpec& f) {
  cmd->add_option("--power", f.power, "log-polynomial: log x_k = k^power");
  cmd->add_option("--c", f.c, "geometric-constant: log x_k = c");
  cmd->add_option("--order", f.order, "log-oscillatory: difference order with alternating output");
  cmd->add_option("--set", f.set, "sparse-spike index set: squares|cubes|powers2");
  cmd->add_option("--height", f.height, "sparse-spike height: unit|sqrt");
  cmd->add_option("--amplitude", f.amplitude, "sparse-spike amplitude");
  cmd->add_option("--expr", f.expr, "custom: expression in k giving log x_k");
  cmd->add_option("--dual-m", f.m, "dual-canonical: order m");
  cmd->add_option("--dual-lambda", f.lambda, "dual-canonical: builtin lambda");
}

std::uint64_t resolve_seed(std::uint64_t flag) {
  if (const char* env = std::getenv("GEOMSEQ_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw geomseq::ParameterError("GEOMSEQ_SEED is not an unsigned integer");
    }
  }
  return flag;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometric difference sequence spaces toolkit"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "write a generated sequence in log-values format");
  geomseq::FamilySpec gfam;
  std::size_t gn = 0;
  std::string gout = "-";
  gen->add_option("--family", gfam.name,
                  "log-polynomial|geometric-constant|log-oscillatory|sparse-spike|custom|dual-canonical")
      ->required();
  gen->add_option("--n", gn, "number of terms")->required();
  gen->add_option("--out", gout, "output path ('-' for stdout)");
  add_family_options(gen, gfam);

  // analyze
  auto* an = app.add_subcommand("analyze", "test membership and write a JSON report");
  std::string input, format, spaces, eps, generate_family, aout = "-";
  std::size_t an_n = 1000;
  geomseq::FamilySpec afam;
  geomseq::AnalyzeOptions opt;
  auto* in_opt = an->add_option("--input", input, "sequence file");
  auto* gen_opt = an->add_option("--generate", generate_family, "generate the input from a family");
  in_opt->excludes(gen_opt);
  an->add_option("--format", format, "raw|log (must agree with the file header)");
  an->add_option("--n", an_n, "length for --generate");
  an->add_option("--m", opt.m, "difference order");
  an->add_option("--lambda", opt.lambda, "n|const1|half|sqrt|<file>");
  an->add_option("--spaces", spaces, "comma list of spaces (default: all)");
  an->add_option("--eps", eps, "comma list of log epsilon values");
  an->add_option("--tol", opt.tol, "verdict tolerance");
  an->add_option("--tail-fraction", opt.tail_fraction, "fraction of the truncation read as its tail");
  an->add_option("--orlicz", opt.orlicz, "Orlicz function as JSON");
  an->add_option("--p", opt.p, "const:<v> or exponent file");
  an->add_option("--out", aout, "report path ('-' for stdout)");
  add_family_options(an, afam);

  // selftest
  auto* st = app.add_subcommand("selftest", "run the invariant suites");
  std::uint64_t seed = 20240611;
  st->add_option("--seed", seed, "seed for sampled suites (GEOMSEQ_SEED overrides)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParam;
  }

  try {
    if (*gen) {
      const geomseq::GeoSeq x = geomseq::generate_from_spec(gfam, gn);
      write_text(gout, geomseq::serialize(x));
      return 0;
    }

    if (*an) {
      std::optional<geomseq::GeoSeq> x;
      if (!input.empty()) {
        std::optional<geomseq::SeqFormat> fmt;
        if (format == "raw")
          fmt = geomseq::SeqFormat::raw;
        else if (format == "log")
          fmt = geomseq::SeqFormat::log;
        else if (!format.empty())
          throw geomseq::ParameterError("--format must be raw or log");
        x = geomseq::ingest_file(input, fmt);
      } else if (!generate_family.empty()) {
        afam.name = generate_family;
        x = geomseq::generate_from_spec(afam, an_n);
      } else {
        throw geomseq::ParameterError("analyze needs --input or --generate");
      }
      if (!spaces.empty() && spaces != "all") opt.spaces = split(spaces, ',');
      if (!eps.empty()) {
        opt.eps_logs.clear();
        for (const std::string& e : split(eps, ',')) opt.eps_logs.push_back(geomseq::parse_number(e, "epsilon"));
      }
      write_text(aout, geomseq::render(geomseq::run_analysis(*x, opt)));
      return 0;
    }

    if (*st) {
      const std::uint64_t s = resolve_seed(seed);
      std::cout << "seed " << s << "\n";
      bool ok = true;
      for (const geomseq::SuiteResult& r : geomseq::run_selftest(s)) {
        std::cout << (r.ok() ? "PASS " : "FAIL ") << r.name << " " << r.passed << "/" << r.total << "\n";
        for (const std::string& f : r.failures) std::cout << "  failed: " << f << "\n";
        ok = ok && r.ok();
      }
      return ok ? 0 : 1;
    }
  } catch (const geomseq::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const geomseq::Error& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return kExitParam;
  }
  return 0;
}
