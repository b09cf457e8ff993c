// sextic: command-line front end; JSON on stdin / --input, or built from flags.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sextic/cli/cli.hpp"

namespace {

using nlohmann::json;
namespace cli = sextic::cli;

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

struct Flags {
  std::string input;
  std::string rosenhain;
  std::string igusa;
  std::string siegel;
  std::string absolute;
  std::string power_sums;
  std::string sextic;
  std::string params;
  std::string tau;
  std::string model;
  double tol = 1e-8;
  int theta_radius = 12;
  std::string out;
  bool pretty = false;
  bool table = false;
};

void add_flags(CLI::App* sub, Flags& f) {
  sub->add_option("--input", f.input, "JSON input file ('-' for stdin)");
  sub->add_option("--rosenhain", f.rosenhain, "lambda1,lambda2,lambda3");
  sub->add_option("--igusa", f.igusa, "I2,I4,I6,I10");
  sub->add_option("--siegel", f.siegel, "psi4,psi6,chi10,chi12");
  sub->add_option("--absolute", f.absolute, "j1,j2,j3");
  sub->add_option("--power-sums", f.power_sums, "s1,...,s6");
  sub->add_option("--sextic", f.sextic, "coefficients, lowest degree first");
  sub->add_option("--params", f.params, "fibration parameters a,b,c,d,e");
  sub->add_option("--tau", f.tau, "re1,im1,rez,imz,re2,im2");
  sub->add_option("--model", f.model, "kummer1|kummer23|alternate|alternate-ftheory|standard");
  sub->add_option("--tol", f.tol, "tolerance");
  sub->add_option("--theta-radius", f.theta_radius, "theta series truncation radius");
  sub->add_option("--out", f.out, "write the JSON result to this file");
  sub->add_flag("--pretty", f.pretty, "indent the JSON output");
  sub->add_flag("--table", f.table, "print path/value lines instead of JSON");
}

json from_flags(const Flags& f) {
  json doc = json::object();
  const auto list = [&](const char* key, const std::string& v) {
    if (!v.empty()) doc[key] = split(v);
  };
  list("rosenhain", f.rosenhain);
  list("igusa", f.igusa);
  list("siegel", f.siegel);
  list("absolute", f.absolute);
  list("power_sums", f.power_sums);
  list("sextic", f.sextic);
  list("fibration_params", f.params);
  if (!f.model.empty()) doc["model"] = f.model;
  if (!f.tau.empty()) {
    json t = json::array();
    for (const auto& s : split(f.tau)) t.push_back(std::stod(s));
    doc["tau"] = t;
  }
  return doc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genus-two curves, Satake sextics and K3 fibrations"};
  app.require_subcommand(1);
  Flags flags;
  std::vector<std::pair<CLI::App*, cli::Command>> subs;
  for (const char* name : {"igusa", "satake-sextic", "phi", "fibration", "roundtrip", "theta", "predicates"}) {
    auto* sub = app.add_subcommand(name);
    add_flags(sub, flags);
    subs.emplace_back(sub, *cli::parse_command(name));
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitSchema;
  }

  cli::JobSpec job;
  for (const auto& [sub, cmd] : subs)
    if (sub->parsed()) job.command = cmd;
  job.options.tol = flags.tol;
  job.options.theta_radius = flags.theta_radius;
  if (!flags.out.empty()) job.options.out = flags.out;

  try {
    job.input = from_flags(flags);
    if (!flags.input.empty() || job.input.empty()) {
      std::string text;
      if (flags.input.empty() || flags.input == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
      } else {
        std::ifstream in(flags.input);
        if (!in) throw std::runtime_error("cannot read " + flags.input);
        text.assign(std::istreambuf_iterator<char>(in), {});
      }
      json parsed = json::parse(text);
      if (parsed.is_object())
        for (auto& [k, v] : job.input.items()) parsed[k] = v;
      job.input = std::move(parsed);
    }
  } catch (const std::exception& e) {
    json err{{"status", "error"}, {"kind", "schema"}, {"message", e.what()}, {"pointer", ""}};
    std::cout << cli::dump(err) << '\n';
    return cli::kExitSchema;
  }

  const cli::JobResult result = cli::run(job);
  const std::string text = flags.table ? cli::table(result.output) : cli::dump(result.output, flags.pretty ? 2 : -1) + "\n";
  if (job.options.out) {
    std::ofstream os(*job.options.out);
    if (!os) {
      std::cerr << "cannot write " << *job.options.out << '\n';
      return cli::kExitSchema;
    }
    os << text;
  } else {
    std::cout << text;
  }
  return result.exit_code;
}
