#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "akbk/driver.hpp"

namespace {

int write_output(const akbk::ReportEnvelope& env) {
  const akbk::RunPlan& plan = env.plan;
  const std::string text = plan.format == akbk::OutputFormat::Json
                               ? akbk::render_json(env, !plan.canonical_only)
                               : akbk::render_csv(env);
  if (plan.out_path) {
    std::ofstream out(*plan.out_path, std::ios::binary | std::ios::trunc);
    if (!out) {
      std::cerr << "akbk: cannot open output file '" << *plan.out_path << "'\n";
      return 1;
    }
    out << text;
  } else {
    std::cout << text;
  }
  for (const akbk::Finding& f : env.findings) {
    std::cerr << "finding[" << f.kind << "] " << f.subject << ": " << f.detail << "\n";
  }
  return akbk::exit_status(env);
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (!args.empty() && (args[0] == "--help" || args[0] == "-h" || args[0] == "help")) {
    std::cout << akbk::usage_text();
    return 0;
  }

  akbk::RunPlan plan;
  try {
    plan = akbk::parse_plan(args);
  } catch (const akbk::UsageError& e) {
    std::cerr << "akbk: " << e.what() << "\n\n" << akbk::usage_text();
    return 1;
  }

  try {
    return write_output(akbk::execute(plan));
  } catch (const akbk::UsageError& e) {
    std::cerr << "akbk: " << e.what() << "\n";
    return 1;
  } catch (const akbk::LemmaFalsification& e) {
    std::cerr << "akbk: " << e.what() << "\n";
    return 2;
  } catch (const akbk::CeilingExceeded& e) {
    std::cerr << "akbk: " << e.what() << "\n";
    return 3;
  }
}
