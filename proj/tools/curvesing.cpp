#include <iostream>

#include "CLI11.hpp"
#include "curvesing/cli.hpp"

using curvesing::cli::JobSpec;

int main(int argc, char** argv) {
  CLI::App app{"Double points of plane curves and projections of rational normal curves"};
  app.require_subcommand(1);
  app.fallthrough();

  JobSpec job;
  app.add_flag("--json", job.json, "Print a JSON document");

  auto text_option = [&](CLI::App* sub, const std::string& name, const std::string& help) {
    return sub->add_option_function<std::string>(
        "--" + name, [&job, name](const std::string& v) { job.options[name] = v; }, help);
  };

  auto* classify = app.add_subcommand("classify", "Classify a point of a plane curve");
  text_option(classify, "curve", "Curve equation, homogeneous or affine in x, y")->required();
  text_option(classify, "point", "Projective point a,b,c (default 0,0,1)");
  text_option(classify, "vars", "Coordinate names, e.g. x,y,z");
  text_option(classify, "cap", "Maximum number of steps");
  classify->add_flag("--trace", job.trace, "Show every step");

  auto* implicit = app.add_subcommand("implicitize", "Implicit equation of a parameterized curve");
  text_option(implicit, "param", "Binary forms \"f0; f1; f2\" in s, t")->required();

  auto* analyze = app.add_subcommand("analyze-param", "Singularities of a parameterized curve from X_2");
  text_option(analyze, "param", "Binary forms \"f0; f1; f2\" in s, t")->required();
  analyze->add_flag("--classify", job.classify, "Label every singular point");

  auto* project = app.add_subcommand("project", "Project a scheme of P^n from a linear center");
  text_option(project, "n", "Dimension of the ambient space")->required();
  text_option(project, "center", "Three linear forms separated by ';'")->required();
  text_option(project, "scheme", "Ideal file, or generators separated by ';'")->required();
  text_option(project, "targets", "Target variable names (default u,v,w)");

  auto ideal_command = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    text_option(sub, "vars", "Variable names");
    text_option(sub, "ideal", "Generators separated by ';'");
    text_option(sub, "ideal-file", "File with a 'ring:' header and generators");
    return sub;
  };
  text_option(ideal_command("gb", "Reduced Groebner basis"), "order", "grevlex (default) or lex");
  text_option(ideal_command("hilbert", "Hilbert function of a homogeneous ideal"), "upto", "Last degree to list");
  text_option(ideal_command("eliminate", "Elimination ideal"), "drop", "Variables to eliminate")->required();
  auto* saturate = ideal_command("saturate", "Saturation I : J^infinity");
  text_option(saturate, "by", "Polynomial or generators of J separated by ';'");
  saturate->add_option_function<std::string>(
      "--by-ideal", [&job](const std::string& v) { job.options["by"] = v; }, "Generators of J separated by ';'");
  ideal_command("radical", "Radical of a zero-dimensional ideal");

  auto* repro = app.add_subcommand("repro", "Run a worked example and compare with its known values");
  repro->add_option("id", job.positional, "Case id");
  repro->add_flag("--list", job.list, "List the cases");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    if (job.json) {
      std::cout << nlohmann::json{{"error", e.what()}, {"kind", "input"}}.dump(2) << "\n";
    } else {
      app.exit(e);
    }
    return 2;
  }
  job.command = app.get_subcommands().front()->get_name();

  auto result = curvesing::cli::run(job);
  if (job.json) {
    std::cout << result.document.dump(2) << "\n";
  } else if (result.exit_code == 0 || job.command == "repro") {
    std::cout << result.text;
  } else {
    std::cerr << result.text;
  }
  return result.exit_code;
}
