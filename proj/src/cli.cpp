// Copyright 2026 The umlprof Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "umlprof/cli.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "umlprof/corpus.hpp"
#include "umlprof/error.hpp"
#include "umlprof/model.hpp"
#include "umlprof/profile.hpp"
#include "umlprof/renderer.hpp"
#include "umlprof/validator.hpp"

namespace umlprof::cli {

namespace {

namespace fs = std::filesystem;

// Usage, I/O and parse failures; always maps to exit status 2.
struct Failure {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{"cannot read '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Failure{"error while reading '" + path + "'"};
  return buf.str();
}

std::string describe(const Error& e, const std::string& path) {
  return path + ": " + std::string(to_string(e.kind())) + ": " + e.what();
}

Profile load_profile(const std::string& path, std::vector<Diagnostic>& warnings) {
  const std::string text = read_file(path);
  try {
    return parse_profile(text, &warnings);
  } catch (const Error& e) {
    throw Failure{describe(e, path)};
  }
}

ProfileRegistry load_registry(const std::vector<std::string>& paths,
                              std::vector<Diagnostic>& warnings) {
  std::vector<Profile> profiles;
  for (const auto& p : paths) profiles.push_back(load_profile(p, warnings));
  return make_registry(std::move(profiles));
}

ModelDocument load_model(const std::string& path, std::vector<Diagnostic>& warnings) {
  const std::string text = read_file(path);
  try {
    return parse_model(text, &warnings);
  } catch (const Error& e) {
    throw Failure{describe(e, path)};
  }
}

void print_report(const ValidationReport& report, const std::string& format,
                  std::ostream& out) {
  out << (format == "json" ? report.to_json() : report.to_text());
}

struct Options {
  std::string model_path;
  std::string profile_path;
  std::vector<std::string> profiles;
  std::string mode = "strict";
  std::string format = "text";
  std::string diagram;
  std::string display = "textual";
  std::string directory;
  bool fail_on_warning = false;
};

int cmd_validate(const Options& o, std::ostream& out) {
  std::vector<Diagnostic> warnings;
  const ProfileRegistry registry = load_registry(o.profiles, warnings);
  const ModelDocument model = load_model(o.model_path, warnings);
  ValidationOptions opts;
  opts.stereotype_mode = *try_parse_stereotype_mode(o.mode);
  opts.fail_on_warning = o.fail_on_warning;
  ValidationReport report = check_document(model, registry, opts);
  std::vector<Diagnostic> all = std::move(report.diagnostics);
  all.insert(all.end(), warnings.begin(), warnings.end());
  sort_diagnostics(all);
  report = ValidationReport::from(std::move(all));
  print_report(report, o.format, out);
  return exit_status(report, opts);
}

int cmd_profile_lint(const Options& o, std::ostream& out) {
  std::vector<Diagnostic> diagnostics;
  const Profile profile = load_profile(o.profile_path, diagnostics);
  for (auto& d : lint_profile(profile)) diagnostics.push_back(std::move(d));
  sort_diagnostics(diagnostics);
  const ValidationReport report = ValidationReport::from(std::move(diagnostics));
  print_report(report, o.format, out);
  ValidationOptions opts;
  opts.fail_on_warning = o.fail_on_warning;
  return exit_status(report, opts);
}

int cmd_render(const Options& o, std::ostream& out) {
  std::vector<Diagnostic> warnings;
  const ProfileRegistry registry = load_registry(o.profiles, warnings);
  ModelDocument model = load_model(o.model_path, warnings);
  const ResolvedModel rm = resolve(std::move(model), registry);
  try {
    out << render_diagram(rm, o.diagram, *try_parse_display_mode(o.display));
  } catch (const Error& e) {
    throw Failure{std::string(to_string(e.kind())) + ": " + e.what()};
  }
  return kExitClean;
}

int cmd_init(const Options& o, std::ostream& out) {
  const fs::path dir(o.directory);
  const std::map<std::string, std::string> files = {
      {std::string(corpus::kProfileFile), serialize_profile(corpus::builtin_profile())},
      {std::string(corpus::kClassModelFile), serialize_model(corpus::builtin_class_model())},
      {std::string(corpus::kSequenceModelFile),
       serialize_model(corpus::builtin_sequence_model())},
  };
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw Failure{"cannot create directory '" + dir.string() + "'"};
  }
  for (const auto& [name, unused] : files) {
    if (fs::exists(dir / name)) {
      throw Failure{"refusing to overwrite existing '" + (dir / name).string() + "'"};
    }
  }
  for (const auto& [name, content] : files) {
    const fs::path path = dir / name;
    std::ofstream f(path, std::ios::binary);
    f << content;
    f.close();
    if (!f) throw Failure{"cannot write '" + path.string() + "'"};
    out << "created " << path.string() << "\n";
  }
  return kExitClean;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Profile-aware UML model validator and renderer", "umlprof"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&o](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Report format")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_profiles = [&o](CLI::App* cmd) {
    cmd->add_option("--profile", o.profiles, "Profile XML file (repeatable)")
        ->allow_extra_args(false);
  };

  CLI::App* validate = app.add_subcommand("validate", "Validate a model against profiles");
  validate->add_option("model", o.model_path, "Model XML file")->required();
  add_profiles(validate);
  validate->add_option("--mode", o.mode, "Stereotype count policy")
      ->check(CLI::IsMember({"strict", "uml2"}));
  add_format(validate);
  validate->add_flag("--fail-on-warning", o.fail_on_warning,
                     "Exit with status 1 when warnings are reported");

  CLI::App* lint = app.add_subcommand("profile-lint", "Check a profile definition");
  lint->add_option("profile", o.profile_path, "Profile XML file")->required();
  add_format(lint);
  lint->add_flag("--fail-on-warning", o.fail_on_warning,
                 "Exit with status 1 when warnings are reported");

  CLI::App* render = app.add_subcommand("render", "Render a class or sequence diagram");
  render->add_option("model", o.model_path, "Model XML file")->required();
  add_profiles(render);
  render->add_option("--diagram", o.diagram, "Diagram id")->required();
  render->add_option("--display", o.display, "Stereotype display mode")
      ->check(CLI::IsMember({"textual", "iconic", "decoration"}));

  CLI::App* init = app.add_subcommand("init", "Write the built-in corpus as a starter project");
  init->add_option("directory", o.directory, "Target directory")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitClean : kExitFailure;
  }

  try {
    if (validate->parsed()) return cmd_validate(o, out);
    if (lint->parsed()) return cmd_profile_lint(o, out);
    if (render->parsed()) return cmd_render(o, out);
    if (init->parsed()) return cmd_init(o, out);
  } catch (const Failure& f) {
    err << "umlprof: error: " << f.message << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "umlprof: error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace umlprof::cli
