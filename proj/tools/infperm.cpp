// Copyright 2026 The Infperm Authors
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

// infperm -- command line front end for the symbolic permutation library.
//
// Conventions shared by every subcommand:
//   * data goes to stdout, diagnostics go to stderr;
//   * exit code 0 = pass, 1 = fail (a negative but well-formed answer),
//     2 = usage, parse, or construction error;
//   * JSON output is canonical: keys sorted, compact separators, one
//     trailing newline, so repeated runs are byte identical;
//   * an input path of "-" reads the JSON document from stdin;
//   * INFPERM_DEFAULT_WINDOW overrides the default window size.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "infperm/classes.hpp"
#include "infperm/factor.hpp"
#include "infperm/json_io.hpp"
#include "infperm/scheme.hpp"

namespace {

using infperm::Cardinal;
using infperm::ClassSpec;
using infperm::Errc;
using infperm::Error;
using infperm::FactorOptions;
using infperm::FactorTarget;
using infperm::FactorizationResult;
using infperm::Int;
using infperm::OrbitCensus;
using infperm::Scheme;
using infperm::StructuralReport;
using infperm::Word;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in)
    infperm::fail(Errc::ParseError, "cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    infperm::fail(Errc::ParseError, what + ": " + e.what());
  }
}

Scheme load_scheme(const std::string& path) {
  return infperm::json_io::scheme_from_json(
      parse_json(read_input(path), "scheme input"));
}

Int default_window() {
  if (const char* env = std::getenv("INFPERM_DEFAULT_WINDOW")) {
    std::string text(env);
    try {
      size_t used = 0;
      Int n = std::stoll(text, &used);
      if (used != text.size() || n < 1) throw std::invalid_argument(text);
      return n;
    } catch (const std::exception&) {
      infperm::fail(Errc::ParseError,
                    "INFPERM_DEFAULT_WINDOW must be a positive integer, got '" +
                        text + "'");
    }
  }
  return 256;
}

// Multi-window commands default to the verification ladder unless the user
// (or the environment) narrows it.
std::vector<Int> windows_or_default(const std::vector<Int>& given) {
  if (!given.empty()) return given;
  if (std::getenv("INFPERM_DEFAULT_WINDOW")) return {default_window()};
  return {64, 256, 1024};
}

void emit(const json& j, const std::string& format) {
  if (format == "json") {
    std::cout << infperm::json_io::canonical(j);
    return;
  }
  // Tables: deterministic key/value lines; arrays one element per line.
  std::function<void(const json&, const std::string&)> walk =
      [&](const json& node, const std::string& prefix) {
        if (node.is_object()) {
          for (auto it = node.begin(); it != node.end(); ++it)
            walk(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
          return;
        }
        if (node.is_array()) {
          std::cout << prefix << ":";
          for (const auto& e : node) std::cout << " " << e.dump();
          std::cout << "\n";
          return;
        }
        std::cout << prefix << ": "
                  << (node.is_string() ? node.get<std::string>() : node.dump())
                  << "\n";
      };
  walk(j, "");
}

json structural_payload(const StructuralReport& r) {
  return infperm::json_io::structural_report_to_json(r);
}

//----------------------------------------------------------------------------
// Subcommand bodies. Each returns the process exit code.
//----------------------------------------------------------------------------

int run_validate(const std::string& input, Int window,
                 const std::string& format) {
  Scheme s = load_scheme(input);
  auto report = s.validate(window);
  json j = infperm::json_io::validation_report_to_json(report);
  j["status"] = report.ok ? "pass" : "fail";
  j["window"] = window;
  emit(j, format);
  return report.ok ? kExitPass : kExitFail;
}

int run_window(const std::string& input, Int window,
               const std::string& format) {
  Scheme s = load_scheme(input);
  auto table = infperm::make_window_table(s, window);
  if (format == "table") {
    // Two aligned columns, sorted by x.
    size_t width = 1;
    for (Int x = -window; x <= window; ++x) {
      width = std::max(width, std::to_string(x).size());
      width = std::max(width, std::to_string(table(x)).size());
    }
    for (Int x = -window; x <= window; ++x) {
      std::string lhs = std::to_string(x), rhs = std::to_string(table(x));
      std::cout << std::string(width - lhs.size(), ' ') << lhs << "  "
                << std::string(width - rhs.size(), ' ') << rhs << "\n";
    }
    return kExitPass;
  }
  json entries = json::array();
  for (Int x = -window; x <= window; ++x)
    entries.push_back(json::array({x, table(x)}));
  emit(json{{"status", "pass"}, {"window", window}, {"entries", entries}},
       format);
  return kExitPass;
}

int run_census(const std::string& input, const std::string& format) {
  Scheme s = load_scheme(input);
  emit(json{{"status", "pass"},
            {"census", infperm::json_io::census_to_json(s.orbit_census())}},
       format);
  return kExitPass;
}

int run_classify(const std::string& input, Int window,
                 const std::string& format) {
  Scheme s = load_scheme(input);
  json j = structural_payload(infperm::classify_structural(s, window));
  j["status"] = "pass";
  emit(j, format);
  return kExitPass;
}

int run_member(const std::string& input, const std::string& spec_text,
               const std::string& format) {
  json doc = parse_json(read_input(input), "member input");
  OrbitCensus census;
  if (doc.is_object() && doc.contains("families"))
    census = infperm::json_io::scheme_from_json(doc).orbit_census();
  else
    census = infperm::json_io::census_from_json(doc);
  ClassSpec spec = ClassSpec::parse(spec_text);
  bool member = infperm::class_member(census, spec);
  emit(json{{"status", member ? "pass" : "fail"},
            {"member", member},
            {"spec", spec.str()},
            {"census", infperm::json_io::census_to_json(census)}},
       format);
  return member ? kExitPass : kExitFail;
}

int emit_factorization(const FactorizationResult& res,
                       const std::string& format) {
  bool pass = res.all_certified() && res.verification.mismatches == 0;
  json j = infperm::json_io::factorization_to_json(res);
  j["status"] = pass ? "pass" : "fail";
  emit(j, format);
  return pass ? kExitPass : kExitFail;
}

int run_factor(const std::string& input, const std::string& target_text,
               const std::vector<Int>& windows, const std::string& format,
               bool chain) {
  Scheme s = load_scheme(input);
  auto [target, n] = infperm::parse_target(target_text);
  FactorOptions opts;
  opts.windows = windows_or_default(windows);
  FactorizationResult res;
  if (chain) {
    res = infperm::chain_factor(s, target, opts, n);
  } else {
    switch (target) {
      case FactorTarget::LocalFinite:
        res = infperm::factor_ringed_to_lf(s, opts);
        break;
      case FactorTarget::Ringed:
        res = infperm::factor_involution_to_ringed(s, opts);
        break;
      case FactorTarget::Wild:
        res = infperm::factor_lf_to_wild(s, opts);
        break;
      case FactorTarget::SOmegaN:
        res = infperm::factor_order_n(s, n, opts);
        break;
    }
  }
  return emit_factorization(res, format);
}

int run_verify(const std::string& scheme_path, const std::string& word_path,
               const std::vector<Int>& windows, const std::string& format) {
  Scheme s = load_scheme(scheme_path);
  Word w = infperm::json_io::word_from_json(
      parse_json(read_input(word_path), "word input"));
  std::vector<Int> ws = windows_or_default(windows);
  Int mismatches = 0;
  json examples = json::array();
  for (Int n : ws) {
    for (Int x = -n; x <= n; ++x) {
      Int want = s.apply(x);
      Int got = w.apply(x);
      if (want != got) {
        ++mismatches;
        if (examples.size() < 5)
          examples.push_back(json{{"x", x}, {"want", want}, {"got", got}});
      }
    }
  }
  json j{{"status", mismatches == 0 ? "pass" : "fail"},
         {"windows", ws},
         {"mismatches", mismatches}};
  if (!examples.empty()) j["examples"] = examples;
  emit(j, format);
  return mismatches == 0 ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbolic permutations of the integers"};
  app.require_subcommand(1);

  std::string format = "json";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();

  std::string input = "-";
  Int window = 0;  // 0 = use default (env or 256)
  std::vector<Int> windows;
  std::string spec_text;
  std::string target_text;
  std::string word_path;

  auto add_input = [&](CLI::App* cmd) {
    cmd->fallthrough();  // let --format after the subcommand reach the app
    cmd->add_option("input", input, "scheme JSON file, or - for stdin")
        ->required();
  };
  auto add_window = [&](CLI::App* cmd) {
    cmd->add_option("--window", window, "half-width of the check window");
  };
  auto add_windows = [&](CLI::App* cmd) {
    cmd->add_option("--window", windows,
                    "verification window(s); repeatable");
  };

  CLI::App* validate = app.add_subcommand("validate", "check well-formedness");
  add_input(validate);
  add_window(validate);

  CLI::App* window_cmd =
      app.add_subcommand("window", "tabulate the permutation on [-N, N]");
  add_input(window_cmd);
  add_window(window_cmd);

  CLI::App* census = app.add_subcommand("census", "orbit census of a scheme");
  add_input(census);

  CLI::App* classify =
      app.add_subcommand("classify", "order and structural classes");
  add_input(classify);
  add_window(classify);

  CLI::App* member =
      app.add_subcommand("member", "class membership for a scheme or census");
  add_input(member);
  member->add_option("--spec", spec_text, "class, e.g. S(w,2) or W(3,w)")
      ->required();

  CLI::App* factor =
      app.add_subcommand("factor", "one-step constructive factorization");
  add_input(factor);
  factor->add_option("--target", target_text, "lf | ringed | wild | s-omega-N")
      ->required();
  add_windows(factor);

  CLI::App* chain = app.add_subcommand(
      "chain", "compose factorization steps toward a target class");
  add_input(chain);
  chain->add_option("--target", target_text, "lf | ringed | wild | s-omega-N")
      ->required();
  add_windows(chain);

  CLI::App* verify =
      app.add_subcommand("verify", "check a word against a scheme on windows");
  add_input(verify);
  verify->add_option("word", word_path, "word JSON file, or - for stdin")
      ->required();
  add_windows(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitError;
  }

  try {
    Int w = window > 0 ? window : default_window();
    if (validate->parsed()) return run_validate(input, w, format);
    if (window_cmd->parsed()) return run_window(input, w, format);
    if (census->parsed()) return run_census(input, format);
    if (classify->parsed()) return run_classify(input, w, format);
    if (member->parsed()) return run_member(input, spec_text, format);
    if (factor->parsed())
      return run_factor(input, target_text, windows, format, false);
    if (chain->parsed())
      return run_factor(input, target_text, windows, format, true);
    if (verify->parsed()) return run_verify(input, word_path, windows, format);
  } catch (const Error& e) {
    std::cerr << "infperm: " << e.what() << "\n";
    std::cout << infperm::json_io::canonical(
        json{{"status", "error"},
             {"code", infperm::errc_name(e.code())},
             {"message", e.what()}});
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "infperm: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
