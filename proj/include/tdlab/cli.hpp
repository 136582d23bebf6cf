/*
Copyright (C) 2026 The tdlab Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tdlab/catalog.hpp"
#include "tdlab/certify.hpp"

namespace tdlab {

namespace cli_detail {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

/// Input problems that map to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline PairDocument read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return load_document(buf.str());
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline std::vector<Rational> parse_list(const std::string& flag, const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto r = Rational::parse(item);
    if (!r) throw InputError(flag + ": bad scalar \"" + item + "\"");
    out.push_back(*r);
  }
  if (out.empty()) throw InputError(flag + ": empty list");
  return out;
}

template <ExactField F>
std::string join(const Vec<F>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + v[k].to_string();
  return s + ")";
}

inline ordered_json verdict_json(const PairDocument& doc, const AxiomVerdict& v) {
  ordered_json j;
  j["label"] = doc.label;
  j["verdict"] = v.to_json();
  return j;
}

inline void print_rejection(std::ostream& os, const AxiomVerdict& v) {
  os << "rejected:";
  for (const auto& f : v.failures) os << " " << to_string(f.axiom) << " [" << f.witness << "]";
  os << "\n";
}

inline int cmd_verify(const std::string& path, const std::string& checks, const std::string& format,
                      std::ostream& out) {
  const auto doc = read_document(path);
  const CheckLevel level = checks == "all" ? CheckLevel::All : CheckLevel::Axioms;
  const auto report = with_field(doc.field, [&](const auto& field) {
    auto [a, astar] = to_matrices(doc, field);
    return certify_pair(doc.label, a, astar, level);
  });
  if (format == "json") {
    out << report.to_json().dump(2) << "\n";
  } else {
    out << report.to_text();
  }
  return report.summary() ? kPass : kFail;
}

inline int cmd_orbit(const std::string& path, const std::string& format, std::ostream& out) {
  const auto doc = read_document(path);
  return with_field(doc.field, [&](const auto& field) {
    using Fld = std::decay_t<decltype(field)>;
    auto [a, astar] = to_matrices(doc, field);
    const auto verdict = verify_tridiagonal_pair(a, astar);
    if (!verdict.accepted) {
      if (format == "json") {
        out << verdict_json(doc, verdict).dump(2) << "\n";
      } else {
        print_rejection(out, verdict);
      }
      return kFail;
    }
    const auto sys = build_system(a, astar);
    ordered_json rows = ordered_json::array();
    bool all_ok = true;
    std::ostringstream text;
    text << "orbit: " << doc.label << "\n";
    text << std::left << std::setw(8) << "word" << std::setw(10) << "verdict" << "theta ; thetastar\n";
    for (const auto& g : D4Element::all()) {
      TdSystem<Fld> rel = d4_relative(sys, g);
      const std::string ascii = g.ascii_word().empty() ? "1" : g.ascii_word();
      const bool ok = verify_tridiagonal_pair(rel.A, rel.Astar).accepted && validate_system(rel).empty();
      all_ok = all_ok && ok;
      rows.push_back({{"word", g.word()},
                      {"ascii", ascii},
                      {"theta", join<Fld>(rel.theta)},
                      {"thetastar", join<Fld>(rel.thetastar)},
                      {"accepted", ok}});
      text << std::left << std::setw(8) << ascii << std::setw(10) << (ok ? "accepted" : "REJECTED")
           << join<Fld>(rel.theta) << " ; " << join<Fld>(rel.thetastar) << "\n";
    }
    if (format == "json") {
      ordered_json j;
      j["label"] = doc.label;
      j["relatives"] = rows;
      j["summary"] = all_ok ? "pass" : "fail";
      out << j.dump(2) << "\n";
    } else {
      out << text.str();
    }
    return all_ok ? kPass : kFail;
  });
}

inline int cmd_dims(const std::string& path, const std::string& format, std::ostream& out) {
  const auto doc = read_document(path);
  return with_field(doc.field, [&](const auto& field) {
    using Fld = std::decay_t<decltype(field)>;
    auto [a, astar] = to_matrices(doc, field);
    const auto verdict = verify_tridiagonal_pair(a, astar);
    if (!verdict.accepted) {
      if (format == "json") {
        out << verdict_json(doc, verdict).dump(2) << "\n";
      } else {
        print_rejection(out, verdict);
      }
      return kFail;
    }
    const auto sys = build_system(a, astar);
    TensorSpace<Fld> ts(sys);
    RSpaces<Fld> rs(ts);
    const std::size_t d = sys.d, slice = (d + 1) * (d + 1);
    bool ok = true;
    ordered_json rows = ordered_json::array();
    std::ostringstream text;
    text << "dims: " << doc.label << " (d=" << d << ")\n";
    text << std::left << std::setw(6) << "t" << std::setw(10) << "dimR_t" << std::setw(10) << "expected" << "codim\n";
    for (std::size_t t = 0; t <= d; ++t) {
      const std::size_t dim = rs.Rt[t].dim(), want = d * d + d + t;
      ok = ok && dim == want;
      rows.push_back({{"t", t}, {"dimRt", dim}, {"expected", want}, {"codim", slice - dim}});
      text << std::left << std::setw(6) << t << std::setw(10) << dim << std::setw(10) << want << slice - dim << "\n";
    }
    const std::size_t dim_r = rs.R.dim(), want_r = d * (d + 1) * (2 * d + 3) / 2;
    const std::size_t codim_r = ts.dim() - dim_r, want_codim = (d + 1) * (d + 2) / 2;
    ok = ok && dim_r == want_r && codim_r == want_codim;
    text << "dimR " << dim_r << " (expected " << want_r << "), codimR " << codim_r << " (expected " << want_codim
         << ")\n";
    if (format == "json") {
      ordered_json j;
      j["label"] = doc.label;
      j["d"] = d;
      j["slices"] = rows;
      j["dimR"] = dim_r;
      j["codimR"] = codim_r;
      j["summary"] = ok ? "pass" : "fail";
      out << j.dump(2) << "\n";
    } else {
      out << text.str();
    }
    return ok ? kPass : kFail;
  });
}

struct GenerateFlags {
  std::string family;
  std::optional<std::size_t> d;
  std::string field = "rational";
  std::string theta, thetastar, phi;
  std::string label;
  std::string output;
};

inline int cmd_generate(const GenerateFlags& g, std::ostream& out, std::ostream& err) {
  FieldSpec field;
  try {
    field = FieldSpec::parse(g.field);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("--field: ") + e.what());
  }
  PairDocument doc;
  try {
    if (g.family == "krawtchouk") {
      if (!g.d) throw InputError("krawtchouk: --d is required");
      doc = gen_krawtchouk(*g.d, field);
    } else {
      if (g.theta.empty() || g.thetastar.empty()) throw InputError("split: --theta and --thetastar are required");
      const auto theta = parse_list("--theta", g.theta);
      const auto phi = theta.size() > 1 ? parse_list("--phi", g.phi) : std::vector<Rational>{};
      auto res = gen_split_form(field, theta, parse_list("--thetastar", g.thetastar), phi);
      if (!res.document) {
        print_rejection(err, res.verdict);
        return kFail;
      }
      doc = *res.document;
    }
  } catch (const RejectedNotTd& e) {
    print_rejection(err, e.verdict());
    return kFail;
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (!g.label.empty()) doc.label = g.label;
  const auto text = save_document(doc);
  if (g.output.empty() || g.output == "-") {
    out << text;
  } else {
    std::ofstream f(g.output, std::ios::binary);
    if (!f || !(f << text)) throw InputError("cannot write " + g.output);
  }
  return kPass;
}

}  // namespace cli_detail

/// Entry point shared by the tdlab binary and the tests. args excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace cli_detail;
  CLI::App app("Exact certification of tridiagonal pairs", "tdlab");
  app.require_subcommand(1);

  std::string file, checks = "axioms", format = "text";
  auto* verify = app.add_subcommand("verify", "check the axioms and (optionally) the full certificate suite");
  verify->add_option("file", file, "pair document")->required();
  verify->add_option("--checks", checks, "axioms|all")->check(CLI::IsMember({"axioms", "all"}));
  verify->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

  auto* orbit = app.add_subcommand("orbit", "list the 8 D4 relatives of the system");
  orbit->add_option("file", file, "pair document")->required();
  orbit->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

  auto* dims = app.add_subcommand("dims", "dimension table for R and its slices");
  dims->add_option("file", file, "pair document")->required();
  dims->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

  GenerateFlags gen;
  std::size_t d = 0;
  auto* generate = app.add_subcommand("generate", "write a verified pair document");
  generate->add_option("family", gen.family, "krawtchouk|split")
      ->required()
      ->check(CLI::IsMember({"krawtchouk", "split"}));
  auto* d_opt = generate->add_option("--d", d, "diameter (krawtchouk)");
  generate->add_option("--field", gen.field, "rational|prime:<p>");
  generate->add_option("--theta", gen.theta, "comma-separated eigenvalues of A (split)");
  generate->add_option("--thetastar", gen.thetastar, "comma-separated eigenvalues of A* (split)");
  generate->add_option("--phi", gen.phi, "comma-separated superdiagonal of A* (split)");
  generate->add_option("--label", gen.label, "override the document label");
  generate->add_option("-o,--output", gen.output, "output path (default stdout)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "tdlab: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (verify->parsed()) return cmd_verify(file, checks, format, out);
    if (orbit->parsed()) return cmd_orbit(file, format, out);
    if (dims->parsed()) return cmd_dims(file, format, out);
    if (d_opt->count() > 0) gen.d = d;
    return cmd_generate(gen, out, err);
  } catch (const InputError& e) {
    err << "tdlab: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "tdlab: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace tdlab
