// Copyright 2026 The Authors.
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

#ifndef MATSPLIT_CLI_HPP_
#define MATSPLIT_CLI_HPP_

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "matsplit/verify.hpp"

namespace matsplit {

/// A positional input token resolved to a matroid: catalog entries first,
/// then the filesystem (matrix format, falling back to the graph format).
struct CliInput {
  std::string token;
  std::optional<Multigraph> graph;  // present when the source was a graph
  BinaryMatroid matroid;
};

namespace cli_detail {

using json = nlohmann::ordered_json;

inline CliInput load_input(const std::string& token) {
  const auto& names = catalog_names();
  if (std::find(names.begin(), names.end(), token) != names.end()) {
    CatalogEntry e = catalog_get(token);
    return CliInput{token, e.graph, e.as_matroid()};
  }
  std::ifstream file(token);
  if (!file)
    throw ParseError("'" + token + "' is neither a catalog name nor a readable file");
  std::stringstream buf;
  buf << file.rdbuf();
  const std::string text = buf.str();

  std::string matrix_error;
  try {
    MatrixText mt = read_matrix_text(text);
    std::vector<std::string> labels;
    if (mt.labels) {
      labels = *mt.labels;
    } else {
      for (std::size_t c = 0; c < mt.matrix.col_count(); ++c)
        labels.push_back("e" + std::to_string(c + 1));
    }
    return CliInput{token, std::nullopt, from_matrix(mt.matrix, labels)};
  } catch (const ParseError& e) {
    matrix_error = e.what();
  }
  try {
    Multigraph g = read_graph_text(text);
    return CliInput{token, g, from_graph(g)};
  } catch (const ParseError& e) {
    throw ParseError("'" + token + "' parses neither as a matrix (" +
                     matrix_error + ") nor as a graph (" + e.what() + ")");
  }
}

inline std::string brace_list(const std::vector<std::string>& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i];
  }
  return out + "}";
}

inline json spec_json(const MinorSpec& spec) {
  return json{{"delete", spec.delete_set}, {"contract", spec.contract_set}};
}

inline json witness_json(const MinorWitness& w) {
  json out = spec_json(w.spec);
  json bij = json::object();
  for (const auto& [host, target] : w.bijection) bij[host] = target;
  out["bijection"] = std::move(bij);
  return out;
}

inline json exclusion_json(const ExclusionWitness& w) {
  json out = json{{"forbidden", w.forbidden}};
  out.update(witness_json(w.witness));
  return out;
}

inline void print_witness_line(std::ostream& out, const ExclusionWitness& w) {
  out << w.forbidden << " via delete " << brace_list(w.witness.spec.delete_set)
      << ", contract " << brace_list(w.witness.spec.contract_set) << '\n';
}

inline std::vector<std::string> matrix_rows(const BitMatrix& m) {
  std::vector<std::string> rows;
  for (std::size_t r = 0; r < m.row_count(); ++r) {
    std::string row;
    for (std::size_t c = 0; c < m.col_count(); ++c)
      row += m.get(r, c) ? '1' : '0';
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace cli_detail

/// Command-line front end. Returns the process exit status: 0 for success
/// and true verdicts, 1 for false verdicts, 2 for input errors.
inline int run_cli(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err) {
  using cli_detail::json;

  CLI::App app{"binary matroid splitting toolkit"};
  app.require_subcommand(1);
  bool as_json = false;
  std::uint64_t seed = kDefaultSeed;
  std::size_t bound = kDefaultEnumerationBound;
  app.add_flag("--json", as_json, "emit machine-readable JSON");
  app.add_option("--seed", seed, "seed for the randomized suites");
  app.add_option("--max-elements", bound, "enumeration bound override");

  std::string in_tok, target_tok, x_label, y_label, case_id, export_name;

  CLI::App* c_split = app.add_subcommand("split", "split a matroid on two elements");
  c_split->add_option("matroid", in_tok)->required();
  c_split->add_option("x", x_label)->required();
  c_split->add_option("y", y_label)->required();

  CLI::App* c_sgraph = app.add_subcommand("split-graph", "split a graph on two adjacent edges");
  c_sgraph->add_option("graph", in_tok)->required();
  c_sgraph->add_option("x", x_label)->required();
  c_sgraph->add_option("y", y_label)->required();

  CLI::App* c_classify = app.add_subcommand("classify", "regular/graphic/cographic flags with witnesses");
  c_classify->add_option("matroid", in_tok)->required();

  CLI::App* c_minor = app.add_subcommand("has-minor", "search for a minor isomorphic to the target");
  c_minor->add_option("host", in_tok)->required();
  c_minor->add_option("target", target_tok)->required();

  CLI::App* c_decide = app.add_subcommand("decide", "run a splitting characterization by forbidden minors");
  c_decide->add_option("--case", case_id, "characterization id, e.g. 1.3")->required();
  c_decide->add_option("matroid", in_tok)->required();

  CLI::App* c_export = app.add_subcommand("export", "print a catalog entry in its text format");
  c_export->add_option("name", export_name)->required();

  CLI::App* c_verify = app.add_subcommand("verify-paper", "run the acceptance criteria, JSON summary");

  for (CLI::App* sub : {c_split, c_sgraph, c_classify, c_minor, c_decide,
                        c_export, c_verify})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (*c_split) {
      CliInput in = cli_detail::load_input(in_tok);
      BinaryMatroid s = split(in.matroid, SplitPair{x_label, y_label});
      if (as_json) {
        out << json{{"elements", s.elements()},
                    {"rank", s.rank()},
                    {"rows", cli_detail::matrix_rows(s.representation())}}
                   .dump(2)
            << '\n';
      } else {
        write_matrix_text(out, s.representation(), &s.elements());
      }
      return 0;
    }

    if (*c_sgraph) {
      CliInput in = cli_detail::load_input(in_tok);
      if (!in.graph)
        throw ParseError("split-graph: '" + in_tok + "' is not a graph");
      Multigraph g = split_graph(*in.graph, SplitPair{x_label, y_label});
      if (as_json) {
        json edges = json::array();
        for (const Edge& e : g.edges())
          edges.push_back(json{{"label", e.label}, {"u", e.u}, {"v", e.v}});
        out << json{{"vertices", g.vertex_count()}, {"edges", edges}}.dump(2)
            << '\n';
      } else {
        write_graph_text(out, g);
      }
      return 0;
    }

    if (*c_classify) {
      CliInput in = cli_detail::load_input(in_tok);
      ClassificationFlags flags = classify(in.matroid, bound);
      if (as_json) {
        json witnesses = json::object();
        if (flags.regular_witness)
          witnesses["regular"] = cli_detail::exclusion_json(*flags.regular_witness);
        if (flags.graphic_witness)
          witnesses["graphic"] = cli_detail::exclusion_json(*flags.graphic_witness);
        if (flags.cographic_witness)
          witnesses["cographic"] = cli_detail::exclusion_json(*flags.cographic_witness);
        out << json{{"regular", flags.regular},
                    {"graphic", flags.graphic},
                    {"cographic", flags.cographic},
                    {"witnesses", witnesses}}
                   .dump(2)
            << '\n';
      } else {
        out << "regular: " << (flags.regular ? "yes" : "no") << '\n';
        out << "graphic: " << (flags.graphic ? "yes" : "no") << '\n';
        out << "cographic: " << (flags.cographic ? "yes" : "no") << '\n';
        if (flags.regular_witness) {
          out << "witness (regular): ";
          cli_detail::print_witness_line(out, *flags.regular_witness);
        }
        if (flags.graphic_witness) {
          out << "witness (graphic): ";
          cli_detail::print_witness_line(out, *flags.graphic_witness);
        }
        if (flags.cographic_witness) {
          out << "witness (cographic): ";
          cli_detail::print_witness_line(out, *flags.cographic_witness);
        }
      }
      return 0;
    }

    if (*c_minor) {
      CliInput host = cli_detail::load_input(in_tok);
      CliInput target = cli_detail::load_input(target_tok);
      std::optional<MinorWitness> w = has_minor(host.matroid, target.matroid, bound);
      if (!w) {
        if (as_json)
          out << json{{"found", false}}.dump(2) << '\n';
        else
          out << "no minor isomorphic to " << target_tok << '\n';
        return 1;
      }
      if (as_json) {
        out << cli_detail::witness_json(*w).dump(2) << '\n';
      } else {
        out << "minor found: delete " << cli_detail::brace_list(w->spec.delete_set)
            << ", contract " << cli_detail::brace_list(w->spec.contract_set) << '\n';
        out << "bijection:";
        for (const auto& [h, t] : w->bijection) out << ' ' << h << "->" << t;
        out << '\n';
      }
      return 0;
    }

    if (*c_decide) {
      CliInput in = cli_detail::load_input(in_tok);
      const TheoremCase& tc = theorem_case(case_id);
      DecisionReport rep = decide_by_forbidden_minors(in.matroid, tc, bound);
      const bool violated =
          rep.precondition_status == PreconditionStatus::kViolated;
      if (as_json) {
        json j{{"case", tc.id},
               {"input_class", class_name(tc.input_class)},
               {"target_class", class_name(tc.target_class)},
               {"precondition", violated ? "violated" : "passed"},
               {"tilde_witness",
                rep.tilde_witness ? json(*rep.tilde_witness) : json(nullptr)},
               {"verdict", rep.verdict},
               {"route", rep.route},
               {"witness", rep.forbidden_witness
                               ? cli_detail::exclusion_json(*rep.forbidden_witness)
                               : json(nullptr)}};
        out << j.dump(2) << '\n';
      } else {
        out << "case: " << tc.id << " (" << class_name(tc.input_class) << " -> "
            << class_name(tc.target_class) << ")\n";
        out << "precondition: "
            << (violated ? "violated (tilde minor " + *rep.tilde_witness + ")"
                         : "passed")
            << '\n';
        out << "verdict: " << (rep.verdict ? "true" : "false") << '\n';
        if (rep.forbidden_witness) {
          out << "witness: ";
          cli_detail::print_witness_line(out, *rep.forbidden_witness);
        }
      }
      return rep.verdict ? 0 : 1;
    }

    if (*c_export) {
      CatalogEntry e = catalog_get(export_name);
      if (as_json) {
        if (e.graph) {
          json edges = json::array();
          for (const Edge& ed : e.graph->edges())
            edges.push_back(json{{"label", ed.label}, {"u", ed.u}, {"v", ed.v}});
          out << json{{"name", e.name},
                      {"kind", "graph"},
                      {"vertices", e.graph->vertex_count()},
                      {"edges", edges}}
                     .dump(2)
              << '\n';
        } else {
          out << json{{"name", e.name},
                      {"kind", "matrix"},
                      {"labels", e.matroid->elements()},
                      {"rows", cli_detail::matrix_rows(e.matroid->representation())}}
                     .dump(2)
              << '\n';
        }
      } else if (e.graph) {
        write_graph_text(out, *e.graph);
      } else {
        write_matrix_text(out, e.matroid->representation(), &e.matroid->elements());
      }
      return 0;
    }

    if (*c_verify) {
      json records = json::array();
      bool all_passed = true;
      for (const CriterionResult& r : run_all_criteria(seed)) {
        all_passed = all_passed && r.passed;
        records.push_back(json{{"id", r.id},
                               {"name", r.name},
                               {"passed", r.passed},
                               {"seconds", r.seconds},
                               {"detail", r.detail}});
      }
      out << records.dump(2) << '\n';
      return all_passed ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;  // unreachable: require_subcommand guarantees one branch ran
}

}  // namespace matsplit

#endif  // MATSPLIT_CLI_HPP_
