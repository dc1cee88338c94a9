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

// Command line surface. Exit codes: 0 success or verified, 1 verification
// failed, 2 input or limit error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sbrep/catalog.hpp"
#include "sbrep/field.hpp"
#include "sbrep/graphs.hpp"
#include "sbrep/hereditary.hpp"
#include "sbrep/matrix.hpp"
#include "sbrep/represent.hpp"
#include "sbrep/text.hpp"

namespace {

using namespace sbrep;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kParse, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) fail(ErrorCode::kParse, "cannot write '" + out_path + "'");
  out << content;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

Subset parse_id_list(const std::string& csv, int n) {
  Subset s = 0;
  if (csv.empty()) return s;
  std::string token;
  std::istringstream in(csv);
  while (std::getline(in, token, ',')) {
    int e = parse_count(token, "element");
    if (e < 1 || e > n)
      fail(ErrorCode::kParse,
           "element " + std::to_string(e) + " outside 1.." + std::to_string(n));
    s |= Subset{1} << (e - 1);
  }
  return s;
}

int cmd_rank(const std::string& file) {
  std::string text = read_file(file);
  std::vector<std::string> head = split_tokens(
      text.substr(0, text.find('\n') == std::string::npos ? text.size()
                                                          : text.find('\n')));
  if (!head.empty() && head[0] == "gf") {
    GfMatrix a = parse_gf_matrix(text);
    std::cout << "rank=" << gf_rank(a) << '\n';
    return kOk;
  }
  SbMatrix a = parse_sb_matrix(text);
  std::cout << "rank=" << rank(a) << '\n';
  if (a.rows() == a.cols())
    std::cout << "permanent=" << sb_to_char(permanent(a)) << '\n';
  return kOk;
}

void report_force_cost(int n) {
  if (n > 16) {
    std::cerr << "force: exhaustive sweeps over up to 2^" << n << " = "
              << (1ull << n) << " subsets\n";
  }
}

int cmd_check(const std::string& file, bool force) {
  Hereditary h = parse_hc(read_file(file));
  if (force) report_force_cost(h.ground_size());
  std::cout << "PR=" << yes_no(h.satisfies_pr(force)) << '\n';
  std::cout << "BR=" << yes_no(h.satisfies_br(force)) << '\n';
  std::cout << "MT=" << yes_no(h.is_matroid(force)) << '\n';
  Hereditary::ExchangeReport x = h.exchange_properties(force);
  std::cout << "EP=" << yes_no(x.ep) << '\n';
  std::cout << "DEP=" << yes_no(x.dep) << '\n';
  std::cout << "SEP=" << yes_no(x.sep) << '\n';
  std::cout << "rank=" << h.rank() << '\n';
  std::cout << "bases=" << h.bases().size() << '\n';
  return kOk;
}

int cmd_represent(const std::string& file, const std::string& from,
                  bool reduce, bool force, const std::string& out) {
  Hereditary h = parse_hc(read_file(file));
  if (force) report_force_cost(h.ground_size());
  Representation rep = from == "circuits" ? represent_from_circuits(h, force)
                                          : represent_from_bases(h);
  if (reduce) rep = reduce_rows(rep);
  if (!verify(rep, h)) {
    std::cerr << "constructed matrix failed verification\n";
    return kVerifyFailed;
  }
  write_output(out, format_sb_matrix(rep.matrix()));
  return kOk;
}

int cmd_verify(const std::string& matrix_file, const std::string& hc_file) {
  SbMatrix a = parse_sb_matrix(read_file(matrix_file));
  Hereditary h = parse_hc(read_file(hc_file));
  if (a.cols() != h.ground_size())
    fail(ErrorCode::kGroundSizeMismatch,
         "matrix has " + std::to_string(a.cols()) +
             " columns, collection ground size is " +
             std::to_string(h.ground_size()));
  Hereditary got = vector_hc(a);
  if (got == h) {
    std::cout << "ok\n";
    return kOk;
  }
  // Report the first subset, by size then lexicographic order, on which the
  // two collections disagree.
  Subset limit = Subset{1} << h.ground_size();
  std::vector<Subset> order;
  for (Subset s = 0; s < limit; ++s) order.push_back(s);
  std::sort(order.begin(), order.end(), subset_size_lex_less);
  for (Subset s : order) {
    bool in_matrix = got.is_independent(s);
    bool in_collection = h.is_independent(s);
    if (in_matrix != in_collection) {
      std::cout << "disagree " << subset_to_string(s) << ": matrix says "
                << (in_matrix ? "independent" : "dependent")
                << ", collection says "
                << (in_collection ? "independent" : "dependent") << '\n';
      break;
    }
  }
  return kVerifyFailed;
}

int cmd_boolean_from_field(const std::string& file, const std::string& out) {
  GfMatrix a = parse_gf_matrix(read_file(file));
  Representation rep = boolean_from_field(a);
  if (!verify(rep, vector_matroid(a))) {
    std::cerr << "conversion failed verification\n";
    return kVerifyFailed;
  }
  write_output(out, format_sb_matrix(rep.matrix()));
  return kOk;
}

int cmd_direct_sum(const std::vector<std::string>& files,
                   const std::string& out) {
  std::vector<Representation> reps;
  for (const std::string& f : files) {
    SbMatrix a = parse_sb_matrix(read_file(f));
    if (!a.is_boolean())
      fail(ErrorCode::kGhostEntry, "'" + f + "' is not a boolean matrix");
    reps.emplace_back(std::move(a), true);
  }
  write_output(out, format_sb_matrix(direct_sum_rep(reps).matrix()));
  return kOk;
}

int cmd_dual(const std::string& file, const std::string& out) {
  Hereditary h = parse_hc(read_file(file));
  write_output(out, format_hc(h.dual()));
  return kOk;
}

int cmd_minor(const std::string& file, const std::string& delete_csv,
              const std::string& contract_csv, const std::string& out) {
  Hereditary h = parse_hc(read_file(file));
  Subset del = parse_id_list(delete_csv, h.ground_size());
  Subset con = parse_id_list(contract_csv, h.ground_size());
  RelabeledHereditary m = h.minor(del, con);
  std::cerr << "surviving elements:";
  for (int e : m.old_labels) std::cerr << ' ' << (e + 1);
  std::cerr << '\n';
  write_output(out, format_hc(m.collection));
  return kOk;
}

int cmd_graphic(const std::string& file, const std::string& out) {
  Graph g = parse_graph(read_file(file));
  write_output(out, format_hc(graphic_matroid(g)));
  return kOk;
}

void write_file_reporting(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::kParse, "cannot write '" + path + "'");
  out << content;
  std::cout << "wrote " << path << '\n';
}

int cmd_examples(const std::string& name, int um, int un,
                 const std::string& out_dir) {
  CatalogEntry entry =
      name == "u" ? catalog_uniform(um, un) : catalog_entry(name);
  std::string prefix = out_dir.empty() ? entry.name : out_dir + "/" + entry.name;
  write_file_reporting(prefix + ".hc", format_hc(entry.collection));
  if (entry.sb_reference)
    write_file_reporting(prefix + ".sb", format_sb_matrix(*entry.sb_reference));
  if (entry.gf_reference)
    write_file_reporting(prefix + ".gf", format_gf_matrix(*entry.gf_reference));
  if (entry.graph)
    write_file_reporting(prefix + ".graph", format_graph(*entry.graph));
  return kOk;
}

int cmd_minrows(const std::string& file, const std::string& alphabet,
                int cap) {
  Hereditary h = parse_hc(read_file(file));
  Alphabet a =
      alphabet == "bool" ? Alphabet::kBoolean : Alphabet::kSuperboolean;
  auto result = min_rows(h, a, cap);
  if (!result) {
    std::cout << "none within cap\n";
    return kOk;
  }
  std::cout << "m=" << result->first << '\n';
  std::cout << format_sb_matrix(result->second.matrix());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"superboolean matrices and representations of hereditary "
               "collections"};
  app.require_subcommand(1);

  std::string out_path;
  bool force = false;

  auto add_common = [&](CLI::App* sub, bool with_out) {
    if (with_out)
      sub->add_option("--out", out_path, "write output to this path");
    sub->add_flag("--force", force, "override exhaustive-search guards");
  };

  std::string file, file2, from = "bases", alphabet = "sb";
  std::string delete_csv, contract_csv, example_name;
  std::vector<std::string> files;
  bool reduce = false;
  int cap = 4, um = 2, un = 4;

  CLI::App* rank_cmd = app.add_subcommand("rank", "rank and permanent of a matrix file");
  rank_cmd->add_option("file", file)->required();
  add_common(rank_cmd, false);

  CLI::App* check_cmd = app.add_subcommand("check", "axiom report for a collection");
  check_cmd->add_option("file", file)->required();
  add_common(check_cmd, false);

  CLI::App* rep_cmd = app.add_subcommand("represent", "build a representing matrix");
  rep_cmd->add_option("file", file)->required();
  rep_cmd->add_option("--from", from)->check(CLI::IsMember({"bases", "circuits"}));
  rep_cmd->add_flag("--reduce", reduce, "collapse duplicate and ghost rows");
  add_common(rep_cmd, true);

  CLI::App* verify_cmd = app.add_subcommand("verify", "check a matrix against a collection");
  verify_cmd->add_option("matrix", file)->required();
  verify_cmd->add_option("collection", file2)->required();
  add_common(verify_cmd, false);

  CLI::App* bff_cmd = app.add_subcommand("boolean-from-field",
                                         "boolean representation from a field matrix");
  bff_cmd->add_option("file", file)->required();
  add_common(bff_cmd, true);

  CLI::App* sum_cmd = app.add_subcommand("direct-sum", "block-diagonal sum of boolean matrices");
  sum_cmd->add_option("files", files)->required()->expected(2, -1);
  add_common(sum_cmd, true);

  CLI::App* dual_cmd = app.add_subcommand("dual", "dual collection");
  dual_cmd->add_option("file", file)->required();
  add_common(dual_cmd, true);

  CLI::App* minor_cmd = app.add_subcommand("minor", "deletion and contraction");
  minor_cmd->add_option("file", file)->required();
  minor_cmd->add_option("--delete", delete_csv, "comma separated 1-based ids");
  minor_cmd->add_option("--contract", contract_csv, "comma separated 1-based ids");
  add_common(minor_cmd, true);

  CLI::App* graphic_cmd = app.add_subcommand("graphic", "graphic matroid of a graph file");
  graphic_cmd->add_option("file", file)->required();
  add_common(graphic_cmd, true);

  CLI::App* examples_cmd = app.add_subcommand("examples", "write a catalog entry's files");
  examples_cmd->add_option("name", example_name)->required();
  examples_cmd->add_option("m", um);
  examples_cmd->add_option("n", un);
  examples_cmd->add_option("--out", out_path, "output directory");
  examples_cmd->add_flag("--force", force);

  CLI::App* minrows_cmd = app.add_subcommand("minrows", "smallest representing row count");
  minrows_cmd->add_option("file", file)->required();
  minrows_cmd->add_option("--alphabet", alphabet)->check(CLI::IsMember({"bool", "sb"}));
  minrows_cmd->add_option("--cap", cap);
  add_common(minrows_cmd, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (rank_cmd->parsed()) return cmd_rank(file);
    if (check_cmd->parsed()) return cmd_check(file, force);
    if (rep_cmd->parsed())
      return cmd_represent(file, from, reduce, force, out_path);
    if (verify_cmd->parsed()) return cmd_verify(file, file2);
    if (bff_cmd->parsed()) return cmd_boolean_from_field(file, out_path);
    if (sum_cmd->parsed()) return cmd_direct_sum(files, out_path);
    if (dual_cmd->parsed()) return cmd_dual(file, out_path);
    if (minor_cmd->parsed())
      return cmd_minor(file, delete_csv, contract_csv, out_path);
    if (graphic_cmd->parsed()) return cmd_graphic(file, out_path);
    if (examples_cmd->parsed())
      return cmd_examples(example_name, um, un, out_path);
    if (minrows_cmd->parsed()) return cmd_minrows(file, alphabet, cap);
  } catch (const sbrep::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
