#include "rbt/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rbt/report.hpp"
#include "rbt/serialize.hpp"
#include "rbt/version.hpp"

namespace rbt {

namespace {

namespace fs = std::filesystem;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct Options {
  int n = 0;
  std::string format = "json";
  std::string fixtures = RBT_DEFAULT_FIXTURES;
  std::string out_path;
  int modulus = 2;
  bool mod_center = false;
  int bound = 1;
  std::string translations = "0,1/4,1/2,3/4";
  int threads = 0;
  std::string matrix;
  std::vector<std::string> files;
};

LabelTable load_labels(const Options& o) {
  fs::path p = fs::path(o.fixtures) / "labels.json";
  if (!fs::exists(p))
    return {};
  return LabelTable::load(p.string());
}

SearchSpace search_space(const Options& o) {
  SearchSpace s;
  s.entry_bound = o.bound;
  s.translations.clear();
  std::stringstream ss(o.translations);
  for (std::string item; std::getline(ss, item, ',');)
    s.translations.push_back(Dyadic::parse(item));
  if (s.translations.empty())
    throw std::invalid_argument("--translations must list at least one value");
  return s;
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out_path);
  if (!f)
    throw std::runtime_error("cannot write '" + o.out_path + "'");
  f << text;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const LabelTable labels = load_labels(o);
  const auto mats = enumerate(o.n);
  std::ostringstream os;
  switch (parse_format(o.format)) {
    case Format::json: {
      Json list = Json::array();
      for (const auto& a : mats)
        list.push_back(Json{{"id", a.id()}, {"bits", a.bits()}, {"label", labels.name(a)}});
      os << Json{{"n", o.n}, {"count", mats.size()}, {"matrices", list}}.dump(2) << "\n";
      break;
    }
    case Format::markdown:
      os << "| id | bits | label |\n|---|---|---|\n";
      for (const auto& a : mats)
        os << "| " << a.id() << " | " << a.bits() << " | " << labels.name(a) << " |\n";
      break;
    case Format::csv:
      os << "id,bits,label\n";
      for (const auto& a : mats)
        os << a.id() << "," << a.bits() << "," << labels.name(a) << "\n";
      break;
  }
  emit(o, out, os.str());
  return exit_ok;
}

int cmd_invariants(const Options& o, std::ostream& out) {
  const LabelTable labels = load_labels(o);
  const BottMatrix a = parse_matrix_spec(o.matrix, labels, o.n);
  const InvariantVector v = invariant_vector(a);
  Json j = to_json(v);
  std::ostringstream os;
  switch (parse_format(o.format)) {
    case Format::json:
      os << Json{{"matrix", labels.name(a)}, {"bits", a.bits()}, {"invariants", j}}.dump(2) << "\n";
      break;
    case Format::markdown:
      os << "| invariant | value |\n|---|---|\n";
      for (const auto& [key, value] : j.items())
        os << "| " << key << " | `" << value.dump() << "` |\n";
      break;
    case Format::csv:
      os << "invariant,value\n";
      for (const auto& [key, value] : j.items())
        os << key << ",\"" << value.dump() << "\"\n";  // dump() never contains newlines
      break;
  }
  emit(o, out, os.str());
  return exit_ok;
}

int cmd_fingerprint(const Options& o, std::ostream& out) {
  const LabelTable labels = load_labels(o);
  const BottMatrix a = parse_matrix_spec(o.matrix, labels, o.n);
  BottGroup g(a);
  Json j{{"matrix", labels.name(a)},
         {"modulus", o.modulus},
         {"mod_center", o.mod_center},
         {"fingerprint", to_json(finite_quotient_fingerprint(g, o.modulus, o.mod_center))}};
  emit(o, out, j.dump(2) + "\n");
  return exit_ok;
}

int cmd_classify(const Options& o, std::ostream& out, std::ostream& err) {
  const LabelTable labels = load_labels(o);
  const Format format = parse_format(o.format);
  try {
    Partition p = classify(o.n, search_space(o), o.threads);
    emit(o, out, write_report(p, format, labels));
    return exit_ok;
  } catch (const Undetermined& e) {
    err << "undetermined: " << labels.name(e.first) << " and " << labels.name(e.second)
        << " share every invariant but the search space (" << search_space(o).str()
        << ") holds no conjugator between them\n";
    return exit_failed;
  }
}

int cmd_verify(const Options& o, std::ostream& out) {
  const LabelTable labels = load_labels(o);
  std::size_t total = 0, failed = 0;
  for (const auto& file : o.files) {
    Json j = Json::parse(read_file(file));
    std::vector<Json> items;
    if (j.is_array())
      items.assign(j.begin(), j.end());
    else
      items.push_back(j);
    for (const auto& item : items) {
      Witness w = witness_from_json(item, labels);
      ++total;
      if (!verify_witness(w)) {
        ++failed;
        out << "FAIL " << file << ": " << labels.name(w.source) << " -> " << labels.name(w.target) << "\n";
      }
    }
  }
  if (failed == 0) {
    out << "OK";
    if (total != 1)
      out << " (" << total << " witnesses)";
    out << "\n";
    return exit_ok;
  }
  out << failed << " of " << total << " witnesses failed\n";
  return exit_failed;
}

int cmd_check_theorems(const Options& o, std::ostream& out, std::ostream& err) {
  const LabelTable labels = load_labels(o);
  bool all = true;
  for (int n : {3, 4}) {
    const fs::path ref_path = fs::path(o.fixtures) / ("theorem_n" + std::to_string(n) + ".json");
    const Reference ref = load_reference(ref_path.string());
    Partition p;
    try {
      p = classify(n, search_space(o), o.threads);
    } catch (const Undetermined& e) {
      err << "n=" << n << ": undetermined: " << labels.name(e.first) << " and " << labels.name(e.second) << "\n";
      all = false;
      continue;
    }
    const Comparison cmp = compare_with_reference(p, ref, labels);
    out << "n=" << n << ": " << p.classes.size() << " classes, " << (cmp.match ? "match" : "MISMATCH") << "\n";
    for (const auto& line : cmp.lines)
      out << "  " << line << "\n";
    all = all && cmp.match;
  }
  return all ? exit_ok : exit_failed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classification of real Bott manifolds via their Bieberbach groups", "bott"};
  app.set_version_flag("--version", std::string(version()));
  app.require_subcommand(1);
  Options o;
  app.add_option("--fixtures", o.fixtures, "Directory with labels.json and reference tables")
      ->capture_default_str();

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "markdown", "csv"}))
        ->capture_default_str();
    sub->add_option("--out", o.out_path, "Write output to a file instead of stdout");
  };
  auto add_dim = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("-n", o.n, "Dimension")->check(CLI::Range(1, BottMatrix::max_n));
    if (required)
      opt->required();
  };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--bound", o.bound, "Entry bound for conjugator matrices")
        ->check(CLI::Range(0, 3))
        ->capture_default_str();
    sub->add_option("--translations", o.translations, "Comma separated translation grid, e.g. 0,1/4,1/2,3/4")
        ->capture_default_str();
    sub->add_option("--threads", o.threads, "Worker threads (default: BOTT_THREADS or all cores)")
        ->check(CLI::NonNegativeNumber);
  };

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List all Bott matrices of size n");
  add_dim(enumerate_cmd, true);
  add_format(enumerate_cmd);

  auto* invariants_cmd = app.add_subcommand("invariants", "Invariant vector of one Bott matrix");
  invariants_cmd->add_option("matrix", o.matrix, "Label, n=..;bits=.., bit string or JSON rows")->required();
  add_dim(invariants_cmd, false);
  add_format(invariants_cmd);

  auto* fingerprint_cmd = app.add_subcommand("fingerprint", "Finite quotient fingerprint of one Bott group");
  fingerprint_cmd->add_option("matrix", o.matrix, "Label, n=..;bits=.., bit string or JSON rows")->required();
  add_dim(fingerprint_cmd, false);
  fingerprint_cmd->add_option("--modulus", o.modulus, "Quotient by m Z^n")
      ->check(CLI::IsMember({2, 4}))
      ->capture_default_str();
  fingerprint_cmd->add_flag("--mod-center", o.mod_center, "Also quotient by the center");
  fingerprint_cmd->add_option("--out", o.out_path, "Write output to a file instead of stdout");

  auto* classify_cmd = app.add_subcommand("classify", "Partition all Bott matrices of size n into classes");
  add_dim(classify_cmd, true);
  add_format(classify_cmd);
  add_search(classify_cmd);

  auto* verify_cmd = app.add_subcommand("verify-witness", "Check conjugator certificates");
  verify_cmd->add_option("files", o.files, "Witness JSON files (object or array)")
      ->required()
      ->check(CLI::ExistingFile);

  auto* check_cmd = app.add_subcommand("check-theorems", "Classify n = 3 and n = 4 and compare with the reference tables");
  add_search(check_cmd);

  std::vector<const char*> argv;
  for (const auto& a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForVersion&) {
    out << version() << "\n";
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return exit_usage;
  }

  try {
    if (enumerate_cmd->parsed())
      return cmd_enumerate(o, out);
    if (invariants_cmd->parsed())
      return cmd_invariants(o, out);
    if (fingerprint_cmd->parsed())
      return cmd_fingerprint(o, out);
    if (classify_cmd->parsed())
      return cmd_classify(o, out, err);
    if (verify_cmd->parsed())
      return cmd_verify(o, out);
    if (check_cmd->parsed())
      return cmd_check_theorems(o, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_failed;
  }
  return exit_usage;
}

}  // namespace rbt
