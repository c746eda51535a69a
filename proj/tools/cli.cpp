#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bruhat/bruhat.hpp"

namespace bruhat::cli {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Range {
  int lo = 0;
  int hi = 0;
};

Range parse_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw UsageError("bad n range '" + text + "' (expected N or LO..HI)");
    }
    return std::stoi(s);
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = to_int(text);
    return {n, n};
  }
  Range r{to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
  if (r.lo > r.hi) throw UsageError("empty n range '" + text + "'");
  return r;
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

/// "s2" or a bare index when the text is not itself a permutation of the
/// ambient degree.
std::optional<int> generator_index(const std::string& text, std::optional<int> degree) {
  if (text.size() > 1 && (text[0] == 's' || text[0] == 'S') && all_digits(text.substr(1))) return std::stoi(text.substr(1));
  if (!all_digits(text) || text.size() > 2) return std::nullopt;
  try {
    const Permutation p = parse_permutation(text);
    if (!degree || p.degree() == *degree) return std::nullopt;
  } catch (const std::invalid_argument&) {
  }
  return std::stoi(text);
}

bool is_generator_text(const std::string& text) { return generator_index(text, std::nullopt).has_value(); }

Permutation resolve(const std::string& text, std::optional<int> degree) {
  if (auto g = generator_index(text, degree)) {
    if (!degree) throw UsageError("cannot infer the degree of generator '" + text + "'; pass --n");
    return Permutation::generator(*degree, *g);
  }
  return parse_permutation(text);
}

/// Resolves an interval's endpoints, expanding generators to the degree of
/// --n or of the other endpoint.
std::pair<Permutation, Permutation> resolve_endpoints(const std::string& bottom, const std::string& top,
                                                      std::optional<int> n) {
  std::optional<int> degree = n;
  if (!degree && !is_generator_text(top)) degree = parse_permutation(top).degree();
  if (!degree && !is_generator_text(bottom)) degree = parse_permutation(bottom).degree();
  Permutation b = resolve(bottom, degree);
  Permutation t = resolve(top, degree);
  if (b.degree() != t.degree()) throw UsageError("bottom and top have different degrees");
  if (n && b.degree() != *n) throw UsageError("--n " + std::to_string(*n) + " does not match the permutations");
  return {b, t};
}

ordered_json report_json(const LatticeReport& r) {
  ordered_json j;
  j["lattice"] = r.is_lattice;
  j["modular"] = r.is_modular;
  j["distributive"] = r.is_distributive;
  j["boolean"] = r.is_boolean;
  j["rank"] = r.rank ? ordered_json(*r.rank) : ordered_json(nullptr);
  j["atoms"] = r.atom_count ? ordered_json(*r.atom_count) : ordered_json(nullptr);
  return j;
}

ordered_json word_json(const Word& w) { return ordered_json(w.letters); }

ordered_json big_json(const BigInt& v) {
  if (v >= 0 && v <= BigInt(std::numeric_limits<std::uint64_t>::max())) return v.convert_to<std::uint64_t>();
  return v.str();
}

ordered_json theorem_json(const TheoremReport& r) {
  ordered_json j;
  j["order"] = std::string(to_string(r.subject.kind()));
  j["bottom"] = to_string(r.subject.bottom());
  j["top"] = to_string(r.subject.top());
  j["rank"] = r.subject.rank();
  j["rule"] = r.rule;
  j["predicate"] = r.predicate ? report_json(*r.predicate) : ordered_json(nullptr);
  j["structural"] = r.structural ? report_json(*r.structural) : ordered_json(nullptr);
  const auto agree = r.agree();
  j["agree"] = agree ? ordered_json(*agree) : ordered_json(nullptr);
  if (r.witness) {
    j["witness"] = {{"left", word_json(r.witness->left)},
                    {"middle", word_json(r.witness->middle)},
                    {"right", word_json(r.witness->right)}};
  }
  return j;
}

std::string k_text(const CensusRow& row) { return row.k ? std::to_string(*row.k) : std::string(); }

void write_rows(std::ostream& out, const std::vector<CensusRow>& rows, const std::string& format, bool pretty,
                bool with_table) {
  if (pretty) {
    out << std::left;
    if (with_table) out << std::setw(8) << "table";
    out << std::setw(4) << "n" << std::setw(4) << "k" << std::setw(8) << "order" << std::setw(25) << "class"
        << std::right << std::setw(12) << "counted" << std::setw(12) << "formula" << "  match\n";
    for (const auto& r : rows) {
      out << std::left;
      if (with_table) out << std::setw(8) << r.table;
      out << std::setw(4) << r.n << std::setw(4) << k_text(r) << std::setw(8) << to_string(r.order) << std::setw(25)
          << to_string(r.cls) << std::right << std::setw(12) << r.counted.str() << std::setw(12) << r.formula.str()
          << "  " << (r.match ? "yes" : "NO") << '\n';
    }
    return;
  }
  if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json j;
      j["table"] = r.table;
      j["n"] = r.n;
      j["k"] = r.k ? ordered_json(*r.k) : ordered_json(nullptr);
      j["order"] = std::string(to_string(r.order));
      j["class"] = std::string(to_string(r.cls));
      j["counted"] = big_json(r.counted);
      j["formula"] = big_json(r.formula);
      j["match"] = r.match;
      j["method"] = std::string(to_string(r.method));
      arr.push_back(std::move(j));
    }
    out << arr.dump(2) << '\n';
    return;
  }
  if (with_table) out << "table,";
  out << "n,k,order,class,counted,formula,match\n";
  for (const auto& r : rows) {
    if (with_table) out << r.table << ',';
    out << r.n << ',' << k_text(r) << ',' << to_string(r.order) << ',' << to_string(r.cls) << ',' << r.counted.str()
        << ',' << r.formula.str() << ',' << (r.match ? "true" : "false") << '\n';
  }
}

int finish_verify(const VerifyReport& report, std::ostream& out, std::ostream& err, const std::string& format,
                  bool pretty, bool with_table) {
  write_rows(out, report.rows, format, pretty, with_table);
  for (const auto& s : report.skipped) err << "skipped " << s << '\n';
  for (const auto& d : report.disagreements) err << "disagreement: " << d << '\n';
  const auto bad = std::count_if(report.rows.begin(), report.rows.end(), [](const CensusRow& r) { return !r.match; });
  if (bad) err << bad << " row(s) do not match the formula\n";
  return report.ok() ? kExitOk : kExitMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattice, modular, distributive and boolean intervals in the symmetric group"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string order_text = "bruhat";
  std::string perm_text;
  std::string bottom_text;
  std::string top_text;
  std::optional<int> degree;
  bool structural = false;
  bool predicate_only = false;
  std::string format;
  std::string table;
  std::vector<std::string> tables;
  std::string n_text;
  std::string mode_text = "predicate";
  bool pretty = false;
  int jobs = 1;
  bool allow_s6 = false;
  bool highlight = false;
  std::string file;

  const std::vector<std::string> orders{"bruhat", "weak"};

  auto* poi = app.add_subcommand("classify-poi", "Classify the principal order ideal of a permutation");
  poi->add_option("w", perm_text, "permutation, e.g. 3412 or 3,4,1,2")->required();
  poi->add_option("--order", order_text)->check(CLI::IsMember(orders));
  poi->add_flag("--structural", structural, "also classify the extracted poset");

  auto* interval = app.add_subcommand("classify-interval", "Classify an interval [bottom, top]");
  interval->add_option("--order", order_text)->check(CLI::IsMember(orders));
  interval->add_option("--bottom", bottom_text, "permutation, or generator as s2 / 2")->required();
  interval->add_option("--top", top_text)->required();
  interval->add_option("--n", degree, "ambient degree for generator input");
  interval->add_flag("--predicate-only", predicate_only, "skip the structural classification");

  auto* words = app.add_subcommand("reduced-words", "List all reduced words of a permutation");
  words->add_option("w", perm_text)->required();
  words->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* census = app.add_subcommand("census", "Count one table and compare with the closed forms");
  census->add_option("--table", table)->required()->check(CLI::IsMember(census_tables()));
  census->add_option("--n", n_text, "N or LO..HI")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run every census table over a range of n");
  verify_cmd->add_option("--n", n_text, "N or LO..HI")->required();
  verify_cmd->add_option("--table", tables, "restrict to these tables")->check(CLI::IsMember(census_tables()));

  for (auto* cmd : {census, verify_cmd}) {
    cmd->add_option("--mode", mode_text)->check(CLI::IsMember({"predicate", "structural", "both"}));
    cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    cmd->add_flag("--pretty", pretty, "aligned human-readable table");
    cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_flag("--allow-s6", allow_s6, "permit structural sweeps of S6");
  }

  auto* hasse = app.add_subcommand("hasse", "Emit the Hasse diagram of an interval as DOT");
  hasse->add_option("--order", order_text)->check(CLI::IsMember(orders));
  hasse->add_option("--bottom", bottom_text)->required();
  hasse->add_option("--top", top_text)->required();
  hasse->add_option("--n", degree);
  hasse->add_flag("--highlight-support", highlight, "mark elements boolean over their support");

  auto* poset_cmd = app.add_subcommand("classify-poset", "Classify a poset given as a cover list file");
  poset_cmd->add_option("file", file)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const OrderKind order = parse_order_kind(order_text);
    if (*poi) {
      const Permutation w = parse_permutation(perm_text);
      ordered_json j;
      j["permutation"] = to_string(w);
      j["order"] = order_text;
      j["canonical_word"] = word_json(canonical_word(w));
      j["predicate"] = report_json(order == OrderKind::Bruhat ? poi_bruhat_class(w) : poi_weak_class(w));
      if (structural) j["structural"] = report_json(classify(principal_order_ideal(w, order)));
      out << j.dump(2) << '\n';
      return kExitOk;
    }
    if (*interval) {
      auto [b, t] = resolve_endpoints(bottom_text, top_text, degree);
      const auto report = theorem_report(IntervalSpec(b, t, order), !predicate_only);
      out << theorem_json(report).dump(2) << '\n';
      return report.agree().value_or(true) ? kExitOk : kExitMismatch;
    }
    if (*words) {
      const Permutation w = parse_permutation(perm_text);
      const auto list = reduced_words(w);
      if (format == "text") {
        for (const auto& word : list) out << to_string(word) << '\n';
      } else {
        ordered_json j;
        j["permutation"] = to_string(w);
        j["count"] = list.size();
        j["words"] = ordered_json::array();
        for (const auto& word : list) j["words"].push_back(word_json(word));
        out << j.dump(2) << '\n';
      }
      return kExitOk;
    }
    if (*census || *verify_cmd) {
      const Range range = parse_range(n_text);
      if (range.lo < 2) throw UsageError("n must be at least 2");
      CensusOptions options;
      options.jobs = jobs;
      if (allow_s6) options.structural_cap = 6;
      const VerifyMode mode = parse_verify_mode(mode_text);
      const int cap = mode == VerifyMode::Predicate ? options.predicate_cap
                      : mode == VerifyMode::Structural ? options.structural_cap
                                                       : options.predicate_cap;
      if (range.hi > cap) {
        throw UsageError("n = " + std::to_string(range.hi) + " exceeds the cap of " + std::to_string(cap) +
                         " for mode " + mode_text);
      }
      const auto selected = *census ? std::vector<std::string>{table} : tables.empty() ? census_tables() : tables;
      const auto report = verify(range.lo, range.hi, mode, selected, options);
      return finish_verify(report, out, err, format.empty() ? "csv" : format, pretty, static_cast<bool>(*verify_cmd));
    }
    if (*hasse) {
      auto [b, t] = resolve_endpoints(bottom_text, top_text, degree);
      out << emit_hasse(IntervalSpec(b, t, order), HasseOptions{highlight});
      return kExitOk;
    }
    if (*poset_cmd) {
      std::ifstream in(file);
      if (!in) throw UsageError("cannot open '" + file + "'");
      const auto poset = read_cover_list(in);
      ordered_json j;
      j["file"] = file;
      j["size"] = poset.size();
      j["bounded"] = poset.bounded();
      j["report"] = report_json(classify(poset));
      out << j.dump(2) << '\n';
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace bruhat::cli
