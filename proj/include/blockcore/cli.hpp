#pragma once

// Command line front end. Every subcommand resolves to a single library
// call; the CLI does no arithmetic of its own. Output is buffered and
// written in one piece so errors never leave a partial payload behind.
//
// Exit status: 0 on success, 1 for domain errors raised by the library,
// 2 for malformed arguments.

#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "blockcore/blocks.hpp"
#include "blockcore/counting.hpp"
#include "blockcore/partition.hpp"
#include "blockcore/tables.hpp"

namespace blockcore::cli {

constexpr int kSchemaVersion = 1;

namespace detail {

using json = nlohmann::ordered_json;

// Malformed arguments that CLI11 cannot see (wrong arity or non-numeric
// values behind --fn).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline json make_record(const std::string& command, json inputs, json results) {
  json record;
  record["schema_version"] = kSchemaVersion;
  record["command"] = command;
  record["inputs"] = std::move(inputs);
  record["results"] = std::move(results);
  return record;
}

inline long long parse_int_arg(const std::string& token, const std::string& context) {
  bool negative = false;
  std::size_t i = 0;
  if (!token.empty() && (token[0] == '-' || token[0] == '+')) {
    negative = token[0] == '-';
    i = 1;
  }
  if (i == token.size())
    throw UsageError(context + ": expected an integer, got '" + token + "'");
  long long value = 0;
  for (; i < token.size(); ++i) {
    const char c = token[i];
    if (c < '0' || c > '9')
      throw UsageError(context + ": expected an integer, got '" + token + "'");
    if (value > 100000000)
      throw UsageError(context + ": value out of range: '" + token + "'");
    value = value * 10 + (c - '0');
  }
  return negative ? -value : value;
}

inline std::string opt_text(const std::optional<int>& v) {
  return v ? std::to_string(*v) : "-";
}

inline std::string degrees_text(const std::vector<long long>& degrees) {
  if (degrees.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(degrees[i]);
  }
  return out;
}

inline json block_to_json(const BlockDescriptor& b) {
  json j;
  j["family"] = family_name(b.family);
  j["n"] = b.n;
  j["p"] = b.p;
  j["core"] = core_text(b);
  j["weight"] = b.weight;
  if (!is_spin(b.family)) j["self_conjugate"] = b.self_conjugate;
  if (b.sign) j["sign"] = *b.sign;
  if (b.defect) j["defect"] = *b.defect;
  if (b.l) j["l"] = b.l->get_str();
  return j;
}

inline std::string block_to_tsv(const BlockDescriptor& b) {
  std::string line = family_name(b.family);
  line += '\t';
  line += std::to_string(b.n) + '\t' + std::to_string(b.p) + '\t';
  line += core_text(b) + '\t' + std::to_string(b.weight) + '\t';
  line += is_spin(b.family) ? "-" : (b.self_conjugate ? "true" : "false");
  line += '\t';
  line += opt_text(b.sign) + '\t' + opt_text(b.defect) + '\t';
  line += b.l ? b.l->get_str() : "-";
  return line;
}

inline json hit_to_json(const ClassificationHit& h) {
  json j;
  j["case"] = case_name(h.case_id);
  j["group"] = h.group;
  j["n"] = h.n;
  j["p"] = h.p;
  if (h.core) j["core"] = *h.core;
  if (h.weight) j["weight"] = *h.weight;
  if (h.sign) j["sign"] = *h.sign;
  j["defect"] = h.defect;
  j["l"] = h.l.get_str();
  if (!h.degrees.empty()) j["degrees"] = h.degrees;
  j["multiplicity"] = h.multiplicity;
  return j;
}

inline std::string hit_to_tsv(const ClassificationHit& h) {
  std::string line = case_name(h.case_id);
  line += '\t';
  line += h.group + '\t' + std::to_string(h.n) + '\t' + std::to_string(h.p) + '\t';
  line += (h.core ? *h.core : "-") + '\t';
  line += opt_text(h.weight) + '\t' + opt_text(h.sign) + '\t';
  line += std::to_string(h.defect) + '\t' + h.l.get_str() + '\t';
  line += degrees_text(h.degrees) + '\t' + std::to_string(h.multiplicity);
  return line;
}

inline json table_row_to_json(const TableRow& row) {
  json j;
  j["group"] = row.group_label;
  j["p"] = row.p;
  j["degrees"] = row.ibr_degrees;
  j["defect"] = row.defect;
  j["lift_profile"] = lift_profile_name(row.lift_profile);
  j["multiplicity"] = row.multiplicity;
  j["note"] = row.note;
  return j;
}

inline std::string cache_file_path() {
  const char* dir = std::getenv("BLOCKCORE_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return {};
  return std::string(dir) + "/counts.bin";
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  using detail::json;

  CLI::App app{"p-block combinatorics of symmetric and alternating groups "
               "and their double covers",
               "blockcore"};
  app.require_subcommand(1);

  std::string format = "json";
  auto add_format = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "tsv"}));
  };

  std::string partition_text;
  int p_value = 0;
  bool bar = false;
  CLI::App* cmd_core = app.add_subcommand("core", "p-core (or p-bar-core) of a partition");
  cmd_core->add_option("--partition", partition_text, "partition, e.g. \"4,2,1\"")
      ->required();
  cmd_core->add_option("--p", p_value, "the prime / modulus p")->required();
  cmd_core->add_flag("--bar", bar, "treat the input as a strict partition and remove p-bars");
  add_format(cmd_core);

  CLI::App* cmd_quotient = app.add_subcommand("quotient", "p-core and p-quotient of a partition");
  cmd_quotient->add_option("--partition", partition_text, "partition, e.g. \"4,2,1\"")
      ->required();
  cmd_quotient->add_option("--p", p_value, "the modulus p")->required();
  add_format(cmd_quotient);

  std::string count_fn;
  std::vector<std::string> count_args;
  CLI::App* cmd_count = app.add_subcommand("count", "evaluate a counting function");
  cmd_count->add_option("--fn", count_fn, "one of p|k|ksym|lSn|lAn|lAn2")
      ->required()
      ->check(CLI::IsMember({"p", "k", "ksym", "lSn", "lAn", "lAn2"}));
  cmd_count->add_option("args", count_args, "integer arguments of the function");
  add_format(cmd_count);

  std::string family;
  int n_value = 0;
  CLI::App* cmd_blocks = app.add_subcommand("blocks", "list the p-blocks of one group");
  cmd_blocks->add_option("--family", family, "Sn, An or SpinAn")
      ->required()
      ->check(CLI::IsMember({"Sn", "An", "SpinAn"}));
  cmd_blocks->add_option("--n", n_value, "degree n")->required();
  cmd_blocks->add_option("--p", p_value, "the prime p")->required();
  add_format(cmd_blocks);

  CLI::App* cmd_classify = app.add_subcommand("classify", "single-orbit blocks for (n, p)");
  cmd_classify->add_option("--n", n_value, "degree n")->required();
  cmd_classify->add_option("--p", p_value, "the prime p")->required();
  add_format(cmd_classify);

  std::string case_token;
  int max_n = 0;
  int jobs = 1;
  CLI::App* cmd_search = app.add_subcommand("search", "degrees at which a case occurs");
  cmd_search->add_option("--case", case_token, "alt1 or spin2")
      ->required()
      ->check(CLI::IsMember({"alt1", "spin2"}));
  cmd_search->add_option("--max-n", max_n, "largest degree to scan")->required();
  cmd_search->add_option("--jobs", jobs, "worker threads (output is identical for any value)")
      ->check(CLI::PositiveNumber);
  add_format(cmd_search);

  std::string which;
  std::string export_path;
  CLI::App* cmd_tables = app.add_subcommand("tables", "fixed sporadic / exceptional block data");
  cmd_tables->add_option("--which", which, "sporadic or exceptional")
      ->required()
      ->check(CLI::IsMember({"sporadic", "exceptional"}));
  cmd_tables->add_option("--export", export_path, "also write the canonical record file");
  add_format(cmd_tables);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("blockcore");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "blockcore: " << e.what() << "\n";
    return 2;
  }

  const std::string cache_file = detail::cache_file_path();
  if (!cache_file.empty()) count_cache().load(cache_file);

  std::string payload;
  const bool tsv = (format == "tsv");

  try {
    if (*cmd_core) {
      json inputs;
      json results;
      std::string tsv_line;
      if (bar) {
        const BarPartition lam = BarPartition::from_text(partition_text);
        const BarPartition core = p_bar_core(lam, p_value);
        const long long weight = (lam.size() - core.size()) / p_value;
        inputs = {{"partition", lam.to_text()}, {"p", p_value}, {"bar", true}};
        results = {{"core", core.to_text()}, {"weight", weight}};
        tsv_line = core.to_text() + '\t' + std::to_string(weight);
      } else {
        const Partition lam = Partition::from_text(partition_text);
        const Partition core = p_core(lam, p_value);
        const long long weight = (lam.size() - core.size()) / p_value;
        inputs = {{"partition", lam.to_text()}, {"p", p_value}, {"bar", false}};
        results = {{"core", core.to_text()}, {"weight", weight}};
        tsv_line = core.to_text() + '\t' + std::to_string(weight);
      }
      payload = tsv ? tsv_line + '\n'
                    : detail::make_record("core", inputs, results).dump(2) + '\n';
    } else if (*cmd_quotient) {
      const Partition lam = Partition::from_text(partition_text);
      const CoreQuotient cq = p_quotient(lam, p_value);
      json inputs = {{"partition", lam.to_text()}, {"p", p_value}};
      json quotient = json::array();
      std::string joined;
      for (std::size_t i = 0; i < cq.quotient.size(); ++i) {
        quotient.push_back(cq.quotient[i].to_text());
        if (i) joined += '|';
        joined += cq.quotient[i].to_text();
      }
      json results = {{"core", cq.core.to_text()},
                      {"quotient", std::move(quotient)},
                      {"weight", cq.weight}};
      payload = tsv ? cq.core.to_text() + '\t' + joined + '\t' +
                          std::to_string(cq.weight) + '\n'
                    : detail::make_record("quotient", inputs, results).dump(2) + '\n';
    } else if (*cmd_count) {
      auto arity = [&](std::size_t expected) {
        if (count_args.size() != expected)
          throw detail::UsageError("count: --fn " + count_fn + " takes " +
                                   std::to_string(expected) + " argument(s), got " +
                                   std::to_string(count_args.size()));
      };
      auto arg = [&](std::size_t i) -> int {
        const long long v = detail::parse_int_arg(
            count_args[i], "count: argument " + std::to_string(i + 1) + " of --fn " + count_fn);
        return static_cast<int>(v);
      };
      Bigint value;
      json inputs;
      inputs["fn"] = count_fn;
      if (count_fn == "p") {
        arity(1);
        value = partition_count(arg(0));
        inputs["w"] = arg(0);
      } else if (count_fn == "k") {
        arity(2);
        value = k(arg(0), arg(1));
        inputs["a"] = arg(0);
        inputs["w"] = arg(1);
      } else if (count_fn == "ksym") {
        arity(2);
        value = k_sym(arg(0), arg(1));
        inputs["a"] = arg(0);
        inputs["w"] = arg(1);
      } else if (count_fn == "lSn") {
        arity(2);
        value = l_block_Sn(arg(0), arg(1));
        inputs["p"] = arg(0);
        inputs["w"] = arg(1);
      } else if (count_fn == "lAn") {
        arity(3);
        const std::string& sc = count_args[2];
        bool self_conjugate;
        if (sc == "1" || sc == "true")
          self_conjugate = true;
        else if (sc == "0" || sc == "false")
          self_conjugate = false;
        else
          throw detail::UsageError("count: argument 3 of --fn lAn must be 0/1/true/false");
        value = l_block_An(arg(0), arg(1), self_conjugate);
        inputs["p"] = arg(0);
        inputs["w"] = arg(1);
        inputs["self_conjugate"] = self_conjugate;
      } else {  // lAn2
        arity(1);
        value = l_block_An_p2(arg(0));
        inputs["w"] = arg(0);
      }
      json results = {{"value", value.get_str()}};
      payload = tsv ? value.get_str() + '\n'
                    : detail::make_record("count", inputs, results).dump(2) + '\n';
    } else if (*cmd_blocks) {
      std::vector<BlockDescriptor> blocks;
      if (family == "Sn")
        blocks = blocks_Sn(n_value, p_value);
      else if (family == "An")
        blocks = blocks_An(n_value, p_value);
      else
        blocks = spin_blocks_An(n_value, p_value);
      json inputs = {{"family", family}, {"n", n_value}, {"p", p_value}};
      if (tsv) {
        std::string lines;
        for (const BlockDescriptor& b : blocks) lines += detail::block_to_tsv(b) + '\n';
        payload = std::move(lines);
      } else {
        json rows = json::array();
        for (const BlockDescriptor& b : blocks) rows.push_back(detail::block_to_json(b));
        json results = {{"blocks", std::move(rows)}};
        payload = detail::make_record("blocks", inputs, results).dump(2) + '\n';
      }
    } else if (*cmd_classify) {
      const std::vector<ClassificationHit> hits = classify_single_orbit(n_value, p_value);
      json inputs = {{"n", n_value}, {"p", p_value}};
      if (tsv) {
        std::string lines;
        for (const ClassificationHit& h : hits) lines += detail::hit_to_tsv(h) + '\n';
        payload = std::move(lines);
      } else {
        json rows = json::array();
        for (const ClassificationHit& h : hits) rows.push_back(detail::hit_to_json(h));
        json results = {{"hits", std::move(rows)}};
        payload = detail::make_record("classify", inputs, results).dump(2) + '\n';
      }
    } else if (*cmd_search) {
      const CaseId case_id = (case_token == "alt1") ? CaseId::Alt1 : CaseId::Spin2;
      const std::vector<int> occurrences = first_occurrences(case_id, max_n, jobs);
      // --jobs is a scheduling knob, not an input: it is not echoed, so the
      // output is byte-identical for every worker count.
      json inputs = {{"case", case_token}, {"max_n", max_n}};
      if (tsv) {
        std::string lines;
        for (int n : occurrences) lines += std::to_string(n) + '\n';
        payload = std::move(lines);
      } else {
        json results = {{"occurrences", occurrences}};
        payload = detail::make_record("search", inputs, results).dump(2) + '\n';
      }
    } else if (*cmd_tables) {
      const std::vector<TableRow>& rows =
          (which == "sporadic") ? sporadic_rows() : exceptional_rows();
      std::string canonical;
      for (const TableRow& row : rows) canonical += to_record_line(row) + '\n';
      if (!export_path.empty()) {
        std::ofstream file(export_path, std::ios::binary | std::ios::trunc);
        if (!file || !(file << canonical))
          throw std::runtime_error("cannot write export file: " + export_path);
      }
      json inputs = {{"which", which}};
      if (!export_path.empty()) inputs["export"] = export_path;
      if (tsv) {
        payload = std::move(canonical);
      } else {
        json jrows = json::array();
        for (const TableRow& row : rows) jrows.push_back(detail::table_row_to_json(row));
        json results = {{"rows", std::move(jrows)}};
        payload = detail::make_record("tables", inputs, results).dump(2) + '\n';
      }
    }
  } catch (const detail::UsageError& e) {
    err << "blockcore: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "blockcore: error: " << e.what() << "\n";
    return 1;
  }

  out << payload;
  if (!cache_file.empty()) count_cache().save(cache_file);
  return 0;
}

}  // namespace blockcore::cli
