#include "foldse_cli/cli.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "foldse/dataset.hpp"
#include "foldse/eval.hpp"
#include "foldse/format.hpp"
#include "foldse/learner.hpp"
#include "foldse/program.hpp"

namespace foldse::cli {
namespace {

struct Config {
  std::string data;
  std::string model;
  std::vector<std::string> numeric;
  std::string label;
  std::string positive;
  double ratio = 0.5;
  std::string tail = "0.5%";
  std::size_t folds = 10;
  std::uint64_t seed = 1;
  std::string output;
  bool multiclass = false;
  bool english = false;
  bool timing = false;
  std::size_t row = 0;
  std::string subject = "X";
};

void add_data_options(CLI::App& cmd, Config& c) {
  cmd.add_option("--data", c.data, "CSV file with a header row")->required()->check(CLI::ExistingFile);
  cmd.add_option("--label", c.label, "name of the class column")->required();
  cmd.add_option("--numeric", c.numeric, "comma-separated numeric feature columns")->delimiter(',');
  cmd.add_option("--positive", c.positive, "class the binary rules target (default: majority label)");
}

void add_learning_options(CLI::App& cmd, Config& c) {
  cmd.add_option("--ratio", c.ratio, "exception ratio threshold")->check(CLI::NonNegativeNumber);
  cmd.add_option("--tail", c.tail, "minimum rule coverage, N examples or P% of the training set")
      ->check([](const std::string& text) -> std::string {
        try {
          Tail::parse(text);
        } catch (const Error& e) {
          return e.what();
        }
        return {};
      });
  cmd.add_flag("--multiclass", c.multiclass, "force multi-class training");
}

Hyperparams hyperparams(const Config& c) { return {c.ratio, Tail::parse(c.tail)}; }

Dataset load_training(const Config& c) {
  CsvOptions o{c.numeric, c.label, std::nullopt};
  if (!c.positive.empty()) o.positive_class = c.positive;
  return load_csv(c.data, o);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("write failed: " + path);
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

int cmd_train(const Config& c, std::ostream& out) {
  const Dataset ds = load_training(c);
  const TrainedModel m = train(ds, hyperparams(c), c.multiclass ? std::optional<bool>(true) : std::nullopt);
  write_text(c.model, serialize(m.program));
  const ProgramSize size = count_program(m.program);
  out << "rules: " << size.rules << "\npredicates: " << size.predicates << "\n";
  char ms[32];
  std::snprintf(ms, sizeof ms, "%.1f", m.train_ms);
  out << "train_ms: " << ms << "\n";
  return kOk;
}

int cmd_predict(const Config& c, std::ostream& out) {
  const Program p = parse_program(read_text(c.model));
  const Dataset ds = load_csv_for_schema(c.data, p.schema);
  std::string text = "row,prediction\n";
  for (std::size_t i = 0; i < ds.size(); ++i) {
    text += std::to_string(i) + "," + csv_cell(evaluate(p, ds[i].values).str()) + "\n";
  }
  if (c.output.empty()) {
    out << text;
  } else {
    write_text(c.output, text);
  }
  return kOk;
}

int cmd_explain(const Config& c, std::ostream& out) {
  const Program p = parse_program(read_text(c.model));
  const Dataset ds = load_csv_for_schema(c.data, p.schema);
  if (c.row >= ds.size()) {
    throw Error("row " + std::to_string(c.row) + " out of range; data has " + std::to_string(ds.size()) + " rows");
  }
  const auto js = justify(p, ds[c.row].values);
  out << (c.english ? render_english(p, js, c.subject) : render_json(p, js, c.subject) + "\n");
  return kOk;
}

int cmd_eval(const Config& c, std::ostream& out) {
  const Dataset ds = load_training(c);
  CvOptions o;
  o.folds = c.folds;
  o.seed = c.seed;
  o.hp = hyperparams(c);
  if (c.multiclass) o.multiclass = true;
  const CvReport r = cross_validate(ds, o);
  out << report_text(r, c.timing);
  if (!c.output.empty()) write_text(c.output, report_jsonl(r, c.timing));
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Rule learning with exceptions for tabular data", "foldse"};
  app.require_subcommand(1);

  CLI::App* train_cmd = app.add_subcommand("train", "learn a rule program from a CSV file");
  add_data_options(*train_cmd, c);
  add_learning_options(*train_cmd, c);
  train_cmd->add_option("--model", c.model, "where to write the program")->required();

  CLI::App* predict_cmd = app.add_subcommand("predict", "classify every row of a CSV file");
  predict_cmd->add_option("--model", c.model, "program file")->required()->check(CLI::ExistingFile);
  predict_cmd->add_option("--data", c.data, "CSV file")->required()->check(CLI::ExistingFile);
  predict_cmd->add_option("--output", c.output, "write predictions here instead of stdout");

  CLI::App* explain_cmd = app.add_subcommand("explain", "justify the prediction for one row");
  explain_cmd->add_option("--model", c.model, "program file")->required()->check(CLI::ExistingFile);
  explain_cmd->add_option("--data", c.data, "CSV file")->required()->check(CLI::ExistingFile);
  explain_cmd->add_option("--row", c.row, "zero-based data row")->required();
  explain_cmd->add_flag("--english", c.english, "plain-English proof instead of JSON");
  explain_cmd->add_option("--subject", c.subject, "name used in place of X");

  CLI::App* eval_cmd = app.add_subcommand("eval", "k-fold cross-validation");
  add_data_options(*eval_cmd, c);
  add_learning_options(*eval_cmd, c);
  eval_cmd->add_option("--folds", c.folds, "number of folds")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 32));
  eval_cmd->add_option("--seed", c.seed, "shuffle seed");
  eval_cmd->add_option("--output", c.output, "also write line-delimited JSON records here");
  eval_cmd->add_flag("--timing", c.timing, "include fit times (makes reports run-dependent)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (train_cmd->parsed()) return cmd_train(c, out);
    if (predict_cmd->parsed()) return cmd_predict(c, out);
    if (explain_cmd->parsed()) return cmd_explain(c, out);
    return cmd_eval(c, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kRuntimeError;
  }
}

}  // namespace foldse::cli
