// wproj: build and verify the Saito structures of P(1, w_1, ..., w_n).
//
// Exit status: 0 when every selected check passes, 1 when one fails,
// 2 on bad input.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wproj/report.hpp"

namespace {

constexpr int kInputError = 2;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!item.empty()) out.push_back(item);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Saito structures and mirror checks for weighted projective spaces P(1,w1,...,wn)"};
  std::string weights_text;
  std::string format = "text";
  std::string verify = "all";
  std::optional<std::size_t> sweep;
  unsigned threads = 0;
  bool timings = false;

  app.add_option("weights", weights_text, "comma-separated weights, first one 1 (e.g. 1,2,2)");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "latex", "text"}));
  app.add_option("--verify", verify, "'all', or a comma-separated list of groups or check-name prefixes");
  app.add_option("--sweep", sweep, "verify every weight vector with mu <= MU instead of a single one");
  app.add_option("--threads", threads, "worker threads for --sweep (0: all cores)");
  app.add_flag("--timings", timings, "include per-stage timings (output is then not reproducible)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  wproj::ReportOptions options;
  options.timings = timings;
  if (verify != "all") options.verify = split_list(verify);

  try {
    if (sweep) {
      if (!weights_text.empty()) throw wproj::InputError("give either weights or --sweep, not both");
      const wproj::SweepReport result = wproj::run_sweep(*sweep, options, threads);
      std::cout << (format == "json" ? wproj::emit_json(result) : wproj::emit_text(result));
      return result.passed() ? 0 : 1;
    }
    if (weights_text.empty()) throw wproj::InputError("missing weights (e.g. wproj 1,2,2)");
    const wproj::Report report = wproj::run_report(wproj::parse_weights(weights_text), options);
    if (format == "json") std::cout << wproj::emit_json(report);
    else if (format == "latex") std::cout << wproj::emit_latex(report);
    else std::cout << wproj::emit_text(report);
    return report.passed() ? 0 : 1;
  } catch (const wproj::InputError& e) {
    std::cerr << "wproj: error: " << e.what() << "\n";
    return kInputError;
  }
}
