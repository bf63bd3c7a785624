#include <pgate_cli/commands.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

namespace fs = std::filesystem;
using namespace pgate::cli;

namespace {

struct Job {
  std::string name;
  std::string text;
  std::string read_error;
  Report report;
};

bool read_file(const fs::path& p, std::string& out) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return false;
  out.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  return true;
}

// Errors outrank verdicts so a broken file is never hidden behind an
// obstruction elsewhere in the batch.
int combine(int a, int b) {
  auto rank = [](int c) {
    switch (c) {
      case kValidationError:
        return 5;
      case kParseError:
        return 4;
      case kFailure:
        return 3;
      case kObstructed:
        return 2;
      default:
        return c == kSuccess ? 0 : 3;
    }
  };
  return rank(b) > rank(a) ? b : a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free 2-periodicity obstruction from hyperbolic torsion"};
  std::string command_name, input;
  bool as_json = false;
  std::uint64_t seed = pgate::FactorOptions{}.seed;
  std::string lift = "both";
  unsigned jobs = 0;

  app.add_option("command", command_name, "torsion | obstruct | factor | cover")
      ->required()
      ->check(CLI::IsMember({"torsion", "obstruct", "factor", "cover"}));
  app.add_option("--input,-i", input, "JSON input file, or a directory for batch mode");
  app.add_flag("--json", as_json, "Emit machine-readable JSON");
  app.add_option("--seed", seed, "Seed for randomized factoring internals");
  app.add_option("--lift", lift, "Lift(s) to test: plus, minus or both")
      ->check(CLI::IsMember({"plus", "minus", "both"}));
  app.add_option("--jobs,-j", jobs, "Worker threads in batch mode (default: hardware)");
  app.set_version_flag("--version", version());

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kParseError;
  }

  const Command command = parse_command(command_name);
  Options options;
  options.factor.seed = seed;
  options.lift = lift == "plus" ? pgate::LiftSelection::Plus
                 : lift == "minus" ? pgate::LiftSelection::Minus
                                   : pgate::LiftSelection::Both;

  std::vector<Job> batch;
  bool directory = false;
  if (input.empty() || input == "-") {
    Job j{"<stdin>", {}, {}, {}};
    j.text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    batch.push_back(std::move(j));
  } else if (fs::is_directory(input)) {
    directory = true;
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(input)) {
      if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) batch.push_back({f.filename().string(), {}, {}, {}});
    for (std::size_t i = 0; i < files.size(); ++i) {
      if (!read_file(files[i], batch[i].text)) batch[i].read_error = "cannot read file";
    }
  } else {
    Job j{fs::path(input).filename().string(), {}, {}, {}};
    if (!read_file(input, j.text)) {
      std::cerr << "periodicity-gate: cannot read " << input << "\n";
      return kFailure;
    }
    batch.push_back(std::move(j));
  }

  auto process = [&](Job& j) {
    if (!j.read_error.empty()) {
      j.report.exit_code = kFailure;
      j.report.json = {{"input", j.name}, {"error", {{"kind", "io"}, {"message", j.read_error}}}};
      j.report.text = j.name + ": " + j.read_error + "\n";
      return;
    }
    // Documents without a name take the file stem.
    std::string stem = j.name == "<stdin>" ? "" : fs::path(j.name).stem().string();
    j.report = run(command, j.text, options, stem);
  };

  const unsigned workers =
      std::max(1u, std::min<unsigned>(jobs ? jobs : std::thread::hardware_concurrency(),
                                      static_cast<unsigned>(batch.size())));
  if (workers <= 1) {
    for (auto& j : batch) process(j);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i; (i = next++) < batch.size();) process(batch[i]);
      });
    }
    for (auto& t : pool) t.join();
  }

  int code = kSuccess;
  for (const auto& j : batch) code = combine(code, j.report.exit_code);

  if (as_json) {
    if (directory) {
      nlohmann::ordered_json out = nlohmann::ordered_json::array();
      for (const auto& j : batch) {
        out.push_back({{"file", j.name}, {"exit_code", j.report.exit_code}, {"report", j.report.json}});
      }
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << batch.front().report.json.dump(2) << "\n";
    }
  } else {
    for (const auto& j : batch) {
      std::ostream& os = j.report.exit_code == kParseError || j.report.exit_code == kValidationError ||
                                 j.report.exit_code == kFailure
                             ? std::cerr
                             : std::cout;
      os << j.report.text;
    }
  }
  return code;
}
