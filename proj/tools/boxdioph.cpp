// Command-line front-end: solve, check, gen, frobenius, verify, bounds.
//
// Exit codes for solve: 0 nonnegative, 1 integer_only, 2 infeasible,
// 3 input error. verify exits 0 when the vector is a nonnegative solution.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "boxdioph/io.hpp"

namespace fs = std::filesystem;
using namespace boxdioph;

namespace {

constexpr int kExitInputError = 3;

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string &path, const std::string &text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error(ErrorKind::Parse, "cannot write '" + path + "'");
  out << text;
}

ProblemInstance load_instance(const std::string &path) {
  try {
    return parse_instance(read_file(path));
  } catch (const Error &e) {
    throw Error(e.kind(), path + ": " + e.detail());
  }
}

int exit_code(SolveStatus s) {
  switch (s) {
  case SolveStatus::Nonnegative: return 0;
  case SolveStatus::IntegerOnly: return 1;
  case SolveStatus::IntegerInfeasible: return 2;
  }
  return kExitInputError;
}

std::pair<std::string, int> solve_to_text(const ProblemInstance &inst,
                                          bool timing) {
  const auto start = std::chrono::steady_clock::now();
  const DetailedSolve solved = solve_detailed(inst);
  ResultOptions opts;
  if (timing)
    opts.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return {dump(result_to_json(inst, solved, opts)),
          exit_code(solved.outcome.status)};
}

int run_batch(const std::string &dir, bool timing) {
  std::vector<fs::path> inputs;
  for (const auto &entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (entry.is_regular_file() && entry.path().extension() == ".json" &&
        !name.ends_with(".result.json"))
      inputs.push_back(entry.path());
  }
  std::sort(inputs.begin(), inputs.end());

  std::vector<std::future<bool>> jobs;
  for (const auto &path : inputs) {
    jobs.push_back(std::async(std::launch::async, [path, timing] {
      try {
        const auto inst = load_instance(path.string());
        const auto [text, code] = solve_to_text(inst, timing);
        fs::path out = path;
        out.replace_extension(".result.json");
        write_output(out.string(), text);
        return true;
      } catch (const std::exception &e) {
        std::cerr << e.what() << '\n';
        return false;
      }
    }));
  }
  bool ok = true;
  for (auto &j : jobs)
    ok = j.get() && ok;
  std::cerr << "processed " << inputs.size() << " instance(s)\n";
  return ok ? 0 : kExitInputError;
}

IntVector parse_vector_list(const std::string &csv) {
  IntVector v;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Integer x;
    if (item.empty() || x.set_str(item, 10) != 0)
      throw Error(ErrorKind::Parse, "'" + item + "' is not an integer");
    v.push_back(x);
  }
  return v;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Nonnegative integer solutions of A x = b by lattice box "
               "reduction"};
  app.require_subcommand(1);

  std::string input, output, batch;
  bool timing = false;

  auto *solve_cmd = app.add_subcommand("solve", "Solve an instance file");
  solve_cmd->add_option("-i,--input", input, "Instance JSON");
  solve_cmd->add_option("-o,--output", output, "Result JSON (default stdout)");
  solve_cmd->add_option("--batch", batch,
                        "Solve every *.json in a directory into *.result.json");
  solve_cmd->add_flag("--timing", timing, "Add wall-clock timing to results");

  auto *check_cmd =
      app.add_subcommand("check", "Report the sufficient conditions");
  check_cmd->add_option("-i,--input", input, "Instance JSON")->required();
  check_cmd->add_option("-o,--output", output, "Report JSON");

  auto *bounds_cmd =
      app.add_subcommand("bounds", "Print exact thresholds and approximations");
  bounds_cmd->add_option("-i,--input", input, "Instance JSON")->required();
  bounds_cmd->add_option("-o,--output", output, "Report JSON");

  GenOptions gen;
  std::string mode = "feasible";
  auto *gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--m", gen.m, "Rows")->required();
  gen_cmd->add_option("--n", gen.n, "Columns")->required();
  gen_cmd->add_option("--seed", gen.seed, "RNG seed");
  gen_cmd->add_option("--max-entry", gen.max_entry, "Bound on |a_ij|");
  gen_cmd->add_option("--mode", mode, "feasible | deep | boundary");
  gen_cmd->add_flag("--positive", gen.positive, "Draw A with positive entries");
  gen_cmd->add_option("-o,--output", output, "Instance JSON");

  std::vector<std::string> entries;
  auto *frob_cmd =
      app.add_subcommand("frobenius", "f-chain, Brauer bound and F(a)");
  frob_cmd->add_option("entries", entries, "Positive integers")->required();

  std::string solution, xs;
  auto *verify_cmd =
      app.add_subcommand("verify", "Check that x >= 0 solves A x = b");
  verify_cmd->add_option("-i,--input", input, "Instance JSON")->required();
  verify_cmd->add_option("-s,--solution", solution,
                         "JSON file with an \"x\" array (e.g. a result file)");
  verify_cmd->add_option("--x", xs, "Comma-separated solution vector");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (*solve_cmd) {
      if (!batch.empty())
        return run_batch(batch, timing);
      if (input.empty())
        throw Error(ErrorKind::Parse, "solve needs -i <file> or --batch <dir>");
      const auto [text, code] = solve_to_text(load_instance(input), timing);
      write_output(output, text);
      return code;
    }
    if (*check_cmd) {
      write_output(output, dump(check_to_json(load_instance(input))));
      return 0;
    }
    if (*bounds_cmd) {
      write_output(output, dump(bounds_to_json(load_instance(input))));
      return 0;
    }
    if (*gen_cmd) {
      gen.mode = parse_gen_mode(mode);
      write_output(output, dump(instance_to_json(generate_instance(gen))));
      return 0;
    }
    if (*frob_cmd) {
      IntVector a;
      for (const auto &s : entries)
        a.push_back(parse_vector_list(s).at(0));
      std::cout << dump(frobenius_to_json(a));
      return 0;
    }
    if (*verify_cmd) {
      const ProblemInstance inst = load_instance(input);
      IntVector x;
      if (!solution.empty()) {
        const Json j = Json::parse(read_file(solution));
        if (!j.contains("x"))
          throw Error(ErrorKind::Parse, solution + ": no \"x\" field");
        x = parse_integer_array(j.at("x"), "x");
      } else if (!xs.empty()) {
        x = parse_vector_list(xs);
      } else {
        throw Error(ErrorKind::Parse, "verify needs -s <file> or --x <list>");
      }
      const bool eq = satisfies_equations(inst.A, inst.b, x);
      const bool ok = verify(inst.A, inst.b, x);
      Json out;
      out["valid"] = ok;
      out["equations_hold"] = eq;
      out["nonnegative"] = std::all_of(
          x.begin(), x.end(), [](const Integer &v) { return sgn(v) >= 0; });
      std::cout << dump(out);
      return ok ? 0 : 1;
    }
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
