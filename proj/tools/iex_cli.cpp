// iex: command-line front end for generating families, computing small
// inclusion-exclusion formulas and checking them.
//
// Exit codes: 0 ok, 2 input, 3 empty union, 4 restarts exhausted,
//             5 validation failed, 6 resource limit.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "iex/iex.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kInput = 2,
  kEmptyUnion = 3,
  kRestarts = 4,
  kValidationFailed = 5,
  kResource = 6,
};

iex::json read_document(const std::string& path) {
  if (path == "-") return iex::parse_json(std::cin);
  std::ifstream in(path);
  if (!in) throw iex::input_error("cannot open " + path);
  return iex::parse_json(in);
}

void write_document(const iex::json& doc, const std::string& path) {
  const std::string text = iex::dump_canonical(doc);
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw iex::input_error("cannot write " + path);
  out << text;
}

iex::json ie_document(const iex::IEVector& x) {
  iex::json doc = iex::to_json(x);
  doc["l1_norm"] = iex::l1_norm(x).str();
  doc["support_size"] = x.support_size();
  return doc;
}

struct GenOptions {
  std::string family;
  std::size_t n = 0;
  std::size_t ell = 0;
  std::size_t y = 5;
  std::size_t d = 0;
  std::uint32_t q = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  std::string out;
};

int run_gen(const GenOptions& o, CLI::App& cmd) {
  auto need = [&](const char* opt) {
    if (cmd.count(opt) == 0) throw iex::input_error(std::string("gen ") + o.family + " needs " + opt);
  };
  if (o.family == "uniqueness") {
    need("--n");
    write_document(iex::to_json(iex::gen_uniqueness(o.n)), o.out);
  } else if (o.family == "exponential") {
    need("--ell");
    write_document(iex::to_json(iex::gen_exponential(o.ell, o.y)), o.out);
  } else if (o.family == "projective") {
    need("--d");
    need("--q");
    write_document(iex::to_json(iex::gen_projective(o.d, o.q).first), o.out);
  } else {
    need("--n");
    need("--m");
    write_document(iex::to_json(iex::gen_random(o.n, o.m, o.seed)), o.out);
  }
  return kOk;
}

int run_standardize(const std::string& in, const std::string& out) {
  write_document(iex::to_json(iex::venn_from_any_json(read_document(in))), out);
  return kOk;
}

int run_mobius(const std::string& in, const std::string& out) {
  const iex::VennDiagram venn = iex::venn_from_any_json(read_document(in));
  write_document(ie_document(iex::mobius_ie_vector(venn)), out);
  return kOk;
}

int run_tube(const std::string& in, const std::string& out, std::uint64_t seed,
             std::size_t max_restarts, std::size_t face_cap) {
  const iex::VennDiagram venn = iex::venn_from_any_json(read_document(in));
  const iex::TubeResult result = face_cap == 0
                                     ? iex::build_tube(venn, seed, max_restarts)
                                     : iex::build_tube_with_cap(venn, seed, max_restarts, face_cap);
  iex::json doc = ie_document(result.ie);
  iex::json perm = iex::json::array();
  for (std::size_t label : result.permutation.order()) perm.push_back(label + 1);
  doc["permutation"] = std::move(perm);
  doc["restarts"] = result.restarts;
  doc["d_bound"] = result.d_bound;
  doc["complex_size"] = result.complex.size();
  write_document(doc, out);
  return kOk;
}

int run_validate(const std::string& system_path, const std::string& vector_path,
                 std::size_t trials, std::uint64_t seed) {
  const iex::VennDiagram venn = iex::venn_from_any_json(read_document(system_path));
  const iex::IEVector x = iex::ie_vector_from_json(read_document(vector_path));
  if (x.set_count() != venn.set_count())
    throw iex::input_error("the system has n = " + std::to_string(venn.set_count()) +
                           " but the vector has n = " + std::to_string(x.set_count()));
  const iex::IeCheckReport exact = iex::check_ie_vector(venn, x);
  const iex::MeasureCheckReport measures = iex::measure_oracle_check(venn, x, trials, seed);
  for (const iex::IndexSet& s : exact.uncovered_terms)
    std::cerr << "warning: term " << s << " lies in no region\n";
  const bool pass = exact.pass && measures.pass;
  write_document(iex::json{{"pass", pass}, {"exact", iex::to_json(exact)},
                           {"measures", iex::to_json(measures)}},
                 "");
  if (!pass) std::cerr << "validation failed\n";
  return pass ? kOk : kValidationFailed;
}

int run_stats(const std::string& in, bool nerve) {
  const iex::VennDiagram venn = iex::venn_from_any_json(read_document(in));
  const iex::IEVector x = iex::mobius_ie_vector(venn);
  iex::json doc{{"n", venn.set_count()},
                {"m", venn.size()},
                {"mobius_l1", iex::l1_norm(x).str()},
                {"mobius_support", x.support_size()},
                {"max_abs_coeff", x.max_abs_coefficient().str()}};
  doc["d_bound"] = venn.size() >= 2 ? iex::json(iex::d_bound(venn.set_count(), venn.size()))
                                    : iex::json(nullptr);
  if (nerve) doc["nerve_size"] = iex::compute_nerve(venn).size();
  write_document(doc, "");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Small inclusion-exclusion formulas for finite set systems"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a named set system");
  gen_cmd->add_option("family", gen.family, "uniqueness | exponential | projective | random")
      ->required()
      ->check(CLI::IsMember({"uniqueness", "exponential", "projective", "random"}));
  gen_cmd->add_option("--n", gen.n, "Number of sets (uniqueness, random)");
  gen_cmd->add_option("--ell", gen.ell, "Block count (exponential)");
  gen_cmd->add_option("--y", gen.y, "Block width (exponential)")->capture_default_str();
  gen_cmd->add_option("--d", gen.d, "Projective dimension");
  gen_cmd->add_option("--q", gen.q, "Prime field order");
  gen_cmd->add_option("--m", gen.m, "Region count (random)");
  gen_cmd->add_option("--seed", gen.seed, "RNG seed (random)");
  gen_cmd->add_option("--out", gen.out, "Output path (default: standard output)");

  std::string in;
  std::string out;
  auto* std_cmd = app.add_subcommand("standardize", "Write the Venn diagram of a set system");
  std_cmd->add_option("input", in, "set_system or venn JSON, - for standard input")->required();
  std_cmd->add_option("--out", out, "Output path");

  auto* mob_cmd = app.add_subcommand("mobius", "Unique IE-vector supported on the Venn diagram");
  mob_cmd->add_option("input", in, "set_system or venn JSON, - for standard input")->required();
  mob_cmd->add_option("--out", out, "Output path");

  std::uint64_t seed = 0;
  std::size_t max_restarts = iex::default_max_restarts;
  auto* tube_cmd = app.add_subcommand("tube", "+-1 IE-vector from a random abstract tube");
  tube_cmd->add_option("input", in, "set_system or venn JSON, - for standard input")->required();
  tube_cmd->add_option("--out", out, "Output path");
  tube_cmd->add_option("--seed", seed, "RNG seed")->capture_default_str();
  tube_cmd->add_option("--max-restarts", max_restarts, "Permutations to try")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  std::size_t face_cap = 0;
  tube_cmd->add_option("--face-cap", face_cap, "Override the face-size bound (default: D bound)");

  std::string vector_path;
  std::size_t trials = 32;
  auto* val_cmd = app.add_subcommand("validate", "Check an IE-vector against a system");
  val_cmd->add_option("system", in, "set_system or venn JSON")->required();
  val_cmd->add_option("vector", vector_path, "ie_vector JSON")->required();
  val_cmd->add_option("--trials", trials, "Random measures to test")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  val_cmd->add_option("--seed", seed, "RNG seed for the measures")->capture_default_str();

  bool nerve = false;
  auto* stats_cmd = app.add_subcommand("stats", "Print size statistics as JSON");
  stats_cmd->add_option("input", in, "set_system or venn JSON")->required();
  stats_cmd->add_flag("--nerve", nerve, "Also count nerve faces");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*gen_cmd) return run_gen(gen, *gen_cmd);
    if (*std_cmd) return run_standardize(in, out);
    if (*mob_cmd) return run_mobius(in, out);
    if (*tube_cmd) return run_tube(in, out, seed, max_restarts, face_cap);
    if (*val_cmd) return run_validate(in, vector_path, trials, seed);
    if (*stats_cmd) return run_stats(in, nerve);
  } catch (const iex::empty_union_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kEmptyUnion;
  } catch (const iex::restarts_exhausted& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRestarts;
  } catch (const iex::resource_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kResource;
  } catch (const iex::input_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const iex::contract_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kInput;
}
