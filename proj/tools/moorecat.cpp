// moorecat: evaluate reparametrizations, tensor classes and braidings, and
// run the law suites.
//
// Exit codes: 0 success, 1 a law check failed, 2 usage or input error.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "moorecat/braiding.hpp"
#include "moorecat/json_io.hpp"
#include "moorecat/lawcheck.hpp"

namespace {

using moorecat::json;

constexpr int kOk = 0;
constexpr int kLawFailure = 1;
constexpr int kUsage = 2;

struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An argument is inline JSON when it starts with '{' or '[', "-" for stdin,
// and a file path otherwise.
json load(const std::string& src) {
  std::string text;
  if (!src.empty() && (src.front() == '{' || src.front() == '[')) {
    text = src;
  } else if (src == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(src);
    if (!in) throw input_error("cannot open " + src);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw input_error("parse error in " + src + " (byte " + std::to_string(e.byte) + "): " + e.what());
  }
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

std::pair<moorecat::Length, moorecat::Length> parse_split(const std::string& s) {
  auto parts = split_list(s);
  if (parts.size() != 2) throw moorecat::usage_error("--split expects two lengths \"a,b\"");
  return {moorecat::Length::parse(parts[0]), moorecat::Length::parse(parts[1])};
}

std::vector<moorecat::PSpacePtr> load_spaces(const std::vector<std::string>& srcs) {
  std::vector<moorecat::PSpacePtr> out;
  for (const auto& s : srcs) out.push_back(moorecat::space_from_json(load(s)));
  return out;
}

bool compact = false;

void emit(const json& j) { std::cout << j.dump(compact ? -1 : 2) << '\n'; }

std::uint64_t default_seed() {
  if (const char* env = std::getenv("MOORECAT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw moorecat::usage_error("MOORECAT_SEED must be an unsigned integer");
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact reparametrization and G-space tensor calculator"};
  app.require_subcommand(1);
  app.add_flag("--json", compact, "Compact single-line JSON output");

  std::string map_src, first_src, second_src, at, split, class_src, element_src, space_src, omega_src, triple_src;
  std::string left_space_src, right_space_src;
  std::vector<std::string> spaces_src;

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a map at a rational point");
  eval_cmd->add_option("--map", map_src, "PLMap JSON")->required();
  eval_cmd->add_option("--at", at, "Point t in [0, dom]")->required();

  auto* compose_cmd = app.add_subcommand("compose", "Composite: apply --first, then --second");
  compose_cmd->add_option("--first", first_src, "PLMap JSON")->required();
  compose_cmd->add_option("--second", second_src, "PLMap JSON")->required();

  auto* tensor_cmd = app.add_subcommand("tensor", "Concatenation tensor of two maps");
  tensor_cmd->add_option("--left", first_src, "PLMap JSON")->required();
  tensor_cmd->add_option("--right", second_src, "PLMap JSON")->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "Split a map along a codomain decomposition");
  decompose_cmd->add_option("--map", map_src, "PLMap JSON")->required();
  decompose_cmd->add_option("--split", split, "Codomain split \"a,b\"")->required();

  auto* braid_cmd = app.add_subcommand("braid", "Braid a map (B2 when no split is given)");
  braid_cmd->add_option("--map", map_src, "PLMap JSON")->required();
  braid_cmd->add_option("--split", split, "Codomain split \"l1,l2\"");

  auto* braid_class_cmd = app.add_subcommand("braid-class", "Braid a binary tensor class");
  braid_class_cmd->add_option("--class", class_src, "TensorClass JSON")->required();
  braid_class_cmd->add_option("--spaces", spaces_src, "The two factor PSpaces")->required()->delimiter(',')->expected(2);

  auto* canon_cmd = app.add_subcommand("canon", "Canonicalize a representative {psi, parts}");
  canon_cmd->add_option("--triple", triple_src, "Representative JSON")->required();
  canon_cmd->add_option("--spaces", spaces_src, "Factor PSpaces (unless embedded)")->delimiter(',');

  auto* restrict_cmd = app.add_subcommand("restrict", "Restrict an element or a class along omega");
  restrict_cmd->add_option("--omega", omega_src, "PLMap JSON")->required();
  restrict_cmd->add_option("--element", element_src, "Element JSON");
  restrict_cmd->add_option("--space", space_src, "PSpace of the element");
  restrict_cmd->add_option("--class", class_src, "TensorClass JSON");
  restrict_cmd->add_option("--spaces", spaces_src, "Factor PSpaces of the class")->delimiter(',');

  auto* colim_cmd = app.add_subcommand("colim", "Colimit of a PSpace, or the class of an element");
  colim_cmd->add_option("--space", space_src, "PSpace JSON")->required();
  colim_cmd->add_option("--element", element_src, "Element to classify");

  std::string suite = "all";
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  moorecat::RandomProfile profile;
  auto* check_cmd = app.add_subcommand("check", "Run law suites");
  check_cmd->add_option("--suite", suite, "Suite name or \"all\"");
  auto* seed_opt = check_cmd->add_option("--seed", seed, "Generator seed (default: $MOORECAT_SEED or 0)");
  auto* cases_opt = check_cmd->add_option("--cases", cases, "Cases per check (default: per-suite)");
  check_cmd->add_option("--denominator-bound", profile.denominator_bound, "Breakpoint grid denominator")
      ->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 30));

  auto* witness_cmd = app.add_subcommand("witness", "Emit the non-naturality report of the braiding");
  witness_cmd->add_option("--spaces", spaces_src, "Factor PSpaces D,E (default Free(1,{u}) twice)")->delimiter(',')->expected(2);
  witness_cmd->add_option("--omega", omega_src, "PLMap JSON (default: the fixture omega)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  using namespace moorecat;
  try {
    if (*eval_cmd) {
      emit(eval(plmap_from_json(load(map_src)), Rational::parse(at)).str());
    } else if (*compose_cmd) {
      emit(to_json(compose(plmap_from_json(load(first_src)), plmap_from_json(load(second_src)))));
    } else if (*tensor_cmd) {
      emit(to_json(tensor_map(plmap_from_json(load(first_src)), plmap_from_json(load(second_src)))));
    } else if (*decompose_cmd) {
      const auto [a, b] = parse_split(split);
      const auto [f1, f2] = decompose_map(plmap_from_json(load(map_src)), a, b);
      emit(json::array({to_json(f1), to_json(f2)}));
    } else if (*braid_cmd) {
      const PLMap f = plmap_from_json(load(map_src));
      if (split.empty()) {
        emit(to_json(braid2(f)));
      } else {
        const auto [a, b] = parse_split(split);
        emit(to_json(braid_map(f, a, b)));
      }
    } else if (*braid_class_cmd) {
      emit(to_json(braid_class(class_from_json(load(class_src), load_spaces(spaces_src)))));
    } else if (*canon_cmd) {
      emit(to_json(canonicalize(raw_triple_from_json(load(triple_src), load_spaces(spaces_src)))));
    } else if (*restrict_cmd) {
      const PLMap omega = plmap_from_json(load(omega_src));
      if (!element_src.empty()) {
        if (space_src.empty()) throw usage_error("restrict --element needs --space");
        const PSpacePtr d = space_from_json(load(space_src));
        const Element x = element_from_json(load(element_src));
        validate_element(*d, x);
        emit(to_json(restrict(x, omega)));
      } else if (!class_src.empty()) {
        emit(to_json(restrict_class(class_from_json(load(class_src), load_spaces(spaces_src)), omega)));
      } else {
        throw usage_error("restrict needs --element or --class");
      }
    } else if (*colim_cmd) {
      const Colimit c = colimit(space_from_json(load(space_src)));
      if (!element_src.empty()) {
        const ColimitPoint p = c.classify(element_from_json(load(element_src)));
        emit({{"cell", p.cell}, {"label", p.label}});
      } else {
        json pts = json::array();
        for (const auto& p : c.points) pts.push_back({{"cell", p.cell}, {"label", p.label}});
        emit(pts);
      }
    } else if (*check_cmd) {
      if (!*seed_opt) seed = default_seed();
      std::optional<std::size_t> n;
      if (*cases_opt) n = cases;
      const auto report = lawcheck::run(suite, seed, n, profile);
      for (const auto& s : report.suites)
        std::cerr << (s.passed() ? "PASS " : "FAIL ") << s.name << " (" << s.checks.size() << " checks)\n";
      emit(lawcheck::to_json(report));
      return report.passed() ? kOk : kLawFailure;
    } else if (*witness_cmd) {
      std::vector<PSpacePtr> fs;
      if (spaces_src.empty()) fs = {lawcheck::unit_free_space(), lawcheck::unit_free_space()};
      else fs = load_spaces(spaces_src);
      std::optional<PLMap> omega;
      if (!omega_src.empty()) omega = plmap_from_json(load(omega_src));
      else if (spaces_src.empty()) omega = lawcheck::fixture_omega();
      emit(to_json(naturality_witness(fs[0], fs[1], omega)));
    }
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const validation_error& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kUsage;
  } catch (const moorecat::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}
