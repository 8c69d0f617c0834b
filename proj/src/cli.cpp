#include "workbench/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "workbench/error.hpp"
#include "workbench/serialize.hpp"

namespace workbench {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FiniteGroup load_group(const std::string& src) {
  constexpr std::string_view prefix = "preset:";
  if (src.rfind(prefix, 0) == 0) return preset_group(src.substr(prefix.size()));
  return group_from_json(parse_json_text(read_file(src), src));
}

AModFamily load_family(const std::string& path, const TargetCategoryReport& report) {
  return family_from_json(parse_json_text(read_file(path), path), report);
}

void print_group_info(std::ostream& out, const FiniteGroup& g, const std::vector<CyclicClass>& classes) {
  out << "group: " << g.name() << "\n";
  out << "order: " << g.order() << "\n";
  out << "abelian: " << (g.is_abelian() ? "yes" : "no") << "\n";
  out << "element orders:";
  for (int a = 0; a < g.order(); ++a) out << " " << g.label(a) << ":" << g.element_order(a);
  out << "\n";
  out << "cyclic classes: " << classes.size() << "\n";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& c = classes[i];
    out << "  [" << i << "] n=" << c.representative.n << " generator=" << g.label(c.representative.generator)
        << " class_size=" << c.class_size << " |N|=" << c.normalizer.size() << " |W|=" << c.weyl_order
        << " units=[";
    for (std::size_t k = 0; k < c.weyl_units.size(); ++k) out << (k ? "," : "") << c.weyl_units[k];
    out << "]\n";
  }
}

void print_target_category(std::ostream& out, const TargetCategoryReport& r) {
  out << "group: " << r.group_name << " (order " << r.group_order << ", N = " << r.N << ")\n";
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    const auto& e = r.classes[i];
    out << "class " << i << ": n=" << e.cls.representative.n << " |W|=" << e.cls.weyl_order << " ring "
        << e.ring->label() << "\n";
    for (const auto& s : e.summands)
      out << "  " << summand_kind_name(s.kind) << " " << s.label() << " x" << s.multiplicity << "\n";
  }
  out << "summand index:\n";
  const auto flat = r.flattened();
  for (std::size_t i = 0; i < flat.size(); ++i)
    out << "  " << i << ": " << r.summand(flat[i]).label() << " (class " << flat[i].class_index << ", summand "
        << flat[i].summand_index << ", copy " << flat[i].copy << ")\n";
  out << summand_summary(r) << "\n";
}

void print_suite(std::ostream& out, const SuiteReport& r) {
  out << "suite: " << r.suite << "\n";
  out << "max-n: " << r.bound << "\n";
  out << "seed: " << r.seed << "\n";
  out << "items: " << r.items << "\n";
  out << "checked: " << r.checked << "\n";
  out << "result: " << (r.passed ? "PASS" : "FAIL") << "\n";
  if (!r.passed) out << "counterexample: " << r.counterexample << "\n";
}

void print_uct(std::ostream& out, const std::string& group, const UCTOrderResult& r) {
  out << "group: " << group << "\n";
  for (int d = 0; d < 2; ++d)
    out << "degree " << d << ": hom " << r.degree[d].hom.to_string() << ", ext " << r.degree[d].ext.to_string()
        << ", kk order " << r.degree[d].kk_order << "\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact workbench for the equivariant UCT target category of a finite group"};
  app.name("workbench");
  app.require_subcommand(1);

  std::string src;
  bool json = false;

  auto* info = app.add_subcommand("group-info", "Element orders and conjugacy classes of cyclic subgroups");
  info->add_option("src", src, "preset:<name> or a group JSON file")->required();
  info->add_flag("--json", json, "Emit JSON");

  auto* target = app.add_subcommand("target-category", "Ring summands of the target category");
  target->add_option("src", src, "preset:<name> or a group JSON file")->required();
  target->add_flag("--json", json, "Emit JSON");

  std::string suite;
  unsigned max_n = 1;
  std::uint64_t seed = 0;
  bool serial = false;
  auto* verify = app.add_subcommand("verify", "Run an identity suite for n = 1..max-n");
  verify->add_option("suite", suite, "psi-identities, characters, frobenius, crt or crossed-relations")
      ->required()
      ->check(CLI::IsMember({"psi-identities", "characters", "frobenius", "crt", "crossed-relations"}));
  verify->add_option("--max-n", max_n, "Largest n checked")->required()->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "Seed for randomized checks");
  verify->add_flag("--serial", serial, "Use the serial reference implementation");
  verify->add_flag("--json", json, "Emit JSON");

  std::string file_a, file_b;
  auto* uct = app.add_subcommand("uct", "Hom/Ext groups and KK orders for two module families");
  uct->add_option("src", src, "preset:<name> or a group JSON file")->required();
  uct->add_option("--a", file_a, "Module family A (JSON)")->required();
  uct->add_option("--b", file_b, "Module family B (JSON)")->required();
  uct->add_flag("--json", json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (info->parsed()) {
      const auto g = load_group(src);
      const auto classes = cyclic_classes(g);
      if (json)
        out << group_info_json(g, classes).dump(2) << "\n";
      else
        print_group_info(out, g, classes);
      return kExitOk;
    }
    if (target->parsed()) {
      const auto report = target_category(load_group(src));
      if (json)
        out << to_json(report).dump(2) << "\n";
      else
        print_target_category(out, report);
      return kExitOk;
    }
    if (verify->parsed()) {
      const Suite s = *parse_suite(suite);
      const auto report = serial ? run_suite_serial(s, max_n, seed) : run_suite(s, max_n, seed);
      if (json)
        out << to_json(report).dump(2) << "\n";
      else
        print_suite(out, report);
      return report.passed ? kExitOk : kExitVerificationFailed;
    }
    if (uct->parsed()) {
      const auto g = load_group(src);
      const auto report = target_category(g);
      const auto a = load_family(file_a, report);
      const auto b = load_family(file_b, report);
      const auto result = uct_order(report, a, b);
      if (json) {
        Json j{{"group", g.name()}};
        j.update(to_json(result));
        out << j.dump(2) << "\n";
      } else {
        print_uct(out, g.name(), result);
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace workbench
