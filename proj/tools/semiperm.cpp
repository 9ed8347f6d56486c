#include <fstream>   // for ifstream, ofstream
#include <iostream>  // for cout, cerr
#include <sstream>   // for stringstream
#include <string>    // for string
#include <vector>    // for vector

#include <CLI11.hpp>

#include "semiperm.hpp"

using namespace semiperm;

namespace {

  std::string read_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw InvalidArgument("cannot read " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  // "builtin:NAME", "file:PATH", "file PATH" or a bare builtin name.
  NamedGroup load_group(std::vector<std::string> const& spec) {
    if (spec.size() == 2 && spec[0] == "file") {
      return load_group_file(read_file(spec[1]), "file:" + spec[1]);
    }
    if (spec.size() != 1) {
      throw InvalidArgument("expected builtin:NAME or file PATH");
    }
    std::string const& s = spec[0];
    if (s.rfind("file:", 0) == 0) {
      return load_group_file(read_file(s.substr(5)), s);
    }
    return named_group(s.rfind("builtin:", 0) == 0 ? s.substr(8) : s);
  }

  void write_out(std::string const& path, std::string const& text) {
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) {
      throw InvalidArgument("cannot write " + path);
    }
    out << text;
  }

  char const* yes_no(bool b) { return b ? "yes" : "no"; }

  int cmd_info(NamedGroup const& ng) {
    Group const& g = ng.group;
    std::cout << "name        " << ng.name << "\n"
              << "degree      " << g.degree() << "\n"
              << "order       " << g.order() << "\n";
    auto primes = prime_divisors(g.order());
    std::cout << "primes     ";
    for (auto p : primes) {
      std::cout << " " << p;
    }
    std::cout << "\n";
    for (auto p : primes) {
      PGroupStructure s(sylow_subgroup(g, p));
      std::cout << "p=" << p << "  |P|=" << p_part(g.order(), p) << " d_p=" << s.rank()
                << " |M(P)|=" << s.hyperplane_count()
                << " |Phi(P)|=" << s.frattini().order()
                << " |O_p|=" << o_p(g, p).order() << " |O_p'|=" << o_p_prime(g, p).order()
                << " p-soluble=" << yes_no(is_p_soluble(g, p))
                << " p-supersoluble=" << yes_no(is_p_supersoluble(g, p))
                << " p-nilpotent=" << yes_no(is_p_nilpotent(g, p)) << "\n";
    }
    std::cout << "soluble     " << yes_no(is_soluble(g)) << "\n"
              << "nilpotent   " << yes_no(is_nilpotent(g)) << "\n"
              << "supersoluble " << yes_no(is_supersoluble(g)) << "\n";
    if (g.is_enumerable()) {
      std::cout << "chief       " << describe_orders(chief_series(g).factor_orders) << "\n";
    }
    return 0;
  }

  int cmd_check(NamedGroup const& ng, std::uint64_t p, HypothesisMode mode) {
    if (!is_prime(p) || ng.group.order() % p != 0) {
      std::cerr << "semiperm: " << p << " is not a prime divisor of " << ng.group.order() << "\n";
      return 2;
    }
    auto h = main_hypothesis(ng.group, p, mode);
    bool const c = main_conclusion(ng.group, p);
    std::cout << "group       " << ng.name << " (order " << ng.group.order() << ")\n"
              << "prime       " << p << "\n"
              << "mode        " << to_string(mode) << "\n"
              << "hypothesis  " << (h.holds ? "true" : "false") << "\n"
              << "conclusion  " << (c ? "true" : "false") << "\n"
              << "violated    " << (h.holds && !c ? "true" : "false") << "\n"
              << "witness     " << h.summary() << "\n";
    if (ng.group.order() > 1 && prime_of_power(ng.group.order()) == 0) {
      std::cout << "chief       " << describe_orders(chief_series(ng.group).factor_orders) << "\n";
    }
    return h.holds && !c ? 1 : 0;
  }

  std::vector<std::string> split_commas(std::string const& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) {
        out.push_back(item);
      }
    }
    return out;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation group toolkit for s-permutability and s-semipermutability"};
  app.require_subcommand(1);
  std::size_t enum_cap = enumeration_cap();
  std::size_t lat_cap = lattice_cap();
  app.add_option("--enum-cap", enum_cap, "Largest group order enumerated element by element")
      ->capture_default_str();
  app.add_option("--lattice-cap", lat_cap, "Largest group order whose subgroup lattice is built")
      ->capture_default_str();

  std::vector<std::string> group_spec;
  std::uint64_t prime = 0;
  std::string mode = "exists";

  auto* info = app.add_subcommand("info", "Order, Sylow data and class predicates of a group");
  info->add_option("group", group_spec, "builtin:NAME, NAME, file:PATH or file PATH")
      ->required()
      ->expected(1, 2);

  auto* check = app.add_subcommand("check", "Evaluate hypothesis and conclusion at one prime");
  check->add_option("group", group_spec, "builtin:NAME, NAME, file:PATH or file PATH")
      ->required()
      ->expected(1, 2);
  check->add_option("--prime,-p", prime, "Prime dividing the group order")->required();
  check->add_option("--mode", mode, "exists, forall or canonical")
      ->check(CLI::IsMember({"exists", "forall", "canonical"}))
      ->capture_default_str();

  std::string corpus_kind = "builtin";
  order_type max_order = 200;
  std::string checks = "main";
  std::size_t jobs = 1;
  std::string out_path;
  std::string format = "text";
  std::uint64_t budget = LemmaOptions{}.budget;
  auto* verify = app.add_subcommand("verify", "Run checks over a corpus and write a report");
  verify->add_option("--corpus", corpus_kind, "Corpus (builtin)")
      ->check(CLI::IsMember({"builtin"}))
      ->capture_default_str();
  verify->add_option("--max-order", max_order, "Largest group order in the corpus")
      ->capture_default_str();
  verify
      ->add_option("--checks", checks,
                   "Comma-separated: main, lemmas, corollaries, srinivasan, separation, all, "
                   "or single ids such as lemma-2.3")
      ->capture_default_str();
  verify->add_option("--mode", mode, "exists, forall or canonical")
      ->check(CLI::IsMember({"exists", "forall", "canonical"}))
      ->capture_default_str();
  verify->add_option("--jobs,-j", jobs, "Worker threads")->capture_default_str();
  verify->add_option("--out,-o", out_path, "Report path (default stdout)");
  verify->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  verify->add_option("--budget", budget, "Instances per lemma part before sampling")
      ->capture_default_str();

  auto* corpus = app.add_subcommand("corpus", "List the built-in corpus");
  corpus->add_option("--max-order", max_order, "Largest group order")->capture_default_str();

  auto* exp = app.add_subcommand("export", "Write a group file");
  exp->add_option("group", group_spec, "builtin:NAME, NAME, file:PATH or file PATH")
      ->required()
      ->expected(1, 2);
  exp->add_option("--out,-o", out_path, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return 2;
  }

  try {
    set_enumeration_cap(enum_cap);
    set_lattice_cap(lat_cap);
    if (*info) {
      return cmd_info(load_group(group_spec));
    }
    if (*check) {
      return cmd_check(load_group(group_spec), prime, parse_mode(mode));
    }
    if (*verify) {
      RunOptions opt;
      opt.mode = parse_mode(mode);
      opt.jobs = jobs;
      opt.lemma.budget = budget;
      Report rep = run_corpus(builtin_corpus(max_order), split_commas(checks), opt);
      write_out(out_path, format == "json" ? format_json(rep) : format_text(rep));
      if (rep.violation) {
        std::cerr << "semiperm: violation of " << rep.violation->check << " in "
                  << rep.violation->group << "\n"
                  << rep.violation->witness << "\n"
                  << rep.violation_group_file;
      }
      return rep.exit_status();
    }
    if (*corpus) {
      std::cout << corpus_manifest(builtin_corpus(max_order));
      return 0;
    }
    if (*exp) {
      write_out(out_path, write_group_file(load_group(group_spec)));
      return 0;
    }
  } catch (Error const& e) {
    std::cerr << "semiperm: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
