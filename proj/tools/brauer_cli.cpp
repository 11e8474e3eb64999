// Command-line front end: products, word evaluation, decomposition, the
// wreath-valued pairing, relation suites, enumeration and format conversion.
// Exit status: 0 success, 1 verification failure, 2 input error.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "brauer/algebra.hpp"
#include "brauer/cellular.hpp"
#include "brauer/concat.hpp"
#include "brauer/json_io.hpp"
#include "brauer/sampling.hpp"
#include "brauer/tikz.hpp"

namespace {

using namespace brauer;

int max_enumeration_n() {
  if (const char* env = std::getenv("BRAUER_MAX_N")) {
    const int value = std::atoi(env);
    if (value > 0) return value;
  }
  return 8;
}

std::string read_source(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw Error("cannot open file '" + arg.substr(1) + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool looks_like_json(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' || c == '[';
  }
  return false;
}

// Accepts a word ("s1 e2 t1^-1"), an inline JSON object, or @file. Words
// need an explicit n; JSON carries its own (checked against --n if given).
AlgebraElement read_element(const std::string& arg, int n) {
  const std::string text = read_source(arg);
  if (looks_like_json(text)) {
    const nlohmann::json j = nlohmann::json::parse(text);
    AlgebraElement a = j.contains("terms")
                           ? element_from_json(j)
                           : AlgebraElement::from_diagram(diagram_from_json(j));
    if (n > 0 && a.n() != n)
      throw DimensionMismatch("input has n=" + std::to_string(a.n()) +
                              " but --n " + std::to_string(n) + " was given");
    return a;
  }
  if (n <= 0) throw Error("word input needs --n");
  return evaluate_word(parse_word(text), n);
}

ColoredDiagram read_diagram(const std::string& arg, int n) {
  const AlgebraElement a = read_element(arg, n);
  if (a.terms().size() != 1 || !a.terms().begin()->second.is_one())
    throw Error("expected a single diagram with coefficient 1, got " +
                a.str());
  return a.terms().begin()->first;
}

Dangle read_dangle(const std::string& arg) {
  const std::string text = read_source(arg);
  if (!looks_like_json(text)) throw Error("dangles are given as JSON");
  return dangle_from_json(nlohmann::json::parse(text));
}

void print_element(const AlgebraElement& a, const std::string& format) {
  if (format == "json") {
    std::cout << to_json(a).dump(2) << "\n";
  } else if (format == "tikz") {
    for (const auto& [d, c] : a.terms()) {
      std::cout << "% coefficient: " << c.str() << "\n" << render_tikz(d);
    }
  } else {
    std::cout << a.str() << "\n";
  }
}

void print_diagram(const ColoredDiagram& d, const std::string& format) {
  if (format == "json")
    std::cout << to_json(d).dump(2) << "\n";
  else if (format == "tikz")
    std::cout << render_tikz(d);
  else
    std::cout << d.str() << "\n";
}

// "min..max" -> symmetric sampling window covering it.
int parse_label_window(const std::string& range) {
  const auto dots = range.find("..");
  if (dots == std::string::npos)
    throw Error("--labels expects min..max, got '" + range + "'");
  const int lo = std::stoi(range.substr(0, dots));
  const int hi = std::stoi(range.substr(dots + 2));
  if (lo > hi) throw Error("--labels range is empty");
  return std::max(std::abs(lo), std::abs(hi));
}

// Random pair of diagrams sharing a through count.
std::pair<ColoredDiagram, ColoredDiagram> random_matched_pair(Rng& rng, int n,
                                                              int window) {
  const int parity = n % 2;
  const int t = parity + 2 * rng.uniform(0, n / 2);
  return {random_diagram_with_through(rng, n, t, window),
          random_diagram_with_through(rng, n, t, window)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in colored Brauer diagram algebras"};
  app.require_subcommand(1);

  std::string format = "text";
  int n = 0;
  int a_max = 4;
  int k = -1;
  int samples = 0;
  std::uint64_t seed = 20260816;
  std::string labels = "-3..3";
  std::string input_a, input_b, word_text;
  bool flat = false;
  bool inject_fault = false;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "tikz"}))
        ->capture_default_str();
  };

  CLI::App* mul = app.add_subcommand("mul", "Multiply two elements");
  mul->add_option("--n", n, "Diagram size (needed for word inputs)");
  mul->add_option("a", input_a, "Left factor")->required();
  mul->add_option("b", input_b, "Right factor")->required();
  add_format(mul);

  CLI::App* word = app.add_subcommand("word", "Evaluate a generator word");
  word->add_option("--n", n, "Diagram size")->required();
  word->add_option("word", word_text, "Word, e.g. \"s1 e2 t1^-1\"")
      ->required();
  add_format(word);

  CLI::App* dec = app.add_subcommand(
      "decompose", "Cut a diagram into halves and wreath part");
  dec->add_option("--n", n, "Diagram size (needed for word inputs)");
  dec->add_option("diagram", input_a, "The diagram")->required();
  add_format(dec);

  CLI::App* phi_cmd = app.add_subcommand(
      "phi", "Pair an upward dangle with a downward dangle");
  phi_cmd->add_option("up", input_a, "Upward dangle (JSON)")->required();
  phi_cmd->add_option("down", input_b, "Downward dangle (JSON)")->required();
  add_format(phi_cmd);

  CLI::App* rel = app.add_subcommand(
      "relations", "Verify the defining relations exhaustively");
  rel->add_option("--n", n, "Diagram size")->required();
  rel->add_option("--a-max", a_max, "Exponent bound in the e t^a e family")
      ->capture_default_str();
  rel->add_flag("--inject-fault", inject_fault,
                "Adds a deliberately false instance (testing the exit path)")
      ->group("");

  CLI::App* enumerate_cmd =
      app.add_subcommand("enumerate", "List diagrams in canonical order");
  enumerate_cmd->add_option("--n", n, "Diagram size")->required();
  enumerate_cmd->add_flag("--flat", flat, "Label-zero diagrams only");
  enumerate_cmd->add_option("--labels", labels,
                            "Label window min..max for colored enumeration");
  add_format(enumerate_cmd);

  CLI::App* flip_cmd =
      app.add_subcommand("flip", "Reflect a diagram through the horizontal axis");
  flip_cmd->add_option("--n", n, "Diagram size (needed for word inputs)");
  flip_cmd->add_option("diagram", input_a, "The diagram")->required();
  add_format(flip_cmd);

  CLI::App* ideal = app.add_subcommand(
      "ideal-check", "Verify that low-through spans absorb products");
  ideal->add_option("--n", n, "Diagram size")->required();
  ideal->add_option("--k", k, "Filtration level (default: all)");
  ideal->add_option("--samples", samples, "Random cases per level");
  ideal->add_option("--seed", seed, "RNG seed")->capture_default_str();
  ideal->add_option("--labels", labels, "Label window min..max")
      ->capture_default_str();

  CLI::App* l42 = app.add_subcommand(
      "lemma42", "Verify the multiplication congruence on random pairs");
  l42->add_option("--n", n, "Diagram size")->required();
  l42->add_option("--samples", samples, "Random pairs");
  l42->add_option("--seed", seed, "RNG seed")->capture_default_str();
  l42->add_option("--labels", labels, "Label window min..max")
      ->capture_default_str();

  CLI::App* l45 = app.add_subcommand(
      "lemma45", "Verify reflection compatibility on random pairs");
  l45->add_option("--n", n, "Diagram size")->required();
  l45->add_option("--samples", samples, "Random pairs");
  l45->add_option("--seed", seed, "RNG seed")->capture_default_str();
  l45->add_option("--labels", labels, "Label window min..max")
      ->capture_default_str();

  try {
    app.parse(argc, argv);

    if (mul->parsed()) {
      const AlgebraElement a = read_element(input_a, n);
      const AlgebraElement b = read_element(input_b, n > 0 ? n : a.n());
      print_element(multiply(a, b), format);
      return 0;
    }

    if (word->parsed()) {
      print_element(evaluate_word(parse_word(word_text), n), format);
      return 0;
    }

    if (dec->parsed()) {
      const ColoredDiagram d = read_diagram(input_a, n);
      const DecompositionTriple t = decompose(d);
      if (format == "json") {
        const nlohmann::json j{{"top_half", to_json(t.top_half)},
                               {"bottom_half", to_json(t.bottom_half)},
                               {"wreath", to_json(t.wreath)}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "top:    " << t.top_half.str() << "\n"
                  << "bottom: " << t.bottom_half.str() << "\n"
                  << "wreath: " << t.wreath.str() << "\n";
      }
      return 0;
    }

    if (phi_cmd->parsed()) {
      const GroupAlgebraElem value =
          phi(read_dangle(input_a), read_dangle(input_b));
      if (format == "json")
        std::cout << to_json(value).dump(2) << "\n";
      else
        std::cout << value.str() << "\n";
      return 0;
    }

    if (rel->parsed()) {
      RelationReport report = check_relations(n, a_max);
      if (inject_fault) {
        // A real engine evaluation that is false by design.
        const AlgebraElement lhs =
            multiply(generator({'s', 1, 1}, n), generator({'s', 1, 1}, n));
        report.results.push_back(
            {'a', "i=1 (injected: s1 s1 = e1)", lhs == generator({'e', 1, 1}, n)});
      }
      for (const auto& fc : report.families())
        std::cout << "(" << fc.family << ") " << fc.instances << " instances, "
                  << fc.failures << " failures\n";
      const bool ok = report.all_pass();
      std::cout << (ok ? "all 15 relation families pass"
                       : "RELATION FAILURES FOUND")
                << " (n=" << n << ", a_max=" << a_max << ")\n";
      if (!ok)
        for (const auto& r : report.results)
          if (!r.pass)
            std::cout << "  failed: (" << r.family << ") " << r.instance
                      << "\n";
      return ok ? 0 : 1;
    }

    if (enumerate_cmd->parsed()) {
      const int bound = max_enumeration_n();
      if (flat) {
        const auto all = enumerate_flat(n, bound);
        if (format == "json") {
          nlohmann::json arr = nlohmann::json::array();
          for (const auto& d : all) arr.push_back(to_json(d));
          std::cout << arr.dump(2) << "\n";
        } else {
          for (const auto& d : all) print_diagram(d, format);
        }
        std::cerr << all.size() << " diagrams\n";
      } else {
        const int window = parse_label_window(labels);
        const auto all = enumerate_colored(n, window, bound);
        if (format == "json") {
          nlohmann::json arr = nlohmann::json::array();
          for (const auto& d : all) arr.push_back(to_json(d));
          std::cout << arr.dump(2) << "\n";
        } else {
          for (const auto& d : all) print_diagram(d, format);
        }
        std::cerr << all.size() << " diagrams\n";
      }
      return 0;
    }

    if (flip_cmd->parsed()) {
      print_diagram(read_diagram(input_a, n).flip(), format);
      return 0;
    }

    if (ideal->parsed()) {
      if (samples <= 0) samples = 200;
      const int window = parse_label_window(labels);
      std::cout << "seed: " << seed << "\n";
      bool ok = true;
      const int k_lo = k >= 0 ? k : 0;
      const int k_hi = k >= 0 ? k : n;
      for (int level = k_lo; level <= k_hi; ++level) {
        const bool pass = check_ideal(n, level, samples, seed, window);
        std::cout << "k=" << level << ": " << (pass ? "ok" : "FAILED") << "\n";
        ok = ok && pass;
      }
      return ok ? 0 : 1;
    }

    if (l42->parsed() || l45->parsed()) {
      const bool is42 = l42->parsed();
      if (samples <= 0) samples = is42 ? 500 : 300;
      const int window = parse_label_window(labels);
      std::cout << "seed: " << seed << "\n";
      Rng rng(seed);
      int failures = 0;
      for (int s = 0; s < samples; ++s) {
        const auto [c, d] = random_matched_pair(rng, n, window);
        const bool pass = is42 ? check_lemma42(c, d) : check_lemma45(c, d);
        if (!pass) {
          ++failures;
          std::cout << "failed: " << c.str() << "  *  " << d.str() << "\n";
        }
      }
      std::cout << samples << " pairs, " << failures << " failures\n";
      return failures == 0 ? 0 : 1;
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
