// Command-line surface for the graph inverse semigroup kernel.
//
// Exit codes: 0 success (and classify "holds"), 10 classify "fails",
// 20 classify "unknown", 2 for any input or usage error.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gis/gis.hpp"
#include "gis/json_io.hpp"

namespace {

using nlohmann::json;

struct Options {
  std::string graph_file;
  std::vector<std::string> literals;
  std::string vertex;
  int max_len = 4;
  int window = 2;
  int k = 5;
  int mu_window = 6;
  bool json_out = false;
  bool quiet = false;
  bool left = false;
  bool right = false;
};

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("graph", opt.graph_file, "graph description file")
      ->required();
  cmd->add_flag("--json", opt.json_out, "emit JSON instead of text");
  cmd->add_flag("--quiet", opt.quiet, "suppress secondary detail");
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string join_paths(const gis::Graph& g, const std::vector<gis::Path>& ps) {
  std::string out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    out += gis::to_string(g, ps[i]);
  }
  return out;
}

json path_list(const gis::Graph& g, const std::vector<gis::Path>& ps) {
  json arr = json::array();
  for (const gis::Path& p : ps) {
    arr.push_back(gis::to_string(g, p));
  }
  return arr;
}

int run_classify(const Options& opt) {
  gis::Graph g = gis::load_graph_file(opt.graph_file);
  gis::Verdict v = gis::classify_dichotomy(g);
  if (opt.json_out) {
    emit(gis::verdict_to_json(g, v));
    return gis::verdict_exit_code(v);
  }
  std::string codes;
  for (std::size_t i = 0; i < v.reasons.size(); ++i) {
    if (i > 0) {
      codes += '+';
    }
    codes += v.reasons[i].code;
  }
  std::string word = gis::outcome_tag(v.outcome);
  for (char& c : word) {
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  std::cout << word << " (" << codes << ")\n";
  if (opt.quiet) {
    return gis::verdict_exit_code(v);
  }
  for (const gis::Reason& r : v.reasons) {
    std::cout << "reason " << r.code << ": " << r.text << "\n";
  }
  for (const gis::ComponentReport& c : v.components) {
    std::cout << "component " << c.name() << ": vertices=" << std::noboolalpha
              << c.component.vertex_count()
              << " edges=" << c.component.edge_count()
              << " strongly_connected=" << (c.strongly_connected ? "yes" : "no")
              << " infinite_gis=" << (c.infinite_gis ? "yes" : "no") << "\n";
  }
  if (!v.witness_components.empty()) {
    std::cout << "witness components: " << v.witness_components[0] << ", "
              << v.witness_components[1] << "\n";
  }
  std::cout << "star_sufficient: " << (v.star.sufficient ? "yes" : "no")
            << (v.star.vacuous ? " (vacuously)" : "") << "\n";
  if (v.probe) {
    if (v.probe->witness) {
      std::cout << "star_probe: witness mu = "
                << gis::to_string(g, v.probe->witness->mu) << " covers "
                << v.probe->witness->subset.size() << " of " << v.probe->a_size
                << " paths";
    } else {
      std::cout << "star_probe: no witness in window";
    }
    std::cout << " (a_max_len=" << v.probe->a_max_len << " k=" << v.probe->k
              << " mu_window=" << v.probe->mu_window << ")\n";
  }
  return gis::verdict_exit_code(v);
}

int run_mul(const Options& opt, bool invert) {
  gis::Graph g = gis::load_graph_file(opt.graph_file);
  gis::GisElement result;
  if (invert) {
    result = gis::inv(gis::parse_element_literal(g, opt.literals.at(0)));
  } else {
    result = gis::mul(gis::parse_element_literal(g, opt.literals.at(0)),
                      gis::parse_element_literal(g, opt.literals.at(1)));
  }
  if (opt.json_out) {
    emit(json{{"result", gis::to_string(g, result)}});
  } else {
    std::cout << gis::to_string(g, result) << "\n";
  }
  return 0;
}

int run_green(const Options& opt) {
  gis::Graph g = gis::load_graph_file(opt.graph_file);
  gis::GisElement a = gis::parse_element_literal(g, opt.literals.at(0));
  gis::GisElement b = gis::parse_element_literal(g, opt.literals.at(1));
  bool l = gis::green_L(a, b);
  bool r = gis::green_R(a, b);
  bool d = gis::green_D(a, b);
  bool h = gis::green_H(a, b);
  if (opt.json_out) {
    emit(json{{"L", l}, {"R", r}, {"D", d}, {"H", h}});
  } else {
    std::cout << std::boolalpha << "L: " << l << ", R: " << r << ", D: " << d
              << ", H: " << h << "\n";
  }
  return 0;
}

int run_solve(const Options& opt) {
  if (opt.left == opt.right) {
    throw gis::Error("solve needs exactly one of --left or --right");
  }
  gis::Graph g = gis::load_graph_file(opt.graph_file);
  gis::GisElement a = gis::parse_element_literal(g, opt.literals.at(0));
  gis::GisElement b = gis::parse_element_literal(g, opt.literals.at(1));
  std::vector<gis::GisElement> xs =
      opt.left ? gis::solve_left(g, a, b) : gis::solve_right(g, a, b);
  if (opt.json_out) {
    json arr = json::array();
    for (const gis::GisElement& x : xs) {
      arr.push_back(gis::to_string(g, x));
    }
    emit(json{{"solutions", arr}});
  } else {
    for (const gis::GisElement& x : xs) {
      std::cout << gis::to_string(g, x) << "\n";
    }
  }
  return 0;
}

int run_enum(const Options& opt) {
  gis::Graph g = gis::load_graph_file(opt.graph_file);
  std::vector<gis::GisElement> elems = gis::enumerate_elements(g, opt.window);
  if (opt.json_out) {
    json arr = json::array();
    for (const gis::GisElement& x : elems) {
      arr.push_back(gis::to_string(g, x));
    }
    emit(json{{"window", opt.window}, {"elements", arr}});
  } else {
    for (const gis::GisElement& x : elems) {
      std::cout << gis::to_string(g, x) << "\n";
    }
  }
  return 0;
}

int run_cycles(const Options& opt) {
  gis::Graph g = gis::load_graph_file(opt.graph_file);
  std::vector<gis::Path> all = gis::cycles_at(g, opt.vertex, opt.max_len);
  std::vector<gis::Path> first =
      gis::first_return_cycles_at(g, opt.vertex, opt.max_len);
  if (opt.json_out) {
    emit(json{{"vertex", opt.vertex},
              {"max_len", opt.max_len},
              {"cycles", path_list(g, all)},
              {"first_return", path_list(g, first)}});
  } else {
    std::cout << "C(" << opt.vertex << ") max_len=" << opt.max_len << ": "
              << join_paths(g, all) << "\n";
    std::cout << "C1(" << opt.vertex << ") max_len=" << opt.max_len << ": "
              << join_paths(g, first) << "\n";
  }
  return 0;
}

int run_iso(const Options& opt) {
  gis::Graph g = gis::load_graph_file(opt.graph_file);
  gis::CycleMonoidType type =
      gis::cycle_monoid_type(g, opt.vertex, opt.max_len);
  gis::IsoReport report = gis::verify_iso_window(g, opt.vertex, opt.max_len);
  if (opt.json_out) {
    emit(json{{"vertex", opt.vertex},
              {"max_len", opt.max_len},
              {"type", gis::to_string(type)},
              {"lambda_finite", type.lambda_finite},
              {"lambda", type.lambda},
              {"truncated", type.truncated},
              {"generators", path_list(g, type.generators)},
              {"verify", gis::iso_report_to_json(report)}});
    return 0;
  }
  std::cout << "type: " << gis::to_string(type)
            << (type.truncated ? " [generator list truncated by window]" : "")
            << "\n";
  if (opt.quiet) {
    return 0;
  }
  if (type.generators.empty()) {
    std::cout << "generators: none\n";
  } else {
    std::cout << "generators:\n";
    for (std::size_t i = 0; i < type.generators.size(); ++i) {
      std::cout << "  p" << i << " = " << gis::to_string(g, type.generators[i])
                << "\n";
    }
  }
  std::cout << "homomorphism: " << report.pairs_checked << " pairs, "
            << report.pairs_skipped << " skipped, " << report.hom_failures
            << " failures\n";
  std::cout << "inversion: " << report.elements << " elements, "
            << report.inv_failures << " failures\n";
  std::cout << "injectivity: " << report.elements << " elements, "
            << report.injectivity_collisions << " collisions\n";
  if (report.counterexample) {
    std::cout << "counterexample: " << *report.counterexample << "\n";
  }
  return 0;
}

int run_star(const Options& opt) {
  gis::Graph g = gis::load_graph_file(opt.graph_file);
  std::vector<gis::Path> family = gis::enumerate_paths(g, opt.max_len);
  std::optional<gis::StarWitness> w =
      gis::star_witness_search(g, family, opt.k, opt.mu_window);
  if (opt.json_out) {
    json j{{"max_len", opt.max_len},
           {"k", opt.k},
           {"mu_window", opt.mu_window},
           {"a_size", family.size()},
           {"found", w.has_value()}};
    if (w) {
      j["mu"] = gis::to_string(g, w->mu);
      j["subset"] = path_list(g, w->subset);
      j["images"] = path_list(g, w->images);
    } else {
      j["mu"] = nullptr;
    }
    emit(j);
    return 0;
  }
  if (!w) {
    std::cout << "no witness in window (max_len=" << opt.max_len
              << " k=" << opt.k << " mu_window=" << opt.mu_window << ")\n";
    return 0;
  }
  std::cout << "witness: mu = " << gis::to_string(g, w->mu) << "\n";
  if (!opt.quiet) {
    std::cout << "subset (" << w->subset.size()
              << "): " << join_paths(g, w->subset) << "\n";
    std::cout << "images (" << w->images.size()
              << "): " << join_paths(g, w->images) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph inverse semigroup toolkit"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("GIS_JSON"); env && std::string(env) == "1") {
    opt.json_out = true;
  }

  int exit_code = 0;
  auto dispatch = [&](auto fn) {
    return [&, fn] { exit_code = fn(); };
  };

  CLI::App* classify = app.add_subcommand("classify", "dichotomy verdict");
  add_common(classify, opt);
  classify->callback(dispatch([&] { return run_classify(opt); }));

  CLI::App* mul = app.add_subcommand("mul", "multiply two elements");
  add_common(mul, opt);
  mul->add_option("a", opt.literals, "element literals")
      ->required()
      ->expected(2);
  mul->callback(dispatch([&] { return run_mul(opt, false); }));

  CLI::App* invc = app.add_subcommand("inv", "invert an element");
  add_common(invc, opt);
  invc->add_option("a", opt.literals, "element literal")
      ->required()
      ->expected(1);
  invc->callback(dispatch([&] { return run_mul(opt, true); }));

  CLI::App* green = app.add_subcommand("green", "Green relations L/R/D/H");
  add_common(green, opt);
  green->add_option("a", opt.literals, "element literals")
      ->required()
      ->expected(2);
  green->callback(dispatch([&] { return run_green(opt); }));

  CLI::App* solve = app.add_subcommand("solve", "solve x*a=b or a*x=b");
  add_common(solve, opt);
  solve->add_flag("--left", opt.left, "solve x * a = b");
  solve->add_flag("--right", opt.right, "solve a * x = b");
  solve->add_option("a", opt.literals, "element literals")
      ->required()
      ->expected(2);
  solve->callback(dispatch([&] { return run_solve(opt); }));

  CLI::App* enumc = app.add_subcommand("enum", "list window elements");
  add_common(enumc, opt);
  enumc->add_option("--window", opt.window, "path length bound")
      ->capture_default_str();
  enumc->callback(dispatch([&] { return run_enum(opt); }));

  CLI::App* cycles = app.add_subcommand("cycles", "cycles at a vertex");
  add_common(cycles, opt);
  cycles->add_option("vertex", opt.vertex, "vertex identifier")->required();
  cycles->add_option("--max-len", opt.max_len, "cycle length bound")
      ->capture_default_str();
  cycles->callback(dispatch([&] { return run_cycles(opt); }));

  CLI::App* iso = app.add_subcommand("iso", "cycle-monoid structure at a vertex");
  add_common(iso, opt);
  iso->add_option("vertex", opt.vertex, "vertex identifier")->required();
  iso->add_option("--max-len", opt.max_len, "cycle length window")
      ->capture_default_str();
  iso->callback(dispatch([&] { return run_iso(opt); }));

  CLI::App* star = app.add_subcommand("star", "length-increasing witness search");
  add_common(star, opt);
  star->add_option("--max-len", opt.max_len, "path family length bound")
      ->capture_default_str();
  star->add_option("--k", opt.k, "required subset size")
      ->capture_default_str();
  star->add_option("--mu-window", opt.mu_window, "witness path length bound")
      ->capture_default_str();
  star->callback(dispatch([&] { return run_star(opt); }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const gis::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
