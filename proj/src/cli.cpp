#include "linkhom/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "linkhom/braid.hpp"
#include "linkhom/complex.hpp"
#include "linkhom/diagram.hpp"
#include "linkhom/errors.hpp"
#include "linkhom/graph.hpp"
#include "linkhom/graph_complex.hpp"
#include "linkhom/homfly.hpp"
#include "linkhom/khovanov.hpp"
#include "linkhom/verify.hpp"

namespace linkhom {

namespace {

/// Raised for argument combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

nlohmann::json poly_json(const LaurentPoly& p) { return {{"text", p.to_string()}, {"value", p.to_json()}}; }
nlohmann::json poly_json(const RationalFn& p) { return {{"text", p.to_string()}, {"value", p.to_json()}}; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

JWindow parse_window(const std::string& text) {
  if (text.empty()) return std::nullopt;
  static const std::regex re(R"(^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw UsageError("window must look like a..b, got '" + text + "'");
  int lo = std::stoi(m[1]), hi = std::stoi(m[2]);
  if (lo > hi) throw UsageError("empty window " + text);
  return std::make_pair(lo, hi);
}

/// Input given either inline or through --file, never both.
struct InputSource {
  std::string inline_text;
  std::string file;

  void attach(CLI::App* sub, const std::string& what) {
    sub->add_option("input", inline_text, what);
    sub->add_option("-f,--file", file, "read the input from a file");
  }
  std::string text() const {
    if (inline_text.empty() == file.empty()) throw UsageError("give exactly one input: inline text or --file");
    return file.empty() ? inline_text : read_file(file);
  }
};

void require_format(const std::string& fmt, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (fmt == a) return;
  throw UsageError("format '" + fmt + "' is not available here");
}

void emit_table(std::ostream& out, const HomologyTable& t, const std::string& fmt) {
  if (fmt == "json") out << t.to_json().dump(2) << "\n";
  else if (fmt == "csv") out << t.to_csv();
  else out << t.to_pretty();
}

CLI::App* deepest(CLI::App* app) {
  for (CLI::App* sub : app->get_subcommands()) return deepest(sub);
  return app;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact link and graph invariants: Kauffman bracket, Jones, Khovanov homology, HOMFLYPT, graph homologies",
               "linkhom"};
  app.require_subcommand(1);
  std::optional<unsigned> threads;
  app.add_option("--threads", threads, "worker threads (overrides LINKHOM_THREADS)")->check(CLI::PositiveNumber);

  const auto formats = CLI::IsMember({"json", "csv", "pretty"});
  std::function<int()> action;

  // bracket / jones
  InputSource link_in;
  std::string poly_format = "pretty";
  auto* bracket = app.add_subcommand("bracket", "Kauffman bracket of a braid closure or PD code");
  link_in.attach(bracket, "braid word \"p: i j ...\" or PD code");
  bracket->add_option("--format", poly_format, "json or pretty")->check(formats);
  bracket->callback([&] {
    action = [&] {
      require_format(poly_format, {"json", "pretty"});
      auto p = kauffman_bracket(parse_link(link_in.text()));
      if (poly_format == "json") out << nlohmann::json{{"bracket", poly_json(p)}}.dump(2) << "\n";
      else out << p.to_string() << "\n";
      return 0;
    };
  });

  bool jones_hat = false;
  auto* jones = app.add_subcommand("jones", "normalized Jones polynomial J(q); --hat for q + q^-1 normalization");
  link_in.attach(jones, "braid word or PD code");
  jones->add_flag("--hat", jones_hat, "unnormalized form, unknot = q + q^-1");
  jones->add_option("--format", poly_format, "json or pretty")->check(formats);
  jones->callback([&] {
    action = [&] {
      require_format(poly_format, {"json", "pretty"});
      auto d = parse_link(link_in.text());
      auto p = jones_hat ? jones_unnormalized(d) : jones_normalized(d);
      if (poly_format == "json") out << nlohmann::json{{jones_hat ? "jones_hat" : "jones", poly_json(p)}}.dump(2) << "\n";
      else out << p.to_string() << "\n";
      return 0;
    };
  });

  // kh
  std::string kh_format = "pretty", window_text;
  bool want_poincare = false, want_width = false, want_table = false, rank_only = false;
  std::optional<int> i_max;
  auto* kh = app.add_subcommand("kh", "integral Khovanov homology");
  link_in.attach(kh, "braid word or PD code");
  auto* o_table = kh->add_flag("--table", want_table, "homology table (default)");
  auto* o_poincare = kh->add_flag("--poincare", want_poincare, "Poincare polynomial in t, q");
  auto* o_width = kh->add_flag("--width", want_width, "diagonal occupancy and width");
  o_table->excludes(o_poincare)->excludes(o_width);
  o_poincare->excludes(o_width);
  kh->add_option("--jwindow", window_text, "restrict quantum degrees to a..b");
  kh->add_option("--imax", i_max, "stop after this homological degree");
  kh->add_flag("--rank-only", rank_only, "ranks only, computed modulo a prime");
  kh->add_option("--format", kh_format, "json, csv or pretty")->check(formats);
  kh->callback([&] {
    action = [&] {
      HomologyOptions o;
      o.j_window = parse_window(window_text);
      o.i_max = i_max;
      o.rank_only = rank_only;
      if (!want_poincare && !want_width) {
        emit_table(out, khovanov_homology(parse_link(link_in.text()), o), kh_format);
        return 0;
      }
      require_format(kh_format, {"json", "pretty"});
      auto t = khovanov_homology(parse_link(link_in.text()), o);
      if (want_poincare) {
        auto p = poincare_polynomial(t);
        if (kh_format == "json") out << nlohmann::json{{"poincare", poly_json(p)}}.dump(2) << "\n";
        else out << p.to_string() << "\n";
      } else {
        auto w = width_report(t);
        if (kh_format == "json") {
          out << w.to_json().dump(2) << "\n";
        } else {
          out << "diagonals j-2i:";
          for (int a : w.diagonals) out << " " << a;
          out << "\nwidth " << w.width << (w.thin ? " (thin)" : "") << "\n";
        }
      }
      return 0;
    };
  });

  // homfly
  std::string homfly_var = "at", homfly_format = "pretty";
  std::vector<int> spec_n;
  auto* homfly = app.add_subcommand("homfly", "HOMFLYPT invariants F and G of a braid closure");
  InputSource braid_in;
  braid_in.attach(homfly, "braid word \"p: i j ...\"");
  homfly->add_option("--var", homfly_var, "at: G in (a, q); qt: G in (q, t)")->check(CLI::IsMember({"at", "qt"}));
  homfly->add_option("--specialize", spec_n, "also print G_n for these n >= 1");
  homfly->add_option("--format", homfly_format, "json or pretty")->check(formats);
  homfly->callback([&] {
    action = [&] {
      require_format(homfly_format, {"json", "pretty"});
      auto g = homfly_G(parse_braid(braid_in.text()));
      bool at = homfly_var == "at";
      const RationalFn& gv = at ? g.g_aq : g.g_qt;
      bool times_i = !at && g.g_qt_imaginary;
      std::vector<std::pair<int, LaurentPoly>> gn;
      for (int n : spec_n) gn.emplace_back(n, specialize_Gn(g, n));
      if (homfly_format == "json") {
        nlohmann::json j{{"F", poly_json(g.f)}, {"omega", g.omega}, {"var", homfly_var}, {"G", poly_json(gv)}};
        if (!at) j["G_times_i"] = times_i;
        nlohmann::json s = nlohmann::json::object();
        for (const auto& [n, p] : gn) s[std::to_string(n)] = poly_json(p);
        j["G_n"] = s;
        out << j.dump(2) << "\n";
      } else {
        out << "F(q,t) = " << g.f.to_string() << "\n";
        out << "omega = " << g.omega << "\n";
        out << (at ? "G(a,q) = " : "G(q,t) = ") << (times_i ? "i * (" + gv.to_string() + ")" : gv.to_string()) << "\n";
        for (const auto& [n, p] : gn) out << "G_" << n << "(q) = " << p.to_string() << "\n";
      }
      return 0;
    };
  });

  // graph poly / graph kh
  auto* graph = app.add_subcommand("graph", "graph polynomials and graph homology");
  graph->require_subcommand(1);
  std::string graph_file, graph_text, graph_format = "pretty", graph_window;
  auto graph_source = [&]() {
    if (graph_file.empty() == graph_text.empty()) throw UsageError("give exactly one graph: a file or --text");
    return parse_graph(graph_file.empty() ? graph_text : read_file(graph_file));
  };
  auto attach_graph = [&](CLI::App* sub) {
    sub->add_option("file", graph_file, "graph file (lines 'v N' and 'e a b')");
    sub->add_option("--text", graph_text, "inline graph, '/' separates lines");
    sub->add_option("--jwindow", graph_window, "quantum degrees a..b");
  };

  bool g_dichromatic = false, g_tutte = false, g_dg = false;
  std::optional<int> g_pn, g_qn;
  auto* gpoly = graph->add_subcommand("poly", "dichromatic, Tutte and specialized polynomials");
  attach_graph(gpoly);
  auto* o_d = gpoly->add_flag("--dichromatic", g_dichromatic, "P_G(q, v) (default)");
  auto* o_t = gpoly->add_flag("--tutte", g_tutte, "Tutte polynomial T_G(x, y)");
  auto* o_pn = gpoly->add_option("--pn", g_pn, "P_{G,n}(q) = P_G(q, 1 + q + ... + q^n)");
  auto* o_qn = gpoly->add_option("--qn", g_qn, "Q_{G,n} series, needs --jwindow");
  auto* o_dg = gpoly->add_flag("--dg", g_dg, "D_G(q, t)");
  std::vector<CLI::Option*> poly_modes{o_d, o_t, o_pn, o_qn, o_dg};
  for (std::size_t a = 0; a < poly_modes.size(); ++a)
    for (std::size_t b = a + 1; b < poly_modes.size(); ++b) poly_modes[a]->excludes(poly_modes[b]);
  gpoly->add_option("--format", graph_format, "json or pretty")->check(formats);
  gpoly->callback([&] {
    action = [&] {
      require_format(graph_format, {"json", "pretty"});
      auto g = graph_source();
      std::string kind;
      std::string text;
      nlohmann::json value;
      auto set = [&](const std::string& k, const auto& p) {
        kind = k;
        text = p.to_string();
        value = poly_json(p);
      };
      auto window = parse_window(graph_window);
      if (g_qn && !window) throw UsageError("--qn needs --jwindow a..b");
      if (!g_qn && window) throw UsageError("--jwindow only applies to --qn");
      if (g_tutte) set("tutte", tutte(g));
      else if (g_pn) set("pn", specialize_Pn(g, *g_pn));
      else if (g_qn) set("qn", specialize_Qn(g, *g_qn, window->first, window->second));
      else if (g_dg) set("dg", dichromatic_DG(g));
      else set("dichromatic", dichromatic(g));
      if (graph_format == "json") out << nlohmann::json{{kind, value}}.dump(2) << "\n";
      else out << text << "\n";
      return 0;
    };
  });

  std::string theory, variant = "zero";
  std::optional<int> theory_n;
  auto* gkh = graph->add_subcommand("kh", "homology of a graph: P_n, Q_n or the enhanced theory");
  attach_graph(gkh);
  gkh->add_option("--theory", theory, "pn, qn or enhanced")->required()->check(CLI::IsMember({"pn", "qn", "enhanced"}));
  gkh->add_option("--n", theory_n, "n for pn (default 2) and qn (default 2)");
  gkh->add_option("--variant", variant, "pn differential on merges within a component: zero or xn")
      ->check(CLI::IsMember({"zero", "xn"}));
  gkh->add_option("--format", graph_format, "json, csv or pretty")->check(formats);
  gkh->callback([&] {
    action = [&] {
      auto g = graph_source();
      auto window = parse_window(graph_window);
      HomologyTable t;
      if (theory == "pn") {
        HomologyOptions o;
        o.j_window = window;
        t = Pn_homology(g, theory_n.value_or(2), parse_pn_variant(variant), o);
      } else {
        if (!window) throw UsageError("--theory " + theory + " needs --jwindow a..b");
        if (theory == "qn") t = Qn_homology(g, theory_n.value_or(2), window->first, window->second);
        else t = enhanced_homology(g, window->first, window->second);
      }
      emit_table(out, t, graph_format);
      return 0;
    };
  });

  // stable
  int stable_m = 2;
  std::vector<int> stable_n;
  std::optional<int> stable_imax;
  std::string stable_format = "pretty";
  auto* stable = app.add_subcommand("stable", "normalized Poincare polynomials of T(m,n) over a range of n");
  stable->add_option("m", stable_m, "strands m >= 2")->required()->check(CLI::Range(2, 64));
  stable->add_option("n", stable_n, "values of n")->required();
  stable->add_option("--imax", stable_imax, "truncate at this t-power");
  stable->add_option("--format", stable_format, "json or pretty")->check(formats);
  stable->callback([&] {
    action = [&] {
      require_format(stable_format, {"json", "pretty"});
      auto sp = stable_poincare(stable_m, stable_n, stable_imax);
      if (stable_format == "json") {
        out << sp.to_json().dump(2) << "\n";
        return 0;
      }
      for (std::size_t k = 0; k < sp.polys.size(); ++k) {
        out << "n=" << sp.n_values[k] << ": " << sp.polys[k].to_string() << "\n";
        if (k > 0)
          out << "  agrees with n=" << sp.n_values[k - 1] << " below t^" << stable_m + sp.n_values[k - 1] - 3 << ": "
              << (sp.agree[k - 1] ? "yes" : "no") << "\n";
      }
      return 0;
    };
  });

  // verify
  std::string suite, verify_format = "pretty";
  VerifyOptions vopts;
  auto* verify = app.add_subcommand("verify", "run a verification suite (or 'all')");
  verify->add_option("suite", suite, "suite name or 'all'")->required();
  verify->add_option("--p", vopts.p, "torus parameter p for theorem24");
  verify->add_option("--q", vopts.q, "torus parameter q for theorem24");
  verify->add_flag("--slow", vopts.slow, "include the slow tier");
  verify->add_option("--format", verify_format, "json or pretty")->check(formats);
  verify->callback([&] {
    action = [&] {
      require_format(verify_format, {"json", "pretty"});
      if (suite != "all" && !is_suite(suite)) {
        std::string names;
        for (const auto& n : suite_names()) names += " " + n;
        throw UsageError("unknown suite '" + suite + "'; available:" + names + " all");
      }
      auto reports = run_verify(suite, vopts);
      bool pass = true;
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : reports) {
        pass = pass && r.pass();
        if (verify_format == "json") arr.push_back(r.to_json());
        else out << r.to_text();
      }
      if (verify_format == "json") out << nlohmann::json{{"pass", pass}, {"suites", arr}}.dump(2) << "\n";
      else if (reports.size() > 1) out << (pass ? "ALL PASS" : "SOME SUITES FAILED") << "\n";
      return pass ? 0 : static_cast<int>(kExitDefect);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << deepest(&app)->help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << deepest(&app)->help();
    return kExitUsage;
  }

  if (threads) {
    auto value = std::to_string(*threads);
    ::setenv("LINKHOM_THREADS", value.c_str(), 1);
  }
  try {
    return action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << deepest(&app)->help();
    return kExitUsage;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n" << deepest(&app)->help();
    return kExitUsage;
  } catch (const ComputationDefect& e) {
    err << "defect: " << e.what() << "\n";
    return kExitDefect;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDefect;
  }
}

}  // namespace linkhom
