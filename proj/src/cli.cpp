#include "eisenpole/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "eisenpole/identities.hpp"
#include "eisenpole/parallel.hpp"
#include "eisenpole/poles.hpp"

namespace eisenpole {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string canonical_json(const std::string& compact) {
  return ordered_json::parse(compact).dump(2) + "\n";
}

std::vector<int> resolve_parabolics(const RootDatum& d, const std::vector<int>& given) {
  std::vector<int> out;
  if (given.empty()) {
    for (int p = 0; p < d.rank(); ++p) out.push_back(p);
    return out;
  }
  for (int p : given) {
    if (p < 1 || p > d.rank())
      throw ConfigError("parabolic index " + std::to_string(p) + " out of range for " +
                        d.type().str());
    out.push_back(p - 1);
  }
  return out;
}

struct IdentityRow {
  AdmissibleData data;
  IdentityConstant c;
};

std::vector<IdentityRow> identity_rows(const RootDatum& d, const RunConfig& cfg) {
  std::vector<std::pair<int, int>> pairs;
  if (cfg.parabolics.size() >= 2) {
    pairs.emplace_back(cfg.parabolics[0] - 1, cfg.parabolics[1] - 1);
  } else {
    for (int i = 0; i < d.rank(); ++i)
      for (int j = 0; j < d.rank(); ++j)
        if (i != j) pairs.emplace_back(i, j);
  }
  std::vector<std::vector<IdentityRow>> per_pair(pairs.size());
  parallel_for(pairs.size(), cfg.threads > 0 ? cfg.threads : default_threads(), [&](std::size_t k) {
    auto [i, j] = pairs[k];
    for (const auto& a : find_admissible(d, i, j, true, cfg.range_lo, cfg.range_hi))
      per_pair[k].push_back({a, identity_constant(d, a)});
  });
  std::vector<IdentityRow> rows;
  for (auto& v : per_pair) rows.insert(rows.end(), v.begin(), v.end());
  return rows;
}

std::string identities_table(const std::vector<IdentityRow>& rows) {
  std::ostringstream os;
  os << "P_i | s | P_j | t | w | h3(chi_t)/h3(chi_s) | d_Pi | d_Pj | d | eps_p | eps_q | "
        "special\n";
  for (const auto& r : rows) {
    os << "P" << r.data.pi + 1 << " | " << rat_str(r.data.s0) << " | P" << r.data.pj + 1 << " | "
       << rat_str(r.data.t0) << " | " << word_str(r.data.w) << " | " << r.c.h_quotient.str()
       << " | " << r.c.d_pi << " | " << r.c.d_pj << " | " << r.c.d << " | " << rat_str(r.c.eps_s)
       << " | " << rat_str(r.c.eps_t) << " | " << (r.data.special ? "yes" : "no") << "\n";
  }
  return os.str();
}

std::string identities_latex(const std::vector<IdentityRow>& rows) {
  std::ostringstream os;
  os << "\\begin{longtable}{|c|c|c|c|c|c|c|c|c|c|c|}\n\\hline"
     << "$ \\para{P}_{i} $ & $ s $ & $ \\para{P}_{j} $ &  $ t $ & $w$ & "
     << "$ \\frac{h_3(\\chi_t)}{h_3(\\chi_s)} $ & $d_{\\para{P}_i}(\\chi_s)$ & "
     << "$d_{\\para{P}_j}(\\chi_t)$ & $d$ & $\\epsilon_p$ & $\\epsilon_q$ \\\\ \\hline\n";
  for (const auto& r : rows) {
    std::string w;
    if (r.data.w.empty())
      w = "e";
    else
      for (int l : r.data.w) w += "w_{" + std::to_string(l + 1) + "}";
    os << "$ \\para{P}_{" << r.data.pi + 1 << "} $ & $ " << rat_latex(r.data.s0)
       << " $ & $ \\para{P}_{" << r.data.pj + 1 << "} $ &  $ " << rat_latex(r.data.t0)
       << " $ & $" << w << "$ & $ " << r.c.h_quotient.latex() << " $ & $" << r.c.d_pi << "$ & $"
       << r.c.d_pj << "$ & $" << r.c.d << "$ & $" << rat_str(r.c.eps_s) << "$ & $"
       << rat_str(r.c.eps_t) << "$ \\\\ \\hline\n";
  }
  os << "\\end{longtable}\n";
  return os.str();
}

std::string identities_json(const RootDatum& d, const std::vector<IdentityRow>& rows) {
  std::ostringstream os;
  os << "{\"schema_version\":\"1\",\"report\":\"identities\",\"group\":\"" << d.type().str()
     << "\",\"data\":[";
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (k) os << ",";
    os << render_identity_json(d, rows[k].data, rows[k].c);
  }
  os << "]}";
  return os.str();
}

int run_poles(const RootDatum& d, const RunConfig& cfg, std::ostream& os) {
  PipelineOptions opt;
  opt.digits = cfg.precision;
  opt.depth = cfg.depth;
  opt.threads = cfg.threads > 0 ? cfg.threads : default_threads();
  bool inconclusive = false;
  bool banner = d.type().series == 'E' && d.type().rank == 8;
  std::vector<int> ps = resolve_parabolics(d, cfg.parabolics);
  bool json_list = cfg.format == "json" && ps.size() > 1;
  if (json_list) os << "[\n";
  for (std::size_t k = 0; k < ps.size(); ++k) {
    PoleReport rep = pole_report(d, ps[k], opt);
    inconclusive = inconclusive || rep.any_inconclusive();
    if (cfg.format == "json") {
      std::string j = canonical_json(rep.to_json());
      if (json_list && k + 1 < ps.size()) {
        j.pop_back();
        j += ",\n";
      }
      os << j;
    } else if (cfg.format == "latex") {
      if (banner) os << "% UNVERIFIED: E8 pole tables are not part of the reference corpus\n";
      os << rep.to_latex() << "\n";
    } else {
      if (banner) os << "UNVERIFIED: E8 pole tables are not part of the reference corpus\n";
      os << rep.to_text() << "\n";
    }
  }
  if (json_list) os << "]\n";
  return inconclusive ? 1 : 0;
}

int run_identities(const RootDatum& d, const RunConfig& cfg, std::ostream& os, bool constants) {
  auto rows = identity_rows(d, cfg);
  if (cfg.format == "dot") {
    std::vector<AdmissibleData> data;
    for (const auto& r : rows) data.push_back(r.data);
    os << chains_dot(d, data);
    return 0;
  }
  if (constants) {
    if (cfg.format == "json") {
      os << canonical_json(identities_json(d, rows));
    } else if (cfg.format == "latex") {
      os << "\\begin{enumerate}\n";
      for (const auto& r : rows)
        os << "\\item\n$" << render_identity_latex(d, r.data, r.c) << ".$\n";
      os << "\\end{enumerate}\n";
    } else {
      for (const auto& r : rows) {
        os << render_identity_text(d, r.data, r.c) << "\n";
        for (const auto& as : r.c.assumptions) os << "    assuming " << as.str() << "\n";
      }
    }
    return 0;
  }
  if (cfg.format == "json")
    os << canonical_json(identities_json(d, rows));
  else if (cfg.format == "latex")
    os << identities_latex(rows);
  else
    os << identities_table(rows);
  return 0;
}

int run_verify(const RootDatum& d, const RunConfig& cfg, std::ostream& os) {
  bool all_ok = true;
  std::ostringstream body;
  for (int p : resolve_parabolics(d, cfg.parabolics)) {
    for (const Rat& s0 : potential_poles(d, p)) {
      DenominatorReport rep = verify_denominator_assumption(d, p, s0);
      all_ok = all_ok && rep.ok();
      if (cfg.format == "json") {
        body << (body.str().empty() ? "" : ",") << "{\"parabolic\":" << p + 1 << ",\"s0\":\""
             << rat_str(s0) << "\",\"cosets\":" << rep.cosets_checked
             << ",\"violations\":" << rep.violations.size() << "}";
      } else {
        body << "P" << p + 1 << " at s0 = " << rat_str(s0) << ": " << rep.cosets_checked
             << " cosets, " << rep.violations.size() << " violations\n";
      }
    }
  }
  if (cfg.format == "json") {
    os << canonical_json("{\"schema_version\":\"1\",\"report\":\"verify\",\"group\":\"" +
                         d.type().str() + "\",\"denominator_assumption_ok\":" +
                         (all_ok ? "true" : "false") + ",\"checks\":[" + body.str() + "]}");
  } else {
    os << "Denominator assumption for " << d.type().str() << ": "
       << (all_ok ? "holds" : "VIOLATED") << "\n"
       << body.str();
  }
  return 0;
}

int run_appendix(const RootDatum& d, const RunConfig& cfg, std::ostream& os) {
  if (cfg.parabolics.size() != 1) throw ConfigError("appendix requires exactly one --parabolic");
  auto s0 = parse_rat(cfg.s0);
  if (!s0) throw ConfigError("appendix requires --s0 <rational>");
  int p = resolve_parabolics(d, cfg.parabolics)[0];
  auto pts = potential_poles(d, p);
  if (std::find(pts.begin(), pts.end(), *s0) == pts.end())
    throw ConfigError("s0 = " + cfg.s0 + " is not a potential pole of " + d.type().str() + " P" +
                      std::to_string(p + 1));
  PipelineOptions opt;
  opt.digits = cfg.precision;
  opt.depth = cfg.depth;
  AppendixDoc doc = emit_appendix_proof(d, p, *s0, opt);
  os << (cfg.format == "latex" ? doc.latex() : doc.text());
  return 0;
}

}  // namespace

int run(const RunConfig& cfg, std::string* captured_output) {
  std::ostringstream buffer;
  try {
    RootDatum d = RootDatum::build(cfg.group);
    if (cfg.precision < 30) throw ConfigError("precision must be at least 30 digits");
    if (cfg.depth < 1) throw ConfigError("depth must be at least 1");
    int status = 0;
    if (cfg.command == "rootdata") {
      if (cfg.format == "json")
        buffer << canonical_json(d.to_json());
      else if (cfg.format == "latex")
        buffer << b_matrix(d).latex() << "\n";
      else
        buffer << d.type().str() << ": rank " << d.rank() << ", " << d.num_positive()
               << " positive roots, |W| = " << d.weyl_order() << "\n";
    } else if (cfg.command == "poles") {
      status = run_poles(d, cfg, buffer);
    } else if (cfg.command == "identities") {
      status = run_identities(d, cfg, buffer, false);
    } else if (cfg.command == "constants") {
      status = run_identities(d, cfg, buffer, true);
    } else if (cfg.command == "verify") {
      status = run_verify(d, cfg, buffer);
    } else if (cfg.command == "appendix") {
      status = run_appendix(d, cfg, buffer);
    } else {
      throw ConfigError("unknown command: " + cfg.command);
    }
    if (captured_output) *captured_output = buffer.str();
    if (!cfg.out_path.empty()) {
      std::ofstream f(cfg.out_path);
      if (!f) throw ConfigError("cannot write to " + cfg.out_path);
      f << buffer.str();
    } else if (!captured_output) {
      std::cout << buffer.str();
    }
    return status;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int run_cli(int argc, char** argv) {
  CLI::App app{"exact pole orders and Siegel-Weil identities of degenerate spherical "
               "Eisenstein series for split groups of rank <= 8"};
  app.set_config("--config", "", "key=value configuration file; flags take precedence");
  app.require_subcommand(1);

  RunConfig cfg;
  std::string range;
  auto add_common = [&](CLI::App* sub, bool needs_group = true) {
    auto* g = sub->add_option("--group", cfg.group, "group type, e.g. G2, F4, E6, E7, E8, A4");
    if (needs_group) g->required();
    sub->add_option("--parabolic", cfg.parabolics, "1-based maximal-parabolic indices");
    sub->add_option("--format", cfg.format, "table | latex | json (identities also: dot)");
    sub->add_option("--depth", cfg.depth, "initial Laurent truncation depth");
    sub->add_option("--precision", cfg.precision, "numeric certificate precision (digits)");
    sub->add_option("--threads", cfg.threads, "worker threads (default: EISENPOLE_THREADS)");
    sub->add_option("--out", cfg.out_path, "output file (default: stdout)");
    sub->add_option("--range", range, "identity search range lo:hi, default 0:1/2");
    sub->add_option("--convention", cfg.convention,
                    "chi convention note (the pipelines pin their own)");
  };
  for (const char* name : {"rootdata", "poles", "identities", "constants", "verify"})
    add_common(app.add_subcommand(name));
  auto* appx = app.add_subcommand("appendix");
  add_common(appx);
  appx->add_option("--s0", cfg.s0, "potential pole to document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (!range.empty()) {
    auto colon = range.find(':');
    auto lo = parse_rat(range.substr(0, colon));
    auto hi = colon == std::string::npos ? std::nullopt : parse_rat(range.substr(colon + 1));
    if (!lo || !hi) {
      std::cerr << "error: --range expects lo:hi rationals\n";
      return 2;
    }
    cfg.range_lo = *lo;
    cfg.range_hi = *hi;
  }
  return run(cfg, nullptr);
}

}  // namespace eisenpole
