// qgt: command-line front end for quantum 2x2 games.
//
// Subcommands: payoff, ne-scan, ess-check, ess-scan, invade, bos.
// Global flags: --format {csv|json|table}, --out <path>, --tol <float>.
// Exit codes: 0 success, 1 numeric failure, 2 input validation, 3 I/O.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qgt/qgt.hpp"

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string fmtg(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

const char* yesno(bool b) { return b ? "true" : "false"; }

// ── rendering ───────────────────────────────────────────────────────────────

struct TableOut {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string render_csv() const {
    std::string out = join(header);
    for (const auto& r : rows) out += join(r);
    return out;
  }

  std::string render_json() const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json obj;
      for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = r[i];
      arr.push_back(obj);
    }
    return arr.dump(2) + "\n";
  }

  std::string render_table() const {
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
    for (const auto& r : rows)
      for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    std::string out = pad_row(header, width);
    for (const auto& r : rows) out += pad_row(r, width);
    return out;
  }

  std::string render(const std::string& format) const {
    if (format == "json") return render_json();
    if (format == "table") return render_table();
    return render_csv();
  }

 private:
  static std::string join(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) line += ',';
      line += cells[i];
    }
    return line + "\n";
  }

  static std::string pad_row(const std::vector<std::string>& cells,
                             const std::vector<std::size_t>& width) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) line += "  ";
      line += cells[i];
      if (i + 1 < cells.size()) line.append(width[i] - cells[i].size(), ' ');
    }
    return line + "\n";
  }
};

// Writes rendered output to --out (or stdout); `trailer` always goes to
// stdout. Nothing is written to the file unless rendering succeeded.
void deliver(const std::string& rendered, const std::string& out_path,
             const std::string& trailer = "") {
  if (out_path.empty()) {
    std::cout << rendered << trailer;
    return;
  }
  std::ofstream ofs(out_path);
  if (!ofs) throw IoError("cannot open output file " + out_path);
  ofs << rendered;
  ofs.flush();
  if (!ofs) throw IoError("failed writing output file " + out_path);
  std::cout << trailer;
}

// ── game assembly from flags ────────────────────────────────────────────────

struct GameFlags {
  std::string game_file;
  std::string scheme;
  std::string preset;
  std::vector<double> bimatrix;
  double b2 = 0;
  std::string pairing = "aligned";
  double gamma_angle = qgt::kPi / 2;
  CLI::Option* b2_opt = nullptr;
  CLI::Option* pairing_opt = nullptr;
  CLI::Option* gamma_opt = nullptr;
  CLI::Option* scheme_opt = nullptr;
  CLI::Option* preset_opt = nullptr;
  CLI::Option* bimatrix_opt = nullptr;
  CLI::Option* game_opt = nullptr;

  void add_to(CLI::App* cmd, bool with_b2 = true) {
    game_opt = cmd->add_option("--game", game_file,
                               "game description file (see README for the schema)");
    scheme_opt = cmd->add_option("--scheme", scheme, "classical, eisert, or mw");
    preset_opt = cmd->add_option("--preset", preset, "pd, bos, game28, or game29");
    bimatrix_opt = cmd->add_option("--bimatrix", bimatrix,
                                   "8 payoffs: Arr Brr Arc Brc Acr Bcr Acc Bcc")
                       ->expected(8);
    if (with_b2) {
      b2_opt = cmd->add_option("--b2", b2, "initial-state weight in [0,1] (mw)");
      pairing_opt = cmd->add_option("--pairing", pairing, "aligned or crossed (mw)")
                        ->check(CLI::IsMember({"aligned", "crossed"}));
    }
    gamma_opt = cmd->add_option("--gamma", gamma_angle,
                                "entangling angle in [0, pi/2] (eisert)");
  }

  qgt::GameSpec resolve() const {
    if (game_opt->count()) {
      if (scheme_opt->count() || preset_opt->count() || bimatrix_opt->count() ||
          (b2_opt && b2_opt->count()) || (pairing_opt && pairing_opt->count()) ||
          gamma_opt->count())
        throw std::invalid_argument("--game excludes the inline game flags");
      std::ifstream ifs(game_file);
      if (!ifs) throw IoError("cannot open game file " + game_file);
      std::stringstream buf;
      buf << ifs.rdbuf();
      if (ifs.bad()) throw IoError("failed reading game file " + game_file);
      return qgt::parse_game_spec(buf.str());
    }
    if (!scheme_opt->count()) throw std::invalid_argument("--scheme is required");
    qgt::GameSpec spec;
    spec.scheme = qgt::parse_scheme(scheme);
    if (preset_opt->count() && bimatrix_opt->count())
      throw std::invalid_argument("--preset and --bimatrix are mutually exclusive");
    if (preset_opt->count()) {
      spec.preset = preset;
      spec.bimatrix = qgt::preset_by_name(preset);
    } else if (bimatrix_opt->count()) {
      spec.preset.reset();
      spec.bimatrix = qgt::make_bimatrix({bimatrix[0], bimatrix[1]}, {bimatrix[2], bimatrix[3]},
                                         {bimatrix[4], bimatrix[5]}, {bimatrix[6], bimatrix[7]});
    } else {
      throw std::invalid_argument("one of --preset or --bimatrix is required");
    }
    if (spec.scheme != qgt::Scheme::mw &&
        ((b2_opt && b2_opt->count()) || (pairing_opt && pairing_opt->count())))
      throw std::invalid_argument("--b2/--pairing apply only to --scheme mw");
    if (spec.scheme != qgt::Scheme::eisert && gamma_opt->count())
      throw std::invalid_argument("--gamma applies only to --scheme eisert");
    spec.b2 = b2;
    spec.pairing = qgt::parse_pairing(pairing);
    spec.gamma = gamma_angle;
    spec.validate();
    return spec;
  }
};

// The tactic-profile commands treat classical as mw with no entanglement.
qgt::EntangledInitialState tactic_initial_state(const qgt::GameSpec& spec) {
  if (spec.scheme == qgt::Scheme::eisert)
    throw std::invalid_argument("this subcommand takes --scheme classical or mw");
  return spec.initial_state();
}

// ── strategy parsing ────────────────────────────────────────────────────────

double parse_radians(const std::string& text, const char* what) {
  try {
    return qgt::detail::parse_number(text, what);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument(std::string(what) + ": malformed number \"" + text + "\"");
  }
}

// C, D, Q, "theta", or "theta,phi" (radians).
qgt::QuantumStrategy parse_strategy(const std::string& text) {
  if (text == "C" || text == "c") return qgt::QuantumStrategy::C();
  if (text == "D" || text == "d") return qgt::QuantumStrategy::D();
  if (text == "Q" || text == "q") return qgt::QuantumStrategy::Q();
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    return qgt::QuantumStrategy::one_parameter(parse_radians(text, "strategy theta"));
  return qgt::QuantumStrategy::two_parameter(
      parse_radians(text.substr(0, comma), "strategy theta"),
      parse_radians(text.substr(comma + 1), "strategy phi"));
}

std::vector<double> linspace(double from, double to, int steps) {
  if (steps < 1) throw std::invalid_argument("steps must be at least 1");
  if (steps == 1) return {from};
  std::vector<double> out;
  out.reserve(steps);
  for (int k = 0; k < steps; ++k)
    out.push_back(from + (to - from) * (static_cast<double>(k) / (steps - 1)));
  return out;
}

std::vector<std::string> report_row(const qgt::EquilibriumReport<qgt::TacticProfile>& rep) {
  return {fmtg(rep.candidate.p),  fmtg(rep.candidate.q),  yesno(rep.is_nash),
          yesno(rep.is_strict),   yesno(rep.is_ess),      fmtg(rep.min_delta_row),
          fmtg(rep.min_delta_col)};
}

const std::vector<std::string> kReportHeader = {
    "p", "q", "is_nash", "is_strict", "is_ess", "min_delta_row", "min_delta_col"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum 2x2 games: payoffs, equilibria, evolutionary stability"};
  app.require_subcommand(1);

  std::string format = "csv";
  std::string out_path;
  double tol = qgt::kDefaultTol;
  app.add_option("--format", format, "csv, json, or table")
      ->check(CLI::IsMember({"csv", "json", "table"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "write output to this file instead of stdout");
  app.add_option("--tol", tol, "comparison tolerance")->capture_default_str();

  // payoff ──────────────────────────────────────────────────────────────────
  auto* payoff_cmd = app.add_subcommand("payoff", "payoff pair for one strategy profile");
  GameFlags payoff_game;
  payoff_game.add_to(payoff_cmd);
  std::string alice_arg, bob_arg;
  double p_arg = 0, q_arg = 0;
  auto* alice_opt = payoff_cmd->add_option("--alice", alice_arg, "row strategy: C, D, Q, or theta[,phi]");
  auto* bob_opt = payoff_cmd->add_option("--bob", bob_arg, "column strategy: C, D, Q, or theta[,phi]");
  auto* p_opt = payoff_cmd->add_option("--p", p_arg, "row tactic: probability of keeping the move");
  auto* q_opt = payoff_cmd->add_option("--q", q_arg, "column tactic: probability of keeping the move");
  payoff_cmd->callback([&] {
    const auto spec = payoff_game.resolve();
    std::pair<double, double> pp;
    if (spec.scheme == qgt::Scheme::eisert) {
      if (!alice_opt->count() || !bob_opt->count())
        throw std::invalid_argument("--scheme eisert requires --alice and --bob");
      if (p_opt->count() || q_opt->count())
        throw std::invalid_argument("--p/--q apply only to classical and mw schemes");
      pp = qgt::eisert_payoffs(spec.bimatrix, parse_strategy(alice_arg), parse_strategy(bob_arg),
                               spec.gamma);
    } else {
      if (!p_opt->count() || !q_opt->count())
        throw std::invalid_argument("schemes classical and mw require --p and --q");
      if (alice_opt->count() || bob_opt->count())
        throw std::invalid_argument("--alice/--bob apply only to --scheme eisert");
      if (spec.scheme == qgt::Scheme::classical)
        pp = qgt::classical_mixed(spec.bimatrix, p_arg, q_arg);
      else
        pp = qgt::mw_payoffs(spec.bimatrix, spec.initial_state(),
                             qgt::TacticProfile(p_arg, q_arg));
    }
    if (format == "json") {
      nlohmann::ordered_json obj;
      obj["p_a"] = fmt6(pp.first);
      obj["p_b"] = fmt6(pp.second);
      deliver(obj.dump(2) + "\n", out_path);
    } else {
      deliver(fmt6(pp.first) + " " + fmt6(pp.second) + "\n", out_path);
    }
  });

  // ne-scan ─────────────────────────────────────────────────────────────────
  auto* ne_cmd = app.add_subcommand("ne-scan",
                                 "classify the pure and interior equilibrium candidates");
  GameFlags ne_game;
  ne_game.add_to(ne_cmd);
  int ne_resolution = 101;
  ne_cmd->add_option("--resolution", ne_resolution, "deviation grid points (>= 101)")
      ->capture_default_str();
  ne_cmd->callback([&] {
    const auto spec = ne_game.resolve();
    const auto init = tactic_initial_state(spec);
    TableOut t;
    t.header = kReportHeader;
    for (const auto& cand : qgt::mw_ne_candidates(spec.bimatrix, init))
      t.rows.push_back(report_row(qgt::verify_nash(spec.bimatrix, init, cand, ne_resolution, tol)));
    deliver(t.render(format), out_path);
  });

  // ess-check ───────────────────────────────────────────────────────────────
  auto* check_cmd = app.add_subcommand("ess-check", "classify one tactic profile");
  GameFlags check_game;
  check_game.add_to(check_cmd);
  double check_p = 0, check_q = 0;
  int check_resolution = 101;
  check_cmd->add_option("--p", check_p, "row tactic of the candidate")->required();
  check_cmd->add_option("--q", check_q, "column tactic of the candidate")->required();
  check_cmd->add_option("--resolution", check_resolution, "deviation grid points (>= 101)")
      ->capture_default_str();
  check_cmd->callback([&] {
    const auto spec = check_game.resolve();
    const auto init = tactic_initial_state(spec);
    const auto rep = qgt::verify_nash(spec.bimatrix, init,
                                      qgt::TacticProfile(check_p, check_q), check_resolution, tol);
    TableOut t;
    t.header = kReportHeader;
    t.header.push_back("worst_row_dev");
    t.header.push_back("worst_col_dev");
    auto row = report_row(rep);
    row.push_back(fmtg(rep.witnesses.at(0).deviation));
    row.push_back(fmtg(rep.witnesses.at(1).deviation));
    t.rows.push_back(row);
    deliver(t.render(format), out_path);
  });

  // ess-scan ────────────────────────────────────────────────────────────────
  auto* scan_cmd = app.add_subcommand("ess-scan",
                                   "stability of one profile across initial-state weights");
  GameFlags scan_game;
  scan_game.add_to(scan_cmd, /*with_b2=*/false);
  std::string scan_pairing = "aligned";
  double scan_p = 0, scan_q = 0, scan_from = 0, scan_to = 1;
  int scan_steps = 11, scan_resolution = 101;
  scan_cmd->add_option("--pairing", scan_pairing, "aligned or crossed")
      ->check(CLI::IsMember({"aligned", "crossed"}));
  scan_cmd->add_option("--p", scan_p, "row tactic of the candidate")->required();
  scan_cmd->add_option("--q", scan_q, "column tactic of the candidate")->required();
  scan_cmd->add_option("--b2-from", scan_from, "first initial-state weight")->capture_default_str();
  scan_cmd->add_option("--b2-to", scan_to, "last initial-state weight")->capture_default_str();
  scan_cmd->add_option("--b2-steps", scan_steps, "number of weights")->capture_default_str();
  scan_cmd->add_option("--resolution", scan_resolution, "deviation grid points (>= 101)")
      ->capture_default_str();
  scan_cmd->callback([&] {
    const auto spec = scan_game.resolve();
    if (spec.scheme != qgt::Scheme::mw)
      throw std::invalid_argument("ess-scan requires --scheme mw");
    const auto scan = qgt::ess_region_scan(spec.bimatrix, qgt::TacticProfile(scan_p, scan_q),
                                           linspace(scan_from, scan_to, scan_steps),
                                           qgt::parse_pairing(scan_pairing), scan_resolution, tol);
    TableOut t;
    t.header = {"b2", "verdict", "min_delta_a", "min_delta_b"};
    for (const auto& pt : scan.points)
      t.rows.push_back(
          {fmtg(pt.b2), qgt::to_string(pt.verdict), fmtg(pt.min_delta_row), fmtg(pt.min_delta_col)});
    deliver(t.render(format), out_path);
  });

  // invade ──────────────────────────────────────────────────────────────────
  auto* invade_cmd = app.add_subcommand("invade", "mutant-invasion case study");
  std::string case_arg;
  double mut_theta = 0, mut_phi = 0, eps_init = 0.01;
  int invade_steps = 200;
  invade_cmd->add_option("--case", case_arg, "A, B, or C")->required();
  auto* theta_opt = invade_cmd->add_option("--theta", mut_theta, "mutant theta (radians)");
  auto* phi_opt = invade_cmd->add_option("--phi", mut_phi, "mutant phi (radians; cases B and C)");
  invade_cmd->add_option("--eps", eps_init, "initial mutant frequency in (0,1)")
      ->capture_default_str();
  invade_cmd->add_option("--steps", invade_steps, "replicator steps")->capture_default_str();
  invade_cmd->callback([&] {
    qgt::InvasionCase kind;
    if (case_arg == "A" || case_arg == "a")
      kind = qgt::InvasionCase::a;
    else if (case_arg == "B" || case_arg == "b")
      kind = qgt::InvasionCase::b;
    else if (case_arg == "C" || case_arg == "c")
      kind = qgt::InvasionCase::c;
    else
      throw std::invalid_argument("--case must be A, B, or C");
    if (!theta_opt->count()) throw std::invalid_argument("--theta is required");
    qgt::QuantumStrategy mutant;
    if (kind == qgt::InvasionCase::a) {
      if (phi_opt->count())
        throw std::invalid_argument("case A takes a one-parameter mutant; --phi not allowed");
      mutant = qgt::QuantumStrategy::one_parameter(mut_theta);
    } else {
      mutant = qgt::QuantumStrategy::two_parameter(mut_theta, mut_phi);
    }
    const auto rep = qgt::case_study(kind, mutant, eps_init, invade_steps);
    TableOut t;
    t.header = {"step", "mutant_frequency"};
    for (std::size_t i = 0; i < rep.trajectory.size(); ++i)
      t.rows.push_back({std::to_string(i), fmtg(rep.trajectory[i])});
    deliver(t.render(format), out_path, std::string("verdict=") + rep.verdict() + "\n");
  });

  // bos ─────────────────────────────────────────────────────────────────────
  auto* bos_cmd = app.add_subcommand("bos", "battle-of-the-sexes equilibria on entangled states");
  double bos_alpha = 3, bos_beta = 2, bos_gamma = 1, bos_b2 = 0;
  std::string bos_pairing = "both";
  int bos_resolution = 101;
  bos_cmd->add_option("--alpha", bos_alpha, "favorite payoff (alpha > beta > gamma)")
      ->capture_default_str();
  bos_cmd->add_option("--beta", bos_beta, "second payoff")->capture_default_str();
  bos_cmd->add_option("--gamma", bos_gamma, "miscoordination payoff")->capture_default_str();
  bos_cmd->add_option("--b2", bos_b2, "initial-state weight in [0,1]")->capture_default_str();
  bos_cmd->add_option("--pairing", bos_pairing, "aligned, crossed, or both")
      ->check(CLI::IsMember({"aligned", "crossed", "both"}))
      ->capture_default_str();
  bos_cmd->add_option("--resolution", bos_resolution, "deviation grid points (>= 101)")
      ->capture_default_str();
  bos_cmd->callback([&] {
    TableOut t;
    t.header = {"pairing"};
    for (const auto& h : kReportHeader) t.header.push_back(h);
    for (const char* name : {"aligned", "crossed"}) {
      if (bos_pairing != "both" && bos_pairing != name) continue;
      const auto init = qgt::EntangledInitialState::from_b2(bos_b2, qgt::parse_pairing(name));
      for (const auto& rep : qgt::bos_ne(bos_alpha, bos_beta, bos_gamma, init, bos_resolution, tol)) {
        auto row = report_row(rep);
        row.insert(row.begin(), name);
        t.rows.push_back(row);
      }
    }
    deliver(t.render(format), out_path);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
