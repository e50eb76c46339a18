// Command-line front end: capacities, channel conversion, zero-error
// searches and certificates, gain curves, bundled result checks, channel
// JSON I/O. Exit codes: 0 pass, 1 claim-check or validation failure,
// 2 usage error.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "csitq/asymptotics.hpp"
#include "csitq/channel_io.hpp"
#include "csitq/channels.hpp"
#include "csitq/conversion.hpp"
#include "csitq/figures.hpp"
#include "csitq/repro.hpp"
#include "csitq/shannon.hpp"
#include "csitq/zero_error.hpp"

namespace {

using nlohmann::json;

constexpr uint64_t kDefaultSeed = 0xC5C5;

csitq::ChannelWithState builtin_channel(const std::string& name) {
  if (name == "c5") return csitq::c5_channel();
  if (name == "bks-magic-square") return csitq::bks_channel(csitq::magic_square_bks()).channel;
  if (name.size() >= 2 && name[0] == 'k') {
    int m = std::stoi(name.substr(1));
    return csitq::km_channel(m);
  }
  throw CLI::ValidationError("unknown builtin channel: " + name +
                             " (try c5, k<m>, bks-magic-square)");
}

void print_repro(const csitq::ReproReport& report, bool as_json) {
  if (as_json) {
    json j;
    j["claim"] = report.claim;
    j["pass"] = report.pass();
    j["seconds"] = report.seconds;
    json checks = json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    j["checks"] = std::move(checks);
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::cout << "claim " << report.claim << '\n';
  for (const auto& c : report.checks) {
    std::cout << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << ": " << c.detail
              << '\n';
  }
  std::cout << (report.pass() ? "pass" : "FAIL") << " (" << std::fixed << std::setprecision(3)
            << report.seconds << " s)\n";
}

json encoders_to_json(const csitq::Encoders& enc) {
  json j;
  j["n"] = enc.n;
  j["first_use"] = enc.first_use;
  if (enc.n == 2) j["second_use"] = enc.second_use;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulator and analysis tool for classical channels with causal "
               "transmitter state information, with and without shared entanglement"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  // capacity ------------------------------------------------------------
  auto* capacity = app.add_subcommand("capacity", "channel capacity computations");
  capacity->require_subcommand(1);

  auto* cap_classical = capacity->add_subcommand(
      "classical", "causal-CSIT capacity via Shannon strategies and Blahut-Arimoto");
  std::string cap_channel_path;
  double cap_tol = 1e-9;
  cap_classical->add_option("--channel", cap_channel_path, "channel JSON file")->required();
  cap_classical->add_option("--tol", cap_tol, "duality gap tolerance");

  auto* cap_km = capacity->add_subcommand("km-closed-form",
                                          "closed-form capacity of the noisy complete graph");
  int cap_m = 0;
  double cap_p = 1.0;
  cap_km->add_option("--m", cap_m, "vertex count")->required();
  cap_km->add_option("--p", cap_p, "noise parameter")->required();

  // convert ---------------------------------------------------------------
  auto* convert = app.add_subcommand("convert", "Bell-pair conversion to an effective BSC");
  std::string convert_graph;
  int convert_m = 5;
  double convert_p = 1.0;
  uint64_t convert_mc = 0;
  uint64_t convert_seed = kDefaultSeed;
  bool convert_csv = false;
  convert->add_option("--graph", convert_graph, "c5 or km")->required();
  convert->add_option("--m", convert_m, "vertex count for km");
  convert->add_option("--p", convert_p, "noise parameter");
  convert->add_option("--mc", convert_mc, "Monte Carlo sample count (0 = skip)");
  convert->add_option("--seed", convert_seed, "Monte Carlo seed");
  convert->add_flag("--csv", convert_csv, "CSV output");

  // zero-error ------------------------------------------------------------
  auto* zero = app.add_subcommand("zero-error", "zero-error searches and certificates");
  zero->require_subcommand(1);

  auto* zero_graph = zero->add_subcommand("graph", "search a graph channel for a zero-error code");
  std::string zero_graph_path;
  int zero_M = 2;
  int zero_n = 1;
  zero_graph->add_option("--graph", zero_graph_path, "graph JSON file")->required();
  zero_graph->add_option("--M", zero_M, "message count");
  zero_graph->add_option("--n", zero_n, "block length (1 or 2)")->check(CLI::IsMember({1, 2}));

  auto* zero_bks = zero->add_subcommand("bks", "activation channel checks");
  std::string zero_builtin = "magic-square";
  std::string zero_report_path;
  zero_bks->add_option("--builtin", zero_builtin, "B-KS set name (magic-square)");
  zero_bks->add_option("--report", zero_report_path, "write the protocol transcript JSON here");

  // asymptotics -----------------------------------------------------------
  auto* asym = app.add_subcommand("asymptotics", "assisted/classical gain curve CSV");
  int asym_m = 8;
  std::vector<double> asym_grid;
  std::string asym_out;
  asym->add_option("--m", asym_m, "vertex count")->required();
  asym->add_option("--grid", asym_grid, "explicit p values (default: log grid 1e-5..1)");
  asym->add_option("--out", asym_out, "output file (default: stdout)");

  // reproduce ---------------------------------------------------------------
  auto* repro = app.add_subcommand("reproduce", "run a bundled result check");
  std::string repro_claim;
  int repro_m = 0;
  repro->add_option("claim", repro_claim, "one of thm1 thm2 cor1 thm4 thm5 lemma1 lemma2")
      ->required();
  repro->add_option("--m", repro_m, "graph-size override where applicable");

  // figure ------------------------------------------------------------------
  auto* figure = app.add_subcommand("figure", "emit figure data");
  std::string figure_name;
  std::string figure_csv = "fig3.csv";
  std::string figure_svg = "fig3.svg";
  int figure_m = 8;
  figure->add_option("name", figure_name, "figure name (fig3)")->required();
  figure->add_option("--csv", figure_csv, "CSV output path");
  figure->add_option("--svg", figure_svg, "SVG output path");
  figure->add_option("--m", figure_m, "vertex count");

  // channel -------------------------------------------------------------------
  auto* channel = app.add_subcommand("channel", "channel JSON utilities");
  channel->require_subcommand(1);
  auto* channel_list = channel->add_subcommand("list", "list builtin channels");
  auto* channel_show = channel->add_subcommand("show", "summarize or materialize a channel");
  std::string show_builtin, show_path, show_out;
  double show_p = 1.0;
  channel_show->add_option("--builtin", show_builtin, "builtin name (c5, k<m>, bks-magic-square)");
  channel_show->add_option("--channel", show_path, "channel JSON file");
  channel_show->add_option("--p", show_p, "wrap in a noisy version with this p");
  channel_show->add_option("--out", show_out, "write the channel JSON here");
  auto* channel_validate = channel->add_subcommand("validate", "re-check channel invariants");
  std::string validate_path;
  channel_validate->add_option("--channel", validate_path, "channel JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cap_classical->parsed()) {
      auto ch = csitq::load_channel(cap_channel_path);
      auto strategies = csitq::shannon_strategy_channel(ch);
      auto report = csitq::blahut_arimoto(strategies, cap_tol);
      if (as_json) {
        json j;
        j["capacity_bits"] = report.capacity_bits;
        j["gap_bound"] = report.gap_bound;
        j["iterations"] = report.iterations;
        j["converged"] = report.converged;
        j["strategy_count"] = strategies.strategy_count;
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << std::setprecision(12) << "capacity_bits " << report.capacity_bits
                  << "\ngap_bound " << report.gap_bound << "\niterations " << report.iterations
                  << "\nstrategies " << strategies.strategy_count << '\n';
      }
      return 0;
    }

    if (cap_km->parsed()) {
      double value = csitq::complete_graph_capacity(cap_m, cap_p);
      if (as_json) {
        std::cout << json{{"m", cap_m}, {"p", cap_p}, {"capacity_bits", value}}.dump(2) << '\n';
      } else {
        std::cout << std::setprecision(12) << value << '\n';
      }
      return 0;
    }

    if (convert->parsed()) {
      csitq::ChannelWithState ch;
      csitq::AngleScheme scheme;
      if (convert_graph == "c5") {
        ch = csitq::c5_channel();
        scheme = csitq::c5_angles();
      } else if (convert_graph == "km") {
        ch = csitq::km_channel(convert_m);
        scheme = csitq::complete_graph_angles(convert_m);
      } else {
        throw CLI::ValidationError("--graph must be c5 or km");
      }
      auto analytic = csitq::induced_bsc_analytic(ch, convert_p, scheme);
      double ea = csitq::assisted_rate(analytic.agree());
      auto noisy = csitq::noisy_version(ch, convert_p);
      auto capacity = csitq::blahut_arimoto(csitq::shannon_strategy_channel(noisy));

      json j;
      j["graph"] = convert_graph;
      if (convert_graph == "km") j["m"] = convert_m;
      j["p"] = convert_p;
      j["agree0"] = analytic.p_agree_given_x0;
      j["agree1"] = analytic.p_agree_given_x1;
      j["crossover"] = analytic.crossover;
      j["ea_rate"] = ea;
      j["classical_capacity"] = capacity.capacity_bits;
      if (convert_mc > 0) {
        auto mc = csitq::induced_bsc_montecarlo(ch, convert_p, scheme, convert_mc, convert_seed);
        j["mc"] = {{"samples", mc.samples},
                   {"seed", mc.seed},
                   {"agree0", mc.bsc.p_agree_given_x0},
                   {"agree1", mc.bsc.p_agree_given_x1},
                   {"stderr0", mc.stderr_given_x0},
                   {"stderr1", mc.stderr_given_x1}};
      }
      if (convert_csv) {
        std::cout << "agree0,agree1,crossover,ea_rate,classical_capacity\r\n"
                  << std::setprecision(17) << analytic.p_agree_given_x0 << ','
                  << analytic.p_agree_given_x1 << ',' << analytic.crossover << ',' << ea << ','
                  << capacity.capacity_bits << "\r\n";
      } else {
        std::cout << j.dump(2) << '\n';
      }
      return 0;
    }

    if (zero_graph->parsed()) {
      auto g = csitq::load_graph(zero_graph_path);
      auto ch = csitq::graph_channel(g, csitq::uniform_dist(static_cast<int>(g.edges.size())));
      auto verdict = zero_n == 1 ? csitq::classical_zero_error_oneshot(ch, zero_M)
                                 : csitq::classical_zero_error_n2(ch, zero_M);
      auto bip = csitq::is_bipartite(g);
      if (as_json) {
        json j;
        j["feasible"] = verdict.feasible;
        j["nodes_explored"] = verdict.nodes_explored;
        j["bipartite"] = bip.bipartite;
        if (verdict.witness) j["witness"] = encoders_to_json(*verdict.witness);
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << "feasible " << (verdict.feasible ? "yes" : "no") << "\nnodes "
                  << verdict.nodes_explored << "\nbipartite " << (bip.bipartite ? "yes" : "no")
                  << '\n';
      }
      return 0;
    }

    if (zero_bks->parsed()) {
      if (zero_builtin != "magic-square") {
        throw CLI::ValidationError("unknown B-KS builtin: " + zero_builtin);
      }
      auto set = csitq::magic_square_bks();
      auto check = csitq::verify_bks(set);
      auto bks = csitq::bks_channel(set);
      auto classical = csitq::classical_zero_error_oneshot(bks.channel, 2);
      auto protocol = csitq::entangled_zero_error_protocol(bks);
      bool cliques = true;
      for (int i = 0; i < set.a_count(); ++i) {
        for (int j2 = 0; j2 < set.b_count(); ++j2) {
          cliques = cliques && csitq::two_clique_certificate(bks, i, j2).holds;
        }
      }

      json transcript;
      transcript["covering_property"] = check.holds;
      transcript["classical_oneshot_feasible"] = classical.feasible;
      transcript["classical_nodes"] = classical.nodes_explored;
      transcript["success_probability"] = protocol.success_probability;
      transcript["min_conditional_success"] = protocol.min_conditional_success;
      transcript["third_outcome_mass"] = protocol.third_outcome_mass;
      transcript["two_clique_certificates"] = cliques;
      json branches = json::array();
      for (const auto& b : protocol.branches) {
        branches.push_back({{"state", {b.state_i, b.state_j}},
                            {"message", b.message},
                            {"outcome_k", b.outcome_k},
                            {"input", b.input},
                            {"output", {bks.output_pairs[b.output].first,
                                        bks.output_pairs[b.output].second}},
                            {"pvm", b.pvm_outcome},
                            {"probability", b.probability},
                            {"decoded", b.decoded}});
      }
      transcript["branches"] = std::move(branches);
      if (!zero_report_path.empty()) {
        std::ofstream out(zero_report_path);
        if (!out) throw std::runtime_error("cannot write " + zero_report_path);
        out << transcript.dump(2) << '\n';
      }
      if (as_json) {
        transcript.erase("branches");
        std::cout << transcript.dump(2) << '\n';
      } else {
        std::cout << "covering property " << (check.holds ? "holds" : "FAILS")
                  << "\nclassical one-shot (M=2) "
                  << (classical.feasible ? "feasible" : "infeasible") << "\nassisted success "
                  << std::setprecision(12) << protocol.min_conditional_success
                  << "\nthird-projector mass " << protocol.third_outcome_mass
                  << "\ntwo-clique certificates " << (cliques ? "hold" : "FAIL") << '\n';
        if (!zero_report_path.empty()) std::cout << "transcript: " << zero_report_path << '\n';
      }
      bool ok = check.holds && !classical.feasible &&
                protocol.min_conditional_success >= 1.0 - 1e-12 && cliques;
      return ok ? 0 : 1;
    }

    if (asym->parsed()) {
      auto grid = asym_grid.empty() ? csitq::default_p_grid() : asym_grid;
      auto curve = csitq::gain_ratio_curve(asym_m, grid);
      if (asym_out.empty()) {
        csitq::write_ratio_csv(std::cout, curve);
      } else {
        std::ofstream out(asym_out, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + asym_out);
        csitq::write_ratio_csv(out, curve);
      }
      return 0;
    }

    if (repro->parsed()) {
      auto report = csitq::reproduce(repro_claim, repro_m);
      print_repro(report, as_json);
      return report.pass() ? 0 : 1;
    }

    if (figure->parsed()) {
      if (figure_name != "fig3") throw CLI::ValidationError("unknown figure: " + figure_name);
      auto curve = csitq::gain_ratio_curve(figure_m, csitq::default_p_grid());
      {
        std::ofstream out(figure_csv, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + figure_csv);
        csitq::write_ratio_csv(out, curve);
      }
      {
        std::ofstream out(figure_svg, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + figure_svg);
        out << csitq::ratio_curve_svg(curve);
      }
      std::cout << "wrote " << figure_csv << " and " << figure_svg << '\n';
      return 0;
    }

    if (channel_list->parsed()) {
      std::cout << "c5                 cyclic 5-vertex graph channel, y = x + s (mod 5)\n"
                << "k<m>               complete-graph channel on m vertices (e.g. k4)\n"
                << "bks-magic-square   24-input activation channel from the magic-square set\n";
      return 0;
    }

    if (channel_show->parsed()) {
      if (show_builtin.empty() == show_path.empty()) {
        throw CLI::ValidationError("channel show: give exactly one of --builtin / --channel");
      }
      auto ch = show_builtin.empty() ? csitq::load_channel(show_path)
                                     : builtin_channel(show_builtin);
      if (show_p < 1.0) ch = csitq::noisy_version(ch, show_p);
      if (!show_out.empty()) csitq::save_channel(ch, show_out);
      if (as_json) {
        std::cout << csitq::channel_to_json(ch).dump(2) << '\n';
      } else {
        std::cout << "x_card " << ch.x_card << "\ny_card " << ch.y_card << "\ns_card "
                  << ch.s_card << "\ndeterministic " << (ch.is_deterministic() ? "yes" : "no")
                  << '\n';
        for (const auto& [k, v] : ch.metadata) std::cout << "metadata." << k << " " << v << '\n';
        if (!show_out.empty()) std::cout << "wrote " << show_out << '\n';
      }
      return 0;
    }

    if (channel_validate->parsed()) {
      auto errors = [&] {
        try {
          auto ch = csitq::load_channel(validate_path);
          return ch.validate();
        } catch (const std::exception& e) {
          return std::vector<std::string>{e.what()};
        }
      }();
      if (errors.empty()) {
        std::cout << "valid\n";
        return 0;
      }
      for (const auto& e : errors) std::cout << "invalid: " << e << '\n';
      return 1;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
