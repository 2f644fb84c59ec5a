// ptcav command-line front end: parameter sweeps, figure presets,
// self-verification, CSV/JSON emission.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ptcav/ptcav.hpp"

namespace {

using namespace ptcav;

struct CommonOpts {
    double g = 1.0;
    double gamma = 0.5;
    std::string state = "vacuum";
    double t_max = 1.0;
    int steps = 100;
    std::string phi = "pi/4";
    std::string format = "csv";
    std::string output = "-";
    int threads = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--g", o.g, "Coupling strength g")->take_last();
    cmd->add_option("--gamma", o.gamma, "Gain/loss rate gamma")->take_last();
    cmd->add_option("--state", o.state,
                    "Input state: vacuum | coherent:r1,th1,r2,th2 | noon:n | thermal:beta "
                    "(angles in radians; pi fractions like pi/4 accepted)")
        ->take_last();
    cmd->add_option("--t-max", o.t_max, "End of the time grid")
        ->check(CLI::NonNegativeNumber)
        ->take_last();
    cmd->add_option("--steps", o.steps, "Number of grid intervals (rows = steps+1)")
        ->check(CLI::NonNegativeNumber)
        ->take_last();
    cmd->add_option("--phi", o.phi, "Quadrature phase (radians; pi fractions accepted)")
        ->take_last();
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->take_last();
    cmd->add_option("--output", o.output, "Output path, or - for stdout")->take_last();
    cmd->add_option("--threads", o.threads, "Worker threads for sweep evaluation")
        ->check(CLI::PositiveNumber)
        ->take_last();
    cmd->add_option("--config", "Flat key=value config file; command-line flags win")
        ->take_last();  // consumed before parsing; kept for --help
}

// Flat key=value config support.  The file is expanded into option tokens
// injected right after the subcommand name, so later command-line flags win
// (every option takes its last occurrence).
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
    std::string path;
    std::vector<std::string> out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--config") {
            if (i + 1 >= args.size()) throw std::invalid_argument("--config requires a path");
            path = args[++i];
        } else if (a.rfind("--config=", 0) == 0) {
            path = a.substr(9);
        } else {
            out.push_back(a);
        }
    }
    if (path.empty()) return out;
    if (out.empty()) throw std::invalid_argument("--config requires a subcommand");

    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
    std::vector<std::string> injected;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": expected key=value");
        const std::string key = line.substr(0, eq);
        if (key == "config")
            throw std::invalid_argument(path + ": nested config files are not supported");
        injected.push_back("--" + key);
        injected.push_back(line.substr(eq + 1));
    }
    out.insert(out.begin() + 1, injected.begin(), injected.end());
    return out;
}

double grid_point(double lo, double hi, int steps, int i) {
    return steps == 0 ? lo : lo + (hi - lo) * double(i) / double(steps);
}

// Row times 0..steps; --t-max 0 --steps 0 yields the single t = 0 row.
double time_point(const CommonOpts& o, int i) { return grid_point(0.0, o.t_max, o.steps, i); }

void emit(const Table& table, const CommonOpts& o) {
    std::ostringstream body;
    if (o.format == "json")
        write_json(table, body);
    else
        write_csv(table, body);
    if (o.output == "-") {
        std::cout << body.str();
        return;
    }
    std::ofstream out(o.output, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file '" + o.output + "'");
    out << body.str();
}

// The params echo pins every value that defines the data.  Execution
// details (threads, output path, format) are deliberately left out so the
// emitted bytes are invariant under them.
void echo_common(Table& t, const char* cmd, const CommonOpts& o, const InputState& state) {
    t.params.emplace_back("cmd", cmd);
    t.params.emplace_back("g", format_g17(o.g));
    t.params.emplace_back("gamma", format_g17(o.gamma));
    t.params.emplace_back("state", canonical_state_string(state));
    t.params.emplace_back("t-max", format_g17(o.t_max));
    t.params.emplace_back("steps", std::to_string(o.steps));
}

int run_evolve(const CommonOpts& o) {
    const InputState state = parse_state(o.state);
    const SystemParams p{o.g, o.gamma, 0.0};
    validate(p);
    const MomentState st0 = initial_moments(state);

    Table table;
    echo_common(table, "evolve", o, state);
    table.columns = {"t", "gt", "n1", "n2"};
    table.rows = parallel_rows(std::size_t(o.steps) + 1, o.threads, [&](std::size_t i) {
        const double t = time_point(o, int(i));
        const auto [n1, n2] = photon_numbers(propagate(p, st0, t));
        return std::vector<double>{t, o.g * t, n1, n2};
    });
    emit(table, o);
    return 0;
}

struct SweepAxis {
    bool active = false;
    double lo = 0.0, hi = 0.0;
    int steps = 0;
};

int run_zeno(const CommonOpts& o, const SweepAxis& gamma_axis, const SweepAxis& dtheta_axis) {
    if (gamma_axis.active && dtheta_axis.active)
        throw std::invalid_argument("zeno: choose one sweep axis, --gamma-steps or --dtheta-steps");
    const InputState state = parse_state(o.state);
    if (dtheta_axis.active && !std::holds_alternative<Coherent>(state))
        throw std::invalid_argument("zeno: the dtheta sweep requires a coherent state");
    validate(SystemParams{o.g, o.gamma, 0.0});

    Table table;
    echo_common(table, "zeno", o, state);

    const std::size_t nt = std::size_t(o.steps) + 1;
    auto zeno_row = [&](double first, const SystemParams& p, const InputState& st, double t) {
        const ZenoResult z = zeno_parameter(p, st, t);
        return std::vector<double>{first, t, z.zeta1, z.zeta2, z.defined ? 1.0 : 0.0};
    };

    if (gamma_axis.active) {
        table.params.emplace_back("gamma-min", format_g17(gamma_axis.lo));
        table.params.emplace_back("gamma-max", format_g17(gamma_axis.hi));
        table.params.emplace_back("gamma-steps", std::to_string(gamma_axis.steps));
        table.columns = {"gamma", "t", "zeta1", "zeta2", "defined"};
        const std::size_t ng = std::size_t(gamma_axis.steps) + 1;
        table.rows = parallel_rows(ng * nt, o.threads, [&](std::size_t k) {
            const double gm = grid_point(gamma_axis.lo, gamma_axis.hi, gamma_axis.steps,
                                         int(k / nt));
            const double t = time_point(o, int(k % nt));
            return zeno_row(gm, SystemParams{o.g, gm, 0.0}, state, t);
        });
    } else if (dtheta_axis.active) {
        table.params.emplace_back("dtheta-min", format_g17(dtheta_axis.lo));
        table.params.emplace_back("dtheta-max", format_g17(dtheta_axis.hi));
        table.params.emplace_back("dtheta-steps", std::to_string(dtheta_axis.steps));
        table.columns = {"dtheta", "t", "zeta1", "zeta2", "defined"};
        const Coherent base = std::get<Coherent>(state);
        const SystemParams p{o.g, o.gamma, 0.0};
        const std::size_t nd = std::size_t(dtheta_axis.steps) + 1;
        table.rows = parallel_rows(nd * nt, o.threads, [&](std::size_t k) {
            const double dth = grid_point(dtheta_axis.lo, dtheta_axis.hi, dtheta_axis.steps,
                                          int(k / nt));
            const double t = time_point(o, int(k % nt));
            // Only the relative phase matters; theta2 is held at 0.
            const InputState st = Coherent{base.r1, dth, base.r2, 0.0};
            return zeno_row(dth, p, st, t);
        });
    } else {
        table.columns = {"t", "zeta1", "zeta2", "defined"};
        const SystemParams p{o.g, o.gamma, 0.0};
        table.rows = parallel_rows(nt, o.threads, [&](std::size_t i) {
            const double t = time_point(o, int(i));
            const ZenoResult z = zeno_parameter(p, state, t);
            return std::vector<double>{t, z.zeta1, z.zeta2, z.defined ? 1.0 : 0.0};
        });
    }
    emit(table, o);
    return 0;
}

int run_antibunch(const CommonOpts& o, const SweepAxis& gamma_axis) {
    const InputState state = parse_state(o.state);
    const SystemParams base{o.g, o.gamma, 0.0};
    validate(base);
    const MomentState st0 = initial_moments(state);

    Table table;
    echo_common(table, "antibunch", o, state);
    table.columns = {"t", "gamma_over_g", "antibunch"};
    const std::size_t nt = std::size_t(o.steps) + 1;
    if (gamma_axis.active) {
        table.params.emplace_back("gamma-min", format_g17(gamma_axis.lo));
        table.params.emplace_back("gamma-max", format_g17(gamma_axis.hi));
        table.params.emplace_back("gamma-steps", std::to_string(gamma_axis.steps));
        const std::size_t ng = std::size_t(gamma_axis.steps) + 1;
        table.rows = parallel_rows(ng * nt, o.threads, [&](std::size_t k) {
            const double gm = grid_point(gamma_axis.lo, gamma_axis.hi, gamma_axis.steps,
                                         int(k / nt));
            const double t = time_point(o, int(k % nt));
            const double a = antibunching_witness(propagate({o.g, gm, 0.0}, st0, t));
            return std::vector<double>{t, gm / o.g, a};
        });
    } else {
        table.rows = parallel_rows(nt, o.threads, [&](std::size_t i) {
            const double t = time_point(o, int(i));
            const double a = antibunching_witness(propagate(base, st0, t));
            return std::vector<double>{t, o.gamma / o.g, a};
        });
    }
    emit(table, o);
    return 0;
}

int run_squeeze(const CommonOpts& o, const SweepAxis& g_axis) {
    const InputState state = parse_state(o.state);
    const double phi = parse_angle(o.phi);
    validate(SystemParams{o.g, o.gamma, 0.0});
    const MomentState st0 = initial_moments(state);

    Table table;
    echo_common(table, "squeeze", o, state);
    table.params.emplace_back("phi", format_g17(phi));
    table.columns = {"gamma_t", "g_over_gamma", "V", "W"};
    const std::size_t nt = std::size_t(o.steps) + 1;
    auto row = [&](double g, double t) {
        const MomentState st = propagate({g, o.gamma, 0.0}, st0, t);
        return std::vector<double>{o.gamma * t, g / o.gamma, sum_squeezing(st, phi),
                                   difference_squeezing(st, phi)};
    };
    if (g_axis.active) {
        table.params.emplace_back("g-min", format_g17(g_axis.lo));
        table.params.emplace_back("g-max", format_g17(g_axis.hi));
        table.params.emplace_back("g-steps", std::to_string(g_axis.steps));
        const std::size_t ng = std::size_t(g_axis.steps) + 1;
        table.rows = parallel_rows(ng * nt, o.threads, [&](std::size_t k) {
            return row(grid_point(g_axis.lo, g_axis.hi, g_axis.steps, int(k / nt)),
                       time_point(o, int(k % nt)));
        });
    } else {
        table.rows = parallel_rows(nt, o.threads,
                                   [&](std::size_t i) { return row(o.g, time_point(o, int(i))); });
    }
    emit(table, o);
    return 0;
}

int run_verify(bool strict, bool json, const std::string& output) {
    const auto checks = run_verification({strict});
    std::ostringstream body;
    bool all_pass = true;
    if (json) {
        body << "[";
        for (std::size_t i = 0; i < checks.size(); ++i) {
            const auto& c = checks[i];
            if (i) body << ',';
            body << "{\"name\":\"" << c.name << "\",\"tolerance\":" << format_g17(c.tolerance)
                 << ",\"max_error\":" << format_g17(c.max_error)
                 << ",\"pass\":" << (c.pass ? "true" : "false")
                 << ",\"strict_exempt\":" << (c.strict_exempt ? "true" : "false") << ",\"note\":\""
                 << c.note << "\"}";
            all_pass = all_pass && c.pass;
        }
        body << "]\n";
    } else {
        char line[160];
        std::snprintf(line, sizeof line, "%-20s %-10s %-12s %-6s %s\n", "check", "tolerance",
                      "max-error", "result", "note");
        body << line;
        for (const auto& c : checks) {
            const std::string note = strict && c.strict_exempt ? "exempt: " + c.note : c.note;
            std::snprintf(line, sizeof line, "%-20s %-10.1e %-12.3e %-6s %s\n", c.name.c_str(),
                          c.tolerance, c.max_error, c.pass ? "PASS" : "FAIL", note.c_str());
            body << line;
            all_pass = all_pass && c.pass;
        }
        body << (all_pass ? "all checks passed\n" : "VERIFICATION FAILED\n");
    }
    if (output == "-") {
        std::cout << body.str();
    } else {
        std::ofstream out(output, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot open output file '" + output + "'");
        out << body.str();
    }
    return all_pass ? 0 : 1;
}

int dispatch(const std::vector<std::string>& args);

// Every figure preset is a pure alias for a full command line (documented
// by `figure --list`); running the alias and the expansion byte-match.
const std::map<std::string, std::map<char, std::vector<std::string>>>& figure_presets() {
    static const std::map<std::string, std::map<char, std::vector<std::string>>> presets = {
        {"fig2",
         {{'a', {"evolve", "--g", "1", "--gamma", "0.5", "--state", "vacuum", "--t-max", "4",
                 "--steps", "400"}},
          {'b', {"evolve", "--g", "1", "--gamma", "1.1", "--state", "vacuum", "--t-max", "4",
                 "--steps", "400"}},
          {'c', {"evolve", "--g", "1", "--gamma", "0.5", "--state", "coherent:1,pi/4,1,pi/4",
                 "--t-max", "4", "--steps", "400"}},
          {'d', {"evolve", "--g", "1", "--gamma", "1.1", "--state", "coherent:1,pi/4,1,pi/4",
                 "--t-max", "4", "--steps", "400"}},
          {'e', {"evolve", "--g", "1", "--gamma", "0.5", "--state", "noon:1", "--t-max", "4",
                 "--steps", "400"}},
          {'f', {"evolve", "--g", "1", "--gamma", "1.1", "--state", "noon:1", "--t-max", "4",
                 "--steps", "400"}},
          {'g', {"evolve", "--g", "1", "--gamma", "0.5", "--state", "thermal:1", "--t-max", "4",
                 "--steps", "400"}},
          {'h', {"evolve", "--g", "1", "--gamma", "1.1", "--state", "thermal:1", "--t-max", "4",
                 "--steps", "400"}}}},
        {"fig4",
         {{'a', {"zeno", "--g", "1", "--state", "vacuum", "--gamma-min", "0.1", "--gamma-max",
                 "2", "--gamma-steps", "38", "--t-max", "3", "--steps", "30"}},
          {'b', {"zeno", "--g", "1", "--state", "noon:1", "--gamma-min", "0.1", "--gamma-max",
                 "2", "--gamma-steps", "38", "--t-max", "3", "--steps", "30"}},
          {'c', {"zeno", "--g", "1", "--state", "thermal:1", "--gamma-min", "0.1", "--gamma-max",
                 "2", "--gamma-steps", "38", "--t-max", "3", "--steps", "30"}}}},
        {"fig5",
         {{'a', {"zeno", "--g", "1", "--state", "coherent:1,pi,1,-pi/4", "--gamma-min", "0.1",
                 "--gamma-max", "2", "--gamma-steps", "38", "--t-max", "3", "--steps", "30"}},
          {'b', {"zeno", "--g", "1", "--gamma", "0.5", "--state", "coherent:1,0,1,0",
                 "--dtheta-min", "0", "--dtheta-max", "2pi", "--dtheta-steps", "719", "--t-max",
                 "3", "--steps", "30"}}}},
        {"fig6",
         {{'a', {"antibunch", "--g", "1", "--state", "coherent:1,pi/2,2,pi/2", "--gamma-min",
                 "0.1", "--gamma-max", "2", "--gamma-steps", "38", "--t-max", "4", "--steps",
                 "400"}},
          {'b', {"antibunch", "--g", "1", "--state", "noon:1", "--gamma-min", "0.1",
                 "--gamma-max", "2", "--gamma-steps", "38", "--t-max", "4", "--steps", "400"}}}},
        {"fig7",
         {{'a', {"squeeze", "--gamma", "1", "--state", "vacuum", "--g-min", "0.5", "--g-max",
                 "2", "--g-steps", "3", "--t-max", "4", "--steps", "400", "--phi", "pi/4"}}}},
    };
    return presets;
}

char default_panel(const std::string& name) { return name == "fig5" ? 'b' : 'a'; }

int run_figure(const std::string& name, const std::string& panel, bool list,
               const std::vector<std::string>& passthrough) {
    if (list) {
        for (const auto& [fig, panels] : figure_presets())
            for (const auto& [p, argv] : panels) {
                std::cout << fig << " --panel " << p << (p == default_panel(fig) ? " (default)" : "")
                          << " =>";
                for (const auto& a : argv) std::cout << ' ' << a;
                std::cout << '\n';
            }
        return 0;
    }
    const auto fig = figure_presets().find(name);
    if (fig == figure_presets().end())
        throw std::invalid_argument("unknown figure '" + name + "' (try: figure --list)");
    const char p = panel.empty() ? default_panel(name) : panel[0];
    const auto entry = fig->second.find(p);
    if (panel.size() > 1 || entry == fig->second.end())
        throw std::invalid_argument("figure " + name + " has no panel '" + panel + "'");
    std::vector<std::string> argv = entry->second;
    argv.insert(argv.end(), passthrough.begin(), passthrough.end());
    return dispatch(argv);
}

int dispatch(const std::vector<std::string>& raw_args) {
    const std::vector<std::string> args = expand_config(raw_args);

    CLI::App app{"PT-symmetric two-cavity moment simulator"};
    app.require_subcommand(1);

    CommonOpts evolve_opts, zeno_opts, anti_opts, squeeze_opts;
    SweepAxis zeno_gamma, zeno_dtheta, anti_gamma, squeeze_g;
    std::string zeno_dtheta_min = "0", zeno_dtheta_max = "2pi";

    auto* evolve = app.add_subcommand("evolve", "Average photon numbers on a time grid");
    add_common(evolve, evolve_opts);

    auto* zeno = app.add_subcommand("zeno", "Zeno parameter sweeps");
    add_common(zeno, zeno_opts);
    auto* zg = zeno->add_option("--gamma-steps", zeno_gamma.steps, "Sweep gamma (2-D output)")
                   ->check(CLI::NonNegativeNumber);
    zeno->add_option("--gamma-min", zeno_gamma.lo, "Gamma sweep lower bound");
    zeno->add_option("--gamma-max", zeno_gamma.hi, "Gamma sweep upper bound");
    auto* zd = zeno->add_option("--dtheta-steps", zeno_dtheta.steps,
                                "Sweep the coherent relative phase (2-D output)")
                   ->check(CLI::NonNegativeNumber);
    zeno->add_option("--dtheta-min", zeno_dtheta_min, "Relative-phase lower bound");
    zeno->add_option("--dtheta-max", zeno_dtheta_max, "Relative-phase upper bound");

    auto* anti = app.add_subcommand("antibunch", "Intermodal antibunching witness");
    add_common(anti, anti_opts);
    auto* ag = anti->add_option("--gamma-steps", anti_gamma.steps, "Sweep gamma (2-D output)")
                   ->check(CLI::NonNegativeNumber);
    anti->add_option("--gamma-min", anti_gamma.lo, "Gamma sweep lower bound");
    anti->add_option("--gamma-max", anti_gamma.hi, "Gamma sweep upper bound");

    auto* squeeze = app.add_subcommand("squeeze", "Sum/difference squeezing witnesses");
    add_common(squeeze, squeeze_opts);
    auto* sg = squeeze->add_option("--g-steps", squeeze_g.steps, "Sweep g (2-D output)")
                   ->check(CLI::NonNegativeNumber);
    squeeze->add_option("--g-min", squeeze_g.lo, "g sweep lower bound");
    squeeze->add_option("--g-max", squeeze_g.hi, "g sweep upper bound");

    auto* verify = app.add_subcommand("verify", "Run the self-verification grids");
    bool strict = false, vjson = false;
    std::string voutput = "-";
    verify->add_flag("--strict", strict, "Tighten non-round-off-limited tolerances 10x");
    verify->add_flag("--json", vjson, "Machine-readable report");
    verify->add_option("--output", voutput, "Output path, or - for stdout");

    auto* figure = app.add_subcommand("figure", "Figure-reproduction presets (pure aliases)");
    std::string fig_name, fig_panel;
    bool fig_list = false;
    figure->add_option("name", fig_name, "fig2|fig4|fig5|fig6|fig7");
    figure->add_option("--panel", fig_panel, "Figure panel letter");
    figure->add_flag("--list", fig_list, "Print every preset expansion");
    std::string fig_output, fig_format;
    int fig_threads = 0;
    figure->add_option("--output", fig_output, "Output path, or - for stdout");
    figure->add_option("--format", fig_format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    figure->add_option("--threads", fig_threads, "Worker threads")->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints help text or a one-line diagnostic
        return code == 0 ? 0 : 2;
    }

    if (evolve->parsed()) return run_evolve(evolve_opts);
    if (zeno->parsed()) {
        zeno_gamma.active = zg->count() > 0;
        zeno_dtheta.active = zd->count() > 0;
        zeno_dtheta.lo = parse_angle(zeno_dtheta_min);
        zeno_dtheta.hi = parse_angle(zeno_dtheta_max);
        return run_zeno(zeno_opts, zeno_gamma, zeno_dtheta);
    }
    if (anti->parsed()) {
        anti_gamma.active = ag->count() > 0;
        return run_antibunch(anti_opts, anti_gamma);
    }
    if (squeeze->parsed()) {
        squeeze_g.active = sg->count() > 0;
        return run_squeeze(squeeze_opts, squeeze_g);
    }
    if (verify->parsed()) return run_verify(strict, vjson, voutput);
    if (figure->parsed()) {
        if (!fig_list && fig_name.empty())
            throw std::invalid_argument("figure: name required (try: figure --list)");
        std::vector<std::string> passthrough;
        if (!fig_output.empty()) {
            passthrough.push_back("--output");
            passthrough.push_back(fig_output);
        }
        if (!fig_format.empty()) {
            passthrough.push_back("--format");
            passthrough.push_back(fig_format);
        }
        if (fig_threads > 0) {
            passthrough.push_back("--threads");
            passthrough.push_back(std::to_string(fig_threads));
        }
        return run_figure(fig_name, fig_panel, fig_list, passthrough);
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        return dispatch(args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    }
}
