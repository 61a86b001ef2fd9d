#include "tropinv/cli.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "tropinv/greenification.hpp"
#include "tropinv/json_io.hpp"
#include "tropinv/probe.hpp"
#include "tropinv/sampling.hpp"

namespace tropinv {

namespace {

// inline JSON or @file
std::string load_arg(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return arg;
    std::ifstream in(arg.substr(1));
    if (!in) throw ParseError("cannot open file '" + arg.substr(1) + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json parse_json_arg(const std::string& arg) {
    try {
        return json::parse(load_arg(arg));
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON argument: ") + e.what());
    }
}

TropicalGerm germ_arg(const std::string& arg) { return germ_from_json(parse_json_arg(arg)); }

std::vector<double> parse_r_grid(const std::string& spec) {
    std::vector<double> grid;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            grid.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw ParseError("malformed r value '" + item + "'");
        }
    }
    return grid;
}

struct SamplerFlags {
    std::string shells;
    int samples = 0;
    std::uint64_t seed = 0;
    double depth = 0;
    int threads = -1;

    SamplerConfig build() const {
        SamplerConfig cfg;
        if (!shells.empty()) cfg.r_grid = parse_r_grid(shells);
        if (samples > 0) cfg.samples_per_shell = samples;
        if (seed != 0) cfg.seed = seed;
        if (depth > 0) cfg.box_depth = depth;
        if (threads >= 0) cfg.threads = threads;
        return cfg;
    }
};

void add_sampler_flags(CLI::App* cmd, SamplerFlags& flags) {
    cmd->add_option("--shells", flags.shells, "comma-separated negative r grid");
    cmd->add_option("--samples", flags.samples, "samples per shell");
    cmd->add_option("--seed", flags.seed, "sampler seed");
    cmd->add_option("--depth", flags.depth, "sampling box depth C");
    cmd->add_option("--threads", flags.threads, "worker threads (0 = hardware)");
}

TropicalGerm indicator_of_map_input(const std::string& arg) {
    const MapInput in = map_from_json(parse_json_arg(arg));
    return indicator_of_map(in.map, in.zeta);
}

Evaluator evaluator_from_args(const std::string& u_arg, const std::string& map_arg) {
    if (!u_arg.empty() && !map_arg.empty())
        throw ParseError("give exactly one of --u / --map");
    if (!u_arg.empty()) return Evaluator::from_germ(germ_arg(u_arg));
    if (!map_arg.empty()) {
        const MapInput in = map_from_json(parse_json_arg(map_arg));
        return Evaluator::from_map(in.map, in.zeta);
    }
    throw ParseError("give one of --u / --map");
}

std::string profile_text(const WeightProfile& w) {
    std::ostringstream out;
    out << "lelong=" << format_rational(w.lelong) << " mass=" << format_ext(w.mass)
        << " lojasiewicz=" << format_ext(w.lojasiewicz)
        << " is_weight=" << (w.is_weight ? "true" : "false")
        << " is_convenient=" << (w.is_convenient ? "true" : "false");
    return out.str();
}

std::string order_name(WeightOrder o) {
    switch (o) {
        case WeightOrder::less_equal: return "less_equal";
        case WeightOrder::greater_equal: return "greater_equal";
        case WeightOrder::equal: return "equal";
        default: return "incomparable";
    }
}

int run_verify(bool with_sampler, const std::string& expected_path, const std::string& format,
               std::ostream& out) {
    json override_json;
    const json* override_ptr = nullptr;
    if (!expected_path.empty()) {
        override_json = parse_json_arg(expected_path);
        override_ptr = &override_json;
    }
    const auto rows = verify_paper_rows(with_sampler, override_ptr);
    bool all = true;
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
            arr.push_back(json{{"claim", r.claim},
                               {"expected", r.expected},
                               {"computed", r.computed},
                               {"kind", r.kind == VerifyRow::Kind::exact ? "exact" : "sampled"},
                               {"status", r.pass ? "pass" : "FAIL"}});
            all = all && r.pass;
        }
        out << arr.dump(2) << "\n";
    } else {
        size_t w = 0;
        for (const auto& r : rows) w = std::max(w, r.claim.size());
        int pass = 0;
        for (const auto& r : rows) {
            out << (r.pass ? "[pass] " : "[FAIL] ") << std::left << std::setw(static_cast<int>(w))
                << r.claim << "  expected " << r.expected << "  computed " << r.computed << "\n";
            all = all && r.pass;
            if (r.pass) ++pass;
        }
        out << pass << "/" << rows.size() << " rows passed\n";
    }
    return all ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact toric singularity invariants with a numerical cross-check sampler"};
    app.require_subcommand(1);

    std::string u_arg, phi_arg, map_arg, family_arg, format = "text";
    std::function<int()> action;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: text|json|csv");
    };

    {
        auto* cmd = app.add_subcommand("type", "relative type sigma(u, phi)");
        cmd->add_option("--u", u_arg, "germ JSON or @file")->required();
        cmd->add_option("--phi", phi_arg, "weight germ JSON or @file")->required();
        add_format(cmd);
        cmd->callback([&] {
            action = [&]() -> int {
                const Rational s = relative_type(germ_arg(u_arg), germ_arg(phi_arg));
                if (format == "json") out << json{{"type", format_rational(s)}}.dump() << "\n";
                else out << format_rational(s) << "\n";
                return 0;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("mass", "residual Monge-Ampere mass tau(phi)");
        cmd->add_option("--phi", phi_arg, "germ JSON or @file")->required();
        add_format(cmd);
        cmd->callback([&] {
            action = [&]() -> int {
                const ExtRational tau = residual_mass(germ_arg(phi_arg));
                if (format == "json") out << json{{"mass", format_ext(tau)}}.dump() << "\n";
                else out << format_ext(tau) << "\n";
                return 0;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("mixed", "mixed Monge-Ampere mass of n germs");
        cmd->add_option("--family", family_arg, "family JSON {\"weights\":[germ,...]} or @file")
            ->required();
        add_format(cmd);
        cmd->callback([&] {
            action = [&]() -> int {
                const WeightFamily fam = family_from_json(parse_json_arg(family_arg));
                std::vector<TropicalGerm> germs;
                for (const auto& a : fam.directions) germs.push_back(directional_weight(a));
                for (const auto& w : fam.weights) germs.push_back(w.weight);
                const Rational m = mixed_mass(germs);
                if (format == "json") out << json{{"mixed_mass", format_rational(m)}}.dump() << "\n";
                else out << format_rational(m) << "\n";
                return 0;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("demailly", "Lelong-Demailly number nu(u, phi)");
        cmd->add_option("--u", u_arg, "germ JSON or @file")->required();
        cmd->add_option("--phi", phi_arg, "convenient weight germ JSON or @file")->required();
        add_format(cmd);
        cmd->callback([&] {
            action = [&]() -> int {
                const Rational v = demailly_number(germ_arg(u_arg), germ_arg(phi_arg));
                if (format == "json") out << json{{"demailly", format_rational(v)}}.dump() << "\n";
                else out << format_rational(v) << "\n";
                return 0;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("profile", "invariant triple and class flags of a germ");
        cmd->add_option("--phi", phi_arg, "germ JSON or @file")->required();
        add_format(cmd);
        cmd->callback([&] {
            action = [&]() -> int {
                const WeightProfile w = weight_profile(germ_arg(phi_arg));
                if (format == "json") out << profile_to_json(w).dump() << "\n";
                else out << profile_text(w) << "\n";
                return 0;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("order", "partial order of two weights");
        cmd->add_option("--u", u_arg, "first weight germ JSON or @file")->required();
        cmd->add_option("--phi", phi_arg, "second weight germ JSON or @file")->required();
        add_format(cmd);
        cmd->callback([&] {
            action = [&]() -> int {
                const WeightOrder o = weight_order(germ_arg(u_arg), germ_arg(phi_arg));
                if (format == "json") out << json{{"order", order_name(o)}}.dump() << "\n";
                else out << order_name(o) << "\n";
                return 0;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("newton", "Newton number of a polynomial map");
        cmd->add_option("--map", map_arg, "map JSON or @file")->required();
        add_format(cmd);
        cmd->callback([&] {
            action = [&]() -> int {
                const MapInput in = map_from_json(parse_json_arg(map_arg));
                if (format == "json") {
                    out << kouchnirenko_report_to_json(kouchnirenko_report(in.map, in.zeta)).dump()
                        << "\n";
                } else {
                    out << format_ext(newton_number(in.map, in.zeta)) << "\n";
                }
                return 0;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("indicator", "indicator germ of log|f|");
        cmd->add_option("--map", map_arg, "map JSON or @file")->required();
        add_format(cmd);
        cmd->callback([&] {
            action = [&]() -> int {
                out << germ_to_json(indicator_of_map_input(map_arg)).dump() << "\n";
                return 0;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("greenify", "largest germ matching prescribed types");
        cmd->add_option("--u", u_arg, "germ JSON or @file")->required();
        cmd->add_option("--family", family_arg, "weight family JSON or @file")->required();
        add_format(cmd);
        cmd->callback([&] {
            action = [&]() -> int {
                const TropicalGerm g =
                    greenify_weights(germ_arg(u_arg), family_from_json(parse_json_arg(family_arg)));
                out << germ_to_json(g).dump() << "\n";
                return 0;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("bound", "directional lower bound for the residual mass");
        cmd->add_option("--u", u_arg, "germ JSON or @file")->required();
        cmd->add_option("--family", family_arg, "family JSON {\"directions\":[...]} or @file")
            ->required();
        add_format(cmd);
        cmd->callback([&] {
            action = [&]() -> int {
                const WeightFamily fam = family_from_json(parse_json_arg(family_arg));
                if (fam.directions.empty())
                    throw ParseError("bound needs a directional family");
                auto b = mass_lower_bound(germ_arg(u_arg), fam.directions);
                const std::string text = b ? format_rational(*b) : "no-bound";
                if (format == "json") out << json{{"bound", text}}.dump() << "\n";
                else out << text << "\n";
                return 0;
            };
        });
    }

    SamplerFlags sampler;
    {
        auto* cmd = app.add_subcommand("estimate", "sampled relative type");
        cmd->add_option("--u", u_arg, "germ JSON or @file (evaluator)");
        cmd->add_option("--map", map_arg, "map JSON or @file (evaluator log|f|)");
        cmd->add_option("--phi", phi_arg, "convenient weight germ JSON or @file")->required();
        add_sampler_flags(cmd, sampler);
        add_format(cmd);
        cmd->callback([&] {
            action = [&]() -> int {
                out << type_estimate_to_json(
                           estimate_type(evaluator_from_args(u_arg, map_arg),
                                         germ_arg(phi_arg), sampler.build()))
                           .dump()
                    << "\n";
                return 0;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("curve", "sampled growth function");
        cmd->add_option("--u", u_arg, "germ JSON or @file (evaluator)");
        cmd->add_option("--map", map_arg, "map JSON or @file (evaluator log|f|)");
        cmd->add_option("--phi", phi_arg, "convenient weight germ JSON or @file")->required();
        add_sampler_flags(cmd, sampler);
        add_format(cmd);
        cmd->callback([&] {
            action = [&]() -> int {
                const GrowthCurve c = growth_curve(evaluator_from_args(u_arg, map_arg),
                                                   germ_arg(phi_arg), sampler.build());
                if (format == "json") out << growth_curve_to_json(c).dump() << "\n";
                else out << growth_curve_to_csv(c);
                return 0;
            };
        });
    }

    ProbeConfig probe_cfg;
    std::string probe_shells;
    {
        auto* cmd = app.add_subcommand("probe", "boundedness probe for log|f| - Psi");
        cmd->add_option("--map", map_arg, "map JSON or @file")->required();
        cmd->add_option("--shells", probe_shells, "shell range lo:hi (radii 2^-j)");
        cmd->add_option("--samples", probe_cfg.samples_per_shell, "samples per shell");
        cmd->add_option("--seed", probe_cfg.seed, "sampler seed");
        cmd->add_option("--breadth", probe_cfg.breadth, "log-box breadth");
        add_format(cmd);
        cmd->callback([&] {
            action = [&]() -> int {
                if (!probe_shells.empty()) {
                    const auto colon = probe_shells.find(':');
                    if (colon == std::string::npos) throw ParseError("--shells expects lo:hi");
                    try {
                        probe_cfg.shell_min = std::stoi(probe_shells.substr(0, colon));
                        probe_cfg.shell_max = std::stoi(probe_shells.substr(colon + 1));
                    } catch (const std::exception&) {
                        throw ParseError("--shells expects integers lo:hi");
                    }
                }
                const MapInput in = map_from_json(parse_json_arg(map_arg));
                const ProbeReport rep = cor62_probe(in.map, in.zeta, probe_cfg);
                if (format == "json") {
                    out << probe_report_to_json(rep).dump() << "\n";
                } else {
                    out << to_string(rep.verdict) << "\n" << rep.note << "\n";
                }
                return 0;
            };
        });
    }

    bool with_sampler = false;
    std::string expected_path;
    {
        auto* cmd = app.add_subcommand("verify-paper", "recompute the anchored worked values");
        cmd->add_flag("--with-sampler", with_sampler, "include sampled rows");
        cmd->add_option("--expected", expected_path, "JSON file overriding expected values");
        add_format(cmd);
        cmd->callback([&] {
            action = [&]() -> int { return run_verify(with_sampler, expected_path, format, out); };
        });
    }

    std::vector<const char*> argv;
    argv.push_back("tropinv");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        return action ? action() : 2;
    } catch (const Error& e) {
        err << e.what() << "\n";
        switch (e.kind()) {
            case Error::Kind::parse: return 2;
            case Error::Kind::precondition: return 3;
            default: return 4;
        }
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, out, err);
}

} // namespace tropinv
