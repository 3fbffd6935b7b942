#include "p1stab/cli.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "p1stab/cells.hpp"
#include "p1stab/config.hpp"
#include "p1stab/derived_hom.hpp"
#include "p1stab/group_actions.hpp"
#include "p1stab/json_io.hpp"
#include "p1stab/moduli.hpp"
#include "p1stab/stability.hpp"
#include "p1stab/svg.hpp"

namespace p1stab::cli {

namespace {

void apply_eps_env() {
    if (const char* env = std::getenv("P1STAB_EPS")) {
        char* end = nullptr;
        double eps = std::strtod(env, &end);
        if (end == env || *end != '\0') {
            throw std::invalid_argument("P1STAB_EPS is not a number");
        }
        set_phase_epsilon(eps);
    }
}

std::complex<double> parse_z(const std::string& text) {
    std::istringstream in(text);
    double re = 0, im = 0;
    char comma = 0;
    if (!(in >> re >> comma >> im) || comma != ',' || !(in >> std::ws).eof()) {
        throw std::invalid_argument("--z expects 're,im'");
    }
    return {re, im};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
    out << content;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"stability conditions on the derived category of the projective line"};
    app.require_subcommand(1);

    std::string sc_text, from_text, to_text, obj_x, obj_y, obj_text, out_path, z_text;
    std::int64_t t_degree = 0, tensor = 0;
    int steps = 100, sample_count = 400;
    double r_param = 1.0;
    bool want_svg = false;

    auto* hom_cmd = app.add_subcommand("hom", "dimension of a graded Hom space");
    hom_cmd->add_option("X", obj_x)->required();
    hom_cmd->add_option("Y", obj_y)->required();
    hom_cmd->add_option("--t", t_degree, "cohomological degree");

    auto* hn_cmd = app.add_subcommand("hn", "Harder-Narasimhan filtration");
    hn_cmd->add_option("--sc", sc_text, "stability condition (JSON or file)")->required();
    hn_cmd->add_option("object", obj_text)->required();
    hn_cmd->add_flag("--svg", want_svg, "also write a central-charge ray diagram");
    hn_cmd->add_option("--out", out_path, "SVG output path");

    auto* classify_cmd = app.add_subcommand("classify", "cell of the wall decomposition");
    classify_cmd->add_option("--sc", sc_text)->required();

    auto* reduce_cmd = app.add_subcommand("reduce", "reduce into the fundamental domain");
    reduce_cmd->add_option("--sc", sc_text)->required();

    auto* act_cmd = app.add_subcommand("act", "apply a group element");
    act_cmd->add_option("--sc", sc_text)->required();
    act_cmd->add_option("--z", z_text, "complex parameter 're,im'");
    act_cmd->add_option("--tensor", tensor, "twist by O(tensor)");

    auto* heart_cmd = app.add_subcommand("heart", "heart P((r-1, r])");
    heart_cmd->add_option("--sc", sc_text)->required();
    heart_cmd->add_option("--r", r_param, "slice parameter");

    auto* scan_cmd = app.add_subcommand("scan", "classify a straight parameter path");
    scan_cmd->add_option("--from", from_text)->required();
    scan_cmd->add_option("--to", to_text)->required();
    scan_cmd->add_option("--steps", steps)->check(CLI::Range(2, 1000000));
    scan_cmd->add_flag("--svg", want_svg, "also write the phase-pair trajectory");
    scan_cmd->add_option("--out", out_path, "SVG output path");

    auto* render_cmd = app.add_subcommand("render-K", "fundamental domain with sampled orbits");
    render_cmd->add_option("--samples", sample_count)->check(CLI::Range(0, 1000000));
    render_cmd->add_option("--out", out_path, "SVG output path")->required();

    try {
        apply_eps_env();
        std::reverse(args.begin(), args.end());
        app.parse(args);

        if (hom_cmd->parsed()) {
            out << hom_dim(parse_object(obj_x), parse_object(obj_y), t_degree) << "\n";
            return 0;
        }
        if (hn_cmd->parsed()) {
            if (want_svg && out_path.empty()) {
                throw std::invalid_argument("--svg requires --out");
            }
            StabilityCondition sc = parse_condition(sc_text);
            HNFiltration f = hn(sc, parse_object(obj_text));
            out << to_json(f) << "\n";
            if (want_svg) write_file(out_path, svg_rays(f));
            return 0;
        }
        if (classify_cmd->parsed()) {
            out << to_string(cell_of(parse_condition(sc_text))) << "\n";
            return 0;
        }
        if (reduce_cmd->parsed()) {
            out << to_json(reduce_to_K(parse_condition(sc_text))) << "\n";
            return 0;
        }
        if (act_cmd->parsed()) {
            GroupElement g{z_text.empty() ? std::complex<double>{0.0, 0.0} : parse_z(z_text),
                           tensor};
            out << to_json(act(g, parse_condition(sc_text))) << "\n";
            return 0;
        }
        if (heart_cmd->parsed()) {
            out << to_json(heart_at(parse_condition(sc_text), r_param)) << "\n";
            return 0;
        }
        if (scan_cmd->parsed()) {
            if (want_svg && out_path.empty()) {
                throw std::invalid_argument("--svg requires --out");
            }
            StabilityCondition from = parse_condition(from_text);
            StabilityCondition to = parse_condition(to_text);
            auto samples = scan_path(from, to, steps);
            out << to_json(samples) << "\n";
            if (want_svg) {
                StabilityCondition target =
                    to.base_twist() == from.base_twist() ? to : rebase(to, from.base_twist());
                std::vector<std::pair<double, double>> phases;
                phases.reserve(samples.size());
                for (const auto& s : samples) {
                    phases.emplace_back(std::lerp(from.alpha(), target.alpha(), s.t),
                                        std::lerp(from.beta(), target.beta(), s.t));
                }
                write_file(out_path, svg_scan(samples, phases));
            }
            return 0;
        }
        if (render_cmd->parsed()) {
            std::mt19937_64 rng(20240915);
            std::uniform_real_distribution<double> phase(-1.0, 1.0);
            std::uniform_real_distribution<double> gap(-0.99, 2.0);
            std::uniform_real_distribution<double> logm(-2.0, 2.0);
            std::uniform_int_distribution<std::int64_t> twist(-4, 4);
            std::vector<ChartPoint> points;
            points.reserve(static_cast<std::size_t>(sample_count));
            for (int k = 0; k < sample_count; ++k) {
                double alpha = phase(rng);
                StabilityCondition sc(twist(rng), alpha, alpha - gap(rng), logm(rng), logm(rng));
                points.push_back(reduce_to_K(sc).point);
            }
            write_file(out_path, svg_domain(points));
            return 0;
        }
        throw std::invalid_argument("no command given");
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace p1stab::cli
