#include "singosc/verify.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <clocale>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace singosc;

namespace {

// Full parameter set of one invocation; every emitted file embeds it.
struct RunConfig {
    double g = 2.0;
    double epsilon = 3.0;
    double ka = 1.0;
    double kb = 0.25;
    double a = 1.0;
    double c = 2.0;
    double t0 = 0.0;
    int n = 2;
    std::string family = "deformed";
    std::string format = "csv";
    std::string out;
    double x_min = 0.01, x_max = 8.0;
    int x_count = 800;
    double t_min = 0.0, t_max = M_PI;
    int t_count = 200;
    std::string cut_times = "0,1.1780972450961724,2.356194490192345";

    ErmakovParams erm() const { return {a, c, t0}; }
    SeedParams seed() const { return {epsilon, ka, kb}; }
};

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::vector<double> parse_cut_times(const std::string& spec) {
    std::vector<double> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        double v = std::stod(item, &used);
        if (used != item.size())
            throw ValidationError("cut-times: cannot parse '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw ValidationError("cut-times: no values given");
    return out;
}

std::vector<std::pair<std::string, std::string>> config_rows(
    const RunConfig& c, const std::string& command) {
    return {
        {"command", command},
        {"g", fmt12(c.g)},
        {"epsilon", fmt12(c.epsilon)},
        {"ka", fmt12(c.ka)},
        {"kb", fmt12(c.kb)},
        {"a", fmt12(c.a)},
        {"c", fmt12(c.c)},
        {"t0", fmt12(c.t0)},
        {"n", std::to_string(c.n)},
        {"family", c.family},
        {"format", c.format},
        {"x-min", fmt12(c.x_min)},
        {"x-max", fmt12(c.x_max)},
        {"x-count", std::to_string(c.x_count)},
        {"t-min", fmt12(c.t_min)},
        {"t-max", fmt12(c.t_max)},
        {"t-count", std::to_string(c.t_count)},
        {"cut-times", c.cut_times},
    };
}

void write_csv_header(std::ostream& os, const RunConfig& c,
                      const std::string& command) {
    for (const auto& [k, v] : config_rows(c, command))
        os << "# " << k << " = " << v << "\n";
}

nlohmann::ordered_json config_json(const RunConfig& c,
                                   const std::string& command) {
    nlohmann::ordered_json j;
    for (const auto& [k, v] : config_rows(c, command)) j[k] = v;
    return j;
}

std::vector<double> linspace(double lo, double hi, int count) {
    if (count < 2 || !(hi > lo))
        throw ValidationError("grid: need at least 2 points and max > min");
    std::vector<double> v(count);
    for (int i = 0; i < count; ++i)
        v[i] = lo + (hi - lo) * i / (count - 1.0);
    return v;
}

struct OutputStream {
    std::ofstream file;
    std::ostream& os;
    explicit OutputStream(const std::string& path)
        : file(), os(open(path)) {}

  private:
    std::ostream& open(const std::string& path) {
        if (path.empty()) return std::cout;
        file.open(path);
        if (!file)
            throw ValidationError("cannot open output file: " + path);
        return file;
    }
};

// ---- SVG primitives -------------------------------------------------------

struct Rgb {
    double r, g, b;
};

// Five-stop dark-to-bright map, linearly interpolated.
Rgb colormap(double u) {
    static const Rgb stops[5] = {{68, 1, 84},
                                 {59, 82, 139},
                                 {33, 145, 140},
                                 {94, 201, 98},
                                 {253, 231, 37}};
    u = std::clamp(u, 0.0, 1.0) * 4.0;
    int k = std::min(3, static_cast<int>(u));
    double f = u - k;
    return {stops[k].r + f * (stops[k + 1].r - stops[k].r),
            stops[k].g + f * (stops[k + 1].g - stops[k].g),
            stops[k].b + f * (stops[k + 1].b - stops[k].b)};
}

std::string rgb_str(const Rgb& c) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "rgb(%d,%d,%d)", static_cast<int>(c.r),
                  static_cast<int>(c.g), static_cast<int>(c.b));
    return buf;
}

// Display range from the 2% and 98% quantiles so barrier blow-ups near the
// origin do not flatten the rest of the scale.
std::pair<double, double> display_range(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    std::size_t n = values.size();
    double lo = values[static_cast<std::size_t>(0.02 * (n - 1))];
    double hi = values[static_cast<std::size_t>(0.98 * (n - 1))];
    if (!(hi > lo)) hi = lo + 1.0;
    return {lo, hi};
}

void svg_open(std::ostream& os, const RunConfig& cfg,
              const std::string& command, int width, int height) {
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
       << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
       << height << "\">\n<!--\n";
    for (const auto& [k, v] : config_rows(cfg, command))
        os << k << " = " << v << "\n";
    os << "-->\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void svg_heatmap_panel(std::ostream& os, const std::vector<double>& xs,
                       const std::vector<double>& ts,
                       const std::vector<std::vector<double>>& rows,
                       double x0, double y0, double w, double h) {
    auto flat = std::vector<double>();
    for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
    auto [lo, hi] = display_range(std::move(flat));
    int sx = std::max<int>(1, static_cast<int>(xs.size()) / 160);
    int st = std::max<int>(1, static_cast<int>(ts.size()) / 120);
    double cw = w * sx / xs.size();
    double ch = h * st / ts.size();
    for (std::size_t j = 0; j < ts.size(); j += st) {
        for (std::size_t i = 0; i < xs.size(); i += sx) {
            double u = (rows[j][i] - lo) / (hi - lo);
            char buf[160];
            std::snprintf(buf, sizeof buf,
                          "<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" "
                          "height=\"%.2f\" fill=\"%s\"/>\n",
                          x0 + w * i / xs.size(),
                          y0 + h - ch - h * j / ts.size(), cw + 0.5, ch + 0.5,
                          rgb_str(colormap(u)).c_str());
            os << buf;
        }
    }
    os << "<rect x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << w
       << "\" height=\"" << h << "\" fill=\"none\" stroke=\"black\"/>\n";
}

void svg_polyline(std::ostream& os, const std::vector<double>& xs,
                  const std::vector<double>& ys, double x0, double y0,
                  double w, double h, double xlo, double xhi, double ylo,
                  double yhi, const std::string& stroke, bool dashed) {
    os << "<polyline fill=\"none\" stroke=\"" << stroke
       << "\" stroke-width=\"1.2\"";
    if (dashed) os << " stroke-dasharray=\"4 3\"";
    os << " points=\"";
    char buf[48];
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double px = x0 + w * (xs[i] - xlo) / (xhi - xlo);
        double py = y0 + h - h * std::clamp((ys[i] - ylo) / (yhi - ylo), 0.0, 1.0);
        std::snprintf(buf, sizeof buf, "%.2f,%.2f ", px, py);
        os << buf;
    }
    os << "\"/>\n";
}

// ---- subcommands ----------------------------------------------------------

int cmd_potential(const RunConfig& cfg) {
    validate(cfg.erm());
    validate(ModelParams{cfg.g});
    validate(cfg.seed(), cfg.g);
    SeedSolution seed(cfg.seed(), cfg.g);
    auto xs = linspace(cfg.x_min, cfg.x_max, cfg.x_count);
    auto ts = linspace(cfg.t_min, cfg.t_max, cfg.t_count);
    auto erm = cfg.erm();

    std::vector<std::vector<double>> rows(ts.size());
    for (std::size_t j = 0; j < ts.size(); ++j) {
        rows[j].resize(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i)
            rows[j][i] = potential_v2(seed, erm, xs[i], ts[j]);
    }

    OutputStream o(cfg.out);
    if (cfg.format == "csv") {
        write_csv_header(o.os, cfg, "potential");
        o.os << "x,t,v2\n";
        for (std::size_t j = 0; j < ts.size(); ++j)
            for (std::size_t i = 0; i < xs.size(); ++i)
                o.os << fmt12(xs[i]) << ',' << fmt12(ts[j]) << ','
                     << fmt12(rows[j][i]) << "\n";
    } else if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["config"] = config_json(cfg, "potential");
        j["x"] = xs;
        j["t"] = ts;
        j["v2"] = rows;
        o.os << j.dump(2) << "\n";
    } else if (cfg.format == "svg") {
        const double W = 960, H = 420, pad = 20, pw = (W - 3 * pad) / 2;
        svg_open(o.os, cfg, "potential", static_cast<int>(W),
                 static_cast<int>(H));
        svg_heatmap_panel(o.os, xs, ts, rows, pad, pad, pw, H - 2 * pad);
        // fixed-t cuts with the undeformed potential overlaid
        auto cuts = parse_cut_times(cfg.cut_times);
        std::vector<std::vector<double>> cut_rows;
        std::vector<double> span;
        for (double tc : cuts) {
            std::vector<double> r(xs.size());
            for (std::size_t i = 0; i < xs.size(); ++i)
                r[i] = potential_v2(seed, erm, xs[i], tc);
            span.insert(span.end(), r.begin(), r.end());
            cut_rows.push_back(std::move(r));
        }
        std::vector<double> v1(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i)
            v1[i] = potential_v1(cfg.g, xs[i]);
        auto [ylo, yhi] = display_range(span);
        const char* palette[] = {"#1f3b99", "#15837c", "#d1a117", "#a0302a"};
        double cx = 2 * pad + pw;
        for (std::size_t k = 0; k < cut_rows.size(); ++k)
            svg_polyline(o.os, xs, cut_rows[k], cx, pad, pw, H - 2 * pad,
                         xs.front(), xs.back(), ylo, yhi,
                         palette[k % 4], false);
        svg_polyline(o.os, xs, v1, cx, pad, pw, H - 2 * pad, xs.front(),
                     xs.back(), ylo, yhi, "black", true);
        o.os << "<rect x=\"" << cx << "\" y=\"" << pad << "\" width=\"" << pw
             << "\" height=\"" << H - 2 * pad
             << "\" fill=\"none\" stroke=\"black\"/>\n</svg>\n";
    } else {
        throw ValidationError("potential: unknown format '" + cfg.format + "'");
    }
    return 0;
}

int cmd_density(const RunConfig& cfg) {
    validate(cfg.erm());
    validate(ModelParams{cfg.g});
    validate(cfg.seed(), cfg.g);
    if (cfg.n < 0) throw ValidationError("density: n must be non-negative");
    if (cfg.family != "base" && cfg.family != "deformed")
        throw ValidationError("density: family must be base or deformed");
    std::optional<SeedSolution> seed;
    if (cfg.family == "deformed") seed.emplace(cfg.seed(), cfg.g);

    auto xs = linspace(cfg.x_min, cfg.x_max, cfg.x_count);
    auto ts = linspace(cfg.t_min, cfg.t_max, cfg.t_count);
    auto erm = cfg.erm();
    auto density = [&](int n, double x, double t) {
        return cfg.family == "base" ? std::norm(psi1(n, cfg.g, erm, x, t))
                                    : std::norm(psi2(n, *seed, erm, x, t));
    };

    std::vector<std::vector<std::vector<double>>> all(cfg.n + 1);
    for (int n = 0; n <= cfg.n; ++n) {
        all[n].resize(ts.size());
        for (std::size_t j = 0; j < ts.size(); ++j) {
            all[n][j].resize(xs.size());
            for (std::size_t i = 0; i < xs.size(); ++i)
                all[n][j][i] = density(n, xs[i], ts[j]);
        }
    }

    OutputStream o(cfg.out);
    if (cfg.format == "csv") {
        write_csv_header(o.os, cfg, "density");
        o.os << "x,t,n,density\n";
        for (int n = 0; n <= cfg.n; ++n)
            for (std::size_t j = 0; j < ts.size(); ++j)
                for (std::size_t i = 0; i < xs.size(); ++i)
                    o.os << fmt12(xs[i]) << ',' << fmt12(ts[j]) << ',' << n
                         << ',' << fmt12(all[n][j][i]) << "\n";
    } else if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["config"] = config_json(cfg, "density");
        j["x"] = xs;
        j["t"] = ts;
        auto states = nlohmann::ordered_json::array();
        for (int n = 0; n <= cfg.n; ++n) {
            nlohmann::ordered_json s;
            s["n"] = n;
            s["family"] = cfg.family;
            s["density"] = all[n];
            states.push_back(std::move(s));
        }
        j["states"] = std::move(states);
        o.os << j.dump(2) << "\n";
    } else if (cfg.format == "svg") {
        const double pw = 430, ph = 190, pad = 20;
        int width = static_cast<int>(pw + 2 * pad);
        int height = static_cast<int>((ph + pad) * (cfg.n + 1) + pad);
        svg_open(o.os, cfg, "density", width, height);
        for (int n = 0; n <= cfg.n; ++n)
            svg_heatmap_panel(o.os, xs, ts, all[n], pad,
                              pad + n * (ph + pad), pw, ph);
        o.os << "</svg>\n";
    } else {
        throw ValidationError("density: unknown format '" + cfg.format + "'");
    }
    return 0;
}

int cmd_eigen(const RunConfig& cfg) {
    validate(cfg.erm());
    validate(ModelParams{cfg.g});
    validate(cfg.seed(), cfg.g);
    if (cfg.n < 0) throw ValidationError("eigen: n must be non-negative");
    OutputStream o(cfg.out);
    if (cfg.format == "csv") {
        write_csv_header(o.os, cfg, "eigen");
        o.os << "n,lambda_base,lambda_deformed\n";
        for (int n = 0; n <= cfg.n; ++n)
            o.os << n << ',' << fmt12(eigenvalue_base(n, cfg.g)) << ','
                 << fmt12(eigenvalue_deformed(n, cfg.seed(), cfg.g)) << "\n";
    } else if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["config"] = config_json(cfg, "eigen");
        auto levels = nlohmann::ordered_json::array();
        for (int n = 0; n <= cfg.n; ++n) {
            nlohmann::ordered_json l;
            l["n"] = n;
            l["lambda_base"] = eigenvalue_base(n, cfg.g);
            l["lambda_deformed"] = eigenvalue_deformed(n, cfg.seed(), cfg.g);
            levels.push_back(std::move(l));
        }
        j["levels"] = std::move(levels);
        o.os << j.dump(2) << "\n";
    } else {
        throw ValidationError("eigen: supported formats are csv and json");
    }
    return 0;
}

int cmd_phase(const RunConfig& cfg) {
    validate(cfg.erm());
    validate(ModelParams{cfg.g});
    validate(cfg.seed(), cfg.g);
    if (cfg.n < 0) throw ValidationError("phase: n must be non-negative");
    auto ts = linspace(cfg.t_min, cfg.t_max, cfg.t_count);
    auto erm = cfg.erm();
    OutputStream o(cfg.out);
    if (cfg.format == "csv") {
        write_csv_header(o.os, cfg, "phase");
        o.os << "t,n,theta_base,theta_deformed\n";
        for (int n = 0; n <= cfg.n; ++n)
            for (double t : ts)
                o.os << fmt12(t) << ',' << n << ','
                     << fmt12(theta1(n, cfg.g, erm, t)) << ','
                     << fmt12(theta2(n, cfg.seed(), cfg.g, erm, t)) << "\n";
    } else if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["config"] = config_json(cfg, "phase");
        j["t"] = ts;
        auto curves = nlohmann::ordered_json::array();
        for (int n = 0; n <= cfg.n; ++n) {
            std::vector<double> th1, th2;
            for (double t : ts) {
                th1.push_back(theta1(n, cfg.g, erm, t));
                th2.push_back(theta2(n, cfg.seed(), cfg.g, erm, t));
            }
            nlohmann::ordered_json cjs;
            cjs["n"] = n;
            cjs["theta_base"] = th1;
            cjs["theta_deformed"] = th2;
            curves.push_back(std::move(cjs));
        }
        j["curves"] = std::move(curves);
        o.os << j.dump(2) << "\n";
    } else {
        throw ValidationError("phase: supported formats are csv and json");
    }
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    // Seed problems are the suite's job to detect and report, so only the
    // width and barrier parameters gate the run.
    validate(cfg.erm());
    validate(ModelParams{cfg.g});
    SuiteConfig sc;
    sc.g = cfg.g;
    sc.seed = cfg.seed();
    sc.erm = cfg.erm();
    auto report = run_suite(sc);
    OutputStream o(cfg.out);
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["config"] = config_json(cfg, "verify");
        auto rep = to_json(report);
        j["summary"] = rep["summary"];
        j["checks"] = rep["checks"];
        o.os << j.dump(2) << "\n";
    } else {
        write_csv_header(o.os, cfg, "verify");
        o.os << to_text(report);
    }
    return report.all_passed() ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    std::setlocale(LC_ALL, "C");
    CLI::App app{"time-dependent deformed singular oscillator toolkit"};
    app.fallthrough();
    app.require_subcommand(1);

    RunConfig cfg;
    app.set_config("--config", "", "key=value configuration file");
    app.add_option("--g", cfg.g, "barrier coupling g")->capture_default_str();
    app.add_option("--epsilon", cfg.epsilon, "factorization energy")
        ->capture_default_str();
    app.add_option("--ka", cfg.ka, "seed mixing coefficient ka")
        ->capture_default_str();
    app.add_option("--kb", cfg.kb, "seed mixing coefficient kb")
        ->capture_default_str();
    app.add_option("--a", cfg.a, "width parameter a")->capture_default_str();
    app.add_option("--c", cfg.c, "width parameter c")->capture_default_str();
    app.add_option("--t0", cfg.t0, "initial time")->capture_default_str();
    app.add_option("--n", cfg.n, "largest state index")->capture_default_str();
    app.add_option("--family", cfg.family, "state family: base | deformed")
        ->capture_default_str();
    app.add_option("--format", cfg.format, "output format: csv | json | svg")
        ->capture_default_str();
    app.add_option("--out", cfg.out, "output path (default: stdout)");
    app.add_option("--x-min", cfg.x_min, "grid lower x")->capture_default_str();
    app.add_option("--x-max", cfg.x_max, "grid upper x")->capture_default_str();
    app.add_option("--x-count", cfg.x_count, "grid points in x")
        ->capture_default_str();
    app.add_option("--t-min", cfg.t_min, "grid lower t")->capture_default_str();
    app.add_option("--t-max", cfg.t_max, "grid upper t")->capture_default_str();
    app.add_option("--t-count", cfg.t_count, "grid points in t")
        ->capture_default_str();
    app.add_option("--cut-times", cfg.cut_times,
                   "comma-separated t values for potential line cuts")
        ->capture_default_str();

    auto* sub_pot = app.add_subcommand(
        "potential", "deformed potential on an (x,t) grid");
    auto* sub_den = app.add_subcommand(
        "density", "probability densities of a state family");
    auto* sub_eig = app.add_subcommand(
        "eigen", "eigenvalue table of both invariants");
    auto* sub_pha = app.add_subcommand("phase", "phase curves over time");
    auto* sub_ver = app.add_subcommand("verify", "run the identity suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sub_pot->parsed()) return cmd_potential(cfg);
        if (sub_den->parsed()) return cmd_density(cfg);
        if (sub_eig->parsed()) return cmd_eigen(cfg);
        if (sub_pha->parsed()) return cmd_phase(cfg);
        if (sub_ver->parsed()) return cmd_verify(cfg);
    } catch (const ValidationError& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
