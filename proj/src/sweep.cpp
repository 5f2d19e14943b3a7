#include "qcorr/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "json.hpp"

namespace qcorr {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::vector<double> linspace(double lo, double hi, int count) {
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (count - 1);
    return out;
}

std::vector<double> logspace(double exp_lo, double exp_hi, int count) {
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        out[static_cast<std::size_t>(i)] =
            std::pow(10.0, exp_lo + (exp_hi - exp_lo) * i / (count - 1));
    return out;
}

int env_workers() {
    const char* env = std::getenv("QCORR_WORKERS");
    if (env == nullptr || *env == '\0') return 1;
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end == nullptr || *end != '\0' || n < 1)
        throw DomainError("QCORR_WORKERS must be a positive integer (got '" +
                          std::string(env) + "')");
    return static_cast<int>(n);
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error("write failed for '" + path + "'");
}

} // namespace

namespace {

void require_non_empty(const SweepSpec& spec) {
    if (spec.lambda_values.empty() || spec.psi_values.empty() || spec.omega_values.empty() ||
        spec.t_hawking_values.empty() || spec.bipartitions.empty())
        throw DomainError("SweepSpec: all value lists must be non-empty");
}

} // namespace

void validate(const SweepSpec& spec) {
    require_non_empty(spec);
    for (double l : spec.lambda_values)
        if (!(l >= 0.0 && l <= 1.0)) throw DomainError("SweepSpec: lambda out of [0,1]");
    for (double p : spec.psi_values)
        if (!(p >= 0.0 && p <= kPi / 2)) throw DomainError("SweepSpec: psi out of [0,pi/2]");
    for (double w : spec.omega_values)
        if (!(w > 0.0)) throw DomainError("SweepSpec: omega must be positive");
    for (double t : spec.t_hawking_values)
        if (!(t >= 0.0)) throw DomainError("SweepSpec: t_hawking must be non-negative");
}

MeasureRecord run_point(double lambda, double psi, double omega, double t_hawking,
                        Bipartition bipartition, UinConvention convention) {
    const GisinParams params(lambda, psi);
    const FieldMode mode(omega);
    const Temperature temp(t_hawking);
    const BogoliubovCoefficients coeffs = bogoliubov(mode, temp);

    MeasureRecord rec;
    rec.lambda = lambda;
    rec.psi = psi;
    rec.omega = omega;
    rec.t_hawking = t_hawking;
    rec.varpi = coeffs.varpi;
    rec.epsilon = coeffs.epsilon;
    rec.bipartition = bipartition;
    rec.convention = convention;

    DensityMatrix state = reduced_state(params, coeffs, bipartition);
    if (bipartition != Bipartition::Initial) {
        DensityMatrix channel = reduced_via_channel(params, coeffs, bipartition);
        if (frobenius_distance(state.matrix(), channel.matrix()) > 1e-12) {
            rec.flags.push_back("closed-form-channel-mismatch");
            state = std::move(channel); // the channel route wins on disagreement
        }
    }
    rec.consonance = consonance(state);
    rec.uin = uin(state, convention);
    return rec;
}

namespace {

struct GridShape {
    const SweepSpec& spec;
    std::size_t total() const {
        return spec.lambda_values.size() * spec.psi_values.size() * spec.omega_values.size() *
               spec.t_hawking_values.size() * spec.bipartitions.size();
    }
    // Row-major decomposition: lambda outermost, bipartition innermost.
    MeasureRecord eval(std::size_t idx) const {
        const std::size_t nb = spec.bipartitions.size();
        const std::size_t nt = spec.t_hawking_values.size();
        const std::size_t nw = spec.omega_values.size();
        const std::size_t np = spec.psi_values.size();
        const std::size_t ib = idx % nb;
        const std::size_t it = (idx / nb) % nt;
        const std::size_t iw = (idx / (nb * nt)) % nw;
        const std::size_t ip = (idx / (nb * nt * nw)) % np;
        const std::size_t il = idx / (nb * nt * nw * np);
        return run_point(spec.lambda_values[il], spec.psi_values[ip], spec.omega_values[iw],
                         spec.t_hawking_values[it], spec.bipartitions[ib], spec.convention);
    }
    std::string coordinates(std::size_t idx) const {
        const std::size_t nb = spec.bipartitions.size();
        const std::size_t nt = spec.t_hawking_values.size();
        const std::size_t nw = spec.omega_values.size();
        const std::size_t np = spec.psi_values.size();
        const std::size_t ib = idx % nb;
        const std::size_t it = (idx / nb) % nt;
        const std::size_t iw = (idx / (nb * nt)) % nw;
        const std::size_t ip = (idx / (nb * nt * nw)) % np;
        const std::size_t il = idx / (nb * nt * nw * np);
        return "lambda=" + fmt6(spec.lambda_values[il]) + ", psi=" + fmt6(spec.psi_values[ip]) +
               ", omega=" + fmt6(spec.omega_values[iw]) +
               ", t_hawking=" + fmt6(spec.t_hawking_values[it]) +
               ", region=" + to_string(spec.bipartitions[ib]);
    }
};

} // namespace

std::vector<MeasureRecord> run_sweep_serial(const SweepSpec& spec) {
    require_non_empty(spec);
    const GridShape grid{spec};
    std::vector<MeasureRecord> out;
    out.reserve(grid.total());
    for (std::size_t idx = 0; idx < grid.total(); ++idx) {
        try {
            out.push_back(grid.eval(idx));
        } catch (const Error& e) {
            throw DomainError(std::string(e.what()) + " [at grid point " +
                              grid.coordinates(idx) + "]");
        }
    }
    return out;
}

std::vector<MeasureRecord> run_sweep(const SweepSpec& spec, int workers) {
    require_non_empty(spec);
    if (workers <= 0) workers = env_workers();
    const GridShape grid{spec};
    const std::size_t total = grid.total();
    std::vector<MeasureRecord> out(total);

    std::size_t first_error = total;
    std::string error_message;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(workers)
#endif
    for (long long k = 0; k < static_cast<long long>(total); ++k) {
        const std::size_t idx = static_cast<std::size_t>(k);
        try {
            out[idx] = grid.eval(idx);
        } catch (const std::exception& e) {
#ifdef _OPENMP
#pragma omp critical
#endif
            if (idx < first_error) {
                first_error = idx;
                error_message = e.what();
            }
        }
    }
#ifndef _OPENMP
    (void)workers;
#endif
    if (first_error < total)
        throw DomainError(error_message + " [at grid point " + grid.coordinates(first_error) +
                          "]");
    return out;
}

FigurePreset figure_preset(const std::string& id) {
    FigurePreset p;
    p.id = id;

    // Shared grids.  The temperature window [1e-2, 1e2] and the lambda/psi/
    // omega sets are inferred constants: the study anchors them only through
    // the quoted values 0.9 (zero-temperature ceiling) and 0.65 (omega = 10
    // floor), plus the saturation remarks around T_H ~ 100.
    const std::vector<double> t_grid = logspace(-2.0, 2.0, 201);
    const std::vector<double> lambda_set{0.3, 0.6, 0.9};
    const std::vector<double> psi_set{kPi / 8, kPi / 6, kPi / 4};
    const std::vector<std::string> t_assumptions{
        "t_hawking grid 201 points log-spaced on [1e-2, 1e2]: axis range inferred",
    };

    if (id == "fig1") {
        p.caption = "fig1: consonance and uncertainty-induced nonlocality of the initial "
                    "Gisin state versus the mixing parameter lambda, for psi in {pi/5, pi/4}";
        p.x_axis = "lambda";
        p.series_keys = {"psi"};
        p.spec.lambda_values = linspace(0.0, 1.0, 101);
        p.spec.psi_values = {kPi / 5, kPi / 4};
        p.spec.omega_values = {1.0};
        p.spec.t_hawking_values = {0.0};
        p.spec.bipartitions = {Bipartition::Initial};
        p.assumptions = {"omega = 1 (irrelevant at t_hawking = 0, recorded for completeness)"};
    } else if (id == "fig3" || id == "fig5" || id == "fig7") {
        const Bipartition region = id == "fig3"   ? Bipartition::Accessible
                                   : id == "fig5" ? Bipartition::Inaccessible
                                                  : Bipartition::Spacetime;
        p.caption = "fig" + std::string(id == "fig3" ? "3" : id == "fig5" ? "5" : "7") +
                    ": both measures versus Hawking temperature in the " + to_string(region) +
                    " region, for lambda in {0.3, 0.6, 0.9} and psi in {pi/8, pi/6, pi/4}";
        p.x_axis = "t_hawking";
        p.series_keys = {"lambda", "psi"};
        p.spec.lambda_values = lambda_set;
        p.spec.psi_values = psi_set;
        p.spec.omega_values = {1.0};
        p.spec.t_hawking_values = t_grid;
        p.spec.bipartitions = {region};
        p.assumptions = t_assumptions;
        p.assumptions.push_back("lambda/psi sets {0.3, 0.6, 0.9} x {pi/8, pi/6, pi/4}: inferred");
        p.assumptions.push_back("omega = 1: inferred");
    } else if (id == "fig4" || id == "fig6" || id == "fig8") {
        // Frequency sweeps.  fig6's region follows its stated caption
        // (spacetime); it therefore coincides with fig8's grid.
        const Bipartition region = id == "fig4" ? Bipartition::Accessible : Bipartition::Spacetime;
        p.caption = "fig" + std::string(id == "fig4" ? "4" : id == "fig6" ? "6" : "8") +
                    ": both measures versus Hawking temperature in the " + to_string(region) +
                    " region, for omega in {1, 3, 10}";
        p.x_axis = "t_hawking";
        p.series_keys = {"omega"};
        p.spec.lambda_values = {0.9};
        p.spec.psi_values = {kPi / 4};
        p.spec.omega_values = {1.0, 3.0, 10.0};
        p.spec.t_hawking_values = t_grid;
        p.spec.bipartitions = {region};
        p.assumptions = t_assumptions;
        p.assumptions.push_back("lambda = 0.9, psi = pi/4: inferred from the 0.9 ceiling anchor");
        if (id == "fig6")
            p.assumptions.push_back("region = spacetime per the stated caption");
    } else {
        throw UsageError("unknown figure id '" + id + "' (expected fig1 or fig3..fig8)");
    }
    p.spec.convention = UinConvention::RadialLimit;
    return p;
}

std::vector<std::string> figure_preset_ids() {
    return {"fig1", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8"};
}

std::string csv_string(const std::vector<MeasureRecord>& records) {
    std::string out = "lambda,psi,omega,t_hawking,varpi,epsilon,region,convention,"
                      "consonance,uin,flags\n";
    for (const MeasureRecord& r : records) {
        out += fmt17(r.lambda) + ',' + fmt17(r.psi) + ',' + fmt17(r.omega) + ',' +
               fmt17(r.t_hawking) + ',' + fmt17(r.varpi) + ',' + fmt17(r.epsilon) + ',' +
               to_string(r.bipartition) + ',' + to_string(r.convention) + ',' +
               fmt17(r.consonance) + ',' + fmt17(r.uin) + ',';
        for (std::size_t i = 0; i < r.flags.size(); ++i) {
            if (i > 0) out += ';';
            out += r.flags[i];
        }
        out += '\n';
    }
    return out;
}

void write_csv(const std::vector<MeasureRecord>& records, const std::string& path) {
    if (records.empty()) throw DomainError("write_csv: no records");
    write_text_file(path, csv_string(records));
}

namespace {

double record_field(const MeasureRecord& r, const std::string& name) {
    if (name == "lambda") return r.lambda;
    if (name == "psi") return r.psi;
    if (name == "omega") return r.omega;
    if (name == "t_hawking") return r.t_hawking;
    throw DomainError("unknown record field '" + name + "'");
}

const char* kPalette[10] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                            "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string fmt2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

} // namespace

std::string svg_string(const std::vector<MeasureRecord>& records, const std::string& x_axis,
                       const std::vector<std::string>& series_keys, const std::string& title) {
    if (records.empty()) throw DomainError("svg_string: no records");
    const bool log_x = x_axis == "t_hawking";

    // Group points per series label; map orders the legend deterministically.
    std::map<std::string, std::vector<std::pair<double, double>>> series_c, series_u;
    double xmin = 0.0, xmax = 0.0, ymax = 0.0;
    bool have_x = false;
    for (const MeasureRecord& r : records) {
        double x = record_field(r, x_axis);
        if (log_x) {
            if (x <= 0.0) continue; // not representable on a log axis
            x = std::log10(x);
        }
        std::string key;
        for (const std::string& f : series_keys) {
            if (!key.empty()) key += ' ';
            key += f + '=' + fmt6(record_field(r, f));
        }
        if (!key.empty()) key += ' ';
        key += to_string(r.bipartition);
        series_c[key].emplace_back(x, r.consonance);
        series_u[key].emplace_back(x, r.uin);
        if (!have_x) { xmin = xmax = x; have_x = true; }
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymax = std::max({ymax, r.consonance, r.uin});
    }
    if (!have_x) throw DomainError("svg_string: no plottable points");
    if (xmax == xmin) xmax = xmin + 1.0;
    ymax = std::max(ymax, 1e-12) * 1.05;

    const double px0 = 70.0, px1 = 600.0, py0 = 470.0, py1 = 40.0;
    const auto sx = [&](double x) { return px0 + (x - xmin) / (xmax - xmin) * (px1 - px0); };
    const auto sy = [&](double y) { return py0 + y / ymax * (py1 - py0); };

    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"900\" height=\"520\" "
                      "viewBox=\"0 0 900 520\">\n"
                      "<rect width=\"900\" height=\"520\" fill=\"white\"/>\n";
    if (!title.empty())
        svg += "<text x=\"70\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\">" + title +
               "</text>\n";
    svg += "<line x1=\"" + fmt2(px0) + "\" y1=\"" + fmt2(py0) + "\" x2=\"" + fmt2(px1) +
           "\" y2=\"" + fmt2(py0) + "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + fmt2(px0) + "\" y1=\"" + fmt2(py0) + "\" x2=\"" + fmt2(px0) +
           "\" y2=\"" + fmt2(py1) + "\" stroke=\"black\"/>\n";

    for (int i = 0; i <= 5; ++i) {
        const double xv = xmin + (xmax - xmin) * i / 5.0;
        const double xp = sx(xv);
        svg += "<line x1=\"" + fmt2(xp) + "\" y1=\"" + fmt2(py0) + "\" x2=\"" + fmt2(xp) +
               "\" y2=\"" + fmt2(py0 + 5) + "\" stroke=\"black\"/>\n";
        const double label = log_x ? std::pow(10.0, xv) : xv;
        svg += "<text x=\"" + fmt2(xp) + "\" y=\"" + fmt2(py0 + 20) +
               "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" +
               fmt6(label) + "</text>\n";
    }
    for (int i = 0; i <= 5; ++i) {
        const double yv = ymax * i / 5.0;
        const double yp = sy(yv);
        svg += "<line x1=\"" + fmt2(px0 - 5) + "\" y1=\"" + fmt2(yp) + "\" x2=\"" + fmt2(px0) +
               "\" y2=\"" + fmt2(yp) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + fmt2(px0 - 9) + "\" y=\"" + fmt2(yp + 4) +
               "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" + fmt6(yv) +
               "</text>\n";
    }
    svg += "<text x=\"" + fmt2((px0 + px1) / 2) + "\" y=\"505\" font-family=\"sans-serif\" "
           "font-size=\"12\" text-anchor=\"middle\">" +
           x_axis + (log_x ? " (log scale)" : "") + "</text>\n";

    int color = 0;
    double legend_y = 50.0;
    for (const auto& [key, pts_c] : series_c) {
        const std::string stroke = kPalette[color % 10];
        const auto polyline = [&](const std::vector<std::pair<double, double>>& pts,
                                  const char* dash) {
            std::string s = "<polyline fill=\"none\" stroke=\"" + stroke + "\"" + dash +
                            " points=\"";
            for (const auto& [x, y] : pts) s += fmt2(sx(x)) + ',' + fmt2(sy(y)) + ' ';
            s += "\"/>\n";
            return s;
        };
        svg += polyline(pts_c, "");
        svg += polyline(series_u[key], " stroke-dasharray=\"5,3\"");
        svg += "<line x1=\"620\" y1=\"" + fmt2(legend_y) + "\" x2=\"648\" y2=\"" +
               fmt2(legend_y) + "\" stroke=\"" + stroke + "\"/>\n";
        svg += "<text x=\"654\" y=\"" + fmt2(legend_y + 4) +
               "\" font-family=\"sans-serif\" font-size=\"11\">" + key + "</text>\n";
        legend_y += 16.0;
        ++color;
    }
    svg += "<line x1=\"620\" y1=\"" + fmt2(legend_y) + "\" x2=\"648\" y2=\"" + fmt2(legend_y) +
           "\" stroke=\"black\"/>\n<text x=\"654\" y=\"" + fmt2(legend_y + 4) +
           "\" font-family=\"sans-serif\" font-size=\"11\">consonance (solid)</text>\n";
    legend_y += 16.0;
    svg += "<line x1=\"620\" y1=\"" + fmt2(legend_y) + "\" x2=\"648\" y2=\"" + fmt2(legend_y) +
           "\" stroke=\"black\" stroke-dasharray=\"5,3\"/>\n<text x=\"654\" y=\"" +
           fmt2(legend_y + 4) +
           "\" font-family=\"sans-serif\" font-size=\"11\">uin (dashed)</text>\n";
    svg += "</svg>\n";
    return svg;
}

void render_svg(const std::vector<MeasureRecord>& records, const std::string& path,
                const std::string& x_axis, const std::vector<std::string>& series_keys,
                const std::string& title) {
    write_text_file(path, svg_string(records, x_axis, series_keys, title));
}

std::vector<SeriesMinimum> uin_series_minima(const std::vector<MeasureRecord>& records) {
    // Group rows by (lambda, psi, omega, region) preserving sweep order;
    // within a group rows follow the ascending t_hawking grid.
    std::vector<std::tuple<double, double, double, Bipartition>> keys;
    std::map<std::tuple<double, double, double, Bipartition>, std::vector<const MeasureRecord*>>
        groups;
    for (const MeasureRecord& r : records) {
        const auto key = std::make_tuple(r.lambda, r.psi, r.omega, r.bipartition);
        auto [it, inserted] = groups.try_emplace(key);
        if (inserted) keys.push_back(key);
        it->second.push_back(&r);
    }
    std::vector<SeriesMinimum> out;
    for (const auto& key : keys) {
        const auto& rows = groups[key];
        std::size_t best = 0;
        for (std::size_t i = 1; i < rows.size(); ++i)
            if (rows[i]->uin < rows[best]->uin) best = i;
        SeriesMinimum m;
        m.lambda = std::get<0>(key);
        m.psi = std::get<1>(key);
        m.omega = std::get<2>(key);
        m.bipartition = std::get<3>(key);
        m.min_uin = rows[best]->uin;
        m.t_at_min = rows[best]->t_hawking;
        m.interior = rows.size() >= 3 && best > 0 && best + 1 < rows.size();
        out.push_back(m);
    }
    return out;
}

std::vector<std::string> run_figure_command(const std::string& id, const std::string& out_dir,
                                            bool svg, int workers) {
    const FigurePreset preset = figure_preset(id);
    const std::vector<MeasureRecord> records = run_sweep(preset.spec, workers);

    std::filesystem::create_directories(out_dir);
    const std::string base = (std::filesystem::path(out_dir) / id).string();
    std::vector<std::string> written;

    write_csv(records, base + ".csv");
    written.push_back(base + ".csv");
    if (svg) {
        render_svg(records, base + ".svg", preset.x_axis, preset.series_keys, preset.caption);
        written.push_back(base + ".svg");
    }

    nlohmann::ordered_json meta;
    meta["id"] = preset.id;
    meta["caption"] = preset.caption;
    meta["assumptions"] = preset.assumptions;
    meta["rows"] = records.size();
    if (preset.x_axis == "t_hawking") {
        nlohmann::ordered_json minima = nlohmann::ordered_json::array();
        for (const SeriesMinimum& m : uin_series_minima(records)) {
            nlohmann::ordered_json j;
            j["lambda"] = m.lambda;
            j["psi"] = m.psi;
            j["omega"] = m.omega;
            j["region"] = to_string(m.bipartition);
            j["min_uin"] = m.min_uin;
            j["t_hawking_at_min"] = m.t_at_min;
            j["interior"] = m.interior;
            minima.push_back(j);
        }
        meta["uin_minima"] = minima;
    }
    write_text_file(base + "_meta.json", meta.dump(2) + "\n");
    written.push_back(base + "_meta.json");
    return written;
}

SweepSpec parse_sweep_config(const std::string& json_text) {
    nlohmann::json cfg;
    try {
        cfg = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("config: invalid JSON: ") + e.what());
    }
    if (!cfg.is_object()) throw UsageError("config: top-level value must be an object");

    static const std::vector<std::string> known{"lambda_values",    "psi_values",
                                                "omega_values",     "t_hawking_values",
                                                "bipartitions",     "convention"};
    for (const auto& [key, _] : cfg.items())
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw UsageError("config: unknown key '" + key + "'");

    const auto number_list = [&](const char* key) {
        if (!cfg.contains(key)) throw UsageError(std::string("config: missing key '") + key + "'");
        const auto& v = cfg[key];
        if (!v.is_array() || v.empty())
            throw UsageError(std::string("config: '") + key + "' must be a non-empty array");
        std::vector<double> out;
        for (const auto& x : v) {
            if (!x.is_number())
                throw UsageError(std::string("config: '") + key + "' must contain numbers");
            out.push_back(x.get<double>());
        }
        return out;
    };

    SweepSpec spec;
    spec.lambda_values = number_list("lambda_values");
    spec.psi_values = number_list("psi_values");
    spec.omega_values = number_list("omega_values");

    if (!cfg.contains("t_hawking_values"))
        throw UsageError("config: missing key 't_hawking_values'");
    const auto& tv = cfg["t_hawking_values"];
    if (tv.is_array()) {
        spec.t_hawking_values = number_list("t_hawking_values");
    } else if (tv.is_object()) {
        for (const auto& [key, _] : tv.items())
            if (key != "log_min" && key != "log_max" && key != "count")
                throw UsageError("config: unknown key 't_hawking_values." + key + "'");
        if (!tv.contains("log_min") || !tv.contains("log_max") || !tv.contains("count"))
            throw UsageError("config: t_hawking_values range needs log_min, log_max, count");
        const double lo = tv["log_min"].get<double>();
        const double hi = tv["log_max"].get<double>();
        const int count = tv["count"].get<int>();
        if (count < 2 || !(lo > 0.0) || !(hi > lo))
            throw UsageError("config: t_hawking_values range needs 0 < log_min < log_max and "
                             "count >= 2");
        spec.t_hawking_values = logspace(std::log10(lo), std::log10(hi), count);
    } else {
        throw UsageError("config: 't_hawking_values' must be an array or a log range object");
    }

    if (!cfg.contains("bipartitions")) throw UsageError("config: missing key 'bipartitions'");
    if (!cfg["bipartitions"].is_array() || cfg["bipartitions"].empty())
        throw UsageError("config: 'bipartitions' must be a non-empty array");
    for (const auto& b : cfg["bipartitions"]) {
        if (!b.is_string()) throw UsageError("config: bipartitions must be strings");
        const auto parsed = bipartition_from_string(b.get<std::string>());
        if (!parsed)
            throw UsageError("config: unknown bipartition '" + b.get<std::string>() + "'");
        spec.bipartitions.push_back(*parsed);
    }

    if (cfg.contains("convention")) {
        if (!cfg["convention"].is_string())
            throw UsageError("config: 'convention' must be a string");
        const auto parsed = convention_from_string(cfg["convention"].get<std::string>());
        if (!parsed)
            throw UsageError("config: unknown convention '" +
                             cfg["convention"].get<std::string>() + "'");
        spec.convention = *parsed;
    }
    validate(spec);
    return spec;
}

} // namespace qcorr
