#pragma once

#include <string>
#include <vector>

#include "qcorr/measures.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

/// Cartesian sweep grid.  All value lists must be non-empty and inside their
/// parameter domains; t_hawking values may include the exact limit 0.
struct SweepSpec {
    std::vector<double> lambda_values;
    std::vector<double> psi_values;
    std::vector<double> omega_values;
    std::vector<double> t_hawking_values;
    std::vector<Bipartition> bipartitions;
    UinConvention convention = UinConvention::Strict;
};

void validate(const SweepSpec& spec);

/// One evaluated grid point; one CSV row.
struct MeasureRecord {
    double lambda = 0.0;
    double psi = 0.0;
    double omega = 0.0;
    double t_hawking = 0.0;
    double varpi = 0.0;
    double epsilon = 0.0;
    Bipartition bipartition = Bipartition::Initial;
    UinConvention convention = UinConvention::Strict;
    double consonance = 0.0;
    double uin = 0.0;
    std::vector<std::string> flags; // diagnostics, e.g. closed-form/channel mismatch
};

/// Evaluate a single grid point.  The reduced state comes from the closed
/// form; the channel route is recomputed as a cross-check and any Frobenius
/// mismatch above 1e-12 is flagged (and the channel result preferred).
MeasureRecord run_point(double lambda, double psi, double omega, double t_hawking,
                        Bipartition bipartition, UinConvention convention);

/// Reference implementation: plain loop in row-major order (lambda
/// outermost, bipartition innermost).
std::vector<MeasureRecord> run_sweep_serial(const SweepSpec& spec);

/// Parallel sweep over the same grid; output order and values are identical
/// to run_sweep_serial for every worker count.  workers <= 0 consults the
/// QCORR_WORKERS environment variable (absent means one worker).
std::vector<MeasureRecord> run_sweep(const SweepSpec& spec, int workers = 0);

/// A versioned sweep preset regenerating one figure of the parameter study.
struct FigurePreset {
    std::string id;
    std::string caption;
    std::vector<std::string> assumptions; // inferred constants, recorded per value
    std::string x_axis;                   // "lambda" or "t_hawking"
    std::vector<std::string> series_keys; // record fields that label a curve
    SweepSpec spec;
};

/// Presets fig1 and fig3..fig8.  Unknown ids raise UsageError.
FigurePreset figure_preset(const std::string& id);
std::vector<std::string> figure_preset_ids();

/// CSV schema: lambda,psi,omega,t_hawking,varpi,epsilon,region,convention,
/// consonance,uin,flags -- doubles at 17 significant digits, LF endings,
/// byte-deterministic for identical inputs.
void write_csv(const std::vector<MeasureRecord>& records, const std::string& path);
std::string csv_string(const std::vector<MeasureRecord>& records);

/// Minimal multi-series line chart (log-scale x for t_hawking sweeps).
/// No numeric content beyond the CSV; byte-deterministic.
void render_svg(const std::vector<MeasureRecord>& records, const std::string& path,
                const std::string& x_axis, const std::vector<std::string>& series_keys,
                const std::string& title = "");
std::string svg_string(const std::vector<MeasureRecord>& records, const std::string& x_axis,
                       const std::vector<std::string>& series_keys,
                       const std::string& title = "");

/// Location of the minimum of each (lambda, psi, omega, region) UIN series
/// along the t_hawking axis.
struct SeriesMinimum {
    double lambda = 0.0;
    double psi = 0.0;
    double omega = 0.0;
    Bipartition bipartition = Bipartition::Initial;
    double min_uin = 0.0;
    double t_at_min = 0.0;
    bool interior = false; // attained strictly inside the swept grid
};

std::vector<SeriesMinimum> uin_series_minima(const std::vector<MeasureRecord>& records);

/// Run one preset end to end: writes <id>.csv, optionally <id>.svg, and a
/// <id>_meta.json companion (caption, assumptions, per-series UIN minima for
/// temperature sweeps).  Returns the list of files written.
std::vector<std::string> run_figure_command(const std::string& id, const std::string& out_dir,
                                            bool svg, int workers = 0);

/// Parse a sweep config document (JSON syntax mirroring SweepSpec field
/// names; unknown keys rejected).  t_hawking_values accepts either an array
/// of values or {"log_min":..., "log_max":..., "count":...}.
SweepSpec parse_sweep_config(const std::string& json_text);

} // namespace qcorr
