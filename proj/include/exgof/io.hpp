#pragma once

#include <string>
#include <vector>

#include "exgof/extremal_stats.hpp"
#include "exgof/gof.hpp"
#include "exgof/integrated_periodogram.hpp"
#include "exgof/lattice.hpp"

namespace exgof {

/// Station observation used by the ingestion pipeline.
struct StationRecord {
    double x = 0.0;
    double y = 0.0;
    double value = 0.0;
};

/// Rectangular grid for ingestion output (square grids convert to
/// LatticeField).
struct GridField {
    int nx = 0, ny = 0;
    std::vector<double> values;  // row-major, ny rows of nx
    Marginal marginal = Marginal::raw;

    bool square() const { return nx == ny; }
    LatticeField to_lattice() const;
};

// Field CSV: first line n (or "nx,ny" for rectangles), then rows of
// comma-separated full-precision values.
std::string field_to_csv(const LatticeField& f);
std::string grid_to_csv(const GridField& g);
LatticeField field_from_csv(const std::string& text);

std::string field_to_json(const LatticeField& f);  // {n, marginal, values}
LatticeField field_from_json(const std::string& text);

// Lag function CSV: rows h1,h2,value.
std::string lag_function_to_csv(const LagFunction& g);
LagFunction lag_function_from_csv(const std::string& text);

// Fourier surface CSV: rows i1,i2,lambda1,lambda2,value.
std::string surface_to_csv(const FourierSurface& s);
FourierSurface surface_from_csv(const std::string& text);

// Statistic samples CSV: rows statistic,replicate,value (no header).
std::string stats_to_csv(const std::string& name, const std::vector<double>& values);

// Bootstrap replicate stream CSV: rows replicate,h1,h2,gamma_star.
std::string replicate_lags_to_csv(const std::vector<LagFunction>& per_replicate);

std::string report_to_json(const TestReport& r, const std::string& sim_stats_path,
                           const std::string& boot_stats_path);

// Stations CSV: rows x,y,value; '#' lines ignored.
std::vector<StationRecord> stations_from_csv(const std::string& text);

/// Inverse-distance-weighted interpolation of stations onto a regular grid
/// over [xmin,xmax] x [ymin,ymax]; an exact hit returns the station value.
GridField idw_grid(const std::vector<StationRecord>& stations, int nx, int ny, double xmin,
                   double ymin, double xmax, double ymax, double power);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace exgof
