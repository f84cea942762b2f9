#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "casimir4d/analysis.hpp"
#include "casimir4d/asymptotics.hpp"
#include "casimir4d/gradient.hpp"

namespace casimir4d {

/// "%.17g" in the C locale: round-trip safe.
std::string format_double(double v);

std::string sweep_csv(std::span<const SweepRow> rows);
std::string figure1_csv(std::span<const Figure1Row> rows);
std::string figure2_csv(std::span<const Figure2Row> rows);

void to_json(nlohmann::json& j, const EnergyValue& e);
void to_json(nlohmann::json& j, const ExpansionCoefficients& c);
void to_json(nlohmann::json& j, const FitReport& r);
void to_json(nlohmann::json& j, const SweepRow& r);
void to_json(nlohmann::json& j, const SecondOrderMatch& m);
void to_json(nlohmann::json& j, const Figure1Row& r);
void to_json(nlohmann::json& j, const Figure2Row& r);

/// {theory: {beta, cubic_present, gamma, delta}} evaluated at d = 1.
nlohmann::json beta_table_json();

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  bool dashed = false;
};

struct LinePlot {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  std::vector<PlotSeries> series;
};

/// Minimal standalone SVG line chart (axes, ticks, legend).
std::string render_svg(const LinePlot& plot);

}  // namespace casimir4d
