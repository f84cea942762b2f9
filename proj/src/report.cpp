#include "casimir4d/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace casimir4d {
namespace {

std::string_view variant_name(ExpansionVariant v) { return v == ExpansionVariant::Printed ? "printed" : "fitted"; }
std::string_view form_name(ExpansionForm f) { return f == ExpansionForm::Mu ? "mu" : "sphere_plate"; }

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string sweep_csv(std::span<const SweepRow> rows) {
  std::string out = "x,F_exact,F_pfa,F_de2,F_asym_fitted,err_pfa_pct,err_de_pct\n";
  for (const auto& r : rows) {
    out += format_double(r.x) + ',' + format_double(r.f_exact) + ',' + format_double(r.f_pfa) + ',' +
           format_double(r.f_de2) + ',' + format_double(r.f_asym_fitted) + ',' + format_double(r.err_pfa_pct) +
           ',' + format_double(r.err_de_pct) + '\n';
  }
  return out;
}

std::string figure1_csv(std::span<const Figure1Row> rows) {
  std::string out = "x,F_exact/F_pfa\n";
  for (const auto& r : rows) out += format_double(r.x) + ',' + format_double(r.ratio) + '\n';
  return out;
}

std::string figure2_csv(std::span<const Figure2Row> rows) {
  std::string out = "log10inv_x,err_pfa_pct,err_de_pct\n";
  for (const auto& r : rows) {
    out += format_double(r.log10inv_x) + ',' + format_double(r.err_pfa_pct) + ',' + format_double(r.err_de_pct) +
           '\n';
  }
  return out;
}

void to_json(nlohmann::json& j, const EnergyValue& e) {
  j = {{"value", e.value}, {"n_max", e.n_max}, {"tail_bound", e.tail_bound}};
}

void to_json(nlohmann::json& j, const ExpansionCoefficients& c) {
  nlohmann::json powers = nlohmann::json::array();
  for (const auto& [p, coefficient] : c.powers) powers.push_back({{"exponent", p}, {"coefficient", coefficient}});
  j = {{"form", form_name(c.form)},
       {"variant", variant_name(c.variant)},
       {"prefactor", c.prefactor},
       {"powers", powers},
       {"log_coefficient", c.log_coefficient},
       {"log_argument_scale", c.log_argument_scale},
       {"constant", c.constant}};
  j["fit_residual"] = c.fit_residual ? nlohmann::json(*c.fit_residual) : nlohmann::json(nullptr);
}

void to_json(nlohmann::json& j, const FitReport& r) {
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& fn : r.basis) basis.push_back(fn.tag());
  j = {{"basis", basis},
       {"coefficients", r.coefficients},
       {"max_residual", r.max_residual},
       {"grid", r.grid},
       {"condition_estimate", r.condition_estimate}};
}

void to_json(nlohmann::json& j, const SweepRow& r) {
  j = {{"x", r.x},
       {"F_exact", r.f_exact},
       {"F_pfa", r.f_pfa},
       {"F_de2", r.f_de2},
       {"F_asym_fitted", r.f_asym_fitted},
       {"err_pfa_pct", r.err_pfa_pct},
       {"err_de_pct", r.err_de_pct}};
}

void to_json(nlohmann::json& j, const SecondOrderMatch& m) {
  j = {{"gamma", m.gamma}, {"delta", m.delta}, {"beta", m.beta}, {"cubic_present", m.cubic_present}};
}

void to_json(nlohmann::json& j, const Figure1Row& r) { j = {{"x", r.x}, {"ratio", r.ratio}}; }

void to_json(nlohmann::json& j, const Figure2Row& r) {
  j = {{"log10inv_x", r.log10inv_x}, {"err_pfa_pct", r.err_pfa_pct}, {"err_de_pct", r.err_de_pct}};
}

nlohmann::json beta_table_json() {
  nlohmann::json table = nlohmann::json::object();
  for (auto theory : {TheoryKind::ElectromagneticConductor, TheoryKind::DirichletScalar, TheoryKind::NeumannScalar}) {
    table[std::string(to_string(theory))] = second_order_match(theory, 1.0);
  }
  return table;
}

std::string render_svg(const LinePlot& plot) {
  constexpr double kWidth = 640.0;
  constexpr double kHeight = 420.0;
  constexpr double kLeft = 70.0;
  constexpr double kRight = 20.0;
  constexpr double kTop = 40.0;
  constexpr double kBottom = 55.0;
  static constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};

  const auto tx = [&](double x) { return plot.log_x ? std::log10(x) : x; };
  double x_min = std::numeric_limits<double>::infinity();
  double x_max = -x_min;
  double y_min = x_min;
  double y_max = -x_min;
  for (const auto& s : plot.series) {
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (!std::isfinite(s.y[i]) || (plot.log_x && !(s.x[i] > 0.0))) continue;
      x_min = std::min(x_min, tx(s.x[i]));
      x_max = std::max(x_max, tx(s.x[i]));
      y_min = std::min(y_min, s.y[i]);
      y_max = std::max(y_max, s.y[i]);
    }
  }
  if (!std::isfinite(x_min)) x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
  if (x_max == x_min) x_max = x_min + 1.0;
  if (y_max == y_min) y_max = y_min + 1.0;
  const double pad = 0.05 * (y_max - y_min);
  y_min -= pad;
  y_max += pad;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const auto px = [&](double x) { return kLeft + (tx(x) - x_min) / (x_max - x_min) * plot_w; };
  const auto pxt = [&](double t) { return kLeft + (t - x_min) / (x_max - x_min) * plot_w; };
  const auto py = [&](double y) { return kTop + (y_max - y) / (y_max - y_min) * plot_h; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
      << xml_escape(plot.title) << "</text>\n";
  svg << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w << "\" height=\"" << plot_h
      << "\" fill=\"none\" stroke=\"black\"/>\n";

  // x ticks: decades on a log axis, five even steps otherwise
  std::vector<double> x_ticks;
  if (plot.log_x) {
    for (double t = std::ceil(x_min - 1e-9); t <= x_max + 1e-9; t += 1.0) x_ticks.push_back(t);
  } else {
    for (int i = 0; i <= 5; ++i) x_ticks.push_back(x_min + (x_max - x_min) * i / 5.0);
  }
  for (double t : x_ticks) {
    const double X = pxt(t);
    svg << "<line x1=\"" << X << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << X << "\" y2=\"" << kTop + plot_h + 5
        << "\" stroke=\"black\"/>\n";
    const std::string label = plot.log_x ? "1e" + short_number(t) : short_number(t);
    svg << "<text x=\"" << X << "\" y=\"" << kTop + plot_h + 18 << "\" text-anchor=\"middle\">" << label
        << "</text>\n";
  }
  for (int i = 0; i <= 5; ++i) {
    const double v = y_min + (y_max - y_min) * i / 5.0;
    const double Y = py(v);
    svg << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << Y << "\" x2=\"" << kLeft << "\" y2=\"" << Y
        << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << kLeft - 8 << "\" y=\"" << Y + 4 << "\" text-anchor=\"end\">" << short_number(v)
        << "</text>\n";
  }
  svg << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 12 << "\" text-anchor=\"middle\">"
      << xml_escape(plot.x_label) << "</text>\n";
  svg << "<text transform=\"translate(16," << kTop + plot_h / 2 << ") rotate(-90)\" text-anchor=\"middle\">"
      << xml_escape(plot.y_label) << "</text>\n";

  for (std::size_t k = 0; k < plot.series.size(); ++k) {
    const auto& s = plot.series[k];
    const char* color = kColors[k % std::size(kColors)];
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"";
    if (s.dashed) svg << " stroke-dasharray=\"6,4\"";
    svg << " points=\"";
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (!std::isfinite(s.y[i]) || (plot.log_x && !(s.x[i] > 0.0))) continue;
      svg << short_number(px(s.x[i])) << ',' << short_number(py(s.y[i])) << ' ';
    }
    svg << "\"/>\n";
    const double ly = kTop + 16.0 + 16.0 * static_cast<double>(k);
    svg << "<line x1=\"" << kLeft + plot_w - 150 << "\" y1=\"" << ly - 4 << "\" x2=\"" << kLeft + plot_w - 120
        << "\" y2=\"" << ly - 4 << "\" stroke=\"" << color << "\" stroke-width=\"1.5\""
        << (s.dashed ? " stroke-dasharray=\"6,4\"" : "") << "/>\n";
    svg << "<text x=\"" << kLeft + plot_w - 114 << "\" y=\"" << ly << "\">" << xml_escape(s.label) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace casimir4d
