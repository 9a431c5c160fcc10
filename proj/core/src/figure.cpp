#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "lune/harness.h"

namespace lune {

namespace {

constexpr double kCanvas = 400.0;
constexpr double kScale = 160.0;

double sx(double x) { return kCanvas / 2.0 + kScale * x; }
double sy(double y) { return kCanvas / 2.0 - kScale * y; }

std::string num(double v, int digits = 6) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string point(Complex p) { return num(sx(p.real())) + "," + num(sy(p.imag())); }

void check_stream(const std::ofstream& out, const std::filesystem::path& path) {
  if (!out) throw std::runtime_error(path.string() + ": write failed");
}

}  // namespace

FigureOptions builtin_figure_options(std::string_view name) {
  FigureOptions o;
  if (name == "fig1" || name == "fig3") {
    o.chord_index = 0;
  } else if (name == "fig2") {
    o.epsilon = 0.25;
    o.shade_lune = false;
    o.mark_max_gap = true;
  } else {
    throw std::invalid_argument("unknown builtin figure '" + std::string(name) + "'");
  }
  return o;
}

FigureFiles emit_figure(const InstanceSpec& spec, const FigureOptions& options,
                        const std::filesystem::path& svg_path) {
  const Instance inst = build_instance(spec);
  const RootMultiset roots = roots_of_combination(inst.config, inst.weights);

  std::optional<ChordArc> chord;
  if (inst.config.distinct_count() >= 2) {
    const auto chords = consecutive_pairs(inst.config);
    if (options.chord_index) {
      if (*options.chord_index >= chords.size())
        throw std::out_of_range("figure: chord index out of range");
      chord = chords[*options.chord_index];
    } else {
      chord = max_gap(inst.config).chord;
    }
  }
  if (options.epsilon && !(*options.epsilon > 0.0 && *options.epsilon < 1.0))
    throw std::invalid_argument("figure: epsilon must lie in (0, 1)");

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas << "\" height=\"" << kCanvas
      << "\" viewBox=\"0 0 " << kCanvas << ' ' << kCanvas << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (chord && options.shade_lune) {
    svg << "<polygon class=\"lune\" fill=\"#cfe0fb\" stroke=\"none\" points=\"";
    const auto outline = lune_outline(*chord);
    for (std::size_t i = 0; i < outline.size(); ++i) svg << (i ? " " : "") << point(outline[i]);
    svg << "\"/>\n";
  }
  svg << "<circle class=\"unit-circle\" cx=\"" << num(sx(0)) << "\" cy=\"" << num(sy(0)) << "\" r=\""
      << num(kScale) << "\" fill=\"none\" stroke=\"black\" stroke-dasharray=\"6,4\"/>\n";
  if (options.epsilon) {
    svg << "<circle class=\"inner-circle\" cx=\"" << num(sx(0)) << "\" cy=\"" << num(sy(0)) << "\" r=\""
        << num(kScale * (1.0 - *options.epsilon)) << "\" fill=\"none\" stroke=\"gray\" stroke-dasharray=\"2,3\"/>\n";
  }
  if (chord && options.mark_max_gap) {
    // Counterclockwise on the circle is clockwise on screen (y is flipped): sweep flag 1.
    const int large = chord->alpha() > std::numbers::pi ? 1 : 0;
    svg << "<path class=\"max-gap\" d=\"M " << point(chord->z()) << " A " << num(kScale) << ' '
        << num(kScale) << " 0 " << large << " 1 " << point(chord->z_plus())
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"3\"/>\n";
  }
  if (chord) {
    svg << "<line class=\"chord\" x1=\"" << num(sx(chord->z().real())) << "\" y1=\"" << num(sy(chord->z().imag()))
        << "\" x2=\"" << num(sx(chord->z_plus().real())) << "\" y2=\"" << num(sy(chord->z_plus().imag()))
        << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }
  for (const auto& zeta : inst.config.distinct_zeros()) {
    svg << "<circle class=\"zero\" cx=\"" << num(sx(zeta.real())) << "\" cy=\"" << num(sy(zeta.imag()))
        << "\" r=\"4\" fill=\"white\" stroke=\"red\" stroke-width=\"1.5\"/>\n";
  }
  for (const auto& w : roots.roots) {
    const double x = sx(w.real());
    const double y = sy(w.imag());
    svg << "<path class=\"root\" d=\"M " << num(x - 4) << ',' << num(y - 4) << " L " << num(x + 4) << ','
        << num(y + 4) << " M " << num(x - 4) << ',' << num(y + 4) << " L " << num(x + 4) << ','
        << num(y - 4) << "\" stroke=\"blue\" stroke-width=\"1.5\"/>\n";
  }
  svg << "</svg>\n";

  std::ostringstream csv;
  std::size_t rows = 0;
  csv << "kind,index,x,y,multiplicity\n";
  for (std::size_t r = 0; r < inst.config.distinct_count(); ++r, ++rows) {
    const Complex p = inst.config.zero(r);
    csv << "zero," << r << ',' << num(p.real(), 12) << ',' << num(p.imag(), 12) << ','
        << inst.config.multiplicity(r) << '\n';
  }
  for (std::size_t k = 0; k < roots.roots.size(); ++k, ++rows) {
    csv << "root," << k << ',' << num(roots.roots[k].real(), 12) << ',' << num(roots.roots[k].imag(), 12)
        << ",1\n";
  }
  if (chord) {
    csv << "chord_start,0," << num(chord->z().real(), 12) << ',' << num(chord->z().imag(), 12) << ",1\n";
    csv << "chord_end,0," << num(chord->z_plus().real(), 12) << ',' << num(chord->z_plus().imag(), 12) << ",1\n";
    rows += 2;
  }

  FigureFiles files{svg_path, svg_path, rows};
  files.csv.replace_extension(".csv");
  {
    std::ofstream out(files.svg);
    if (!out) throw std::runtime_error(files.svg.string() + ": cannot open for writing");
    out << svg.str();
    check_stream(out, files.svg);
  }
  {
    std::ofstream out(files.csv);
    if (!out) throw std::runtime_error(files.csv.string() + ": cannot open for writing");
    out << csv.str();
    check_stream(out, files.csv);
  }
  return files;
}

}  // namespace lune
