#pragma once

#include <cstdio>
#include <string>

#include "tricircle/regions.hpp"

namespace tricircle {

/// 1 = base construction; 2 = with the altitude feet H and J; 3..8 = regions
/// A..F shaded; 9 = the composite decomposition figure.
using FigureId = int;

struct RenderOptions {
    int width_px = 800;
    double margin_frac = 0.08;  // of the drawing's span
    int decimals = 6;
    bool show_labels = true;
};

namespace svg {

// Palette. Circle strokes follow the construction's conventional coloring;
// fills are not contractual.
inline constexpr const char* kStrokeCircleD = "blue";
inline constexpr const char* kStrokeCircleE = "red";
inline constexpr const char* kStrokeCircleF = "green";
inline constexpr const char* kFillSegmentD = "#b9d4f0";
inline constexpr const char* kFillSegmentE = "#f0b9b9";
inline constexpr const char* kFillSegmentF = "#bfe8bf";
inline constexpr const char* kFillSemicircle = "#d9c0a3";
inline constexpr const char* kHatchStroke = "#c9a227";

inline constexpr const char* fill_for(RegionId id) {
    switch (id) {
        case RegionId::RA:
        case RegionId::RB: return kFillSegmentD;
        case RegionId::RC:
        case RegionId::RD: return kFillSegmentE;
        case RegionId::RE:
        case RegionId::RF: return kFillSegmentF;
        default: return kFillSemicircle;
    }
}

class Writer {
public:
    Writer(const ConstructionScene& scene, const RenderOptions& opts)
        : scene_(scene), opts_(opts), span_(2 * scene.circleD.radius) {}

    std::string fmt(double v) const {
        char buf[48];
        if (v == 0.0) v = 0.0;  // normalize -0
        std::snprintf(buf, sizeof buf, "%.*f", opts_.decimals, v);
        return buf;
    }

    // world -> screen: y axis flipped at emission so the numbers in the file
    // are directly checkable against the figure.
    double sx(double x) const { return x; }
    double sy(double y) const { return -y; }

    std::string& out() { return out_; }

    void open_document() {
        const double m = opts_.margin_frac * span_;
        const Point d = scene_.circleD.center;
        const double r = scene_.circleD.radius;
        out_ += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        out_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"";
        out_ += fmt(d.x - r - m) + " " + fmt(-(d.y + r) - m) + " " + fmt(span_ + 2 * m) +
                " " + fmt(span_ + 2 * m) + "\" width=\"" + std::to_string(opts_.width_px) +
                "\" height=\"" + std::to_string(opts_.width_px) + "\">\n";
    }

    void close_document() { out_ += "</svg>\n"; }

    void hatch_defs() {
        const double step = 0.025 * span_;
        out_ += "<defs>\n<pattern id=\"hatch\" width=\"" + fmt(step) + "\" height=\"" +
                fmt(step) +
                "\" patternUnits=\"userSpaceOnUse\" patternTransform=\"rotate(45)\">\n";
        out_ += "<line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"" + fmt(step) + "\" stroke=\"" +
                std::string(kHatchStroke) + "\" stroke-width=\"" + fmt(step / 4) +
                "\"/>\n</pattern>\n</defs>\n";
    }

    /// Chord-and-arc region outline: chord from->to, arc back on the witness
    /// side. Arc flags are derived from the chord/witness data, so the filled
    /// path encloses exactly the region the membership predicate names.
    void region_path(const RegionSpec& spec, const std::string& fill) {
        const Point f = spec.chord_from, t = spec.chord_to;
        const double r = spec.disk.radius;
        const int sw = chord_side(spec.interior_witness, f, t);
        const int sc = chord_side(spec.disk.center, f, t);
        const int large_arc = (sc == sw) ? 1 : 0;

        Point d = t - f;
        Point n{-d.y / norm(d), d.x / norm(d)};
        if (sw < 0) n = {-n.x, -n.y};
        const Point apex = spec.disk.center + r * n;
        // sweep = 1 when the screen-space path start -> apex -> end turns in
        // the positive-angle direction.
        const double turn = (sx(apex.x) - sx(t.x)) * (sy(f.y) - sy(apex.y)) -
                            (sy(apex.y) - sy(t.y)) * (sx(f.x) - sx(apex.x));
        const int sweep = turn > 0.0 ? 1 : 0;

        out_ += "<path d=\"M " + fmt(sx(f.x)) + " " + fmt(sy(f.y)) + " L " + fmt(sx(t.x)) +
                " " + fmt(sy(t.y)) + " A " + fmt(r) + " " + fmt(r) + " 0 " +
                std::to_string(large_arc) + " " + std::to_string(sweep) + " " +
                fmt(sx(f.x)) + " " + fmt(sy(f.y)) + " Z\" fill=\"" + fill +
                "\" stroke=\"none\"/>\n";
    }

    void circle(const CircleSpec& c, const char* stroke) {
        out_ += "<circle cx=\"" + fmt(sx(c.center.x)) + "\" cy=\"" + fmt(sy(c.center.y)) +
                "\" r=\"" + fmt(c.radius) + "\" fill=\"none\" stroke=\"" +
                std::string(stroke) + "\" stroke-width=\"" + fmt(0.004 * span_) +
                "\"/>\n";
    }

    void line(Point p, Point q, const char* style) {
        out_ += "<line x1=\"" + fmt(sx(p.x)) + "\" y1=\"" + fmt(sy(p.y)) + "\" x2=\"" +
                fmt(sx(q.x)) + "\" y2=\"" + fmt(sy(q.y)) + "\" " + style + "/>\n";
    }

    std::string solid_style() const {
        return "stroke=\"black\" stroke-width=\"" + fmt(0.006 * span_) + "\"";
    }
    std::string dashed_style() const {
        return "stroke=\"black\" stroke-width=\"" + fmt(0.003 * span_) +
               "\" stroke-dasharray=\"" + fmt(0.02 * span_) + " " + fmt(0.012 * span_) +
               "\"";
    }
    std::string dotted_style() const {
        return "stroke=\"black\" stroke-width=\"" + fmt(0.003 * span_) +
               "\" stroke-dasharray=\"" + fmt(0.004 * span_) + " " + fmt(0.012 * span_) +
               "\"";
    }

    void label(const char* text, Point at, double dx_units, double dy_units,
               const char* anchor) {
        const double u = 0.03 * span_;
        out_ += "<text x=\"" + fmt(sx(at.x + dx_units * u)) + "\" y=\"" +
                fmt(sy(at.y + dy_units * u)) + "\" font-size=\"" + fmt(0.05 * span_) +
                "\" font-family=\"sans-serif\" text-anchor=\"" + std::string(anchor) +
                "\">" + text + "</text>\n";
    }

private:
    const ConstructionScene& scene_;
    RenderOptions opts_;
    double span_;
    std::string out_;
};

}  // namespace svg

/// One self-contained, byte-deterministic SVG document. Element order is
/// fixed: shaded regions, circles D/E/F, triangle edges, dashed and dotted
/// segments, labels.
inline std::string render_figure(const ConstructionScene& scene, FigureId fig,
                                 const RenderOptions& opts = {}) {
    if (fig < 1 || fig > 9) throw DomainError("render_figure: figure id must be 1..9");
    if (opts.width_px < 64) throw DomainError("render_figure: width_px must be >= 64");
    if (!(opts.margin_frac > 0.0) || !(opts.margin_frac < 0.5))
        throw DomainError("render_figure: margin_frac must be in (0, 0.5)");
    if (opts.decimals < 1 || opts.decimals > 12)
        throw DomainError("render_figure: decimals must be in [1, 12]");

    svg::Writer w(scene, opts);
    w.open_document();
    if (fig == 9) w.hatch_defs();

    // shaded regions
    if (fig >= 3 && fig <= 8) {
        const RegionId id = kSegmentIds[static_cast<std::size_t>(fig - 3)];
        w.region_path(region_spec(id, scene), svg::fill_for(id));
    } else if (fig == 9) {
        for (RegionId id : {RegionId::SB, RegionId::SA})
            w.region_path(region_spec(id, scene), svg::kFillSemicircle);
        for (RegionId id : kSegmentIds)
            w.region_path(region_spec(id, scene), svg::fill_for(id));
        w.region_path(region_spec(RegionId::SC, scene), "url(#hatch)");
    }

    // circles
    w.circle(scene.circleD, svg::kStrokeCircleD);
    w.circle(scene.circleE, svg::kStrokeCircleE);
    w.circle(scene.circleF, svg::kStrokeCircleF);

    // triangle edges
    const RightTriangle& t = scene.tri;
    const std::string solid = w.solid_style();
    w.line(t.A, t.B, solid.c_str());
    w.line(t.B, t.C, solid.c_str());
    w.line(t.C, t.A, solid.c_str());

    // construction segments
    const std::string dashed = w.dashed_style();
    w.line(scene.G, t.C, dashed.c_str());
    w.line(scene.E, scene.G, dashed.c_str());
    w.line(scene.F, scene.G, dashed.c_str());
    if (fig >= 2) {
        const std::string dotted = w.dotted_style();
        w.line(scene.G, scene.H, dotted.c_str());
        w.line(scene.G, scene.J, dotted.c_str());
    }

    if (opts.show_labels) {
        w.label("A", t.A, -0.5, 1.0, "end");
        w.label("B", t.B, 0.5, -1.4, "start");
        w.label("C", t.C, -0.5, -1.4, "end");
        w.label("D", scene.D, 0.7, 0.0, "start");
        w.label("E", scene.E, -0.7, 0.0, "end");
        w.label("F", scene.F, 0.0, -1.4, "middle");
        w.label("G", scene.G, 0.5, 0.6, "start");
        if (fig >= 2) {
            w.label("H", scene.H, -0.7, 0.0, "end");
            w.label("J", scene.J, 0.0, -1.4, "middle");
        }
    }

    w.close_document();
    return std::move(w.out());
}

}  // namespace tricircle
