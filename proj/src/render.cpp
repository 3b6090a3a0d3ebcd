#include "arcgrid/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <vector>

namespace arcgrid {

namespace {

constexpr int kCell = 40;   // pixels per lattice step
constexpr int kMargin = 30; // pixels around the grid

const char* const kPalette[] = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
    "#e377c2", "#17becf", "#bcbd22", "#7f7f7f", "#aec7e8", "#98df8a",
};
constexpr int kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

struct Bounds {
    int rmin = 0, rmax = 1, cmin = 0, cmax = 1;
};

Bounds bounds_of(const GridModel& m) {
    Bounds b;
    bool seen = false;
    auto absorb = [&](int r, int c) {
        if (!seen) {
            b = Bounds{r, r, c, c};
            seen = true;
            return;
        }
        b.rmin = std::min(b.rmin, r);
        b.rmax = std::max(b.rmax, r);
        b.cmin = std::min(b.cmin, c);
        b.cmax = std::max(b.cmax, c);
    };
    if (m.epr) {
        absorb(m.rect.row1, m.rect.col1);
        absorb(m.rect.row2, m.rect.col2);
    }
    for (const GridPath& p : m.paths)
        for (const GridPoint& pt : p.corners) absorb(pt.row, pt.col);
    if (b.rmin == b.rmax) b.rmax = b.rmin + 1;
    if (b.cmin == b.cmax) b.cmax = b.cmin + 1;
    return b;
}

std::vector<const GridPath*> paths_by_id(const GridModel& m) {
    std::vector<const GridPath*> sorted;
    sorted.reserve(m.paths.size());
    for (const GridPath& p : m.paths) sorted.push_back(&p);
    std::sort(sorted.begin(), sorted.end(),
              [](const GridPath* a, const GridPath* b) { return a->id < b->id; });
    return sorted;
}

} // namespace

std::string render_svg(const GridModel& m) {
    const Bounds b = bounds_of(m);
    const int width = kCell * (b.cmax - b.cmin) + 2 * kMargin;
    const int height = kCell * (b.rmax - b.rmin) + 2 * kMargin;
    auto x_of = [&](int col) { return kMargin + kCell * (col - b.cmin); };
    auto y_of = [&](int row) { return kMargin + kCell * (row - b.rmin); };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
        << height << "\">\n";

    out << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
    for (int r = b.rmin; r <= b.rmax; ++r)
        out << "<line x1=\"" << x_of(b.cmin) << "\" y1=\"" << y_of(r)
            << "\" x2=\"" << x_of(b.cmax) << "\" y2=\"" << y_of(r) << "\"/>\n";
    for (int c = b.cmin; c <= b.cmax; ++c)
        out << "<line x1=\"" << x_of(c) << "\" y1=\"" << y_of(b.rmin)
            << "\" x2=\"" << x_of(c) << "\" y2=\"" << y_of(b.rmax) << "\"/>\n";
    out << "</g>\n";

    if (m.epr) {
        out << "<rect x=\"" << x_of(m.rect.col1) << "\" y=\"" << y_of(m.rect.row1)
            << "\" width=\"" << kCell * (m.rect.col2 - m.rect.col1)
            << "\" height=\"" << kCell * (m.rect.row2 - m.rect.row1)
            << "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"2\" "
               "stroke-dasharray=\"6,4\"/>\n";
    }

    const std::vector<const GridPath*> sorted = paths_by_id(m);
    const int count = static_cast<int>(sorted.size());
    for (int i = 0; i < count; ++i) {
        const GridPath& p = *sorted[i];
        // Distinct per-path diagonal shift: every segment is axis-aligned,
        // so the shift reads as a perpendicular offset on each of them.
        const double shift = (i - (count - 1) / 2.0) * 3.0;
        char shift_text[32];
        std::snprintf(shift_text, sizeof shift_text, "%.1f", shift);
        out << "<polyline data-id=\"" << p.id << "\" transform=\"translate("
            << shift_text << "," << shift_text << ")\" points=\"";
        for (std::size_t k = 0; k < p.corners.size(); ++k) {
            if (k) out << " ";
            out << x_of(p.corners[k].col) << "," << y_of(p.corners[k].row);
        }
        out << "\" fill=\"none\" stroke=\"" << kPalette[i % kPaletteSize]
            << "\" stroke-width=\"3\" stroke-linecap=\"round\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string render_ascii(const GridModel& m) {
    const Bounds b = bounds_of(m);
    const int rows = 2 * (b.rmax - b.rmin) + 1;
    const int cols = 2 * (b.cmax - b.cmin) + 1;
    std::vector<std::string> canvas(rows, std::string(cols, ' '));
    for (int r = b.rmin; r <= b.rmax; ++r)
        for (int c = b.cmin; c <= b.cmax; ++c)
            canvas[2 * (r - b.rmin)][2 * (c - b.cmin)] = '.';

    auto mark = [&](int half_row, int half_col, char ch) {
        char& cell = canvas[half_row - 2 * b.rmin][half_col - 2 * b.cmin];
        if ((cell == '-' && ch == '|') || (cell == '|' && ch == '-'))
            cell = '+';
        else if (cell != '+')
            cell = ch;
    };

    for (const GridPath* p : paths_by_id(m)) {
        for (std::size_t k = 0; k + 1 < p->corners.size(); ++k) {
            GridPoint a = p->corners[k], c = p->corners[k + 1];
            int r1 = 2 * a.row, c1 = 2 * a.col, r2 = 2 * c.row, c2 = 2 * c.col;
            if (r1 > r2) std::swap(r1, r2);
            if (c1 > c2) std::swap(c1, c2);
            if (r1 == r2) {
                for (int x = c1; x <= c2; ++x)
                    mark(r1, x, x % 2 == 0 ? '+' : '-');
            } else {
                for (int y = r1; y <= r2; ++y)
                    mark(y, c1, y % 2 == 0 ? '+' : '|');
            }
        }
    }

    std::ostringstream out;
    for (const std::string& line : canvas) out << line << "\n";
    return out.str();
}

} // namespace arcgrid
