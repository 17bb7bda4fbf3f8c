#include "su2ab/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace su2ab {

namespace {

constexpr double SCALE = 512.0;

std::string num(const Rat& r) {
    double v = r.to_double() * SCALE;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

// y axis points down in SVG; flip so v grows upward
std::string ynum(const Rat& r) { return num(Rat(1) - r); }

struct Seg {
    Rat u0, v0, u1, v1;
};

// cut a parameter interval of a line into segments that stay inside the
// closed unit square (split at wrap events of either coordinate)
std::vector<Seg> line_segments(const TorusLine& l, const Rat& t_from, const Rat& t_len) {
    std::vector<Seg> out;
    PointUV base = l.base();
    Rat bu = base.u.v, bv = base.v.v;
    long long a = l.n.a, b = l.n.b;
    // u(t) = bu - b t, v(t) = bv + a t ; collect wrap events in (t_from, t_from+t_len)
    std::vector<Rat> cuts = {t_from, t_from + t_len};
    auto add_wraps = [&](const Rat& coeff, const Rat& start) {
        if (coeff.num == 0) return;
        // start + coeff * t integer  =>  t = (k - start)/coeff
        Rat tmin = t_from, tmax = t_from + t_len;
        Rat klo = start + coeff * tmin, khi = start + coeff * tmax;
        if (khi < klo) std::swap(klo, khi);
        for (long long k = klo.floor(); k <= khi.floor() + 1; ++k) {
            Rat t = (Rat(k) - start) / coeff;
            if (tmin < t && t < tmax) cuts.push_back(t);
        }
    };
    add_wraps(Rat(-b), bu);
    add_wraps(Rat(a), bv);
    std::sort(cuts.begin(), cuts.end(), [](const Rat& x, const Rat& y) { return x < y; });
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (!(cuts[i] < cuts[i + 1])) continue;
        Rat mid = (cuts[i] + cuts[i + 1]) / Rat(2);
        // offset of the containing unit cell
        Rat u_mid = bu - Rat(b) * mid, v_mid = bv + Rat(a) * mid;
        Rat du = Rat(u_mid.floor()), dv = Rat(v_mid.floor());
        Seg s;
        s.u0 = bu - Rat(b) * cuts[i] - du;
        s.v0 = bv + Rat(a) * cuts[i] - dv;
        s.u1 = bu - Rat(b) * cuts[i + 1] - du;
        s.v1 = bv + Rat(a) * cuts[i + 1] - dv;
        out.push_back(s);
    }
    return out;
}

void emit_set(std::ostringstream& os, const TorusSet& s, const std::string& color,
              const std::string& cls, double width) {
    TorusSet n = s.normalized();
    for (const auto& l : n.lines) {
        os << "  <g class=\"" << cls << "-line\" data-exact=\"" << l.n.a << "u+" << l.n.b
           << "v=" << l.c.str() << "\">\n";
        for (const auto& seg : line_segments(l, Rat(0), Rat(1)))
            os << "    <line x1=\"" << num(seg.u0) << "\" y1=\"" << ynum(seg.v0) << "\" x2=\""
               << num(seg.u1) << "\" y2=\"" << ynum(seg.v1) << "\" stroke=\"" << color
               << "\" stroke-width=\"" << width << "\"/>\n";
        os << "  </g>\n";
    }
    for (const auto& a : n.arcs) {
        os << "  <g class=\"" << cls << "-arc\" data-exact=\"line " << a.line.n.a << "u+"
           << a.line.n.b << "v=" << a.line.c.str() << " t0=" << a.t0.str()
           << " len=" << a.len.str() << "\">\n";
        for (const auto& seg : line_segments(a.line, a.t0.v, a.len))
            os << "    <line x1=\"" << num(seg.u0) << "\" y1=\"" << ynum(seg.v0) << "\" x2=\""
               << num(seg.u1) << "\" y2=\"" << ynum(seg.v1) << "\" stroke=\"" << color
               << "\" stroke-width=\"" << width << "\"/>\n";
        os << "  </g>\n";
    }
    for (const auto& p : n.points)
        os << "  <circle class=\"" << cls << "-point\" data-exact=\"(" << p.u.str() << ","
           << p.v.str() << ")\" cx=\"" << num(p.u.v) << "\" cy=\"" << ynum(p.v.v)
           << "\" r=\"4\" fill=\"" << color << "\"/>\n";
}

}  // namespace

std::string render_triple_svg(const BoundaryTriple& t, const std::string& title) {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-40 -40 592 592\" "
          "width=\"592\" height=\"592\">\n";
    os << "  <title>" << title << "</title>\n";
    os << "  <rect x=\"0\" y=\"0\" width=\"512\" height=\"512\" fill=\"white\" "
          "stroke=\"black\" stroke-width=\"1\"/>\n";
    // ticks at pi
    os << "  <line x1=\"256\" y1=\"512\" x2=\"256\" y2=\"520\" stroke=\"black\"/>\n";
    os << "  <line x1=\"0\" y1=\"256\" x2=\"-8\" y2=\"256\" stroke=\"black\"/>\n";
    os << "  <text x=\"252\" y=\"534\" font-size=\"12\">&#960;</text>\n";
    os << "  <text x=\"-24\" y=\"260\" font-size=\"12\">&#960;</text>\n";
    os << "  <text x=\"-12\" y=\"530\" font-size=\"12\">0</text>\n";
    os << "  <text x=\"500\" y=\"534\" font-size=\"12\">2&#960;</text>\n";
    // draw order: A under H under P
    emit_set(os, t.A, "#0000cc", "abelian", 2.0);
    emit_set(os, t.H, "#cc0000", "irreducible", 2.0);
    emit_set(os, t.P, "#66ccee", "central-pillar", 2.0);
    os << "</svg>\n";
    return os.str();
}

}  // namespace su2ab
