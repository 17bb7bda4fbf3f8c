#include "su2ab/assembly.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace su2ab {

using nlohmann::json;

std::string kind_name(PieceKind k) {
    switch (k) {
        case PieceKind::SolidTorus: return "solid_torus";
        case PieceKind::SeifertDisk: return "seifert_disk";
        case PieceKind::SeifertPlanar: return "seifert_planar";
        case PieceKind::SeifertMobiusPlanar: return "seifert_mobius_planar";
        case PieceKind::C2: return "C2";
        case PieceKind::C3: return "C3";
    }
    return "?";
}

PieceKind kind_from_name(const std::string& s) {
    if (s == "solid_torus") return PieceKind::SolidTorus;
    if (s == "seifert_disk") return PieceKind::SeifertDisk;
    if (s == "seifert_planar") return PieceKind::SeifertPlanar;
    if (s == "seifert_mobius_planar") return PieceKind::SeifertMobiusPlanar;
    if (s == "C2" || s == "c2") return PieceKind::C2;
    if (s == "C3" || s == "c3") return PieceKind::C3;
    throw ParseError("unknown piece type: " + s);
}

int default_port_count(PieceKind k) {
    switch (k) {
        case PieceKind::SolidTorus:
        case PieceKind::SeifertDisk: return 1;
        case PieceKind::C2: return 2;
        case PieceKind::C3: return 3;
        default: return -1;  // planar kinds need an explicit port count
    }
}

int ManifoldGraph::piece_index(const std::string& id) const {
    for (size_t i = 0; i < pieces.size(); ++i)
        if (pieces[i].id == id) return static_cast<int>(i);
    return -1;
}

std::vector<std::pair<int, int>> ManifoldGraph::open_ports() const {
    std::set<std::pair<int, int>> used;
    for (const auto& g : gluings) {
        used.insert({piece_index(g.from_id), g.from_port});
        used.insert({piece_index(g.to_id), g.to_port});
    }
    std::vector<std::pair<int, int>> open;
    for (size_t i = 0; i < pieces.size(); ++i)
        for (int p = 0; p < pieces[i].ports; ++p)
            if (!used.count({static_cast<int>(i), p})) open.push_back({static_cast<int>(i), p});
    return open;
}

namespace {

void validate_graph(const ManifoldGraph& g) {
    std::set<std::string> ids;
    for (const auto& p : g.pieces) {
        if (!ids.insert(p.id).second) throw ParseError("duplicate piece id: " + p.id);
        if (p.ports < 1) throw ParseError("piece " + p.id + " has no ports");
        try {
            validate_coefficients(p.coeffs);
        } catch (const std::exception& e) {
            throw ParseError("piece " + p.id + ": " + e.what());
        }
        if (p.kind == PieceKind::SolidTorus && p.coeffs.size() != 1)
            throw ParseError("piece " + p.id + ": solid_torus needs exactly one [p,q] meridian");
        if ((p.kind == PieceKind::C2 || p.kind == PieceKind::C3) && !p.coeffs.empty())
            throw ParseError("piece " + p.id + ": C2/C3 take no coefficients");
    }
    std::set<std::pair<int, int>> used;
    for (const auto& e : g.gluings) {
        int a = g.piece_index(e.from_id), b = g.piece_index(e.to_id);
        if (a < 0) throw ParseError("gluing references unknown piece: " + e.from_id);
        if (b < 0) throw ParseError("gluing references unknown piece: " + e.to_id);
        if (e.from_port < 0 || e.from_port >= g.pieces[a].ports)
            throw ParseError("gluing port out of range on " + e.from_id);
        if (e.to_port < 0 || e.to_port >= g.pieces[b].ports)
            throw ParseError("gluing port out of range on " + e.to_id);
        if (!used.insert({a, e.from_port}).second)
            throw ParseError("port reused: " + e.from_id + ":" + std::to_string(e.from_port));
        if (!used.insert({b, e.to_port}).second)
            throw ParseError("port reused: " + e.to_id + ":" + std::to_string(e.to_port));
        long long det = e.m[0][0] * e.m[1][1] - e.m[0][1] * e.m[1][0];
        if (det != 1 && det != -1)
            throw ParseError("gluing matrix must have det +-1, got det = " + std::to_string(det));
    }
    // tree check: n pieces, connected with exactly n-1 edges, no cycles
    size_t n = g.pieces.size();
    std::vector<int> parent(n);
    for (size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& e : g.gluings) {
        int a = find(g.piece_index(e.from_id)), b = find(g.piece_index(e.to_id));
        if (a == b) throw ParseError("not a tree: gluings contain a cycle");
        parent[a] = b;
    }
    if (!g.pieces.empty()) {
        int r = find(0);
        for (size_t i = 1; i < n; ++i)
            if (find(static_cast<int>(i)) != r) throw ParseError("not a tree: graph is disconnected");
    }
    size_t open = g.open_ports().size();
    if (open > 1) throw ParseError("more than one unglued port (" + std::to_string(open) + ")");
}

}  // namespace

ManifoldGraph parse_manifold(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    ManifoldGraph g;
    if (!doc.contains("pieces") || !doc["pieces"].is_array())
        throw ParseError("document needs a \"pieces\" array");
    for (const auto& jp : doc["pieces"]) {
        PieceSpec p;
        p.id = jp.at("id").get<std::string>();
        p.kind = kind_from_name(jp.at("type").get<std::string>());
        if (jp.contains("coefficients"))
            for (const auto& c : jp["coefficients"]) {
                if (!c.is_array() || c.size() != 2) throw ParseError("coefficient must be [p,q]");
                p.coeffs.push_back({c[0].get<long long>(), c[1].get<long long>()});
            }
        int dflt = default_port_count(p.kind);
        if (jp.contains("ports")) p.ports = jp["ports"].get<int>();
        else if (dflt > 0) p.ports = dflt;
        else throw ParseError("piece " + p.id + ": planar kinds need a \"ports\" count");
        g.pieces.push_back(p);
    }
    if (doc.contains("gluings"))
        for (const auto& je : doc["gluings"]) {
            GluingSpec e;
            e.from_id = je.at("from").at(0).get<std::string>();
            e.from_port = je.at("from").at(1).get<int>();
            e.to_id = je.at("to").at(0).get<std::string>();
            e.to_port = je.at("to").at(1).get<int>();
            const auto& m = je.at("matrix");
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) e.m[i][j] = m.at(i).at(j).get<long long>();
            g.gluings.push_back(e);
        }
    validate_graph(g);
    return g;
}

std::string graph_to_json(const ManifoldGraph& g) {
    json doc;
    doc["pieces"] = json::array();
    for (const auto& p : g.pieces) {
        json jp;
        jp["id"] = p.id;
        jp["type"] = kind_name(p.kind);
        json cs = json::array();
        for (const auto& c : p.coeffs) cs.push_back({c.p, c.q});
        jp["coefficients"] = cs;
        if (p.ports != default_port_count(p.kind)) jp["ports"] = p.ports;
        doc["pieces"].push_back(jp);
    }
    doc["gluings"] = json::array();
    for (const auto& e : g.gluings) {
        json je;
        je["from"] = {e.from_id, e.from_port};
        je["to"] = {e.to_id, e.to_port};
        je["matrix"] = {{e.m[0][0], e.m[0][1]}, {e.m[1][0], e.m[1][1]}};
        doc["gluings"].push_back(je);
    }
    return doc.dump(2);
}

namespace {

// Build a chain of C3 pieces exposing `nports` external ports plus the disk
// piece carrying the singular fibers. Returns the external port map
// (piece id, port) for the original ports 0..nports-1.
struct Expander {
    ManifoldGraph out;
    int counter = 0;

    std::string fresh(const std::string& base) { return base + "#" + std::to_string(counter++); }

    void add_piece(const std::string& id, PieceKind k, const SeifertCoefficients& cs, int ports) {
        out.pieces.push_back({id, k, cs, ports});
    }
    void add_identity_gluing(const std::string& a, int pa, const std::string& b, int pb) {
        GluingSpec e;
        e.from_id = a; e.from_port = pa;
        e.to_id = b; e.to_port = pb;
        out.gluings.push_back(e);
    }

    // planar S^2-based piece: returns port map of size nports
    std::vector<std::pair<std::string, int>> planar(const std::string& base, int nports,
                                                    const SeifertCoefficients& cs) {
        if (nports == 1) {
            std::string id = fresh(base + ".disk");
            if (cs.empty()) {
                add_piece(id, PieceKind::SolidTorus, {{1, 0}}, 1);
            } else if (cs.size() == 1) {
                add_piece(id, PieceKind::SolidTorus, {cs[0]}, 1);
            } else {
                add_piece(id, PieceKind::SeifertDisk, cs, 1);
            }
            return {{id, 0}};
        }
        auto sub = planar(base, nports - 1, cs);
        std::string id = fresh(base + ".c3");
        add_piece(id, PieceKind::C3, {}, 3);
        // C3 port 0 consumes the sub-assembly's port 0; ports 1 and 2 face out
        add_identity_gluing(id, 0, sub[0].first, sub[0].second);
        std::vector<std::pair<std::string, int>> ports = {{id, 1}, {id, 2}};
        for (size_t i = 1; i < sub.size(); ++i) ports.push_back(sub[i]);
        return ports;
    }

    std::vector<std::pair<std::string, int>> mobius_planar(const std::string& base, int nports,
                                                           const SeifertCoefficients& cs) {
        if (nports == 1 && cs.empty()) {
            // twisted I-bundle over the Klein bottle; kept atomic so the
            // boundary keeps the RP^2-fibration basis
            std::string id = fresh(base + ".klein");
            add_piece(id, PieceKind::SeifertMobiusPlanar, {}, 1);
            return {{id, 0}};
        }
        std::string c2id = fresh(base + ".c2");
        add_piece(c2id, PieceKind::C2, {}, 2);
        auto sub = planar(base, nports, cs);
        add_identity_gluing(c2id, 0, sub[0].first, sub[0].second);
        std::vector<std::pair<std::string, int>> ports = {{c2id, 1}};
        for (size_t i = 1; i < sub.size(); ++i) ports.push_back(sub[i]);
        return ports;
    }
};

}  // namespace

ManifoldGraph expand_graph(const ManifoldGraph& g) {
    Expander ex;
    // port maps for every original piece
    std::map<std::string, std::vector<std::pair<std::string, int>>> portmap;
    for (const auto& p : g.pieces) {
        switch (p.kind) {
            case PieceKind::SolidTorus:
            case PieceKind::SeifertDisk:
            case PieceKind::C2:
            case PieceKind::C3: {
                ex.add_piece(p.id, p.kind, p.coeffs, p.ports);
                std::vector<std::pair<std::string, int>> ports;
                for (int i = 0; i < p.ports; ++i) ports.push_back({p.id, i});
                portmap[p.id] = ports;
                break;
            }
            case PieceKind::SeifertPlanar:
                if (p.ports == 1) {
                    // one boundary component: just a disk-based piece
                    if (p.coeffs.size() <= 1)
                        ex.add_piece(p.id, PieceKind::SolidTorus,
                                     p.coeffs.empty() ? SeifertCoefficients{{1, 0}} : p.coeffs, 1);
                    else
                        ex.add_piece(p.id, PieceKind::SeifertDisk, p.coeffs, 1);
                    portmap[p.id] = {{p.id, 0}};
                } else {
                    portmap[p.id] = ex.planar(p.id, p.ports, p.coeffs);
                }
                break;
            case PieceKind::SeifertMobiusPlanar:
                portmap[p.id] = ex.mobius_planar(p.id, p.ports, p.coeffs);
                break;
        }
    }
    for (const auto& e : g.gluings) {
        GluingSpec ne = e;
        auto [fid, fport] = portmap[e.from_id][e.from_port];
        auto [tid, tport] = portmap[e.to_id][e.to_port];
        ne.from_id = fid; ne.from_port = fport;
        ne.to_id = tid; ne.to_port = tport;
        ex.out.gluings.push_back(ne);
    }
    return ex.out;
}

namespace {

BoundaryTriple invert_port_x(const BoundaryTriple& t) {
    BoundaryTriple out = t;
    out.A = negate_u(t.A);
    out.H = negate_u(t.H);
    out.P = negate_u(t.P);
    out.pres.ports[out.port].x = t.pres.ports[t.port].x.inverse();
    return out;
}

int find_edge_using(const ManifoldGraph& g, int piece, int port, int skip_edge) {
    for (size_t i = 0; i < g.gluings.size(); ++i) {
        if (static_cast<int>(i) == skip_edge) continue;
        const auto& e = g.gluings[i];
        if (g.piece_index(e.from_id) == piece && e.from_port == port) return static_cast<int>(i);
        if (g.piece_index(e.to_id) == piece && e.to_port == port) return static_cast<int>(i);
    }
    return -1;
}

void invert2(const long long m[2][2], long long out[2][2]) {
    long long det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    out[0][0] = det * m[1][1];
    out[0][1] = det * -m[0][1];
    out[1][0] = det * -m[1][0];
    out[1][1] = det * m[0][0];
}

BoundaryTriple map_triple(const BoundaryTriple& t, const long long m[2][2]) {
    BoundaryTriple out = t;
    out.A = apply_matrix(t.A, m);
    out.H = apply_matrix(t.H, m);
    out.P = apply_matrix(t.P, m);
    // port words: x_here = m00 x_t + m01 h_t, h_here = m10 x_t + m11 h_t
    PortWords& pw = out.pres.ports[out.port];
    Word xt = t.pres.ports[t.port].x, ht = t.pres.ports[t.port].h;
    pw.x = xt.power(m[0][0]).concat(ht.power(m[0][1]));
    pw.h = xt.power(m[1][0]).concat(ht.power(m[1][1]));
    return out;
}

}  // namespace

BoundaryTriple fold_to_port(const ManifoldGraph& g, int piece, int port, int forbidden_edge) {
    const PieceSpec& spec = g.pieces[piece];
    // gather the triples arriving at the other ports
    std::vector<std::optional<BoundaryTriple>> in(spec.ports);
    for (int p = 0; p < spec.ports; ++p) {
        if (p == port) continue;
        int ei = find_edge_using(g, piece, p, forbidden_edge);
        if (ei < 0) throw std::runtime_error("piece " + spec.id + " has an unglued interior port");
        const GluingSpec& e = g.gluings[ei];
        bool here_is_from = g.piece_index(e.from_id) == piece && e.from_port == p;
        int nbr = here_is_from ? g.piece_index(e.to_id) : g.piece_index(e.from_id);
        int nport = here_is_from ? e.to_port : e.from_port;
        BoundaryTriple t = fold_to_port(g, nbr, nport, ei);
        if (here_is_from) {
            in[p] = map_triple(t, e.m);
        } else {
            long long mi[2][2];
            invert2(e.m, mi);
            in[p] = map_triple(t, mi);
        }
    }
    switch (spec.kind) {
        case PieceKind::SolidTorus:
            return solid_torus_triple(Slope(spec.coeffs[0].p, spec.coeffs[0].q));
        case PieceKind::SeifertDisk:
            return seifert_disk_triple(spec.coeffs);
        case PieceKind::C3: {
            // relation x0 x1 = x2 among the three port classes
            if (port == 2) return c3_compose(*in[0], *in[1]);
            if (port == 0) return c3_compose(*in[2], invert_port_x(*in[1]));
            return c3_compose(invert_port_x(*in[0]), *in[2]);
        }
        case PieceKind::C2:
            return c2_compose(port == 1 ? *in[0] : *in[1]);
        case PieceKind::SeifertMobiusPlanar:
            if (spec.ports == 1 && spec.coeffs.empty()) return seifert_mobius_triple({});
            throw std::runtime_error("fold on unexpanded planar piece " + spec.id);
        default:
            throw std::runtime_error("fold on unexpanded planar piece " + spec.id);
    }
}

SplitResult reduce_to_split(const ManifoldGraph& g, int edge) {
    if (g.gluings.empty()) throw std::runtime_error("no interior edge");
    if (edge < 0 || edge >= static_cast<int>(g.gluings.size()))
        throw std::runtime_error("edge index out of range");
    const GluingSpec& e = g.gluings[edge];
    SplitResult r;
    r.side_from = fold_to_port(g, g.piece_index(e.from_id), e.from_port, edge);
    r.side_to = fold_to_port(g, g.piece_index(e.to_id), e.to_port, edge);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.m[i][j] = e.m[i][j];
    r.label = e.from_id + ":" + std::to_string(e.from_port) + "--" + e.to_id + ":" +
              std::to_string(e.to_port);
    return r;
}

Verdict closed_verdict(const BoundaryTriple& t1, const BoundaryTriple& t2,
                       const long long gluing[2][2]) {
    BoundaryTriple t2m = map_triple(t2, gluing);
    Verdict v;
    v.exact = t1.h_exact && t2.h_exact;
    v.pres1 = t1.pres;
    v.port1 = t1.port;
    v.pres2 = t2.pres;
    v.port2 = t2.port;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) v.gluing[i][j] = gluing[i][j];

    struct Check {
        WitnessKind kind;
        TorusSet set;
    };
    std::vector<Check> checks = {
        {WitnessKind::HH, intersect(t1.H, t2m.H)},
        {WitnessKind::HA, intersect(t1.H, t2m.A)},
        {WitnessKind::AH, intersect(t1.A, t2m.H)},
        {WitnessKind::PP, intersect(t1.P, t2m.P)},
    };
    for (const auto& c : checks) {
        if (!is_empty(c.set)) {
            v.status = VerdictStatus::NotAbelian;
            v.witness = witness_point(c.set);
            v.witness_kind = c.kind;
            return v;
        }
    }
    v.status = v.exact ? VerdictStatus::Abelian : VerdictStatus::Inconclusive;
    return v;
}

Verdict dehn_fill_verdict(const BoundaryTriple& t, const Slope& alpha) {
    const long long id[2][2] = {{1, 0}, {0, 1}};
    return closed_verdict(t, solid_torus_triple(alpha), id);
}

Verdict analyze_closed(const ManifoldGraph& g0, int edge) {
    ManifoldGraph g = expand_graph(g0);
    if (!g.open_ports().empty()) throw std::runtime_error("manifold has boundary; cannot analyze as closed");
    SplitResult s = reduce_to_split(g, edge);
    Verdict v = closed_verdict(s.side_from, s.side_to, s.m);
    v.torus_label = s.label;
    return v;
}

HomologyReport homology_of_closed(const ManifoldGraph& g0, int edge) {
    ManifoldGraph g = expand_graph(g0);
    if (!g.open_ports().empty()) throw std::runtime_error("manifold has boundary; cannot analyze as closed");
    SplitResult s = reduce_to_split(g, edge);
    HomologyReport r;
    r.side1 = longitude_of(s.side_from.pres, s.side_from.port);
    r.side2 = longitude_of(s.side_to.pres, s.side_to.port);
    r.delta = distance(r.side1.longitude, map_slope_through_gluing(r.side2.longitude, s.m));
    r.order = closed_h1_order(r.side1, r.side2, s.m);
    Presentation glued = glue_presentations(s.side_from.pres, s.side_from.port, s.side_to.pres,
                                            s.side_to.port, s.m);
    r.snf_order = h1_order_of_closed(glued);
    return r;
}

}  // namespace su2ab
