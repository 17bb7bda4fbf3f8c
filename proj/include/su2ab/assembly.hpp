#pragma once

#include <optional>
#include <string>
#include <vector>

#include "su2ab/pieces.hpp"

namespace su2ab {

enum class PieceKind { SolidTorus, SeifertDisk, SeifertPlanar, SeifertMobiusPlanar, C2, C3 };

std::string kind_name(PieceKind k);
PieceKind kind_from_name(const std::string& s);
int default_port_count(PieceKind k);

struct PieceSpec {
    std::string id;
    PieceKind kind = PieceKind::SolidTorus;
    SeifertCoefficients coeffs;
    int ports = 1;
};

struct GluingSpec {
    std::string from_id;
    int from_port = 0;
    std::string to_id;
    int to_port = 0;
    long long m[2][2] = {{1, 0}, {0, 1}};
};

struct ManifoldGraph {
    std::vector<PieceSpec> pieces;
    std::vector<GluingSpec> gluings;

    int piece_index(const std::string& id) const;
    // list of (piece index, port) not used by any gluing
    std::vector<std::pair<int, int>> open_ports() const;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Validated graph from the JSON document format; planar multi-boundary
// pieces are kept as written (expand_graph resolves them).
ManifoldGraph parse_manifold(const std::string& json_text);
std::string graph_to_json(const ManifoldGraph& g);

// Expand seifert_planar / seifert_mobius_planar nodes into trees of
// solid_torus / seifert_disk / C2 / C3 pieces. Port names are preserved
// through an id.portN convention on the expanded pieces.
ManifoldGraph expand_graph(const ManifoldGraph& g);

enum class VerdictStatus { Abelian, NotAbelian, Inconclusive };

enum class WitnessKind { HH, HA, AH, PP };

struct Verdict {
    VerdictStatus status = VerdictStatus::Inconclusive;
    std::optional<PointUV> witness;            // in side-1 port coordinates
    WitnessKind witness_kind = WitnessKind::HH;
    std::string torus_label;
    bool exact = true;                          // both sides h_exact
    // data for the numerical oracle
    Presentation pres1, pres2;
    int port1 = 0, port2 = 0;
    long long gluing[2][2] = {{1, 0}, {0, 1}};
};

// Fold one side of the tree, ending at (piece, port); the side must contain
// every piece reachable without crossing that port's gluing.
BoundaryTriple fold_to_port(const ManifoldGraph& g, int piece, int port, int forbidden_edge);

// Both sides of an interior edge, plus the edge matrix.
struct SplitResult {
    BoundaryTriple side_from, side_to;
    long long m[2][2];
    std::string label;
};
SplitResult reduce_to_split(const ManifoldGraph& g, int edge);

Verdict closed_verdict(const BoundaryTriple& t1, const BoundaryTriple& t2,
                       const long long gluing[2][2]);

Verdict dehn_fill_verdict(const BoundaryTriple& t, const Slope& alpha);

// Full pipeline on a closed manifold graph: expand, split at `edge`
// (default 0), verdict. Throws on open ports.
Verdict analyze_closed(const ManifoldGraph& g, int edge = 0);

struct HomologyReport {
    long long order = -1;  // -1 = infinite
    LongitudeData side1, side2;
    long long delta = 0;
    long long snf_order = -1;  // cross-check via the glued presentation
};
HomologyReport homology_of_closed(const ManifoldGraph& g, int edge = 0);

}  // namespace su2ab
