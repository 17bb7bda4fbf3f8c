#pragma once

#include <string>
#include <vector>

#include "su2ab/rational.hpp"
#include "su2ab/torus_sets.hpp"

namespace su2ab {

using IntMat = std::vector<std::vector<long long>>;

// U * A * V = D with U, V unimodular and D diagonal, d1 | d2 | ...
struct SnfResult {
    IntMat d, u, v;
    int rank = 0;  // number of nonzero diagonal entries
    std::vector<long long> diag() const;
};

SnfResult smith_normal_form(const IntMat& a);

IntMat mat_mul(const IntMat& a, const IntMat& b);
IntMat identity_mat(size_t n);

// Group word as (generator index, exponent) syllables.
struct Word {
    std::vector<std::pair<int, int>> syl;
    Word() = default;
    Word(std::initializer_list<std::pair<int, int>> s) : syl(s) {}
    Word inverse() const;
    Word concat(const Word& w) const;
    Word power(long long e) const;
    std::vector<long long> abelianized(size_t ngens) const;
};

// One boundary port: the two peripheral classes in the piece's group.
struct PortWords {
    Word x, h;
    std::string x_label = "x", h_label = "h";
};

// Finite presentation of a piece group, with word-level relators (the
// numerical oracle needs them) and boundary ports.
struct Presentation {
    std::vector<std::string> gens;
    std::vector<Word> relators;
    std::vector<PortWords> ports;

    IntMat relator_matrix() const;  // rows = abelianized relators
    std::vector<long long> port_x_vec(int port) const;
    std::vector<long long> port_h_vec(int port) const;
};

struct LongitudeData {
    Slope longitude;
    long long order = 1;    // o_Y
    long long torsion = 1;  // t_Y
};

// The unique torsion boundary slope, its order, and |Torsion(H1)|.
// Throws std::domain_error("not a QHS complement") when free rank != 1.
LongitudeData longitude_of(const Presentation& piece, int port);

// sigma = o1 o2 t1 t2 * Delta(lambda1, lambda2 mapped through the gluing);
// -1 encodes "infinite" (Delta = 0).
long long closed_h1_order(const LongitudeData& l1, const LongitudeData& l2,
                          const long long gluing[2][2]);

// A(Y) computed from the restriction image Hom(H1(Y),U(1)) -> Hom(H1(dY),U(1)).
TorusSet abelian_set_restriction(const Presentation& piece, int port);

// A(Y) = character_lines(longitude, order).
TorusSet abelian_set(const Presentation& piece, int port);

// Central boundary characters extending to an abelian non-central
// representation; a set of points inside {0,1/2}^2.
TorusSet central_extension_set(const Presentation& piece, int port);

// Exact solvability of the extension system for one boundary character.
struct ExtensionSolution {
    bool solvable = false;
    bool noncentral_exists = false;        // some solution has image not in {+-1}
    std::vector<Rat> assignment;           // a particular solution (turns per generator)
    std::vector<Rat> noncentral_assignment;  // set when noncentral_exists
};
ExtensionSolution solve_abelian_extension(const Presentation& piece, int port, const Turn& u,
                                          const Turn& v);

// Presentation of a closed manifold: two pieces glued along their ports with
// xA -> a xB + b hB, hA -> c xB + d hB.
Presentation glue_presentations(const Presentation& p1, int port1, const Presentation& p2,
                                int port2, const long long m[2][2]);

// |H1| of a closed presentation via SNF; -1 encodes infinite.
long long h1_order_of_closed(const Presentation& closed);

// Slope of lambda2 expressed in the port-1 basis through the gluing.
Slope map_slope_through_gluing(const Slope& lambda2, const long long m[2][2]);

}  // namespace su2ab
