#pragma once

#include <string>
#include <vector>

#include "su2ab/homology.hpp"
#include "su2ab/torus_sets.hpp"
#include "su2ab/trace_intervals.hpp"

namespace su2ab {

// (A, H, P) at one distinguished boundary torus, in a declared ordered basis.
// When h_exact is false, H is a certified subset of the true H(Y).
// The piece's group presentation rides along for homology and oracle queries;
// `port` names the open boundary port inside `pres`.
struct BoundaryTriple {
    TorusSet A, H, P;
    bool h_exact = true;
    std::string basis_x = "x", basis_h = "h";
    Presentation pres;
    int port = 0;
};

struct SeifertCoefficient {
    long long p = 1, q = 0;
};
using SeifertCoefficients = std::vector<SeifertCoefficient>;

BoundaryTriple solid_torus_triple(const Slope& meridian);

// Output at the port where the peripheral class is the product x3 = x1 x2;
// both inputs must carry the common fiber as their second basis element.
BoundaryTriple c3_compose(const BoundaryTriple& t1, const BoundaryTriple& t2);

// Output at the far port of C2.
BoundaryTriple c2_compose(const BoundaryTriple& t1);

// Seifert piece over the disk, basis (mu, h); left fold of solid tori
// through c3_compose, with even Seifert coefficients normalized to odd via
// boundary shears and the result sheared back.
BoundaryTriple seifert_disk_triple(const SeifertCoefficients& coeffs);

// same, without the q-parity normalization (the recipes are natural under
// the shears, so this must agree with seifert_disk_triple; kept for tests)
BoundaryTriple seifert_disk_triple_unnormalized(const SeifertCoefficients& coeffs);

// Seifert piece over the punctured projective plane / Moebius band.
BoundaryTriple seifert_mobius_triple(const SeifertCoefficients& coeffs);

// exchanges the roles of x1 and x2 at the open C3 port (x -> x^{-1} map)
TorusSet negate_u(const TorusSet& s);

void validate_coefficients(const SeifertCoefficients& coeffs);

}  // namespace su2ab
