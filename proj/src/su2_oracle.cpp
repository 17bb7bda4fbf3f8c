#include "su2ab/su2_oracle.hpp"

#include <cmath>
#include <random>

namespace su2ab {

namespace {
constexpr double TWO_PI = 6.283185307179586476925287;
}

Quat operator*(const Quat& a, const Quat& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

double Quat::norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

Quat Quat::normalized() const {
    double n = norm();
    return {w / n, x / n, y / n, z / n};
}

double Quat::dist_to_identity() const {
    double dw = w - 1;
    return std::sqrt(dw * dw + x * x + y * y + z * z);
}

Quat Quat::from_turn(double t) { return {std::cos(TWO_PI * t), std::sin(TWO_PI * t), 0, 0}; }

double commutator_gap(const Quat& a, const Quat& b) {
    Quat ab = a * b, ba = b * a;
    double dw = ab.w - ba.w, dx = ab.x - ba.x, dy = ab.y - ba.y, dz = ab.z - ba.z;
    return std::sqrt(dw * dw + dx * dx + dy * dy + dz * dz);
}

namespace {

Quat eval_word(const Word& w, const std::vector<Quat>& gens) {
    Quat q;
    for (const auto& [g, e] : w.syl) {
        Quat base = e > 0 ? gens[g] : gens[g].conj();
        for (int i = 0; i < std::abs(e); ++i) q = q * base;
    }
    return q;
}

struct Objective {
    const RelationSystem& sys;
    double a_target, b_target, c_target;  // cos of boundary turns

    explicit Objective(const RelationSystem& s) : sys(s) {
        a_target = std::cos(TWO_PI * s.target_u.v.to_double());
        b_target = std::cos(TWO_PI * s.target_v.v.to_double());
        c_target = std::cos(TWO_PI * (s.target_u.v.to_double() + s.target_v.v.to_double()));
    }

    size_t residual_size() const { return sys.pres.relators.size() * 4 + 6; }

    void residuals(const std::vector<Quat>& gens, std::vector<double>& r) const {
        r.clear();
        for (const auto& rel : sys.pres.relators) {
            Quat q = eval_word(rel, gens);
            r.push_back(q.w - 1);
            r.push_back(q.x);
            r.push_back(q.y);
            r.push_back(q.z);
        }
        Quat A = eval_word(sys.pres.ports[sys.port].x, gens);
        Quat B = eval_word(sys.pres.ports[sys.port].h, gens);
        Quat AB = A * B, BA = B * A;
        r.push_back(A.w - a_target);
        r.push_back(B.w - b_target);
        r.push_back(AB.w - c_target);
        r.push_back(AB.x - BA.x);
        r.push_back(AB.y - BA.y);
        r.push_back(AB.z - BA.z);
    }

    double norm(const std::vector<Quat>& gens) const {
        std::vector<double> r;
        residuals(gens, r);
        double s = 0;
        for (double v : r) s += v * v;
        return std::sqrt(s);
    }
};

std::vector<Quat> unpack(const std::vector<double>& th) {
    std::vector<Quat> g(th.size() / 4);
    for (size_t i = 0; i < g.size(); ++i)
        g[i] = Quat{th[4 * i], th[4 * i + 1], th[4 * i + 2], th[4 * i + 3]}.normalized();
    return g;
}

// Levenberg-Marquardt with a numeric Jacobian on the product of unit spheres
// (plain coordinates, renormalized after each step).
double lm_minimize(const Objective& obj, std::vector<double>& th, int max_iter) {
    const size_t np = th.size();
    std::vector<double> r, r2;
    auto eval = [&](const std::vector<double>& t, std::vector<double>& out) {
        obj.residuals(unpack(t), out);
        double s = 0;
        for (double v : out) s += v * v;
        return s;
    };
    double f = eval(th, r);
    double lambda = 1e-3;
    const size_t nr = r.size();
    std::vector<std::vector<double>> J(nr, std::vector<double>(np));
    for (int iter = 0; iter < max_iter && f > 1e-28; ++iter) {
        // Jacobian by forward differences
        const double h = 1e-7;
        std::vector<double> tp = th;
        for (size_t j = 0; j < np; ++j) {
            tp[j] += h;
            eval(tp, r2);
            for (size_t i = 0; i < nr; ++i) J[i][j] = (r2[i] - r[i]) / h;
            tp[j] = th[j];
        }
        // normal equations
        std::vector<std::vector<double>> A(np, std::vector<double>(np, 0));
        std::vector<double> g(np, 0);
        for (size_t i = 0; i < nr; ++i)
            for (size_t j = 0; j < np; ++j) {
                g[j] += J[i][j] * r[i];
                for (size_t k = j; k < np; ++k) A[j][k] += J[i][j] * J[i][k];
            }
        for (size_t j = 0; j < np; ++j)
            for (size_t k = 0; k < j; ++k) A[j][k] = A[k][j];

        bool accepted = false;
        for (int tries = 0; tries < 8 && !accepted; ++tries) {
            std::vector<std::vector<double>> M = A;
            for (size_t j = 0; j < np; ++j) M[j][j] += lambda * (A[j][j] > 1e-12 ? A[j][j] : 1.0);
            // Gaussian elimination for M d = -g
            std::vector<double> d(np);
            for (size_t j = 0; j < np; ++j) d[j] = -g[j];
            bool ok = true;
            for (size_t c = 0; c < np && ok; ++c) {
                size_t piv = c;
                for (size_t rr = c + 1; rr < np; ++rr)
                    if (std::fabs(M[rr][c]) > std::fabs(M[piv][c])) piv = rr;
                if (std::fabs(M[piv][c]) < 1e-14) { ok = false; break; }
                std::swap(M[c], M[piv]);
                std::swap(d[c], d[piv]);
                for (size_t rr = c + 1; rr < np; ++rr) {
                    double fac = M[rr][c] / M[c][c];
                    for (size_t cc = c; cc < np; ++cc) M[rr][cc] -= fac * M[c][cc];
                    d[rr] -= fac * d[c];
                }
            }
            if (!ok) { lambda *= 10; continue; }
            for (size_t c = np; c-- > 0;) {
                for (size_t cc = c + 1; cc < np; ++cc) d[c] -= M[c][cc] * d[cc];
                d[c] /= M[c][c];
            }
            std::vector<double> tn = th;
            for (size_t j = 0; j < np; ++j) tn[j] += d[j];
            // renormalize quats
            for (size_t q = 0; q < np / 4; ++q) {
                double n = 0;
                for (int c = 0; c < 4; ++c) n += tn[4 * q + c] * tn[4 * q + c];
                n = std::sqrt(n);
                if (n < 1e-9) { n = 1; tn[4 * q] = 1; tn[4 * q + 1] = tn[4 * q + 2] = tn[4 * q + 3] = 0; }
                for (int c = 0; c < 4; ++c) tn[4 * q + c] /= n;
            }
            double fn = eval(tn, r2);
            if (fn < f) {
                th = tn;
                f = fn;
                r = r2;
                lambda = std::max(lambda / 3, 1e-12);
                accepted = true;
            } else {
                lambda *= 4;
            }
        }
        if (!accepted) break;
    }
    return std::sqrt(f);
}

unsigned long long fnv_hash(const RelationSystem& sys) {
    unsigned long long h = 1469598103934665603ULL;
    auto mix = [&](long long v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (unsigned long long)(v >> (8 * i)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    mix((long long)sys.pres.gens.size());
    for (const auto& rel : sys.pres.relators)
        for (const auto& [g, e] : rel.syl) { mix(g); mix(e); }
    for (const auto& [g, e] : sys.pres.ports[sys.port].x.syl) { mix(g); mix(e); }
    for (const auto& [g, e] : sys.pres.ports[sys.port].h.syl) { mix(g); mix(e); }
    mix(sys.target_u.v.num); mix(sys.target_u.v.den);
    mix(sys.target_v.v.num); mix(sys.target_v.v.den);
    return h;
}

double commutator_score_of(const std::vector<Quat>& gens) {
    double best = 0;
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j) {
            Quat c = gens[i] * gens[j] * gens[i].conj() * gens[j].conj();
            best = std::max(best, c.dist_to_identity());
        }
    return best;
}

SolveResult abelian_attempt(const RelationSystem& sys, bool need_noncentral) {
    SolveResult out;
    ExtensionSolution sol =
        solve_abelian_extension(sys.pres, sys.port, sys.target_u, sys.target_v);
    if (!sol.solvable) return out;
    if (need_noncentral && !sol.noncentral_exists) return out;
    const std::vector<Rat>& xs = need_noncentral ? sol.noncentral_assignment : sol.assignment;
    std::vector<Quat> gens;
    for (const auto& t : xs) gens.push_back(Quat::from_turn(t.to_double()));
    Objective obj(sys);
    out.found = true;
    out.assignment = gens;
    out.residual = obj.norm(gens);
    out.commutator_score = commutator_score_of(gens);
    return out;
}

}  // namespace

SolveResult solve_representation(const RelationSystem& sys, SolveMode mode,
                                 const OracleConfig& cfg) {
    if (mode == SolveMode::RequireAbelian) return abelian_attempt(sys, false);
    if (mode == SolveMode::RequireAbelianNoncentral) return abelian_attempt(sys, true);

    SolveResult best;
    if (mode == SolveMode::Any) {
        SolveResult ab = abelian_attempt(sys, false);
        if (ab.found && ab.residual < cfg.tol) return ab;
    }
    Objective obj(sys);
    const size_t n = sys.pres.gens.size();
    unsigned long long h = fnv_hash(sys);
    for (int restart = 0; restart < cfg.restarts; ++restart) {
        std::mt19937_64 rng(h ^ (0x9e3779b97f4a7c15ULL * (restart + 1)));
        std::normal_distribution<double> gauss(0, 1);
        std::vector<double> th(4 * n);
        for (auto& v : th) v = gauss(rng);
        for (size_t q = 0; q < n; ++q) {
            double s = 0;
            for (int c = 0; c < 4; ++c) s += th[4 * q + c] * th[4 * q + c];
            s = std::sqrt(s);
            for (int c = 0; c < 4; ++c) th[4 * q + c] /= s;
        }
        double res = lm_minimize(obj, th, cfg.max_iterations);
        if (res < cfg.tol) {
            std::vector<Quat> gens = unpack(th);
            double score = commutator_score_of(gens);
            if (mode == SolveMode::RequireIrreducible && score <= cfg.irreducible_threshold)
                continue;
            if (!best.found || res < best.residual) {
                best.found = true;
                best.assignment = gens;
                best.residual = res;
                best.commutator_score = score;
            }
            return best;  // first hit wins; deterministic by seeding
        }
    }
    return best;
}

TraceRange sample_product_traces(const Rat& f1, const Rat& f2, int n, unsigned long long seed) {
    TraceRange out;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0, 1);
    auto random_unit = [&]() {
        Quat q{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
        return q.normalized();
    };
    Quat a0 = Quat::from_turn(f1.to_double());
    Quat b0 = Quat::from_turn(f2.to_double());
    for (int i = 0; i < n; ++i) {
        Quat p = random_unit(), q = random_unit();
        Quat A = p * a0 * p.conj();
        Quat B = q * b0 * q.conj();
        if (commutator_gap(A, B) < 1e-9) continue;
        double tr = 2 * (A * B).w;
        if (!out.any) { out.any = true; out.lo = out.hi = tr; }
        else {
            out.lo = std::min(out.lo, tr);
            out.hi = std::max(out.hi, tr);
        }
    }
    return out;
}

WitnessReport verify_witness(const Verdict& v, const OracleConfig& cfg) {
    WitnessReport rep;
    if (!v.witness) {
        rep.pass = true;
        rep.detail = "no witness to verify (vacuous)";
        return rep;
    }
    PointUV w1 = *v.witness;
    // side 2 sees the character through the inverse gluing
    long long det = v.gluing[0][0] * v.gluing[1][1] - v.gluing[0][1] * v.gluing[1][0];
    long long mi[2][2] = {{det * v.gluing[1][1], det * -v.gluing[0][1]},
                          {det * -v.gluing[1][0], det * v.gluing[0][0]}};
    PointUV w2{Turn(Rat(mi[0][0]) * w1.u.v + Rat(mi[0][1]) * w1.v.v),
               Turn(Rat(mi[1][0]) * w1.u.v + Rat(mi[1][1]) * w1.v.v)};

    RelationSystem s1{v.pres1, v.port1, w1.u, w1.v};
    RelationSystem s2{v.pres2, v.port2, w2.u, w2.v};

    auto irreducible = [&](const RelationSystem& s, double& res, double& comm) {
        SolveResult r = solve_representation(s, SolveMode::RequireIrreducible, cfg);
        res = r.residual;
        comm = r.commutator_score;
        return r.found;
    };
    auto abelian = [&](const RelationSystem& s, double& res, double& comm, bool noncentral,
                       std::vector<Quat>* out) {
        SolveResult r = solve_representation(
            s, noncentral ? SolveMode::RequireAbelianNoncentral : SolveMode::RequireAbelian, cfg);
        res = r.residual;
        comm = r.commutator_score;
        if (out) *out = r.assignment;
        return r.found;
    };

    switch (v.witness_kind) {
        case WitnessKind::HH: {
            bool ok1 = irreducible(s1, rep.residual1, rep.commutator1);
            bool ok2 = irreducible(s2, rep.residual2, rep.commutator2);
            rep.pass = ok1 && ok2;
            rep.detail = "H/H: irreducible extensions on both sides";
            return rep;
        }
        case WitnessKind::HA: {
            bool ok1 = irreducible(s1, rep.residual1, rep.commutator1);
            bool ok2 = abelian(s2, rep.residual2, rep.commutator2, false, nullptr);
            rep.pass = ok1 && ok2;
            rep.detail = "H/A: irreducible on side 1, abelian on side 2";
            return rep;
        }
        case WitnessKind::AH: {
            bool ok1 = abelian(s1, rep.residual1, rep.commutator1, false, nullptr);
            bool ok2 = irreducible(s2, rep.residual2, rep.commutator2);
            rep.pass = ok1 && ok2;
            rep.detail = "A/H: abelian on side 1, irreducible on side 2";
            return rep;
        }
        case WitnessKind::PP: {
            std::vector<Quat> g1, g2;
            bool ok1 = abelian(s1, rep.residual1, rep.commutator1, true, &g1);
            bool ok2 = abelian(s2, rep.residual2, rep.commutator2, true, &g2);
            if (!ok1 || !ok2) {
                rep.pass = false;
                rep.detail = "P/P: abelian non-central extension missing";
                return rep;
            }
            // conjugate side 1 off the diagonal; the boundary is central, so
            // the glued assignment still matches along the torus
            const double inv_sqrt2 = 0.70710678118654752440084436;
            Quat m0{0, inv_sqrt2, 0, inv_sqrt2};
            std::vector<Quat> glued;
            for (const auto& q : g1) glued.push_back(m0 * q * m0.conj());
            for (const auto& q : g2) glued.push_back(q);
            Presentation closed =
                glue_presentations(v.pres1, v.port1, v.pres2, v.port2, v.gluing);
            double s = 0;
            for (const auto& rel : closed.relators) {
                Quat q = eval_word(rel, glued);
                double d = q.dist_to_identity();
                s += d * d;
            }
            rep.glued_residual = std::sqrt(s);
            double score = commutator_score_of(glued);
            rep.pass = rep.glued_residual < cfg.tol * 100 && score > cfg.irreducible_threshold;
            rep.detail = "P/P: conjugated glued representation, commutator score " +
                         std::to_string(score);
            return rep;
        }
    }
    return rep;
}

}  // namespace su2ab
