#include "su2ab/homology.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace su2ab {

namespace {
long long llabs2(long long x) { return x < 0 ? -x : x; }

void check_entry(long long x) {
    if (x > (1LL << 58) || x < -(1LL << 58)) throw std::overflow_error("SNF entry overflow");
}
}  // namespace

IntMat identity_mat(size_t n) {
    IntMat m(n, std::vector<long long>(n, 0));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    size_t n = a.size(), k = b.size(), p = k ? b[0].size() : 0;
    IntMat c(n, std::vector<long long>(p, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (size_t l = 0; l < p; ++l) {
                c[i][l] += a[i][j] * b[j][l];
                check_entry(c[i][l]);
            }
        }
    return c;
}

std::vector<long long> SnfResult::diag() const {
    std::vector<long long> out;
    size_t n = std::min(d.size(), d.empty() ? 0 : d[0].size());
    for (size_t i = 0; i < n; ++i) out.push_back(d[i][i]);
    return out;
}

SnfResult smith_normal_form(const IntMat& a0) {
    SnfResult r;
    r.d = a0;
    size_t m = r.d.size(), n = m ? r.d[0].size() : 0;
    r.u = identity_mat(m);
    r.v = identity_mat(n);
    if (m == 0 || n == 0) { r.rank = 0; return r; }
    IntMat& A = r.d;

    auto row_add = [&](size_t dst, size_t src, long long f) {
        for (size_t j = 0; j < n; ++j) { A[dst][j] += f * A[src][j]; check_entry(A[dst][j]); }
        for (size_t j = 0; j < m; ++j) { r.u[dst][j] += f * r.u[src][j]; check_entry(r.u[dst][j]); }
    };
    auto col_add = [&](size_t dst, size_t src, long long f) {
        for (size_t i = 0; i < m; ++i) { A[i][dst] += f * A[i][src]; check_entry(A[i][dst]); }
        for (size_t i = 0; i < n; ++i) { r.v[i][dst] += f * r.v[i][src]; check_entry(r.v[i][dst]); }
    };
    auto row_swap = [&](size_t i, size_t j) {
        std::swap(A[i], A[j]);
        std::swap(r.u[i], r.u[j]);
    };
    auto col_swap = [&](size_t i, size_t j) {
        for (size_t k = 0; k < m; ++k) std::swap(A[k][i], A[k][j]);
        for (size_t k = 0; k < n; ++k) std::swap(r.v[k][i], r.v[k][j]);
    };
    auto row_neg = [&](size_t i) {
        for (size_t j = 0; j < n; ++j) A[i][j] = -A[i][j];
        for (size_t j = 0; j < m; ++j) r.u[i][j] = -r.u[i][j];
    };

    size_t s = 0;
    while (s < m && s < n) {
        // find a nonzero pivot of minimal absolute value in A[s.., s..]
        size_t pi = s, pj = s;
        long long best = 0;
        for (size_t i = s; i < m; ++i)
            for (size_t j = s; j < n; ++j)
                if (A[i][j] != 0 && (best == 0 || llabs2(A[i][j]) < best)) {
                    best = llabs2(A[i][j]);
                    pi = i; pj = j;
                }
        if (best == 0) break;
        row_swap(s, pi);
        col_swap(s, pj);
        if (A[s][s] < 0) row_neg(s);
        bool clean = true;
        for (size_t i = s + 1; i < m; ++i)
            if (A[i][s] != 0) { row_add(i, s, -(A[i][s] / A[s][s])); clean = clean && A[i][s] == 0; }
        for (size_t j = s + 1; j < n; ++j)
            if (A[s][j] != 0) { col_add(j, s, -(A[s][j] / A[s][s])); clean = clean && A[s][j] == 0; }
        if (!clean) continue;  // remainders left; pick a smaller pivot next round
        // divisibility: fold any entry not divisible by the pivot into column s
        bool again = false;
        for (size_t i = s + 1; i < m && !again; ++i)
            for (size_t j = s + 1; j < n && !again; ++j)
                if (A[i][j] % A[s][s] != 0) {
                    row_add(s, i, 1);
                    again = true;
                }
        if (again) continue;
        ++s;
    }
    r.rank = static_cast<int>(s);
    return r;
}

Word Word::inverse() const {
    Word w;
    for (auto it = syl.rbegin(); it != syl.rend(); ++it) w.syl.push_back({it->first, -it->second});
    return w;
}

Word Word::concat(const Word& o) const {
    Word w = *this;
    w.syl.insert(w.syl.end(), o.syl.begin(), o.syl.end());
    return w;
}

Word Word::power(long long e) const {
    if (e == 0) return {};
    Word base = e > 0 ? *this : inverse();
    Word w;
    for (long long i = 0; i < llabs2(e); ++i) w = w.concat(base);
    return w;
}

std::vector<long long> Word::abelianized(size_t ngens) const {
    std::vector<long long> v(ngens, 0);
    for (const auto& [g, e] : syl) v[g] += e;
    return v;
}

IntMat Presentation::relator_matrix() const {
    IntMat m;
    for (const auto& r : relators) m.push_back(r.abelianized(gens.size()));
    return m;
}

std::vector<long long> Presentation::port_x_vec(int port) const {
    return ports[port].x.abelianized(gens.size());
}
std::vector<long long> Presentation::port_h_vec(int port) const {
    return ports[port].h.abelianized(gens.size());
}

LongitudeData longitude_of(const Presentation& piece, int port) {
    const size_t n = piece.gens.size();
    IntMat R = piece.relator_matrix();
    SnfResult snf = smith_normal_form(R.empty() ? IntMat{std::vector<long long>(n, 0)} : R);
    // class coords: w = V^T x ; free positions are columns beyond rank
    auto vt_times = [&](const std::vector<long long>& x) {
        std::vector<long long> w(n, 0);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) w[i] += snf.v[j][i] * x[j];
        return w;
    };
    std::vector<long long> wx = vt_times(piece.port_x_vec(port));
    std::vector<long long> wh = vt_times(piece.port_h_vec(port));
    auto dd = snf.diag();
    std::vector<size_t> freeIdx;
    for (size_t i = 0; i < n; ++i)
        if (i >= dd.size() || dd[i] == 0) freeIdx.push_back(i);
    if (freeIdx.size() != 1) throw std::domain_error("not a QHS complement");
    long long alpha = wx[freeIdx[0]], beta = wh[freeIdx[0]];
    if (alpha == 0 && beta == 0) throw std::domain_error("not a QHS complement");
    LongitudeData out;
    out.longitude = Slope(beta, -alpha);
    // order of the class of lambda
    std::vector<long long> wl(n, 0);
    for (size_t i = 0; i < n; ++i) wl[i] = out.longitude.a * wx[i] + out.longitude.b * wh[i];
    long long ord = 1;
    for (size_t i = 0; i < dd.size() && i < n; ++i) {
        if (dd[i] == 0) continue;
        long long di = llabs2(dd[i]);
        if (di <= 1) continue;
        long long g = std::gcd(di, llabs2(wl[i] % di));
        ord = std::lcm(ord, di / g);
    }
    out.order = ord;
    long long t = 1;
    for (size_t i = 0; i < dd.size() && i < n; ++i)
        if (dd[i] != 0) t *= llabs2(dd[i]);
    out.torsion = t;
    return out;
}

Slope map_slope_through_gluing(const Slope& lambda2, const long long m[2][2]) {
    long long det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (det != 1 && det != -1) throw std::domain_error("gluing must have det +-1");
    // (p', q') = M^{-T} (p, q), scaled by det to stay integral
    long long p = det * (m[1][1] * lambda2.a - m[1][0] * lambda2.b);
    long long q = det * (-m[0][1] * lambda2.a + m[0][0] * lambda2.b);
    return Slope(p, q);
}

long long closed_h1_order(const LongitudeData& l1, const LongitudeData& l2,
                          const long long gluing[2][2]) {
    Slope lam2 = map_slope_through_gluing(l2.longitude, gluing);
    long long delta = distance(l1.longitude, lam2);
    if (delta == 0) return -1;
    return l1.order * l2.order * l1.torsion * l2.torsion * delta;
}

namespace {

// Extension system M x = t (mod 1) with M = relators + the two port rows.
struct System {
    IntMat m;
    SnfResult snf;
    size_t n;       // generators
    size_t nrows;
};

System build_system(const Presentation& piece, int port) {
    System s;
    s.n = piece.gens.size();
    s.m = piece.relator_matrix();
    s.m.push_back(piece.port_x_vec(port));
    s.m.push_back(piece.port_h_vec(port));
    s.nrows = s.m.size();
    s.snf = smith_normal_form(s.m);
    return s;
}

bool is_central_turn(const Rat& x) {
    Rat m = x.mod1();
    return m.num == 0 || m * Rat(2) == Rat(1);
}

}  // namespace

ExtensionSolution solve_abelian_extension(const Presentation& piece, int port, const Turn& u,
                                          const Turn& v) {
    System sys = build_system(piece, port);
    const size_t n = sys.n, rows = sys.nrows;
    const auto dd = sys.snf.diag();
    const int rank = sys.snf.rank;

    // Ut where t = (0,...,0,u,v)
    std::vector<Rat> ut(rows);
    for (size_t i = 0; i < rows; ++i)
        ut[i] = Rat(sys.snf.u[i][rows - 2]) * u.v + Rat(sys.snf.u[i][rows - 1]) * v.v;

    ExtensionSolution out;
    for (size_t i = rank; i < rows; ++i)
        if (ut[i].mod1().num != 0) return out;  // unsolvable
    out.solvable = true;

    // particular solution y_i = ut_i / d_i, then x = V y
    std::vector<Rat> y(n, Rat(0));
    for (int i = 0; i < rank && i < (int)n; ++i) y[i] = ut[i] / Rat(dd[i]);
    std::vector<Rat> x0(n, Rat(0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) x0[i] = x0[i] + Rat(sys.snf.v[i][j]) * y[j];
        x0[i] = x0[i].mod1();
    }
    out.assignment = x0;

    bool x0_central = true;
    for (const auto& c : x0) x0_central = x0_central && is_central_turn(c);
    if (!x0_central) {
        out.noncentral_exists = true;
        out.noncentral_assignment = x0;
        return out;
    }

    // homogeneous generators: V e_j / d_j for torsion columns, V e_j * t for free columns
    for (size_t j = 0; j < n; ++j) {
        bool freecol = j >= dd.size() || ((int)j >= rank);
        long long dj = freecol ? 0 : dd[j];
        if (!freecol && (dj == 1 || dj == -1)) continue;
        Rat step = freecol ? Rat(1, 4) : Rat(1, llabs2(dj));
        std::vector<Rat> cand = x0;
        bool central = true;
        for (size_t i = 0; i < n; ++i) {
            cand[i] = (cand[i] + Rat(sys.snf.v[i][j]) * step).mod1();
            central = central && is_central_turn(cand[i]);
        }
        if (!central) {
            out.noncentral_exists = true;
            out.noncentral_assignment = cand;
            return out;
        }
        if (freecol) {
            // a free circle whose 1/4-multiple is central can still give a
            // noncentral value at 1/3
            std::vector<Rat> cand3 = x0;
            bool central3 = true;
            for (size_t i = 0; i < n; ++i) {
                cand3[i] = (cand3[i] + Rat(sys.snf.v[i][j]) * Rat(1, 3)).mod1();
                central3 = central3 && is_central_turn(cand3[i]);
            }
            if (!central3) {
                out.noncentral_exists = true;
                out.noncentral_assignment = cand3;
                return out;
            }
        }
    }
    return out;
}

TorusSet central_extension_set(const Presentation& piece, int port) {
    TorusSet out;
    const Rat half(1, 2);
    for (const Rat& uu : {Rat(0), half})
        for (const Rat& vv : {Rat(0), half}) {
            auto sol = solve_abelian_extension(piece, port, Turn(uu), Turn(vv));
            if (sol.solvable && sol.noncentral_exists)
                out.points.push_back({Turn(uu), Turn(vv)});
        }
    return out.normalized();
}

TorusSet abelian_set_restriction(const Presentation& piece, int port) {
    System sys = build_system(piece, port);
    const size_t rows = sys.nrows;
    const int rank = sys.snf.rank;
    // solvability conditions: for each zero row i, alpha_i u + beta_i v = 0 mod 1
    bool any = false;
    TorusSet acc;
    for (size_t i = rank; i < rows; ++i) {
        long long alpha = sys.snf.u[i][rows - 2], beta = sys.snf.u[i][rows - 1];
        if (alpha == 0 && beta == 0) continue;
        long long g = std::gcd(llabs2(alpha), llabs2(beta));
        TorusSet cond = character_lines(Slope(alpha / g, beta / g), g);
        acc = any ? intersect(acc, cond) : cond;
        any = true;
    }
    if (!any) throw std::domain_error("not a QHS complement");
    return acc;
}

TorusSet abelian_set(const Presentation& piece, int port) {
    LongitudeData l = longitude_of(piece, port);
    return character_lines(l.longitude, l.order);
}

Presentation glue_presentations(const Presentation& p1, int port1, const Presentation& p2,
                                int port2, const long long m[2][2]) {
    long long det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (det != 1 && det != -1) throw std::domain_error("gluing must have det +-1");
    Presentation out;
    out.gens = p1.gens;
    const int off = static_cast<int>(p1.gens.size());
    for (const auto& g : p2.gens) out.gens.push_back(g + "'");
    auto shift = [&](const Word& w) {
        Word r;
        for (const auto& [g, e] : w.syl) r.syl.push_back({g + off, e});
        return r;
    };
    out.relators = p1.relators;
    for (const auto& r : p2.relators) out.relators.push_back(shift(r));
    // xA = a xB + b hB ; hA = c xB + d hB
    const Word xB = shift(p2.ports[port2].x), hB = shift(p2.ports[port2].h);
    const Word& xA = p1.ports[port1].x;
    const Word& hA = p1.ports[port1].h;
    out.relators.push_back(xA.concat(xB.power(-m[0][0])).concat(hB.power(-m[0][1])));
    out.relators.push_back(hA.concat(xB.power(-m[1][0])).concat(hB.power(-m[1][1])));
    return out;
}

long long h1_order_of_closed(const Presentation& closed) {
    IntMat R = closed.relator_matrix();
    const size_t n = closed.gens.size();
    SnfResult snf = smith_normal_form(R.empty() ? IntMat{std::vector<long long>(n, 0)} : R);
    auto dd = snf.diag();
    long long order = 1;
    for (size_t i = 0; i < n; ++i) {
        long long di = i < dd.size() ? llabs2(dd[i]) : 0;
        if (di == 0) return -1;
        order *= di;
    }
    return order;
}

}  // namespace su2ab
