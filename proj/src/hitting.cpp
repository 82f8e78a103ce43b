#include "poinckit/hitting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "poinckit/errors.hpp"
#include "poinckit/tridiag.hpp"

namespace poinckit {

namespace {

constexpr double kBlowupMagnitude = 1e12;
constexpr double kShiftTarget = 1e-4;
constexpr int kMaxDoublings = 12;
constexpr long kMaxNodesPerComponent = 4'000'000;

// One side of the complement of U, parametrized by distance from the snapped
// boundary cell: node j sits at x0 + dir * j * dx.
struct Component {
    int dir = +1;
    double x0 = 0.0;
    int b_cell = 0;
    int inside = 0; // nodes 0..inside map onto measure cells
};

struct ComponentGeometry {
    const PotentialSpec* spec;
    double vref;
    double dx;
    Component comp;

    double node(int j) const { return comp.x0 + comp.dir * j * dx; }
    double rho(int j) const { return std::exp(-(spec->V(node(j)) - vref)); }
    double rho_mid(int j) const { // edge between nodes j and j+1
        return std::exp(-(spec->V(comp.x0 + comp.dir * (j + 0.5) * dx) - vref));
    }
};

struct SolveStatus {
    bool ok = true;        // linear solve succeeded, values finite
    bool negative = false;
    bool huge = false;
    bool underflow = false; // weights died before the requested length
};

// Conservative-form Dirichlet solve of theta-moment equation on one component:
// (G_j - G_{j-1})/dx = -theta rho_j W_j with G the rho-weighted differences,
// W_0 = 1, reflecting far end. Same stencil as the Dirichlet form.
SolveStatus exp_solve(const ComponentGeometry& g, double theta, int M, std::vector<double>& w) {
    SolveStatus st;
    const double inv2 = 1.0 / (g.dx * g.dx);
    std::vector<double> a(M + 1, 0.0), b(M + 1, 0.0), c(M + 1, 0.0), rhs(M + 1, 0.0);
    b[0] = 1.0;
    rhs[0] = 1.0;
    std::vector<double> rm(M);
    for (int j = 0; j < M; ++j) {
        rm[j] = g.rho_mid(j);
        if (rm[j] < 1e-290) st.underflow = true;
    }
    for (int j = 1; j < M; ++j) {
        double rj = g.rho(j);
        a[j] = rm[j - 1] * inv2;
        b[j] = theta * rj - (rm[j - 1] + rm[j]) * inv2;
        c[j] = rm[j] * inv2;
    }
    a[M] = rm[M - 1] * inv2;
    b[M] = theta * g.rho(M) - rm[M - 1] * inv2;
    if (!solve_tridiag(a, b, c, rhs)) {
        st.ok = false;
        w.assign(M + 1, std::numeric_limits<double>::quiet_NaN());
        return st;
    }
    w = std::move(rhs);
    for (double v : w) {
        if (!std::isfinite(v)) st.ok = false;
        else if (v < 0.0) st.negative = true;
        else if (v > kBlowupMagnitude) st.huge = true;
    }
    return st;
}

// Flux-form solve of L v = -q u with v(0) = 0 and reflecting far end:
// v is recovered by two positive cumulative sums, so no cancellation occurs
// even when the solution spans many orders of magnitude.
void poly_solve(const ComponentGeometry& g, int q, const std::vector<double>& u, int M,
                std::vector<double>& v) {
    v.assign(M + 1, 0.0);
    double G = 0.0; // flux on the edge just outside node j
    std::vector<double> flux(M, 0.0);
    for (int j = M; j >= 1; --j) {
        double rj = g.rho(j);
        double contrib = (rj < 1e-290 || !std::isfinite(u[j])) ? 0.0 : q * g.dx * rj * u[j];
        G += contrib;
        flux[j - 1] = G;
    }
    for (int j = 0; j < M; ++j) {
        double rm = g.rho_mid(j);
        double inc = flux[j] == 0.0 ? 0.0 : g.dx * flux[j] / rm;
        v[j + 1] = v[j] + inc;
    }
}

std::vector<Component> make_components(const Measure1D& m, int bl, int br) {
    std::vector<Component> comps;
    if (bl >= 1) comps.push_back({-1, m.x[bl], bl, bl});
    if (br <= m.n - 2) comps.push_back({+1, m.x[br], br, m.n - 1 - br});
    return comps;
}

int probe_index(double distance, double dx, int M) {
    int j = static_cast<int>(std::lround(distance / dx));
    return std::clamp(j, 1, M);
}

double probe_shift(const std::vector<double>& prev, const std::vector<double>& cur) {
    double s = 0.0;
    for (size_t i = 0; i < prev.size(); ++i) {
        double denom = std::max({std::fabs(cur[i]), std::fabs(prev[i]), 1e-300});
        s = std::max(s, std::fabs(cur[i] - prev[i]) / denom);
    }
    return s;
}

void snap_boundaries(const Measure1D& m, const Interval& U, int& bl, int& br) {
    if (!(U.lo < U.hi)) throw invalid_argument("hitting: U must be a nonempty interval");
    if (U.lo < m.lo() || U.hi > m.hi())
        throw invalid_argument("hitting: U must lie inside the measure domain");
    bl = m.cell_index(U.lo);
    br = m.cell_index(U.hi);
    if (br - bl < 1) throw invalid_argument("hitting: U spans fewer than 2 grid cells");
}

} // namespace

HittingSolution exp_moment_field(const Measure1D& m, Interval U, double theta) {
    if (!(theta > 0)) throw invalid_argument("exp_moment_field: theta must be positive");
    int bl, br;
    snap_boundaries(m, U, bl, br);

    HittingSolution sol;
    sol.U = U;
    sol.left_boundary = bl;
    sol.right_boundary = br;
    sol.theta = theta;
    sol.field.assign(m.n, 1.0);

    for (const Component& comp : make_components(m, bl, br)) {
        ComponentGeometry g{&m.spec, m.spec.V(comp.x0), m.dx, comp};
        double L0 = std::max(comp.inside * m.dx, 2 * m.dx);
        std::vector<double> w, best;
        double prev_shift = -1.0;
        bool blow = false;
        double shift = 0.0;
        std::vector<double> prev_probes;
        int k = 0;
        for (; k <= kMaxDoublings; ++k) {
            long M = std::lround(L0 * std::pow(2.0, k) / m.dx);
            if (M > kMaxNodesPerComponent) break;
            SolveStatus st = exp_solve(g, theta, static_cast<int>(M), w);
            if (!st.ok || st.negative || st.huge) {
                blow = true;
                if (best.empty()) best = w;
                break;
            }
            int j1 = probe_index(1.0, m.dx, static_cast<int>(M));
            int j2 = probe_index(2.0, m.dx, static_cast<int>(M));
            std::vector<double> probes{w[j1], w[j2]};
            best = w;
            if (!prev_probes.empty()) {
                shift = probe_shift(prev_probes, probes);
                if (shift < kShiftTarget) { prev_probes = probes; ++k; break; }
                if (prev_shift >= 0.0 && shift > prev_shift) { blow = true; break; }
                prev_shift = shift;
            }
            prev_probes = probes;
            if (st.underflow) { ++k; break; } // extending further only adds dead weight
        }
        sol.blow_up = sol.blow_up || blow;
        sol.truncation_shift = std::max(sol.truncation_shift, shift);
        sol.doublings = std::max(sol.doublings, k);
        for (int j = 0; j <= comp.inside && j < static_cast<int>(best.size()); ++j)
            sol.field[comp.b_cell + comp.dir * j] = best[j];
    }

    if (sol.blow_up) {
        sol.integral_against_mu = std::numeric_limits<double>::infinity();
    } else {
        double s = 0.0;
        for (int i = 0; i < m.n; ++i) s += m.w[i] * sol.field[i];
        sol.integral_against_mu = s;
    }
    return sol;
}

namespace {

bool exp_blows_on_domain(const Measure1D& m, int bl, int br, double theta) {
    for (const Component& comp : make_components(m, bl, br)) {
        if (comp.inside < 2) continue;
        ComponentGeometry g{&m.spec, m.spec.V(comp.x0), m.dx, comp};
        std::vector<double> w;
        SolveStatus st = exp_solve(g, theta, comp.inside, w);
        if (!st.ok || st.negative || st.huge) return true;
    }
    return false;
}

} // namespace

double critical_rate(const Measure1D& m, Interval U) {
    int bl, br;
    snap_boundaries(m, U, bl, br);
    double hi = 1.0 / 256.0;
    while (!exp_blows_on_domain(m, bl, br, hi)) {
        hi *= 2.0;
        if (hi > 1e9) return hi; // no finite rate at any sensible scale
    }
    double lo = hi / 2.0;
    if (hi <= 1.0 / 256.0) {
        lo = hi / 1024.0;
        while (lo > 1e-12 && exp_blows_on_domain(m, bl, br, lo)) lo /= 2.0;
    }
    while (hi / lo > 1.005) {
        double mid = std::sqrt(lo * hi);
        (exp_blows_on_domain(m, bl, br, mid) ? hi : lo) = mid;
    }
    double star = std::sqrt(lo * hi);
    for (int i = 0; i < 30 && exp_blows_on_domain(m, bl, br, star * 0.99); ++i) star *= 0.995;
    for (int i = 0; i < 30 && !exp_blows_on_domain(m, bl, br, star * 1.01); ++i) star *= 1.005;
    return star;
}

std::vector<HittingSolution> poly_moment_fields(const Measure1D& m, Interval U, int q_max) {
    if (q_max < 1) throw invalid_argument("poly_moment_fields: q_max must be >= 1");
    int bl, br;
    snap_boundaries(m, U, bl, br);

    std::vector<HittingSolution> out(q_max + 1);
    for (int q = 0; q <= q_max; ++q) {
        out[q].U = U;
        out[q].left_boundary = bl;
        out[q].right_boundary = br;
        out[q].q = q;
        out[q].field.assign(m.n, q == 0 ? 1.0 : 0.0);
        out[q].blow_up = false;
    }
    out[0].integral_against_mu = 1.0;

    std::vector<Component> comps = make_components(m, bl, br);
    // per (component, q) probe history
    std::vector<std::vector<double>> prev_shift(comps.size(), std::vector<double>(q_max + 1, -1.0));
    std::vector<std::vector<int>> stalls(comps.size(), std::vector<int>(q_max + 1, 0));
    std::vector<std::vector<std::vector<double>>> prev_probes(
        comps.size(), std::vector<std::vector<double>>(q_max + 1));
    std::vector<char> converged(q_max + 1, 0), blown(q_max + 1, 0);
    std::vector<double> shift_of(q_max + 1, 0.0);
    converged[0] = 1;

    int doublings_used = 0;
    for (int k = 0; k <= kMaxDoublings; ++k) {
        bool active = false;
        for (int q = 1; q <= q_max; ++q)
            if (!converged[q] && !blown[q]) active = true;
        if (!active && k > 0) break;
        doublings_used = k;

        std::vector<char> conv_here(q_max + 1, 1);
        for (size_t ci = 0; ci < comps.size(); ++ci) {
            const Component& comp = comps[ci];
            ComponentGeometry g{&m.spec, m.spec.V(comp.x0), m.dx, comp};
            double L0 = std::max(comp.inside * m.dx, 2 * m.dx);
            long Ml = std::lround(L0 * std::pow(2.0, k) / m.dx);
            if (Ml > kMaxNodesPerComponent) { conv_here.assign(q_max + 1, 0); break; }
            int M = static_cast<int>(Ml);
            int j1 = probe_index(1.0, m.dx, M), j2 = probe_index(2.0, m.dx, M);

            std::vector<double> u(M + 1, 1.0), v;
            for (int q = 1; q <= q_max; ++q) {
                poly_solve(g, q, u, M, v);
                std::vector<double> probes{v[j1], v[j2]};
                if (!prev_probes[ci][q].empty()) {
                    double s = probe_shift(prev_probes[ci][q], probes);
                    shift_of[q] = std::max(shift_of[q], s);
                    if (s >= kShiftTarget) {
                        conv_here[q] = 0;
                        if (prev_shift[ci][q] >= 0 && s > 0.75 * prev_shift[ci][q] && s > 1e-2)
                            stalls[ci][q]++;
                        else
                            stalls[ci][q] = 0;
                        if (stalls[ci][q] >= 2) blown[q] = 1;
                    }
                    prev_shift[ci][q] = s;
                } else {
                    conv_here[q] = 0;
                }
                prev_probes[ci][q] = probes;
                double probe_mag = std::max(v[j1], v[j2]);
                if (probe_mag > kBlowupMagnitude) blown[q] = 1;
                // keep the freshest values on the measure grid
                for (int j = 0; j <= comp.inside && j <= M; ++j)
                    out[q].field[comp.b_cell + comp.dir * j] = v[j];
                u = v;
            }
        }
        for (int q = 1; q <= q_max; ++q) {
            if (conv_here[q] && !blown[q]) converged[q] = 1;
            if (blown[q]) // higher moments built on a blown one are blown too
                for (int p = q + 1; p <= q_max; ++p) blown[p] = 1;
        }
    }

    for (int q = 1; q <= q_max; ++q) {
        out[q].blow_up = blown[q] || !converged[q];
        out[q].truncation_shift = shift_of[q];
        out[q].doublings = doublings_used;
        if (out[q].blow_up) {
            out[q].integral_against_mu = std::numeric_limits<double>::infinity();
        } else {
            double s = 0.0;
            for (int i = 0; i < m.n; ++i) s += m.w[i] * out[q].field[i];
            out[q].integral_against_mu = s;
        }
    }
    return out;
}

double apply_generator(const Measure1D& m, const std::vector<double>& field, int i) {
    if (i <= 0 || i >= m.n - 1) throw invalid_argument("apply_generator: interior cells only");
    double rm_l = std::exp(-(m.spec.V(0.5 * (m.x[i - 1] + m.x[i])) - m.v_min));
    double rm_r = std::exp(-(m.spec.V(0.5 * (m.x[i] + m.x[i + 1])) - m.v_min));
    double ri = std::exp(-m.vtilde[i]);
    double inv2 = 1.0 / (m.dx * m.dx);
    return (rm_r * (field[i + 1] - field[i]) - rm_l * (field[i] - field[i - 1])) * inv2 / ri;
}

namespace {

// Verifies L W <= -lambda W at interior grid cells outside [bl, br].
void require_lyapunov(const DirichletForm& form, const HittingSolution& W, double lambda) {
    const auto& m = form.measure;
    const double tol = 1e-6;
    for (int i = 1; i < m.n - 1; ++i) {
        if (i >= W.left_boundary && i <= W.right_boundary) continue;
        double lw = apply_generator(m, W.field, i);
        double slack = tol * (std::fabs(lw) + lambda * std::fabs(W.field[i]) + 1e-30);
        if (lw + lambda * W.field[i] > slack)
            throw invalid_argument("not a lambda-Lyapunov function");
    }
}

} // namespace

double lyapunov_poincare_bound(const DirichletForm& form, const HittingSolution& W,
                               double lambda, double r) {
    if (!(lambda > 0) || !(r > 0))
        throw invalid_argument("lyapunov_poincare_bound: lambda and r must be positive");
    require_lyapunov(form, W, lambda);
    const auto& m = form.measure;
    double chi_grad_sq = 2.25 / (r * r); // cubic smoothstep: sup |chi'| = 3/(2r)
    double ur_lo = std::max(m.x[W.left_boundary] - r, m.lo());
    double ur_hi = std::min(m.x[W.right_boundary] + r, m.hi());
    double cp_ur = restricted_poincare(form, ur_lo, ur_hi).C_P;
    return 4.0 / lambda + (4.0 * chi_grad_sq / lambda + 2.0) * cp_ur;
}

namespace {

// C^2 quintic blend through (0,1,sl,ql) .. (1,1,sr,qr) on [xl, xr].
struct QuinticExtension {
    double xl, xr, sl, sr, ql, qr;
    double value(double x) const {
        double L = xr - xl, t = (x - xl) / L;
        double t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t;
        // quintic Hermite basis, values both 1
        double h_v = 1.0;
        double h_sl = L * (t - 6 * t3 + 8 * t4 - 3 * t5);
        double h_sr = L * (-4 * t3 + 7 * t4 - 3 * t5);
        double h_ql = L * L * 0.5 * (t2 - 3 * t3 + 3 * t4 - t5);
        double h_qr = L * L * 0.5 * (t3 - 2 * t4 + t5);
        return h_v + sl * h_sl + sr * h_sr + ql * h_ql + qr * h_qr;
    }
};

} // namespace

double bbcg_bound(const DirichletForm& form, const HittingSolution& W, double lambda) {
    require_lyapunov(form, W, lambda);
    const auto& m = form.measure;
    int bl = W.left_boundary, br = W.right_boundary;
    if (bl < 1 || br > m.n - 2) throw invalid_argument("bbcg_bound: U touches the domain boundary");

    double sl = (W.field[bl] - W.field[bl - 1]) / m.dx; // <= 0 for moment fields
    double sr = (W.field[br + 1] - W.field[br]) / m.dx; // >= 0
    double ql = m.spec.Vp(m.x[bl]) * sl - W.theta * W.field[bl];
    double qr = m.spec.Vp(m.x[br]) * sr - W.theta * W.field[br];
    QuinticExtension ext{m.x[bl], m.x[br], sl, sr, ql, qr};

    std::vector<double> full = W.field;
    for (int i = bl + 1; i < br; ++i) full[i] = ext.value(m.x[i]);
    double b = 0.0;
    double wmin = 1e300;
    for (int i = bl; i <= br; ++i) wmin = std::min(wmin, full[i]);
    if (!(wmin > 0)) throw computation_error("bbcg_bound: extension lost positivity");
    for (int i = std::max(bl, 1); i <= std::min(br, m.n - 2); ++i) {
        double lw = apply_generator(m, full, i);
        b = std::max(b, (lw + lambda * full[i]) / full[i]);
    }
    b = std::max(b, 0.0);
    double cp_u = restricted_poincare(form, m.x[bl], m.x[br]).C_P;
    return (1.0 / lambda) * (1.0 + b * cp_u);
}

std::optional<double> stokes_bound(const DirichletForm& form, const HittingSolution& W,
                                   double lambda) {
    require_lyapunov(form, W, lambda);
    const auto& m = form.measure;
    int bl = W.left_boundary, br = W.right_boundary;
    if (bl < 1 || br > m.n - 2) throw invalid_argument("stokes_bound: U touches the domain boundary");
    double sl = (W.field[bl] - W.field[bl - 1]) / m.dx;
    double sr = (W.field[br + 1] - W.field[br]) / m.dx;
    // W must fall toward U from outside on both sides
    if (sl > 1e-12 || sr < -1e-12) return std::nullopt;
    double cp_u = restricted_poincare(form, m.x[bl], m.x[br]).C_P;
    return 1.0 / lambda + cp_u;
}

LocalMeanBound local_mean_poincare_bound(const Measure1D& m, double a, double r, double C_P) {
    if (a - 2 * r < m.lo() || a + 2 * r > m.hi())
        throw invalid_argument("local_mean_poincare_bound: B(a,2r) exceeds the domain");
    const double kappa = 4.0 / (M_PI * M_PI);
    LocalMeanBound out;
    double vlo = 1e300, vhi = -1e300;
    for (int i = 0; i < m.n; ++i) {
        if (m.x[i] < a - 2 * r || m.x[i] > a + 2 * r) continue;
        vlo = std::min(vlo, m.vtilde[i]);
        vhi = std::max(vhi, m.vtilde[i]);
    }
    out.oscillation = vhi - vlo;
    out.ball_mass = cdf(m, a + r) - cdf(m, a - r);
    double eo = std::exp(out.oscillation);
    out.formula = (32.0 * C_P / out.ball_mass) * (1.0 + 2.0 * kappa * eo) + 2.0 * kappa * r * r * eo;

    const Measure1D* use = &m;
    Measure1D coarse;
    if (m.n > 2049) {
        coarse = build_measure(m.spec, 1024);
        use = &coarse;
    }
    DirichletForm form = assemble_form(*use);
    out.checker = constrained_poincare_sup(form, a - 2 * r, a + 2 * r);
    return out;
}

namespace {

UltraTail ultra_tail(const PotentialSpec& spec, double a, int dir) {
    UltraTail t;
    const double h = 1e-3;
    double x0 = a;
    double X = std::max(1.0, std::fabs(a)); // first horizon: a +/- X, then doubling
    double phi = 0.0;
    double S = 0.0;
    double x = x0;
    double prevS = -1.0, prev_growth = -1.0;
    long total_steps = 0;
    for (int k = 0; k <= 18; ++k) {
        double target = x0 + dir * X;
        while ((dir > 0 ? x < target : x > target)) {
            double xn = x + dir * h;
            double vp = dir * spec.Vp(xn); // drift in distance coordinates
            phi = (phi + h) / (1.0 + h * vp);
            if (phi < 0) phi = 0; // inward drift stronger than the step allows
            S += h * phi;
            x = xn;
            if (++total_steps > 40'000'000) break;
        }
        t.doublings = k;
        t.value = S;
        if (prevS > 0) {
            double change = std::fabs(S - prevS) / std::max(S, 1e-300);
            t.growth = S / prevS;
            if (change < 1e-6) { t.convergent = true; return t; }
            if (t.growth >= 1.001 && prev_growth >= 1.001) { t.convergent = false; return t; }
            prev_growth = t.growth;
        }
        prevS = S;
        X *= 2.0;
        if (total_steps > 40'000'000) break;
    }
    t.convergent = t.growth < 1.001;
    return t;
}

} // namespace

UltraResult ultracontractive_test(const Measure1D& m, double a) {
    if (a <= m.lo() || a >= m.hi())
        throw invalid_argument("ultracontractive_test: a must be inside the domain");
    UltraResult r;
    r.right = ultra_tail(m.spec, a, +1);
    r.left = ultra_tail(m.spec, 2 * m.a_min - a, -1);
    r.convergent = r.right.convergent && r.left.convergent;
    return r;
}

WeakPoincareBeta weak_poincare_beta(const Measure1D& m, Interval U, int q, double s) {
    if (q < 1) throw invalid_argument("weak_poincare_beta: q must be >= 1");
    if (!(s > 0 && s < 1)) throw invalid_argument("weak_poincare_beta: s must be in (0,1)");
    std::vector<HittingSolution> v = poly_moment_fields(m, U, q);
    if (v[q].blow_up || (q >= 1 && v[q - 1].blow_up))
        throw computation_error("insufficient moments for order " + std::to_string(q));

    std::vector<std::pair<double, double>> ratio(m.n);
    for (int i = 0; i < m.n; ++i) {
        double num = v[q - 1].field[i], den = v[q].field[i];
        ratio[i] = {den == 0.0 ? 1.0 : num / den, m.w[i]};
    }
    std::sort(ratio.begin(), ratio.end());
    double acc = 0.0, u_s = ratio.back().first;
    for (const auto& [val, wt] : ratio) {
        acc += wt;
        if (acc > s) { u_s = val; break; }
    }

    DirichletForm form = assemble_form(m);
    double u1_lo = std::max(m.x[v[q].left_boundary] - 1.0, m.lo());
    double u1_hi = std::min(m.x[v[q].right_boundary] + 1.0, m.hi());
    double u2_lo = std::max(u1_lo - 1.0, m.lo());
    double u2_hi = std::min(u1_hi + 1.0, m.hi());
    double cp_u2 = restricted_poincare(form, u2_lo, u2_hi).C_P;
    double chi_grad_sq = 2.25; // r = 1 band
    WeakPoincareBeta out;
    out.constant = 4.0 / q + (4.0 * chi_grad_sq / q + 2.0) * cp_u2;
    out.threshold = u_s;
    out.beta_s = out.constant / u_s;
    return out;
}

double drift_curvature_bound(const Measure1D& m) {
    double best = -1e300;
    for (int i = 0; i < m.n; ++i) {
        double vp = m.spec.Vp(m.x[i]);
        best = std::max(best, m.spec.Vpp(m.x[i]) - 0.5 * vp * vp);
    }
    return best;
}

double theta_guaranteed(double C_P, double mu_U) {
    if (mu_U <= 0.5) return mu_U / (8.0 * C_P * (1.0 - mu_U));
    return mu_U * mu_U / (2.0 * C_P);
}

double exp_moment_upper(const Measure1D& m, double x, double theta, double C_P, double mu_U) {
    double theta_U = theta_guaranteed(C_P, mu_U);
    if (theta >= theta_U) throw invalid_argument("exp_moment_upper: rate above guaranteed threshold");
    double cm = drift_curvature_bound(m);
    double s0 = std::exp(2.0 * cm) / (2.0 * M_PI);
    double v_norm = (m.spec.V(x) - m.v_min) + std::log(m.z_tilde);
    return std::exp(theta * s0) * (1.0 + std::exp(0.5 * v_norm) * theta / (theta_U - theta));
}

} // namespace poinckit
