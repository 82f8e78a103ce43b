#include <cmath>
#include <random>

#include "doctest.h"
#include "poinckit/dirichlet_form.hpp"

using namespace poinckit;

namespace {

Measure1D by_text(const char* txt, int n = 4096) { return build_measure(parse_potential(txt), n); }

}

TEST_CASE("stiffness kernel and positivity") {
    Measure1D u = by_text("uniform:r=1", 512);
    DirichletForm f = assemble_form(u);
    std::vector<double> ones(u.n, 1.0), y;
    f.apply_stiffness(ones, y);
    for (double v : y) CHECK(std::fabs(v) < 1e-12);

    Measure1D g = by_text("gaussian:sigma=1", 512);
    DirichletForm fg = assemble_form(g);
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> un(-1, 1);
    for (int rep = 0; rep < 5; ++rep) {
        std::vector<double> r(g.n);
        for (double& v : r) v = un(rng);
        CHECK(fg.energy(r) >= 0);
    }
    // identity field has unit energy: int (x')^2 dmu = 1
    std::vector<double> id = g.x;
    CHECK(fg.energy(id) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("poincare constants of the reference measures") {
    SpectralResult u = poincare_constant(assemble_form(by_text("uniform:r=0.5")));
    CHECK(u.C_P == doctest::Approx(1.0 / (M_PI * M_PI)).epsilon(1e-2));

    SpectralResult g = poincare_constant(assemble_form(by_text("gaussian:sigma=1")));
    CHECK(g.C_P == doctest::Approx(1.0).epsilon(2e-2));

    SpectralResult de = poincare_constant(assemble_form(by_text("exp_power:p=1")));
    CHECK(de.C_P == doctest::Approx(4.0).epsilon(5e-2));
}

TEST_CASE("eigen residual and orthogonality contract") {
    DirichletForm f = assemble_form(by_text("double_well:a=1,h=1"));
    SpectralResult r = poincare_constant(f);
    CHECK(r.residual <= 1e-8);
    double dot = 0;
    for (int i = 0; i < f.n(); ++i) dot += f.measure.w[i] * r.eigvec[i];
    CHECK(std::fabs(dot) < 1e-8);
}

TEST_CASE("grid refinement of C_P stays within half a percent") {
    for (const char* txt : {"gaussian:sigma=1", "exp_power:p=1.5", "uniform:r=1",
                            "double_well:a=1,h=1"}) {
        double c1 = poincare_constant(assemble_form(by_text(txt, 2048))).C_P;
        double c2 = poincare_constant(assemble_form(by_text(txt, 4096))).C_P;
        CAPTURE(txt);
        CHECK(std::fabs(c1 - c2) / c2 < 5e-3);
    }
}

TEST_CASE("restricted poincare") {
    DirichletForm u = assemble_form(by_text("uniform:r=1"));
    CHECK(restricted_poincare(u, -1, 1).C_P == doctest::Approx(4.0 / (M_PI * M_PI)).epsilon(1e-2));

    DirichletForm g = assemble_form(by_text("gaussian:sigma=1", 8192));
    // nearly flat potential on a short interval: the Lebesgue value (0.2)^2/pi^2
    CHECK(restricted_poincare(g, -0.1, 0.1).C_P ==
          doctest::Approx(0.04 / (M_PI * M_PI)).epsilon(2e-2));

    // full-domain restriction is a no-op
    SpectralResult whole = poincare_constant(g);
    SpectralResult restr = restricted_poincare(g, g.measure.lo(), g.measure.hi());
    CHECK(restr.C_P == doctest::Approx(whole.C_P).epsilon(1e-10));
}

TEST_CASE("hardy constant (dirichlet at a point)") {
    DirichletForm g = assemble_form(by_text("gaussian:sigma=1"));
    double h0 = hardy_constant(g, 0.0);
    CHECK(h0 == doctest::Approx(1.0).epsilon(2e-2)); // odd-sector gap of the OU operator
    double cp = poincare_constant(g).C_P;
    CHECK(h0 <= 8.0 * cp / 0.5 * (1 + 1e-9));

    DirichletForm u = assemble_form(by_text("uniform:r=1"));
    CHECK(hardy_constant(u, -1.0 + 1e-9) == doctest::Approx(16.0 / (M_PI * M_PI)).epsilon(2e-2));
}

TEST_CASE("dirichlet monotonicity: more pinned nodes shrink the sup") {
    DirichletForm g = assemble_form(by_text("gaussian:sigma=1", 2048));
    int n0 = g.measure.cell_index(0.0), n1 = g.measure.cell_index(1.0);
    double one_node = 1.0 / dirichlet_eigenvalue(g, {n0});
    double two_nodes = 1.0 / dirichlet_eigenvalue(g, {n0, n1});
    CHECK(two_nodes <= one_node * (1 + 1e-12));
}

TEST_CASE("muckenhoupt constants and the sandwich") {
    Measure1D de = by_text("exp_power:p=1");
    double B = muckenhoupt_constant(de);
    CHECK(B == doctest::Approx(1.0).epsilon(2e-2));
    for (const char* txt : {"gaussian:sigma=1", "uniform:r=1", "exp_power:p=1", "exp_power:p=4",
                            "double_well:a=1,h=1"}) {
        Measure1D m = by_text(txt);
        double b = muckenhoupt_constant(m);
        double cp = poincare_constant(assemble_form(m)).C_P;
        CAPTURE(txt);
        CHECK(b <= cp * (1 + 1e-2));
        CHECK(cp <= 4 * b * (1 + 1e-2));
    }
}

TEST_CASE("cheeger constants") {
    CHECK(cheeger_constant(by_text("exp_power:p=1")) == doctest::Approx(1.0).epsilon(2e-2));
    CHECK(cheeger_constant(by_text("gaussian:sigma=1")) ==
          doctest::Approx(std::sqrt(M_PI / 2)).epsilon(2e-2));
    CHECK(cheeger_constant(by_text("uniform:r=1")) == doctest::Approx(1.0).epsilon(2e-2));
    // C_P <= 4 C_C'^2 across the catalog
    for (const char* txt : {"gaussian:sigma=1", "uniform:r=1", "exp_power:p=1", "exp_power:p=1.5",
                            "double_well:a=1,h=1", "heavy_tail:alpha=3"}) {
        Measure1D m = by_text(txt);
        double cc = cheeger_constant(m);
        double cp = poincare_constant(assemble_form(m)).C_P;
        CAPTURE(txt);
        CHECK(cp <= 4 * cc * cc * (1 + 1e-2));
    }
}

TEST_CASE("semigroup variance decay") {
    Measure1D g = build_measure(parse_potential("gaussian:sigma=1"), 1024);
    DirichletForm f = assemble_form(g);
    std::vector<double> id = g.x;
    double var = 0, mean = 0;
    for (int i = 0; i < g.n; ++i) mean += g.w[i] * id[i];
    for (int i = 0; i < g.n; ++i) var += g.w[i] * (id[i] - mean) * (id[i] - mean);

    auto vs = semigroup_variance(f, id, {0.0, 1.0});
    CHECK(vs[0] == doctest::Approx(var).epsilon(1e-10));
    CHECK(vs[1] == doctest::Approx(std::exp(-2.0) * var).epsilon(2e-2));

    // spectral-decay envelope with C_S = 2 / C_P and log-convexity in t
    double cp = poincare_constant(f).C_P;
    std::mt19937 rng(5);
    std::normal_distribution<double> nd;
    std::vector<double> times;
    for (int j = 0; j < 10; ++j) times.push_back(0.05 * std::pow(1.7, j));
    for (int rep = 0; rep < 5; ++rep) {
        std::vector<double> fn(g.n);
        for (double& v : fn) v = nd(rng);
        auto dec = semigroup_variance(f, fn, times);
        double var0 = 0, mn = 0;
        for (int i = 0; i < g.n; ++i) mn += g.w[i] * fn[i];
        for (int i = 0; i < g.n; ++i) var0 += g.w[i] * (fn[i] - mn) * (fn[i] - mn);
        for (size_t j = 0; j < times.size(); ++j) {
            CHECK(dec[j] <= std::exp(-2.0 * times[j] / cp) * var0 * (1 + 1e-9));
            if (j + 1 < times.size()) CHECK(dec[j + 1] <= dec[j] * (1 + 1e-12));
        }
        for (size_t j = 0; j + 2 < times.size(); ++j) {
            // nonnegative second differences of log Var on a geometric-ish grid
            double a = std::log(dec[j]), b = std::log(dec[j + 1]), c = std::log(dec[j + 2]);
            double t0 = times[j], t1 = times[j + 1], t2 = times[j + 2];
            double slope01 = (b - a) / (t1 - t0), slope12 = (c - b) / (t2 - t1);
            CHECK(slope12 - slope01 >= -1e-9);
        }
    }
}

TEST_CASE("constrained sup reduces to C_P on the full domain") {
    Measure1D g = build_measure(parse_potential("gaussian:sigma=1"), 1024);
    DirichletForm f = assemble_form(g);
    double cp = poincare_constant(f).C_P;
    double sup = constrained_poincare_sup(f, g.lo(), g.hi());
    CHECK(sup == doctest::Approx(cp).epsilon(1e-9));
}
