#include "regge/numerics.hpp"

#include <cmath>
#include <utility>
#include <vector>

#include "regge/errors.hpp"

namespace regge {

namespace {

template <std::size_t N>
double lu_det(Mat<N> m) {
    double d = 1.0;
    for (std::size_t k = 0; k < N; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < N; ++i)
            if (std::fabs(m[i][k]) > std::fabs(m[piv][k])) piv = i;
        if (m[piv][k] == 0.0) return 0.0;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            d = -d;
        }
        d *= m[k][k];
        for (std::size_t i = k + 1; i < N; ++i) {
            double f = m[i][k] / m[k][k];
            for (std::size_t j = k; j < N; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return d;
}

template <std::size_t N>
Mat<N> cofactors(const Mat<N>& m) {
    Mat<N> c{};
    Mat<N - 1> minor{};
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            std::size_t r = 0;
            for (std::size_t ii = 0; ii < N; ++ii) {
                if (ii == i) continue;
                std::size_t ccol = 0;
                for (std::size_t jj = 0; jj < N; ++jj) {
                    if (jj == j) continue;
                    minor[r][ccol++] = m[ii][jj];
                }
                ++r;
            }
            double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
            c[i][j] = sign * lu_det<N - 1>(minor);
        }
    }
    return c;
}

} // namespace

double det3(const Mat<3>& m) { return lu_det<3>(m); }
double det4(const Mat<4>& m) { return lu_det<4>(m); }
double det5(const Mat<5>& m) { return lu_det<5>(m); }

Mat<4> cofactor4(const Mat<4>& m) { return cofactors<4>(m); }
Mat<5> cofactor5(const Mat<5>& m) { return cofactors<5>(m); }

std::array<double, 4> leading_minors4(const Mat<4>& m) {
    std::array<double, 4> out{};
    out[0] = m[0][0];
    Mat<2> m2{{{m[0][0], m[0][1]}, {m[1][0], m[1][1]}}};
    out[1] = m2[0][0] * m2[1][1] - m2[0][1] * m2[1][0];
    Mat<3> m3{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m3[i][j] = m[i][j];
    out[2] = lu_det<3>(m3);
    out[3] = lu_det<4>(m);
    return out;
}

double clamp_unit(double x) { return x < -1.0 ? -1.0 : (x > 1.0 ? 1.0 : x); }

double sqrt_clamped(double x, double tol) {
    if (x < -tol) throw DomainError("negative square-root argument");
    return std::sqrt(x < 0.0 ? 0.0 : x);
}

double bisect(const std::function<double(double)>& f, double lo, double hi,
              double rtol, int max_iter) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw DomainError("bisect: no sign change on the bracket");
    for (int i = 0; i < max_iter; ++i) {
        double mid = 0.5 * (lo + hi);
        if (hi - lo <= rtol * std::max(std::fabs(lo), std::fabs(hi))) return mid;
        double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

namespace {

struct GaussLegendre15 {
    std::array<double, 15> node{};
    std::array<double, 15> weight{};

    GaussLegendre15() {
        // Newton iteration on P_15; nodes symmetric about 0.
        const int n = 15;
        for (int i = 0; i < n; ++i) {
            double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = x;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                double dx = p1 / dp;
                x -= dx;
                if (std::fabs(dx) < 1e-16) break;
            }
            node[i] = x;
            weight[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }
};

const GaussLegendre15& gl15() {
    static const GaussLegendre15 table;
    return table;
}

double gl15_panel(const std::function<double(double)>& f, double a, double b) {
    const auto& t = gl15();
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < 15; ++i) acc += t.weight[i] * f(mid + half * t.node[i]);
    return half * acc;
}

} // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double abs_tol,
                                    int max_panels) {
    QuadratureResult res;
    if (a == b) return res;

    struct Item {
        double a, b, whole, tol;
        int depth;
    };
    std::vector<Item> stack;
    stack.push_back({a, b, gl15_panel(f, a, b), abs_tol, 0});
    res.panels = 1;

    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        double mid = 0.5 * (it.a + it.b);
        double left = gl15_panel(f, it.a, mid);
        double right = gl15_panel(f, mid, it.b);
        res.panels += 2;
        double delta = left + right - it.whole;
        if (std::fabs(delta) <= it.tol || it.depth >= 60) {
            res.value += left + right;
            res.error_estimate += std::fabs(delta);
            continue;
        }
        if (res.panels > max_panels)
            throw QuadratureFailure("integrate_adaptive: panel budget exhausted");
        stack.push_back({it.a, mid, left, 0.5 * it.tol, it.depth + 1});
        stack.push_back({mid, it.b, right, 0.5 * it.tol, it.depth + 1});
    }
    return res;
}

double derivative(const std::function<double(double)>& f, double x, double h) {
    double d1 = (f(x + h) - f(x - h)) / (2.0 * h);
    double d2 = (f(x + 0.5 * h) - f(x - 0.5 * h)) / h;
    return (4.0 * d2 - d1) / 3.0;
}

} // namespace regge
