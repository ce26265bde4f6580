#include "bitflip/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace bitflip {

BiregularityInfo check_biregular_connected(const BinaryMatrix& h) {
    BiregularityInfo info;
    const std::size_t r = h.rows();
    const std::size_t n = h.cols();

    bool rows_regular = true;
    const std::size_t row0 = h.row(0).count();
    for (std::size_t j = 1; j < r; ++j)
        if (h.row(j).count() != row0) rows_regular = false;
    if (rows_regular) info.d_right = row0;

    bool cols_regular = true;
    const std::size_t col0 = h.column_weight(0);
    for (std::size_t i = 1; i < n; ++i)
        if (h.column_weight(i) != col0) cols_regular = false;
    info.biregular = rows_regular && cols_regular;

    // BFS over the bipartite graph; variable nodes 0..n-1, checks n..n+r-1.
    std::vector<bool> seen(n + r, false);
    std::queue<std::size_t> queue;
    seen[0] = true;
    queue.push(0);
    std::size_t visited = 1;
    while (!queue.empty()) {
        const std::size_t node = queue.front();
        queue.pop();
        if (node < n) {
            for (std::size_t j = 0; j < r; ++j) {
                if (h.get(j, node) && !seen[n + j]) {
                    seen[n + j] = true;
                    ++visited;
                    queue.push(n + j);
                }
            }
        } else {
            for (std::uint32_t i : h.row(node - n).indices()) {
                if (!seen[i]) {
                    seen[i] = true;
                    ++visited;
                    queue.push(i);
                }
            }
        }
    }
    info.connected = visited == n + r;
    return info;
}

std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n) {
    if (n == 0) return {};
    auto off_norm = [&]() {
        double s = 0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) s += 2 * a[p * n + q] * a[p * n + q];
        return std::sqrt(s);
    };
    double scale = 0;
    for (std::size_t i = 0; i < n * n; ++i) scale += a[i] * a[i];
    scale = std::max(1.0, std::sqrt(scale));

    const int max_sweeps = 100;
    int sweep = 0;
    while (off_norm() > 1e-10 * scale) {
        if (++sweep > max_sweeps) throw Error("jacobi_eigenvalues: no convergence");
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (apq == 0.0) continue;
                const double app = a[p * n + p];
                const double aqq = a[q * n + q];
                const double theta = (aqq - app) / (2 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1);
                const double s = t * c;
                for (std::size_t i = 0; i < n; ++i) {
                    const double aip = a[i * n + p];
                    const double aiq = a[i * n + q];
                    a[i * n + p] = c * aip - s * aiq;
                    a[i * n + q] = s * aip + c * aiq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double api = a[p * n + i];
                    const double aqi = a[q * n + i];
                    a[p * n + i] = c * api - s * aqi;
                    a[q * n + i] = s * api + c * aqi;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a[i * n + i];
    std::sort(ev.rbegin(), ev.rend());
    return ev;
}

TopEigenvalues top_two_eigenvalues(const BinaryMatrix& h, double tol) {
    const std::size_t n = h.cols();
    if (n > 512) throw Error("top_two_eigenvalues: n exceeds the dense-solver budget (512)");

    // Exact integer Gram matrix: (H^T H)_{ij} = |col_i ∩ col_j|.
    std::vector<BitVec> cols;
    cols.reserve(n);
    for (std::size_t i = 0; i < n; ++i) cols.push_back(h.column(i));
    std::vector<double> gram(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            gram[i * n + j] = gram[j * n + i] =
                static_cast<double>(BitVec::and_count(cols[i], cols[j]));

    const std::vector<double> ev = jacobi_eigenvalues(std::move(gram), n);

    TopEigenvalues out;
    out.lambda1 = ev[0];
    if (n == 1) {
        out.lambda2 = ev[0];
        out.lambda2_semantics = "with_multiplicity";
        return out;
    }

    if (check_biregular_connected(h).connected) {
        out.lambda2_semantics = "spectral_gap";
        out.lambda2 = ev[0];
        for (std::size_t i = 1; i < n; ++i) {
            if (ev[i] < out.lambda1 - tol) {
                out.lambda2 = ev[i];
                break;
            }
        }
    } else {
        out.lambda2_semantics = "with_multiplicity";
        out.lambda2 = ev[1];
    }
    return out;
}

double tanner_distance_bound(std::size_t n, std::size_t c, double lambda1, double lambda2) {
    if (!(lambda1 > lambda2))
        throw Error("tanner_distance_bound: degenerate spectrum (lambda1 <= lambda2)");
    return double(n) * (2.0 * double(c) - lambda2) / (lambda1 - lambda2);
}

double tanner_expansion_bound(std::size_t n, std::size_t c, double lambda1, double lambda2,
                              std::size_t t) {
    if (t < 1) throw Error("tanner_expansion_bound: t must be >= 1");
    const double denom = (lambda1 - lambda2) * double(t) / double(n) + lambda2;
    if (!(denom > 0)) throw Error("tanner_expansion_bound: nonpositive denominator");
    return double(c) * double(c) * double(t) / denom;
}

long long bound_ceiling(double v, double guard) {
    return static_cast<long long>(std::ceil(v - guard));
}

}  // namespace bitflip
