// Copyright 2026 The icregion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "icregion/crystallize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace icregion {

namespace {

constexpr double kSimplexTol = 1e-12;
constexpr double kBoundaryTol = 1e-9;  // boundary membership, rate units

// ----- small dense linear algebra -----------------------------------------

// Solves A x = b in place (dim x dim, row-major) with partial pivoting.
// Returns false when the matrix is numerically singular.
bool solve_square(std::vector<double>& a, std::vector<double>& b, int dim) {
    for (int col = 0; col < dim; ++col) {
        int piv = col;
        double best = std::fabs(a[static_cast<std::size_t>(col) * dim + col]);
        for (int r = col + 1; r < dim; ++r) {
            const double v = std::fabs(a[static_cast<std::size_t>(r) * dim + col]);
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best < 1e-13) return false;
        if (piv != col) {
            for (int cc = 0; cc < dim; ++cc)
                std::swap(a[static_cast<std::size_t>(piv) * dim + cc],
                          a[static_cast<std::size_t>(col) * dim + cc]);
            std::swap(b[piv], b[col]);
        }
        const double inv = 1.0 / a[static_cast<std::size_t>(col) * dim + col];
        for (int r = col + 1; r < dim; ++r) {
            const double f = a[static_cast<std::size_t>(r) * dim + col] * inv;
            if (f == 0.0) continue;
            for (int cc = col; cc < dim; ++cc)
                a[static_cast<std::size_t>(r) * dim + cc] -=
                    f * a[static_cast<std::size_t>(col) * dim + cc];
            b[r] -= f * b[col];
        }
    }
    for (int r = dim - 1; r >= 0; --r) {
        double acc = b[r];
        for (int cc = r + 1; cc < dim; ++cc)
            acc -= a[static_cast<std::size_t>(r) * dim + cc] * b[cc];
        b[r] = acc / a[static_cast<std::size_t>(r) * dim + r];
    }
    return true;
}

// Least squares for M x = y (rows x cols, rows >= cols) via normal equations.
bool solve_lstsq(const std::vector<double>& m, const std::vector<double>& y, int rows, int cols,
                 std::vector<double>& x) {
    std::vector<double> ata(static_cast<std::size_t>(cols) * cols, 0.0);
    std::vector<double> aty(cols, 0.0);
    for (int r = 0; r < rows; ++r) {
        for (int i = 0; i < cols; ++i) {
            const double mi = m[static_cast<std::size_t>(r) * cols + i];
            aty[i] += mi * y[r];
            for (int j = 0; j < cols; ++j)
                ata[static_cast<std::size_t>(i) * cols + j] +=
                    mi * m[static_cast<std::size_t>(r) * cols + j];
        }
    }
    x = aty;
    return solve_square(ata, x, cols);
}

// Lexicographic combination iterator over {0..total-1}, size m.
bool next_combination(std::vector<int>& idx, int total) {
    const int m = static_cast<int>(idx.size());
    for (int i = m - 1; i >= 0; --i) {
        if (idx[i] < total - (m - i)) {
            ++idx[i];
            for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

double max_rate_scale(const std::vector<CornerPoint>& corners) {
    double s = 1.0;
    for (const auto& c : corners)
        for (double r : c.rates) s = std::max(s, r);
    return s;
}

// max_scale over an explicit corner list; used with one corner removed for
// the dominance test.
std::pair<double, ThetaVector> max_scale_over(const std::vector<CornerPoint>& corners, int n,
                                              const RatePoint& direction) {
    const int total = static_cast<int>(corners.size());
    std::vector<int> active;
    for (int i = 0; i < n; ++i)
        if (direction[i] > 0.0) active.push_back(i);
    if (active.empty()) fail(Errc::ZeroDirection, "direction must have a positive component");

    const double tol = kBoundaryTol * max_rate_scale(corners);
    double best_s = 0.0;
    std::vector<double> best_theta(total, 0.0);
    best_theta[0] = 1.0;

    auto consider = [&](const std::vector<int>& rows, const std::vector<int>& subset) {
        const int m = static_cast<int>(subset.size());
        const int dim = m + 1;  // theta_1..theta_m, s
        std::vector<double> a(static_cast<std::size_t>(dim) * dim, 0.0);
        std::vector<double> rhs(dim, 0.0);
        for (int t = 0; t < m; ++t) {
            const int coord = rows[t];
            for (int j = 0; j < m; ++j)
                a[static_cast<std::size_t>(t) * dim + j] = corners[subset[j]].rates[coord];
            a[static_cast<std::size_t>(t) * dim + m] = -direction[coord];
        }
        for (int j = 0; j < m; ++j) a[static_cast<std::size_t>(m) * dim + j] = 1.0;
        rhs[m] = 1.0;
        if (!solve_square(a, rhs, dim)) return;
        const double s = rhs[m];
        if (!std::isfinite(s) || s <= best_s) return;
        for (int j = 0; j < m; ++j)
            if (!(rhs[j] >= -1e-9)) return;
        // feasibility on every active coordinate
        for (int coord : active) {
            double acc = 0.0;
            for (int j = 0; j < m; ++j) acc += rhs[j] * corners[subset[j]].rates[coord];
            if (acc < s * direction[coord] - tol) return;
        }
        best_s = s;
        std::fill(best_theta.begin(), best_theta.end(), 0.0);
        double sum = 0.0;
        for (int j = 0; j < m; ++j) {
            const double v = std::max(rhs[j], 0.0);
            best_theta[subset[j]] = v;
            sum += v;
        }
        if (sum > 0.0)
            for (double& v : best_theta) v /= sum;
    };

    const int max_m = std::min<int>(static_cast<int>(active.size()), n);
    for (int m = 1; m <= max_m; ++m) {
        std::vector<int> rows_sel(m);
        std::iota(rows_sel.begin(), rows_sel.end(), 0);
        do {
            std::vector<int> rows(m);
            for (int t = 0; t < m; ++t) rows[t] = active[rows_sel[t]];
            std::vector<int> subset(m);
            std::iota(subset.begin(), subset.end(), 0);
            do {
                consider(rows, subset);
            } while (next_combination(subset, total));
        } while (next_combination(rows_sel, static_cast<int>(active.size())));
    }
    return {best_s, best_theta};
}

}  // namespace

std::vector<Mask> corner_masks(int n) {
    if (n < 1) fail(Errc::WrongDimension, "need n >= 1");
    if (n > 16) fail(Errc::CapExceeded, "corner enumeration capped at n = 16");
    const std::uint32_t count = (1u << n) - 1u;
    std::vector<Mask> masks(count);
    for (std::uint32_t k = 1; k <= count; ++k) {
        Mask m(n);
        for (int i = 0; i < n; ++i) m[i] = static_cast<std::uint8_t>((k >> i) & 1u);
        masks[k - 1] = std::move(m);
    }
    return masks;
}

std::string mask_string(std::uint32_t k, int n) {
    std::string s(n, '0');
    for (int i = 0; i < n; ++i)
        if ((k >> i) & 1u) s[i] = '1';
    return s;
}

std::vector<CornerPoint> corner_rates(const ChannelInstance& ch) {
    ch.validate();
    const auto masks = corner_masks(ch.n);
    std::vector<CornerPoint> corners(masks.size());
    PowerVector p(ch.n);
    for (std::size_t idx = 0; idx < masks.size(); ++idx) {
        for (int i = 0; i < ch.n; ++i) p[i] = masks[idx][i] ? ch.p_max : 0.0;
        corners[idx] = {static_cast<int>(idx + 1), masks[idx], rate_vector(ch, p)};
    }
    return corners;
}

RatePoint theta_rates(const ChannelInstance& ch, const ThetaVector& theta) {
    ch.validate();
    const std::size_t expect = (static_cast<std::size_t>(1) << ch.n) - 1;
    if (theta.size() != expect)
        fail(Errc::SimplexViolation,
             "theta must have 2^n-1 = " + std::to_string(expect) + " entries");
    double sum = 0.0;
    for (double t : theta) {
        if (!(t >= -kSimplexTol)) fail(Errc::SimplexViolation, "negative coefficient");
        sum += t;
    }
    if (std::fabs(sum - 1.0) > kSimplexTol)
        fail(Errc::SimplexViolation, "coefficients must sum to 1");
    const auto corners = corner_rates(ch);
    RatePoint r(ch.n, 0.0);
    for (std::size_t k = 0; k < corners.size(); ++k)
        for (int i = 0; i < ch.n; ++i) r[i] += theta[k] * corners[k].rates[i];
    return r;
}

std::vector<std::vector<double>> support_directions(int n, int count) {
    static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
    std::vector<std::vector<double>> dirs(count, std::vector<double>(n));
    for (int s = 0; s < count; ++s) {
        double norm2 = 0.0;
        for (int i = 0; i < n; ++i) {
            // radical-inverse of (s+1) in base primes[i]
            double f = 1.0;
            double v = 0.0;
            int idx = s + 1;
            const int base = primes[i];
            while (idx > 0) {
                f /= base;
                v += f * (idx % base);
                idx /= base;
            }
            dirs[s][i] = v;
            norm2 += v * v;
        }
        const double inv = 1.0 / std::sqrt(norm2);
        for (int i = 0; i < n; ++i) dirs[s][i] *= inv;
    }
    return dirs;
}

std::pair<double, ThetaVector> max_scale(const ChannelInstance& ch, const RatePoint& direction) {
    ch.validate();
    if (ch.n > 5) fail(Errc::CapExceeded, "exact scaling capped at n = 5");
    if (direction.size() != static_cast<std::size_t>(ch.n))
        fail(Errc::DimensionMismatch, "direction length must equal n");
    double norm = 0.0;
    for (double d : direction) {
        if (!(d >= 0.0)) fail(Errc::ZeroDirection, "direction must be nonnegative");
        norm += d;
    }
    if (norm <= 0.0) fail(Errc::ZeroDirection, "direction must be nonzero");
    return max_scale_over(corner_rates(ch), ch.n, direction);
}

ThetaVector decompose(const ChannelInstance& ch, const RatePoint& target) {
    ch.validate();
    const int n = ch.n;
    if (n > 5) fail(Errc::CapExceeded, "exact decomposition capped at n = 5");
    if (target.size() != static_cast<std::size_t>(n))
        fail(Errc::DimensionMismatch, "target length must equal n");
    for (double t : target)
        if (!std::isfinite(t) || t < 0.0) fail(Errc::OutOfDomain, "target rates must be >= 0");

    const auto corners = corner_rates(ch);
    const int total = static_cast<int>(corners.size());
    ThetaVector theta(total, 0.0);

    // Equality pass: smallest subset first, lexicographic within a size, so
    // the returned decomposition is the deterministic first feasible one.
    const int rows = n + 1;
    std::vector<double> m_mat, rhs(rows), sol;
    for (int sz = 1; sz <= n; ++sz) {
        std::vector<int> subset(sz);
        std::iota(subset.begin(), subset.end(), 0);
        do {
            m_mat.assign(static_cast<std::size_t>(rows) * sz, 0.0);
            for (int r = 0; r < n; ++r) {
                rhs[r] = target[r];
                for (int j = 0; j < sz; ++j)
                    m_mat[static_cast<std::size_t>(r) * sz + j] = corners[subset[j]].rates[r];
            }
            for (int j = 0; j < sz; ++j) m_mat[static_cast<std::size_t>(n) * sz + j] = 1.0;
            rhs[n] = 1.0;
            if (!solve_lstsq(m_mat, rhs, rows, sz, sol)) continue;
            bool ok = true;
            for (int j = 0; j < sz && ok; ++j) ok = sol[j] >= -1e-9;
            if (!ok) continue;
            double resid = 0.0;
            for (int r = 0; r < rows; ++r) {
                double acc = -rhs[r];
                for (int j = 0; j < sz; ++j)
                    acc += m_mat[static_cast<std::size_t>(r) * sz + j] * sol[j];
                resid = std::max(resid, std::fabs(acc));
            }
            if (resid > kBoundaryTol) continue;
            double sum = 0.0;
            for (int j = 0; j < sz; ++j) sum += std::max(sol[j], 0.0);
            for (int j = 0; j < sz; ++j) theta[subset[j]] = std::max(sol[j], 0.0) / sum;
            return theta;
        } while (next_combination(subset, total));
    }

    // Interior targets: scale out to the boundary; the witnessing theta
    // dominates the target componentwise.
    double norm = 0.0;
    for (double t : target) norm += t;
    if (norm <= 0.0) {
        theta[0] = 1.0;  // origin: any corner dominates
        return theta;
    }
    auto [s, witness] = max_scale_over(corners, n, target);
    if (s < 1.0 - kBoundaryTol)
        fail(Errc::OutsideHull, "no corner subset dominates the target");
    return witness;
}

std::vector<std::array<double, 2>> upper_hull_2d(std::vector<std::array<double, 2>> pts) {
    std::sort(pts.begin(), pts.end(), [](const auto& u, const auto& v) {
        if (u[0] != v[0]) return u[0] < v[0];
        return u[1] > v[1];
    });
    // one point per x: keep the topmost
    std::vector<std::array<double, 2>> uniq;
    for (const auto& p : pts)
        if (uniq.empty() || p[0] > uniq.back()[0]) uniq.push_back(p);
    double span = 1.0;
    if (!uniq.empty())
        span = std::max({1.0, std::fabs(uniq.back()[0] - uniq.front()[0]),
                         std::fabs(uniq.front()[1]), std::fabs(uniq.back()[1])});
    const double eps = 1e-12 * span * span;
    std::vector<std::array<double, 2>> chain;
    for (const auto& p : uniq) {
        while (chain.size() >= 2) {
            const auto& a = chain[chain.size() - 2];
            const auto& b = chain[chain.size() - 1];
            const double cross =
                (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]);
            // pop b unless the chain turns strictly clockwise (concave)
            if (cross >= -eps)
                chain.pop_back();
            else
                break;
        }
        chain.push_back(p);
    }
    return chain;
}

double polyline_value(const std::vector<std::array<double, 2>>& poly, double x) {
    if (poly.empty()) return 0.0;
    if (x <= poly.front()[0]) return poly.front()[1];
    if (x >= poly.back()[0]) return poly.back()[1];
    for (std::size_t i = 1; i < poly.size(); ++i) {
        if (x <= poly[i][0]) {
            const double x0 = poly[i - 1][0], y0 = poly[i - 1][1];
            const double x1 = poly[i][0], y1 = poly[i][1];
            const double t = (x1 == x0) ? 0.0 : (x - x0) / (x1 - x0);
            return y0 + t * (y1 - y0);
        }
    }
    return poly.back()[1];
}

double polyline_ray_scale(const std::vector<std::array<double, 2>>& poly, double dx, double dy) {
    if (!(dx >= 0.0) || !(dy >= 0.0) || (dx == 0.0 && dy == 0.0))
        fail(Errc::ZeroDirection, "ray direction must be nonnegative and nonzero");
    if (poly.empty()) return 0.0;
    double best = 0.0;
    // vertical closing edge from the last vertex down to the axis
    auto consider_segment = [&](double x0, double y0, double x1, double y1) {
        const double ex = x1 - x0, ey = y1 - y0;
        const double den = dx * ey - dy * ex;
        if (std::fabs(den) < 1e-300) return;
        const double t = (dy * x0 - dx * y0) / den;
        if (t < -1e-12 || t > 1.0 + 1e-12) return;
        const double px = x0 + t * ex, py = y0 + t * ey;
        const double s = (std::fabs(dx) >= std::fabs(dy)) ? px / dx : py / dy;
        if (s > best) best = s;
    };
    for (std::size_t i = 1; i < poly.size(); ++i)
        consider_segment(poly[i - 1][0], poly[i - 1][1], poly[i][0], poly[i][1]);
    consider_segment(poly.back()[0], poly.back()[1], poly.back()[0], 0.0);
    if (dy == 0.0) best = std::max(best, poly.back()[0] / dx);
    if (dx == 0.0) best = std::max(best, poly.front()[1] / dy);
    return best;
}

CrystallizedHull hull(const ChannelInstance& ch, int support_dirs, Exec exec) {
    ch.validate();
    CrystallizedHull h;
    h.n = ch.n;
    h.corners = corner_rates(ch);
    const int total = static_cast<int>(h.corners.size());

    if (ch.n == 1) {
        h.polyline = {h.corners[0].rates};
        return h;
    }

    if (ch.n == 2) {
        std::vector<std::array<double, 2>> pts;
        pts.reserve(h.corners.size());
        for (const auto& c : h.corners) pts.push_back({c.rates[0], c.rates[1]});
        auto chain = upper_hull_2d(pts);
        if (!chain.empty() && chain.back()[1] > 0.0)
            chain.push_back({chain.back()[0], 0.0});  // close onto the r1 axis
        h.polyline.reserve(chain.size());
        for (const auto& p : chain) h.polyline.push_back({p[0], p[1]});
    } else if (ch.n == 3) {
        // supporting facets among corner triples: plane with a nonnegative
        // outward normal that no corner exceeds
        const double scale = max_rate_scale(h.corners);
        std::vector<int> tri(3);
        std::iota(tri.begin(), tri.end(), 0);
        do {
            const auto& v1 = h.corners[tri[0]].rates;
            const auto& v2 = h.corners[tri[1]].rates;
            const auto& v3 = h.corners[tri[2]].rates;
            double u[3], w[3], nrm[3];
            for (int i = 0; i < 3; ++i) {
                u[i] = v2[i] - v1[i];
                w[i] = v3[i] - v1[i];
            }
            nrm[0] = u[1] * w[2] - u[2] * w[1];
            nrm[1] = u[2] * w[0] - u[0] * w[2];
            nrm[2] = u[0] * w[1] - u[1] * w[0];
            double len = std::sqrt(nrm[0] * nrm[0] + nrm[1] * nrm[1] + nrm[2] * nrm[2]);
            if (len < 1e-12 * scale * scale) continue;
            for (double& v : nrm) v /= len;
            double lo = std::min({nrm[0], nrm[1], nrm[2]});
            double hi = std::max({nrm[0], nrm[1], nrm[2]});
            if (lo < -1e-12 && hi > 1e-12) continue;  // mixed normal: not a Pareto facet
            if (hi <= 1e-12)
                for (double& v : nrm) v = -v;  // orient outward
            const double offset = nrm[0] * v1[0] + nrm[1] * v1[1] + nrm[2] * v1[2];
            bool supporting = true;
            for (const auto& c : h.corners) {
                const double d =
                    nrm[0] * c.rates[0] + nrm[1] * c.rates[1] + nrm[2] * c.rates[2];
                if (d > offset + kBoundaryTol * std::max(1.0, scale)) {
                    supporting = false;
                    break;
                }
            }
            if (supporting)
                h.facets.push_back(
                    {h.corners[tri[0]].k, h.corners[tri[1]].k, h.corners[tri[2]].k});
        } while (next_combination(tri, total));
    } else {
        // n >= 4: sampled support function over deterministic directions
        if (support_dirs < 1) fail(Errc::BadInput, "need at least one support direction");
        const auto dirs = support_directions(ch.n, support_dirs);
        h.support.resize(dirs.size());
        const auto& corners = h.corners;
        const int n = ch.n;
        auto probe = [&](std::int64_t s) {
            const auto& dir = dirs[static_cast<std::size_t>(s)];
            double best = -1.0;
            int best_k = 1;
            for (const auto& c : corners) {
                double v = 0.0;
                for (int i = 0; i < n; ++i) v += dir[i] * c.rates[i];
                if (v > best) {
                    best = v;
                    best_k = c.k;
                }
            }
            h.support[static_cast<std::size_t>(s)] = {dir, best, best_k};
        };
        const std::int64_t count = static_cast<std::int64_t>(dirs.size());
        if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
            for (std::int64_t s = 0; s < count; ++s) probe(s);
        } else {
            for (std::int64_t s = 0; s < count; ++s) probe(s);
        }
    }

    // dominated corners: exact for n <= 5 (drop the corner, ask whether the
    // rest still scales to it), support-table argmax above that
    if (ch.n <= 5) {
        std::vector<std::uint8_t> dom(total, 0);
        auto check = [&](std::int64_t idx) {
            const auto& c = h.corners[static_cast<std::size_t>(idx)];
            double norm = 0.0;
            for (double r : c.rates) norm += r;
            if (norm <= 1e-15) {
                dom[static_cast<std::size_t>(idx)] = 1;
                return;
            }
            std::vector<CornerPoint> rest;
            rest.reserve(h.corners.size() - 1);
            for (const auto& o : h.corners)
                if (o.k != c.k) rest.push_back(o);
            const auto [s, theta] = max_scale_over(rest, ch.n, c.rates);
            (void)theta;
            if (s >= 1.0 - kBoundaryTol) dom[static_cast<std::size_t>(idx)] = 1;
        };
        if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
            for (std::int64_t idx = 0; idx < total; ++idx) check(idx);
        } else {
            for (std::int64_t idx = 0; idx < total; ++idx) check(idx);
        }
        for (int idx = 0; idx < total; ++idx)
            if (dom[static_cast<std::size_t>(idx)]) h.dominated.push_back(idx + 1);
    } else {
        std::vector<std::uint8_t> used(total + 1, 0);
        for (const auto& s : h.support) used[static_cast<std::size_t>(s.theta_corner)] = 1;
        for (int k = 1; k <= total; ++k)
            if (!used[static_cast<std::size_t>(k)]) h.dominated.push_back(k);
    }
    return h;
}

}  // namespace icregion
