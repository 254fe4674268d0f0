#include "edo/indicators.hpp"

#include "edo/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace edo {

namespace {

// Points are stored row-major in a flat buffer; all objectives minimized.
struct Front {
    std::vector<double> data;
    std::size_t m = 0;

    std::size_t size() const { return m == 0 ? 0 : data.size() / m; }
    const double* row(std::size_t i) const { return data.data() + i * m; }
};

bool weakly_dominates(const double* a, const double* b, std::size_t m) {
    for (std::size_t k = 0; k < m; ++k) {
        if (a[k] > b[k]) return false;
    }
    return true;
}

// Drops points weakly dominated by another point; of a group of duplicates one survives.
// After a lexicographic sort a point can only be dominated by an earlier one.
Front nondominated(const Front& f) {
    const std::size_t n = f.size();
    const std::size_t m = f.m;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::lexicographical_compare(f.row(a), f.row(a) + m, f.row(b), f.row(b) + m);
    });
    Front out;
    out.m = m;
    for (std::size_t i : order) {
        const double* p = f.row(i);
        bool dominated = false;
        for (std::size_t k = 0; k < out.size() && !dominated; ++k) dominated = weakly_dominates(out.row(k), p, m);
        if (!dominated) out.data.insert(out.data.end(), p, p + m);
    }
    return out;
}

double box_volume(const double* p, const double* ref, std::size_t m) {
    double v = 1.0;
    for (std::size_t k = 0; k < m; ++k) v *= ref[k] - p[k];
    return v;
}

double hv_2d(const Front& f, const double* ref) {
    const std::size_t n = f.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const double* pa = f.row(a);
        const double* pb = f.row(b);
        return pa[0] != pb[0] ? pa[0] < pb[0] : pa[1] < pb[1];
    });
    double volume = 0.0;
    double best_y = ref[1];
    for (std::size_t i = 0; i < n; ++i) {
        const double* p = f.row(order[i]);
        best_y = std::min(best_y, p[1]);
        const double next_x = i + 1 < n ? f.row(order[i + 1])[0] : ref[0];
        volume += (next_x - p[0]) * (ref[1] - best_y);
    }
    return volume;
}

// Sweep upward along the last axis while maintaining the 2D staircase of the points seen so far.
double hv_3d(const Front& f, const double* ref) {
    const std::size_t n = f.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const double* pa = f.row(a);
        const double* pb = f.row(b);
        if (pa[2] != pb[2]) return pa[2] < pb[2];
        return std::lexicographical_compare(pa, pa + 2, pb, pb + 2);
    });

    struct Step {
        double x;
        double y;
    };
    std::vector<Step> stairs; // x ascending, y descending
    double area = 0.0;
    double volume = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double* p = f.row(order[i]);
        const auto pos = std::lower_bound(stairs.begin(), stairs.end(), p[0],
                                          [](const Step& s, double x) { return s.x < x; });
        const bool covered = (pos != stairs.begin() && std::prev(pos)->y <= p[1]) ||
                             (pos != stairs.end() && pos->x == p[0] && pos->y <= p[1]);
        if (!covered) {
            auto last = pos;
            while (last != stairs.end() && last->y >= p[1]) ++last;
            const auto at = stairs.erase(pos, last);
            stairs.insert(at, Step{p[0], p[1]});
            area = 0.0;
            for (std::size_t k = 0; k < stairs.size(); ++k) {
                const double next_x = k + 1 < stairs.size() ? stairs[k + 1].x : ref[0];
                area += (next_x - stairs[k].x) * (ref[1] - stairs[k].y);
            }
        }
        const double next_z = i + 1 < n ? f.row(order[i + 1])[2] : ref[2];
        volume += area * (next_z - p[2]);
    }
    return volume;
}

double hv_rec(const Front& f, const double* ref);

// Sort descending by the last objective; each point's slab [p_last, ref_last] then contains the
// limit set of all later points with the same extent, so the last axis factors out.
double hv_slices(const Front& f, const double* ref) {
    const std::size_t n = f.size();
    const std::size_t m = f.m;
    const std::size_t last = m - 1;

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const double* pa = f.row(a);
        const double* pb = f.row(b);
        if (pa[last] != pb[last]) return pa[last] > pb[last];
        return std::lexicographical_compare(pa, pa + last, pb, pb + last);
    });

    double volume = 0.0;
    Front limit;
    limit.m = last;
    for (std::size_t i = 0; i < n; ++i) {
        const double* p = f.row(order[i]);
        const double height = ref[last] - p[last];
        if (height <= 0.0) continue;

        limit.data.clear();
        for (std::size_t j = i + 1; j < n; ++j) {
            const double* q = f.row(order[j]);
            for (std::size_t k = 0; k < last; ++k) limit.data.push_back(std::max(p[k], q[k]));
        }
        double exclusive = box_volume(p, ref, last);
        if (limit.size() > 0) exclusive -= hv_rec(nondominated(limit), ref);
        volume += height * exclusive;
    }
    return volume;
}

double hv_rec(const Front& f, const double* ref) {
    const std::size_t n = f.size();
    if (n == 0) return 0.0;
    if (n == 1) return box_volume(f.row(0), ref, f.m);
    if (f.m == 1) {
        double lo = f.row(0)[0];
        for (std::size_t i = 1; i < n; ++i) lo = std::min(lo, f.row(i)[0]);
        return ref[0] - lo;
    }
    if (f.m == 2) return hv_2d(f, ref);
    if (f.m == 3) return hv_3d(f, ref);
    return hv_slices(f, ref);
}

} // namespace

double hypervolume(std::span<const ObjectiveVector> points, const ObjectiveVector& ref,
                   Orientation orientation) {
    const std::size_t m = ref.size();
    if (m == 0) throw DomainError("hypervolume: empty reference point");
    if (points.empty()) return 0.0;

    const double sign = orientation == Orientation::Minimize ? 1.0 : -1.0;
    std::vector<double> mref(m);
    for (std::size_t k = 0; k < m; ++k) mref[k] = sign * ref[k];

    std::vector<std::vector<double>> rows;
    rows.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& p = points[i];
        if (p.size() != m) {
            throw DomainError("hypervolume: point " + std::to_string(i) + " has dimension " +
                              std::to_string(p.size()) + ", reference has " + std::to_string(m));
        }
        std::vector<double> row(m);
        for (std::size_t k = 0; k < m; ++k) {
            row[k] = sign * p[k];
            if (!(row[k] < mref[k])) {
                throw DomainError("hypervolume: point " + std::to_string(i) + " does not strictly dominate the " +
                                  "reference point in coordinate " + std::to_string(k));
            }
        }
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end());

    Front f;
    f.m = m;
    f.data.reserve(rows.size() * m);
    for (const auto& r : rows) f.data.insert(f.data.end(), r.begin(), r.end());
    return hv_rec(nondominated(f), mref.data());
}

} // namespace edo
