#include "lplab/census.hpp"

#include <absl/container/flat_hash_map.h>
#include <absl/container/flat_hash_set.h>
#include <absl/numeric/int128.h>

#include <algorithm>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "lplab/errors.hpp"

namespace lplab {

namespace {

void require_pairs(const PointSet& points) {
    if (points.size() < 2) fail(ErrorKind::InvalidInput, "census needs at least two points");
}

Integer common_denominator(const PointSet& points) {
    Integer l = 1;
    for (const auto& p : points) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), p.x.get_den_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), p.y.get_den_mpz_t());
    }
    return l;
}

template <class K>
K int_pow(K base, int p) {
    K r = 1;
    for (int i = 0; i < p; ++i) r *= base;
    return r;
}

template <class K>
K int_key(std::int64_t dx, std::int64_t dy, int p) {
    std::uint64_t ax = static_cast<std::uint64_t>(dx < 0 ? -dx : dx);
    std::uint64_t ay = static_cast<std::uint64_t>(dy < 0 ? -dy : dy);
    if (p == 0) return K(std::max(ax, ay));
    return int_pow<K>(K(ax), p) + int_pow<K>(K(ay), p);
}

Integer to_integer(std::uint64_t v) {
    Integer z;
    mpz_import(z.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
    return z;
}

Integer to_integer(absl::uint128 v) {
    Integer hi = to_integer(absl::Uint128High64(v)), lo = to_integer(absl::Uint128Low64(v));
    return (hi << 64) + lo;
}

template <class K>
struct Partial {
    absl::flat_hash_map<K, std::uint64_t> hist;
};

template <class K>
DistanceCensus fast_census(const PointSet& points, PNorm metric, const Integer& scale, const CensusOptions& opt) {
    const std::size_t n = points.size();
    const int p = metric.is_infinity() ? 0 : metric.p();
    std::vector<std::int64_t> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = Integer(points[i].x.get_num() * (scale / points[i].x.get_den())).get_si();
        ys[i] = Integer(points[i].y.get_num() * (scale / points[i].y.get_den())).get_si();
    }

    int threads = std::max(1, std::min<int>(opt.threads, static_cast<int>(n)));
    std::vector<Partial<K>> parts(threads);
    std::vector<std::size_t> per(n);
    auto work = [&](int t) {
        absl::flat_hash_set<K> row;
        auto& hist = parts[t].hist;
        std::size_t skip = t == 0 ? opt.drop_pairs : 0;
        for (std::size_t u = t; u < n; u += threads) {
            row.clear();
            const std::int64_t ux = xs[u], uy = ys[u];
            for (std::size_t v = 0; v < n; ++v) {
                if (v == u) continue;
                K k = int_key<K>(xs[v] - ux, ys[v] - uy, p);
                row.insert(k);
                if (v > u) {
                    if (skip > 0) {
                        --skip;
                        continue;
                    }
                    ++hist[k];
                }
            }
            per[u] = row.size();
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    for (int t = 1; t < threads; ++t)
        for (const auto& [k, c] : parts[t].hist) parts[0].hist[k] += c;

    std::vector<std::pair<K, std::uint64_t>> sorted(parts[0].hist.begin(), parts[0].hist.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Integer denom = p == 0 ? scale : pow(scale, static_cast<unsigned>(p));

    DistanceCensus c;
    c.metric = metric;
    c.distinct_count = sorted.size();
    c.histogram.reserve(sorted.size());
    for (const auto& [k, m] : sorted) c.histogram.emplace_back(make_rational(to_integer(k), denom), m);
    for (std::size_t u = 0; u < n; ++u) {
        c.per_point.emplace_back(u, per[u]);
        c.t_max = std::max(c.t_max, per[u]);
    }
    return c;
}

}  // namespace

DistanceCensus distance_census_exact(const PointSet& points, PNorm metric) {
    require_pairs(points);
    const std::size_t n = points.size();
    std::unordered_map<Rational, std::uint64_t, RationalHash> hist;
    DistanceCensus c;
    c.metric = metric;
    for (std::size_t u = 0; u < n; ++u) {
        std::unordered_set<Rational, RationalHash> row;
        for (std::size_t v = 0; v < n; ++v) {
            if (v == u) continue;
            Rational k = lp_key_value(points[u], points[v], metric);
            if (v > u) ++hist[k];
            row.insert(std::move(k));
        }
        c.per_point.emplace_back(u, row.size());
        c.t_max = std::max(c.t_max, row.size());
    }
    c.histogram.assign(hist.begin(), hist.end());
    std::sort(c.histogram.begin(), c.histogram.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    c.distinct_count = c.histogram.size();
    return c;
}

DistanceCensus distance_census(const PointSet& points, PNorm metric, const CensusOptions& opt) {
    require_pairs(points);
    if (opt.threads < 1) fail(ErrorKind::InvalidParameter, "threads must be >= 1");
    Integer scale = common_denominator(points);
    Integer m = 0;
    for (const auto& pt : points) {
        m = std::max(m, Integer(abs(pt.x.get_num()) * (scale / pt.x.get_den())));
        m = std::max(m, Integer(abs(pt.y.get_num()) * (scale / pt.y.get_den())));
    }
    Integer span = 2 * m;
    const Integer lim62 = Integer(1) << 62;
    if (span < lim62) {
        int p = metric.is_infinity() ? 1 : metric.p();
        Integer bound = 2 * pow(span, static_cast<unsigned>(p));
        if (bound < lim62) return fast_census<std::uint64_t>(points, metric, scale, opt);
        if (bound < (Integer(1) << 126)) return fast_census<absl::uint128>(points, metric, scale, opt);
    }
    if (opt.drop_pairs > 0) {
        DistanceCensus c = distance_census_exact(points, metric);
        std::uint64_t drop = opt.drop_pairs;
        for (auto& [k, mult] : c.histogram) {
            std::uint64_t d = std::min<std::uint64_t>(drop, mult);
            mult -= d;
            drop -= d;
        }
        std::erase_if(c.histogram, [](const auto& e) { return e.second == 0; });
        c.distinct_count = c.histogram.size();
        return c;
    }
    return distance_census_exact(points, metric);
}

PairClassification classify_pairs_linf(const PointSet& points) {
    const std::size_t n = points.size();
    PairClassification c;
    c.horizontal_degree.assign(n, 0);
    c.vertical_degree.assign(n, 0);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
            Rational dx = abs(points[u].x - points[v].x), dy = abs(points[u].y - points[v].y);
            int cmp = sgn(dx - dy);
            if (cmp >= 0) {
                ++c.horizontal;
                ++c.horizontal_degree[u];
                ++c.horizontal_degree[v];
            }
            if (cmp <= 0) {
                ++c.vertical;
                ++c.vertical_degree[u];
                ++c.vertical_degree[v];
            }
            if (cmp == 0) ++c.both;
        }
    return c;
}

std::uint64_t incidences(const PointSet& points, const std::vector<ImplicitCurve>& curves) {
    std::uint64_t count = 0;
    for (const auto& curve : curves) {
        if (const auto* poly = std::get_if<Poly2>(&curve)) {
            for (const auto& w : points) count += (*poly)(w.x, w.y) == 0;
        } else if (const auto* bis = std::get_if<Bisector>(&curve)) {
            for (const auto& w : points) count += point_on_bisector(*bis, w);
        } else {
            fail(ErrorKind::Unsupported, "curve is not given by an exact polynomial: " + std::get<OpaqueCurve>(curve).description);
        }
    }
    return count;
}

}  // namespace lplab
