#include "lplab/generators.hpp"

#include <random>
#include <unordered_set>

#include "lplab/errors.hpp"

namespace lplab {

PointSet grid(int k) {
    if (k < 2) fail(ErrorKind::InvalidParameter, "grid needs k >= 2");
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(k) * k);
    for (int y = 1; y <= k; ++y)
        for (int x = 1; x <= k; ++x) pts.push_back({Rational(x), Rational(y)});
    return PointSet(std::move(pts));
}

Rational row_offset(int a, int k) {
    Integer n = Integer(k) * k;
    return make_rational(Integer(a), 100 * n * n);
}

PointSet row_construction(int k) {
    if (k < 2) fail(ErrorKind::InvalidParameter, "row construction needs k >= 2");
    Integer n = Integer(k) * k;
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(k) * k);
    for (int a = 1; a <= k; ++a) {
        Rational b = row_offset(a, k);
        for (int a2 = 1; a2 <= k; ++a2) {
            Rational x = (b + a2) / Rational(10 * n);
            pts.push_back({x, Rational(a)});
        }
    }
    return PointSet(std::move(pts));
}

PointSet random_rational(int n, std::uint64_t seed, const Box& box, int denom_bound) {
    if (n < 2) fail(ErrorKind::InvalidParameter, "random_rational needs n >= 2");
    if (denom_bound < 1) fail(ErrorKind::InvalidParameter, "denom_bound must be >= 1");
    if (box.x_min > box.x_max || box.y_min > box.y_max) fail(ErrorKind::InvalidParameter, "empty box");
    const Integer d(denom_bound);
    Integer ix0 = ceil_of(box.x_min * d), ix1 = floor_of(box.x_max * d);
    Integer iy0 = ceil_of(box.y_min * d), iy1 = floor_of(box.y_max * d);
    Integer nx = ix1 - ix0 + 1, ny = iy1 - iy0 + 1;
    if (nx <= 0 || ny <= 0 || nx * ny < n)
        fail(ErrorKind::CapacityExceeded, "box holds fewer than n representable points");
    if (!nx.fits_slong_p() || !ny.fits_slong_p() || !ix0.fits_slong_p() || !iy0.fits_slong_p())
        fail(ErrorKind::InvalidParameter, "box too large for the lattice sampler");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dx(0, nx.get_si() - 1), dy(0, ny.get_si() - 1);
    std::unordered_set<Point, PointHash> seen;
    std::vector<Point> pts;
    pts.reserve(n);
    while (static_cast<int>(pts.size()) < n) {
        Point p{make_rational(ix0 + dx(rng), d), make_rational(iy0 + dy(rng), d)};
        if (seen.insert(p).second) pts.push_back(std::move(p));
    }
    return PointSet(std::move(pts));
}

}  // namespace lplab
