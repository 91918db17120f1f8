#include "lplab/structure.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "lplab/errors.hpp"

namespace lplab {

namespace {

Point swap_xy(const Point& w) { return {w.y, w.x}; }
Rational plus(const Point& w) { return w.x + w.y; }
Rational minus(const Point& w) { return w.y - w.x; }

// Quadruple listings per rectangle, in the frame's own orientation.
constexpr std::array<const char*, 9> kCase1 = {"VHVH", "VHHH", "VHHV", "VVVH", "VVHH",
                                               "VVHV", "HVVH", "HVHH", "HVHV"};
constexpr std::array<const char*, 9> kCase2 = {"VHVH", "VHVV", "VHHV", "VVVH", "VVVV",
                                               "VVHV", "HVVH", "HVVV", "HVHV"};

// 0, 1, 2 for the closed lower band, the open middle band and the closed upper band.
int band(const Rational& t, const Rational& i1, const Rational& i2, const Rational& i3, const Rational& i4) {
    if (i1 <= t && t <= i2) return 0;
    if (i2 < t && t < i3) return 1;
    if (i3 <= t && t <= i4) return 2;
    fail(ErrorKind::ContractViolation, "point outside the frame rectangle");
}

// count >= factor * sqrt(n), compared in squares.
bool at_least_root(std::size_t count, const Rational& factor, std::size_t n) {
    Rational c(static_cast<unsigned long>(count));
    return c * c >= factor * factor * Rational(static_cast<unsigned long>(n));
}

void require_open_unit(const Rational& v, const char* name) {
    if (v <= 0 || v >= 1) fail(ErrorKind::InvalidParameter, std::string(name) + " must lie in (0, 1)");
}

}  // namespace

int Frame::rectangle_of(const Point& w0) const {
    Point w = symmetric ? swap_xy(w0) : w0;
    int row = band(minus(w), i_minus[0], i_minus[1], i_minus[2], i_minus[3]);
    int col = band(plus(w), i_plus[0], i_plus[1], i_plus[2], i_plus[3]);
    return 3 * row + col + 1;
}

std::optional<LineOrientation> Frame::forced_orientation() const {
    if (case_tag == FrameCase::Case1) return std::nullopt;
    return quadruples[4][0] == 'V' ? LineOrientation::Vertical : LineOrientation::Horizontal;
}

std::vector<Point> Frame::extreme_set() const {
    std::vector<Point> out;
    for (const auto& e : extreme)
        if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
    return out;
}

Frame extreme_frame(const PointSet& points) {
    if (points.size() < 2) fail(ErrorKind::InvalidInput, "frame needs at least two points");
    auto pick = [](const std::vector<Point>& pts, auto key, auto tie, bool want_max, bool tie_max) {
        const Point* best = &pts[0];
        for (const auto& w : pts) {
            int c = sgn(key(w) - key(*best));
            if (want_max) c = -c;
            int t = sgn(tie(w) - tie(*best));
            if (tie_max) t = -t;
            if (c < 0 || (c == 0 && t < 0)) best = &w;
        }
        return *best;
    };
    std::vector<Point> pts(points.begin(), points.end());
    Point p1 = pick(pts, plus, minus, false, false);
    Point p2 = pick(pts, plus, minus, true, true);

    Frame f;
    f.symmetric = minus(p1) < minus(p2);
    if (f.symmetric) {
        for (auto& w : pts) w = swap_xy(w);
        p1 = swap_xy(p1);
        p2 = swap_xy(p2);
    }
    Point p3 = pick(pts, minus, plus, false, false);
    Point p4 = pick(pts, minus, plus, true, true);

    f.i_plus[0] = plus(p1);
    f.i_plus[3] = plus(p2);
    f.i_minus[0] = minus(p3);
    f.i_minus[3] = minus(p4);
    f.i_minus[2] = minus(p1);
    f.i_minus[1] = minus(p2);
    f.case_tag = plus(p3) <= plus(p4) ? FrameCase::Case1 : FrameCase::Case2;
    if (f.case_tag == FrameCase::Case1) {
        f.i_plus[1] = plus(p3);
        f.i_plus[2] = plus(p4);
    } else {
        f.i_plus[1] = plus(p4);
        f.i_plus[2] = plus(p3);
    }
    const auto& table = f.case_tag == FrameCase::Case1 ? kCase1 : kCase2;
    for (int r = 0; r < 9; ++r)
        for (int j = 0; j < 4; ++j) {
            char c = table[r][j];
            if (f.symmetric) c = c == 'V' ? 'H' : 'V';
            f.quadruples[r][j] = c;
        }
    f.extreme = {p1, p2, p3, p4};
    if (f.symmetric)
        for (auto& e : f.extreme) e = swap_xy(e);
    return f;
}

std::size_t LineCover::covered() const {
    return static_cast<std::size_t>(
        std::count_if(assignment.begin(), assignment.end(), [](const auto& a) { return a.has_value(); }));
}

LineCover line_cover(const PointSet& points) {
    Frame frame = extreme_frame(points);
    std::vector<Point> centers = frame.extreme_set();
    std::set<Rational> horizontal, vertical;
    for (const auto& c : centers)
        for (const auto& q : points) {
            Rational r = std::max(abs(q.x - c.x), abs(q.y - c.y));
            if (r == 0) continue;
            horizontal.insert(c.y - r);
            horizontal.insert(c.y + r);
            vertical.insert(c.x - r);
            vertical.insert(c.x + r);
        }

    LineCover cover;
    cover.family_horizontal = horizontal.size();
    cover.family_vertical = vertical.size();
    bool r5_used = false;
    for (const auto& w : points)
        if (frame.rectangle_of(w) == 5 && std::find(centers.begin(), centers.end(), w) == centers.end())
            r5_used = true;
    auto forced = frame.forced_orientation();
    if (forced && r5_used) {
        cover.orientation = *forced;
        cover.forced = true;
    } else {
        cover.orientation =
            vertical.size() < horizontal.size() ? LineOrientation::Vertical : LineOrientation::Horizontal;
    }
    const auto& family = cover.orientation == LineOrientation::Horizontal ? horizontal : vertical;

    std::set<Rational> used;
    for (const auto& w : points) {
        const Rational& key = cover.across(w);
        bool extreme = std::find(centers.begin(), centers.end(), w) != centers.end();
        if (!family.count(key)) {
            if (!extreme)
                fail(ErrorKind::ContractViolation, "point " + to_string(w) + " is not on any square side");
            if (!used.count(key)) ++cover.singleton_lines;
        }
        used.insert(key);
    }
    cover.lines.assign(used.begin(), used.end());
    cover.members.resize(cover.lines.size());
    cover.assignment.resize(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Rational& key = cover.across(points[i]);
        std::size_t li = std::lower_bound(cover.lines.begin(), cover.lines.end(), key) - cover.lines.begin();
        cover.assignment[i] = li;
        cover.members[li].push_back(i);
    }
    for (auto& m : cover.members)
        std::sort(m.begin(), m.end(),
                  [&](std::size_t a, std::size_t b) { return cover.along(points[a]) < cover.along(points[b]); });
    cover.rich.assign(cover.lines.size(), true);
    return cover;
}

LineCover rich_lines(const LineCover& cover, const Rational& rho) {
    if (rho <= 0 || rho > 1) fail(ErrorKind::InvalidParameter, "rho must lie in (0, 1]");
    LineCover out = cover;
    const std::size_t n = cover.covered();
    bool any = false;
    for (std::size_t li = 0; li < out.lines.size(); ++li) {
        if (!out.rich[li]) continue;
        std::size_t count = 0;
        for (auto i : out.members[li]) count += out.assignment[i] == li;
        if (count > 0 && at_least_root(count, rho, n)) {
            any = true;
            continue;
        }
        out.rich[li] = false;
        for (auto i : out.members[li])
            if (out.assignment[i] == li) {
                out.assignment[i].reset();
                out.discarded.push_back(i);
            }
    }
    if (!any) fail(ErrorKind::EmptyAfterPruning, "no line holds rho * sqrt(n) points");
    return out;
}

std::vector<Rational> difference_set(const std::vector<Rational>& values) {
    std::vector<Rational> out;
    out.reserve(values.size() * values.size());
    for (const auto& a : values)
        for (const auto& b : values) out.push_back(a - b);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

EnergyReport difference_energy(const std::vector<Rational>& values) {
    if (values.empty()) fail(ErrorKind::InvalidInput, "energy of an empty set");
    EnergyReport rep;
    rep.size = values.size();
    std::unordered_map<Rational, std::uint64_t, RationalHash> r;
    for (const auto& a : values)
        for (const auto& b : values) ++r[a - b];
    for (const auto& [d, c] : r) {
        rep.r.emplace(d, c);
        rep.energy += c * c;
    }
    Integer m(static_cast<unsigned long>(values.size()));
    rep.delta = make_rational(Integer(static_cast<unsigned long>(rep.energy)), m * m * m);
    return rep;
}

Integer Gap::volume() const {
    Integer v = 1;
    for (auto s : sizes) v *= Integer(static_cast<long>(s));
    return v;
}

namespace {

// Enumerates k_1..k_{d-1} within the boxes and solves for k_d exactly.
template <class F>
bool for_each_representation(const Gap& g, const Rational& t, F&& f) {
    const std::size_t d = g.dimension();
    Rational rem = t - g.base;
    if (d == 0) return rem == 0 && f(std::vector<std::int64_t>{});
    std::vector<std::int64_t> k(d, 0);
    auto rec = [&](auto&& self, std::size_t j, const Rational& left) -> bool {
        if (j + 1 == d) {
            Rational q = left / g.generators[j];
            if (q.get_den() != 1 || q < 0 || q >= g.sizes[j]) return false;
            k[j] = q.get_num().get_si();
            return f(k);
        }
        for (std::int64_t kj = 0; kj < g.sizes[j]; ++kj) {
            Rational next = left - Rational(kj) * g.generators[j];
            k[j] = kj;
            if (self(self, j + 1, next)) return true;
        }
        return false;
    };
    return rec(rec, 0, rem);
}

Rational rational_gcd(const std::vector<Rational>& values) {
    Integer l = 1;
    for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    Integer g = 0;
    for (const auto& v : values) {
        Integer s = v.get_num() * (l / v.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_mpz_t());
    }
    return make_rational(g, l);
}

// Minimal-sum representation of rem as sum k_j g_j, 0 <= k_j < cap.
std::optional<std::vector<std::int64_t>> represent(const std::vector<Integer>& gens, const Integer& rem,
                                                   std::int64_t cap) {
    const std::size_t d = gens.size();
    std::optional<std::vector<std::int64_t>> best;
    std::int64_t best_sum = 0;
    std::vector<std::int64_t> k(d, 0);
    auto rec = [&](auto&& self, std::size_t j, const Integer& left, std::int64_t sum) -> void {
        if (best && sum >= best_sum) return;
        if (j + 1 == d) {
            if (left < 0 || !mpz_divisible_p(left.get_mpz_t(), gens[j].get_mpz_t())) return;
            Integer q = left / gens[j];
            if (q >= cap) return;
            k[j] = q.get_si();
            if (!best || sum + k[j] < best_sum) {
                best = k;
                best_sum = sum + k[j];
            }
            return;
        }
        Integer left_k = left;
        for (std::int64_t kj = 0; kj < cap && left_k >= 0; ++kj) {
            k[j] = kj;
            self(self, j + 1, left_k, sum + kj);
            left_k -= gens[j];
        }
    };
    rec(rec, 0, rem, 0);
    return best;
}

}  // namespace

bool Gap::contains(const Rational& t) const {
    return for_each_representation(*this, t, [](const auto&) { return true; });
}

std::vector<Rational> Gap::elements() const {
    std::vector<Rational> out{base};
    for (std::size_t j = 0; j < dimension(); ++j) {
        std::vector<Rational> next;
        next.reserve(out.size() * sizes[j]);
        for (const auto& e : out)
            for (std::int64_t k = 0; k < sizes[j]; ++k) next.push_back(e + Rational(k) * generators[j]);
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<Gap> gap_fit(const std::vector<Rational>& values_in, int d_max, std::int64_t size_budget) {
    if (d_max < 1 || d_max > 3) fail(ErrorKind::InvalidParameter, "d_max must be 1, 2 or 3");
    std::vector<Rational> values = values_in;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (values.empty()) fail(ErrorKind::InvalidInput, "gap_fit of an empty set");
    if (size_budget < static_cast<std::int64_t>(values.size()))
        fail(ErrorKind::InvalidParameter, "size budget below the set size");

    auto verified = [&](Gap g) -> std::optional<Gap> {
        if (g.volume() > size_budget || static_cast<int>(g.dimension()) > d_max) return std::nullopt;
        for (const auto& v : values)
            if (!g.contains(v)) fail(ErrorKind::ContractViolation, "fitted progression misses a value");
        return g;
    };

    const Rational& a = values.front();
    if (values.size() == 1) return verified(Gap{a, {}, {}});

    std::vector<Rational> diffs;
    for (const auto& v : values) diffs.push_back(v - a);
    Rational b = rational_gcd(diffs);
    Rational span = values.back() - a;
    Integer steps = Rational(span / b).get_num();
    if (steps + 1 <= size_budget) return verified(Gap{a, {b}, {steps.get_si() + 1}});

    // Scale to integers for the generator search.
    Integer l = 1;
    for (const auto& v : diffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Integer> rem;
    for (const auto& v : diffs) rem.push_back(v.get_num() * (l / v.get_den()));

    std::map<Integer, std::size_t> freq;
    for (std::size_t i = 0; i < rem.size(); ++i)
        for (std::size_t j = i + 1; j < rem.size(); ++j) ++freq[rem[j] - rem[i]];
    std::vector<std::pair<Integer, std::size_t>> ranked(freq.begin(), freq.end());
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& x, const auto& y) { return x.second > y.second; });

    for (int d = 2; d <= d_max; ++d) {
        const std::size_t k = std::min<std::size_t>(ranked.size(), d == 2 ? 12 : 8);
        std::optional<Gap> best;
        Integer best_volume;
        std::vector<std::size_t> idx(d);
        auto try_gens = [&](std::vector<Integer> gens) {
            std::sort(gens.begin(), gens.end());
            std::vector<std::int64_t> sizes(d, 1);
            for (const auto& r : rem) {
                auto rep = represent(gens, r, size_budget);
                if (!rep) return;
                for (int j = 0; j < d; ++j) sizes[j] = std::max(sizes[j], (*rep)[j] + 1);
                Integer vol = 1;
                for (auto s : sizes) vol *= Integer(static_cast<long>(s));
                if (vol > size_budget) return;
            }
            Integer vol = 1;
            for (auto s : sizes) vol *= Integer(static_cast<long>(s));
            if (best && vol >= best_volume) return;
            Gap g{a, {}, sizes};
            for (const auto& x : gens) g.generators.push_back(make_rational(x, l));
            best = g;
            best_volume = vol;
        };
        auto try_tuple = [&]() {
            std::vector<Integer> gens;
            for (auto i : idx) gens.push_back(ranked[i].first);
            try_gens(std::move(gens));
        };
        auto rec = [&](auto&& self, int j, std::size_t from) -> void {
            if (j == d) {
                try_tuple();
                return;
            }
            for (std::size_t i = from; i < k; ++i) {
                idx[j] = i;
                self(self, j + 1, i + 1);
            }
        };
        rec(rec, 0, 0);
        // The second generator of a planted box is itself an offset from the minimum.
        if (d == 2)
            for (std::size_t i = 0; i < std::min<std::size_t>(ranked.size(), 4); ++i)
                for (const auto& r : rem)
                    if (r > 0 && r != ranked[i].first) try_gens({ranked[i].first, r});
        if (best) return verified(*best);
    }
    return std::nullopt;
}

Translation best_translation(const Gap& a, const std::vector<Rational>& c) {
    if (c.empty()) fail(ErrorKind::InvalidInput, "translation target is empty");
    std::vector<Rational> elems = a.elements();
    std::unordered_set<Rational, RationalHash> cs(c.begin(), c.end());
    std::unordered_map<Rational, std::size_t, RationalHash> count;
    for (const auto& x : cs)
        for (const auto& e : elems) ++count[x - e];
    Translation best{*std::min_element(c.begin(), c.end()) - elems.front(), 0};
    for (const auto& [r, k] : count)
        if (k > best.overlap || (k == best.overlap && r < best.r)) best = {r, k};
    return best;
}

namespace {

std::vector<std::size_t> active_members(const LineCover& cover, std::size_t li) {
    std::vector<std::size_t> out;
    for (auto i : cover.members[li])
        if (cover.assignment[i] == li) out.push_back(i);
    return out;
}

std::string line_name(const LineCover& cover, std::size_t li) {
    return std::string(cover.orientation == LineOrientation::Horizontal ? "y = " : "x = ") +
           cover.lines[li].get_str();
}

}  // namespace

SavedProgressions saved_line_progressions(const LineCover& cover, const PointSet& points, const Rational& theta) {
    require_open_unit(theta, "theta");
    const std::size_t n = cover.covered();
    SavedProgressions out;
    out.per_line.resize(cover.lines.size());
    std::vector<std::vector<Rational>> saved_diffs;
    for (std::size_t li = 0; li < cover.lines.size(); ++li) {
        if (!cover.rich[li]) continue;
        std::vector<Rational> c;
        for (auto i : active_members(cover, li)) c.push_back(cover.along(points[i]));
        if (c.empty()) continue;
        std::vector<Rational> diffs = difference_set(c);

        std::optional<std::size_t> host;
        for (std::size_t j = 0; j < saved_diffs.size() && !host; ++j) {
            std::vector<Rational> extra;
            std::set_difference(diffs.begin(), diffs.end(), saved_diffs[j].begin(), saved_diffs[j].end(),
                                std::back_inserter(extra));
            Rational e(static_cast<unsigned long>(extra.size()));
            if (e * e <= theta * theta * Rational(static_cast<unsigned long>(n))) host = j;
        }
        if (host) {
            Translation t = best_translation(out.progressions[*host], c);
            out.per_line[li] = LineProgression{*host, t.r, t.overlap, false};
            continue;
        }
        auto gap = gap_fit(c, 3, kGapSizeFactor * static_cast<std::int64_t>(c.size()));
        if (!gap) fail(ErrorKind::NoCover, "no progression fits the line " + line_name(cover, li));
        out.per_line[li] = LineProgression{out.progressions.size(), Rational(0), c.size(), true};
        out.progressions.push_back(std::move(*gap));
        out.saved_lines.push_back(li);
        saved_diffs.push_back(std::move(diffs));
    }
    return out;
}

InterceptPartition intercept_partition(const PointSet& points, const LineCover& cover, const Rational& gamma,
                                       const Rational& beta, const Rational& theta) {
    require_open_unit(gamma, "gamma");
    require_open_unit(beta, "beta");
    require_open_unit(theta, "theta");
    const std::size_t n = cover.covered();
    const Rational nq(static_cast<unsigned long>(n));

    std::vector<std::size_t> lines;
    std::vector<std::vector<std::size_t>> pts;
    for (std::size_t li = 0; li < cover.lines.size(); ++li) {
        if (!cover.rich[li]) continue;
        auto m = active_members(cover, li);
        if (m.empty()) continue;
        lines.push_back(li);
        pts.push_back(std::move(m));
    }
    auto along_gap = [&](std::size_t a, std::size_t b) -> Rational { return abs(cover.along(points[a]) - cover.along(points[b])); };
    auto across_gap = [&](std::size_t a, std::size_t b) -> Rational {
        return abs(cover.across(points[a]) - cover.across(points[b]));
    };

    InterceptPartition out;
    while (!lines.empty() && at_least_root(lines.size(), theta, n)) {
        std::vector<std::pair<std::size_t, std::size_t>> flat;
        for (std::size_t k = 0; k < lines.size(); ++k)
            for (auto i : pts[k]) flat.emplace_back(i, k);

        std::vector<std::size_t> chosen;
        std::string rule;

        // A point with many pairs along the line direction.
        std::size_t best_point = 0, best_count = 0;
        for (const auto& [u, ku] : flat) {
            std::size_t c = 0;
            for (const auto& [v, kv] : flat)
                if (v != u && along_gap(u, v) >= across_gap(u, v)) ++c;
            if (c > best_count || (c == best_count && u < best_point)) {
                best_count = c;
                best_point = u;
            }
        }
        if (Rational(static_cast<unsigned long>(best_count)) >= gamma * nq) {
            std::map<Rational, std::set<std::size_t>> classes;
            for (const auto& [v, kv] : flat)
                if (v != best_point && along_gap(best_point, v) >= across_gap(best_point, v))
                    classes[cover.along(points[v])].insert(kv);
            const std::set<std::size_t>* pick = nullptr;
            for (const auto& [x, ks] : classes)
                if (!pick || ks.size() > pick->size()) pick = &ks;
            if (pick && at_least_root(pick->size(), beta, n)) {
                chosen.assign(pick->begin(), pick->end());
                rule = "popular-point";
            }
        }

        if (chosen.empty()) {
            // Lines joined by a pair across the line direction, kept when their
            // intercept difference recurs often enough.
            const std::size_t m = lines.size();
            std::vector<std::vector<bool>> connected(m, std::vector<bool>(m, false));
            for (const auto& [u, ku] : flat)
                for (const auto& [v, kv] : flat)
                    if (ku < kv && !connected[ku][kv] && across_gap(u, v) >= along_gap(u, v)) connected[ku][kv] = true;
            std::map<Rational, std::size_t> mult;
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = a + 1; b < m; ++b)
                    if (connected[a][b]) ++mult[cover.lines[lines[b]] - cover.lines[lines[a]]];
            std::vector<std::size_t> parent(m);
            std::iota(parent.begin(), parent.end(), 0);
            auto find = [&](std::size_t x) {
                while (parent[x] != x) x = parent[x] = parent[parent[x]];
                return x;
            };
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = a + 1; b < m; ++b)
                    if (connected[a][b] &&
                        at_least_root(mult[cover.lines[lines[b]] - cover.lines[lines[a]]], beta, n))
                        parent[find(b)] = find(a);
            std::map<std::size_t, std::vector<std::size_t>> comps;
            for (std::size_t a = 0; a < m; ++a) comps[find(a)].push_back(a);
            const std::vector<std::size_t>* pick = nullptr;
            for (const auto& [root, members] : comps)
                if (!pick || members.size() > pick->size()) pick = &members;
            if (!at_least_root(pick->size(), beta, n))
                fail(ErrorKind::StallDetected, "largest part has " + std::to_string(pick->size()) + " of " +
                                                   std::to_string(m) + " lines; beta = " + beta.get_str() +
                                                   ", n = " + std::to_string(n));
            chosen = *pick;
            rule = "popularity-component";
        }

        PartitionPart part;
        part.rule = rule;
        for (auto k : chosen) {
            part.intercepts.push_back(cover.lines[lines[k]]);
            part.points.insert(part.points.end(), pts[k].begin(), pts[k].end());
        }
        auto gap = gap_fit(part.intercepts, 3, kGapSizeFactor * static_cast<std::int64_t>(part.intercepts.size()));
        if (!gap) fail(ErrorKind::NoCover, "no progression fits the intercepts of a part");
        part.gap = std::move(*gap);
        out.parts.push_back(std::move(part));

        std::vector<std::size_t> keep_lines;
        std::vector<std::vector<std::size_t>> keep_pts;
        std::set<std::size_t> drop(chosen.begin(), chosen.end());
        for (std::size_t k = 0; k < lines.size(); ++k)
            if (!drop.count(k)) {
                keep_lines.push_back(lines[k]);
                keep_pts.push_back(std::move(pts[k]));
            }
        lines = std::move(keep_lines);
        pts = std::move(keep_pts);
    }
    for (std::size_t k = 0; k < lines.size(); ++k) {
        out.residual_lines.push_back(cover.lines[lines[k]]);
        out.residual_points.insert(out.residual_points.end(), pts[k].begin(), pts[k].end());
    }
    return out;
}

StructureReport corollary_pipeline(const PointSet& points, const StructureParams& params) {
    StructureReport rep;
    rep.params = params;
    rep.frame = extreme_frame(points);
    rep.cover = line_cover(points);
    rep.rich = rich_lines(rep.cover, params.rho);
    for (auto i : rep.rich.discarded) rep.ledger.push_back({i, "rich-lines"});
    rep.saved = saved_line_progressions(rep.rich, points, params.theta);

    std::vector<std::size_t> popularity(rep.saved.progressions.size(), 0);
    for (const auto& lp : rep.saved.per_line)
        if (lp) ++popularity[lp->progression];
    rep.chosen_progression =
        std::max_element(popularity.begin(), popularity.end()) - popularity.begin();

    LineCover restricted = rep.rich;
    const Gap& chosen = rep.saved.progressions.at(rep.chosen_progression);
    for (std::size_t li = 0; li < restricted.lines.size(); ++li) {
        if (!restricted.rich[li]) continue;
        const auto& lp = rep.saved.per_line[li];
        bool ours = lp && lp->progression == rep.chosen_progression;
        std::size_t kept = 0;
        for (auto i : active_members(restricted, li)) {
            if (ours && chosen.contains(restricted.along(points[i]) - lp->r)) {
                ++kept;
                continue;
            }
            restricted.assignment[i].reset();
            rep.ledger.push_back({i, ours ? "translation" : "other-progression"});
        }
        if (kept == 0) restricted.rich[li] = false;
    }

    rep.partition = intercept_partition(points, restricted, params.gamma, params.beta, params.theta);
    for (auto i : rep.partition.residual_points) rep.ledger.push_back({i, "partition-residual"});
    for (const auto& part : rep.partition.parts)
        rep.survivors.insert(rep.survivors.end(), part.points.begin(), part.points.end());
    std::sort(rep.survivors.begin(), rep.survivors.end());
    if (rep.survivors.size() + rep.ledger.size() != points.size())
        fail(ErrorKind::ContractViolation, "pipeline lost track of points");
    rep.surviving_fraction = make_rational(Integer(static_cast<unsigned long>(rep.survivors.size())),
                                           Integer(static_cast<unsigned long>(points.size())));
    return rep;
}

}  // namespace lplab
