#include "xyplanar/geometry.h"

#include <algorithm>
#include <cassert>

namespace xyplanar {

int orientation(const Point& a, const Point& b, const Point& c) {
    Rat cr = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return sgn(cr);
}

namespace {

bool on_segment(const Point& p, const Point& a, const Point& b) {
    if (orientation(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

}  // namespace

SegCross segment_intersection(const Point& a, const Point& b, const Point& c, const Point& d) {
    int o1 = orientation(a, b, c);
    int o2 = orientation(a, b, d);
    int o3 = orientation(c, d, a);
    int o4 = orientation(c, d, b);
    if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) return SegCross::Proper;

    if (o1 == 0 && o2 == 0) {
        // Collinear: measure the 1-D overlap.
        auto key = [&](const Point& p) { return a.x == b.x ? p.y : p.x; };
        Rat lo1 = std::min(key(a), key(b)), hi1 = std::max(key(a), key(b));
        Rat lo2 = std::min(key(c), key(d)), hi2 = std::max(key(c), key(d));
        Rat lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
        if (lo > hi) return SegCross::None;
        if (lo < hi) return SegCross::Overlap;
        return SegCross::Touch;
    }
    // Non-collinear touch: some endpoint lies on the other segment.
    int touches = 0;
    if (on_segment(c, a, b)) ++touches;
    if (on_segment(d, a, b)) ++touches;
    if (on_segment(a, c, d)) ++touches;
    if (on_segment(b, c, d)) ++touches;
    if (touches == 0) return SegCross::None;
    return SegCross::Touch;
}

Rat cheb_distance_point_segment(const Point& p, const Point& a, const Point& b) {
    // max(|dx|, |dy|) is piecewise linear along the segment; its minimum is
    // attained at an endpoint or where |dx| == |dy| flips.
    auto cheb = [&](const Point& q) -> Rat {
        Rat dx = abs(q.x - p.x), dy = abs(q.y - p.y);
        return std::max(dx, dy);
    };
    Rat best = std::min(cheb(a), cheb(b));
    // Candidate interior points: solutions of +-(x(t)-px) == +-(y(t)-py).
    Rat dx = b.x - a.x, dy = b.y - a.y;
    for (int sx = -1; sx <= 1; sx += 2)
        for (int sy = -1; sy <= 1; sy += 2) {
            // sx*(a.x + t*dx - p.x) == sy*(a.y + t*dy - p.y)
            Rat denom = sx * dx - sy * dy;
            if (denom == 0) continue;
            Rat t = (sy * (a.y - p.y) - sx * (a.x - p.x)) / denom;
            if (t <= 0 || t >= 1) continue;
            Point q{a.x + t * dx, a.y + t * dy};
            best = std::min(best, cheb(q));
        }
    return best;
}

Rat x_at_y(const Point& a, const Point& b, const Rat& y) {
    assert(a.y != b.y);
    return a.x + (b.x - a.x) * (y - a.y) / (b.y - a.y);
}

std::string rat_to_string(const Rat& r) {
    return r.get_str();
}

Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational '" + s + "'");
    r.canonicalize();
    return r;
}

Rat dyadic_round(const Rat& r, unsigned k) {
    mpz_class scaled_num = r.get_num() << k;
    mpz_class q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), scaled_num.get_mpz_t(), r.get_den().get_mpz_t());
    // round half up
    if (rem * 2 >= r.get_den()) q += 1;
    Rat out(q, mpz_class(1) << k);
    out.canonicalize();
    return out;
}

std::size_t rat_bits(const Rat& r) {
    return mpz_sizeinbase(r.get_num().get_mpz_t(), 2) +
           mpz_sizeinbase(r.get_den().get_mpz_t(), 2);
}

}  // namespace xyplanar
