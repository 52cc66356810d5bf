#pragma once

#include <optional>
#include <vector>

#include "growth/zpoly.hpp"

// Real-root isolation for exact integer polynomials: sign-variation
// (Descartes) counts on dyadic intervals, then exact rational bisection to
// the requested width.  No floating point; decimal output happens only when
// a caller renders an interval.

namespace growth {

struct RootInterval {
    mpq_class lo;
    mpq_class hi;
    bool exact = false;  // lo == hi is the root itself

    mpq_class mid() const { return (lo + hi) / 2; }
    mpq_class width() const { return hi - lo; }
};

// All real roots of p, isolated and refined so that each interval width is
// below eps * max(1, |root|); ascending order.  Multiple roots are handled
// through the square-free part.  p must be nonzero.
std::vector<RootInterval> isolate_real_roots(const ZPoly& p, const mpq_class& eps);

// The largest real root only; explores the dyadic tree right-to-left so the
// rest of the root set is never isolated.  nullopt when p has no real root.
std::optional<RootInterval> max_real_root(const ZPoly& p, const mpq_class& eps);

}  // namespace growth
