#pragma once

namespace begdob {

/// Root of r(t) = 1/(2d) by bracketing bisection, without caching.
/// Throws DomainError for d < 1.
double compute_t_d(int d);

/// Cached compute_t_d; safe under concurrent first use.
double solve_t_d(int d);

/// The polygonal uniqueness curve x(d, y):
///   -((t_d + 2d)/(2d)) (y + 1)   if y >= 1
///   -(d (y + 1) + t_d)/d         if |y| < 1
///   -(t_d/(2d)) (|y| + 1)        if y <= -1
double curve_x(int d, double y);

/// Values of the two branches meeting at y = +1 (first) or y = -1 (second),
/// for continuity checks.
struct BranchPair {
    double left = 0.0;
    double right = 0.0;
};
BranchPair curve_branches_at(int d, double y_knot);

/// (x, y) in A u B u C and x < x(d, y).
bool in_dobrushin_region(int d, double x, double y);

/// The same region through r(a(d,x,y)/b(y)) < 1/(2d).
bool in_dobrushin_region_by_r(int d, double x, double y);

/// Critical coupling -(d + t_d)/d of the y = 0 slice.
double blume_capel_xc(int d);

/// Uniqueness curve evaluated at y, bundled with its root.
class UniquenessCurve {
public:
    explicit UniquenessCurve(int d);

    int dimension() const { return d_; }
    double t_d() const { return t_d_; }
    double operator()(double y) const { return curve_x(d_, y); }

private:
    int d_;
    double t_d_;
};

}  // namespace begdob
