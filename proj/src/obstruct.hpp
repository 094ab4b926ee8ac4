#pragma once

// Combinatorial lower-bound evidence: the star condition on a finite
// point set, decided subset-by-subset with an exact rational LP. When every
// d-subset T of S admits an affine functional vanishing on T, positive on
// S \ T and nonnegative on the hull generators, the ambient convex hull has
// semidefinite extension degree at least d + 1.

#include <optional>
#include <string>
#include <vector>

#include "exactpoly.hpp"

namespace socrep {

enum class Rel { Eq, Ge };

struct LinearConstraint {
    std::vector<Rational> a;
    Rel rel = Rel::Ge;
    Rational rhs;
};

// Exact simplex (phase I, Bland's rule). Returns a feasible point or nullopt;
// deterministic. Throws std::invalid_argument on mismatched dimensions.
std::optional<std::vector<Rational>> lp_feasible(const std::vector<LinearConstraint>& constraints);

struct PointSet {
    int dim = 0;
    std::vector<std::vector<Rational>> points;
    // Defaults to `points` when empty; f >= 0 is enforced on these, so the
    // verdict certifies condition (*) relative to conv(hull_generators).
    std::vector<std::vector<Rational>> hull_generators;

    const std::vector<std::vector<Rational>>& generators() const {
        return hull_generators.empty() ? points : hull_generators;
    }
    void validate() const;  // dimensions match, points pairwise distinct
};

// Affine functional w = (w_1..w_n, w_0), f(x) = <w_{1..n}, x> + w_0, with
// f = 0 on the subset, f >= 1 on the rest of S and f >= 0 on the generators.
struct StarWitness {
    std::vector<int> subset;
    std::vector<Rational> f_coeffs;  // length dim + 1, constant term last
};

struct ObstructionReport {
    bool holds = false;
    int d = 0;
    std::vector<StarWitness> witnesses;         // one per subset when holds
    std::optional<std::vector<int>> failing_subset;
};

// Decides condition (*) for all d-subsets of S, enumerated lexicographically
// by index. jobs > 1 solves subset LPs concurrently; the report is identical
// for any jobs value. Throws std::invalid_argument unless 1 <= d < |S|.
ObstructionReport condition_star(const PointSet& S, int d, int jobs = 1);

// {(t, t^2, ..., t^n) : t = 1..count}; n must be even and >= 2.
PointSet moment_curve_points(int n, int count);

// Exact re-substitution of a witness into its constraints.
bool witness_satisfies(const PointSet& S, int d, const StarWitness& w);

}  // namespace socrep
