#include "obstruct.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace socrep {

namespace {

// Dense phase-I simplex over Q. Free variables are encoded as u_j - u_0 with
// a shared nonnegative shift u_0; every row gets an artificial variable and
// the artificial sum is minimized. Bland's rule throughout, so the run is
// finite and deterministic.
class Simplex {
public:
    explicit Simplex(const std::vector<LinearConstraint>& cons, size_t n_free) : n_free_(n_free) {
        const size_t m = cons.size();
        size_t n_surplus = 0;
        for (const auto& c : cons)
            if (c.rel == Rel::Ge) ++n_surplus;
        n_cols_ = n_free + 1 + n_surplus + m;
        art_begin_ = n_free + 1 + n_surplus;

        rows_.assign(m, std::vector<Rational>(n_cols_ + 1, Rational(0)));
        size_t surplus_at = n_free + 1;
        for (size_t i = 0; i < m; ++i) {
            auto& row = rows_[i];
            Rational shift(0);
            for (size_t j = 0; j < n_free; ++j) {
                row[j] = cons[i].a[j];
                shift += cons[i].a[j];
            }
            row[n_free] = Rational(-shift);
            if (cons[i].rel == Rel::Ge) row[surplus_at++] = Rational(-1);
            row[n_cols_] = cons[i].rhs;
            if (row[n_cols_] < 0)
                for (auto& x : row) x = Rational(-x);
            row[art_begin_ + i] = Rational(1);
        }
        basis_.resize(m);
        for (size_t i = 0; i < m; ++i) basis_[i] = art_begin_ + i;

        // Phase-I objective: reduced costs of minimizing the artificial sum,
        // with the artificial basis priced out.
        obj_.assign(n_cols_ + 1, Rational(0));
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j <= n_cols_; ++j) obj_[j] -= rows_[i][j];
        for (size_t i = 0; i < m; ++i) obj_[art_begin_ + i] = Rational(0);
    }

    std::optional<std::vector<Rational>> solve() {
        while (true) {
            size_t enter = n_cols_;
            for (size_t j = 0; j < n_cols_; ++j) {
                if (obj_[j] < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == n_cols_) break;
            size_t leave = rows_.size();
            Rational best;
            for (size_t i = 0; i < rows_.size(); ++i) {
                if (rows_[i][enter] <= 0) continue;
                const Rational ratio(rows_[i][n_cols_] / rows_[i][enter]);
                if (leave == rows_.size() || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == rows_.size()) return std::nullopt;  // unbounded phase I: cannot happen
            pivot(leave, enter);
        }
        if (obj_[n_cols_] != 0) return std::nullopt;  // infeasible (artificials stuck positive)

        std::vector<Rational> u(n_free_ + 1, Rational(0));
        for (size_t i = 0; i < rows_.size(); ++i)
            if (basis_[i] <= n_free_) u[basis_[i]] = rows_[i][n_cols_];
        std::vector<Rational> x(n_free_);
        for (size_t j = 0; j < n_free_; ++j) x[j] = Rational(u[j] - u[n_free_]);
        return x;
    }

private:
    void pivot(size_t r, size_t c) {
        auto& row = rows_[r];
        const Rational inv(Rational(1) / row[c]);
        for (auto& x : row) x = Rational(x * inv);
        for (size_t i = 0; i < rows_.size(); ++i) {
            if (i == r || rows_[i][c] == 0) continue;
            const Rational f = rows_[i][c];
            for (size_t j = 0; j <= n_cols_; ++j) rows_[i][j] -= f * row[j];
        }
        if (obj_[c] != 0) {
            const Rational f = obj_[c];
            for (size_t j = 0; j <= n_cols_; ++j) obj_[j] -= f * row[j];
        }
        basis_[r] = c;
    }

    size_t n_free_;
    size_t n_cols_ = 0;
    size_t art_begin_ = 0;
    std::vector<std::vector<Rational>> rows_;
    std::vector<Rational> obj_;
    std::vector<size_t> basis_;
};

std::vector<std::vector<int>> subsets_lex(int n, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) cur[static_cast<size_t>(i)] = i;
    while (true) {
        out.push_back(cur);
        int i = d - 1;
        while (i >= 0 && cur[static_cast<size_t>(i)] == n - d + i) --i;
        if (i < 0) break;
        ++cur[static_cast<size_t>(i)];
        for (int j = i + 1; j < d; ++j)
            cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

std::vector<LinearConstraint> star_constraints(const PointSet& S, const std::vector<int>& subset) {
    const size_t n = static_cast<size_t>(S.dim);
    std::vector<LinearConstraint> cons;
    std::vector<bool> in_subset(S.points.size(), false);
    for (int idx : subset) in_subset[static_cast<size_t>(idx)] = true;

    auto affine_row = [n](const std::vector<Rational>& pt) {
        std::vector<Rational> a(n + 1);
        for (size_t j = 0; j < n; ++j) a[j] = pt[j];
        a[n] = Rational(1);
        return a;
    };
    for (size_t i = 0; i < S.points.size(); ++i) {
        LinearConstraint c;
        c.a = affine_row(S.points[i]);
        c.rel = in_subset[i] ? Rel::Eq : Rel::Ge;
        c.rhs = in_subset[i] ? Rational(0) : Rational(1);
        cons.push_back(std::move(c));
    }
    for (const auto& z : S.generators())
        cons.push_back({affine_row(z), Rel::Ge, Rational(0)});
    return cons;
}

}  // namespace

std::optional<std::vector<Rational>> lp_feasible(const std::vector<LinearConstraint>& constraints) {
    if (constraints.empty()) return std::vector<Rational>();
    const size_t n = constraints.front().a.size();
    for (const auto& c : constraints)
        if (c.a.size() != n) throw std::invalid_argument("lp_feasible: dimension mismatch");
    return Simplex(constraints, n).solve();
}

void PointSet::validate() const {
    if (dim < 1) throw std::invalid_argument("point set: dimension must be positive");
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != dim)
            throw std::invalid_argument("point set: point dimension mismatch");
    for (const auto& p : hull_generators)
        if (static_cast<int>(p.size()) != dim)
            throw std::invalid_argument("point set: generator dimension mismatch");
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                throw std::invalid_argument("point set: points must be pairwise distinct");
}

ObstructionReport condition_star(const PointSet& S, int d, int jobs) {
    S.validate();
    if (d < 1 || d >= static_cast<int>(S.points.size()))
        throw std::invalid_argument("condition_star: need 1 <= d < |S|");

    const auto subsets = subsets_lex(static_cast<int>(S.points.size()), d);
    std::vector<std::optional<std::vector<Rational>>> results(subsets.size());

    auto solve_one = [&](size_t k) { results[k] = lp_feasible(star_constraints(S, subsets[k])); };

    if (jobs <= 1) {
        for (size_t k = 0; k < subsets.size(); ++k) {
            solve_one(k);
            if (!results[k]) break;  // lexicographically first failure
        }
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> workers;
        const size_t nworkers = std::min<size_t>(static_cast<size_t>(jobs), subsets.size());
        for (size_t w = 0; w < nworkers; ++w) {
            workers.emplace_back([&] {
                for (size_t k = next.fetch_add(1); k < subsets.size(); k = next.fetch_add(1))
                    solve_one(k);
            });
        }
        for (auto& t : workers) t.join();
    }

    ObstructionReport rep;
    rep.d = d;
    for (size_t k = 0; k < subsets.size(); ++k) {
        if (!results[k]) {
            rep.holds = false;
            rep.witnesses.clear();
            rep.failing_subset = subsets[k];
            return rep;
        }
        rep.witnesses.push_back({subsets[k], *results[k]});
    }
    rep.holds = true;
    return rep;
}

PointSet moment_curve_points(int n, int count) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("moment_curve_points: n must be even and >= 2");
    if (count < 1) throw std::invalid_argument("moment_curve_points: count must be positive");
    PointSet S;
    S.dim = n;
    for (int t = 1; t <= count; ++t) {
        std::vector<Rational> p(static_cast<size_t>(n));
        Rational v(1);
        for (int k = 0; k < n; ++k) {
            v *= t;
            p[static_cast<size_t>(k)] = v;
        }
        S.points.push_back(std::move(p));
    }
    return S;
}

bool witness_satisfies(const PointSet& S, int d, const StarWitness& w) {
    if (static_cast<int>(w.subset.size()) != d) return false;
    if (w.f_coeffs.size() != static_cast<size_t>(S.dim) + 1) return false;
    auto value = [&](const std::vector<Rational>& pt) {
        Rational acc = w.f_coeffs.back();
        for (size_t j = 0; j < pt.size(); ++j) acc += w.f_coeffs[j] * pt[j];
        return acc;
    };
    std::vector<bool> in_subset(S.points.size(), false);
    for (int idx : w.subset) {
        if (idx < 0 || idx >= static_cast<int>(S.points.size())) return false;
        in_subset[static_cast<size_t>(idx)] = true;
    }
    for (size_t i = 0; i < S.points.size(); ++i) {
        const Rational v = value(S.points[i]);
        if (in_subset[i] ? (v != 0) : (v < 1)) return false;
    }
    for (const auto& z : S.generators())
        if (value(z) < 0) return false;
    return true;
}

}  // namespace socrep
