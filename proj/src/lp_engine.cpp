#include "ivbounds/lp_engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace ivbounds {

namespace {

MassFunction to_mass_function(const std::vector<Rational>& x) {
    std::array<Rational, kNumResponseTypes> values;
    std::copy(x.begin(), x.end(), values.begin());
    return MassFunction::from_values(values);
}

}  // namespace

lp::DenseProgram to_dense(const LinearProgramSpec& spec) {
    lp::DenseProgram out;
    out.num_variables = LinearProgramSpec::num_variables();
    for (const auto& row : spec.rows) {
        out.rows.emplace_back(row.coefficients.begin(), row.coefficients.end());
        out.rhs.push_back(row.rhs);
    }
    return out;
}

std::vector<Rational> to_dense(const LinearFunctional& f) {
    return {f.coefficients().begin(), f.coefficients().end()};
}

BoundSolver::BoundSolver(const LinearProgramSpec& spec) : simplex_(to_dense(spec)) {}

std::variant<MassFunction, InfeasibilityCertificate> BoundSolver::feasibility() const {
    if (!simplex_.feasible()) return simplex_.infeasibility();
    return to_mass_function(simplex_.feasible_point());
}

OptimumReport BoundSolver::optimize(const LinearFunctional& f, Direction direction) const {
    auto sol = simplex_.optimize(to_dense(f), direction);
    return OptimumReport{std::move(sol.value), to_mass_function(sol.x), std::move(sol.duals)};
}

OptimumReport solve(const LinearProgramSpec& spec, const LinearFunctional& f, Direction direction) {
    return BoundSolver(spec).optimize(f, direction);
}

std::variant<MassFunction, InfeasibilityCertificate> feasibility(const LinearProgramSpec& spec) {
    return BoundSolver(spec).feasibility();
}

bool certifies(const LinearProgramSpec& spec, const LinearFunctional& f, Direction direction,
               const OptimumReport& report) {
    if (!spec.is_satisfied_by(report.witness) || f.evaluate(report.witness) != report.value) return false;
    lp::DenseSolution sol{report.value,
                          {report.witness.values().begin(), report.witness.values().end()},
                          report.dual_certificate};
    return lp::certifies_optimum(to_dense(spec), to_dense(f), direction, sol);
}

bool certifies(const LinearProgramSpec& spec, const InfeasibilityCertificate& certificate) {
    return lp::certifies_infeasibility(to_dense(spec), certificate);
}

// ------------------------------------------------------------ dual vertices

InequalityForm inequality_form(const LinearProgramSpec& spec) {
    InequalityForm out;
    for (const auto& row : spec.rows) {
        polyhedra::Vector plus(row.coefficients.begin(), row.coefficients.end());
        polyhedra::Vector minus(plus.size());
        for (std::size_t j = 0; j < plus.size(); ++j) minus[j] = -plus[j];
        out.a.push_back(std::move(plus));
        out.b.push_back(row.rhs);
        out.a.push_back(std::move(minus));
        out.b.push_back(-row.rhs);
    }
    return out;
}

std::vector<std::vector<Rational>> dual_extreme_points(const LinearProgramSpec& spec, const LinearFunctional& f,
                                                       Direction direction) {
    const auto form = inequality_form(spec);
    const std::size_t k = form.a.size();
    const std::size_t n = LinearProgramSpec::num_variables();

    // Homogenize: (u, t) with u >= 0, t >= 0, A'u - c t >= 0. Rays with t > 0 are the vertices.
    polyhedra::Matrix cone;
    for (std::size_t i = 0; i <= k; ++i) {
        polyhedra::Vector unit(k + 1);
        unit[i] = 1;
        cone.push_back(std::move(unit));
    }
    for (std::size_t j = 0; j < n; ++j) {
        polyhedra::Vector row(k + 1);
        for (std::size_t i = 0; i < k; ++i) row[i] = form.a[i][j];
        row[k] = direction == Direction::Maximize ? Rational(-f[j]) : f[j];
        cone.push_back(std::move(row));
    }

    std::vector<std::vector<Rational>> vertices;
    for (const auto& ray : polyhedra::extreme_rays(cone)) {
        if (ray[k] <= 0) continue;
        std::vector<Rational> u(k);
        for (std::size_t i = 0; i < k; ++i) u[i] = ray[i] / ray[k];
        vertices.push_back(std::move(u));
    }
    std::sort(vertices.begin(), vertices.end());
    return vertices;
}

std::vector<DualVertex> evaluate_dual_vertices(const std::vector<std::vector<Rational>>& points,
                                               const LinearProgramSpec& spec, Direction direction) {
    const auto form = inequality_form(spec);
    std::vector<DualVertex> out;
    out.reserve(points.size());
    for (const auto& u : points) {
        if (u.size() != form.b.size()) throw std::invalid_argument("dual point does not match the spec's rows");
        Rational value = 0;
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (u[i] != 0) value += form.b[i] * u[i];
        }
        out.push_back(DualVertex{u, direction == Direction::Maximize ? value : Rational(-value)});
    }
    return out;
}

std::vector<DualVertex> enumerate_dual_vertices(const LinearProgramSpec& spec, const LinearFunctional& f,
                                                Direction direction) {
    const auto check = BoundSolver(spec).feasibility();
    if (const auto* cert = std::get_if<InfeasibilityCertificate>(&check)) throw InfeasibleProgram(*cert);
    return evaluate_dual_vertices(dual_extreme_points(spec, f, direction), spec, direction);
}

Rational dual_bound(const std::vector<DualVertex>& vertices, Direction direction) {
    if (vertices.empty()) throw std::invalid_argument("no dual vertices");
    Rational best = vertices.front().objective_value;
    for (const auto& v : vertices) {
        if (direction == Direction::Maximize ? v.objective_value < best : v.objective_value > best) {
            best = v.objective_value;
        }
    }
    return best;
}

bool is_dual_feasible(const LinearProgramSpec& spec, const LinearFunctional& f, Direction direction,
                      const std::vector<Rational>& u) {
    const auto form = inequality_form(spec);
    if (u.size() != form.a.size()) return false;
    for (const auto& x : u) {
        if (x < 0) return false;
    }
    for (std::size_t j = 0; j < LinearProgramSpec::num_variables(); ++j) {
        Rational column = 0;
        for (std::size_t i = 0; i < u.size(); ++i) column += form.a[i][j] * u[i];
        const Rational c = direction == Direction::Maximize ? f[j] : Rational(-f[j]);
        if (column < c) return false;
    }
    return true;
}

// -------------------------------------------------------- image membership

std::vector<ResponseType> admissible_vertices(AssumptionSet assumptions) {
    // The unit masses are the vertices of the simplex; under monotonicity the zero-defier
    // row is a face of it, whose vertices are the non-defier unit masses.
    std::vector<ResponseType> out;
    for (const auto& w : all_response_types()) {
        if (assumptions == AssumptionSet::ExogeneityOnly || !w.is_defier()) out.push_back(w);
    }
    return out;
}

namespace {

polyhedra::Vector image_of(const ResponseType& w) {
    polyhedra::Vector v(kNumObservedCells + kNumCells);
    for (int z = 0; z < 2; ++z) v[ObservedCell{w.observed_outcome(z), w.treatment(z), z}.index()] = 1;
    v[kNumObservedCells + w.outcome_cell().index()] = 1;
    return v;
}

}  // namespace

polyhedra::Matrix image_points(AssumptionSet assumptions) {
    polyhedra::Matrix out;
    for (const auto& w : admissible_vertices(assumptions)) out.push_back(image_of(w));
    return out;
}

polyhedra::Vector stacked_targets(const DataDistribution& p, const SingletonTargets& targets) {
    polyhedra::Vector out(p.values().begin(), p.values().end());
    out.insert(out.end(), targets.begin(), targets.end());
    return out;
}

std::variant<MassFunction, NotInImage> image_membership(const DataDistribution& p, AssumptionSet assumptions,
                                                        const SingletonTargets& targets) {
    Rational sum = 0;
    for (const auto& t : targets) {
        if (t < 0) throw MalformedTargets("singleton target " + to_string(t) + " is negative");
        sum += t;
    }
    if (sum != 1) throw MalformedTargets("singleton targets sum to " + to_string(sum) + ", not 1");

    const auto vertices = admissible_vertices(assumptions);
    const auto points = image_points(assumptions);
    const auto goal = stacked_targets(p, targets);

    // Convex weights over the image points: sum_k lambda_k point_k = goal, sum_k lambda_k = 1.
    lp::DenseProgram program;
    program.num_variables = points.size();
    for (std::size_t r = 0; r < goal.size(); ++r) {
        std::vector<Rational> row(points.size());
        for (std::size_t k = 0; k < points.size(); ++k) row[k] = points[k][r];
        program.rows.push_back(std::move(row));
        program.rhs.push_back(goal[r]);
    }
    program.rows.emplace_back(points.size(), Rational(1));
    program.rhs.emplace_back(1);

    lp::ExactSimplex simplex(program);
    if (!simplex.feasible()) return NotInImage{simplex.infeasibility()};

    const auto weights = simplex.feasible_point();
    std::array<Rational, kNumResponseTypes> q;
    for (std::size_t k = 0; k < vertices.size(); ++k) q[vertices[k].index()] = weights[k];
    auto mass = MassFunction::from_values(q);
    if (!(push_forward(mass) == p)) throw std::logic_error("image membership weights do not reproduce the data");
    for (int cell = 0; cell < kNumCells; ++cell) {
        auto event = Event{OutcomeCell::from_index(cell)};
        if (event_functional(event).evaluate(mass) != targets[cell]) {
            throw std::logic_error("image membership weights miss a singleton target");
        }
    }
    return mass;
}

polyhedra::HRepresentation image_h_representation(AssumptionSet assumptions) {
    return polyhedra::convex_hull(image_points(assumptions));
}

}  // namespace ivbounds
