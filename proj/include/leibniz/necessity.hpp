#pragma once

// Symbolic replay of the elimination arguments that pin down Aut(R0) and
// Aut(R1).
//
// Unknowns are a_{j,i}: the coefficient of b_j in phi(b_i), with indices in
// the algebra's own numbering (e0..en for R0; e1..en, x = n+1, y = n+2 for
// the others). Only generator images are unknown; every other image is
// generated by brackets, phi(e_k) = [phi(e_{k-1}), phi(e_1)].
//
// Solving policy. An equation may be solved for v when it is linear in v and
// the coefficient of v is a nonzero constant or a monomial in variables that
// have been declared nonzero and whose declaration has been checked (setting
// the variable to zero kills some image column, so phi would not be
// injective). Constant solutions are substituted at once; other solutions are
// kept as relations and only expanded at the end. Equations nobody can solve
// are kept as residuals and revisited in a closing pass after the script.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/families.hpp"
#include "leibniz/poly.hpp"

namespace leibniz {

using PolyVector = std::vector<Poly>;
using PolyMap = std::map<std::string, Poly, VarLess>;

/// b_target = [b_left, b_right]
struct Recipe {
    std::size_t target, left, right;
};

struct Constraint {
    enum class Kind { Solved, Residual, Discharged };

    Kind kind = Kind::Solved;
    std::optional<std::string> var;  // set for Solved
    Poly value;                      // var = value, or value = 0
    std::vector<std::string> divided_by;
    std::string source;  // coordinate label, or what produced the equation

    /// The constraint as an equation that must vanish.
    Poly equation() const { return var ? Poly::variable(*var) - value : value; }
};

inline std::string to_string(Constraint::Kind k) {
    switch (k) {
    case Constraint::Kind::Solved: return "solved";
    case Constraint::Kind::Residual: return "residual";
    case Constraint::Kind::Discharged: return "discharged";
    }
    return "?";
}

inline Constraint::Kind parse_constraint_kind(std::string_view s) {
    for (auto k : {Constraint::Kind::Solved, Constraint::Kind::Residual, Constraint::Kind::Discharged})
        if (to_string(k) == s) return k;
    throw ParseError("unknown constraint kind '" + std::string(s) + "'");
}

struct SideCondition {
    std::string var;
    std::optional<std::string> witness;  // basis label whose image dies when var = 0
};

namespace detail {

inline PolyVector poly_bracket(const Algebra& a, const PolyVector& u, const PolyVector& v) {
    PolyVector out(a.dim());
    for (const auto& [key, value] : a.table()) {
        const auto& [i, j] = key;
        if (u[i].is_zero() || v[j].is_zero()) continue;
        const Poly prod = u[i] * v[j];
        for (std::size_t k = 0; k < a.dim(); ++k)
            if (sgn(value[k]) != 0) out[k] += prod * value[k];
    }
    return out;
}

inline PolyVector poly_combination(const std::vector<PolyVector>& columns, const Vector& x) {
    PolyVector out(columns.empty() ? 0 : columns.front().size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t k = 0; k < out.size(); ++k) out[k] += columns[i][k] * x[i];
    }
    return out;
}

inline bool all_zero(const PolyVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Poly& p) { return p.is_zero(); });
}

/// Full image grid from generator columns and generation recipes.
inline std::vector<PolyVector> generate_images(const Algebra& a, std::vector<PolyVector> columns,
                                               const std::vector<Recipe>& recipes) {
    for (const auto& r : recipes) columns[r.target] = poly_bracket(a, columns[r.left], columns[r.right]);
    return columns;
}

/// Substitutes a (possibly chained) set of relations until none applies.
inline Poly resolve_relations(Poly p, const PolyMap& relations) {
    for (std::size_t guard = 0; guard <= relations.size() + 1; ++guard) {
        const VarSet vars = p.variables();
        if (std::none_of(vars.begin(), vars.end(), [&](const std::string& v) { return relations.count(v) > 0; }))
            return p;
        p = p.substitute(relations);
    }
    throw InconsistencyError("relations are cyclic");
}

} // namespace detail

/// Partially determined automorphism: generator images over the unknowns,
/// the substitutions found so far and the nonvanishing requirements used.
class SymbolicMap {
public:
    /// index_names[i] is the numeral used for b_i in variable names.
    SymbolicMap(Algebra algebra, std::vector<std::size_t> generators, std::vector<Recipe> recipes,
                std::vector<std::string> index_names)
        : algebra_(std::move(algebra)), generators_(std::move(generators)), recipes_(std::move(recipes)),
          names_(std::move(index_names)) {
        const std::size_t n = algebra_.dim();
        if (names_.size() != n) throw ShapeError("one index name per basis element is required");
        std::vector<bool> covered(n, false);
        for (auto g : generators_) covered.at(g) = true;
        for (const auto& r : recipes_) covered.at(r.target) = true;
        if (!std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }))
            throw ShapeError("every basis element must be a generator or generated");
        columns_.assign(n, PolyVector(n));
        for (auto i : generators_)
            for (std::size_t j = 0; j < n; ++j) columns_[i][j] = Poly::variable(var(j, i));
    }

    /// Every basis element is a generator.
    static SymbolicMap general(const Algebra& a) {
        std::vector<std::size_t> gens;
        std::vector<std::string> names;
        for (std::size_t i = 0; i < a.dim(); ++i) {
            gens.push_back(i);
            names.push_back(std::to_string(i));
        }
        return SymbolicMap(a, gens, {}, names);
    }

    std::string var(std::size_t j, std::size_t i) const { return "a_{" + names_.at(j) + "," + names_.at(i) + "}"; }

    const Algebra& algebra() const { return algebra_; }
    const std::vector<std::size_t>& generators() const { return generators_; }
    const std::vector<Recipe>& recipes() const { return recipes_; }
    const std::vector<std::string>& index_names() const { return names_; }

    /// images()[i][j] is the coefficient of b_j in phi(b_i). Constant solutions
    /// are applied; relations are not.
    std::vector<PolyVector> images() const { return detail::generate_images(algebra_, columns_, recipes_); }

    /// Images with every solution applied.
    std::vector<PolyVector> resolved_images() const {
        std::vector<PolyVector> cols = columns_;
        for (auto i : generators_)
            for (auto& p : cols[i]) p = resolve(p);
        return detail::generate_images(algebra_, std::move(cols), recipes_);
    }

    /// All substitutions found so far (constants and relations).
    PolyMap solved() const {
        PolyMap out = constants_;
        for (const auto& [v, p] : relations_) out.emplace(v, p);
        return out;
    }

    const PolyMap& constants() const { return constants_; }
    const PolyMap& relations() const { return relations_; }
    const std::vector<SideCondition>& side_conditions() const { return side_; }
    const std::vector<Poly>& residuals() const { return residuals_; }

    Poly resolve(const Poly& p) const { return detail::resolve_relations(p.substitute(constants_), relations_); }

    /// Declares var nonzero. The claim is checked when a division first needs it.
    void assume_nonzero(const std::string& var) {
        if (find_side(var)) return;
        side_.push_back({var, std::nullopt});
    }

    /// Imposes phi([u, v]) = [phi(u), phi(v)] on the given coordinates (all
    /// when empty) and returns the constraints derived from it.
    std::vector<Constraint> impose(const Vector& u, const Vector& v, const std::vector<std::size_t>& harvest = {}) {
        const std::size_t n = algebra_.dim();
        if (u.size() != n || v.size() != n) throw ShapeError("imposed vectors have wrong length");
        const auto imgs = images();
        const PolyVector lhs = detail::poly_combination(imgs, bracket(algebra_, u, v));
        const PolyVector rhs = detail::poly_bracket(algebra_, detail::poly_combination(imgs, u),
                                                    detail::poly_combination(imgs, v));

        std::vector<std::pair<std::size_t, Poly>> pending;
        for (std::size_t k = 0; k < n; ++k) {
            if (!harvest.empty() && std::find(harvest.begin(), harvest.end(), k) == harvest.end()) continue;
            Poly eq = lhs[k] - rhs[k];
            if (!eq.is_zero()) pending.emplace_back(k, std::move(eq));
        }

        std::vector<Constraint> out;
        for (bool progress = true; progress && !pending.empty();) {
            progress = false;
            for (auto it = pending.begin(); it != pending.end();) {
                const Poly eq = it->second.substitute(constants_);
                const std::string source = algebra_.label(it->first);
                if (eq.is_zero()) {
                    it = pending.erase(it);
                    continue;
                }
                if (eq.is_constant()) throw InconsistencyError("coordinate " + source + " gives " + eq.to_string() + " = 0");
                if (auto s = try_solve(eq)) {
                    apply(*s, source, out);
                    progress = true;
                    it = pending.erase(it);
                } else {
                    ++it;
                }
            }
        }
        for (auto& [k, eq] : pending) {
            Poly r = eq.substitute(constants_).monic();
            residuals_.push_back(r);
            out.push_back({Constraint::Kind::Residual, std::nullopt, r, {}, algebra_.label(k)});
        }
        return out;
    }

    /// Revisits residuals with every solution applied. Throws ResidualError if
    /// some residual can be neither solved nor shown to vanish.
    std::vector<Constraint> close() {
        std::vector<Constraint> out;
        for (bool progress = true; progress;) {
            progress = false;
            for (std::size_t idx = 0; idx < residuals_.size() && !progress; ++idx) {
                const Poly original = residuals_[idx];
                Poly r = original.substitute(constants_);
                std::optional<Solution> s;
                for (int pass = 0; pass < 2 && !progress && !s; ++pass) {
                    if (pass == 1) r = resolve(r);
                    if (r.is_zero()) {
                        out.push_back({Constraint::Kind::Discharged, std::nullopt, original, {}, "residual"});
                        residuals_.erase(residuals_.begin() + static_cast<std::ptrdiff_t>(idx));
                        progress = true;
                        break;
                    }
                    if (r.is_constant())
                        throw InconsistencyError("residual " + original.to_string() + " reduces to a nonzero constant");
                    s = try_solve(r);
                }
                if (s) {
                    residuals_.erase(residuals_.begin() + static_cast<std::ptrdiff_t>(idx));
                    apply(*s, "residual " + original.to_string(), out);
                    progress = true;
                }
            }
        }
        if (!residuals_.empty()) {
            std::string list;
            for (const auto& r : residuals_) list += (list.empty() ? "" : "; ") + resolve(r).to_string();
            throw ResidualError("unresolved constraints remain: " + list);
        }
        return out;
    }

private:
    struct Solution {
        std::string var;
        Poly value;
        std::vector<std::string> divided_by;
    };

    SideCondition* find_side(const std::string& var) {
        for (auto& s : side_)
            if (s.var == var) return &s;
        return nullptr;
    }

    /// True once var is declared nonzero and the declaration is witnessed.
    bool usable_nonzero(const std::string& var) {
        SideCondition* s = find_side(var);
        if (!s) return false;
        if (s->witness) return true;
        std::vector<PolyVector> cols = columns_;
        for (auto i : generators_)
            for (auto& p : cols[i]) p = p.substitute(var, Poly(0));
        const auto imgs = detail::generate_images(algebra_, std::move(cols), recipes_);
        for (std::size_t i = 0; i < imgs.size(); ++i) {
            if (detail::all_zero(imgs[i])) {
                s->witness = algebra_.label(i);
                return true;
            }
        }
        return false;
    }

    std::optional<Solution> try_solve(const Poly& eq) {
        struct Candidate {
            Solution sol;
            bool constant_coeff;
            bool fresh;
        };
        std::optional<Candidate> best;
        const auto better = [](const Candidate& a, const Candidate& b) {
            if (a.constant_coeff != b.constant_coeff) return a.constant_coeff;
            if (a.fresh != b.fresh) return a.fresh;
            return VarLess{}(b.sol.var, a.sol.var);
        };

        for (const auto& v : eq.variables()) {
            if (eq.degree_in(v) != 1) continue;
            const auto [coeff, rest] = eq.split_linear(v);
            const auto term = coeff.as_term();
            if (!term) continue;
            const auto& [k, mono] = *term;
            std::vector<std::string> divisors;
            bool ok = true;
            for (const auto& [w, e] : mono.factors()) {
                if (!usable_nonzero(w)) {
                    ok = false;
                    break;
                }
                divisors.push_back(w);
            }
            if (!ok) continue;
            auto q = rest.divide_exact(-k, mono);
            if (!q) continue;
            if (resolve(*q).variables().count(v)) continue;
            Candidate c{{v, std::move(*q), std::move(divisors)}, mono.is_one(), relations_.count(v) == 0};
            if (!best || better(c, *best)) best = std::move(c);
        }
        if (!best) return std::nullopt;
        return std::move(best->sol);
    }

    void apply(const Solution& s, const std::string& source, std::vector<Constraint>& out) {
        std::optional<Poly> displaced;
        if (auto it = relations_.find(s.var); it != relations_.end()) {
            displaced = (it->second - s.value).substitute(constants_);
            relations_.erase(it);
        }
        if (s.value.is_constant()) {
            constants_[s.var] = s.value;
            const PolyMap one{{s.var, s.value}};
            for (auto i : generators_)
                for (auto& p : columns_[i]) p = p.substitute(one);
            for (auto& [v, p] : relations_) p = p.substitute(one);
        } else {
            relations_[s.var] = s.value;
        }
        out.push_back({Constraint::Kind::Solved, s.var, s.value, s.divided_by, source});

        if (displaced && !displaced->is_zero()) {
            if (displaced->is_constant())
                throw InconsistencyError("relation for " + s.var + " contradicts " + s.var + " = " + s.value.to_string());
            Poly r = displaced->monic();
            residuals_.push_back(r);
            out.push_back({Constraint::Kind::Residual, std::nullopt, r, {}, "displaced relation for " + s.var});
        }
    }

    Algebra algebra_;
    std::vector<std::size_t> generators_;
    std::vector<Recipe> recipes_;
    std::vector<std::string> names_;
    std::vector<PolyVector> columns_;
    PolyMap constants_;
    PolyMap relations_;
    std::vector<SideCondition> side_;
    std::vector<Poly> residuals_;
};

/// Free-function form of SymbolicMap::impose.
inline std::vector<Constraint> impose_pair(SymbolicMap& s, const Vector& u, const Vector& v) { return s.impose(u, v); }

// ---------------------------------------------------------------------------
// Scripts

struct ScriptStep {
    std::size_t left, right;
    std::vector<std::size_t> harvest;         // empty: every coordinate
    std::vector<std::string> assume_nonzero;  // declared before imposing
};

struct ReplayScript {
    FamilyId family;
    std::size_t n;
    Algebra algebra;
    std::vector<std::size_t> generators;
    std::vector<Recipe> recipes;
    std::vector<std::string> index_names;
    std::vector<ScriptStep> steps;
    std::vector<std::string> parameter_vars;  // in parameter_names(family) order

    SymbolicMap initial_map() const { return SymbolicMap(algebra, generators, recipes, index_names); }
    std::string var(std::size_t j, std::size_t i) const {
        return "a_{" + index_names.at(j) + "," + index_names.at(i) + "}";
    }
};

inline ReplayScript replay_script(FamilyId f, std::size_t n) {
    check_n(f, n);
    if (f != FamilyId::R0 && f != FamilyId::R1)
        throw UnsupportedError("no elimination script for " + to_string(f));
    ReplayScript s{f, n, build(f, n), {}, {}, {}, {}, {}};

    if (f == FamilyId::R0) {
        for (std::size_t i = 0; i <= n; ++i) s.index_names.push_back(std::to_string(i));
        s.generators = {0, 1};
        for (std::size_t k = 2; k <= n; ++k) s.recipes.push_back({k, k - 1, 1});
        s.steps.push_back({0, 0, {}, {}});
        s.steps.push_back({0, 1, {}, {s.var(1, 1)}});
        s.parameter_vars = {s.var(1, 0), s.var(1, 1)};
        return s;
    }

    const FilBasis b{n};
    for (std::size_t i = 1; i <= n + 2; ++i) s.index_names.push_back(std::to_string(i));
    s.generators = {b.e(1), b.e(2), b.x(), b.y()};
    for (std::size_t k = 3; k <= n; ++k) s.recipes.push_back({b.e(k), b.e(k - 1), b.e(1)});
    const std::vector<std::size_t> xy{b.x(), b.y()};

    // e_1 and e_2..e_n are right annihilators modulo span(x, y).
    s.steps.push_back({b.e(1), b.x(), xy, {}});
    for (std::size_t i = 2; i <= n; ++i) s.steps.push_back({b.e(i), b.y(), xy, {}});
    s.steps.push_back({b.e(1), b.e(1), {}, {s.var(b.e(1), b.e(1))}});
    s.steps.push_back({b.y(), b.e(1), {}, {}});
    s.steps.push_back({b.x(), b.e(1), {}, {}});
    s.steps.push_back({b.x(), b.e(2), {}, {}});
    s.steps.push_back({b.y(), b.x(), {}, {s.var(b.e(2), b.e(2))}});
    s.steps.push_back({b.e(2), b.y(), {}, {}});
    s.steps.push_back({b.y(), b.y(), {}, {}});
    s.steps.push_back({b.e(1), b.y(), {}, {}});
    s.steps.push_back({b.x(), b.y(), {}, {}});
    s.steps.push_back({b.e(2), b.x(), {}, {}});
    s.parameter_vars = {s.var(b.e(1), b.e(1)), s.var(b.e(2), b.e(2)), s.var(b.e(1), b.x())};
    return s;
}

// ---------------------------------------------------------------------------
// Closed forms

/// The family's automorphism with symbolic parameters alpha, beta, ...;
/// result[i][j] is the coefficient of b_j in phi(b_i).
inline std::vector<PolyVector> symbolic_aut(FamilyId f, std::size_t n) {
    check_n(f, n);
    const std::size_t dim = family_dim(f, n);
    std::vector<PolyVector> m(dim, PolyVector(dim));
    const auto& names = parameter_names(f);
    const auto param = [&](std::size_t k) { return Poly::variable(names[k]); };
    const auto term = [](long sign_exp, const Poly& p, unsigned long fact) {
        Poly out = p * Scalar(1 / Scalar(factorial(fact)));
        return sign_exp % 2 ? -out : out;
    };

    if (f == FamilyId::R0) {
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = i; j <= n; ++j)
                m[i][j] = term(0, param(0).pow(j - i) * param(1).pow(i), j - i);
        return m;
    }
    const FilBasis b{n};
    if (f == FamilyId::R1) {
        const Poly alpha = param(0), beta = param(1), gamma = param(2);
        m[b.e(1)][b.e(1)] = alpha;
        for (std::size_t i = 2; i <= n; ++i)
            for (std::size_t j = i; j <= n; ++j)
                m[b.e(i)][b.e(j)] = term(j - i, alpha.pow(i - 2) * beta * gamma.pow(j - i), j - i);
        m[b.x()][b.e(1)] = gamma;
        m[b.x()][b.x()] = 1;
        m[b.y()][b.y()] = 1;
        return m;
    }
    const Poly alpha = param(0), beta = param(1), gamma = param(2);
    m[b.e(1)][b.e(1)] = alpha;
    for (std::size_t i = 3; i <= n; ++i) m[b.e(1)][b.e(i)] = term(i, alpha * beta.pow(i - 2), i - 2);
    m[b.e(2)][b.e(2)] = gamma;
    for (std::size_t i = 3; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j) m[b.e(i)][b.e(j)] = term(j - i, alpha.pow(i - 1) * beta.pow(j - i), j - i);
    m[b.x()][b.e(1)] = beta;
    for (std::size_t i = 3; i <= n; ++i) m[b.x()][b.e(i)] = term(i, beta.pow(i - 1), i - 1);
    m[b.x()][b.x()] = 1;
    if (f == FamilyId::R2) m[b.y()][b.e(2)] = param(3);
    m[b.y()][b.y()] = 1;
    return m;
}

// ---------------------------------------------------------------------------
// Certificates

struct CertificateStep {
    std::string left, right;  // basis labels of the imposed pair
    std::vector<std::string> assumed_nonzero;
    std::vector<std::string> harvested;  // coordinates read; empty means all
    std::vector<Constraint> constraints;
};

struct Certificate {
    FamilyId family = FamilyId::R0;
    std::size_t n = 0;
    std::vector<std::string> basis;
    std::vector<CertificateStep> steps;
    std::vector<Constraint> closing;
    std::vector<SideCondition> side_conditions;
    std::vector<std::pair<std::string, std::string>> parameters;  // name, unknown it renames
    std::vector<PolyVector> final_images;  // final_images[i][j]: coefficient of b_j in phi(b_i)
    std::vector<std::string> mismatches;   // labels whose image differs from the closed form
    bool all_pairs_hold = false;
    bool match = false;

    /// Every constraint, in derivation order.
    std::vector<const Constraint*> all_constraints() const {
        std::vector<const Constraint*> out;
        for (const auto& s : steps)
            for (const auto& c : s.constraints) out.push_back(&c);
        for (const auto& c : closing) out.push_back(&c);
        return out;
    }
};

namespace detail {

inline bool homomorphism_holds(const Algebra& a, const std::vector<PolyVector>& imgs) {
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (poly_combination(imgs, a.product(i, j)) != poly_bracket(a, imgs[i], imgs[j])) return false;
    return true;
}

inline std::map<std::string, std::string> renaming(const Certificate& c) {
    std::map<std::string, std::string> out;
    for (const auto& [name, var] : c.parameters) out[var] = name;
    return out;
}

/// Renames parameters in the generator columns and regenerates the rest.
inline std::vector<PolyVector> finish_images(const ReplayScript& s, std::vector<PolyVector> cols,
                                             const std::map<std::string, std::string>& names) {
    for (auto i : s.generators)
        for (auto& p : cols[i]) p = p.rename(names);
    return generate_images(s.algebra, std::move(cols), s.recipes);
}

} // namespace detail

inline Certificate replay(FamilyId f, std::size_t n) {
    const ReplayScript script = replay_script(f, n);
    SymbolicMap map = script.initial_map();
    const Algebra& a = script.algebra;

    Certificate cert;
    cert.family = f;
    cert.n = n;
    cert.basis = a.labels();
    for (const auto& step : script.steps) {
        CertificateStep rec{a.label(step.left), a.label(step.right), step.assume_nonzero, {}, {}};
        for (auto k : step.harvest) rec.harvested.push_back(a.label(k));
        for (const auto& v : step.assume_nonzero) map.assume_nonzero(v);
        rec.constraints = map.impose(basis_vector(a.dim(), step.left), basis_vector(a.dim(), step.right), step.harvest);
        cert.steps.push_back(std::move(rec));
    }
    cert.closing = map.close();
    cert.side_conditions = map.side_conditions();

    const auto& names = parameter_names(f);
    for (std::size_t k = 0; k < names.size(); ++k) cert.parameters.emplace_back(names[k], script.parameter_vars[k]);

    // Generated images are recomputed from the finished generator images, one
    // k at a time, and each is compared with the closed form.
    std::vector<PolyVector> cols(a.dim(), PolyVector(a.dim()));
    const auto resolved = map.resolved_images();
    for (auto i : script.generators) cols[i] = resolved[i];
    cert.final_images = detail::finish_images(script, std::move(cols), detail::renaming(cert));

    const auto expected = symbolic_aut(f, n);
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (cert.final_images[i] != expected[i]) cert.mismatches.push_back(a.label(i));
    cert.all_pairs_hold = detail::homomorphism_holds(a, cert.final_images);
    cert.match = cert.mismatches.empty();
    return cert;
}

struct CertificateAudit {
    bool reproduces = false;        // constraints rebuild final_images exactly
    bool constraints_hold = false;  // every recorded equation vanishes on the solution
    bool divisions_justified = false;
    bool all_pairs_hold = false;
    std::string detail;

    bool ok() const { return reproduces && constraints_hold && divisions_justified && all_pairs_hold; }
};

/// Re-derives the final images from the recorded solutions alone and checks
/// them against the certificate. Only the algebra and the generator layout are
/// taken from the script; no elimination is redone.
inline CertificateAudit replay_certificate(const Certificate& cert) {
    CertificateAudit out;
    const ReplayScript script = replay_script(cert.family, cert.n);
    const Algebra& a = script.algebra;
    if (cert.basis != a.labels()) {
        out.detail = "basis labels differ from the family's";
        return out;
    }

    // Later solutions for the same unknown supersede earlier ones.
    PolyMap assignment;
    for (const Constraint* c : cert.all_constraints())
        if (c->kind == Constraint::Kind::Solved) assignment[*c->var] = c->value;
    const auto full = [&](const Poly& p) { return detail::resolve_relations(p, assignment); };

    out.constraints_hold = true;
    for (const Constraint* c : cert.all_constraints()) {
        if (!full(c->equation()).is_zero()) {
            out.constraints_hold = false;
            out.detail = "constraint " + c->equation().to_string() + " = 0 fails on the solution";
            break;
        }
    }

    out.divisions_justified = true;
    for (const Constraint* c : cert.all_constraints()) {
        for (const auto& d : c->divided_by) {
            const bool declared = std::any_of(cert.side_conditions.begin(), cert.side_conditions.end(),
                                              [&](const SideCondition& s) { return s.var == d && s.witness; });
            if (!declared) {
                out.divisions_justified = false;
                out.detail = "division by " + d + " without a witnessed nonzero condition";
            }
        }
    }

    const SymbolicMap generic = script.initial_map();
    std::vector<PolyVector> cols(a.dim(), PolyVector(a.dim()));
    const auto start = generic.images();
    for (auto i : script.generators)
        for (std::size_t j = 0; j < a.dim(); ++j) cols[i][j] = full(start[i][j]);
    const auto rebuilt = detail::finish_images(script, std::move(cols), detail::renaming(cert));
    out.reproduces = rebuilt == cert.final_images;
    if (!out.reproduces && out.detail.empty()) out.detail = "recorded solutions do not rebuild the final images";
    out.all_pairs_hold = detail::homomorphism_holds(a, rebuilt);
    return out;
}

} // namespace leibniz
