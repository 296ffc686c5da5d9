#pragma once

// Command-line front end. run() never exits the process and never touches the
// real standard streams, so tests can call it directly.
//
// Exit status: 0 the command ran and the property holds, 1 it ran and the
// property fails, 2 the input could not be used.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "leibniz/algebra.hpp"
#include "leibniz/families.hpp"
#include "leibniz/json_io.hpp"
#include "leibniz/morphisms.hpp"
#include "leibniz/necessity.hpp"

namespace leibniz::cli {

enum Exit : int { Ok = 0, PropertyFails = 1, InputError = 2 };

struct Options {
    std::string family;
    std::optional<std::size_t> n;
    std::vector<std::string> params;
    std::string algebra;
    std::string map;
    std::string certificate;
    std::string nilradical;
    bool json = false;
    unsigned long seed = 0;
};

namespace detail {

inline std::string read_source(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path.empty() || path == "-") {
        buf << in.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f) throw ParseError("cannot open '" + path + "'");
        buf << f.rdbuf();
    }
    return buf.str();
}

inline FamilyId family_of(const Options& o) {
    if (o.family.empty()) throw ParseError("--family is required");
    return parse_family(o.family);
}

inline std::size_t n_of(const Options& o) {
    if (!o.n) throw ParseError("--n is required");
    return *o.n;
}

/// --algebra wins; otherwise --family/--n; otherwise stdin when allowed.
inline Algebra load_algebra(const Options& o, std::istream& in, bool stdin_fallback) {
    if (!o.algebra.empty()) return algebra_from_json(parse_json_text(read_source(o.algebra, in)));
    if (!o.family.empty()) return build(family_of(o), n_of(o));
    if (stdin_fallback) return algebra_from_json(parse_json_text(read_source("-", in)));
    throw ParseError("give --algebra <path> or --family with --n");
}

inline std::string join(const std::vector<std::size_t>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
}

inline Json optional_index(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

inline std::string nilpotent_class(const Algebra& a) {
    if (is_null_filiform(a)) return "null-filiform";
    if (is_filiform(a)) return "filiform";
    if (is_nilpotent(a)) return "nilpotent";
    return "not nilpotent";
}

inline Subspace labelled_span(const Algebra& a, const std::string& labels) {
    std::vector<Vector> rows;
    std::stringstream ss(labels);
    for (std::string item; std::getline(ss, item, ',');) {
        auto idx = a.index_of(item);
        if (!idx) throw ParseError("unknown basis label '" + item + "'");
        rows.push_back(basis_vector(a.dim(), *idx));
    }
    return Subspace::span(a.dim(), rows);
}

inline void print_table(std::ostream& out, const Algebra& a) {
    out << "dim " << a.dim() << "\n";
    for (const auto& [key, value] : a.table()) {
        out << "[" << a.label(key.first) << ", " << a.label(key.second) << "] =";
        bool first = true;
        for (std::size_t k = 0; k < a.dim(); ++k) {
            if (sgn(value[k]) == 0) continue;
            out << (first ? " " : " + ") << "(" << to_string(value[k]) << ")" << a.label(k);
            first = false;
        }
        out << "\n";
    }
}

inline void print_map(std::ostream& out, const LinearMap& m) {
    for (std::size_t i = 0; i < m.source_dim(); ++i) {
        out << "column " << i << ":";
        for (const auto& x : m.image(i)) out << " " << to_string(x);
        out << "\n";
    }
}

// --- commands ---------------------------------------------------------------

inline int check_leibniz_cmd(const Options& o, std::istream& in, std::ostream& out) {
    const Algebra a = load_algebra(o, in, true);
    const auto violations = check_leibniz(a);
    if (o.json) {
        Json v = Json::array();
        for (const auto& x : violations)
            v.push_back({{"i", x.i}, {"j", x.j}, {"k", x.k}, {"discrepancy", vector_to_json(x.discrepancy)}});
        out << Json{{"leibniz", violations.empty()}, {"violations", v}}.dump(2) << "\n";
    } else if (violations.empty()) {
        out << "Leibniz identity holds on all " << a.dim() * a.dim() * a.dim() << " basis triples\n";
    } else {
        out << violations.size() << " violating triples, first (" << violations[0].i << ", " << violations[0].j << ", "
            << violations[0].k << ")\n";
    }
    return violations.empty() ? Ok : PropertyFails;
}

inline int series_cmd(const Options& o, std::istream& in, std::ostream& out) {
    const Algebra a = load_algebra(o, in, true);
    const auto lcs = dimensions(lower_central_series(a));
    const auto der = dimensions(derived_series(a));
    if (o.json) {
        out << Json{{"lower_central", lcs},
                    {"derived", der},
                    {"nilpotent", is_nilpotent(a)},
                    {"solvable", is_solvable(a)},
                    {"nilpotency_index", optional_index(nilpotency_index(a))},
                    {"solvability_index", optional_index(solvability_index(a))}}
                       .dump(2)
            << "\n";
    } else {
        out << "lower central series dims: " << join(lcs) << "\n"
            << "derived series dims:       " << join(der) << "\n"
            << "nilpotent: " << (is_nilpotent(a) ? "yes" : "no") << ", solvable: " << (is_solvable(a) ? "yes" : "no")
            << "\n";
    }
    return Ok;
}

inline int classify_cmd(const Options& o, std::istream& in, std::ostream& out) {
    const Algebra a = load_algebra(o, in, true);
    const bool leibniz = check_leibniz(a).empty();
    if (!leibniz) {
        if (o.json)
            out << Json{{"leibniz", false}}.dump(2) << "\n";
        else
            out << "not a Leibniz algebra\n";
        return PropertyFails;
    }
    const bool solvable = is_solvable(a);
    // For a solvable algebra [L, L] lies in the nilradical; it is used as the
    // nilradical unless the caller names one.
    const Subspace nil = o.nilradical.empty() ? subspace_product(a, Subspace::full(a.dim()), Subspace::full(a.dim()))
                                              : labelled_span(a, o.nilradical);
    const Subspace whole = Subspace::full(a.dim());
    if (!subspace_product(a, whole, nil).is_subspace_of(nil) || !subspace_product(a, nil, whole).is_subspace_of(nil))
        throw NotClosedError("the given span is not a two-sided ideal");
    const Algebra sub = subalgebra_restrict(a, nil);
    const std::string cls = nilpotent_class(sub);
    if (o.json) {
        out << Json{{"leibniz", true},
                    {"solvable", solvable},
                    {"nilpotent", is_nilpotent(a)},
                    {"class", nilpotent_class(a)},
                    {"nilradical",
                     {{"source", o.nilradical.empty() ? "derived_algebra" : "given"},
                      {"dim", sub.dim()},
                      {"basis", sub.labels()},
                      {"class", cls},
                      {"lower_central", dimensions(lower_central_series(sub))}}}}
                       .dump(2)
            << "\n";
    } else {
        out << "solvable: " << (solvable ? "yes" : "no") << "\n"
            << "algebra class: " << nilpotent_class(a) << "\n"
            << "nilradical (" << (o.nilradical.empty() ? "[L,L]" : "given") << ", dim " << sub.dim() << "): " << cls
            << "\n";
    }
    return Ok;
}

inline int build_cmd(const Options& o, std::ostream& out) {
    const Algebra a = build(family_of(o), n_of(o));
    if (o.json)
        out << algebra_to_json(a).dump(2) << "\n";
    else
        print_table(out, a);
    return Ok;
}

inline int aut_cmd(const Options& o, std::ostream& out) {
    const FamilyId f = family_of(o);
    if (o.params.size() != 1) throw ParseError("aut takes exactly one --params");
    const LinearMap m = aut_matrix(f, n_of(o), parse_params(f, o.params[0]));
    if (o.json)
        out << map_to_json(m).dump(2) << "\n";
    else
        print_map(out, m);
    return Ok;
}

inline int verify_map_cmd(const Options& o, std::istream& in, std::ostream& out) {
    const Algebra a = load_algebra(o, in, false);
    if (o.map.empty()) throw ParseError("--map is required");
    const LinearMap m = map_from_json(parse_json_text(read_source(o.map, in)));
    if (m.source_dim() != a.dim()) throw ParseError("map and algebra dimensions differ");
    const auto hom = is_homomorphism(a, m, o.seed);
    const bool inv = is_invertible(m);
    const bool aut = hom.holds && inv;

    Json params(nullptr);
    if (aut && !o.family.empty() && o.algebra.empty()) {
        try {
            params = params_to_json(recover_params(family_of(o), n_of(o), m));
        } catch (const NotInFamilyError&) {
        }
    }
    if (o.json) {
        Json ce(nullptr);
        if (hom.counterexample) ce = {hom.counterexample->first, hom.counterexample->second};
        Json j{{"automorphism", aut},
               {"homomorphism", hom.holds},
               {"invertible", inv},
               {"counterexample", ce},
               {"smoke_ok", hom.smoke_ok}};
        if (!o.family.empty() && o.algebra.empty()) j["params"] = params;
        out << j.dump(2) << "\n";
    } else {
        out << "homomorphism: " << (hom.holds ? "yes" : "no") << ", invertible: " << (inv ? "yes" : "no") << "\n";
        if (hom.counterexample)
            out << "fails on pair (" << a.label(hom.counterexample->first) << ", " << a.label(hom.counterexample->second)
                << ")\n";
        if (!params.is_null()) out << "family parameters: " << params.dump() << "\n";
    }
    return aut ? Ok : PropertyFails;
}

inline int derivations_cmd(const Options& o, std::istream& in, std::ostream& out) {
    const Algebra a = load_algebra(o, in, true);
    const auto der = derivation_space(a);
    if (o.json) {
        Json basis = Json::array();
        for (const auto& d : der.elements) basis.push_back(map_to_json(LinearMap(d)));
        out << Json{{"dim", der.dimension()}, {"basis", basis}}.dump(2) << "\n";
    } else {
        out << "dim Der = " << der.dimension() << "\n";
        for (std::size_t k = 0; k < der.elements.size(); ++k) {
            out << "D" << k << ":\n";
            print_map(out, LinearMap(der.elements[k]));
        }
    }
    return Ok;
}

inline int compose_cmd(const Options& o, std::ostream& out) {
    const FamilyId f = family_of(o);
    if (o.params.size() != 2) throw ParseError("compose takes --params twice: outer, then inner");
    const AutParams outer = parse_params(f, o.params[0]);
    const AutParams inner = parse_params(f, o.params[1]);
    const AutParams result = compose_params(f, outer, inner);
    std::optional<bool> agrees;
    if (o.n) {
        const LinearMap product = compose(aut_matrix(f, *o.n, outer), aut_matrix(f, *o.n, inner));
        agrees = product == aut_matrix(f, *o.n, result);
    }
    if (o.json) {
        Json j{{"params", params_to_json(result)}};
        if (agrees) j["matrix_check"] = *agrees;
        out << j.dump(2) << "\n";
    } else {
        out << params_to_json(result).dump() << "\n";
        if (agrees) out << "matrix product check: " << (*agrees ? "agrees" : "DISAGREES") << "\n";
    }
    return agrees.value_or(true) ? Ok : PropertyFails;
}

inline int replay_cmd(const Options& o, std::istream& in, std::ostream& out) {
    if (!o.certificate.empty()) {
        const Certificate c = certificate_from_json(parse_json_text(read_source(o.certificate, in)));
        const auto audit = replay_certificate(c);
        if (o.json) {
            out << Json{{"reproduces", audit.reproduces},
                        {"constraints_hold", audit.constraints_hold},
                        {"divisions_justified", audit.divisions_justified},
                        {"all_pairs_hold", audit.all_pairs_hold},
                        {"ok", audit.ok()}}
                       .dump(2)
                << "\n";
        } else {
            out << "certificate " << (audit.ok() ? "verified" : "REJECTED") << (audit.detail.empty() ? "" : ": ")
                << audit.detail << "\n";
        }
        return audit.ok() ? Ok : PropertyFails;
    }

    const Certificate c = replay(family_of(o), n_of(o));
    if (o.json) {
        out << certificate_to_json(c).dump(2) << "\n";
    } else {
        for (const auto& s : c.steps) {
            out << "(" << s.left << ", " << s.right << ")";
            for (const auto& v : s.assumed_nonzero) out << "  assuming " << v << " != 0";
            out << "\n";
            for (const auto& k : s.constraints)
                out << "    " << (k.var ? *k.var + " = " + k.value.to_string() : k.value.to_string() + " = 0") << "\n";
        }
        out << "closing\n";
        for (const auto& k : c.closing)
            out << "    " << (k.var ? *k.var + " = " + k.value.to_string() : k.value.to_string() + " = 0  (vanishes)")
                << "\n";
        for (const auto& [name, var] : c.parameters) out << name << " := " << var << "\n";
        out << "closed form " << (c.match ? "matches" : "DOES NOT match") << "\n";
    }
    return c.match ? Ok : PropertyFails;
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact workbench for the Leibniz algebras R0-R3 and their automorphisms", "leibniz"};
    app.require_subcommand(1);
    Options o;

    const auto algebra_flags = [&](CLI::App* c) {
        c->add_option("--algebra", o.algebra, "Algebra JSON file ('-' for stdin)");
        c->add_option("--family", o.family, "R0, R1, R2 or R3");
        c->add_option("--n", o.n, "Family size parameter");
        c->add_flag("--json", o.json, "Emit JSON");
    };
    const auto family_flags = [&](CLI::App* c) {
        c->add_option("--family", o.family, "R0, R1, R2 or R3")->required();
        c->add_option("--n", o.n, "Family size parameter");
        c->add_flag("--json", o.json, "Emit JSON");
        return c;
    };

    algebra_flags(app.add_subcommand("check-leibniz", "Check the Leibniz identity on basis triples"));
    algebra_flags(app.add_subcommand("series", "Lower central and derived series dimensions"));
    auto* classify = app.add_subcommand("classify", "Solvability and nilradical class (reads stdin by default)");
    algebra_flags(classify);
    classify->add_option("--nilradical", o.nilradical, "Comma-separated basis labels spanning the nilradical");
    family_flags(app.add_subcommand("build", "Structure constants of a family member"));
    family_flags(app.add_subcommand("aut", "Automorphism matrix for given parameters"))
        ->add_option("--params", o.params, "alpha=p/q,beta=p/q,...");
    auto* verify = app.add_subcommand("verify-map", "Check whether a map is an automorphism");
    algebra_flags(verify);
    verify->add_option("--map", o.map, "LinearMap JSON file")->required();
    verify->add_option("--seed", o.seed, "Seed of the random smoke test");
    algebra_flags(app.add_subcommand("derivations", "Basis of the derivation algebra"));
    family_flags(app.add_subcommand("compose", "Parameters of a composite automorphism"))
        ->add_option("--params", o.params, "Outer, then inner parameters")
        ->expected(1)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    auto* rep = app.add_subcommand("replay", "Replay the necessity argument, or audit a certificate");
    rep->add_option("--family", o.family, "R0 or R1");
    rep->add_option("--n", o.n, "Family size parameter");
    rep->add_flag("--json", o.json, "Emit the certificate as JSON");
    rep->add_option("--certificate", o.certificate, "Audit a saved certificate instead");

    std::vector<const char*> argv{"leibniz"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return InputError;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        if (cmd == "check-leibniz") return detail::check_leibniz_cmd(o, in, out);
        if (cmd == "series") return detail::series_cmd(o, in, out);
        if (cmd == "classify") return detail::classify_cmd(o, in, out);
        if (cmd == "build") return detail::build_cmd(o, out);
        if (cmd == "aut") return detail::aut_cmd(o, out);
        if (cmd == "verify-map") return detail::verify_map_cmd(o, in, out);
        if (cmd == "derivations") return detail::derivations_cmd(o, in, out);
        if (cmd == "compose") return detail::compose_cmd(o, out);
        if (cmd == "replay") return detail::replay_cmd(o, in, out);
    } catch (const InconsistencyError& e) {
        err << "replay failed: " << e.what() << "\n";
        return PropertyFails;
    } catch (const ResidualError& e) {
        err << "replay failed: " << e.what() << "\n";
        return PropertyFails;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return InputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return InputError;
    }
    err << "unknown command '" << cmd << "'\n";
    return InputError;
}

} // namespace leibniz::cli
