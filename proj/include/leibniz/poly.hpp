#pragma once

// Sparse multivariate polynomials over Q with named variables.
//
// Variables are ordered "naturally" (digit runs compare numerically, so
// a_{2,1} < a_{10,1}); terms are kept in graded-lex order, largest first,
// which is also the printing order. Two polynomials print identically iff
// they are equal.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "leibniz/errors.hpp"
#include "leibniz/exactnum.hpp"

namespace leibniz {

/// Natural ordering of variable names.
struct VarLess {
    bool operator()(std::string_view a, std::string_view b) const { return compare(a, b) < 0; }

    static int compare(std::string_view a, std::string_view b) {
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            const bool da = std::isdigit(static_cast<unsigned char>(a[i]));
            const bool db = std::isdigit(static_cast<unsigned char>(b[j]));
            if (da && db) {
                std::size_t ie = i, je = j;
                while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
                while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
                const mpz_class na(std::string(a.substr(i, ie - i))), nb(std::string(b.substr(j, je - j)));
                if (na != nb) return na < nb ? -1 : 1;
                i = ie;
                j = je;
            } else {
                if (a[i] != b[j]) return a[i] < b[j] ? -1 : 1;
                ++i;
                ++j;
            }
        }
        if (i < a.size()) return 1;
        if (j < b.size()) return -1;
        return a < b ? -1 : (b < a ? 1 : 0);
    }
};

using VarSet = std::set<std::string, VarLess>;

/// Product of variables with positive exponents, sorted by VarLess.
class Monomial {
public:
    using Factor = std::pair<std::string, unsigned>;

    Monomial() = default;

    static Monomial variable(std::string name, unsigned exponent = 1) {
        Monomial m;
        if (exponent > 0) m.factors_.emplace_back(std::move(name), exponent);
        return m;
    }

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }

    unsigned degree() const {
        unsigned d = 0;
        for (const auto& f : factors_) d += f.second;
        return d;
    }

    unsigned exponent(std::string_view var) const {
        for (const auto& f : factors_)
            if (f.first == var) return f.second;
        return 0;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial out;
        std::size_t i = 0, j = 0;
        while (i < factors_.size() || j < o.factors_.size()) {
            if (j == o.factors_.size() || (i < factors_.size() && VarLess{}(factors_[i].first, o.factors_[j].first))) {
                out.factors_.push_back(factors_[i++]);
            } else if (i == factors_.size() || VarLess{}(o.factors_[j].first, factors_[i].first)) {
                out.factors_.push_back(o.factors_[j++]);
            } else {
                out.factors_.emplace_back(factors_[i].first, factors_[i].second + o.factors_[j].second);
                ++i;
                ++j;
            }
        }
        return out;
    }

    /// this / d when d divides this.
    std::optional<Monomial> divide(const Monomial& d) const {
        Monomial out = *this;
        for (const auto& [var, e] : d.factors_) {
            auto it = std::find_if(out.factors_.begin(), out.factors_.end(),
                                   [&](const Factor& f) { return f.first == var; });
            if (it == out.factors_.end() || it->second < e) return std::nullopt;
            it->second -= e;
            if (it->second == 0) out.factors_.erase(it);
        }
        return out;
    }

    Monomial without(std::string_view var) const {
        Monomial out;
        for (const auto& f : factors_)
            if (f.first != var) out.factors_.push_back(f);
        return out;
    }

    std::string to_string() const {
        std::string s;
        for (const auto& [var, e] : factors_) {
            if (!s.empty()) s += '*';
            s += var;
            if (e > 1) s += '^' + std::to_string(e);
        }
        return s;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

private:
    std::vector<Factor> factors_;
};

/// Graded lexicographic comparison: -1, 0 or 1.
inline int grlex_compare(const Monomial& a, const Monomial& b) {
    const unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t i = 0;
    for (; i < fa.size() && i < fb.size(); ++i) {
        const int c = VarLess::compare(fa[i].first, fb[i].first);
        if (c != 0) return c < 0 ? 1 : -1;
        if (fa[i].second != fb[i].second) return fa[i].second < fb[i].second ? -1 : 1;
    }
    if (i < fa.size()) return 1;
    if (i < fb.size()) return -1;
    return 0;
}

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

class Poly {
public:
    using Terms = std::map<Monomial, Scalar, GrlexGreater>;

    Poly() = default;
    Poly(const Scalar& c) {  // NOLINT(google-explicit-constructor): constants promote naturally
        if (sgn(c) != 0) terms_[Monomial()] = c;
    }
    Poly(long c) : Poly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)

    static Poly variable(const std::string& name) {
        Poly p;
        p.terms_[Monomial::variable(name)] = 1;
        return p;
    }

    static Poly term(const Scalar& c, Monomial m) {
        Poly p;
        if (sgn(c) != 0) p.terms_[std::move(m)] = c;
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

    Scalar constant() const {
        auto it = terms_.find(Monomial());
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    /// Leading (grlex-largest) coefficient; zero for the zero polynomial.
    Scalar leading_coefficient() const { return terms_.empty() ? Scalar(0) : terms_.begin()->second; }

    VarSet variables() const {
        VarSet out;
        for (const auto& [m, c] : terms_)
            for (const auto& f : m.factors()) out.insert(f.first);
        return out;
    }

    unsigned degree_in(std::string_view var) const {
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(var));
        return d;
    }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    Poly& operator*=(const Scalar& k) {
        if (sgn(k) == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= k;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) { return a *= Scalar(-1); }
    friend Poly operator*(Poly a, const Scalar& k) { return a *= k; }
    friend Poly operator*(const Scalar& k, Poly a) { return a *= k; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
        return out;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(unsigned e) const {
        Poly out(1);
        for (unsigned i = 0; i < e; ++i) out = out * *this;
        return out;
    }

    /// Simultaneous substitution of variables by polynomials.
    Poly substitute(const std::map<std::string, Poly, VarLess>& values) const {
        if (values.empty()) return *this;
        Poly out;
        std::map<std::pair<std::string, unsigned>, Poly> powers;
        for (const auto& [m, c] : terms_) {
            Poly t(c);
            Monomial rest;
            for (const auto& [var, e] : m.factors()) {
                auto it = values.find(var);
                if (it == values.end()) {
                    rest = rest * Monomial::variable(var, e);
                    continue;
                }
                auto key = std::make_pair(var, e);
                auto pw = powers.find(key);
                if (pw == powers.end()) pw = powers.emplace(key, it->second.pow(e)).first;
                t = t * pw->second;
            }
            out += t * Poly::term(1, rest);
        }
        return out;
    }

    Poly substitute(const std::string& var, const Poly& value) const {
        return substitute(std::map<std::string, Poly, VarLess>{{var, value}});
    }

    Poly rename(const std::map<std::string, std::string>& names) const {
        std::map<std::string, Poly, VarLess> values;
        for (const auto& [from, to] : names) values.emplace(from, Poly::variable(to));
        return substitute(values);
    }

    Scalar evaluate(const std::map<std::string, Scalar>& assignment) const {
        Scalar out(0);
        for (const auto& [m, c] : terms_) {
            Scalar t = c;
            for (const auto& [var, e] : m.factors()) {
                auto it = assignment.find(var);
                if (it == assignment.end()) throw MissingVariableError("no value for variable " + var);
                t *= power(it->second, e);
            }
            out += t;
        }
        return out;
    }

    /// (c, r) with *this = c * var + r and var absent from c and r. Only
    /// meaningful when degree_in(var) <= 1.
    std::pair<Poly, Poly> split_linear(std::string_view var) const {
        Poly coeff, rest;
        for (const auto& [m, c] : terms_) {
            if (m.exponent(var) == 1)
                coeff.add_term(m.without(var), c);
            else
                rest.add_term(m, c);
        }
        return {coeff, rest};
    }

    /// Single term c * m, if this polynomial is one.
    std::optional<std::pair<Scalar, Monomial>> as_term() const {
        if (terms_.size() != 1) return std::nullopt;
        return std::make_pair(terms_.begin()->second, terms_.begin()->first);
    }

    /// this / (k * m) when every term is divisible by m.
    std::optional<Poly> divide_exact(const Scalar& k, const Monomial& m) const {
        Poly out;
        for (const auto& [tm, c] : terms_) {
            auto q = tm.divide(m);
            if (!q) return std::nullopt;
            out.add_term(*q, c / k);
        }
        return out;
    }

    /// Scaled so that the leading coefficient is 1.
    Poly monic() const {
        if (is_zero()) return *this;
        return *this * Scalar(1 / leading_coefficient());
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            const bool negative = sgn(c) < 0;
            const Scalar mag = abs(c);
            if (first)
                s += negative ? "-" : "";
            else
                s += negative ? " - " : " + ";
            first = false;
            if (m.is_one()) {
                s += leibniz::to_string(mag);
            } else {
                if (mag != 1) s += leibniz::to_string(mag) + "*";
                s += m.to_string();
            }
        }
        return s;
    }

    /// Inverse of to_string(); also accepts any sum of products of rational
    /// literals and variables with non-negative integer powers.
    static Poly parse(std::string_view text);

private:
    void add_term(const Monomial& m, const Scalar& c) {
        if (sgn(c) == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (inserted) return;
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }

    Terms terms_;
};

inline Scalar poly_eval(const Poly& p, const std::map<std::string, Scalar>& assignment) {
    return p.evaluate(assignment);
}

namespace detail {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : s_(text) {}

    Poly parse() {
        skip();
        if (pos_ == s_.size()) fail("empty polynomial");
        Poly out;
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++pos_;
        }
        Poly t = term();
        out += negate ? -t : t;
        for (skip(); pos_ < s_.size(); skip()) {
            const char op = s_[pos_++];
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            t = term();
            out += op == '-' ? -t : t;
        }
        return out;
    }

private:
    Poly term() {
        Poly out(1);
        out = out * factor();
        for (skip(); pos_ < s_.size() && s_[pos_] == '*'; skip()) {
            ++pos_;
            out = out * factor();
        }
        return out;
    }

    Poly factor() {
        skip();
        if (pos_ == s_.size()) fail("unexpected end");
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string lit = digits();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                lit += '/' + digits();
            }
            return Poly(parse_scalar(lit));
        }
        if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected a number or variable");
        std::string name;
        int depth = 0;
        while (pos_ < s_.size()) {
            const char c = s_[pos_];
            if (c == '{') ++depth;
            if (c == '}') --depth;
            const bool ident = std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '{' || c == '}' ||
                               (c == ',' && depth > 0);
            if (!ident || depth < 0) break;
            name += c;
            ++pos_;
        }
        unsigned e = 1;
        skip();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            skip();
            e = static_cast<unsigned>(std::stoul(digits()));
        }
        return Poly::term(1, Monomial::variable(name, e));
    }

    std::string digits() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return std::string(s_.substr(start, pos_ - start));
    }

    char peek() const { return s_[pos_]; }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what + " in '" +
                         std::string(s_) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Poly Poly::parse(std::string_view text) { return detail::PolyParser(text).parse(); }

} // namespace leibniz
