#include "pfaff/printer.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace pfaff {

namespace {

std::string rational_text(const Rational& q) { return q.get_str(); }

struct CoeffText {
    bool negative = false;
    std::string text;
    bool is_unit = false;  // magnitude exactly 1 (real): elidable before a monomial
};

CoeffText format_coefficient(const GaussianRational& c) {
    CoeffText out;
    if (c.im == 0) {
        out.negative = c.re < 0;
        Rational mag = out.negative ? Rational(-c.re) : c.re;
        out.is_unit = (mag == 1);
        out.text = rational_text(mag);
        return out;
    }
    if (c.re == 0) {
        out.negative = c.im < 0;
        Rational mag = out.negative ? Rational(-c.im) : c.im;
        out.text = mag == 1 ? "i" : rational_text(mag) + "i";
        return out;
    }
    Rational im_mag = c.im < 0 ? Rational(-c.im) : c.im;
    std::ostringstream s;
    s << "(" << rational_text(c.re) << (c.im < 0 ? " - " : " + ")
      << (im_mag == 1 ? "i" : rational_text(im_mag) + "i") << ")";
    out.text = s.str();
    return out;
}

std::string monomial_text(const Monomial& m) {
    std::ostringstream s;
    bool first = true;
    for (size_t i = 0; i < m.exponents.size(); ++i) {
        if (m.exponents[i] == 0) continue;
        if (!first) s << "*";
        first = false;
        s << "z" << (i + 1);
        if (m.exponents[i] > 1) s << "^" << m.exponents[i];
    }
    return s.str();
}

std::string tuple_text(const IndexTuple& idx) {
    std::ostringstream s;
    for (size_t i = 0; i < idx.size(); ++i) {
        if (i) s << "/\\";
        s << "dz" << idx[i];
    }
    return s.str();
}

struct FlatTerm {
    Monomial mono;
    IndexTuple tuple;
    GaussianRational coeff;
};

std::string join_terms(const std::vector<FlatTerm>& terms) {
    if (terms.empty()) return "0";
    std::ostringstream s;
    bool first = true;
    for (const auto& t : terms) {
        CoeffText c = format_coefficient(t.coeff);
        if (first) {
            if (c.negative) s << "-";
        } else {
            s << (c.negative ? " - " : " + ");
        }
        first = false;
        std::string mono = monomial_text(t.mono);
        std::string tup = tuple_text(t.tuple);
        std::vector<std::string> parts;
        if (!c.is_unit) parts.push_back(c.text);
        if (!mono.empty()) parts.push_back(mono);
        if (!tup.empty()) parts.push_back(tup);
        if (parts.empty()) parts.push_back(c.text);  // bare constant 1
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) s << "*";
            s << parts[i];
        }
    }
    return s.str();
}

void sort_flat(std::vector<FlatTerm>& terms) {
    std::sort(terms.begin(), terms.end(), [](const FlatTerm& a, const FlatTerm& b) {
        GrlexGreater cmp;
        if (cmp(a.mono, b.mono)) return true;
        if (cmp(b.mono, a.mono)) return false;
        return a.tuple < b.tuple;
    });
}

}  // namespace

std::string print_canonical(const GaussianRational& c) {
    if (c.is_zero()) return "0";
    CoeffText t = format_coefficient(c);
    return (t.negative ? "-" : "") + t.text;
}

std::string print_canonical(const Polynomial& p) {
    std::vector<FlatTerm> flat;
    flat.reserve(p.terms().size());
    for (const auto& [m, c] : p.terms()) flat.push_back({m, {}, c});
    sort_flat(flat);
    return join_terms(flat);
}

std::string print_canonical(const KForm& w) {
    std::vector<FlatTerm> flat;
    for (const auto& [idx, poly] : w.terms())
        for (const auto& [m, c] : poly.terms()) flat.push_back({m, idx, c});
    sort_flat(flat);
    return join_terms(flat);
}

std::string print_canonical(const VectorField& x) {
    std::ostringstream s;
    s << "[";
    for (uint32_t i = 0; i < x.n; ++i) {
        if (i) s << ", ";
        s << print_canonical(x.components[i]);
    }
    s << "]";
    return s.str();
}

}  // namespace pfaff
