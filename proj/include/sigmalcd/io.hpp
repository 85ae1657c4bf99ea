#pragma once

// Text formats. Blank lines and lines starting with '#' are ignored on input.
//
//   field spec   p^e  or  q  with an optional  :c0,c1,...,ce  modulus
//   polynomial   c0,c1,...  little-endian encodings ("0" or "" for zero)
//   code file    q n k / k rows of n encodings
//   sigma file   perm: ... / diag: ... / frob: s
//   gqc file     q l / m_1 ... m_l / one generator per line, "poly;poly;..."
//   product spec q / per component: m r k, then k rows of r encodings over
//                GF(q^d) with the default modulus

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "code.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "gqc.hpp"
#include "poly.hpp"

namespace sigmalcd::io {

namespace detail {

inline std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(trim(cur));
    return out;
}

inline std::uint64_t parse_uint(std::string_view tok, std::string_view what) {
    const std::string t = trim(tok);
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
        throw Error(ErrorKind::Parse, "expected a nonnegative integer for " + std::string(what) + ", got '" + t + "'");
    try {
        return std::stoull(t);
    } catch (const std::out_of_range&) {
        throw Error(ErrorKind::Parse, std::string(what) + " out of range");
    }
}

inline long long parse_int(std::string_view tok, std::string_view what) {
    const std::string t = trim(tok);
    if (!t.empty() && t[0] == '-') return -static_cast<long long>(parse_uint(t.substr(1), what));
    return static_cast<long long>(parse_uint(t, what));
}

/// Next non-empty, non-comment line, or false at end of input.
inline bool next_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        line = trim(line);
        if (!line.empty() && line[0] != '#') return true;
    }
    return false;
}

inline std::string require_line(std::istream& in, std::string_view what) {
    std::string line;
    if (!next_line(in, line)) throw Error(ErrorKind::Parse, "unexpected end of input, expected " + std::string(what));
    return line;
}

inline std::vector<std::string> words(std::string_view line) {
    std::istringstream ss{std::string(line)};
    std::vector<std::string> out;
    for (std::string w; ss >> w;) out.push_back(w);
    return out;
}

inline Elem parse_elem(const Field& f, std::string_view tok) {
    const std::uint64_t v = parse_uint(tok, "field element");
    if (v >= f.size()) throw Error(ErrorKind::Parse, "element " + std::to_string(v) + " outside " + f.to_string());
    return static_cast<Elem>(v);
}

}  // namespace detail

inline Field parse_field(std::string_view spec) {
    const std::string s = detail::trim(spec);
    const auto colon = s.find(':');
    const std::string head = s.substr(0, colon);
    std::optional<std::vector<std::uint32_t>> modulus;
    if (colon != std::string::npos) {
        std::vector<std::uint32_t> m;
        for (const auto& t : detail::split(std::string_view(s).substr(colon + 1), ','))
            m.push_back(static_cast<std::uint32_t>(detail::parse_uint(t, "modulus coefficient")));
        modulus = std::move(m);
    }
    const auto caret = head.find('^');
    if (caret == std::string::npos) {
        const std::uint64_t q = detail::parse_uint(head, "field order");
        if (!modulus) return Field::of_order(q);
        const Field base = Field::of_order(q);
        return Field::make(base.characteristic(), base.degree(), modulus);
    }
    const auto p = detail::parse_uint(head.substr(0, caret), "characteristic");
    const auto e = detail::parse_uint(head.substr(caret + 1), "extension degree");
    if (p > 0xffffffffull || e > 64) throw Error(ErrorKind::Parse, "field spec out of range");
    return Field::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(e), modulus);
}

/// "p^e", with ":modulus" only when the modulus is not the default one.
inline std::string format_field(const Field& f) {
    std::string s = f.to_string();
    if (f.modulus() != Field::make(f.characteristic(), f.degree()).modulus()) {
        s += ':';
        for (std::size_t i = 0; i < f.modulus().size(); ++i) {
            if (i) s += ',';
            s += std::to_string(f.modulus()[i]);
        }
    }
    return s;
}

inline Poly parse_poly(const Field& f, std::string_view text) {
    const std::string t = detail::trim(text);
    if (t.empty()) return Poly::zero(f);
    Vec c;
    for (const auto& tok : detail::split(t, ',')) c.push_back(detail::parse_elem(f, tok));
    return {f, std::move(c)};
}

inline std::string format_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p.coeffs()[i]);
    }
    return s;
}

inline Vec parse_vector(const Field& f, std::string_view line, std::size_t n) {
    const auto w = detail::words(line);
    if (w.size() != n)
        throw Error(ErrorKind::Parse, "expected " + std::to_string(n) + " entries, got " + std::to_string(w.size()));
    Vec v;
    for (const auto& t : w) v.push_back(detail::parse_elem(f, t));
    return v;
}

inline std::string format_vector(std::span<const Elem> v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(v[i]);
    }
    return s;
}

inline LinearCode read_code(std::istream& in) {
    const auto head = detail::words(detail::require_line(in, "code header 'q n k'"));
    if (head.size() != 3) throw Error(ErrorKind::Parse, "code header must be 'q n k'");
    const Field f = parse_field(head[0]);
    const auto n = static_cast<std::size_t>(detail::parse_uint(head[1], "n"));
    const auto k = static_cast<std::size_t>(detail::parse_uint(head[2], "k"));
    if (k > n) throw Error(ErrorKind::Parse, "k exceeds n");
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < k; ++i) rows.push_back(parse_vector(f, detail::require_line(in, "code row"), n));
    return LinearCode::from_rows(f, n, rows);
}

inline LinearCode parse_code(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_code(in);
}

inline void write_code(std::ostream& out, const LinearCode& c) {
    out << format_field(c.field()) << ' ' << c.length() << ' ' << c.dimension() << '\n';
    for (std::size_t i = 0; i < c.dimension(); ++i) out << format_vector(c.generator().row(i)) << '\n';
}

inline std::string format_code(const LinearCode& c) {
    std::ostringstream os;
    write_code(os, c);
    return os.str();
}

inline SemiLinearMap read_sigma(std::istream& in, const Field& f, std::size_t n) {
    std::optional<std::vector<std::size_t>> perm;
    std::optional<Vec> diag;
    std::optional<unsigned> frob;
    std::string line;
    while (detail::next_line(in, line)) {
        const auto colon = line.find(':');
        if (colon == std::string::npos) throw Error(ErrorKind::Parse, "sigma line without 'key:' prefix");
        const std::string key = detail::trim(std::string_view(line).substr(0, colon));
        const std::string rest = line.substr(colon + 1);
        if (key == "perm") {
            std::vector<std::size_t> p;
            for (const auto& t : detail::words(rest)) p.push_back(static_cast<std::size_t>(detail::parse_uint(t, "perm")));
            perm = std::move(p);
        } else if (key == "diag") {
            Vec d;
            for (const auto& t : detail::words(rest)) d.push_back(detail::parse_elem(f, t));
            diag = std::move(d);
        } else if (key == "frob") {
            frob = static_cast<unsigned>(detail::parse_uint(rest, "frob"));
        } else {
            throw Error(ErrorKind::Parse, "unknown sigma key '" + key + "'");
        }
    }
    if (!perm || !diag || !frob) throw Error(ErrorKind::Parse, "sigma file needs perm, diag and frob lines");
    if (perm->size() != n || diag->size() != n)
        throw Error(ErrorKind::LengthMismatch, "sigma length differs from code length " + std::to_string(n));
    return {f, std::move(*perm), std::move(*diag), *frob};
}

inline SemiLinearMap parse_sigma(std::string_view text, const Field& f, std::size_t n) {
    std::istringstream in{std::string(text)};
    return read_sigma(in, f, n);
}

inline void write_sigma(std::ostream& out, const SemiLinearMap& s) {
    out << "perm:";
    for (auto p : s.perm()) out << ' ' << p;
    out << "\ndiag:";
    for (auto d : s.diag()) out << ' ' << d;
    out << "\nfrob: " << s.frob() << '\n';
}

inline std::string format_sigma(const SemiLinearMap& s) {
    std::ostringstream os;
    write_sigma(os, s);
    return os.str();
}

/// Generator tuple "poly;poly;..." with exactly l entries.
inline std::vector<Poly> parse_tuple(const Field& f, std::string_view line, std::size_t l) {
    const auto parts = detail::split(line, ';');
    if (parts.size() != l)
        throw Error(ErrorKind::Parse, "generator has " + std::to_string(parts.size()) + " blocks, expected " +
                                          std::to_string(l));
    std::vector<Poly> out;
    for (const auto& p : parts) out.push_back(parse_poly(f, p));
    return out;
}

inline GqcCode read_gqc(std::istream& in) {
    const auto head = detail::words(detail::require_line(in, "gqc header 'q l'"));
    if (head.size() != 2) throw Error(ErrorKind::Parse, "gqc header must be 'q l'");
    const Field f = parse_field(head[0]);
    const auto l = static_cast<std::size_t>(detail::parse_uint(head[1], "l"));
    std::vector<std::size_t> blocks;
    for (const auto& t : detail::words(detail::require_line(in, "block lengths")))
        blocks.push_back(static_cast<std::size_t>(detail::parse_uint(t, "block length")));
    if (blocks.size() != l) throw Error(ErrorKind::Parse, "expected " + std::to_string(l) + " block lengths");
    std::vector<std::vector<Poly>> gens;
    std::string line;
    while (detail::next_line(in, line)) gens.push_back(parse_tuple(f, line, l));
    return GqcCode::from_generators(f, std::move(blocks), gens);
}

inline GqcCode parse_gqc(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_gqc(in);
}

inline void write_gqc(std::ostream& out, const GqcCode& c) {
    out << format_field(c.field()) << ' ' << c.block_count() << '\n';
    for (std::size_t j = 0; j < c.block_count(); ++j) out << (j ? " " : "") << c.blocks()[j];
    out << '\n';
    for (const auto& g : c.generators()) {
        for (std::size_t j = 0; j < g.size(); ++j) out << (j ? ";" : "") << format_poly(g[j]);
        out << '\n';
    }
}

struct ProductSpec {
    Field q;
    std::vector<ProductComponent> components;
};

inline ProductSpec read_product_spec(std::istream& in) {
    ProductSpec spec;
    spec.q = parse_field(detail::require_line(in, "field line"));
    std::string line;
    while (detail::next_line(in, line)) {
        const auto w = detail::words(line);
        if (w.size() != 3) throw Error(ErrorKind::Parse, "component header must be 'm r k'");
        ProductComponent comp;
        comp.m = static_cast<std::size_t>(detail::parse_uint(w[0], "m"));
        comp.r = static_cast<std::size_t>(detail::parse_uint(w[1], "r"));
        const auto k = static_cast<std::size_t>(detail::parse_uint(w[2], "k"));
        if (comp.m == 0 || std::gcd<std::uint64_t, std::uint64_t>(comp.m, spec.q.size()) != 1)
            throw Error(ErrorKind::GcdNotOne, "component block length not coprime to q");
        const Field cf = component_field(spec.q, comp.m);
        std::vector<Vec> rows;
        for (std::size_t i = 0; i < k; ++i)
            rows.push_back(parse_vector(cf, detail::require_line(in, "component row"), comp.r));
        comp.code = LinearCode::from_rows(cf, comp.r, rows);
        spec.components.push_back(std::move(comp));
    }
    return spec;
}

inline ProductSpec parse_product_spec(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_product_spec(in);
}

}  // namespace sigmalcd::io
