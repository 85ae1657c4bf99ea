#pragma once

// Command-line front end. run_cli is kept separate from main() so tests can
// drive it with in-memory streams.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sigmalcd/io.hpp"
#include "sigmalcd/sigmalcd.hpp"

namespace sigmalcd::cli {

enum ExitCode : int { kTrue = 0, kFalse = 1, kInputError = 2, kDiscrepancy = 3 };

enum class Format { Human, Machine };

/// Ordered key/value report. The elapsed field is appended at print time.
class Report {
public:
    explicit Report(std::string command) : command_(std::move(command)) {}

    void add(const std::string& key, const std::string& value) { fields_.emplace_back(key, value); }
    void add(const std::string& key, const char* value) { add(key, std::string(value)); }
    void add(const std::string& key, bool value) { add(key, std::string(value ? "true" : "false")); }
    void add(const std::string& key, std::size_t value) { add(key, std::to_string(value)); }
    void add(const std::string& key, const std::optional<std::size_t>& value) {
        add(key, value ? std::to_string(*value) : std::string("unknown"));
    }

    void verdict(bool v) {
        verdict_ = v;
        add("verdict", v);
    }
    void verification(bool agree) {
        agree_ = agree;
        add("verification", std::string(agree ? "agree" : "disagree"));
    }

    int exit_code() const {
        if (!agree_) return kDiscrepancy;
        if (verdict_ && !*verdict_) return kFalse;
        return kTrue;
    }

    void print(std::ostream& out, Format fmt, double seconds) const {
        std::ostringstream el;
        el << std::fixed << std::setprecision(6) << seconds;
        if (fmt == Format::Machine) {
            out << "command=" << command_ << '\n';
            for (const auto& [k, v] : fields_) out << k << '=' << v << '\n';
            out << "elapsed=" << el.str() << '\n';
            return;
        }
        std::size_t width = 7;
        for (const auto& kv : fields_) width = std::max(width, kv.first.size());
        out << command_ << '\n';
        for (const auto& [k, v] : fields_) out << "  " << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << '\n';
        out << "  " << std::left << std::setw(static_cast<int>(width)) << "elapsed" << "  " << el.str() << " s\n";
    }

private:
    std::string command_;
    std::vector<std::pair<std::string, std::string>> fields_;
    std::optional<bool> verdict_;
    bool agree_ = true;
};

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), {}};
}

inline LinearCode load_code(const std::string& path) { return io::parse_code(read_file(path)); }

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Parse, "cannot write '" + path + "'");
    out << text;
}

/// id | identity | reversal | frobenius:<s> | <file>
inline SemiLinearMap resolve_sigma(const std::string& spec, const Field& f, std::size_t n) {
    if (spec == "id" || spec == "identity") return SemiLinearMap::identity(f, n);
    if (spec == "reversal") return SemiLinearMap::reversal(f, n);
    if (spec.rfind("frobenius:", 0) == 0) {
        const auto s = io::detail::parse_uint(std::string_view(spec).substr(10), "frobenius power");
        return SemiLinearMap::frobenius(f, n, static_cast<unsigned>(s));
    }
    return io::parse_sigma(read_file(spec), f, n);
}

template <class Seq>
std::string join(const Seq& xs, const std::string& sep = " ") {
    std::ostringstream os;
    bool first = true;
    for (const auto& x : xs) {
        if (!first) os << sep;
        os << x;
        first = false;
    }
    return os.str();
}

inline std::string rows(const Matrix& g) {
    std::vector<std::string> r;
    for (std::size_t i = 0; i < g.rows(); ++i) r.push_back(io::format_vector(g.row(i)));
    return join(r, " | ");
}

inline void add_sigma(Report& rep, const SemiLinearMap& s) {
    rep.add("sigma_perm", join(s.perm()));
    rep.add("sigma_diag", join(s.diag()));
    rep.add("sigma_frob", static_cast<std::size_t>(s.frob()));
}

inline void add_code(Report& rep, const std::string& prefix, const LinearCode& c) {
    rep.add(prefix + "_q", io::format_field(c.field()));
    rep.add(prefix + "_n", c.length());
    rep.add(prefix + "_k", c.dimension());
    rep.add(prefix + "_rows", rows(c.generator()));
}

inline std::string tuple_text(const std::vector<Poly>& g) {
    std::vector<std::string> parts;
    for (const auto& p : g) parts.push_back(io::format_poly(p));
    return join(parts, ";");
}

inline std::vector<Poly> single_generator(const GqcCode& c) {
    if (c.generators().size() != 1)
        throw Error(ErrorKind::Parse, "1-generator command needs exactly one generator line");
    return c.generators()[0];
}

/// Coordinate permutation of mu_a, built directly from the exponent map.
inline SemiLinearMap mu_a_oracle_map(const Field& f, const std::vector<std::size_t>& blocks, long long a) {
    std::vector<std::size_t> perm;
    std::size_t base = 0;
    for (auto mj : blocks) {
        const long long m = static_cast<long long>(mj);
        for (long long i = 0; i < m; ++i) perm.push_back(base + static_cast<std::size_t>((((a * i) % m) + m) % m));
        base += mj;
    }
    return SemiLinearMap::permutation(f, std::move(perm));
}

inline Poly golay_generator() { return {Field::prime(2), {1, 1, 0, 0, 0, 1, 1, 1, 0, 1, 0, 1}}; }

}  // namespace detail

struct GlobalOptions {
    std::string format = "human";
    unsigned jobs = 1;
    std::uint64_t budget = EnumerationBudget{}.max_words;

    EnumerationBudget enumeration() const {
        EnumerationBudget b;
        b.max_words = budget;
        return b;
    }
};

// ---------------------------------------------------------------------------
// Commands. Each returns a filled report; exit status comes from the report.

inline Report cmd_lcd_check(const std::string& code_path, const std::string& sigma_spec, const std::string& test) {
    const LinearCode c = detail::load_code(code_path);
    const SemiLinearMap s = detail::resolve_sigma(sigma_spec, c.field(), c.length());
    const std::size_t h = hull_dim(c, s), oh = sigmalcd::detail::oracle_hull_dim(c, s);
    auto decide = [&](std::size_t hull) {
        if (test == "lcd") return hull == 0;
        if (test == "so") return hull == c.dimension();
        return hull == c.dimension() && 2 * c.dimension() == c.length();
    };
    Report rep("lcd check");
    rep.add("code", code_path);
    rep.add("q", io::format_field(c.field()));
    rep.add("n", c.length());
    rep.add("k", c.dimension());
    rep.add("sigma", sigma_spec);
    rep.add("test", test);
    rep.add("hull_dim", h);
    rep.add("oracle_hull_dim", oh);
    rep.verdict(decide(h));
    rep.verification(decide(h) == decide(oh));
    return rep;
}

inline Report cmd_lcd_make(const std::string& code_path, const std::string& out_code, const std::string& out_sigma) {
    const LinearCode c = detail::load_code(code_path);
    const LcdConstruction r = make_lcd_sigma(c);
    const std::size_t oh = sigmalcd::detail::oracle_hull_dim(r.code, r.sigma);
    if (!out_code.empty()) detail::write_file(out_code, io::format_code(r.code));
    if (!out_sigma.empty()) detail::write_file(out_sigma, io::format_sigma(r.sigma));
    Report rep("lcd make");
    rep.add("code", code_path);
    rep.add("q", io::format_field(c.field()));
    rep.add("n_in", c.length());
    rep.add("n_out", r.code.length());
    rep.add("k", r.code.dimension());
    detail::add_sigma(rep, r.sigma);
    rep.add("code_rows", detail::rows(r.code.generator()));
    rep.add("hull_dim", hull_dim(r.code, r.sigma));
    rep.add("oracle_hull_dim", oh);
    rep.verdict(is_sigma_lcd(r.code, r.sigma));
    rep.verification(oh == 0);
    return rep;
}

inline Report cmd_lcd_normalize(const std::string& code_path) {
    const LinearCode c = detail::load_code(code_path);
    const HullNormalForm nf = normalize_hull(c);
    const std::size_t oh = sigmalcd::detail::oracle_hull_dim(c, SemiLinearMap::identity(c.field(), c.length()));
    Report rep("lcd normalize");
    rep.add("code", code_path);
    rep.add("q", io::format_field(c.field()));
    rep.add("n", c.length());
    rep.add("k", c.dimension());
    rep.add("h", nf.h);
    rep.add("pi", detail::join(nf.pi.perm()));
    rep.add("g_rows", detail::rows(nf.g));
    rep.add("oracle_hull_dim", oh);
    rep.verification(oh == nf.h && LinearCode::from_matrix(nf.g) == apply_sigma(nf.pi, c));
    return rep;
}

inline Report cmd_lcp_build(const std::string& p1, const std::string& p2, const GlobalOptions& g) {
    const LinearCode c1 = detail::load_code(p1), c2 = detail::load_code(p2);
    const LcpPair p = build_lcp(c1, c2, g.enumeration());
    const std::size_t inter = brute_intersection_dim(p.c1, p.c2);
    const std::size_t span = rank(vstack(p.c1.generator(), p.c2.generator()));
    Report rep("lcp build");
    rep.add("code1", p1);
    rep.add("code2", p2);
    rep.add("q", io::format_field(c1.field()));
    rep.add("n", p.n);
    rep.add("k", p.k);
    rep.add("d1", p.d1);
    rep.add("d2", p.d2);
    detail::add_sigma(rep, p.sigma);
    rep.add("c1_rows", detail::rows(p.c1.generator()));
    rep.add("c2_rows", detail::rows(p.c2.generator()));
    rep.add("oracle_intersection_dim", inter);
    rep.add("oracle_sum_rank", span);
    rep.verification(inter == 0 && span == p.n && p.c1.dimension() + p.c2.dimension() == p.n);
    return rep;
}

inline Report cmd_gqc_cosets(std::uint64_t q, std::size_t m) {
    const CyclotomicContext ctx(Field::of_order(q), m);
    Report rep("gqc cosets");
    rep.add("q", static_cast<std::size_t>(q));
    rep.add("m", m);
    rep.add("cosets", ctx.cosets().size());
    for (std::size_t c = 0; c < ctx.cosets().size(); ++c)
        rep.add("coset_" + std::to_string(ctx.leaders()[c]), detail::join(ctx.cosets()[c]));
    return rep;
}

inline Report cmd_gqc_gamma(std::uint64_t q, std::size_t m) {
    const CyclotomicContext ctx(Field::of_order(q), m);
    const GammaPartition g = gamma_partition(ctx);
    Report rep("gqc gamma");
    rep.add("q", static_cast<std::size_t>(q));
    rep.add("m", m);
    rep.add("gamma0_plus", detail::join(g.gamma0_plus));
    rep.add("gamma0_minus", detail::join(g.gamma0_minus));
    rep.add("gamma1", detail::join(g.gamma1));
    for (std::size_t i : ctx.leaders())
        rep.add("minpoly_" + std::to_string(i), io::format_poly(ctx.minimal_polynomial(static_cast<long long>(i))));
    return rep;
}

inline Report cmd_gqc_constituents(const std::string& path) {
    const GqcCode c = io::parse_gqc(detail::read_file(path));
    const CyclotomicContext ctx(c.field(), c.m());
    Report rep("gqc constituents");
    rep.add("file", path);
    rep.add("q", io::format_field(c.field()));
    rep.add("blocks", detail::join(c.blocks()));
    rep.add("m", c.m());
    rep.add("ext", io::format_field(ctx.ext()));
    rep.add("k", c.flat().dimension());
    std::size_t total = 0;
    for (std::size_t i : ctx.leaders()) {
        const Constituent con = constituent(c, ctx, static_cast<long long>(i));
        const std::size_t size = ctx.coset_of(static_cast<long long>(i)).size();
        total += size * con.dimension();
        rep.add("constituent_" + std::to_string(i),
                "dim " + std::to_string(con.dimension()) + " of " + std::to_string(con.ambient_dim()) + ", degree " +
                    std::to_string(size));
    }
    rep.add("sum_of_degree_times_dim", total);
    rep.verification(total == c.flat().dimension());
    return rep;
}

inline Report cmd_gqc_check(const std::string& path, long long a, const std::string& test) {
    const GqcCode c = io::parse_gqc(detail::read_file(path));
    const CyclotomicContext ctx(c.field(), c.m());
    bool v = false;
    if (test == "lcd") v = is_mua_lcd(c, ctx, a);
    else if (test == "so") v = is_mua_self_orthogonal(c, ctx, a);
    else v = is_mua_self_dual(c, ctx, a);
    const std::size_t k = c.flat().dimension();
    const std::size_t oh = sigmalcd::detail::oracle_hull_dim(c.flat(), detail::mu_a_oracle_map(c.field(), c.blocks(), a));
    bool ov = oh == 0;
    if (test == "so") ov = oh == k;
    if (test == "sd") ov = oh == k && 2 * k == c.length();
    Report rep("gqc check");
    rep.add("file", path);
    rep.add("q", io::format_field(c.field()));
    rep.add("blocks", detail::join(c.blocks()));
    rep.add("a", std::to_string(a));
    rep.add("test", test);
    rep.add("n", c.length());
    rep.add("k", k);
    rep.add("oracle_hull_dim", oh);
    rep.verdict(v);
    rep.verification(v == ov);
    return rep;
}

inline Report cmd_gqc_onegen(const std::string& path, long long a) {
    const GqcCode c = io::parse_gqc(detail::read_file(path));
    const auto gen = detail::single_generator(c);
    const CyclotomicContext ctx(c.field(), c.m());
    const bool eval = one_gen_lcd_eval(c.field(), gen, c.blocks(), ctx, a);
    const std::size_t oh = sigmalcd::detail::oracle_hull_dim(c.flat(), detail::mu_a_oracle_map(c.field(), c.blocks(), a));
    Report rep("gqc onegen");
    rep.add("file", path);
    rep.add("q", io::format_field(c.field()));
    rep.add("blocks", detail::join(c.blocks()));
    rep.add("a", std::to_string(a));
    rep.add("generator", detail::tuple_text(gen));
    rep.add("k", c.flat().dimension());
    rep.add("lcd_eval", eval);
    bool agree = eval == (oh == 0);
    if (c.is_quasi_cyclic()) {
        const bool g = one_gen_lcd_gcd(c.field(), gen, c.blocks(), a);
        rep.add("lcd_gcd", g);
        rep.add("pairing_poly", io::format_poly(mu_a_pairing_poly(c.field(), gen, c.m(), a)));
        rep.add("tuple_gcd", io::format_poly(tuple_gcd(c.field(), gen, c.m())));
        const MaximalCheck mx = maximal_one_gen_check(c.field(), gen, c.blocks(), a);
        rep.add("maximal", mx.maximal);
        if (mx.canonical) rep.add("canonical_c", io::format_poly(*mx.canonical));
        agree = agree && g == eval;
    }
    rep.add("self_orthogonal", one_gen_self_orthogonal(c.field(), gen, c.blocks(), ctx, a));
    rep.add("oracle_hull_dim", oh);
    rep.verdict(eval);
    rep.verification(agree);
    return rep;
}

inline Report cmd_gqc_product(const std::string& path, const GlobalOptions& g) {
    const io::ProductSpec spec = io::parse_product_spec(detail::read_file(path));
    const ProductResult r = product_lcd_gqc(spec.q, spec.components, g.enumeration());
    const LinearCode& flat = r.code.flat();
    const std::size_t oh = sigmalcd::detail::oracle_hull_dim(flat, detail::mu_a_oracle_map(spec.q, r.code.blocks(), -1));
    std::optional<std::size_t> d;
    if (flat.dimension() > 0 && word_count(flat) <= g.budget) d = brute_min_distance(flat, g.enumeration(), g.jobs);
    Report rep("gqc product");
    rep.add("file", path);
    rep.add("q", io::format_field(spec.q));
    rep.add("blocks", detail::join(r.code.blocks()));
    rep.add("length", r.length);
    rep.add("dimension", r.dimension);
    rep.add("degrees", detail::join(r.degrees));
    std::vector<std::string> hs, cd, hd;
    for (const auto& h : r.h) hs.push_back(io::format_poly(h));
    for (const auto& x : r.component_distance) cd.push_back(x ? std::to_string(*x) : "unknown");
    for (const auto& x : r.h_distance) hd.push_back(x ? std::to_string(*x) : "unknown");
    rep.add("h_polys", detail::join(hs, " | "));
    rep.add("component_distances", detail::join(cd));
    rep.add("h_distances", detail::join(hd));
    rep.add("distance_bound", r.bound);
    rep.add("distance", d);
    rep.add("oracle_hull_dim", oh);
    rep.verdict(oh == 0);
    rep.verification(oh == 0 && flat.dimension() == r.dimension && (!d || !r.bound || *d >= *r.bound));
    return rep;
}

inline Report cmd_abelian_check(const std::string& group, const std::string& code_path) {
    const AbelianGroup g = AbelianGroup::parse(group);
    const LinearCode c = detail::load_code(code_path);
    if (!is_ideal(c, g)) throw Error(ErrorKind::NotAnIdeal, "code is not an ideal of F_q[G]");
    const bool v = is_abelian_mu1_lcd(c, g);
    const std::size_t oh = sigmalcd::detail::oracle_hull_dim(c, mu_minus1_map(c.field(), g));
    Report rep("abelian check");
    rep.add("group", group);
    rep.add("code", code_path);
    rep.add("q", io::format_field(c.field()));
    rep.add("n", c.length());
    rep.add("k", c.dimension());
    rep.add("oracle_hull_dim", oh);
    rep.verdict(v);
    rep.verification(v == (oh == 0));
    return rep;
}

inline Report cmd_abelian_idempotent(const std::string& group, const std::string& code_path) {
    const AbelianGroup g = AbelianGroup::parse(group);
    const LinearCode c = detail::load_code(code_path);
    const auto e = find_idempotent_generator(c, g);
    const std::size_t oh = sigmalcd::detail::oracle_hull_dim(c, mu_minus1_map(c.field(), g));
    Report rep("abelian idempotent");
    rep.add("group", group);
    rep.add("code", code_path);
    rep.add("q", io::format_field(c.field()));
    rep.add("idempotent", e ? io::format_vector(e->coeffs()) : std::string("none"));
    rep.add("oracle_hull_dim", oh);
    rep.verdict(e.has_value());
    rep.verification(e.has_value() == (oh == 0) && (!e || (is_idempotent(*e) && ideal_from_generator(*e) == c)));
    return rep;
}

inline Report cmd_oracle_mindist(const std::string& path, const GlobalOptions& g) {
    const LinearCode c = detail::load_code(path);
    Report rep("oracle mindist");
    rep.add("code", path);
    rep.add("q", io::format_field(c.field()));
    rep.add("n", c.length());
    rep.add("k", c.dimension());
    rep.add("words", static_cast<std::size_t>(word_count(c)));
    rep.add("d", brute_min_distance(c, g.enumeration(), g.jobs));
    return rep;
}

inline Report cmd_oracle_intersect(const std::string& p1, const std::string& p2) {
    const LinearCode a = detail::load_code(p1), b = detail::load_code(p2);
    const LinearCode i = intersection(a, b);
    Report rep("oracle intersect");
    rep.add("code1", p1);
    rep.add("code2", p2);
    rep.add("dim", i.dimension());
    rep.add("rows", detail::rows(i.generator()));
    rep.verification(a.contains(i) && b.contains(i) && i.dimension() == brute_intersection_dim(a, b));
    return rep;
}

inline Report cmd_oracle_search(const std::string& path, const std::string& family, const GlobalOptions& g) {
    const LinearCode c = detail::load_code(path);
    const auto fam = parse_sigma_family(family);
    if (!fam) throw Error(ErrorKind::Parse, "unknown sigma family '" + family + "'");
    const auto s = exhaustive_sigma_search(c, *fam, g.enumeration());
    Report rep("oracle search-sigma");
    rep.add("code", path);
    rep.add("family", family);
    rep.add("found", s.has_value());
    if (s) {
        detail::add_sigma(rep, *s);
        rep.add("hull_dim", hull_dim(c, *s));
    }
    rep.verdict(s.has_value());
    rep.verification(!s || is_sigma_lcd(c, *s));
    return rep;
}

// ---------------------------------------------------------------------------
// Worked examples

inline Report repro_golay23(const GlobalOptions& g) {
    const Field f = Field::prime(2);
    const GqcCode gc = GqcCode::from_generators(f, {23}, {{detail::golay_generator()}});
    const LinearCode& c = gc.flat();
    const AbelianGroup grp({23});
    const auto e = find_idempotent_generator(c, grp);
    const bool by_hull = is_sigma_lcd(c, mu_minus1_map(f, grp));
    const std::size_t oh = sigmalcd::detail::oracle_hull_dim(c, mu_minus1_map(f, grp));
    const std::size_t eh = hull_dim(c, SemiLinearMap::identity(f, 23));
    const std::size_t d = brute_min_distance(c, g.enumeration(), g.jobs);
    Report rep("repro golay23");
    rep.add("generator", io::format_poly(detail::golay_generator()));
    rep.add("n", c.length());
    rep.add("k", c.dimension());
    rep.add("d", d);
    rep.add("idempotent", e ? io::format_vector(e->coeffs()) : std::string("none"));
    rep.add("mu_minus1_lcd_idempotent", e.has_value());
    rep.add("mu_minus1_lcd_hull", by_hull);
    rep.add("oracle_mu_minus1_hull_dim", oh);
    rep.add("euclidean_hull_dim", eh);
    rep.add("oracle_euclidean_hull_dim", brute_intersection_dim(c, euclidean_dual(c)));
    rep.verdict(e.has_value() && by_hull);
    rep.verification(e.has_value() == by_hull && by_hull == (oh == 0));
    return rep;
}

inline Report repro_qr7() {
    const Field f = Field::prime(2);
    const std::vector<Poly> gen{Poly(f, {1, 1, 1, 0, 1}), Poly(f, {1, 0, 0, 1, 0, 1, 1})};
    const std::vector<std::size_t> blocks{7, 7};
    const CyclotomicContext ctx(f, 7);
    const GqcCode c = GqcCode::from_generators(f, blocks, {gen});
    const auto supports = evaluation_supports(gen, ctx);
    const bool crit = disjoint_support_lcd(f, gen, blocks, ctx);
    const bool cons = is_mua_lcd(c, ctx, -1);
    const std::size_t oh = sigmalcd::detail::oracle_hull_dim(c.flat(), detail::mu_a_oracle_map(f, blocks, -1));
    Report rep("repro qr-idempotent-7");
    rep.add("generator", detail::tuple_text(gen));
    rep.add("n", c.length());
    rep.add("k", c.flat().dimension());
    rep.add("support_1", detail::join(supports[0]));
    rep.add("support_2", detail::join(supports[1]));
    rep.add("disjoint_support_lcd", crit);
    rep.add("constituent_lcd", cons);
    rep.add("oracle_hull_dim", oh);
    rep.verdict(crit && cons && oh == 0);
    rep.verification(crit == cons && cons == (oh == 0));
    return rep;
}

inline Report repro_theorem1_binary() {
    const Field f = Field::prime(2);
    const LinearCode c = LinearCode::from_rows(f, 2, {{1, 1}});
    const LcdConstruction r = make_lcd_sigma(c);
    const std::size_t oh = sigmalcd::detail::oracle_hull_dim(r.code, r.sigma);
    Report rep("repro theorem1-binary");
    rep.add("input_rows", detail::rows(c.generator()));
    rep.add("input_euclidean_hull_dim", hull_dim(c, SemiLinearMap::identity(f, 2)));
    rep.add("code_rows", detail::rows(r.code.generator()));
    rep.add("n_out", r.code.length());
    detail::add_sigma(rep, r.sigma);
    rep.add("hull_dim", hull_dim(r.code, r.sigma));
    rep.add("oracle_hull_dim", oh);
    rep.verdict(is_sigma_lcd(r.code, r.sigma));
    rep.verification(oh == 0 && r.sigma.is_permutation() && r.code.length() == 3);
    return rep;
}

/// Enumerates every pair (c_1, c_2) in R x R, R = F_q[x]/(x^m - 1), and
/// counts distinct maximal mu_{-1}-LCD 1-generator index-2 codes.
inline Report repro_maximal_count(std::uint64_t q, std::size_t m) {
    const Field f = Field::of_order(q);
    if (f.characteristic() != 2 || m % 2 == 0)
        throw Error(ErrorKind::Parse, "maximal-qc-count needs characteristic 2 and odd m");
    const std::vector<std::size_t> blocks{m, m};
    const CyclotomicContext ctx(f, m);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < 2 * m; ++i) total *= q;
    if (total > (1ull << 22)) throw Error(ErrorKind::BudgetExceeded, "q^{2m} pairs exceed the enumeration budget");

    std::set<std::vector<Elem>> codes;
    bool canonical_ok = true, agree = true;
    std::uint64_t pairs = 0;
    Vec digits(2 * m, 0);
    for (std::uint64_t t = 0; t < total; ++t) {
        std::uint64_t x = t;
        for (auto& dgt : digits) {
            dgt = static_cast<Elem>(x % q);
            x /= q;
        }
        const std::vector<Poly> gen{Poly(f, Vec(digits.begin(), digits.begin() + static_cast<long>(m))),
                                    Poly(f, Vec(digits.begin() + static_cast<long>(m), digits.end()))};
        const MaximalCheck mx = maximal_one_gen_check(f, gen, blocks, -1);
        if (!mx.maximal || !mx.lcd) continue;
        ++pairs;
        const GqcCode c = GqcCode::from_generators(f, blocks, {gen});
        agree = agree && one_gen_lcd_eval(f, gen, blocks, ctx, -1) && c.flat().dimension() == m;
        std::vector<Elem> key;
        for (std::size_t i = 0; i < c.flat().dimension(); ++i)
            for (Elem e : c.flat().generator().row(i)) key.push_back(e);
        if (!codes.insert(key).second) continue;
        agree = agree && sigmalcd::detail::oracle_hull_dim(c.flat(), detail::mu_a_oracle_map(f, blocks, -1)) == 0;
        if (!mx.canonical) {
            canonical_ok = false;
            continue;
        }
        const GqcCode canon = GqcCode::from_generators(f, blocks, {{*mx.canonical, *mx.canonical + Poly::one(f)}});
        canonical_ok = canonical_ok && canon.flat() == c.flat();
    }
    std::size_t qm = 1;
    for (std::size_t i = 0; i < m; ++i) qm *= q;
    Report rep("repro maximal-qc-count");
    rep.add("q", static_cast<std::size_t>(q));
    rep.add("m", m);
    rep.add("generator_pairs", static_cast<std::size_t>(pairs));
    rep.add("distinct_codes", codes.size());
    rep.add("q_pow_m", qm);
    rep.add("canonical_form", canonical_ok);
    rep.verdict(codes.size() == qm && canonical_ok);
    rep.verification(agree);
    return rep;
}

// ---------------------------------------------------------------------------

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"sigma-LCD code toolkit", "sigmalcd"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalOptions g;
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"human", "machine"}));
    app.add_option("--jobs", g.jobs, "worker threads for enumeration")->check(CLI::Range(1u, 256u));
    app.add_option("--budget", g.budget, "maximum number of enumerated codewords")->check(CLI::PositiveNumber);

    std::function<Report()> action;
    std::string code, code2, sigma = "id", test = "lcd", out_code, out_sigma, family, group, file, suite;
    long long a = -1;
    std::uint64_t q = 2;
    std::size_t m = 3;
    const auto tests = CLI::IsMember({"lcd", "so", "sd"});

    auto* lcd = app.add_subcommand("lcd", "sigma-LCD checks and constructions")->require_subcommand(1);
    auto* lcd_check = lcd->add_subcommand("check", "test a code against a sigma map");
    lcd_check->add_option("--code", code, "code file")->required();
    lcd_check->add_option("--sigma", sigma, "id | reversal | frobenius:<s> | sigma file");
    lcd_check->add_option("--test", test, "lcd | so | sd")->check(tests);
    lcd_check->callback([&] { action = [&] { return cmd_lcd_check(code, sigma, test); }; });
    auto* lcd_make = lcd->add_subcommand("make", "construct a sigma making the code sigma-LCD");
    lcd_make->add_option("--code", code, "code file")->required();
    lcd_make->add_option("--out-code", out_code, "write the output code here");
    lcd_make->add_option("--out-sigma", out_sigma, "write the sigma map here");
    lcd_make->callback([&] { action = [&] { return cmd_lcd_make(code, out_code, out_sigma); }; });
    auto* lcd_norm = lcd->add_subcommand("normalize", "hull normal form");
    lcd_norm->add_option("--code", code, "code file")->required();
    lcd_norm->callback([&] { action = [&] { return cmd_lcd_normalize(code); }; });

    auto* lcp = app.add_subcommand("lcp", "linear complementary pairs")->require_subcommand(1);
    auto* lcp_build = lcp->add_subcommand("build", "build an LCP from two codes of equal dimension");
    lcp_build->add_option("code1", code, "first code file")->required();
    lcp_build->add_option("code2", code2, "second code file")->required();
    lcp_build->callback([&] { action = [&] { return cmd_lcp_build(code, code2, g); }; });

    auto* gqc = app.add_subcommand("gqc", "generalized quasi-cyclic codes")->require_subcommand(1);
    auto* cosets = gqc->add_subcommand("cosets", "q-cyclotomic cosets modulo m");
    cosets->add_option("q", q, "field order")->required();
    cosets->add_option("m", m, "modulus")->required();
    cosets->callback([&] { action = [&] { return cmd_gqc_cosets(q, m); }; });
    auto* gamma = gqc->add_subcommand("gamma", "Gamma partition of the coset leaders");
    gamma->add_option("q", q, "field order")->required();
    gamma->add_option("m", m, "modulus")->required();
    gamma->callback([&] { action = [&] { return cmd_gqc_gamma(q, m); }; });
    auto* cons = gqc->add_subcommand("constituents", "constituent decomposition");
    cons->add_option("file", file, "gqc file")->required();
    cons->callback([&] { action = [&] { return cmd_gqc_constituents(file); }; });
    auto* gcheck = gqc->add_subcommand("check", "mu_a test via constituents");
    gcheck->add_option("file", file, "gqc file")->required();
    gcheck->add_option("--a", a, "unit a modulo m");
    gcheck->add_option("--test", test, "lcd | so | sd")->check(tests);
    gcheck->callback([&] { action = [&] { return cmd_gqc_check(file, a, test); }; });
    auto* onegen = gqc->add_subcommand("onegen", "1-generator criteria");
    onegen->add_option("file", file, "gqc file with one generator")->required();
    onegen->add_option("--a", a, "unit a modulo m");
    onegen->callback([&] { action = [&] { return cmd_gqc_onegen(file, a); }; });
    auto* product = gqc->add_subcommand("product", "product construction from LCD components");
    product->add_option("file", file, "product spec file")->required();
    product->callback([&] { action = [&] { return cmd_gqc_product(file, g); }; });

    auto* abelian = app.add_subcommand("abelian", "Abelian codes in F_q[G]")->require_subcommand(1);
    auto* acheck = abelian->add_subcommand("check", "mu_{-1}-LCD test");
    acheck->add_option("--group", group, "cyclic orders, e.g. 3,3")->required();
    acheck->add_option("--code", code, "code file")->required();
    acheck->callback([&] { action = [&] { return cmd_abelian_check(group, code); }; });
    auto* aidem = abelian->add_subcommand("idempotent", "idempotent generator of an ideal");
    aidem->add_option("--group", group, "cyclic orders, e.g. 3,3")->required();
    aidem->add_option("--code", code, "code file")->required();
    aidem->callback([&] { action = [&] { return cmd_abelian_idempotent(group, code); }; });

    auto* oracle = app.add_subcommand("oracle", "brute-force ground truth")->require_subcommand(1);
    auto* mindist = oracle->add_subcommand("mindist", "exact minimum distance");
    mindist->add_option("code", code, "code file")->required();
    mindist->callback([&] { action = [&] { return cmd_oracle_mindist(code, g); }; });
    auto* inter = oracle->add_subcommand("intersect", "intersection of two codes");
    inter->add_option("code1", code, "code file")->required();
    inter->add_option("code2", code2, "code file")->required();
    inter->callback([&] { action = [&] { return cmd_oracle_intersect(code, code2); }; });
    auto* search = oracle->add_subcommand("search-sigma", "search a sigma family for an LCD-making map");
    search->add_option("code", code, "code file")->required();
    search->add_option("--family", family, "diagonal-lambda | cyclic-pi2 | permutation-sample")->required();
    search->callback([&] { action = [&] { return cmd_oracle_search(code, family, g); }; });

    auto* repro = app.add_subcommand("repro", "worked examples");
    repro->add_option("suite", suite, "golay23 | qr-idempotent-7 | theorem1-binary | maximal-qc-count")->required();
    repro->add_option("--q", q, "field order (maximal-qc-count)");
    repro->add_option("--m", m, "length (maximal-qc-count)");
    repro->callback([&] {
        action = [&] {
            if (suite == "golay23") return repro_golay23(g);
            if (suite == "qr-idempotent-7") return repro_qr7();
            if (suite == "theorem1-binary") return repro_theorem1_binary();
            if (suite == "maximal-qc-count") return repro_maximal_count(q, m);
            throw Error(ErrorKind::UnknownSuite, "unknown suite '" + suite + "'");
        };
    });

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kTrue : kInputError;
    }
    try {
        const auto start = std::chrono::steady_clock::now();
        const Report rep = action();
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
        rep.print(out, g.format == "machine" ? Format::Machine : Format::Human, dt.count());
        if (rep.exit_code() == kDiscrepancy) err << "discrepancy: formula and oracle verdicts differ\n";
        return rep.exit_code();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::Discrepancy ? kDiscrepancy : kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
}

}  // namespace sigmalcd::cli
