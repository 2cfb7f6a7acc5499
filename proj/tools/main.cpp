#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "poisinv/autgrp.hpp"
#include "poisinv/errors.hpp"
#include "poisinv/expr.hpp"
#include "poisinv/invariants.hpp"
#include "poisinv/poisson.hpp"
#include "poisinv/ratfunc.hpp"
#include "poisinv/structfile.hpp"
#include "poisinv/uenv.hpp"
#include "report.hpp"

using namespace poisinv;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitParse = 2;
constexpr int kExitMath = 3;
constexpr int kExitCap = 4;

struct Options {
    unsigned zeta = kDefaultZetaModulus;
    unsigned order_bound = 360;
    unsigned closure_cap = kDefaultClosureCap;
    bool json = false;
};

std::string join(const std::vector<unsigned>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

std::string join_scalars(const std::vector<Cyclo>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s;
}

std::vector<std::string> split_list(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    for (auto& piece : out) {
        const auto a = piece.find_first_not_of(" \t");
        const auto b = piece.find_last_not_of(" \t");
        piece = a == std::string::npos ? "" : piece.substr(a, b - a + 1);
    }
    return out;
}

// group argument: a group name in the bundle, or a path to another bundle
// whose first group is taken
std::vector<Matrix> group_matrices(const StructFile& f, const std::string& arg, unsigned zeta) {
    for (const auto& [name, gens] : f.groups)
        if (name == arg) return f.group_generators(arg);
    if (std::ifstream probe(arg); probe) {
        const StructFile other = read_struct_file(arg, zeta);
        if (other.groups.empty()) throw UnknownName("no group in '" + arg + "'");
        return other.group_generators(other.groups.front().first);
    }
    throw UnknownName("group '" + arg + "'");
}

MatrixGroup closure_of(const StructFile& f, const std::string& arg, const Options& opt) {
    std::vector<GradedMap> gens;
    for (const Matrix& m : group_matrices(f, arg, opt.zeta)) gens.emplace_back(m);
    return group_closure(gens, opt.closure_cap);
}

std::string bracket_key(unsigned i, unsigned j) {
    return "bracket." + std::to_string(i + 1) + std::to_string(j + 1);
}

std::optional<MultiPoly> try_superpotential(const PoissonStructure& p) {
    if (p.nvars() != 3) return std::nullopt;
    return solve_superpotential(p);
}

// why a matrix fails to be a reflection of the structure, phrased after the
// strongest obstruction
std::string rejection_reason(const PoissonStructure& p, const GradedMap& gm,
                             const ReflectionReport& rep, unsigned bound) {
    const Matrix& m = gm.matrix();
    const unsigned n = m.rows();
    if (m.is_identity()) return "identity";
    if (!is_poisson_automorphism(p, gm).pass) return "not an automorphism";
    const Cyclo lambda = m.trace() * Cyclo(make_rational(1, n));
    const UniPoly lin(std::vector<Cyclo>{-lambda, Cyclo(1)});
    if (charpoly(m) == lin.pow(n))
        return n == 3 ? "triple eigenvalue" : "repeated eigenvalue";
    if (!rep.order) return "no finite order within " + std::to_string(bound);
    unsigned fixed = 0;
    for (const auto& [lam, mult] : rep.eigen_profile)
        if (lam.is_one()) fixed = mult;
    if (fixed < n - 1) return "fixed space too small";
    return "eigenvalue profile rules it out";
}

int cmd_verify(const std::string& path, const Options& opt) {
    const StructFile f = read_struct_file(path, opt.zeta);
    const PoissonStructure p = f.structure();
    Report rep;
    rep.add("nvars", std::to_string(p.nvars()));
    for (unsigned i = 0; i < p.nvars(); ++i)
        for (unsigned j = i + 1; j < p.nvars(); ++j)
            rep.add(bracket_key(i, j), p.generator_bracket(i, j).str());
    rep.add("quadratic", p.is_quadratic() ? "true" : "false");

    const auto jac = p.verify_jacobi();
    if (jac) {
        rep.add("jacobi", "fail at (" + std::to_string(jac->i + 1) + ", " +
                              std::to_string(jac->j + 1) + ", " + std::to_string(jac->k + 1) +
                              ")");
        rep.add("residual", jac->residual.str());
        rep.print(std::cout, opt.json);
        return kExitMath;
    }
    rep.add("jacobi", "pass");
    rep.add("unimodular", p.is_unimodular() ? "true" : "false");
    const auto omega = try_superpotential(p);
    rep.add("omega", omega ? omega->str() : "none");
    rep.print(std::cout, opt.json);
    return 0;
}

int cmd_reflections(const std::string& path, std::vector<std::string> names,
                    const Options& opt) {
    const StructFile f = read_struct_file(path, opt.zeta);
    const PoissonStructure p = f.structure();
    if (names.empty())
        for (const auto& [name, m] : f.matrices) names.push_back(name);

    Report rep;
    unsigned found = 0;
    std::vector<std::string> reasons;
    for (const auto& name : names) {
        const GradedMap gm(f.matrix(name));
        const ReflectionReport r = classify_reflection(p, gm, opt.order_bound);
        if (r.is_reflection) {
            ++found;
            rep.add(name, "reflection, xi = " + r.xi->str() + ", order = " +
                              std::to_string(*r.order));
        } else {
            const std::string why = rejection_reason(p, gm, r, opt.order_bound);
            if (std::find(reasons.begin(), reasons.end(), why) == reasons.end())
                reasons.push_back(why);
            rep.add(name, "not a reflection (" + why + ")");
        }
    }
    if (found == 0)
        rep.add("summary",
                reasons.size() == 1 ? "no reflections (" + reasons.front() + ")"
                                    : "no reflections");
    else
        rep.add("summary", std::to_string(found) + " reflection(s)");
    rep.print(std::cout, opt.json);
    return 0;
}

int cmd_molien(const std::string& path, const std::string& group, const Options& opt) {
    const StructFile f = read_struct_file(path, opt.zeta);
    const MatrixGroup g = closure_of(f, group, opt);
    Report rep;
    rep.add("group", group);
    rep.add("size", std::to_string(g.size()));
    rep.add("molien", molien(g).factored_str());
    rep.print(std::cout, opt.json);
    return 0;
}

int cmd_invariants(const std::string& path, const std::string& group, unsigned dmax,
                   const Options& opt) {
    const StructFile f = read_struct_file(path, opt.zeta);
    const PoissonStructure p = f.structure();
    const MatrixGroup g = closure_of(f, group, opt);

    Report rep;
    rep.add("group", group);
    rep.add("size", std::to_string(g.size()));
    rep.add("molien", molien(g).factored_str());

    const GeneratorSet gens = find_generators(g, dmax);
    rep.add("degrees", join(gens.degrees));
    const auto ynames = default_names("y", static_cast<unsigned>(gens.gens.size()));
    for (std::size_t i = 0; i < gens.gens.size(); ++i)
        rep.add(ynames[i], gens.gens[i].str());
    rep.add("jacobian_independent", gens.jacobian_independent ? "true" : "false");

    const InducedStructure ind = induced_bracket_table(p, gens);
    const unsigned k = ind.structure.nvars();
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = i + 1; j < k; ++j)
            rep.add("induced." + std::to_string(i + 1) + std::to_string(j + 1),
                    ind.structure.generator_bracket(i, j).str(ynames));
    rep.add("induced_unimodular", ind.structure.is_unimodular() ? "true" : "false");
    const auto omega = try_superpotential(ind.structure);
    rep.add("invariant_omega", omega ? "present" : "absent");
    if (omega) rep.add("invariant_omega_value", omega->str(ynames));
    rep.print(std::cout, opt.json);
    return 0;
}

Word parse_word(const Envelope& env, const std::vector<std::string>& letters, unsigned nvars) {
    const auto names = envelope_names(nvars);
    Word w;
    for (const auto& letter : letters) {
        const auto it = std::find(names.begin(), names.end(), letter);
        if (it == names.end()) throw UnknownName("letter '" + letter + "'");
        w.push_back(static_cast<unsigned>(it - names.begin()));
    }
    (void)env;
    return w;
}

int cmd_env_nf(const std::string& path, const std::vector<std::string>& letters,
               const Options& opt) {
    const StructFile f = read_struct_file(path, opt.zeta);
    const PoissonStructure p = f.structure();
    const Envelope env(p);
    const Word w = parse_word(env, letters, p.nvars());
    std::string spelled;
    for (std::size_t i = 0; i < letters.size(); ++i)
        spelled += (i ? " " : "") + letters[i];
    Report rep;
    rep.add("word", spelled.empty() ? "(empty)" : spelled);
    rep.add("nf", env.normal_form(w).str(envelope_names(p.nvars())));
    rep.print(std::cout, opt.json);
    return 0;
}

int cmd_env_check(const std::string& path, unsigned dmax, const Options& opt) {
    const StructFile f = read_struct_file(path, opt.zeta);
    const Envelope env(f.structure());
    const PbwReport r = env.verify_pbw_consistency(dmax);
    Report rep;
    const auto names = envelope_names(f.nvars);
    if (r.pass) {
        rep.add("pbw", "pass (degrees 0.." + std::to_string(dmax) + ")");
        rep.print(std::cout, opt.json);
        return 0;
    }
    rep.add("pbw", "fail");
    if (r.word) {
        std::string spelled;
        for (std::size_t i = 0; i < r.word->size(); ++i)
            spelled += (i ? " " : "") + names[(*r.word)[i]];
        rep.add("word", spelled);
    }
    rep.add("left", r.left.str(names));
    rep.add("right", r.right.str(names));
    rep.print(std::cout, opt.json);
    return kExitMath;
}

int cmd_env_trace(const std::string& path, const std::string& name, unsigned dmax,
                  const Options& opt) {
    const StructFile f = read_struct_file(path, opt.zeta);
    const GradedMap gm(f.matrix(name));
    const RatFunc ts = trace_series_env(gm);
    Report rep;
    rep.add("trace", ts.factored_str());
    rep.add("coeffs", join_scalars(ts.taylor_coeffs(dmax)));
    rep.print(std::cout, opt.json);
    return 0;
}

int cmd_env_hdet(const std::string& path, const std::string& name, const Options& opt) {
    const StructFile f = read_struct_file(path, opt.zeta);
    const GradedMap gm(f.matrix(name));
    const Cyclo h = hdet_env(gm, opt.order_bound);
    if (opt.json) {
        Report rep;
        rep.add("hdet", h.str());
        rep.add("gorenstein", h.is_one() ? "true" : "false");
        rep.print(std::cout, true);
    } else {
        std::cout << "hdet = " << h.str() << "\n";
        std::cout << "gorenstein = " << (h.is_one() ? "true" : "false") << "\n";
    }
    return 0;
}

int cmd_env_invdims(const std::string& path, const std::string& group, unsigned dmax,
                    const Options& opt) {
    const StructFile f = read_struct_file(path, opt.zeta);
    const PoissonStructure p = f.structure();
    const MatrixGroup g = closure_of(f, group, opt);
    Report rep;
    rep.add("dims", join(env_invariant_dims(p, g, dmax)));
    rep.print(std::cout, opt.json);
    return 0;
}

/* golden-value engine: compute the quantity a fixture key names and compare */

struct GoldenContext {
    const StructFile& f;
    const PoissonStructure p;
    const Options& opt;
    std::map<std::string, MatrixGroup> groups;
    std::map<std::string, GeneratorSet> recorded_gens;
    std::map<std::string, InducedStructure> induced;

    explicit GoldenContext(const StructFile& file, const Options& o)
        : f(file), p(file.structure()), opt(o) {}

    const MatrixGroup& group(const std::string& name) {
        auto it = groups.find(name);
        if (it == groups.end()) {
            std::vector<GradedMap> gens;
            for (const Matrix& m : f.group_generators(name)) gens.emplace_back(m);
            it = groups.emplace(name, group_closure(gens, opt.closure_cap)).first;
        }
        return it->second;
    }

    // generator list recorded under ygens.<name>
    const GeneratorSet& recorded(const std::string& name) {
        auto it = recorded_gens.find(name);
        if (it == recorded_gens.end()) {
            const GoldenValue* gv = f.find_golden("ygens." + name);
            if (!gv) throw FileFormatError("golden ygens." + name + " is missing", 0);
            GeneratorSet gs;
            for (const auto& piece : split_list(gv->value, ';')) {
                const MultiPoly y = parse_poly(piece, f.nvars, opt.zeta);
                const auto d = y.homogeneous_degree();
                if (!d || y.is_zero())
                    throw FileFormatError("ygens." + name + " entry is not homogeneous", 0);
                gs.gens.push_back(y);
                gs.degrees.push_back(*d);
            }
            it = recorded_gens.emplace(name, std::move(gs)).first;
        }
        return it->second;
    }

    const InducedStructure& induced_on(const std::string& name) {
        auto it = induced.find(name);
        if (it == induced.end())
            it = induced.emplace(name, induced_bracket_table(p, recorded(name))).first;
        return it->second;
    }
};

void golden_line(GoldenContext& cx, Report& rep, const std::string& key,
                 const std::string& expect) {
    const auto dot = key.find('.');
    const std::string head = dot == std::string::npos ? key : key.substr(0, dot);
    const std::string tail = dot == std::string::npos ? "" : key.substr(dot + 1);
    const PoissonStructure& p = cx.p;
    const Options& opt = cx.opt;

    auto flag = [&](bool b) { return b ? std::string("true") : std::string("false"); };

    if (key == "omega") {
        const auto omega = try_superpotential(p);
        const std::string actual = omega ? omega->str() : "none";
        const bool ok = expect == "none"
                            ? !omega
                            : omega && *omega == parse_poly(expect, p.nvars(), opt.zeta);
        rep.verdict(key, expect, actual, ok);
    } else if (key == "quadratic") {
        rep.check(key, expect, flag(p.is_quadratic()));
    } else if (key == "jacobi") {
        const auto jac = p.verify_jacobi();
        rep.check(key, expect,
                  jac ? "fail at (" + std::to_string(jac->i + 1) + ", " +
                            std::to_string(jac->j + 1) + ", " + std::to_string(jac->k + 1) + ")"
                      : "pass");
    } else if (key == "unimodular") {
        rep.check(key, expect, flag(p.is_unimodular()));
    } else if (key == "reflections") {
        bool any = false;
        for (const auto& [name, m] : cx.f.matrices)
            any = any || classify_reflection(p, GradedMap(m), opt.order_bound).is_reflection;
        rep.check(key, expect, any ? "nonempty" : "empty");
    } else if (head == "automorphism") {
        const auto r = is_poisson_automorphism(p, GradedMap(cx.f.matrix(tail)));
        rep.check(key, expect, r.pass ? "pass" : "fail");
    } else if (head == "reflection") {
        const auto r = classify_reflection(p, GradedMap(cx.f.matrix(tail)), opt.order_bound);
        rep.check(key, expect, flag(r.is_reflection));
    } else if (head == "xi") {
        const auto r = classify_reflection(p, GradedMap(cx.f.matrix(tail)), opt.order_bound);
        const std::string actual = r.xi ? r.xi->str() : "none";
        const bool ok = r.xi && *r.xi == parse_scalar(expect, opt.zeta);
        rep.verdict(key, expect, actual, ok);
    } else if (head == "order") {
        const auto ord = order_of(GradedMap(cx.f.matrix(tail)), opt.order_bound);
        rep.check(key, expect, ord ? std::to_string(*ord) : "infinite");
    } else if (head == "hdet") {
        std::optional<Cyclo> h;
        try {
            h = hdet_env(GradedMap(cx.f.matrix(tail)), opt.order_bound);
        } catch (const InfiniteOrder&) {
        }
        const std::string actual = h ? h->str() : "infinite order";
        const bool ok = h && *h == parse_scalar(expect, opt.zeta);
        rep.verdict(key, expect, actual, ok);
    } else if (head == "gorenstein") {
        const Cyclo h = hdet_env(GradedMap(cx.f.matrix(tail)), opt.order_bound);
        rep.check(key, expect, flag(h.is_one()));
    } else if (head == "quasi") {
        const auto kind = quasi_reflection_screen(induce(GradedMap(cx.f.matrix(tail))),
                                                  opt.order_bound);
        const char* names[] = {"none", "classical", "mystic"};
        rep.check(key, expect, names[static_cast<int>(kind)]);
    } else if (head == "doubling") {
        rep.check(key, expect,
                  eigen_profile_doubling(GradedMap(cx.f.matrix(tail))) ? "pass" : "fail");
    } else if (head == "trace_env") {
        rep.check(key, expect, trace_series_env(GradedMap(cx.f.matrix(tail))).factored_str());
    } else if (head == "size") {
        rep.check(key, expect, std::to_string(cx.group(tail).size()));
    } else if (head == "molien") {
        rep.check(key, expect, molien(cx.group(tail)).factored_str());
    } else if (head == "degrees") {
        unsigned top = 1;
        for (const auto& piece : split_list(expect, ','))
            top = std::max(top, static_cast<unsigned>(std::stoul(piece)));
        const GeneratorSet gens = find_generators(cx.group(tail), top + 1);
        rep.check(key, expect, join(gens.degrees));
    } else if (head == "ygens") {
        const GeneratorSet& gs = cx.recorded(tail);
        const MatrixGroup& g = cx.group(tail);
        bool invariant = true;
        for (const auto& y : gs.gens)
            for (const auto& e : g.elements) invariant = invariant && e.apply(y) == y;
        rep.verdict(key, expect, invariant ? expect : "not group-invariant", invariant);
    } else if (head == "induced12" || head == "induced23" || head == "induced31") {
        const InducedStructure& ind = cx.induced_on(tail);
        const unsigned k = ind.structure.nvars();
        if (k != 3) throw FileFormatError("induced table keys need three generators", 0);
        MultiPoly actual = head == "induced12"   ? ind.structure.generator_bracket(0, 1)
                           : head == "induced23" ? ind.structure.generator_bracket(1, 2)
                                                 : ind.structure.generator_bracket(2, 0);
        const auto ynames = default_names("y", k);
        const MultiPoly want = parse_poly(expect, ynames, opt.zeta);
        rep.verdict(key, expect, actual.str(ynames), actual == want);
    } else if (head == "induced_unimodular") {
        rep.check(key, expect, flag(cx.induced_on(tail).structure.is_unimodular()));
    } else if (head == "invariant_omega") {
        const auto omega = try_superpotential(cx.induced_on(tail).structure);
        rep.check(key, expect, omega ? "present" : "absent");
    } else if (head == "envdims") {
        const unsigned dmax =
            static_cast<unsigned>(split_list(expect, ',').size()) - 1;
        rep.check(key, expect, join(env_invariant_dims(p, cx.group(tail), dmax)));
    } else {
        throw FileFormatError("unsupported golden key '" + key + "'", 0);
    }
}

int run_golden(const StructFile& f, const Options& opt) {
    GoldenContext cx(f, opt);
    Report rep;
    for (const auto& [key, gv] : f.golden) golden_line(cx, rep, key, gv.value);
    rep.add("checks", std::to_string(rep.size()));
    rep.add("mismatches", std::to_string(rep.mismatches()));
    rep.print(std::cout, opt.json);
    return rep.ok() ? 0 : kExitMismatch;
}

int cmd_report(const std::string& path, const Options& opt) {
    return run_golden(read_struct_file(path, opt.zeta), opt);
}

int cmd_case_report(unsigned caseid, const std::string& dir, const Options& opt) {
    const std::string path = dir + "/case" + std::to_string(caseid) + ".pois";
    return cmd_report(path, opt);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariant-theory toolkit for graded Poisson structures"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--zeta", opt.zeta, "cyclotomic field modulus (0 lifts the restriction)")
        ->capture_default_str();
    app.add_option("--order-bound", opt.order_bound, "search bound for element orders")
        ->capture_default_str();
    app.add_option("--closure-cap", opt.closure_cap, "maximum group closure size")
        ->capture_default_str();
    app.add_flag("--json", opt.json, "emit a JSON report");

    std::string file, group, matrix;
    std::vector<std::string> names;
    unsigned dmax_inv = 6, dmax_check = 4, dmax_trace = 6, dmax_dims = 4;
    unsigned caseid = 1;
    std::string cases_dir = "cases";

    auto* verify = app.add_subcommand("verify", "bracket table, Jacobi, unimodularity");
    verify->add_option("file", file, "structure bundle")->required();

    auto* refl = app.add_subcommand("reflections", "classify bundle matrices");
    refl->add_option("file", file, "structure bundle")->required();
    refl->add_option("names", names, "matrix names (default: all in the bundle)");

    auto* mol = app.add_subcommand("molien", "invariant Hilbert series of a group");
    mol->add_option("file", file, "structure bundle")->required();
    mol->add_option("group", group, "group name in the bundle, or a bundle path")->required();

    auto* inv = app.add_subcommand("invariants", "generators and induced bracket table");
    inv->add_option("file", file, "structure bundle")->required();
    inv->add_option("group", group, "group name in the bundle, or a bundle path")->required();
    inv->add_option("--dmax", dmax_inv, "generator search bound")->capture_default_str();

    auto* env = app.add_subcommand("env", "Poisson enveloping algebra operations");
    env->require_subcommand(1);
    auto* nf = env->add_subcommand("nf", "normal form of a word in x1..xn y1..yn");
    nf->add_option("file", file, "structure bundle")->required();
    nf->add_option("letters", names, "word letters, e.g. x1 y2 x1");
    auto* check = env->add_subcommand("check", "ordered-basis consistency sweep");
    check->add_option("file", file, "structure bundle")->required();
    check->add_option("--dmax", dmax_check, "top degree")->capture_default_str();
    auto* trace = env->add_subcommand("trace", "graded trace of a doubled map");
    trace->add_option("file", file, "structure bundle")->required();
    trace->add_option("matrix", matrix, "matrix name")->required();
    trace->add_option("--dmax", dmax_trace, "Taylor coefficients to print")
        ->capture_default_str();
    auto* hdet = env->add_subcommand("hdet", "homological determinant of a doubled map");
    hdet->add_option("file", file, "structure bundle")->required();
    hdet->add_option("matrix", matrix, "matrix name")->required();
    auto* dims = env->add_subcommand("invdims", "fixed-subspace dimensions per degree");
    dims->add_option("file", file, "structure bundle")->required();
    dims->add_option("group", group, "group name in the bundle, or a bundle path")->required();
    dims->add_option("--dmax", dmax_dims, "top degree")->capture_default_str();

    auto* report = app.add_subcommand("report", "compare a bundle against its golden values");
    report->add_option("file", file, "structure bundle")->required();

    auto* caserep = app.add_subcommand("paper-report", "golden comparison for a numbered case");
    caserep->add_option("case", caseid, "case number")->required()->check(CLI::Range(1, 9));
    caserep->add_option("--cases-dir", cases_dir, "fixture directory")->capture_default_str();

    for (auto* sub : {verify, refl, mol, inv, env, report, caserep}) sub->fallthrough();
    for (auto* sub : {nf, check, trace, hdet, dims}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (*verify) return cmd_verify(file, opt);
        if (*refl) return cmd_reflections(file, names, opt);
        if (*mol) return cmd_molien(file, group, opt);
        if (*inv) return cmd_invariants(file, group, dmax_inv, opt);
        if (*nf) return cmd_env_nf(file, names, opt);
        if (*check) return cmd_env_check(file, dmax_check, opt);
        if (*trace) return cmd_env_trace(file, matrix, dmax_trace, opt);
        if (*hdet) return cmd_env_hdet(file, matrix, opt);
        if (*dims) return cmd_env_invdims(file, group, dmax_dims, opt);
        if (*report) return cmd_report(file, opt);
        if (*caserep) return cmd_case_report(caseid, cases_dir, opt);
    } catch (const ClosureCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const FileFormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const UnknownName& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const PoisError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMath;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMath;
    }
    return 0;
}
