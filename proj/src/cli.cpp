#include "etale/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "etale/arith_props.hpp"
#include "etale/json_io.hpp"

namespace etale {

namespace {

Json parse_json(const std::string& s, const char* what) {
    Json j = Json::parse(s, nullptr, false);
    if (j.is_discarded()) throw usage_error(std::string("cannot parse ") + what + " as JSON");
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str(), path.c_str());
}

/// Element arguments accept JSON scalars; bare tokens like 3/4 that are not
/// JSON are retried as rational strings.
FieldElement parse_element(const Field& K, const std::string& s) {
    Json j = Json::parse(s, nullptr, false);
    if (j.is_discarded()) j = Json(s);
    return element_from_json(K, j);
}

mpq_class parse_mpq(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw usage_error("cannot parse rational \"" + s + "\"");
    if (q.get_den() == 0) throw usage_error("rational with zero denominator");
    q.canonicalize();
    return q;
}

struct Report {
    Json doc;
    bool pass = true;
    int exit_override = -1;

    Report(const std::vector<std::string>& command, long seed) {
        doc["command"] = command;
        doc["field"] = nullptr;
        doc["inputs"] = Json::object();
        doc["outputs"] = Json::object();
        doc["checks"] = Json::object();
        doc["precision_notes"] = Json::array();
        doc["seed"] = seed;
    }

    void field(const Field& K) { doc["field"] = field_to_json(K); }
    Json& inputs() { return doc["inputs"]; }
    Json& outputs() { return doc["outputs"]; }
    void check(const std::string& name, bool v) {
        doc["checks"][name] = v;
        if (!v) pass = false;
    }
    void note(const std::string& s) { doc["precision_notes"].push_back(s); }
};

/// Option storage shared by all subcommands; only the fired leaf reads it.
struct Opts {
    std::string field_s;
    std::string poly_s;
    std::string cover_s;
    std::string cover2_s;
    std::string point_s;
    std::string at_s;
    std::string shift_s;
    std::string scale_s;
    std::string chain_s;
    std::string a_s, b_s, x_s, x0_s;
    long m = 0;
    int deg = 0;
    int radius = 1;
    int samples = 0;
    int target = 0;
    long long budget = -1;
    bool exhaustive = false;
    bool nonzero = false;
    bool cyclic = false;
    bool solve_flag = false;
    long seed = 0;
    std::string out_path = "-";
};

Field need_field(const Opts& o) {
    if (o.field_s.empty()) throw usage_error("--field is required");
    return field_from_json(parse_json(o.field_s, "--field"));
}

MonicVector need_monic(const Opts& o, const Field& K) {
    if (o.poly_s.empty()) throw usage_error("--poly is required");
    return MonicVector(K, point_from_json(K, parse_json(o.poly_s, "--poly")));
}

Json coeff_list(const MonicVector& a) { return point_to_json(a.a); }

void run_classify(const Opts& o, Report& rep) {
    Field K = need_field(o);
    rep.field(K);
    rep.inputs()["deg"] = o.deg;
    if (o.deg < 2) throw usage_error("--deg must be at least 2");
    ClassCount r;
    if (K.is_padic()) {
        int samples = o.samples > 0 ? o.samples : 500;
        rep.inputs()["samples"] = samples;
        Rng rng(static_cast<unsigned long long>(o.seed));
        r = count_extension_classes_sampled(K, o.deg, samples, rng);
        rep.outputs()["method"] = "sampled";
        rep.outputs()["accepted"] = r.admissible;
        rep.outputs()["precision_skipped"] = r.precision_skipped;
        rep.outputs()["decided_at_precision"] = r.decided_at_precision;
        if (r.precision_skipped > 0)
            rep.note("some samples were refused near the precision horizon and redrawn");
    } else {
        if (o.samples > 0)
            throw usage_error("--samples applies to p-adic fields; finite fields are exhaustive");
        r = count_extension_classes(K, o.deg, o.budget);
        rep.outputs()["method"] = "exhaustive";
        rep.outputs()["candidates"] = r.candidates;
        rep.outputs()["admissible"] = r.admissible;
    }
    rep.outputs()["count"] = r.count;
    Json reps = Json::array();
    for (const MonicVector& a : r.representatives) reps.push_back(coeff_list(a));
    rep.outputs()["reps"] = std::move(reps);
}

void krasner_common(const KrasnerMap& G, Report& rep, bool symbolic) {
    rep.outputs()["n"] = G.n();
    if (symbolic) {
        Json map = Json::array();
        for (const MultiPoly& g : G.map) map.push_back(multipoly_to_json(g));
        rep.outputs()["map"] = std::move(map);
        rep.outputs()["jac_det"] = multipoly_to_json(G.jac_det);
        rep.outputs()["generator_det"] = multipoly_to_json(G.generator_det);
    }
    BasePointReport r = verify_base_point(G);
    rep.outputs()["jac_value"] = element_to_json(r.jac_value);
    rep.outputs()["disc_value"] = element_to_json(r.disc_value);
    rep.outputs()["sign"] = r.sign;
    rep.check("base_point_identity", r.base_point_identity);
    rep.check("jac_invertible", r.jac_invertible);
    rep.check("jac_matches_disc", r.jac_matches_disc);
    rep.check("sign_formula", r.sign == base_jacobian_sign(G.n()));
}

void run_krasner(const std::string& verb, const Opts& o, Report& rep) {
    Field K = need_field(o);
    rep.field(K);
    MonicVector a = need_monic(o, K);
    rep.inputs()["poly"] = coeff_list(a);
    KrasnerMap G = krasner_build(a);
    if (verb == "build") {
        krasner_common(G, rep, true);
        return;
    }
    if (verb == "verify") {
        krasner_common(G, rep, true);
        if (K.is_finite()) {
            ChainRuleReport cr = chain_rule_factors(G);
            Json c;
            c["splitting_field"] = field_to_json(cr.splitting);
            c["roots"] = point_to_json(cr.roots);
            c["jac_reversal"] = element_to_json(cr.jac_reversal);
            c["jac_symmetric"] = element_to_json(cr.jac_symmetric);
            c["jac_vandermonde"] = element_to_json(cr.jac_vandermonde);
            c["product"] = element_to_json(cr.product);
            c["jac_at_base"] = element_to_json(cr.jac_at_base);
            rep.outputs()["chain_rule"] = std::move(c);
            rep.check("chain_rule_matches", cr.matches);
        } else {
            rep.note("chain-rule factorization needs a finite base field; skipped");
        }
        return;
    }
    // cover
    EtaleCover c = krasner_cover(G);
    rep.outputs()["cover"] = cover_to_json(c);
    bool ws = !c.witnesses.empty();
    for (const Witness& w : c.witnesses) ws = ws && witness_valid(c, w);
    rep.check("witness_valid", ws);
}

void run_ee(const std::string& verb, const Opts& o, Report& rep) {
    if (verb == "split") {
        Field K = need_field(o);
        rep.field(K);
        rep.inputs()["deg"] = o.deg;
        rep.outputs()["cover"] = cover_to_json(split_cover(K, o.deg));
        return;
    }
    if (o.cover_s.empty()) throw usage_error("--cover is required");
    EtaleCover c = cover_from_json(load_json_file(o.cover_s));
    rep.field(c.field);
    rep.inputs()["cover"] = o.cover_s;
    rep.inputs()["label"] = c.label;

    if (verb == "image") {
        auto pts = image(c, o.budget);
        Json arr = Json::array();
        for (const auto& pt : pts) arr.push_back(point_to_json(pt));
        rep.outputs()["points"] = std::move(arr);
        rep.outputs()["size"] = pts.size();
        return;
    }
    if (verb == "member") {
        if (o.point_s.empty()) throw usage_error("--point is required");
        std::vector<FieldElement> w = point_from_json(c.field, parse_json(o.point_s, "--point"));
        rep.inputs()["point"] = point_to_json(w);
        MemberResult r = membership_witness(c, w, o.budget);
        rep.outputs()["member"] = member_to_json(r);
        if (r.status == MemberResult::Status::Inconclusive) {
            rep.exit_override = 2;
            rep.note("membership is inconclusive: " + r.note);
            return;
        }
        rep.check("in_image", r.status == MemberResult::Status::Found);
        if (r.status == MemberResult::Status::Found) {
            bool ok = true;
            for (size_t i = 0; i < c.map.size(); ++i)
                ok = ok && c.map[i].eval(r.preimage) == w[i];
            for (const MultiPoly& g : c.inequations) ok = ok && !g.eval(r.preimage).is_zero();
            rep.check("witness_checks_out", ok);
        }
        return;
    }
    if (verb == "intersect") {
        if (o.cover2_s.empty()) throw usage_error("--cover2 is required");
        EtaleCover c2 = cover_from_json(load_json_file(o.cover2_s));
        rep.inputs()["cover2"] = o.cover2_s;
        ConstraintSystem s;
        if (!o.at_s.empty()) {
            std::vector<FieldElement> w = point_from_json(c.field, parse_json(o.at_s, "--at"));
            rep.inputs()["at"] = point_to_json(w);
            s = intersect_at(c, c2, w);
        } else {
            s = intersect(c, c2);
        }
        rep.outputs()["system"] = system_to_json(s);
        if (!o.at_s.empty() || o.solve_flag) {
            auto sol = solve(s, o.budget);
            rep.check("solvable", sol.has_value());
            if (sol) {
                rep.outputs()["solution"] = point_to_json(*sol);
                rep.check("solution_checks_out", satisfied_at(s, *sol));
            }
        }
        return;
    }
    if (verb == "transform") {
        if (o.shift_s.empty() || o.scale_s.empty())
            throw usage_error("--shift and --scale are required");
        std::vector<FieldElement> shift =
            point_from_json(c.field, parse_json(o.shift_s, "--shift"));
        std::vector<FieldElement> scale =
            point_from_json(c.field, parse_json(o.scale_s, "--scale"));
        rep.inputs()["shift"] = point_to_json(shift);
        rep.inputs()["scale"] = point_to_json(scale);
        EtaleCover t = affine_transform(c, shift, scale);
        rep.outputs()["cover"] = cover_to_json(t);
        bool ws = true;
        for (const Witness& w : t.witnesses) ws = ws && witness_valid(t, w);
        rep.check("witnesses_valid", ws);
        return;
    }
    throw usage_error("unknown ee verb " + verb);
}

Json table_json(const CosetTable& t) {
    Json j;
    j["subgroup"] = t.subgroup;
    j["subgroup_order"] = t.subgroup_order;
    j["index"] = t.index;
    j["representatives"] = point_to_json(t.representatives);
    return j;
}

void run_arith(const std::string& verb, const Opts& o, Report& rep) {
    if (verb == "power-index") {
        Field K = need_field(o);
        rep.field(K);
        rep.inputs()["m"] = o.m;
        CosetTable t = power_subgroup_index(K, o.m);
        rep.outputs()["table"] = table_json(t);
        rep.check("index_equals_gcd",
                  t.index == std::gcd(static_cast<long long>(o.m), K.order() - 1));
        return;
    }
    if (verb == "as-index") {
        Field K = need_field(o);
        rep.field(K);
        CosetTable t = artin_schreier_index(K);
        rep.outputs()["table"] = table_json(t);
        rep.check("index_equals_characteristic", t.index == K.characteristic());
        return;
    }
    if (verb == "coset-sum") {
        Field K = need_field(o);
        rep.field(K);
        rep.inputs()["m"] = o.m;
        CosetSumReport r = coset_sum_covers(K, o.m);
        rep.outputs()["table"] = table_json(r.table);
        Json rows = Json::array();
        for (const auto& row : r.pair_covers) {
            Json jr = Json::array();
            for (bool b : row) jr.push_back(b);
            rows.push_back(std::move(jr));
        }
        rep.outputs()["pair_covers"] = std::move(rows);
        rep.outputs()["all_cover"] = r.all_cover;
        rep.check("table_consistent",
                  r.table.subgroup_order * r.table.index == K.order() - 1 &&
                      r.pair_covers.size() == r.table.representatives.size());
        return;
    }
    if (verb == "conic") {
        Field K = need_field(o);
        rep.field(K);
        if (o.a_s.empty() || o.b_s.empty()) throw usage_error("--a and --b are required");
        FieldElement a = parse_element(K, o.a_s), b = parse_element(K, o.b_s);
        rep.inputs()["a"] = element_to_json(a);
        rep.inputs()["b"] = element_to_json(b);
        auto [c, d] = conic_solve(K, a, b);
        rep.outputs()["c"] = element_to_json(c);
        rep.outputs()["d"] = element_to_json(d);
        rep.check("valid", a * c * c + b * d * d == K.one());
        return;
    }
    if (verb == "power-sum") {
        Field K = need_field(o);
        rep.field(K);
        if (o.a_s.empty() || o.b_s.empty()) throw usage_error("--a and --b are required");
        FieldElement a = parse_element(K, o.a_s), b = parse_element(K, o.b_s);
        rep.inputs()["m"] = o.m;
        rep.inputs()["a"] = element_to_json(a);
        rep.inputs()["b"] = element_to_json(b);
        rep.inputs()["nonzero_only"] = o.nonzero;
        auto r = power_sum_solve(K, o.m, a, b, o.nonzero);
        rep.check("found", r.has_value());
        if (r) {
            rep.outputs()["c"] = element_to_json(r->first);
            rep.outputs()["e"] = element_to_json(r->second);
            mpz_class e(o.m);
            rep.check("valid", pow(r->first, e) + a * pow(r->second, e) == b);
        }
        return;
    }
    if (verb == "four-squares") {
        if (o.x_s.empty()) throw usage_error("--x is required");
        mpq_class x = parse_mpq(o.x_s);
        rep.inputs()["x"] = x.get_str();
        auto w = four_squares(x);
        Json arr = Json::array();
        mpq_class sum = 0;
        for (const mpq_class& z : w) {
            arr.push_back(z.get_str());
            sum += z * z;
        }
        rep.outputs()["witness"] = std::move(arr);
        rep.check("resums", sum == x);
        return;
    }
    if (verb == "sopn") {
        if (o.chain_s.empty()) throw usage_error("--chain is required");
        Json cj = parse_json(o.chain_s, "--chain");
        if (!cj.is_array()) throw usage_error("--chain must be a JSON array of rationals");
        std::vector<mpq_class> chain;
        for (const Json& e : cj) {
            if (e.is_number_integer())
                chain.emplace_back(e.get<long>());
            else if (e.is_string())
                chain.push_back(parse_mpq(e.get<std::string>()));
            else
                throw usage_error("chain entries are integers or rational strings");
        }
        Json echo = Json::array();
        for (const mpq_class& q : chain) echo.push_back(q.get_str());
        rep.inputs()["chain"] = std::move(echo);
        rep.inputs()["cyclic"] = o.cyclic;
        SopnReport r = sopn_check(chain, o.cyclic);
        Json links = Json::array();
        bool witnesses_ok = true;
        for (const SopnLink& l : r.links) {
            Json jl;
            jl["from"] = l.from.get_str();
            jl["to"] = l.to.get_str();
            jl["phi_arg"] = l.phi_arg.get_str();
            jl["holds"] = l.holds;
            if (l.holds) {
                Json w = Json::array();
                mpq_class sum = 0;
                for (const mpq_class& z : l.witness) {
                    w.push_back(z.get_str());
                    sum += z * z;
                }
                jl["witness"] = std::move(w);
                witnesses_ok = witnesses_ok && sum == l.phi_arg;
            }
            links.push_back(std::move(jl));
        }
        rep.outputs()["links"] = std::move(links);
        rep.outputs()["all_hold"] = r.all_hold;
        rep.check("witnesses_valid", witnesses_ok);
        if (o.cyclic) {
            rep.outputs()["telescoped"] = r.telescoped.get_str();
            rep.check("cycle_refuted", r.cycle_refuted);
        } else {
            rep.check("all_hold", r.all_hold);
        }
        return;
    }
    if (verb == "krasner-vadic") {
        Field K = need_field(o);
        rep.field(K);
        MonicVector a = need_monic(o, K);
        rep.inputs()["poly"] = coeff_list(a);
        rep.inputs()["radius"] = o.radius;
        int samples = o.samples > 0 ? o.samples : 100;
        rep.inputs()["samples"] = samples;
        Rng rng(static_cast<unsigned long long>(o.seed));
        VadicReport r = krasner_vadic_check(a, o.radius, samples, rng);
        rep.outputs()["passed"] = r.passed;
        rep.outputs()["failed"] = r.failed;
        rep.outputs()["skipped"] = r.skipped;
        rep.outputs()["min_radius"] = r.min_radius;
        if (r.skipped > 0) rep.note("some perturbations were skipped near the precision horizon");
        rep.check("all_pass", r.all_pass);
        return;
    }
    throw usage_error("unknown arith verb " + verb);
}

void run_padic(const std::string& verb, const Opts& o, Report& rep) {
    Field K = need_field(o);
    rep.field(K);
    if (!K.is_padic()) throw usage_error("padic commands need a Qp field");
    if (verb == "val") {
        if (o.x_s.empty()) throw usage_error("--x is required");
        FieldElement x = parse_element(K, o.x_s);
        rep.inputs()["x"] = element_to_json(x);
        Valuation v = padic_val(x);
        rep.outputs()["finite"] = v.finite;
        if (v.finite) rep.outputs()["val"] = v.v;
        rep.outputs()["element"] = element_to_json(x);
        return;
    }
    if (verb == "square") {
        if (o.x_s.empty()) throw usage_error("--x is required");
        FieldElement x = parse_element(K, o.x_s);
        rep.inputs()["x"] = element_to_json(x);
        bool sq = is_square(x);
        rep.outputs()["is_square"] = sq;
        rep.check("is_square", sq);
        if (sq) {
            auto r = sqrt(x);
            if (r) {
                rep.outputs()["root"] = element_to_json(*r);
                rep.check("root_squares_back", *r * *r == x);
            }
        }
        return;
    }
    if (verb == "hensel") {
        if (o.poly_s.empty()) throw usage_error("--poly is required");
        if (o.x0_s.empty()) throw usage_error("--x0 is required");
        Poly f(K, point_from_json(K, parse_json(o.poly_s, "--poly")));
        FieldElement x0 = parse_element(K, o.x0_s);
        rep.inputs()["poly"] = point_to_json(f.coeffs());
        rep.inputs()["x0"] = element_to_json(x0);
        // The lift needs one digit of headroom, so cap the default below the
        // field precision.
        int target = o.target > 0 ? o.target : K.precision() - 1;
        rep.inputs()["target"] = target;
        HenselResult h = hensel_lift_root(f, x0, target);
        rep.outputs()["root"] = element_to_json(h.root);
        rep.outputs()["residual_valuations"] = h.residual_valuations;
        rep.outputs()["derivative_valuation"] = h.derivative_valuation;
        bool doubling = true;
        for (size_t i = 0; i + 1 < h.residual_valuations.size(); ++i) {
            long cur = h.residual_valuations[i], nxt = h.residual_valuations[i + 1];
            doubling = doubling && nxt > cur &&
                       nxt >= std::min(2 * cur - 2 * h.derivative_valuation,
                                       h.residual_valuations.back());
        }
        rep.check("residuals_double", doubling);
        rep.check("reached_target",
                  !h.residual_valuations.empty() && h.residual_valuations.back() >= target);
        return;
    }
    throw usage_error("unknown padic verb " + verb);
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& os) {
    Opts o;
    CLI::App app{"exact arithmetic for extension classes, etale images and p-adic checks",
                 "etale"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* s) {
        s->add_option("--seed", o.seed, "RNG seed (default 0)");
        s->add_option("--out", o.out_path, "output path, - for stdout");
        s->add_option("--budget", o.budget, "enumeration budget override");
        return s;
    };

    CLI::App* classify = add_common(app.add_subcommand("classify", "count extension classes"));
    classify->add_option("--field", o.field_s)->required();
    classify->add_option("--deg", o.deg)->required();
    classify->add_flag("--exhaustive", o.exhaustive);
    classify->add_option("--samples", o.samples);

    CLI::App* kr = app.add_subcommand("krasner", "coefficient map of an extension generator");
    kr->require_subcommand(1);
    for (const char* verb : {"build", "verify", "cover"}) {
        CLI::App* s = add_common(kr->add_subcommand(verb));
        s->add_option("--field", o.field_s)->required();
        s->add_option("--poly", o.poly_s)->required();
    }

    CLI::App* ee = app.add_subcommand("ee", "etale cover images and membership");
    ee->require_subcommand(1);
    {
        CLI::App* s = add_common(ee->add_subcommand("split", "cover of split polynomials"));
        s->add_option("--field", o.field_s)->required();
        s->add_option("--deg", o.deg)->required();
        s = add_common(ee->add_subcommand("image", "materialize the image"));
        s->add_option("--cover", o.cover_s)->required();
        s = add_common(ee->add_subcommand("member", "membership with witness"));
        s->add_option("--cover", o.cover_s)->required();
        s->add_option("--point", o.point_s)->required();
        s = add_common(ee->add_subcommand("intersect", "fiber-product constraint system"));
        s->add_option("--cover", o.cover_s)->required();
        s->add_option("--cover2", o.cover2_s)->required();
        s->add_option("--at", o.at_s);
        s->add_flag("--solve", o.solve_flag);
        s = add_common(ee->add_subcommand("transform", "affine change of the image"));
        s->add_option("--cover", o.cover_s)->required();
        s->add_option("--shift", o.shift_s)->required();
        s->add_option("--scale", o.scale_s)->required();
    }

    CLI::App* ar = app.add_subcommand("arith", "arithmetic consequences over small fields");
    ar->require_subcommand(1);
    {
        CLI::App* s = add_common(ar->add_subcommand("power-index", "index of the m-th powers"));
        s->add_option("--field", o.field_s)->required();
        s->add_option("--m", o.m)->required();
        s = add_common(ar->add_subcommand("as-index", "index of the Artin-Schreier image"));
        s->add_option("--field", o.field_s)->required();
        s = add_common(ar->add_subcommand("coset-sum", "pairwise coset sums vs the group"));
        s->add_option("--field", o.field_s)->required();
        s->add_option("--m", o.m)->required();
        s = add_common(ar->add_subcommand("conic", "point on a c^2 + b d^2 = 1"));
        s->add_option("--field", o.field_s)->required();
        s->add_option("--a", o.a_s)->required();
        s->add_option("--b", o.b_s)->required();
        s = add_common(ar->add_subcommand("power-sum", "solve c^m + a e^m = b"));
        s->add_option("--field", o.field_s)->required();
        s->add_option("--m", o.m)->required();
        s->add_option("--a", o.a_s)->required();
        s->add_option("--b", o.b_s)->required();
        s->add_flag("--nonzero", o.nonzero);
        s = add_common(ar->add_subcommand("four-squares", "sum of four rational squares"));
        s->add_option("--x", o.x_s)->required();
        s = add_common(ar->add_subcommand("sopn", "x - y - 1 square-sum order checks"));
        s->add_option("--chain", o.chain_s)->required();
        s->add_flag("--cyclic", o.cyclic);
        s = add_common(ar->add_subcommand("krasner-vadic", "perturbation neighborhood check"));
        s->add_option("--field", o.field_s)->required();
        s->add_option("--poly", o.poly_s)->required();
        s->add_option("--radius", o.radius)->required();
        s->add_option("--samples", o.samples);
    }

    CLI::App* pa = app.add_subcommand("padic", "valuations, squares, Hensel lifting");
    pa->require_subcommand(1);
    {
        CLI::App* s = add_common(pa->add_subcommand("val", "valuation and digits"));
        s->add_option("--field", o.field_s)->required();
        s->add_option("--x", o.x_s)->required();
        s = add_common(pa->add_subcommand("square", "square class and canonical root"));
        s->add_option("--field", o.field_s)->required();
        s->add_option("--x", o.x_s)->required();
        s = add_common(pa->add_subcommand("hensel", "Newton-lift a simple root"));
        s->add_option("--field", o.field_s)->required();
        s->add_option("--poly", o.poly_s)->required();
        s->add_option("--x0", o.x0_s)->required();
        s->add_option("--target", o.target);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, os, os);
        return code == 0 ? 0 : 2;
    }

    std::vector<std::string> path;
    const CLI::App* cur = &app;
    while (true) {
        auto subs = cur->get_subcommands();
        if (subs.empty()) break;
        cur = subs[0];
        path.push_back(cur->get_name());
    }

    Report rep(path, o.seed);
    auto emit = [&](const Json& doc) {
        if (o.out_path == "-") {
            os << doc.dump(2) << "\n";
        } else {
            std::ofstream f(o.out_path);
            if (!f) throw usage_error("cannot write " + o.out_path);
            f << doc.dump(2) << "\n";
        }
    };

    auto t0 = std::chrono::steady_clock::now();
    try {
        const std::string& head = path[0];
        if (head == "classify")
            run_classify(o, rep);
        else if (head == "krasner")
            run_krasner(path.at(1), o, rep);
        else if (head == "ee")
            run_ee(path.at(1), o, rep);
        else if (head == "arith")
            run_arith(path.at(1), o, rep);
        else
            run_padic(path.at(1), o, rep);
    } catch (const error& e) {
        Json err;
        err["command"] = path;
        err["error"] = e.what();
        emit(err);
        return 2;
    }
    auto t1 = std::chrono::steady_clock::now();
    rep.doc["wall_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    if (rep.doc["field"].is_null()) rep.doc.erase("field");
    emit(rep.doc);
    if (rep.exit_override >= 0) return rep.exit_override;
    return rep.pass ? 0 : 1;
}

}  // namespace etale
