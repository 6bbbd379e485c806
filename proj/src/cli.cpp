#include "a1deg/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "a1deg/degree.hpp"
#include "a1deg/gw_json.hpp"

namespace a1deg {

namespace {

using nlohmann::json;

struct Job {
    json spec;
    FieldContext field;
    bool pretty = false;
};

FieldContext job_field(const json& spec, const std::string& field_flag) {
    if (!field_flag.empty()) return FieldContext::parse(field_flag);
    if (spec.contains("field")) return FieldContext::parse(spec["field"].get<std::string>());
    raise(ErrorCode::ParseError, "no field given (job \"field\" or --field)");
}

RingPtr job_ring(const Job& job) {
    if (!job.spec.contains("vars")) raise(ErrorCode::ParseError, "job needs \"vars\"");
    std::vector<std::string> vars;
    for (const auto& v : job.spec["vars"]) vars.push_back(v.get<std::string>());
    return make_ring(job.field, std::move(vars));
}

std::vector<Polynomial> job_polys(const Job& job, const RingPtr& ring) {
    if (!job.spec.contains("polys")) raise(ErrorCode::ParseError, "job needs \"polys\"");
    std::vector<Polynomial> out;
    for (const auto& s : job.spec["polys"]) out.push_back(parse_polynomial(ring, s.get<std::string>()));
    return out;
}

Polynomial job_poly(const Job& job, const RingPtr& ring) {
    if (!job.spec.contains("poly")) raise(ErrorCode::ParseError, "job needs \"poly\"");
    return parse_polynomial(ring, job.spec["poly"].get<std::string>());
}

std::vector<FieldElement> parse_rational_point(const FieldContext& ctx, const json& coords) {
    std::vector<FieldElement> out;
    for (const auto& c : coords) out.push_back(parse_field_element(ctx, c.get<std::string>()));
    return out;
}

// point coordinates; with a modulus present they may involve the extension
// generator and the point becomes an extension point
ClosedPoint job_point(const Job& job, const RingPtr& ring) {
    if (!job.spec.contains("point")) raise(ErrorCode::ParseError, "job needs \"point\"");
    const json& coords = job.spec["point"];
    if (coords.size() != ring->nvars())
        raise(ErrorCode::ParseError, "point arity does not match vars");
    if (!job.spec.contains("modulus")) {
        return ClosedPoint::rational(parse_rational_point(job.field, coords));
    }
    std::string var = job.spec.value("ext_var", std::string("t"));
    UniPoly modulus = parse_unipoly(job.field, var, job.spec["modulus"].get<std::string>());
    if (modulus.degree() >= 1 && !modulus.lead().is_one()) modulus = modulus.monic();
    bool promise = job.spec.value("promise_irreducible", false);
    ExtPtr L = make_extension(job.field, var, std::move(modulus), promise);
    std::vector<ExtElem> pts;
    for (const auto& c : coords)
        pts.push_back(ExtElem::from_unipoly(L, parse_unipoly(job.field, var, c.get<std::string>())));
    return ClosedPoint::extension(L, std::move(pts));
}

json point_json(const ClosedPoint& p) {
    json j;
    j["coords"] = p.coord_strings();
    j["residue_degree"] = p.residue_degree();
    if (!p.is_rational()) j["modulus"] = (*p.ext)->modulus.str((*p.ext)->var);
    return j;
}

json fiber_json(const FiberReport& rep) {
    json j;
    std::vector<std::string> y;
    for (const auto& c : rep.base_point) y.push_back(c.str());
    j["y"] = y;
    json pts = json::array();
    for (const auto& p : rep.points) {
        json pj = point_json(p.point);
        pj["multiplicity"] = p.multiplicity;
        pj["gw_class"] = gw_class_json(p.form);
        pts.push_back(pj);
    }
    j["points"] = pts;
    j["total"] = gw_class_json(rep.total);
    return j;
}

void emit(const Job& job, const json& result, const std::string& pretty_text, std::ostream& out) {
    if (job.pretty)
        out << pretty_text << "\n";
    else
        out << result.dump(2) << "\n";
}

std::string pretty_form(const SymmetricForm& q) {
    std::ostringstream os;
    os << "gram:\n";
    for (size_t i = 0; i < q.rank(); ++i) {
        os << "  [";
        for (size_t j = 0; j < q.rank(); ++j) os << (j ? ", " : "") << q.entry(i, j).str();
        os << "]\n";
    }
    os << gw_class_pretty(q);
    return os.str();
}

int cmd_ekl(const Job& job, std::ostream& out) {
    RingPtr ring = job_ring(job);
    std::vector<Polynomial> polys = job_polys(job, ring);
    if (job.spec.contains("modulus"))
        raise(ErrorCode::NonRationalPoint,
              "ekl computes at rational points; use degree-etale for extension points");
    std::vector<FieldElement> x(ring->nvars(), FieldElement::zero(job.field));
    if (job.spec.contains("point")) x = parse_rational_point(job.field, job.spec["point"]);
    std::optional<std::vector<FieldElement>> shift;
    if (job.spec.contains("y_shift"))
        shift = parse_rational_point(job.field, job.spec["y_shift"]);
    std::optional<std::span<const FieldElement>> shift_span;
    if (shift) shift_span = std::span<const FieldElement>(*shift);
    SymmetricForm q = ekl_class(polys, x, shift_span);
    json j;
    j["gram"] = gram_json(q);
    j["gw_class"] = gw_class_json(q);
    emit(job, j, pretty_form(q), out);
    return 0;
}

int cmd_milnor(const Job& job, std::ostream& out) {
    RingPtr ring = job_ring(job);
    Polynomial g = job_poly(job, ring);
    SymmetricForm q = job.spec.contains("point")
                          ? milnor_number_at(g, parse_rational_point(job.field, job.spec["point"]))
                          : milnor_number(g);
    json j;
    j["gram"] = gram_json(q);
    j["gw_class"] = gw_class_json(q);
    emit(job, j, pretty_form(q), out);
    return 0;
}

int cmd_node_type(const Job& job, std::ostream& out) {
    RingPtr ring = job_ring(job);
    Polynomial g = job_poly(job, ring);
    SymmetricForm q = node_arithmetic_type(g, job_point(job, ring));
    json j;
    j["gram"] = gram_json(q);
    j["gw_class"] = gw_class_json(q);
    emit(job, j, pretty_form(q), out);
    return 0;
}

int cmd_degree_etale(const Job& job, std::ostream& out) {
    RingPtr ring = job_ring(job);
    std::vector<Polynomial> polys = job_polys(job, ring);
    SymmetricForm q = local_degree_etale(polys, job_point(job, ring));
    json j;
    j["gram"] = gram_json(q);
    j["gw_class"] = gw_class_json(q);
    emit(job, j, pretty_form(q), out);
    return 0;
}

int cmd_fiber_sum(const Job& job, std::ostream& out) {
    RingPtr ring = job_ring(job);
    std::vector<Polynomial> polys = job_polys(job, ring);
    auto parse_y = [&](const json& y) { return parse_rational_point(job.field, y); };
    if (job.spec.contains("ys")) {
        std::vector<std::vector<FieldElement>> ys;
        for (const auto& y : job.spec["ys"]) ys.push_back(parse_y(y));
        ConservationReport rep = conservation_check(polys, ys);
        json j;
        json fibers = json::array();
        for (const auto& f : rep.fibers) fibers.push_back(fiber_json(f));
        j["fibers"] = fibers;
        j["conservation"] = rep.pass ? "PASS" : "FAIL";
        j["witness"] = rep.witness;
        std::ostringstream pretty;
        for (const auto& f : rep.fibers) {
            pretty << "fiber over (";
            for (size_t i = 0; i < f.base_point.size(); ++i)
                pretty << (i ? "," : "") << f.base_point[i].str();
            pretty << "): " << f.points.size() << " point(s), total "
                   << presentation_string(present(f.total)) << "\n";
        }
        pretty << "conservation: " << (rep.pass ? "PASS" : "FAIL");
        if (!rep.witness.empty()) pretty << "\n" << rep.witness;
        emit(job, j, pretty.str(), out);
        return 0;
    }
    if (!job.spec.contains("y")) raise(ErrorCode::ParseError, "fiber-sum needs \"y\" or \"ys\"");
    FiberReport rep = fiber_sum(polys, parse_y(job.spec["y"]));
    std::ostringstream pretty;
    pretty << rep.points.size() << " point(s) in the fiber\n";
    for (const auto& p : rep.points) {
        pretty << "  (";
        auto cs = p.point.coord_strings();
        for (size_t i = 0; i < cs.size(); ++i) pretty << (i ? ", " : "") << cs[i];
        pretty << ")  deg " << p.point.residue_degree() << "  mult " << p.multiplicity << "  "
               << presentation_string(present(p.form)) << "\n";
    }
    pretty << "total: " << gw_class_pretty(rep.total);
    emit(job, fiber_json(rep), pretty.str(), out);
    return 0;
}

int cmd_classify(const Job& job, std::ostream& out) {
    if (!job.spec.contains("gram")) raise(ErrorCode::ParseError, "classify needs \"gram\"");
    std::vector<std::vector<FieldElement>> gram;
    for (const auto& row : job.spec["gram"]) {
        std::vector<FieldElement> r;
        for (const auto& e : row) r.push_back(parse_field_element(job.field, e.get<std::string>()));
        gram.push_back(std::move(r));
    }
    SymmetricForm q = SymmetricForm::from_gram(job.field, std::move(gram));
    json j;
    j["gw_class"] = gw_class_json(q);
    emit(job, j, gw_class_pretty(q), out);
    return 0;
}

struct AdeRow {
    std::string name;
    std::string equation;
    size_t h_mult;
    std::vector<long> residual;
};

std::vector<AdeRow> ade_rows() {
    std::vector<AdeRow> rows;
    for (int n = 1; n <= 6; ++n) {
        AdeRow r;
        r.name = "A" + std::to_string(n);
        r.equation = "x1^2+x2^" + std::to_string(n + 1);
        if (n % 2 == 1) {
            r.h_mult = static_cast<size_t>((n - 1) / 2);
            r.residual = {2L * (n + 1)};
        } else {
            r.h_mult = static_cast<size_t>(n / 2);
        }
        rows.push_back(r);
    }
    for (int n = 4; n <= 6; ++n) {
        AdeRow r;
        r.name = "D" + std::to_string(n);
        r.equation = "x2*(x1^2+x2^" + std::to_string(n - 2) + ")";
        if (n % 2 == 0) {
            r.h_mult = static_cast<size_t>((n - 2) / 2);
            r.residual = {-2L, 2L * (n - 1)};
        } else {
            r.h_mult = static_cast<size_t>((n - 1) / 2);
            r.residual = {-2L};
        }
        rows.push_back(r);
    }
    rows.push_back({"E6", "x1^3+x2^4", 3, {}});
    rows.push_back({"E7", "x1*(x1^2+x2^3)", 3, {-3L}});
    rows.push_back({"E8", "x1^3+x2^5", 4, {}});
    return rows;
}

int cmd_ade_table(const Job& job, std::ostream& out) {
    const FieldContext qq = FieldContext::rationals();
    RingPtr ring = make_ring(qq, {"x1", "x2"});
    json rows = json::array();
    std::ostringstream pretty;
    pretty << std::left << std::setw(4) << "row" << std::setw(20) << "equation" << std::setw(18)
           << "computed" << std::setw(18) << "table" << "result\n";
    bool all_pass = true;
    for (const AdeRow& row : ade_rows()) {
        Polynomial g = parse_polynomial(ring, row.equation);
        SymmetricForm mu = milnor_number(g);
        SymmetricForm expected =
            SymmetricForm::hyperbolic(qq, row.h_mult)
                .direct_sum(SymmetricForm::diagonal_ints(qq, row.residual));
        bool pass = gw_equals(mu, expected);
        all_pass = all_pass && pass;
        std::string computed = presentation_string(present(mu));
        std::ostringstream formula;
        if (row.h_mult) formula << row.h_mult << "*H";
        if (!row.residual.empty()) {
            if (row.h_mult) formula << " + ";
            formula << "<";
            for (size_t i = 0; i < row.residual.size(); ++i)
                formula << (i ? "," : "") << row.residual[i];
            formula << ">";
        }
        json r;
        r["name"] = row.name;
        r["equation"] = row.equation;
        r["computed"] = computed;
        r["formula"] = formula.str();
        r["pass"] = pass;
        rows.push_back(r);
        pretty << std::left << std::setw(4) << row.name << std::setw(20) << row.equation
               << std::setw(18) << computed << std::setw(18) << formula.str()
               << (pass ? "PASS" : "FAIL") << "\n";
    }
    json j;
    j["rows"] = rows;
    j["all_pass"] = all_pass;
    std::string ptext = pretty.str();
    if (!ptext.empty() && ptext.back() == '\n') ptext.pop_back();
    emit(job, j, ptext, out);
    return all_pass ? 0 : 3;
}

json load_spec(const std::string& path) {
    if (path.empty()) return json::object();
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) raise(ErrorCode::ParseError, "cannot open input file '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        raise(ErrorCode::ParseError, std::string("bad job JSON: ") + e.what());
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact local A1-Brouwer degrees and Grothendieck-Witt classification"};
    app.require_subcommand(1);
    std::string input, field_flag;
    bool pretty = false, force_json = false;
    app.add_option("--input", input, "job JSON file ('-' for stdin)");
    app.add_option("--field", field_flag, "field spec: QQ, RR, Fp:<p>, Qp:<p>");
    app.add_flag("--pretty", pretty, "human-readable output instead of JSON");
    app.add_flag("--json", force_json, "JSON output (the default)");

    struct Cmd {
        const char* name;
        const char* help;
        int (*fn)(const Job&, std::ostream&);
        bool needs_input;
    };
    const Cmd cmds[] = {
        {"ekl", "EKL form of a polynomial system at a rational point", cmd_ekl, true},
        {"milnor", "arithmetic Milnor number of a hypersurface equation", cmd_milnor, true},
        {"node-type", "arithmetic type of a nodal critical point", cmd_node_type, true},
        {"degree-etale", "local degree at an etale closed point", cmd_degree_etale, true},
        {"fiber-sum", "sum of local forms over a fiber; conservation with \"ys\"", cmd_fiber_sum, true},
        {"classify", "Grothendieck-Witt invariants of an explicit Gram matrix", cmd_classify, true},
        {"ade-table", "recompute the ADE singularity classes over QQ", cmd_ade_table, false},
    };
    for (const Cmd& c : cmds) {
        auto* sub = app.add_subcommand(c.name, c.help);
        sub->fallthrough();
    }

    std::vector<const char*> argv;
    argv.push_back("a1deg");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        json j;
        j["error"] = {{"code", "ParseError"}, {"message", e.what()}};
        err << j.dump(2) << "\n";
        return 1;
    }

    try {
        const Cmd* chosen = nullptr;
        for (const Cmd& c : cmds)
            if (app.get_subcommand(c.name)->parsed()) chosen = &c;
        if (!chosen) raise(ErrorCode::ParseError, "no command given");
        if (chosen->needs_input && input.empty())
            raise(ErrorCode::ParseError, std::string(chosen->name) + " needs --input <job.json>");
        Job job;
        job.spec = load_spec(input);
        job.pretty = pretty && !force_json;
        if (chosen->needs_input) job.field = job_field(job.spec, field_flag);
        return chosen->fn(job, out);
    } catch (const Error& e) {
        json j;
        j["error"] = {{"code", error_code_name(e.code())}, {"message", e.detail()}};
        err << j.dump(2) << "\n";
        switch (error_class(e.code())) {
            case ErrorClass::Parse: return 1;
            case ErrorClass::Math: return 2;
            case ErrorClass::Internal: return 3;
        }
        return 3;
    } catch (const json::exception& e) {
        json j;
        j["error"] = {{"code", "ParseError"}, {"message", e.what()}};
        err << j.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        json j;
        j["error"] = {{"code", "InternalError"}, {"message", e.what()}};
        err << j.dump(2) << "\n";
        return 3;
    }
}

}  // namespace a1deg
