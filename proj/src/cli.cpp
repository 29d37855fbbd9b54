#include "concord/cli.hpp"

#include <cctype>
#include <cstdint>
#include <sstream>

#include "concord/clover.hpp"
#include "concord/errors.hpp"
#include "concord/knots.hpp"

namespace concord::cli {

namespace {

using nlohmann::json;

long parse_long(const json& j, const std::string& field) {
    if (!j.contains(field) || !j.at(field).is_number_integer())
        throw invalid_input_error("payload: field '" + field + "' must be an integer");
    return j.at(field).get<long>();
}

int parse_sign(const json& j, const std::string& field) {
    if (!j.contains(field)) throw invalid_input_error("payload: missing field '" + field + "'");
    const json& v = j.at(field);
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s == "+" || s == "+1") return +1;
        if (s == "-" || s == "-1") return -1;
    } else if (v.is_number_integer()) {
        const long s = v.get<long>();
        if (s == 1 || s == -1) return static_cast<int>(s);
    }
    throw invalid_input_error("payload: field '" + field + "' must be +1 or -1");
}

LaurentPoly parse_delta(const json& j, const std::string& field) {
    if (!j.contains(field) || !j.at(field).is_string())
        throw invalid_input_error("payload: field '" + field + "' must be a polynomial string");
    return parse_poly(j.at(field).get<std::string>());
}

Defaults merge_options(const json& job, const Defaults& defaults) {
    Defaults d = defaults;
    if (!job.contains("options")) return d;
    const json& o = job.at("options");
    if (o.contains("degree_limit")) d.degree_limit = o.at("degree_limit").get<long>();
    if (o.contains("bounds")) {
        const json& b = o.at("bounds");
        if (b.contains("max_factors")) d.bounds.max_factors = b.at("max_factors").get<int>();
        if (b.contains("max_k")) d.bounds.max_k = b.at("max_k").get<long>();
        if (b.contains("max_n")) d.bounds.max_n = b.at("max_n").get<int>();
    }
    return d;
}

json cmd_alexander(const json& payload, const Defaults& opt) {
    const KnotDescriptor knot = KnotDescriptor::from_json(payload);
    const LaurentPoly delta = alexander(knot);
    json out;
    out["command"] = "alexander";
    out["knot"] = knot.to_json();
    out["knot_display"] = to_string(knot);
    out["delta"] = to_string(delta);
    out["symmetric"] = is_symmetric(delta);
    out["at_one"] = evaluate(delta, EvalPoint::one).get_si();
    out["fox_milnor"] = fox_milnor_test(delta, opt.degree_limit).to_json();
    out["double_slice"] = double_slice_test(delta, opt.degree_limit).to_json();
    out["c1_unknot"] = c1_unknot_obstruction(delta, opt.degree_limit).to_json();
    return out;
}

json cmd_obstruct(const json& payload, const Defaults& opt) {
    const LaurentPoly d1 = parse_delta(payload, "delta");
    json out;
    out["command"] = "obstruct";
    out["delta"] = to_string(d1);
    out["spectrum"] = spectrum_to_json(unit_circle_roots(d1, opt.degree_limit));
    if (!payload.contains("delta2")) {
        out["c1_unknot"] = c1_unknot_obstruction(d1, opt.degree_limit).to_json();
        out["fox_milnor"] = fox_milnor_test(d1, opt.degree_limit).to_json();
        out["double_slice"] = double_slice_test(d1, opt.degree_limit).to_json();
        return out;
    }
    const LaurentPoly d2 = parse_delta(payload, "delta2");
    out["delta2"] = to_string(d2);
    out["spectrum2"] = spectrum_to_json(unit_circle_roots(d2, opt.degree_limit));
    out["c1_pair"] = c1_pair_obstruction(d1, d2, opt.degree_limit).to_json();
    out["divisibility"] = divisibility_check(d1, d2).to_json();
    out["witness_search"] = family_witness_search(d1, d2, opt.bounds).to_json();
    return out;
}

json cmd_wheel(const json& payload, const Defaults&) {
    WheelSpec w;
    w.legs = static_cast<int>(parse_long(payload, "legs"));
    w.k = parse_long(payload, "k");
    w.sign = parse_sign(payload, "sign");
    validate(w);

    json out;
    out["command"] = "wheel";
    out["spec"] = {{"legs", w.legs}, {"k", w.k}, {"sign", w.sign}};
    const LaurentPoly closed = wheel_det_closed_form(w);
    const LaurentPoly ratio = wheel_delta_ratio(w);
    out["closed_form"] = to_string(closed);
    out["ratio"] = to_string(ratio);
    out["ratio_at_one"] = evaluate(ratio, EvalPoint::one).get_si();
    if (w.legs >= 2) {
        out["route"] = "matrix";
        const LaurentMatrix d = wheel_d_block(w);
        const LaurentMatrix b = build_wheel_matrix(w);
        json rows = json::array();
        for (std::size_t i = 0; i < b.rows(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < b.cols(); ++j) row.push_back(to_string(b.at(i, j)));
            rows.push_back(row);
        }
        out["matrix_b"] = rows;
        out["det_d"] = to_string(laurent_det(d));
        out["det_b"] = to_string(laurent_det(b));
        out["closed_form_check"] = "ok"; // wheel_delta_ratio cross-checks internally
    } else {
        out["route"] = "closed_form";
        out["note"] = "n = 1 wheels bypass the matrix; the displayed block shape needs n >= 2";
    }
    // ratio = F * conj(F) up to units for the family polynomial F below
    const int s = (w.legs % 2 == 1) ? w.sign : -w.sign;
    out["family_factor"] = {{"k", -w.k}, {"n", w.legs}, {"sign", s}};
    return out;
}

// orientation of every component, assembled on global edge indices
struct ComponentsOrientation {
    bool feasible = true;
    int failed_component = -1;
    EdgeOrientation orientation;
};

ComponentsOrientation orient_components(const CloverGraph& g) {
    ComponentsOrientation out;
    out.orientation.from_first.assign(g.num_edges(), true);
    const auto comp = g.component_of();
    const std::size_t nc = g.num_components();
    for (std::size_t c = 0; c < nc; ++c) {
        std::vector<std::size_t> vmap(g.num_vertices(), SIZE_MAX);
        std::vector<CloverGraph::Vertex> vs;
        for (std::size_t v = 0; v < g.num_vertices(); ++v) {
            if (static_cast<std::size_t>(comp[v]) != c) continue;
            vmap[v] = vs.size();
            vs.push_back(g.vertices()[v]);
        }
        std::vector<std::pair<std::size_t, std::size_t>> es;
        std::vector<std::size_t> emap;
        for (std::size_t e = 0; e < g.num_edges(); ++e) {
            const auto [a, b] = g.edges()[e];
            if (static_cast<std::size_t>(comp[a]) != c) continue;
            es.emplace_back(vmap[a], vmap[b]);
            emap.push_back(e);
        }
        const CloverGraph sub(std::move(vs), std::move(es));
        const auto o = orient_edges(sub);
        if (!o) {
            out.feasible = false;
            out.failed_component = static_cast<int>(c);
            return out;
        }
        for (std::size_t i = 0; i < emap.size(); ++i)
            out.orientation.from_first[emap[i]] = o->from_first[i];
    }
    return out;
}

json cmd_clover(const json& payload, const Defaults&) {
    const CloverGraph g = CloverGraph::from_json(payload);
    json out;
    out["command"] = "clover";
    out["graph"] = g.to_json();
    const CloverClass c = classify(g);
    out["classification"] = {{"components", g.num_components()},
                             {"beta1", c.beta1},
                             {"in_c1", c.in_c1},
                             {"in_c2", c.in_c2},
                             {"in_civ", c.in_civ},
                             {"in_c1nf", c.in_c1nf},
                             {"fork_count", c.fork_count},
                             {"fork_vertices", c.fork_vertices},
                             {"all_leaves_simple", c.all_leaves_simple}};

    const ComponentsOrientation o = orient_components(g);
    if (o.feasible) {
        out["orientation"] = {{"feasible", true}, {"edges", o.orientation.to_json(g)}};
        const LinkPartition part = split_link(g, o.orientation);
        auto labels = [](const std::vector<LinkPartition::Label>& v) {
            json a = json::array();
            for (const auto& l : v)
                a.push_back({{"edge", l.edge}, {"end", l.tail ? "tail" : "head"}});
            return a;
        };
        out["partition"] = {{"l_prime", labels(part.l_prime)},
                            {"l_double_prime", labels(part.l_double_prime)},
                            {"sizes", {part.l_prime.size(), part.l_double_prime.size()}}};
    } else {
        out["orientation"] = {
            {"feasible", false},
            {"reason", "component " + std::to_string(o.failed_component) +
                           " admits no orientation: a trivalent source or sink is forced"}};
    }

    if (c.in_c1nf) {
        const KirbyReduction kr = leaf_kirby_reduce(g);
        out["kirby"] = {{"components_before", kr.components_before},
                        {"components_after", kr.components_after}};
    } else {
        out["kirby"] = {{"skipped", c.fork_count > 0 ? "clover has forks" : "clover is not in c1"}};
    }
    return out;
}

json cmd_family(const json& payload, const Defaults& opt) {
    FamilyIndex idx;
    idx.k = parse_long(payload, "k");
    idx.n = static_cast<int>(parse_long(payload, "n"));
    idx.sign = parse_sign(payload, "sign");
    const LaurentPoly f = family_poly(idx);
    const UnitCircleSpectrum spec = unit_circle_roots(f, opt.degree_limit);
    json out;
    out["command"] = "family";
    out["index"] = {{"k", idx.k}, {"n", idx.n}, {"sign", idx.sign}};
    out["polynomial"] = to_string(f);
    out["at_one"] = evaluate(f, EvalPoint::one).get_si();
    out["spectrum"] = spectrum_to_json(spec);
    out["only_sixth_roots"] = spec.only_sixth_roots();
    return out;
}

std::string render_report_line(const std::string& name, const json& r) {
    std::ostringstream s;
    std::string verdict = r.at("verdict").get<std::string>();
    for (auto& ch : verdict) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    s << name << ": " << verdict << " [" << r.value("reason", "") << "]";
    if (r.contains("witness")) s << "  witness: " << r.at("witness").get<std::string>();
    if (r.contains("theta")) {
        auto fmt = [](const json& a) {
            std::string t = "[";
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (i) t += ", ";
                t += "(k=" + std::to_string(a[i].at("k").get<long>()) +
                     ",n=" + std::to_string(a[i].at("n").get<int>()) +
                     (a[i].at("sign").get<int>() > 0 ? ",+" : ",-") + ")";
            }
            return t + "]";
        };
        s << "  theta: " << fmt(r.at("theta")) << "  theta': " << fmt(r.at("theta_prime"));
    }
    return s.str();
}

std::string render_spectrum(const json& spec) {
    if (spec.empty()) return "(empty)";
    std::ostringstream s;
    for (std::size_t i = 0; i < spec.size(); ++i) {
        if (i) s << "; ";
        s << spec[i].at("min_poly").get<std::string>() << " (mult "
          << spec[i].at("multiplicity").get<int>() << ", x ~ "
          << spec[i].at("x_approx").get<double>() << ")";
    }
    return s.str();
}

} // namespace

json spectrum_to_json(const UnitCircleSpectrum& spec) {
    json a = json::array();
    for (const auto& e : spec.entries) {
        a.push_back({{"min_poly", to_string(e.min_poly, 'x')},
                     {"multiplicity", e.multiplicity},
                     {"x_approx", e.approx},
                     {"sixth_root_class", e.is_sixth_root_class()}});
    }
    return a;
}

json run_job(const json& job, const Defaults& defaults) {
    if (!job.is_object() || !job.contains("command"))
        throw invalid_input_error("job: expected an object with field 'command'");
    const std::string command = job.at("command").get<std::string>();
    if (!job.contains("payload")) throw invalid_input_error("job: missing field 'payload'");
    const json& payload = job.at("payload");
    const Defaults opt = merge_options(job, defaults);
    if (command == "alexander") return cmd_alexander(payload, opt);
    if (command == "obstruct") return cmd_obstruct(payload, opt);
    if (command == "wheel") return cmd_wheel(payload, opt);
    if (command == "clover") return cmd_clover(payload, opt);
    if (command == "family") return cmd_family(payload, opt);
    throw invalid_input_error("job: unknown command '" + command + "'");
}

json run_batch(const json& jobs, const Defaults& defaults) {
    if (!jobs.is_array()) throw invalid_input_error("batch: expected an array of jobs");
    json out = json::array();
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        try {
            out.push_back(run_job(jobs[i], defaults));
        } catch (const invalid_input_error& e) {
            throw invalid_input_error("jobs[" + std::to_string(i) + "]: " + e.what());
        }
    }
    return out;
}

std::string render_text(const json& r) {
    std::ostringstream s;
    const std::string command = r.at("command").get<std::string>();
    s << "command: " << command << "\n";
    if (command == "alexander") {
        s << "knot: " << r.at("knot_display").get<std::string>() << "\n";
        s << "delta: " << r.at("delta").get<std::string>() << "\n";
        s << "symmetric: " << (r.at("symmetric").get<bool>() ? "yes" : "no")
          << "   delta(1) = " << r.at("at_one").get<long>() << "\n";
        s << render_report_line("fox_milnor", r.at("fox_milnor")) << "\n";
        s << render_report_line("double_slice", r.at("double_slice")) << "\n";
        s << render_report_line("c1_unknot", r.at("c1_unknot")) << "\n";
    } else if (command == "obstruct") {
        s << "delta: " << r.at("delta").get<std::string>() << "\n";
        s << "spectrum: " << render_spectrum(r.at("spectrum")) << "\n";
        if (r.contains("delta2")) {
            s << "delta2: " << r.at("delta2").get<std::string>() << "\n";
            s << "spectrum2: " << render_spectrum(r.at("spectrum2")) << "\n";
            s << render_report_line("c1_pair", r.at("c1_pair")) << "\n";
            s << render_report_line("divisibility", r.at("divisibility")) << "\n";
            s << render_report_line("witness_search", r.at("witness_search")) << "\n";
        } else {
            s << render_report_line("c1_unknot", r.at("c1_unknot")) << "\n";
            s << render_report_line("fox_milnor", r.at("fox_milnor")) << "\n";
            s << render_report_line("double_slice", r.at("double_slice")) << "\n";
        }
    } else if (command == "wheel") {
        const auto& spec = r.at("spec");
        s << "wheel: legs = " << spec.at("legs").get<int>() << ", k = " << spec.at("k").get<long>()
          << ", sign = " << (spec.at("sign").get<int>() > 0 ? "+" : "-") << "\n";
        s << "route: " << r.at("route").get<std::string>() << "\n";
        if (r.contains("note")) s << "note: " << r.at("note").get<std::string>() << "\n";
        if (r.contains("matrix_b")) {
            s << "B =\n";
            for (const auto& row : r.at("matrix_b")) {
                s << "  [";
                for (std::size_t j = 0; j < row.size(); ++j)
                    s << (j ? " | " : " ") << row[j].get<std::string>();
                s << " ]\n";
            }
            s << "det(D) = " << r.at("det_d").get<std::string>() << "\n";
            s << "det(B) = " << r.at("det_b").get<std::string>() << "\n";
            s << "closed-form check: " << r.at("closed_form_check").get<std::string>() << "\n";
        }
        s << "closed form det(D) = " << r.at("closed_form").get<std::string>() << "\n";
        s << "ratio = " << r.at("ratio").get<std::string>()
          << "   (value at t=1: " << r.at("ratio_at_one").get<long>() << ")\n";
        const auto& ff = r.at("family_factor");
        s << "ratio = F(t) F(1/t) up to units, F = 1 " << (ff.at("sign").get<int>() > 0 ? "+" : "-")
          << " t^" << ff.at("k").get<long>() << " (t-1)^" << ff.at("n").get<int>() << "\n";
    } else if (command == "clover") {
        const auto& c = r.at("classification");
        s << "components: " << c.at("components").get<int>() << "   beta1: " << c.at("beta1").dump()
          << "\n";
        s << "classes: c1=" << (c.at("in_c1").get<bool>() ? "yes" : "no")
          << " c2=" << (c.at("in_c2").get<bool>() ? "yes" : "no")
          << " civ=" << (c.at("in_civ").get<bool>() ? "yes" : "no")
          << " c1nf=" << (c.at("in_c1nf").get<bool>() ? "yes" : "no")
          << "   forks: " << c.at("fork_count").get<long>() << "\n";
        const auto& o = r.at("orientation");
        if (o.at("feasible").get<bool>()) {
            s << "orientation: feasible; edges:";
            for (const auto& e : o.at("edges"))
                s << " " << e[0].get<std::size_t>() << "->" << e[1].get<std::size_t>();
            s << "\n";
            const auto& part = r.at("partition");
            s << "partition sizes: |L'| = " << part.at("sizes")[0].get<std::size_t>()
              << ", |L''| = " << part.at("sizes")[1].get<std::size_t>() << "\n";
        } else {
            s << "orientation: infeasible (" << o.at("reason").get<std::string>() << ")\n";
        }
        const auto& k = r.at("kirby");
        if (k.contains("skipped"))
            s << "kirby: skipped (" << k.at("skipped").get<std::string>() << ")\n";
        else
            s << "kirby: " << k.at("components_before").get<long>() << " -> "
              << k.at("components_after").get<long>() << " components\n";
    } else if (command == "family") {
        const auto& idx = r.at("index");
        s << "index: k = " << idx.at("k").get<long>() << ", n = " << idx.at("n").get<int>()
          << ", sign = " << (idx.at("sign").get<int>() > 0 ? "+" : "-") << "\n";
        s << "polynomial: " << r.at("polynomial").get<std::string>() << "\n";
        s << "value at t=1: " << r.at("at_one").get<long>() << "\n";
        s << "spectrum: " << render_spectrum(r.at("spectrum")) << "\n";
        s << "only sixth roots: " << (r.at("only_sixth_roots").get<bool>() ? "yes" : "no") << "\n";
    }
    return s.str();
}

std::string render_batch_text(const json& results) {
    std::ostringstream s;
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (i) s << "----------------------------------------\n";
        s << render_text(results[i]);
    }
    return s.str();
}

} // namespace concord::cli
