#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <string>

#include "tropvol/bounds.hpp"
#include "tropvol/geometry.hpp"
#include "tropvol/ineq.hpp"
#include "tropvol/io.hpp"
#include "tropvol/rank.hpp"

using nlohmann::ordered_json;
using namespace tropvol;

namespace {

struct Options {
    std::string input;
    std::string eps = "1";
    long long s = 1;
    long long l = 2;
    unsigned refine = 0;  // 0 = use m
    long long budget = 0;
    unsigned precision = 256;
    unsigned threads = 1;
    std::string format = "json";
    std::string mode = "volume";  // sat verb
    std::string alpha = "1";
    Rat delta = 1;
    unsigned dim = 3;
};

ScanConfig scan_config(const Options& opt) {
    ScanConfig cfg = default_scan_config();
    if (opt.budget > 0) cfg.budget = opt.budget;
    cfg.threads = opt.threads;
    return cfg;
}

void emit(const ordered_json& j, const Options& opt) {
    if (opt.format == "csv") {
        for (auto it = j.begin(); it != j.end(); ++it) {
            std::cout << it.key() << ',';
            if (it->is_string())
                std::cout << it->get<std::string>();
            else
                std::cout << it->dump();
            std::cout << '\n';
        }
    } else {
        std::cout << j.dump(2) << '\n';
    }
}

std::string verdict_str(Verdict v) {
    switch (v) {
        case Verdict::disjoint: return "disjoint";
        case Verdict::overlap: return "overlap";
        default: return "inconclusive";
    }
}

ordered_json table_json(const IntervalTable& table) {
    ordered_json rows = ordered_json::array();
    for (const IntervalRow& row : table.rows)
        rows.push_back(ordered_json{{"k", row.k},
                                    {"lower", {rat_str(row.lower.lo()), rat_str(row.lower.hi())}},
                                    {"upper", {rat_str(row.upper.lo()), rat_str(row.upper.hi())}}});
    return ordered_json{{"intervals", std::move(rows)},
                        {"verdict", verdict_str(table.verdict)},
                        {"precision", table.precision}};
}

int run(const std::string& verb, const Options& opt) {
    ScanConfig cfg = scan_config(opt);
    ordered_json out;

    if (verb == "volume") {
        VertexPolytope p = make_vertex_polytope(load_matrix(opt.input));
        VolumeResult r = volume(p, cfg);
        out["volume"] = rat_str(r.volume);
        out["alcoves_tested"] = r.alcoves_tested;
    } else if (verb == "count") {
        VertexPolytope p = make_vertex_polytope(load_matrix(opt.input));
        CountResult r = count_lattice_points(p, opt.s, cfg);
        out["count"] = r.count;
        out["points_tested"] = r.points_tested;
    } else if (verb == "rank") {
        out["rank"] = tropical_rank(load_matrix(opt.input));
    } else if (verb == "cells") {
        Matrix a = load_matrix(opt.input);
        VertexPolytope p = make_vertex_polytope(a);
        unsigned refine = opt.refine ? opt.refine : static_cast<unsigned>(a.rows());
        auto records = enumerate_cells(p, refine, cfg);
        ordered_json cells = ordered_json::array();
        Rat total = 0;
        for (const CellRecord& rec : records) {
            ordered_json c;
            ordered_json type = ordered_json::array();
            for (const auto& row : rec.type.rows) {
                ordered_json r = ordered_json::array();
                for (auto j : row) r.push_back(j + 1);
                type.push_back(std::move(r));
            }
            c["type"] = std::move(type);
            c["dimension"] = rec.dimension;
            if (rec.volume) {
                c["volume"] = rat_str(*rec.volume);
                total += *rec.volume;
            }
            if (rec.pseudovertex) {
                ordered_json v = ordered_json::array();
                for (const Rat& x : *rec.pseudovertex) v.push_back(rat_str(x));
                c["pseudovertex"] = std::move(v);
            }
            cells.push_back(std::move(c));
        }
        out["cells"] = std::move(cells);
        out["total_volume"] = rat_str(total);
    } else if (verb == "radius") {
        // input is a difference-constraint system B, not a generator matrix
        Matrix a = load_matrix(opt.input);
        if (a.rows() != a.cols()) throw input_error("radius: input must be a square system");
        InnerBall ball = inner_radius(CellSystem{a});
        out["radius"] = rat_str(ball.radius);
        ordered_json c = ordered_json::array();
        for (const Rat& x : ball.center) c.push_back(rat_str(x));
        out["center"] = std::move(c);
    } else if (verb == "ball") {
        Rat delta = opt.delta;
        out["count"] = hilbert_ball_count(opt.dim, delta).get_str();
        out["volume"] = rat_str(hilbert_ball_volume(opt.dim, delta));
        out["generators"] = matrix_to_json(hilbert_ball_generators(opt.dim, delta == 0 ? Rat(1) : delta));
    } else if (verb == "hopb") {
        VertexPolytope p = make_vertex_polytope(load_matrix(opt.input));
        VertexPolytope h = outer_parallel_body(p, parse_rat(opt.eps));
        out["generators"] = matrix_to_json(h.generators);
        out["scale_denominator"] = h.scale_denominator.get_str();
        VolumeResult r = volume(h, cfg);
        out["volume"] = rat_str(r.volume);
        out["alcoves_tested"] = r.alcoves_tested;
    } else if (verb == "bounds") {
        Matrix a = load_matrix(opt.input);
        unsigned m = static_cast<unsigned>(a.rows()), n = static_cast<unsigned>(a.cols());
        Rat r_big = bounding_box(a).outer_radius;
        if (r_big < 1) r_big = 1;
        unsigned k = static_cast<unsigned>(tropical_rank(a));
        BoundsReport rep = volume_bounds(m, n, k, r_big, Rat(1, static_cast<long>(k)),
                                         parse_rat(opt.eps), opt.precision);
        out["m"] = m;
        out["n"] = n;
        out["k"] = k;
        out["lower"] = {rat_str(rep.lower.lo()), rat_str(rep.lower.hi())};
        out["upper"] = {rat_str(rep.upper.lo()), rat_str(rep.upper.hi())};
    } else if (verb == "intervals") {
        Matrix a = load_matrix(opt.input);
        unsigned m = static_cast<unsigned>(a.rows()), n = static_cast<unsigned>(a.cols());
        Rat r_big = bounding_box(a).outer_radius;
        if (r_big < 1) r_big = 1;
        IntervalTable table = interval_table_volume(m, n, r_big, parse_rat(opt.eps),
                                                    parse_rat(opt.alpha), opt.precision);
        out = table_json(table);
    } else if (verb == "rank-demo") {
        Matrix a = load_matrix(opt.input);
        out["tropical_rank"] = tropical_rank(a);
        out["rank_from_volume"] = rank_from_volume(a, parse_rat(opt.eps), cfg, opt.precision);
        out["rank_from_counting"] = rank_from_counting(a, opt.s, cfg, opt.precision);
    } else if (verb == "sat") {
        SatFormula f = load_m2sat(opt.input);
        long long sc = sat_count_bruteforce(f);
        out["sat_count"] = sc;
        if (opt.mode == "volume") {
            InequalityPolytope g = sat_gadget(f, opt.l);
            IneqVolumeResult r = ineq_volume(g, cfg);
            out["volume"] = rat_str(r.volume);
            out["exact"] = r.exact;
            out["alcoves_tested"] = r.alcoves_tested;
        } else if (opt.mode == "count") {
            InequalityPolytope g = sat_gadget(f, 1);
            out["count"] = ineq_count(g, opt.s, cfg);
        } else {
            throw input_error("sat: mode must be volume or count");
        }
    } else if (verb == "zero-volume") {
        out["zero_volume"] = zero_volume_decision(load_matrix(opt.input));
    } else {
        throw input_error("unknown verb: " + verb);
    }

    emit(out, opt);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tropical polytope volumes, counts and rank bounds"};
    app.require_subcommand(1);

    Options opt;
    std::string delta_str = "1";
    std::vector<CLI::App*> subs;
    for (const char* verb : {"volume", "count", "rank", "cells", "radius", "ball",
                             "hopb", "bounds", "intervals", "rank-demo", "sat",
                             "zero-volume"}) {
        CLI::App* sub = app.add_subcommand(verb);
        if (std::string(verb) != "ball")
            sub->add_option("input", opt.input, "input file")->required();
        sub->add_option("--eps", opt.eps, "epsilon as p/q");
        sub->add_option("--s", opt.s, "dilation factor");
        sub->add_option("--L", opt.l, "gadget box size L");
        sub->add_option("--refine", opt.refine, "cell sampling grid refinement");
        sub->add_option("--budget", opt.budget, "max membership tests");
        sub->add_option("--precision", opt.precision, "enclosure precision in bits");
        sub->add_option("--threads", opt.threads, "worker threads");
        sub->add_option("--format", opt.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        if (std::string(verb) == "sat")
            sub->add_option("--mode", opt.mode, "volume or count")
                ->check(CLI::IsMember({"volume", "count"}));
        if (std::string(verb) == "intervals")
            sub->add_option("--alpha", opt.alpha, "approximation factor");
        if (std::string(verb) == "ball") {
            sub->add_option("--d", opt.dim, "dimension");
            sub->add_option("--delta", delta_str, "radius as p/q");
        }
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 1 : 0;
    }

    try {
        opt.delta = parse_rat(delta_str);
        return run(app.get_subcommands().front()->get_name(), opt);
    } catch (const budget_exceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
