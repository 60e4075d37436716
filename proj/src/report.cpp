#include <twinwidth/report.hpp>

#include <algorithm>

namespace twinwidth {

namespace {
    const char* verdict(bool ok) { return ok ? "pass" : "fail"; }

    std::string row_string(const TriMatrix& m, std::size_t i)
    {
        std::string s;
        for (std::size_t j = 0; j < m.cols(); ++j)
            s += entry_symbol(m.at(i, j));
        return s;
    }
}

Json to_json(const Permutation& pi) { return Json(pi.image()); }

Json to_json(const Graph& g)
{
    Json edges = Json::array();
    for (const auto& [u, v] : g.sorted_edges())
        edges.push_back({u, v});
    std::vector<std::string> ids = g.ids();
    std::sort(ids.begin(), ids.end());
    return {{"type", "graph"}, {"vertices", ids}, {"edges", edges}};
}

Json to_json(const TriMatrix& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        rows.push_back(row_string(m, i));
    return {{"type", "matrix"}, {"row_keys", m.row_keys()}, {"col_keys", m.col_keys()}, {"rows", rows}};
}

Json to_json(const IntervalModel& model)
{
    Json list = Json::array();
    for (const auto& iv : model.intervals)
        list.push_back({{"id", iv.id}, {"left", iv.left.to_string()}, {"right", iv.right.to_string()}});
    return {{"type", "intervals"}, {"intervals", list}};
}

Json to_json(const IntervalLikeRep& rep)
{
    Json pairs = Json::array();
    for (const auto& p : rep.pairs())
        pairs.push_back({{"label", p.label}, {"s1", rep.ends()[p.s1]}, {"s2", rep.ends()[p.s2]}});
    return {{"type", "representation"}, {"kind", to_string(rep.kind())}, {"ends", rep.ends()}, {"pairs", pairs}};
}

Json to_json(const ContractionSequence& seq)
{
    Json out = Json::array();
    for (const auto& step : seq)
        out.push_back({{"u", step.u}, {"v", step.v}, {"new", step.merged}});
    return out;
}

Json to_json(const SolveResult& result)
{
    return {{"type", "twin-width"},
            {"value", result.value},
            {"optimal", result.optimal},
            {"sequence", to_json(result.sequence)},
            {"nodes_explored", result.nodes_explored}};
}

Json to_json(const MatrixSolveResult& result)
{
    Json steps = Json::array();
    for (const auto& s : result.steps)
        steps.push_back({{"axis", s.axis == Axis::Row ? "row" : "col"}, {"keep", s.keep}, {"drop", s.drop}});
    return {{"type", "matrix-twin-width"},
            {"value", result.value},
            {"optimal", result.optimal},
            {"steps", steps},
            {"nodes_explored", result.nodes_explored}};
}

Json mixed_minor_json(const TriMatrix& m, std::size_t k, const std::optional<MixedMinorWitness>& w)
{
    Json out = {{"type", "mixed-minor"}, {"k", k}, {"found", w.has_value()}};
    if (w) {
        Json zones = Json::array();
        for (const auto& z : w->zones)
            zones.push_back({{"rows", {z.row_a, z.row_b}}, {"cols", {z.col_a, z.col_b}}});
        out["row_starts"] = w->division.row_starts;
        out["col_starts"] = w->division.col_starts;
        out["zones"] = zones;
        out["verification"] = verdict(verify_mixed_minor(m, *w));
    }
    return out;
}

Json witness_json(const IlMatrix& m, const PermSubmatrixWitness& w)
{
    return {{"type", "perm-submatrix"},
            {"permutation", to_json(w.pi)},
            {"rows", w.row_keys},
            {"cols", w.col_keys},
            {"row_starts", w.minor.division.row_starts},
            {"col_starts", w.minor.division.col_starts},
            {"verification", verdict(check_perm_submatrix(m, w))}};
}

Json witness_json(const Graph& g, const CircleWitness& w)
{
    // the submatrix was taken for the complement of the target
    const Permutation pi = w.submatrix.pi.complement();
    const Graph pg = permutation_graph(pi);
    bool ok = w.vertices.size() == pi.size();
    for (std::size_t a = 0; ok && a < w.vertices.size(); ++a)
        for (std::size_t b = a + 1; b < w.vertices.size(); ++b)
            if (g.adjacent(w.vertices[a], w.vertices[b]) != pg.adjacent(a, b))
                ok = false;
    return {{"type", "circle-witness"},
            {"permutation", to_json(pi)},
            {"vertices", w.vertices},
            {"rows", w.submatrix.row_keys},
            {"verification", verdict(ok)}};
}

Json witness_json(const ExposureWitness& w)
{
    return {{"type", "exposure"},
            {"permutation", to_json(w.pi)},
            {"vertices", w.w},
            {"mates", {{"w1", w.mates1}, {"w2", w.mates2}}},
            {"verification", verdict(check_exposes(w))}};
}

Json to_json(const OrderingResult& result)
{
    static constexpr const char* names[] = {"found", "none", "unknown"};
    Json out = {{"type", "ordering"},
                {"status", names[static_cast<int>(result.status)]},
                {"method", result.method},
                {"orderings_tried", result.orderings_tried}};
    if (result.status == OrderingStatus::Found) {
        out["row_order"] = result.row_order;
        out["col_order"] = result.col_order;
    }
    return out;
}

std::string to_string(RobustnessMode mode) { return mode == RobustnessMode::Exhaustive ? "exhaustive" : "sampled"; }

Json to_json(const RobustnessReport& report)
{
    Json failures = Json::array();
    for (const auto& f : report.failures)
        failures.push_back({{"script_number", f.script_number}, {"reason", f.reason}, {"sets", f.script.sets}});
    return {{"type", "robustness"},
            {"construction", report.construction},
            {"permutation", to_json(report.pi)},
            {"r", report.r},
            {"exponent", report.exponent},
            {"z_size", report.z_size},
            {"vertices", report.vertices},
            {"mode", to_string(report.mode)},
            {"seed", report.seed},
            {"scripts_tested", report.scripts_tested},
            {"failure_count", report.failure_count},
            {"failures", failures}};
}

Json to_json(const PipelineResult& result)
{
    return {{"type", "fo-pipeline"},
            {"value", result.value},
            {"ends_before", result.ends_before},
            {"ends_after", result.ends_after},
            {"domain_size", result.domain_size},
            {"rewritten", to_string(result.rewritten)}};
}

} // namespace twinwidth
