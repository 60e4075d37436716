#pragma once

#include <twinwidth/fologic.hpp>
#include <twinwidth/graph.hpp>
#include <twinwidth/ilrep.hpp>
#include <twinwidth/obstruction.hpp>
#include <twinwidth/perturb.hpp>
#include <twinwidth/solver.hpp>
#include <twinwidth/trimatrix.hpp>

#include <json.hpp>

namespace twinwidth {

using Json = nlohmann::json;

Json to_json(const Permutation& pi);
/// {type: "graph", vertices, edges}, edges as sorted id pairs.
Json to_json(const Graph& g);
/// {type: "matrix", row_keys, col_keys, rows: one string of symbols per row}.
Json to_json(const TriMatrix& m);
Json to_json(const IntervalModel& model);
Json to_json(const IntervalLikeRep& rep);
Json to_json(const ContractionSequence& seq);
Json to_json(const SolveResult& result);
Json to_json(const MatrixSolveResult& result);
/// {type: "mixed-minor", k, found, row_starts, col_starts, zones, verification}.
Json mixed_minor_json(const TriMatrix& m, std::size_t k, const std::optional<MixedMinorWitness>& w);

/// Witness certificates: {type, permutation, rows|vertices, mates,
/// verification: "pass"|"fail"}, the verdict recomputed here.
Json witness_json(const IlMatrix& m, const PermSubmatrixWitness& w);
Json witness_json(const Graph& g, const CircleWitness& w);
Json witness_json(const ExposureWitness& w);

Json to_json(const OrderingResult& result);
Json to_json(const RobustnessReport& report);
Json to_json(const PipelineResult& result);

std::string to_string(RobustnessMode mode);

} // namespace twinwidth
